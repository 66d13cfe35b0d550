#include "qtg/analysis.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>
#include <utility>
#include <vector>

namespace qtg {
namespace {

Triad major(int root) { return Triad(PitchClass(root), Quality::Major); }
Triad minor(int root) { return Triad(PitchClass(root), Quality::Minor); }
Triad neutral(int root) { return Triad(PitchClass(root), Quality::Neutral); }

// The 24-triad RL walk from C major: C, a, F, d, Bb, g, Eb, c, Ab, f,
// Db, bb, Gb, eb, B, g#, E, c#, A, f#, D, b, G, e.
const std::array<std::pair<int, Quality>, 24> kRlChainFromC = {{
    {0, Quality::Major},  {18, Quality::Minor}, {10, Quality::Major}, {4, Quality::Minor},
    {20, Quality::Major}, {14, Quality::Minor}, {6, Quality::Major},  {0, Quality::Minor},
    {16, Quality::Major}, {10, Quality::Minor}, {2, Quality::Major},  {20, Quality::Minor},
    {12, Quality::Major}, {6, Quality::Minor},  {22, Quality::Major}, {16, Quality::Minor},
    {8, Quality::Major},  {2, Quality::Minor},  {18, Quality::Major}, {12, Quality::Minor},
    {4, Quality::Major},  {22, Quality::Minor}, {14, Quality::Major}, {8, Quality::Minor},
}};

TEST(RlChain, GoldenSequenceFromCMajor) {
  const ChainReport report = rl_chain(major(0));
  EXPECT_EQ(report.period, 24);
  EXPECT_EQ(report.steps, 24);
  ASSERT_EQ(report.sequence.size(), 24u);
  for (size_t i = 0; i < report.sequence.size(); ++i) {
    EXPECT_EQ(report.sequence[i].root().value(), kRlChainFromC[i].first) << "entry " << i;
    EXPECT_EQ(report.sequence[i].quality(), kRlChainFromC[i].second) << "entry " << i;
  }
}

TEST(RlChain, OddChainIsTheEvenChainShiftedAQuarterStep) {
  const ChainReport odd = rl_chain(major(1));
  ASSERT_EQ(odd.sequence.size(), 24u);
  for (size_t i = 0; i < odd.sequence.size(); ++i) {
    EXPECT_EQ(odd.sequence[i].root().value(), reduce_pc(kRlChainFromC[i].first + 1));
    EXPECT_EQ(odd.sequence[i].quality(), kRlChainFromC[i].second);
  }
}

TEST(RlChain, PeriodDividesTwentyFourFromEveryConsonantStart) {
  for (const Triad& start : all_consonant_triads()) {
    const ChainReport report = rl_chain(start);
    EXPECT_EQ(24 % report.period, 0) << format_chord(start);
    // A full cycle visits each of the 24 same-parity consonant triads exactly
    // once, alternating major and minor.
    std::set<Triad> visited;
    for (size_t i = 0; i < report.sequence.size(); ++i) {
      visited.insert(report.sequence[i]);
      EXPECT_EQ(report.sequence[i].root().is_original_tone(),
                start.root().is_original_tone());
      if (i > 0) {
        EXPECT_NE(report.sequence[i].quality(), report.sequence[i - 1].quality());
      }
    }
    if (report.period == 24) EXPECT_EQ(visited.size(), 24u);
  }
}

TEST(RlChain, RejectsNeutralStarts) {
  EXPECT_THROW(rl_chain(neutral(0)), NotConsonant);
}

TEST(LChainNeutral, RootsAscendBySevens) {
  const ChainReport report = l_chain_neutral(neutral(0));
  EXPECT_EQ(report.period, 24);
  const std::vector<int> expected = {0,  7,  14, 21, 4,  11, 18, 1,  8,  15, 22, 5,
                                     12, 19, 2,  9,  16, 23, 6,  13, 20, 3,  10, 17};
  EXPECT_EQ(report.roots(), expected);
  for (const Triad& t : report.sequence) EXPECT_EQ(t.quality(), Quality::Neutral);
}

TEST(LChainNeutral, RotatedStart) {
  const ChainReport from7 = l_chain_neutral(neutral(7));
  const ChainReport from0 = l_chain_neutral(neutral(0));
  ASSERT_EQ(from7.sequence.size(), 24u);
  for (size_t i = 0; i < 24; ++i) {
    EXPECT_EQ(from7.sequence[i], from0.sequence[(i + 1) % 24]);
  }
}

TEST(LChainNeutral, PeriodExactly24FromEveryStart) {
  for (const Triad& z : all_neutral_triads()) {
    const ChainReport report = l_chain_neutral(z);
    EXPECT_EQ(report.period, 24);
    const auto roots = report.roots();
    for (size_t i = 1; i < roots.size(); ++i) {
      EXPECT_EQ(reduce_pc(roots[i] - roots[i - 1]), 7);
    }
  }
}

TEST(LChainNeutral, RejectsConsonantStarts) {
  EXPECT_THROW(l_chain_neutral(major(0)), NotNeutral);
}

TEST(RunChain, ExplicitStepCountMayWrap) {
  const ChainReport report = run_chain(major(0), {PlrOp::Parallel}, 3);
  EXPECT_EQ(report.steps, 3);
  ASSERT_EQ(report.sequence.size(), 4u);
  EXPECT_EQ(report.sequence[0], major(0));
  EXPECT_EQ(report.sequence[1], minor(0));
  EXPECT_EQ(report.sequence[2], major(0));
  EXPECT_EQ(report.sequence[3], minor(0));
  EXPECT_EQ(report.period, 2);
}

TEST(RunChain, Validation) {
  EXPECT_THROW(run_chain(major(0), {}), Error);
  EXPECT_THROW(run_chain(major(0), {PlrOp::Parallel}, -1), Error);
}

TEST(ChainReport, JsonShape) {
  const auto j = rl_chain(major(0)).to_json();
  EXPECT_EQ(j["start"], "C:maj");
  EXPECT_EQ(j["pattern"], "RL");
  EXPECT_EQ(j["period"], 24);
  EXPECT_EQ(j["sequence"].size(), 24u);
  EXPECT_EQ(j["sequence"][1], "a:min");
  EXPECT_EQ(j["roots"][1], 18);
}

TEST(Checkers, CompositionAgreementPassesForTheRealRule) {
  const auto v = check_ti_composition_agreement(
      "probe", [](TiElement a, TiElement b) { return compose(a, b); });
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.checked, 48 * 48);
  EXPECT_FALSE(v.counterexample.has_value());
}

TEST(Checkers, CompositionAgreementCatchesAWrongRelation) {
  // Sabotage one relation: I_m ∘ T_n becomes I_{m+n} instead of I_{m-n}.
  const auto broken = [](TiElement a, TiElement b) {
    if (!a.is_transposition() && b.is_transposition()) {
      return TiElement::inversion(a.index() + b.index());
    }
    return compose(a, b);
  };
  const auto v = check_ti_composition_agreement("probe", broken);
  EXPECT_FALSE(v.passed);
  EXPECT_TRUE(v.counterexample.has_value());
}

TEST(Checkers, SimpleTransitivityPassesOnTheRealTriads) {
  std::vector<ToneSet> carrier;
  for (const Triad& t : all_consonant_triads()) carrier.push_back(tone_set(t));
  const auto v = check_ti_simply_transitive_over("probe", carrier);
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.checked, 48 * 48 + 48 * 48);
}

TEST(Checkers, SimpleTransitivityCatchesABrokenMinorPattern) {
  // Minor triads rebuilt as {x, x+5, x+14}: the TI action leaves the carrier.
  std::vector<ToneSet> carrier;
  for (int x = 0; x < kPitchClasses; ++x) {
    carrier.push_back(tone_set(Triad(PitchClass(x), Quality::Major)));
    ToneSet broken = {x, reduce_pc(x + 5), reduce_pc(x + 14)};
    std::sort(broken.begin(), broken.end());
    carrier.push_back(broken);
  }
  const auto v = check_ti_simply_transitive_over("probe", carrier);
  EXPECT_FALSE(v.passed);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_NE(v.counterexample->find("outside the carrier"), std::string::npos);
}

TEST(Verdicts, AllEightPass) {
  const auto verdicts = run_all_theorems();
  ASSERT_EQ(verdicts.size(), 8u);
  const std::vector<std::string> expected_order = {
      "ti_is_d24",      "simply_transitive_on_s",
      "neutral_lemma",  "ti_on_n_not_simply_transitive",
      "parity_lemmas",  "z24_on_neutral",
      "plr_structure_on_s", "two_d12"};
  for (size_t i = 0; i < verdicts.size(); ++i) {
    EXPECT_EQ(verdicts[i].id, expected_order[i]);
    EXPECT_TRUE(verdicts[i].passed) << verdicts[i].id << ": "
                                    << verdicts[i].counterexample.value_or("");
    EXPECT_GT(verdicts[i].checked, 0);
  }
  EXPECT_EQ(all_theorem_ids(), expected_order);
}

TEST(Verdicts, CheckedCounts) {
  EXPECT_GE(verify_simply_transitive_on_s().checked, 48 * 48);
  EXPECT_GE(verify_neutral_lemma().checked, 24 * 24);
  EXPECT_GE(verify_parity_lemmas().checked, 48 * 3 + 24 * 3);
}

TEST(Verdicts, GroupSummariesAttached) {
  const auto v = verify_ti_is_d24();
  ASSERT_TRUE(v.extra.contains("group"));
  EXPECT_EQ(v.extra["group"]["order"], 48);
  EXPECT_EQ(v.extra["group"]["classification"]["kind"], "dihedral");
  EXPECT_EQ(v.extra["group"]["classification"]["n"], 24);
  // Closure elements are labeled with their symbolic names.
  EXPECT_EQ(v.extra["group"]["elements"][0], "T0");

  const auto two = verify_two_d12();
  ASSERT_TRUE(two.extra.contains("original_tone_group"));
  ASSERT_TRUE(two.extra.contains("new_tone_group"));
  EXPECT_EQ(two.extra["original_tone_group"]["classification"]["n"], 12);
}

TEST(Verdicts, JsonShape) {
  const auto j = verify_neutral_lemma().to_json();
  EXPECT_EQ(j["id"], "neutral_lemma");
  EXPECT_EQ(j["passed"], true);
  EXPECT_GE(j["checked_count"].get<long>(), 576);
  EXPECT_TRUE(j.contains("detail"));
  EXPECT_FALSE(j.contains("counterexample"));
}

TEST(Verdicts, RunTheoremById) {
  EXPECT_EQ(run_theorem("z24_on_neutral").id, "z24_on_neutral");
  EXPECT_THROW(run_theorem("nope"), UnknownTheorem);
}

TEST(TiAction, MajorTriadsUnderTranspositionsAloneAreRegular) {
  std::vector<Triad> majors;
  for (int x = 0; x < kPitchClasses; ++x) majors.push_back(major(x));
  const FiniteGroup g = FiniteGroup::close(
      {induced_permutation(majors, [](const Triad& t) {
         return apply_ti(TiElement::transposition(1), t);
       }).value()});
  EXPECT_EQ(g.order(), 24);
  EXPECT_TRUE(g.is_simply_transitive());
}

}  // namespace
}  // namespace qtg
