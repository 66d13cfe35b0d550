#include "qtg/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qtg {

namespace {

std::string chord(const Triad& t) { return format_chord(t); }

std::map<ToneSet, int> index_tone_sets(const std::vector<ToneSet>& carrier) {
  std::map<ToneSet, int> where;
  for (size_t i = 0; i < carrier.size(); ++i) {
    ToneSet key = carrier[i];
    std::sort(key.begin(), key.end());
    where.emplace(key, static_cast<int>(i));
  }
  return where;
}

std::map<Triad, int> index_triads(const std::vector<Triad>& carrier) {
  std::map<Triad, int> where;
  for (size_t i = 0; i < carrier.size(); ++i) where.emplace(carrier[i], static_cast<int>(i));
  return where;
}

// Labels the elements of a permutation group by matching them against the 48
// symbolic TI elements acting on the same carrier.
std::vector<std::string> ti_labels(const FiniteGroup& g,
                                   const std::function<Permutation(TiElement)>& as_perm) {
  std::map<std::vector<int>, std::string> names;
  for (TiElement e : all_ti_elements()) names.emplace(as_perm(e).mapping(), to_string(e));
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(g.order()));
  for (const auto& e : g.elements()) {
    const auto it = names.find(e.mapping());
    labels.push_back(it == names.end() ? std::string("?") : it->second);
  }
  return labels;
}

nlohmann::json group_summary(const FiniteGroup& g,
                             std::span<const std::string> labels = {}) {
  return g.to_json(labels);
}

}  // namespace

std::vector<int> ChainReport::roots() const {
  std::vector<int> out;
  out.reserve(sequence.size());
  for (const Triad& t : sequence) out.push_back(t.root().value());
  return out;
}

nlohmann::json ChainReport::to_json() const {
  nlohmann::json j;
  j["start"] = chord(start);
  j["pattern"] = format_plr_word(pattern);
  j["steps"] = steps;
  j["period"] = period;
  nlohmann::json seq = nlohmann::json::array();
  for (const Triad& t : sequence) seq.push_back(chord(t));
  j["sequence"] = std::move(seq);
  j["roots"] = roots();
  return j;
}

ChainReport run_chain(const Triad& start, std::vector<PlrOp> pattern,
                      std::optional<int> steps) {
  if (pattern.empty()) throw Error("chain pattern must not be empty");
  if (steps && *steps < 0) throw Error("step count must be non-negative");

  ChainReport report{start, std::move(pattern), 0, {}, 0};

  // Period: applications until the start triad first reappears. The state
  // space (triad, position in pattern) is finite and the steps invertible,
  // so the walk always returns.
  const int cap = 72 * static_cast<int>(report.pattern.size()) + 1;
  Triad t = start;
  int count = 0;
  do {
    t = apply_plr(report.pattern[static_cast<size_t>(count) % report.pattern.size()], t);
    ++count;
  } while (!(t == start) && count < cap);
  report.period = count;

  report.steps = steps ? *steps : report.period;
  report.sequence.reserve(static_cast<size_t>(report.steps) + 1);
  report.sequence.push_back(start);
  t = start;
  for (int i = 0; i < report.steps; ++i) {
    t = apply_plr(report.pattern[static_cast<size_t>(i) % report.pattern.size()], t);
    if (steps || i + 1 < report.steps) report.sequence.push_back(t);
  }
  return report;
}

ChainReport rl_chain(const Triad& start) {
  if (!start.is_consonant()) {
    throw NotConsonant("rl_chain needs a major or minor start, got " + chord(start));
  }
  return run_chain(start, {PlrOp::Relative, PlrOp::LeadingTone});
}

ChainReport l_chain_neutral(const Triad& start) {
  if (start.quality() != Quality::Neutral) {
    throw NotNeutral("l_chain_neutral needs a neutral start, got " + chord(start));
  }
  return run_chain(start, {PlrOp::LeadingTone});
}

void TheoremVerdict::record_failure(std::string witness) {
  passed = false;
  if (!counterexample) counterexample = std::move(witness);
}

nlohmann::json TheoremVerdict::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["passed"] = passed;
  j["checked_count"] = checked;
  j["detail"] = detail;
  if (counterexample) j["counterexample"] = *counterexample;
  for (const auto& [key, value] : extra.items()) j[key] = value;
  return j;
}

ToneSet tone_set(const Triad& t) {
  const auto tones = t.tones();
  ToneSet out = {tones[0].value(), tones[1].value(), tones[2].value()};
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const ToneSet& tones) {
  return "{" + std::to_string(tones[0]) + ", " + std::to_string(tones[1]) + ", " +
         std::to_string(tones[2]) + "}";
}

Permutation ti_permutation_on_pitch_classes(TiElement e) {
  std::vector<int> mapping(kPitchClasses);
  for (int x = 0; x < kPitchClasses; ++x) {
    mapping[static_cast<size_t>(x)] = e(PitchClass(x)).value();
  }
  return Permutation(std::move(mapping));
}

std::optional<Permutation> induced_permutation(
    const std::vector<Triad>& carrier, const std::function<Triad(const Triad&)>& f) {
  const auto where = index_triads(carrier);
  std::vector<int> mapping;
  mapping.reserve(carrier.size());
  for (const Triad& t : carrier) {
    const auto it = where.find(f(t));
    if (it == where.end()) return std::nullopt;
    mapping.push_back(it->second);
  }
  try {
    return Permutation(std::move(mapping));
  } catch (const Error&) {
    return std::nullopt;  // two chords collided
  }
}

TheoremVerdict check_ti_composition_agreement(
    std::string id, const std::function<TiElement(TiElement, TiElement)>& rule) {
  TheoremVerdict v;
  v.id = std::move(id);
  const auto elements = all_ti_elements();
  for (TiElement a : elements) {
    for (TiElement b : elements) {
      const TiElement c = rule(a, b);
      ++v.checked;
      for (int x = 0; x < kPitchClasses; ++x) {
        const PitchClass p(x);
        if (c(p) != a(b(p))) {
          v.record_failure("rule gives " + to_string(a) + " ∘ " + to_string(b) + " = " +
                           to_string(c) + ", but the maps differ at pitch class " +
                           std::to_string(x));
          break;
        }
      }
    }
  }
  v.detail = "all 48x48 symbolic compositions agree with pointwise application "
             "on all 24 pitch classes";
  return v;
}

TheoremVerdict check_ti_simply_transitive_over(std::string id,
                                               const std::vector<ToneSet>& carrier) {
  TheoremVerdict v;
  v.id = std::move(id);
  const auto where = index_tone_sets(carrier);
  const int n = static_cast<int>(carrier.size());
  std::vector<std::vector<int>> counts(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), 0));
  for (TiElement e : all_ti_elements()) {
    for (int i = 0; i < n; ++i) {
      const ToneSet& tones = carrier[static_cast<size_t>(i)];
      ToneSet image;
      for (size_t k = 0; k < 3; ++k) image[k] = e(PitchClass(tones[k])).value();
      std::sort(image.begin(), image.end());
      ++v.checked;
      const auto it = where.find(image);
      if (it == where.end()) {
        v.record_failure(to_string(e) + " maps " + to_string(tones) + " to " +
                         to_string(image) + ", which is outside the carrier");
        continue;
      }
      ++counts[static_cast<size_t>(i)][static_cast<size_t>(it->second)];
    }
  }
  if (v.passed) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        ++v.checked;
        const int c = counts[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (c != 1) {
          v.record_failure(std::to_string(c) + " TI elements map " +
                           to_string(carrier[static_cast<size_t>(i)]) + " to " +
                           to_string(carrier[static_cast<size_t>(j)]) +
                           " (expected exactly 1)");
        }
      }
    }
  }
  v.detail = "each ordered pair of the " + std::to_string(n) +
             " chords is connected by exactly one TI element";
  return v;
}

TheoremVerdict verify_ti_is_d24() {
  TheoremVerdict v = check_ti_composition_agreement(
      "ti_is_d24", [](TiElement a, TiElement b) { return compose(a, b); });

  // I_m ∘ T_n ∘ I_m = (T_n)^{-1}
  for (int m = 0; m < kPitchClasses; ++m) {
    for (int n = 0; n < kPitchClasses; ++n) {
      const TiElement im = TiElement::inversion(m);
      const TiElement tn = TiElement::transposition(n);
      ++v.checked;
      if (compose(im, compose(tn, im)) != inverse(tn)) {
        v.record_failure("I" + std::to_string(m) + " ∘ T" + std::to_string(n) + " ∘ I" +
                         std::to_string(m) + " != inverse(T" + std::to_string(n) + ")");
      }
    }
  }

  const auto as_perm = [](TiElement e) { return ti_permutation_on_pitch_classes(e); };
  const FiniteGroup g = FiniteGroup::close(
      {as_perm(TiElement::transposition(1)), as_perm(TiElement::inversion(0))});
  if (g.order() != 48) {
    v.record_failure("closure of {T1, I0} has " + std::to_string(g.order()) +
                     " elements, expected 48");
  }
  const GroupClassification cls = classify(g);
  if (cls.kind != GroupClassification::Kind::Dihedral || cls.degree != 24) {
    v.record_failure("closure of {T1, I0} classifies " + cls.to_string() +
                     ", expected Dihedral(24)");
  }

  // Every symbolic element shows up in the closure, all 48 distinct.
  std::set<std::vector<int>> distinct;
  for (TiElement e : all_ti_elements()) {
    ++v.checked;
    const Permutation p = as_perm(e);
    if (g.index_of(p) < 0) {
      v.record_failure(to_string(e) + " is missing from the closure of {T1, I0}");
    }
    distinct.insert(p.mapping());
  }
  if (distinct.size() != 48) {
    v.record_failure("the 48 symbolic elements induce only " +
                     std::to_string(distinct.size()) + " distinct permutations");
  }

  const auto labels = ti_labels(g, as_perm);
  v.extra["group"] = group_summary(g, labels);
  v.detail = "closure of {T1, I0} has 48 elements, classifies Dihedral(24), and the "
             "symbolic composition rules match permutation composition";
  return v;
}

TheoremVerdict verify_simply_transitive_on_s() {
  const auto triads = all_consonant_triads();
  std::vector<ToneSet> carrier;
  carrier.reserve(triads.size());
  for (const Triad& t : triads) carrier.push_back(tone_set(t));
  TheoremVerdict v = check_ti_simply_transitive_over("simply_transitive_on_s", carrier);

  if (v.passed) {
    // Mapper construction through the base chord: with h1(C) = X and
    // h2(C) = Y, the element h2 ∘ h1^{-1} is the unique one sending X to Y.
    const auto where = index_triads(triads);
    const int n = static_cast<int>(triads.size());
    std::vector<std::vector<TiElement>> mapper(
        static_cast<size_t>(n), std::vector<TiElement>(static_cast<size_t>(n)));
    for (TiElement e : all_ti_elements()) {
      for (int i = 0; i < n; ++i) {
        const int j = where.at(apply_ti(e, triads[static_cast<size_t>(i)]));
        mapper[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
      }
    }
    const int c = where.at(Triad(PitchClass(0), Quality::Major));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const TiElement h1 = mapper[static_cast<size_t>(c)][static_cast<size_t>(x)];
        const TiElement h2 = mapper[static_cast<size_t>(c)][static_cast<size_t>(y)];
        const TiElement h = compose(h2, inverse(h1));
        ++v.checked;
        if (h != mapper[static_cast<size_t>(x)][static_cast<size_t>(y)]) {
          v.record_failure("h2 ∘ h1^{-1} = " + to_string(h) + " is not the mapper from " +
                           chord(triads[static_cast<size_t>(x)]) + " to " +
                           chord(triads[static_cast<size_t>(y)]));
        }
      }
    }
  }

  const auto act = [&](TiElement e) {
    return induced_permutation(triads, [e](const Triad& t) { return apply_ti(e, t); }).value();
  };
  const FiniteGroup g =
      FiniteGroup::close({act(TiElement::transposition(1)), act(TiElement::inversion(0))});
  ++v.checked;
  if (!g.is_simply_transitive() || g.order() != 48) {
    v.record_failure("permutation closure on the 48 consonant triads has order " +
                     std::to_string(g.order()) + " and is " +
                     (g.is_simply_transitive() ? "" : "not ") + "simply transitive");
  }
  v.extra["group"] = group_summary(g, ti_labels(g, act));
  v.detail = "TI acts simply transitively on the 48 consonant triads; the unique "
             "mapper always equals h2 ∘ h1^{-1}";
  return v;
}

TheoremVerdict verify_neutral_lemma() {
  TheoremVerdict v;
  v.id = "neutral_lemma";
  for (int x = 0; x < kPitchClasses; ++x) {
    const Triad z(PitchClass(x), Quality::Neutral);
    for (int n = 0; n < kPitchClasses; ++n) {
      const int k = neutral_inversion_index(PitchClass(x), n);
      ++v.checked;
      if (apply_ti(TiElement::inversion(n), z) !=
          apply_ti(TiElement::transposition(k), z)) {
        v.record_failure("I" + std::to_string(n) + " on the neutral triad with root " +
                         std::to_string(x) + " is not T" + std::to_string(k));
      }
    }
  }
  // The figure instance: I_0 sends the C neutral triad to the F neutral triad
  // and equals T_10 there.
  const Triad c_neutral(PitchClass(0), Quality::Neutral);
  ++v.checked;
  if (neutral_inversion_index(PitchClass(0), 0) != 10 ||
      apply_ti(TiElement::inversion(0), c_neutral) !=
          Triad(PitchClass(10), Quality::Neutral)) {
    v.record_failure("I0 on the C neutral triad does not reproduce T10 / root F");
  }
  v.detail = "I_n equals T_{-2x+n+10} on every neutral triad (576 pairs)";
  return v;
}

TheoremVerdict verify_ti_on_n_not_simply_transitive() {
  TheoremVerdict v;
  v.id = "ti_on_n_not_simply_transitive";
  const auto triads = all_neutral_triads();
  const auto where = index_triads(triads);
  const int n = static_cast<int>(triads.size());

  std::vector<std::vector<int>> counts(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), 0));
  for (TiElement e : all_ti_elements()) {
    for (int i = 0; i < n; ++i) {
      ++counts[static_cast<size_t>(i)]
              [static_cast<size_t>(where.at(apply_ti(e, triads[static_cast<size_t>(i)])))];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ++v.checked;
      if (counts[static_cast<size_t>(i)][static_cast<size_t>(j)] < 1) {
        v.record_failure("no TI element maps " + chord(triads[static_cast<size_t>(i)]) +
                         " to " + chord(triads[static_cast<size_t>(j)]));
      }
    }
    ++v.checked;
    if (counts[static_cast<size_t>(i)][static_cast<size_t>(i)] != 2) {
      v.record_failure("stabilizer of " + chord(triads[static_cast<size_t>(i)]) + " has " +
                       std::to_string(counts[static_cast<size_t>(i)][static_cast<size_t>(i)]) +
                       " elements, expected 2");
    }
  }

  // Spot witness: the stabilizer of the C neutral triad is exactly {T0, I14}.
  std::vector<std::string> c_stab;
  for (TiElement e : all_ti_elements()) {
    if (apply_ti(e, triads[0]) == triads[0]) c_stab.push_back(to_string(e));
  }
  ++v.checked;
  if (c_stab != std::vector<std::string>{"T0", "I14"}) {
    v.record_failure("stabilizer of the C neutral triad is not {T0, I14}");
  }

  const auto act = [&](TiElement e) {
    return induced_permutation(triads, [e](const Triad& t) { return apply_ti(e, t); }).value();
  };
  const FiniteGroup g =
      FiniteGroup::close({act(TiElement::transposition(1)), act(TiElement::inversion(0))});
  ++v.checked;
  if (!g.is_transitive() || g.is_simply_transitive() || g.order() != 2 * n) {
    v.record_failure("permutation closure on the neutral triads is not the expected "
                     "transitive, non-simply-transitive group of order 48");
  }
  v.extra["group"] = group_summary(g, ti_labels(g, act));
  v.detail = "TI is transitive on the 24 neutral triads but not simply transitive: "
             "every stabilizer has exactly 2 elements";
  return v;
}

TheoremVerdict verify_parity_lemmas() {
  TheoremVerdict v;
  v.id = "parity_lemmas";
  constexpr std::array<PlrOp, 3> ops = {PlrOp::Parallel, PlrOp::LeadingTone, PlrOp::Relative};
  for (const Triad& t : all_consonant_triads()) {
    for (PlrOp op : ops) {
      ++v.checked;
      if (apply_plr(op, t).root().is_original_tone() != t.root().is_original_tone()) {
        v.record_failure(std::string(1, plr_symbol(op)) + "(" + chord(t) +
                         ") changes the root parity");
      }
    }
  }
  for (const Triad& z : all_neutral_triads()) {
    ++v.checked;
    if (parallel(z) != z) v.record_failure("P(" + chord(z) + ") does not fix the triad");
    for (PlrOp op : {PlrOp::LeadingTone, PlrOp::Relative}) {
      ++v.checked;
      if (apply_plr(op, z).root().is_original_tone() == z.root().is_original_tone()) {
        v.record_failure(std::string(1, plr_symbol(op)) + "(" + chord(z) +
                         ") does not switch the nature of the root");
      }
    }
  }
  v.detail = "P/L/R preserve root parity on consonant triads; on neutral triads P is "
             "the identity and L/R flip the root parity";
  return v;
}

TheoremVerdict verify_z24_on_neutral() {
  TheoremVerdict v;
  v.id = "z24_on_neutral";
  const auto triads = all_neutral_triads();
  const auto l_perm =
      induced_permutation(triads, [](const Triad& t) { return leading_tone(t); });
  const auto r_perm =
      induced_permutation(triads, [](const Triad& t) { return relative(t); });
  if (!l_perm || !r_perm) {
    v.record_failure("L or R does not permute the neutral triads");
    return v;
  }

  const FiniteGroup g = FiniteGroup::close({*l_perm});
  ++v.checked;
  if (g.order() != 24) {
    v.record_failure("<L> on the neutral triads has order " + std::to_string(g.order()) +
                     ", expected 24");
  }
  const GroupClassification cls = classify(g);
  ++v.checked;
  if (cls.kind != GroupClassification::Kind::Cyclic || cls.degree != 24) {
    v.record_failure("<L> classifies " + cls.to_string() + ", expected Cyclic(24)");
  }

  Permutation l_23 = Permutation::identity(static_cast<int>(triads.size()));
  for (int k = 0; k < 23; ++k) l_23 = l_23.after(*l_perm);
  ++v.checked;
  if (!(l_23 == *r_perm)) v.record_failure("R != L^23 on the neutral triads");

  for (const Triad& z : triads) {
    v.checked += 2;
    if (leading_tone(z) != apply_ti(TiElement::transposition(7), z)) {
      v.record_failure("L(" + chord(z) + ") != T7(" + chord(z) + ")");
    }
    if (relative(z) != apply_ti(TiElement::transposition(17), z)) {
      v.record_failure("R(" + chord(z) + ") != T17(" + chord(z) + ")");
    }
  }

  const ChainReport chain = l_chain_neutral(Triad(PitchClass(0), Quality::Neutral));
  ++v.checked;
  if (chain.period != 24) {
    v.record_failure("L chain from the C neutral triad has period " +
                     std::to_string(chain.period) + ", expected 24");
  }
  const auto roots = chain.roots();
  for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
    ++v.checked;
    if (roots[static_cast<size_t>(k)] != reduce_pc(7 * k)) {
      v.record_failure("L chain root " + std::to_string(k) + " is " +
                       std::to_string(roots[static_cast<size_t>(k)]) + ", expected " +
                       std::to_string(reduce_pc(7 * k)));
    }
  }

  v.extra["group"] = group_summary(g);
  v.detail = "<L> on the 24 neutral triads is Cyclic(24) with R = L^23; L acts as T7 "
             "and the 24-root chain ascends by 7 quarter-steps";
  return v;
}

TheoremVerdict verify_plr_structure_on_s() {
  TheoremVerdict v;
  v.id = "plr_structure_on_s";
  const auto triads = all_consonant_triads();
  constexpr std::array<PlrOp, 3> ops = {PlrOp::Parallel, PlrOp::LeadingTone, PlrOp::Relative};

  for (const Triad& t : triads) {
    for (PlrOp op : ops) {
      ++v.checked;
      if (apply_plr(op, apply_plr(op, t)) != t) {
        v.record_failure(std::string(1, plr_symbol(op)) + " is not an involution at " +
                         chord(t));
      }
      ++v.checked;
      const auto a = tone_set(t);
      const auto b = tone_set(apply_plr(op, t));
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (common.size() != 2) {
        v.record_failure(std::string(1, plr_symbol(op)) + "(" + chord(t) + ") shares " +
                         std::to_string(common.size()) + " tones with its input, expected 2");
      }
    }
    // P = R(LR)^3: apply R, L, R, L, R, L, R.
    Triad u = t;
    for (int i = 0; i < 7; ++i) {
      u = apply_plr(i % 2 == 0 ? PlrOp::Relative : PlrOp::LeadingTone, u);
    }
    ++v.checked;
    if (u != parallel(t)) {
      v.record_failure("R(LR)^3 != P at " + chord(t));
    }
  }

  const auto l_perm =
      induced_permutation(triads, [](const Triad& t) { return leading_tone(t); }).value();
  const auto r_perm =
      induced_permutation(triads, [](const Triad& t) { return relative(t); }).value();
  const Permutation lr = l_perm.after(r_perm);  // apply R first

  int lr_order = 1;
  for (Permutation p = lr; !p.is_identity(); p = p.after(lr)) ++lr_order;
  ++v.checked;
  if (lr_order != 12) {
    v.record_failure("LR has order " + std::to_string(lr_order) + " on S, expected 12");
  }

  // The 12 rotations (LR)^k and the 12 reflections R(LR)^k are 24 distinct maps.
  std::set<std::vector<int>> distinct;
  Permutation lr_k = Permutation::identity(lr.size());
  for (int k = 0; k < 12; ++k) {
    distinct.insert(lr_k.mapping());
    distinct.insert(r_perm.after(lr_k).mapping());
    lr_k = lr.after(lr_k);
  }
  ++v.checked;
  if (distinct.size() != 24) {
    v.record_failure("the maps (LR)^k and R(LR)^k for k = 0..11 give only " +
                     std::to_string(distinct.size()) + " distinct bijections, expected 24");
  }

  v.detail = "P, L, R are involutions sharing two common tones with their input; "
             "P = R(LR)^3 and LR has order 12 on the 48 consonant triads";
  return v;
}

TheoremVerdict verify_two_d12() {
  TheoremVerdict v;
  v.id = "two_d12";
  for (const bool even : {true, false}) {
    std::vector<Triad> carrier;
    for (const Triad& t : all_consonant_triads()) {
      if (t.root().is_original_tone() == even) carrier.push_back(t);
    }
    const auto l_perm =
        induced_permutation(carrier, [](const Triad& t) { return leading_tone(t); });
    const auto r_perm =
        induced_permutation(carrier, [](const Triad& t) { return relative(t); });
    const std::string side = even ? "original-tone" : "new-tone";
    ++v.checked;
    if (!l_perm || !r_perm) {
      v.record_failure("L or R does not preserve the " + side + " consonant triads");
      continue;
    }
    const FiniteGroup g = FiniteGroup::close({*l_perm, *r_perm});
    const GroupClassification cls = classify(g);
    v.checked += 2;
    if (g.order() != 24) {
      v.record_failure("<L, R> on the " + side + " triads has order " +
                       std::to_string(g.order()) + ", expected 24");
    }
    if (cls.kind != GroupClassification::Kind::Dihedral || cls.degree != 12) {
      v.record_failure("<L, R> on the " + side + " triads classifies " + cls.to_string() +
                       ", expected Dihedral(12)");
    }
    v.extra[even ? "original_tone_group" : "new_tone_group"] = group_summary(g);
  }

  // The two RL chains are the same walk a quarter-step apart.
  const ChainReport even_chain = rl_chain(Triad(PitchClass(0), Quality::Major));
  const ChainReport odd_chain = rl_chain(Triad(PitchClass(1), Quality::Major));
  ++v.checked;
  if (even_chain.period != 24 || odd_chain.period != 24) {
    v.record_failure("RL chains have periods " + std::to_string(even_chain.period) +
                     " and " + std::to_string(odd_chain.period) + ", expected 24 and 24");
  }
  for (size_t i = 0; i < even_chain.sequence.size() && i < odd_chain.sequence.size(); ++i) {
    const Triad& a = even_chain.sequence[i];
    const Triad& b = odd_chain.sequence[i];
    ++v.checked;
    if (b.root().value() != reduce_pc(a.root().value() + 1) || b.quality() != a.quality()) {
      v.record_failure("RL chain entry " + std::to_string(i) + " is " + chord(b) +
                       ", expected " + chord(a) + " shifted up a quarter-step");
    }
  }

  v.detail = "<L, R> restricted to either root-parity half of the consonant triads "
             "has order 24 and classifies Dihedral(12); the two RL chains differ by "
             "one quarter-step";
  return v;
}

namespace {

using VerdictFn = TheoremVerdict (*)();

const std::vector<std::pair<std::string, VerdictFn>>& theorem_table() {
  static const std::vector<std::pair<std::string, VerdictFn>> table = {
      {"ti_is_d24", &verify_ti_is_d24},
      {"simply_transitive_on_s", &verify_simply_transitive_on_s},
      {"neutral_lemma", &verify_neutral_lemma},
      {"ti_on_n_not_simply_transitive", &verify_ti_on_n_not_simply_transitive},
      {"parity_lemmas", &verify_parity_lemmas},
      {"z24_on_neutral", &verify_z24_on_neutral},
      {"plr_structure_on_s", &verify_plr_structure_on_s},
      {"two_d12", &verify_two_d12},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& all_theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : theorem_table()) out.push_back(id);
    return out;
  }();
  return ids;
}

TheoremVerdict run_theorem(std::string_view id) {
  for (const auto& [name, fn] : theorem_table()) {
    if (name == id) return fn();
  }
  throw UnknownTheorem("unknown theorem id: '" + std::string(id) + "'");
}

std::vector<TheoremVerdict> run_all_theorems() {
  std::vector<TheoremVerdict> out;
  out.reserve(theorem_table().size());
  for (const auto& [id, fn] : theorem_table()) out.push_back(fn());
  return out;
}

}  // namespace qtg
