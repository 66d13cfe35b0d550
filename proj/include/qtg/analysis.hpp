#pragma once

/**
 * @file analysis.hpp
 * @brief Exhaustive verification of the group-theoretic structure of the
 *        quarter-tone triads, plus the P/L/R chain generators.
 *
 * Every verdict is computed by finite enumeration (the largest domain is the
 * 48x48 pair table); nothing is sampled. The check_* helpers take their
 * inputs as parameters so tests can feed deliberately broken variants and
 * confirm the checks really fail.
 */

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtg/error.hpp"
#include "qtg/group.hpp"
#include "qtg/transform.hpp"
#include "qtg/triad.hpp"

namespace qtg {

struct NotConsonant : Error {
  using Error::Error;
};

struct NotNeutral : Error {
  using Error::Error;
};

struct UnknownTheorem : Error {
  using Error::Error;
};

/// A P/L/R iteration record: sequence[0] is the start and
/// sequence[i+1] = pattern[i mod |pattern|](sequence[i]).
struct ChainReport {
  Triad start;
  std::vector<PlrOp> pattern;
  int steps = 0;   // applications recorded in sequence
  std::vector<Triad> sequence;
  int period = 0;  // applications until the start triad first reappears

  std::vector<int> roots() const;
  nlohmann::json to_json() const;
};

/// Iterate the pattern from start. Without an explicit step count the
/// sequence is exactly one full cycle: period entries, the start counted
/// once. With steps = k the sequence holds k+1 entries and may wrap.
ChainReport run_chain(const Triad& start, std::vector<PlrOp> pattern,
                      std::optional<int> steps = {});

/// Alternate R, L, R, L, ... from a consonant triad (R first).
ChainReport rl_chain(const Triad& start);

/// Repeatedly apply L to a neutral triad; roots ascend by 7 quarter-steps.
ChainReport l_chain_neutral(const Triad& start);

/// Outcome of one exhaustive theorem check.
struct TheoremVerdict {
  std::string id;
  bool passed = true;
  long checked = 0;  // number of individual cases examined
  std::string detail;
  std::optional<std::string> counterexample;
  nlohmann::json extra = nlohmann::json::object();  // e.g. group summaries

  /// Marks the verdict failed, keeping the first witness.
  void record_failure(std::string witness);

  nlohmann::json to_json() const;
};

/// A chord reduced to its sorted pitch-class triple; the common currency of
/// the carrier-level checks.
using ToneSet = std::array<int, 3>;

ToneSet tone_set(const Triad& t);
std::string to_string(const ToneSet& tones);

/// The permutation of {0..23} a TI element induces.
Permutation ti_permutation_on_pitch_classes(TiElement e);

/// The permutation of the carrier induced by f, or nullopt if some image
/// leaves the carrier or two images collide.
std::optional<Permutation> induced_permutation(
    const std::vector<Triad>& carrier, const std::function<Triad(const Triad&)>& f);

/// Checks a composition rule against pointwise application on all 24 pitch
/// classes, over all 48x48 element pairs.
TheoremVerdict check_ti_composition_agreement(
    std::string id, const std::function<TiElement(TiElement, TiElement)>& rule);

/// Checks that all 48 TI elements permute the given chord carrier and that
/// every ordered pair of carrier chords has exactly one element mapping the
/// first to the second.
TheoremVerdict check_ti_simply_transitive_over(std::string id,
                                               const std::vector<ToneSet>& carrier);

// The eight theorem verdicts, in the order run_all_theorems reports them.
TheoremVerdict verify_ti_is_d24();
TheoremVerdict verify_simply_transitive_on_s();
TheoremVerdict verify_neutral_lemma();
TheoremVerdict verify_ti_on_n_not_simply_transitive();
TheoremVerdict verify_parity_lemmas();
TheoremVerdict verify_z24_on_neutral();
TheoremVerdict verify_plr_structure_on_s();
TheoremVerdict verify_two_d12();

const std::vector<std::string>& all_theorem_ids();

/// Run one verdict by id; throws UnknownTheorem.
TheoremVerdict run_theorem(std::string_view id);

/// Run the whole suite in fixed order.
std::vector<TheoremVerdict> run_all_theorems();

}  // namespace qtg
