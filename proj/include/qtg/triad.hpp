#pragma once

/**
 * @file triad.hpp
 * @brief Major, minor and neutral triads, the componentwise TI action, and
 *        the contextual P/L/R transformations.
 *
 * Tone sets by quality, for root x (all mod 24):
 *
 *   major    {x, x+8,  x+14}
 *   minor    {x, x+6,  x+14}
 *   neutral  {x, x+7,  x+14}
 *
 * A triad is stored canonically as (root, quality); the decomposition of a
 * tone set into that form is unique.
 */

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtg/error.hpp"
#include "qtg/pitch.hpp"
#include "qtg/transform.hpp"

namespace qtg {

/// Thrown by decompose when a tone set matches no triad pattern.
struct NotATriad : Error {
  using Error::Error;
};

/// Thrown for a bad "<spelling>:<quality>" chord string.
struct MalformedChord : Error {
  using Error::Error;
};

/// Thrown for a character outside {P, L, R} in a transformation word.
struct MalformedPlrWord : Error {
  using Error::Error;
};

enum class Quality { Major, Minor, Neutral };

std::string to_string(Quality q);  // "maj" / "min" / "neu"

/// An unordered 3-tone chord in canonical (root, quality) form. Equality of
/// (root, quality) coincides with equality of tone sets.
class Triad {
 public:
  Triad(PitchClass root, Quality quality) : root_(root), quality_(quality) {}

  PitchClass root() const { return root_; }
  Quality quality() const { return quality_; }
  bool is_consonant() const { return quality_ != Quality::Neutral; }

  /// Tones in ascending root form: {root, root+k, root+14}.
  std::array<PitchClass, 3> tones() const;

  friend bool operator==(const Triad&, const Triad&) = default;
  friend auto operator<=>(const Triad&, const Triad&) = default;

 private:
  PitchClass root_;
  Quality quality_;
};

/// Unique (root, quality) of a 3-tone set given in any order; nullopt if the
/// set matches no pattern.
std::optional<Triad> try_decompose(std::array<PitchClass, 3> tones) noexcept;

/// Throwing variant of try_decompose.
Triad decompose(std::array<PitchClass, 3> tones);

/// Componentwise action of a TI element, re-normalized to canonical form.
/// Transpositions preserve quality; inversions swap major and minor and fix
/// neutral.
Triad apply_ti(TiElement e, const Triad& t);

enum class PlrOp { Parallel, LeadingTone, Relative };

constexpr char plr_symbol(PlrOp op) {
  switch (op) {
    case PlrOp::Parallel: return 'P';
    case PlrOp::LeadingTone: return 'L';
    default: return 'R';
  }
}

PlrOp parse_plr_symbol(char c);

std::vector<PlrOp> parse_plr_word(std::string_view word);

std::string format_plr_word(std::span<const PlrOp> word);

/// The inversion I_{y_i + y_j} a P/L/R application performs on t: P uses
/// y1+y3, L uses y2+y3, R uses y1+y2, with the y-tuple read from the root
/// form of t's quality (minor triads in the descending order <x+14, x+6, x>
/// they take as inversion images, which is what makes P/L/R involutions).
TiElement plr_inversion(PlrOp op, const Triad& t);

Triad apply_plr(PlrOp op, const Triad& t);

Triad parallel(const Triad& t);      // P: major x <-> minor x, fixes neutral
Triad leading_tone(const Triad& t);  // L: acts as T_7 on neutral triads
Triad relative(const Triad& t);      // R: acts as T_17 on neutral triads

/// The k with I_n(neutral x) = T_k(neutral x): k = (-2x + n + 10) mod 24.
int neutral_inversion_index(PitchClass root, int n);

/// Chord text form "<spelling>:<quality>" with quality in {maj, min, neu}.
/// The root letter is printed lower-case for minor triads ("c:min"), a
/// capital otherwise ("C:maj", "Gq#:neu").
std::string format_chord(const Triad& t);

Triad parse_chord(std::string_view text);

/// The 48 consonant triads: ascending root, major before minor.
std::vector<Triad> all_consonant_triads();

/// The 24 neutral triads, ascending root.
std::vector<Triad> all_neutral_triads();

}  // namespace qtg
