#pragma once

/**
 * @file notation.hpp
 * @brief Quarter-tone note spellings: parsing, formatting and the enharmonic
 *        names of each pitch class.
 *
 * Accidentals are written with ASCII tokens, one per quarter-step offset:
 *
 *   token   | ""      "n"      "q#"   "#"    "t#"   "qb"   "b"    "tb"
 *   offset  |  0       0       +1     +2     +3     -1     -2     -3
 *
 * so "Gq#" is G quarter-sharp, "Eb" is E flat and "Dtb" is D
 * three-quarter-flat.
 */

#include <string>
#include <string_view>
#include <vector>

#include "qtg/error.hpp"
#include "qtg/pitch.hpp"

namespace qtg {

/// Thrown for an unknown letter or accidental token.
struct MalformedSpelling : Error {
  using Error::Error;
};

/// A letter name plus an accidental offset in quarter-steps. Many spellings
/// denote the same pitch class.
struct Spelling {
  char letter = 'C';   // 'A'..'G'
  int accidental = 0;  // quarter-steps, -3..+3

  PitchClass pitch_class() const;

  bool operator==(const Spelling&) const = default;
};

/// Pitch class of a bare letter: C=0, D=4, E=8, F=10, G=14, A=18, B=22.
int natural_value(char letter);

/// Parse "<letter><accidental?>", e.g. "C", "Dq#", "Btb". Case-insensitive.
Spelling parse_spelling(std::string_view text);

/// Inverse of parse_spelling; the natural accidental formats as "".
std::string format_spelling(const Spelling& s);

/// The clock-label spellings of a pitch class: one name for the seven
/// naturals, otherwise the sharp-family name followed by the flat-family
/// name (e.g. pc 7 -> Dt#, Eqb).
std::vector<Spelling> names_of(PitchClass pc);

/// First entry of names_of: the display default.
Spelling canonical_name(PitchClass pc);

}  // namespace qtg
