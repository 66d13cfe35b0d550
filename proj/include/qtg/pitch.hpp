#pragma once

/**
 * @file pitch.hpp
 * @brief Pitch classes of the 24-tone (quarter-step) octave and the
 *        directed intervals between them. All arithmetic is exact, mod 24.
 */

#include <compare>

namespace qtg {

/// Number of pitch classes in the quarter-tone octave. The whole library is
/// specific to 24; it is not a tunable parameter.
inline constexpr int kPitchClasses = 24;

/// Reduce any integer into [0, kPitchClasses).
constexpr int reduce_pc(int n) {
  int r = n % kPitchClasses;
  return r < 0 ? r + kPitchClasses : r;
}

/// One of the 24 quarter-tone pitch classes, counted in quarter-steps above C.
/// Value type: no octave information, total order by residue.
class PitchClass {
 public:
  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int n) : value_(reduce_pc(n)) {}

  constexpr int value() const { return value_; }

  /// True for the 12 even residues, i.e. the pitches already present in the
  /// 12-tone system; the odd residues are the quarter-tone pitches between.
  constexpr bool is_original_tone() const { return value_ % 2 == 0; }

  friend constexpr auto operator<=>(PitchClass, PitchClass) = default;

 private:
  int value_ = 0;
};

/// Directed distance between two pitch classes, in quarter-steps, in [0, 24).
class Interval {
 public:
  constexpr Interval() = default;
  constexpr explicit Interval(int quarter_steps)
      : quarter_steps_(reduce_pc(quarter_steps)) {}

  constexpr int quarter_steps() const { return quarter_steps_; }

  friend constexpr auto operator<=>(Interval, Interval) = default;

 private:
  int quarter_steps_ = 0;
};

/// Quarter-steps from a up to b, mod 24.
constexpr Interval interval_between(PitchClass a, PitchClass b) {
  return Interval(b.value() - a.value());
}

}  // namespace qtg
