#pragma once

/**
 * @file transform.hpp
 * @brief The TI group: symbolic transposition (T_n) and inversion (I_n)
 *        elements acting on pitch classes, with exact composition algebra.
 *
 * compose(a, b) means "apply b first, then a", matching the usual reading of
 * a ∘ b. The composition rules are
 *
 *   T_m ∘ T_n = T_{m+n}    T_m ∘ I_n = I_{m+n}
 *   I_m ∘ T_n = I_{m-n}    I_m ∘ I_n = T_{m-n}     (all mod 24)
 */

#include <string>
#include <string_view>
#include <vector>

#include "qtg/error.hpp"
#include "qtg/pitch.hpp"

namespace qtg {

/// Thrown for a bad "T<n>"/"I<n>" text form.
struct MalformedTiElement : Error {
  using Error::Error;
};

enum class TiKind { Transposition, Inversion };

/// A symbolic element of the TI group: T_n (x -> x+n) or I_n (x -> -x+n).
class TiElement {
 public:
  constexpr TiElement() = default;  // T_0, the identity

  static constexpr TiElement transposition(int n) {
    return TiElement(TiKind::Transposition, n);
  }
  static constexpr TiElement inversion(int n) {
    return TiElement(TiKind::Inversion, n);
  }
  static constexpr TiElement identity() { return transposition(0); }

  constexpr TiKind kind() const { return kind_; }
  constexpr int index() const { return index_; }
  constexpr bool is_transposition() const { return kind_ == TiKind::Transposition; }
  constexpr bool is_identity() const { return is_transposition() && index_ == 0; }

  /// Action on a pitch class: T_n(x) = x + n, I_n(x) = -x + n.
  constexpr PitchClass operator()(PitchClass x) const {
    return is_transposition() ? PitchClass(x.value() + index_)
                              : PitchClass(-x.value() + index_);
  }

  friend constexpr bool operator==(TiElement, TiElement) = default;

 private:
  constexpr TiElement(TiKind kind, int index) : kind_(kind), index_(reduce_pc(index)) {}

  TiKind kind_ = TiKind::Transposition;
  int index_ = 0;
};

constexpr PitchClass apply_pc(TiElement e, PitchClass x) { return e(x); }

/// a ∘ b: apply b first, then a.
constexpr TiElement compose(TiElement a, TiElement b) {
  const int m = a.index();
  const int n = b.index();
  if (a.is_transposition()) {
    return b.is_transposition() ? TiElement::transposition(m + n)
                                : TiElement::inversion(m + n);
  }
  return b.is_transposition() ? TiElement::inversion(m - n)
                              : TiElement::transposition(m - n);
}

/// T_n^{-1} = T_{-n}; every inversion is an involution.
constexpr TiElement inverse(TiElement e) {
  return e.is_transposition() ? TiElement::transposition(-e.index()) : e;
}

/// e composed with itself k times; k may be negative.
constexpr TiElement power(TiElement e, int k) {
  if (e.is_transposition()) return TiElement::transposition(e.index() * (k % kPitchClasses));
  return (k % 2 == 0) ? TiElement::identity() : e;
}

/// Text form "T<n>" / "I<n>", e.g. "T5", "I14".
std::string to_string(TiElement e);

/// Parse the text form; throws MalformedTiElement.
TiElement parse_ti(std::string_view text);

/// All 48 elements: T_0..T_23 then I_0..I_23.
std::vector<TiElement> all_ti_elements();

}  // namespace qtg
