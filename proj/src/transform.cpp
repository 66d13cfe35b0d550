#include "qtg/transform.hpp"

#include <cctype>
#include <charconv>

namespace qtg {

std::string to_string(TiElement e) {
  return (e.is_transposition() ? "T" : "I") + std::to_string(e.index());
}

TiElement parse_ti(std::string_view text) {
  if (text.size() < 2) throw MalformedTiElement("expected T<n> or I<n>, got '" + std::string(text) + "'");
  const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (kind != 'T' && kind != 'I') {
    throw MalformedTiElement("expected T<n> or I<n>, got '" + std::string(text) + "'");
  }
  int n = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || ptr != last) {
    throw MalformedTiElement("bad index in '" + std::string(text) + "'");
  }
  return kind == 'T' ? TiElement::transposition(n) : TiElement::inversion(n);
}

std::vector<TiElement> all_ti_elements() {
  std::vector<TiElement> out;
  out.reserve(2 * kPitchClasses);
  for (int n = 0; n < kPitchClasses; ++n) out.push_back(TiElement::transposition(n));
  for (int n = 0; n < kPitchClasses; ++n) out.push_back(TiElement::inversion(n));
  return out;
}

}  // namespace qtg
