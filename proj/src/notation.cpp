#include "qtg/notation.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace qtg {

namespace {

// Naturals in ascending clock order.
constexpr std::array<std::pair<char, int>, 7> kNaturals = {{
    {'C', 0}, {'D', 4}, {'E', 8}, {'F', 10}, {'G', 14}, {'A', 18}, {'B', 22},
}};

constexpr std::array<std::pair<std::string_view, int>, 8> kAccidentalTokens = {{
    {"", 0}, {"n", 0}, {"q#", 1}, {"#", 2}, {"t#", 3}, {"qb", -1}, {"b", -2}, {"tb", -3},
}};

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

int natural_value(char letter) {
  const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  for (const auto& [name, value] : kNaturals) {
    if (name == upper) return value;
  }
  throw MalformedSpelling(std::string("unknown note letter: '") + letter + "'");
}

PitchClass Spelling::pitch_class() const {
  return PitchClass(natural_value(letter) + accidental);
}

Spelling parse_spelling(std::string_view text) {
  if (text.empty()) throw MalformedSpelling("empty spelling");
  Spelling s;
  s.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  natural_value(s.letter);  // validates the letter
  const std::string token = lowercase(text.substr(1));
  for (const auto& [name, offset] : kAccidentalTokens) {
    if (token == name) {
      s.accidental = offset;
      return s;
    }
  }
  throw MalformedSpelling("unknown accidental token: '" + token + "'");
}

std::string format_spelling(const Spelling& s) {
  natural_value(s.letter);
  for (const auto& [name, offset] : kAccidentalTokens) {
    if (offset == s.accidental && !(name == "n")) {
      return std::string(1, s.letter) + std::string(name);
    }
  }
  throw MalformedSpelling("accidental out of range: " + std::to_string(s.accidental));
}

std::vector<Spelling> names_of(PitchClass pc) {
  for (const auto& [letter, value] : kNaturals) {
    if (value == pc.value()) return {Spelling{letter, 0}};
  }
  // Sharp-family name: nearest natural below. Flat-family: nearest above.
  Spelling sharp_name{};
  Spelling flat_name{};
  for (const auto& [letter, value] : kNaturals) {
    if (value < pc.value()) sharp_name = Spelling{letter, pc.value() - value};
  }
  flat_name = Spelling{'C', pc.value() - kPitchClasses};  // above B only C remains
  for (auto it = kNaturals.rbegin(); it != kNaturals.rend(); ++it) {
    if (it->second > pc.value()) flat_name = Spelling{it->first, pc.value() - it->second};
  }
  return {sharp_name, flat_name};
}

Spelling canonical_name(PitchClass pc) { return names_of(pc).front(); }

}  // namespace qtg
