#include "qtg/triad.hpp"

#include <algorithm>
#include <cctype>

#include "qtg/notation.hpp"

namespace qtg {

namespace {

constexpr int third_offset(Quality q) {
  switch (q) {
    case Quality::Major: return 8;
    case Quality::Minor: return 6;
    default: return 7;
  }
}

constexpr std::array<Quality, 3> kQualities = {Quality::Major, Quality::Minor,
                                               Quality::Neutral};

// The ordered tuple the P/L/R inversion indices are read from. Major and
// neutral triads ascend from the root; a minor triad keeps the descending
// fifth-third-root order it inherits as the inversion image of a major one.
std::array<int, 3> plr_tuple(const Triad& t) {
  const int x = t.root().value();
  switch (t.quality()) {
    case Quality::Major: return {x, reduce_pc(x + 8), reduce_pc(x + 14)};
    case Quality::Minor: return {reduce_pc(x + 14), reduce_pc(x + 6), x};
    default: return {x, reduce_pc(x + 7), reduce_pc(x + 14)};
  }
}

}  // namespace

std::string to_string(Quality q) {
  switch (q) {
    case Quality::Major: return "maj";
    case Quality::Minor: return "min";
    default: return "neu";
  }
}

std::array<PitchClass, 3> Triad::tones() const {
  const int x = root_.value();
  return {PitchClass(x), PitchClass(x + third_offset(quality_)), PitchClass(x + 14)};
}

std::optional<Triad> try_decompose(std::array<PitchClass, 3> tones) noexcept {
  for (PitchClass root : tones) {
    for (Quality q : kQualities) {
      Triad candidate(root, q);
      auto expect = candidate.tones();
      std::array<PitchClass, 3> got = tones;
      std::sort(expect.begin(), expect.end());
      std::sort(got.begin(), got.end());
      if (expect == got) return candidate;
    }
  }
  return std::nullopt;
}

Triad decompose(std::array<PitchClass, 3> tones) {
  if (auto t = try_decompose(tones)) return *t;
  throw NotATriad("{" + std::to_string(tones[0].value()) + ", " +
                  std::to_string(tones[1].value()) + ", " +
                  std::to_string(tones[2].value()) + "} matches no triad pattern");
}

Triad apply_ti(TiElement e, const Triad& t) {
  const auto tones = t.tones();
  return decompose({e(tones[0]), e(tones[1]), e(tones[2])});
}

PlrOp parse_plr_symbol(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'P': return PlrOp::Parallel;
    case 'L': return PlrOp::LeadingTone;
    case 'R': return PlrOp::Relative;
    default:
      throw MalformedPlrWord(std::string("expected P, L or R, got '") + c + "'");
  }
}

std::vector<PlrOp> parse_plr_word(std::string_view word) {
  std::vector<PlrOp> ops;
  ops.reserve(word.size());
  for (char c : word) ops.push_back(parse_plr_symbol(c));
  return ops;
}

std::string format_plr_word(std::span<const PlrOp> word) {
  std::string out;
  out.reserve(word.size());
  for (PlrOp op : word) out.push_back(plr_symbol(op));
  return out;
}

TiElement plr_inversion(PlrOp op, const Triad& t) {
  const auto y = plr_tuple(t);
  switch (op) {
    case PlrOp::Parallel: return TiElement::inversion(y[0] + y[2]);
    case PlrOp::LeadingTone: return TiElement::inversion(y[1] + y[2]);
    default: return TiElement::inversion(y[0] + y[1]);
  }
}

Triad apply_plr(PlrOp op, const Triad& t) { return apply_ti(plr_inversion(op, t), t); }

Triad parallel(const Triad& t) { return apply_plr(PlrOp::Parallel, t); }

Triad leading_tone(const Triad& t) { return apply_plr(PlrOp::LeadingTone, t); }

Triad relative(const Triad& t) { return apply_plr(PlrOp::Relative, t); }

int neutral_inversion_index(PitchClass root, int n) {
  return reduce_pc(-2 * root.value() + n + 10);
}

std::string format_chord(const Triad& t) {
  std::string name = format_spelling(canonical_name(t.root()));
  if (t.quality() == Quality::Minor) {
    name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
  }
  return name + ":" + to_string(t.quality());
}

Triad parse_chord(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw MalformedChord("expected <spelling>:<quality>, got '" + std::string(text) + "'");
  }
  const auto quality_token = text.substr(colon + 1);
  Quality quality;
  if (quality_token == "maj") {
    quality = Quality::Major;
  } else if (quality_token == "min") {
    quality = Quality::Minor;
  } else if (quality_token == "neu") {
    quality = Quality::Neutral;
  } else {
    throw MalformedChord("unknown quality '" + std::string(quality_token) +
                         "' (expected maj, min or neu)");
  }
  try {
    return Triad(parse_spelling(text.substr(0, colon)).pitch_class(), quality);
  } catch (const MalformedSpelling& e) {
    throw MalformedChord(std::string("bad chord root: ") + e.what());
  }
}

std::vector<Triad> all_consonant_triads() {
  std::vector<Triad> out;
  out.reserve(2 * kPitchClasses);
  for (int x = 0; x < kPitchClasses; ++x) {
    out.emplace_back(PitchClass(x), Quality::Major);
    out.emplace_back(PitchClass(x), Quality::Minor);
  }
  return out;
}

std::vector<Triad> all_neutral_triads() {
  std::vector<Triad> out;
  out.reserve(kPitchClasses);
  for (int x = 0; x < kPitchClasses; ++x) out.emplace_back(PitchClass(x), Quality::Neutral);
  return out;
}

}  // namespace qtg
