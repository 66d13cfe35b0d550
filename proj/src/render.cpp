#include "qtg/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qtg/notation.hpp"

namespace qtg {

namespace {

struct Point {
  double x;
  double y;
};

// Clock position p (node index, possibly fractional) to canvas coordinates:
// position 0 at 12 o'clock, increasing clockwise, one node per 15 degrees.
Point point_at(double position, double radius) {
  const double angle = (90.0 - 15.0 * position) * std::numbers::pi / 180.0;
  const double cx = kCanvasSize / 2.0;
  return {cx + radius * std::cos(angle), cx - radius * std::sin(angle)};
}

std::string num(double v) {
  if (std::abs(v) < 5e-3) v = 0.0;  // avoid "-0.00"
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string ring_label(PitchClass pc) {
  const auto names = names_of(pc);
  std::string out = format_spelling(names.front());
  for (size_t i = 1; i < names.size(); ++i) out += "/" + format_spelling(names[i]);
  return out;
}

void check_axis(int n) {
  if (n < 0 || n >= kPitchClasses) {
    throw InvalidAxis("inversion axis index " + std::to_string(n) + " outside [0, 23]");
  }
}

}  // namespace

LabelMode parse_label_mode(std::string_view text) {
  if (text == "numbers") return LabelMode::Numbers;
  if (text == "names") return LabelMode::Names;
  if (text == "both") return LabelMode::Both;
  throw Error("unknown label mode '" + std::string(text) +
              "' (expected numbers, names or both)");
}

void ClockScene::add_chord(const Triad& t) {
  const auto& palette = chord_palette();
  chords.push_back({t, palette[chords.size() % palette.size()]});
}

void ClockScene::add_axis(int n) {
  check_axis(n);
  axes.push_back(n);
}

const std::vector<std::string>& chord_palette() {
  static const std::vector<std::string> palette = {"black", "blue", "crimson",
                                                   "seagreen", "darkorange", "purple"};
  return palette;
}

std::pair<double, double> axis_endpoints(int n) {
  check_axis(n);
  return {n / 2.0, n / 2.0 + 12.0};
}

std::string render_clock(const ClockScene& scene) {
  for (int n : scene.axes) check_axis(n);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" "
         "height=\"600\" viewBox=\"0 0 600 600\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n"
      << "<circle cx=\"300\" cy=\"300\" r=\"" << num(kClockRadius)
      << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"2\"/>\n";

  for (int n : scene.axes) {
    const auto [p1, p2] = axis_endpoints(n);
    const Point a = point_at(p1, kClockRadius);
    const Point b = point_at(p2, kClockRadius);
    svg << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
        << "\" y2=\"" << num(b.y)
        << "\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"3 6\"/>\n";
  }

  for (const ChordMark& mark : scene.chords) {
    svg << "<polygon points=\"";
    const auto tones = mark.triad.tones();
    for (size_t i = 0; i < tones.size(); ++i) {
      const Point p = point_at(tones[i].value(), kTriadRadius);
      svg << (i ? " " : "") << num(p.x) << "," << num(p.y);
    }
    svg << "\" fill=\"none\" stroke=\"" << mark.stroke << "\" stroke-width=\"4\"/>\n";
  }

  for (int i = 0; i < kPitchClasses; ++i) {
    const Point p = point_at(i, kClockRadius);
    svg << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\""
        << num(kNodeRadius) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
        << "<text x=\"" << num(p.x) << "\" y=\"" << num(p.y)
        << "\" dy=\"0.35em\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">"
        << i << "</text>\n";

    if (scene.labels == LabelMode::Numbers) continue;
    const Point q = point_at(i, kLabelRadius);
    if (scene.labels == LabelMode::Names) {
      svg << "<text x=\"" << num(q.x) << "\" y=\"" << num(q.y)
          << "\" dy=\"0.35em\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"13\">"
          << ring_label(PitchClass(i)) << "</text>\n";
    } else {  // Both: number above name
      svg << "<text x=\"" << num(q.x) << "\" y=\"" << num(q.y)
          << "\" dy=\"-0.15em\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"13\">"
          << i << "</text>\n"
          << "<text x=\"" << num(q.x) << "\" y=\"" << num(q.y)
          << "\" dy=\"0.95em\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"13\">"
          << ring_label(PitchClass(i)) << "</text>\n";
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qtg
