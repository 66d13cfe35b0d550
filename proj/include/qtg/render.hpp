#pragma once

/**
 * @file render.hpp
 * @brief SVG musical-clock diagrams: 24 labeled nodes on a circle, triad
 *        triangles and dotted inversion axes.
 *
 * Rendering is pure text generation and byte-deterministic: the same scene
 * always produces the same document. The geometry constants below are part
 * of that golden-file contract.
 */

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtg/error.hpp"
#include "qtg/triad.hpp"

namespace qtg {

/// Thrown for an inversion-axis index outside [0, 23].
struct InvalidAxis : Error {
  using Error::Error;
};

enum class LabelMode {
  Numbers,  // node indices only
  Names,    // node indices plus enharmonic names on the outer ring
  Both,     // outer ring shows the number above the name
};

LabelMode parse_label_mode(std::string_view text);  // "numbers" | "names" | "both"

struct ChordMark {
  Triad triad;
  std::string stroke;  // SVG stroke color
};

/// Scene description for one clock diagram. Chords added through add_chord
/// cycle the palette: black first, then blue, matching the two-color figures.
struct ClockScene {
  std::vector<ChordMark> chords;
  std::vector<int> axes;  // inversion indices n; axis through n/2 and n/2+12
  LabelMode labels = LabelMode::Names;

  void add_chord(const Triad& t);
  void add_axis(int n);  // throws InvalidAxis
};

/// Stroke colors assigned by add_chord, in order.
const std::vector<std::string>& chord_palette();

/// The two clock positions an inversion axis passes through: n/2 and n/2+12.
/// Odd n gives half-integer positions between nodes. Throws InvalidAxis.
std::pair<double, double> axis_endpoints(int n);

/// Render the scene as a standalone SVG 1.1 document (UTF-8 text).
std::string render_clock(const ClockScene& scene);

// Pinned geometry (canvas units).
inline constexpr double kCanvasSize = 600.0;
inline constexpr double kClockRadius = 250.0;
inline constexpr double kNodeRadius = 15.0;
inline constexpr double kLabelRadius = 290.0;
inline constexpr double kTriadRadius = 230.0;  // triangle vertices, inset from the nodes

}  // namespace qtg
