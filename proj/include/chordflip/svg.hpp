#pragma once

#include <string>

#include "chordflip/diagram.hpp"
#include "chordflip/graph.hpp"

namespace chordflip {

// Deterministic SVG rendering: 2n points evenly spaced on a circle starting
// at angle 0 and proceeding counterclockwise, straight-line chords, red/blue
// strokes when a coloring is given, and the window drawn as a highlighted arc
// plus the separating line when given. Identical inputs produce byte-identical
// output.
std::string render_svg(const ChordDiagram& d,
                       const ChordColoring* coloring = nullptr,
                       const Window* window = nullptr);

}  // namespace chordflip
