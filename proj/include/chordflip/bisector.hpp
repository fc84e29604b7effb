#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chordflip/color.hpp"
#include "chordflip/diagram.hpp"

namespace chordflip {

// Color of the chord owning each position, read around the circle.
// Serialized as a string over {R, B}.
using ColorSequence = std::vector<Color>;

ColorSequence parse_color_sequence(std::string_view text);
std::string to_string(const ColorSequence& colors);

// f(i) = |X ∩ I_i| - |X|/2 where X is the set of red positions and I_i the
// window of length n starting at i (length 2n input). Every entry is an
// integer, consecutive entries differ by at most 1, and f(i+n) = -f(i).
using BalanceProfile = std::vector<int>;

// Sliding-window computation, O(1) per step. Throws Errc::odd_class when a
// color class has odd size (impossible for sequences induced by chords).
BalanceProfile balance_profile(const ColorSequence& colors);

// The window of length n with the smallest start i such that f(i) = 0; such
// an i always exists with i <= n. That window then holds exactly half of the
// red and half of the blue positions. Empty input yields the empty window.
Window find_bisecting_window(const ColorSequence& colors);

// All starts i with f(i) = 0, each window counted independently from scratch.
// The oracle for find_bisecting_window.
std::set<int> brute_force_bisecting_windows(const ColorSequence& colors);

// Position colors induced by a chord coloring. Errc::unknown_label if the
// coloring misses one of the diagram's labels.
ColorSequence induced_color_sequence(const ChordDiagram& d, const ChordColoring& coloring);

// True iff every chord has exactly one endpoint inside w.
bool is_transversal(const ChordDiagram& d, const Window& w);

}  // namespace chordflip
