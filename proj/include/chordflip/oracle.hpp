#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "chordflip/bisector.hpp"
#include "chordflip/diagram.hpp"
#include "chordflip/graph.hpp"

namespace chordflip {

// A diagram together with a coloring whose classes pairwise cross: exactly
// the valid flip-pipeline inputs.
struct ColoredDiagram {
    ChordDiagram diagram;
    ChordColoring coloring;
};

// Canonical chord label for a rank: "a".."z", "aa", "ab", ...
std::string canonical_label(int rank);

// Visits every fixed-point-free involution on {0..2n-1} exactly once, with
// canonical labels (chord label = rank of its smaller endpoint). The count is
// the double factorial (2n-1)!!. Practical up to n = 7.
void enumerate_matchings(int n, const std::function<void(const ChordDiagram&)>& visit);
std::vector<ChordDiagram> all_matchings(int n);

// The unique pairwise-crossing perfect matching on the given positions:
// sort them and pair the j-th with the (j+r)-th. No other perfect matching
// on these points is pairwise crossing.
// Errors: Errc::empty_input for an empty set, Errc::bad_parity for odd size,
// Errc::bad_input for repeated or negative positions.
std::vector<std::pair<int, int>> unique_crossing_matching(const std::vector<int>& points);

// Valid pipeline input from a red endpoint set: red chords are the unique
// crossing matching on red_positions, blue chords the one on the remaining
// positions. Every valid ColoredDiagram arises from exactly one red set.
// Errors: Errc::bad_parity for odd-sized red sets, Errc::bad_input for
// out-of-range or repeated positions.
ColoredDiagram gen_bicrossing_diagram(int n, const std::vector<int>& red_positions);

// Deterministic fuzz input with an even red count. The generator is part of
// the test contract: std::mt19937 seeded with (uint32)seed, one draw per
// position, low bit set -> red; if the red count ends up odd the last
// position's color is flipped.
ColorSequence random_color_sequence(int length, std::uint64_t seed);  // Errc::bad_parity if odd

// True iff some red/blue assignment makes both classes cliques in g, i.e.
// complement(g) is bipartite, by exhaustive search over all 2^|V|
// assignments. Errc::too_large beyond 12 vertices.
bool bipartite_complement_bruteforce(const InterlacementGraph& g);

}  // namespace chordflip
