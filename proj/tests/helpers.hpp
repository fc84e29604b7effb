#pragma once

// Shared test utilities and independent oracles. Everything here recomputes
// results from first principles and must stay independent of the library
// code paths it cross-checks.

#include <string>
#include <vector>

#include "chordflip/bisector.hpp"
#include "chordflip/diagram.hpp"
#include "chordflip/error.hpp"

namespace testutil {

// Crossing oracle: two chords cross iff their four endpoints alternate
// u v u v around the circle. Reads the positions directly instead of using
// arc membership.
inline bool crossing_by_alternation(const chordflip::ChordDiagram& d, const std::string& u,
                                    const std::string& v) {
    std::vector<std::string> seq;
    for (int p = 0; p < d.num_positions(); ++p) {
        const std::string& label = d.label_at(p);
        if (label == u || label == v) seq.push_back(label);
    }
    REQUIRE(seq.size() == 4);
    return seq[0] == seq[2];
}

// Per-window recount for the balance function, no sliding updates.
inline int window_red_count(const chordflip::ColorSequence& colors, int start, int length) {
    const int m = static_cast<int>(colors.size());
    int reds = 0;
    for (int t = 0; t < length; ++t)
        if (colors[(start + t) % m] == chordflip::Color::red) ++reds;
    return reds;
}

template <typename F>
chordflip::Errc thrown_code(F&& f) {
    try {
        f();
    } catch (const chordflip::Error& e) {
        return e.code();
    }
    FAIL("expected a chordflip::Error");
    return chordflip::Errc::bad_input;
}

inline long long double_factorial_odd(int n) {
    long long product = 1;
    for (int k = 1; k <= 2 * n - 1; k += 2) product *= k;
    return product;
}

}  // namespace testutil
