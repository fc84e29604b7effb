#include "chordflip/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

namespace chordflip {

std::string canonical_label(int rank) {
    std::string out;
    int r = rank;
    while (true) {
        out.insert(out.begin(), static_cast<char>('a' + r % 26));
        r = r / 26 - 1;
        if (r < 0) break;
    }
    return out;
}

namespace {

ChordDiagram diagram_from_pairing(const std::vector<int>& pairing) {
    const int m = static_cast<int>(pairing.size());
    std::vector<std::string> labels(m);
    int rank = 0;
    for (int p = 0; p < m; ++p) {
        if (p < pairing[p]) {
            const std::string label = canonical_label(rank++);
            labels[p] = label;
            labels[pairing[p]] = label;
        }
    }
    return ChordDiagram(pairing, std::move(labels));
}

void enumerate_rec(std::vector<int>& pairing, int next_free,
                   const std::function<void(const ChordDiagram&)>& visit) {
    const int m = static_cast<int>(pairing.size());
    while (next_free < m && pairing[next_free] != -1) ++next_free;
    if (next_free == m) {
        visit(diagram_from_pairing(pairing));
        return;
    }
    for (int q = next_free + 1; q < m; ++q) {
        if (pairing[q] != -1) continue;
        pairing[next_free] = q;
        pairing[q] = next_free;
        enumerate_rec(pairing, next_free + 1, visit);
        pairing[next_free] = -1;
        pairing[q] = -1;
    }
}

}  // namespace

void enumerate_matchings(int n, const std::function<void(const ChordDiagram&)>& visit) {
    if (n < 0) throw Error(Errc::bad_input, "chord count must be nonnegative");
    std::vector<int> pairing(2 * n, -1);
    enumerate_rec(pairing, 0, visit);
}

std::vector<ChordDiagram> all_matchings(int n) {
    std::vector<ChordDiagram> out;
    enumerate_matchings(n, [&](const ChordDiagram& d) { out.push_back(d); });
    return out;
}

std::vector<std::pair<int, int>> unique_crossing_matching(const std::vector<int>& points) {
    if (points.empty()) throw Error(Errc::empty_input, "no positions to match");
    if (points.size() % 2 != 0)
        throw Error(Errc::bad_parity, "point set must have even size");
    std::vector<int> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::bad_input, "positions must be distinct");
    if (sorted.front() < 0) throw Error(Errc::bad_input, "positions must be nonnegative");

    const int r = static_cast<int>(sorted.size()) / 2;
    std::vector<std::pair<int, int>> chords;
    chords.reserve(r);
    for (int j = 0; j < r; ++j) chords.emplace_back(sorted[j], sorted[j + r]);
    return chords;
}

ColoredDiagram gen_bicrossing_diagram(int n, const std::vector<int>& red_positions) {
    if (n < 0) throw Error(Errc::bad_input, "chord count must be nonnegative");
    const int m = 2 * n;
    std::set<int> red_set;
    for (int p : red_positions) {
        if (p < 0 || p >= m)
            throw Error(Errc::bad_input, "red position " + std::to_string(p) + " out of range");
        if (!red_set.insert(p).second)
            throw Error(Errc::bad_input, "repeated red position " + std::to_string(p));
    }
    if (red_set.size() % 2 != 0)
        throw Error(Errc::bad_parity, "red set must have even size");

    std::vector<int> blue;
    for (int p = 0; p < m; ++p)
        if (red_set.find(p) == red_set.end()) blue.push_back(p);

    struct RawChord {
        int a, b;
        Color color;
    };
    std::vector<RawChord> raw;
    raw.reserve(n);
    if (!red_set.empty())
        for (auto [a, b] : unique_crossing_matching({red_set.begin(), red_set.end()}))
            raw.push_back({a, b, Color::red});
    if (!blue.empty())
        for (auto [a, b] : unique_crossing_matching(blue))
            raw.push_back({a, b, Color::blue});
    std::sort(raw.begin(), raw.end(), [](const RawChord& x, const RawChord& y) { return x.a < y.a; });

    std::vector<int> pairing(m);
    std::vector<std::string> labels(m);
    ColoredDiagram out;
    for (int rank = 0; rank < static_cast<int>(raw.size()); ++rank) {
        const auto& c = raw[rank];
        const std::string label = canonical_label(rank);
        pairing[c.a] = c.b;
        pairing[c.b] = c.a;
        labels[c.a] = label;
        labels[c.b] = label;
        out.coloring.assignment[label] = c.color;
    }
    out.diagram = ChordDiagram(std::move(pairing), std::move(labels));
    return out;
}

ColorSequence random_color_sequence(int length, std::uint64_t seed) {
    if (length < 0 || length % 2 != 0)
        throw Error(Errc::bad_parity, "length must be even and nonnegative");
    std::mt19937 engine(static_cast<std::uint32_t>(seed));
    ColorSequence colors;
    colors.reserve(length);
    int reds = 0;
    for (int p = 0; p < length; ++p) {
        const bool red = (engine() & 1u) != 0;
        colors.push_back(red ? Color::red : Color::blue);
        if (red) ++reds;
    }
    if (reds % 2 != 0) colors.back() = opposite(colors.back());
    return colors;
}

bool bipartite_complement_bruteforce(const InterlacementGraph& g) {
    const int n = g.vertex_count();
    if (n > 12)
        throw Error(Errc::too_large, "brute-force bipartition limited to 12 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= 1u << v;

    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            const std::uint32_t cls = (mask >> u & 1u) ? mask : (~mask & all);
            if ((cls & ~adj[u] & ~(1u << u)) != 0) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace chordflip
