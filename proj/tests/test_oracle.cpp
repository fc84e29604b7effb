#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "chordflip/oracle.hpp"
#include "chordflip/pipeline.hpp"
#include "helpers.hpp"

using namespace chordflip;
using testutil::double_factorial_odd;
using testutil::thrown_code;

namespace {

// All perfect matchings on an arbitrary point set, by always pairing the
// smallest remaining point; the independent ground truth for uniqueness.
void matchings_on_points(std::vector<int> points,
                         const std::function<void(const std::vector<std::pair<int, int>>&)>& visit,
                         std::vector<std::pair<int, int>>& acc) {
    if (points.empty()) {
        visit(acc);
        return;
    }
    const int first = points.front();
    for (std::size_t k = 1; k < points.size(); ++k) {
        std::vector<int> rest;
        for (std::size_t t = 1; t < points.size(); ++t)
            if (t != k) rest.push_back(points[t]);
        acc.emplace_back(first, points[k]);
        matchings_on_points(rest, visit, acc);
        acc.pop_back();
    }
}

bool pairwise_crossing(const std::vector<std::pair<int, int>>& chords) {
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j)
            if (!endpoints_cross(chords[i].first, chords[i].second, chords[j].first,
                                 chords[j].second))
                return false;
    return true;
}

}  // namespace

TEST_CASE("canonical labels") {
    CHECK(canonical_label(0) == "a");
    CHECK(canonical_label(25) == "z");
    CHECK(canonical_label(26) == "aa");
    CHECK(canonical_label(27) == "ab");
}

TEST_CASE("enumerate_matchings yields every pairing exactly once") {
    CHECK(all_matchings(0).size() == 1);
    CHECK(all_matchings(0)[0] == ChordDiagram{});
    CHECK(emit_dow(all_matchings(1)[0]) == "a a");

    std::set<std::string> words;
    for (const ChordDiagram& d : all_matchings(2)) words.insert(emit_dow(d));
    CHECK(words == std::set<std::string>{"a a b b", "a b a b", "a b b a"});

    for (int n = 3; n <= 5; ++n) {
        std::set<std::string> seen;
        enumerate_matchings(n, [&](const ChordDiagram& d) { seen.insert(emit_dow(d)); });
        CHECK(static_cast<long long>(seen.size()) == double_factorial_odd(n));
    }
}

TEST_CASE("unique_crossing_matching pairs across the sorted midpoint") {
    using Pairs = std::vector<std::pair<int, int>>;
    CHECK(unique_crossing_matching({0, 1, 2, 3}) == Pairs{{0, 2}, {1, 3}});
    CHECK(unique_crossing_matching({0, 1, 3, 4}) == Pairs{{0, 3}, {1, 4}});
    CHECK(unique_crossing_matching({0, 2}) == Pairs{{0, 2}});
    CHECK(unique_crossing_matching({4, 0, 1, 3}) == Pairs{{0, 3}, {1, 4}});

    CHECK(thrown_code([] { unique_crossing_matching({}); }) == Errc::empty_input);
    CHECK(thrown_code([] { unique_crossing_matching({0, 1, 2}); }) == Errc::bad_parity);
    CHECK(thrown_code([] { unique_crossing_matching({0, 0}); }) == Errc::bad_input);
    CHECK(thrown_code([] { unique_crossing_matching({-1, 2}); }) == Errc::bad_input);
}

TEST_CASE("the crossing matching is the only pairwise-crossing one (to 8 points)") {
    // Ambient cycle of 8 positions; every even nonempty subset.
    for (unsigned mask = 1; mask < (1u << 8); ++mask) {
        std::vector<int> points;
        for (int p = 0; p < 8; ++p)
            if (mask >> p & 1u) points.push_back(p);
        if (points.size() % 2 != 0) continue;

        const auto expected = unique_crossing_matching(points);
        CHECK(pairwise_crossing(expected));

        int crossing_count = 0;
        std::vector<std::pair<int, int>> acc;
        matchings_on_points(points, [&](const std::vector<std::pair<int, int>>& matching) {
            if (pairwise_crossing(matching)) {
                ++crossing_count;
                CHECK(matching == expected);
            }
        }, acc);
        CHECK(crossing_count == 1);
    }
}

TEST_CASE("gen_bicrossing_diagram builds the two crossing classes") {
    SUBCASE("one chord per class") {
        const ColoredDiagram cd = gen_bicrossing_diagram(2, {0, 2});
        CHECK(emit_dow(cd.diagram) == "a b a b");
        CHECK(cd.coloring.at("a") == Color::red);
        CHECK(cd.coloring.at("b") == Color::blue);
    }

    SUBCASE("all positions red") {
        const ColoredDiagram cd = gen_bicrossing_diagram(2, {0, 1, 2, 3});
        CHECK(emit_dow(cd.diagram) == "a b a b");
        CHECK(cd.coloring.at("a") == Color::red);
        CHECK(cd.coloring.at("b") == Color::red);
    }

    SUBCASE("the three-chord example") {
        const ColoredDiagram cd = gen_bicrossing_diagram(3, {0, 1, 3, 4});
        CHECK(emit_dow(cd.diagram) == "a b c a b c");
        CHECK(cd.diagram.chord("a") == Chord{"a", 0, 3});
        CHECK(cd.diagram.chord("b") == Chord{"b", 1, 4});
        CHECK(cd.diagram.chord("c") == Chord{"c", 2, 5});
        CHECK(cd.coloring.at("a") == Color::red);
        CHECK(cd.coloring.at("b") == Color::red);
        CHECK(cd.coloring.at("c") == Color::blue);
        // The red pair crosses, and each class is a clique in the interlacement.
        CHECK(chords_cross(cd.diagram, "a", "b"));
    }

    SUBCASE("empty diagram") {
        CHECK(gen_bicrossing_diagram(0, {}).diagram == ChordDiagram{});
    }

    SUBCASE("parameter validation") {
        CHECK(thrown_code([] { gen_bicrossing_diagram(2, {0}); }) == Errc::bad_parity);
        CHECK(thrown_code([] { gen_bicrossing_diagram(2, {0, 4}); }) == Errc::bad_input);
        CHECK(thrown_code([] { gen_bicrossing_diagram(2, {1, 1}); }) == Errc::bad_input);
    }
}

TEST_CASE("generated diagrams are valid pipeline inputs (n to 4)") {
    for (int n = 0; n <= 4; ++n) {
        for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
            std::vector<int> red_positions;
            for (int p = 0; p < 2 * n; ++p)
                if (mask >> p & 1u) red_positions.push_back(p);
            if (red_positions.size() % 2 != 0) continue;

            const ColoredDiagram cd = gen_bicrossing_diagram(n, red_positions);
            for (Color c : {Color::red, Color::blue}) {
                const auto cls = cd.coloring.labels_of(c);
                for (std::size_t i = 0; i < cls.size(); ++i)
                    for (std::size_t j = i + 1; j < cls.size(); ++j)
                        CHECK(chords_cross(cd.diagram, cls[i], cls[j]));
            }
            const FlipResult result = complement_representation(cd.diagram);
            CHECK(verify_certificate(cd.diagram, result.output, result.certificate).ok());
        }
    }
}

TEST_CASE("generator completeness: red sets reach every valid colored diagram (n to 4)") {
    for (int n = 1; n <= 4; ++n) {
        // Key: word plus the induced position colors, which identifies a
        // colored diagram independent of label names.
        std::set<std::string> via_filter;
        for (const ChordDiagram& d : all_matchings(n)) {
            const auto& labels = d.labels();
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                ChordColoring coloring;
                for (int i = 0; i < n; ++i)
                    coloring.assignment[labels[i]] =
                        (mask >> i & 1u) ? Color::red : Color::blue;
                bool valid = true;
                for (std::size_t i = 0; i < labels.size() && valid; ++i)
                    for (std::size_t j = i + 1; j < labels.size() && valid; ++j)
                        if (coloring.at(labels[i]) == coloring.at(labels[j]) &&
                            !chords_cross(d, labels[i], labels[j]))
                            valid = false;
                if (valid)
                    via_filter.insert(emit_dow(d) + "|" +
                                      to_string(induced_color_sequence(d, coloring)));
            }
        }

        std::set<std::string> via_generator;
        for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
            std::vector<int> red_positions;
            for (int p = 0; p < 2 * n; ++p)
                if (mask >> p & 1u) red_positions.push_back(p);
            if (red_positions.size() % 2 != 0) continue;
            const ColoredDiagram cd = gen_bicrossing_diagram(n, red_positions);
            const bool inserted =
                via_generator
                    .insert(emit_dow(cd.diagram) + "|" +
                            to_string(induced_color_sequence(cd.diagram, cd.coloring)))
                    .second;
            CHECK(inserted);  // distinct red sets give distinct colored diagrams
        }

        CHECK(via_filter == via_generator);
    }
}

TEST_CASE("random_color_sequence is deterministic with even red count") {
    CHECK(to_string(random_color_sequence(4, 0)) == "BRRB");
    CHECK(random_color_sequence(0, 123).empty());
    CHECK(random_color_sequence(8, 7) == random_color_sequence(8, 7));
    CHECK(thrown_code([] { random_color_sequence(3, 0); }) == Errc::bad_parity);

    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const ColorSequence colors = random_color_sequence(12, seed);
        CHECK(std::count(colors.begin(), colors.end(), Color::red) % 2 == 0);
    }
}

TEST_CASE("bipartite_complement_bruteforce") {
    CHECK(bipartite_complement_bruteforce(InterlacementGraph::build({"a", "b"}, {{"a", "b"}})));
    CHECK_FALSE(
        bipartite_complement_bruteforce(InterlacementGraph{std::vector<std::string>{"a", "b", "c"}}));
    CHECK(bipartite_complement_bruteforce(
        InterlacementGraph::build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}})));
    CHECK(bipartite_complement_bruteforce(InterlacementGraph{}));

    std::vector<std::string> big;
    for (int i = 0; i < 13; ++i) big.push_back(canonical_label(i));
    CHECK(thrown_code([&] { bipartite_complement_bruteforce(InterlacementGraph{big}); }) ==
          Errc::too_large);
}
