#include <string>
#include <vector>

#include <doctest.h>

#include "chordflip/oracle.hpp"
#include "chordflip/pipeline.hpp"
#include "helpers.hpp"

using namespace chordflip;
using testutil::thrown_code;

TEST_CASE("flip of the alternating two-chord diagram") {
    const FlipResult result = complement_representation(parse_dow("a b a b"));
    CHECK(emit_dow(result.output) == "b a a b");
    CHECK(result.certificate.window == Window{0, 2});
    CHECK(result.certificate.coloring.at("a") == Color::red);
    CHECK(result.certificate.coloring.at("b") == Color::red);
    CHECK(interlacement_graph(result.output).edge_count() == 0);
    CHECK(result.certificate.transversal_ok);
}

TEST_CASE("flip of the path example, traced end to end") {
    const ChordDiagram input = parse_dow("a b a c b d c d");
    const FlipResult result = complement_representation(input);

    CHECK(emit_dow(result.output) == "a b d b c a c d");
    CHECK(result.certificate.window == Window{2, 4});
    CHECK(result.certificate.profile == BalanceProfile{1, 1, 0, -1, -1, -1, 0, 1});
    CHECK(result.certificate.coloring.at("a") == Color::red);
    CHECK(result.certificate.coloring.at("b") == Color::red);
    CHECK(result.certificate.coloring.at("c") == Color::blue);
    CHECK(result.certificate.coloring.at("d") == Color::blue);

    CHECK(interlacement_graph(result.output).sorted_edges() ==
          std::vector<std::pair<std::string, std::string>>{{"a", "c"}, {"a", "d"}, {"b", "d"}});
    CHECK(graphs_equal(result.certificate.output_interlacement,
                       complement(result.certificate.input_interlacement)));
    CHECK(verify_certificate(input, result.output, result.certificate).ok());
}

TEST_CASE("flip refuses diagrams whose complement is not bipartite") {
    CHECK(thrown_code([] { complement_representation(parse_dow("a a b b c c")); }) ==
          Errc::not_bipartite);
}

TEST_CASE("flip of the empty diagram") {
    const FlipResult result = complement_representation(ChordDiagram{});
    CHECK(result.output == ChordDiagram{});
    CHECK(result.certificate.window == Window{0, 0});
    CHECK(result.certificate.profile.empty());
    CHECK(verify_certificate(ChordDiagram{}, result.output, result.certificate).ok());
}

TEST_CASE("verify_certificate reports the first failed clause") {
    const ChordDiagram input = parse_dow("a b a b");
    const FlipResult result = complement_representation(input);

    SUBCASE("a tampered window start breaks the reversal clause") {
        FlipCertificate cert = result.certificate;
        cert.window.start = 1;
        // Both chords are red, so the shifted window still bisects and is
        // still transversal; the reversal no longer matches.
        const VerifyResult verdict = verify_certificate(input, result.output, cert);
        CHECK(verdict.failed_clause == CertClause::arc_reversal);
    }

    SUBCASE("a miscolored chord breaks the clique clause") {
        const ChordDiagram nested = parse_dow("a a b b");
        FlipCertificate cert = result.certificate;  // colors a and b both red
        const VerifyResult verdict =
            verify_certificate(nested, reverse_arc(nested, cert.window), cert);
        CHECK(verdict.failed_clause == CertClause::coloring_classes);
    }

    SUBCASE("an incomplete coloring breaks the clique clause") {
        FlipCertificate cert = result.certificate;
        cert.coloring.assignment.erase("b");
        CHECK(verify_certificate(input, result.output, cert).failed_clause ==
              CertClause::coloring_classes);
    }

    SUBCASE("a non-bisecting window is caught") {
        const ChordDiagram p4 = parse_dow("a b a c b d c d");
        const FlipResult flipped = complement_representation(p4);
        FlipCertificate cert = flipped.certificate;
        cert.window.start = 0;  // window {0..3} holds three red endpoints
        CHECK(verify_certificate(p4, flipped.output, cert).failed_clause ==
              CertClause::window_bisection);
    }

    SUBCASE("a tampered output word is caught") {
        const VerifyResult verdict =
            verify_certificate(input, parse_dow("a a b b"), result.certificate);
        CHECK(verdict.failed_clause == CertClause::arc_reversal);
    }

    SUBCASE("a window of the wrong length cannot bisect") {
        // A window that bisects both classes always has length n and, for
        // valid colorings, is then transversal (each class pairwise crosses
        // and is cut in half); a short window fails at the bisection clause.
        const ChordDiagram d = parse_dow("a b c d a b c d");
        const FlipResult flipped = complement_representation(d);
        FlipCertificate cert = flipped.certificate;
        cert.window = Window{0, 2};
        const VerifyResult verdict = verify_certificate(d, flipped.output, cert);
        CHECK(verdict.failed_clause == CertClause::window_bisection);
    }
}

TEST_CASE("certificate JSON round-trips") {
    const ChordDiagram input = parse_dow("a b a c b d c d");
    const FlipResult result = complement_representation(input);
    const FlipCertificate back = certificate_from_json(certificate_to_json(result.certificate));
    CHECK(back.coloring == result.certificate.coloring);
    CHECK(back.window == result.certificate.window);
    CHECK(back.profile == result.certificate.profile);
    CHECK(graphs_equal(back.input_interlacement, result.certificate.input_interlacement));
    CHECK(graphs_equal(back.output_interlacement, result.certificate.output_interlacement));
    CHECK(verify_certificate(input, result.output, back).ok());

    CHECK(thrown_code([] { certificate_from_json("{}"); }) == Errc::bad_input);
    CHECK(thrown_code([] { certificate_from_json("nope"); }) == Errc::bad_input);
}

TEST_CASE("clause letters and descriptions") {
    CHECK(std::string(clause_letter(CertClause::arc_reversal)) == "d");
    CHECK(std::string(clause_letter(CertClause::none)) == "-");
    CHECK_FALSE(clause_description(CertClause::window_bisection).empty());
}

TEST_CASE("theorem property over all small diagrams") {
    for (int n = 0; n <= 4; ++n) {
        for (const ChordDiagram& d : all_matchings(n)) {
            const InterlacementGraph g = interlacement_graph(d);
            if (!bipartite_complement_bruteforce(g)) {
                CHECK(thrown_code([&] { complement_representation(d); }) == Errc::not_bipartite);
                continue;
            }
            const FlipResult result = complement_representation(d);
            CHECK(graphs_equal(interlacement_graph(result.output), complement(g)));
            CHECK(verify_certificate(d, result.output, result.certificate).ok());
        }
    }
}

TEST_CASE("double application restores the interlacement when it applies") {
    // The second run needs the ORIGINAL interlacement graph to be bipartite
    // (its complement is the second input's "G"), which is not implied by the
    // first run's success; the sweep guards on it.
    int exercised = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const ChordDiagram& d : all_matchings(n)) {
            const InterlacementGraph g = interlacement_graph(d);
            if (!bipartite_complement_bruteforce(g)) continue;
            const FlipResult once = complement_representation(d);
            if (!bipartite_complement_bruteforce(interlacement_graph(once.output))) continue;
            const FlipResult twice = complement_representation(once.output);
            CHECK(graphs_equal(interlacement_graph(twice.output), g));
            ++exercised;
        }
    }
    CHECK(exercised > 0);
}
