#pragma once

#include <string>

#include "chordflip/bisector.hpp"
#include "chordflip/diagram.hpp"
#include "chordflip/graph.hpp"

namespace chordflip {

// Audit record of a flip run: everything needed to recheck that the output
// diagram represents the complement of the input's interlacement graph.
struct FlipCertificate {
    ChordColoring coloring;
    Window window;
    BalanceProfile profile;
    bool transversal_ok = false;
    InterlacementGraph input_interlacement;
    InterlacementGraph output_interlacement;
};

struct FlipResult {
    ChordDiagram output;
    FlipCertificate certificate;
};

// The full flip: color the chords so same-colored chords pairwise cross,
// find a window of n consecutive positions bisecting both color classes,
// check the window crosses every chord, and reverse it. The output diagram's
// interlacement graph is exactly the complement of the input's.
//
// Throws Errc::not_bipartite when no valid coloring exists (the complement
// of the input's interlacement graph is not bipartite) and
// Errc::transversal_violation if the bisecting window fails to cross every
// chord, which indicates a bug rather than a bad input.
FlipResult complement_representation(const ChordDiagram& d);

enum class CertClause {
    none,
    coloring_classes,           // (a) color classes are cliques in the input interlacement
    window_bisection,           // (b) window holds exactly half of each class's endpoints
    transversality,             // (c) window crosses every chord
    arc_reversal,               // (d) reversing the window reproduces the output diagram
    interlacement_complement,   // (e) output interlacement equals the complement
};

const char* clause_letter(CertClause c);
std::string clause_description(CertClause c);

struct VerifyResult {
    CertClause failed_clause = CertClause::none;

    bool ok() const { return failed_clause == CertClause::none; }
};

// Independent recheck of a certificate against the input and output diagrams.
// Returns the first failed clause in (a)..(e) order; never throws on a bad
// certificate, only reports it.
VerifyResult verify_certificate(const ChordDiagram& input, const ChordDiagram& output,
                                const FlipCertificate& cert);

// JSON with keys "coloring" (label -> "R"/"B"), "window" ({"start","length"}),
// "profile" (integer array), "input_graph"/"output_graph" (sorted adjacency
// lists). transversal_ok is not serialized; verification recomputes it.
std::string certificate_to_json(const FlipCertificate& cert);
FlipCertificate certificate_from_json(const std::string& text);  // Errc::bad_input

}  // namespace chordflip
