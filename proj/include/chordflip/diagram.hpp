#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordflip/error.hpp"
#include "chordflip/graph.hpp"

namespace chordflip {

// A chord identified by its label, endpoints as positions with a < b.
struct Chord {
    std::string label;
    int a = 0;
    int b = 0;

    friend bool operator==(const Chord&, const Chord&) = default;
};

// A run of consecutive cyclic positions {start, start+1, ..., start+length-1}.
// The discrete stand-in for a line splitting the circle: window interior vs
// exterior are the two open half-planes. The empty window (length 0) only
// arises for the empty diagram.
struct Window {
    int start = 0;
    int length = 0;

    bool contains(int position, int num_positions) const;

    friend bool operator==(const Window&, const Window&) = default;
};

std::string to_string(const Window& w);  // "start:length"
Window parse_window(std::string_view text);

enum class BoundaryStatus { inside, outside, crossing };

// Chord diagram on positions 0..2n-1: a fixed-point-free involution pairing
// partner positions, plus a label per chord (each label at exactly two
// partner positions). Immutable after construction; all operations on it are
// pure functions.
class ChordDiagram {
public:
    ChordDiagram() = default;

    // pairing[p] is the partner position of p; position_labels[p] the owning
    // chord's label. Throws Errc::invalid_diagram if the involution or the
    // label assignment is malformed.
    ChordDiagram(std::vector<int> pairing, std::vector<std::string> position_labels);

    int num_chords() const { return static_cast<int>(pairing_.size()) / 2; }
    int num_positions() const { return static_cast<int>(pairing_.size()); }

    int partner(int position) const;
    const std::string& label_at(int position) const;

    bool has_label(const std::string& label) const;
    Chord chord(const std::string& label) const;  // Errc::unknown_label

    // Labels in first-occurrence order (equivalently by smaller endpoint).
    const std::vector<std::string>& labels() const { return label_order_; }
    std::vector<Chord> chords() const;

    const std::vector<int>& pairing() const { return pairing_; }
    const std::vector<std::string>& position_labels() const { return position_labels_; }

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

private:
    std::vector<int> pairing_;
    std::vector<std::string> position_labels_;
    std::vector<std::string> label_order_;
    std::map<std::string, int> first_position_;
};

// Parses a whitespace-separated double occurrence word ("a b a b").
// Errors: Errc::bad_multiplicity when some token does not occur exactly twice,
// Errc::odd_length for an odd token count (subsumed by the multiplicity check,
// since an odd total forces a token of odd multiplicity).
ChordDiagram parse_dow(std::string_view text);

// Labels in position order, single-space separated. parse_dow(emit_dow(d)) == d.
std::string emit_dow(const ChordDiagram& d);

// Crossing of two endpoint pairs by cyclic interleaving: exactly one of
// {b1, b2} lies strictly between a1 and a2 in index order. The ambient cycle
// size does not matter, only the relative order of the four positions.
bool endpoints_cross(int a1, int a2, int b1, int b2);

bool chords_cross(const ChordDiagram& d, const std::string& u, const std::string& v);

// Vertices are the chord labels in first-occurrence order, u~v iff the chords cross.
InterlacementGraph interlacement_graph(const ChordDiagram& d);

// Reverses the cyclic order of the positions inside w and leaves the rest
// fixed; chord labels travel with their endpoints. Involutive for fixed w.
ChordDiagram reverse_arc(const ChordDiagram& d, const Window& w);

// inside: both endpoints in w; outside: neither; crossing: exactly one.
BoundaryStatus boundary_status(const ChordDiagram& d, const Window& w, const std::string& label);

// JSON form {"n": int, "word": [labels]}, plus "coloring" {label: "R"|"B"}
// when a coloring is given.
std::string diagram_to_json(const ChordDiagram& d, const ChordColoring* coloring = nullptr);

struct DiagramDocument {
    ChordDiagram diagram;
    std::optional<ChordColoring> coloring;
};

DiagramDocument diagram_from_json(const std::string& text);  // Errc::bad_input

// Autodetects the format: leading '{' means JSON, anything else is word text.
DiagramDocument read_diagram(const std::string& text);

}  // namespace chordflip
