#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordflip/color.hpp"
#include "chordflip/error.hpp"

namespace chordflip {

// Undirected simple graph over chord labels (the intersection graph of a
// chord diagram, or any graph derived from one). Vertex order is fixed at
// construction and drives the deterministic two-coloring below; for
// interlacement graphs it is the labels' first-occurrence order.
class InterlacementGraph {
public:
    InterlacementGraph() = default;

    // Edgeless graph on the given labels, in the given order.
    explicit InterlacementGraph(std::vector<std::string> vertex_labels);

    static InterlacementGraph build(std::vector<std::string> vertex_labels,
                                    const std::vector<std::pair<std::string, std::string>>& edges);
    static InterlacementGraph build_indexed(std::vector<std::string> vertex_labels,
                                            const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }

    bool has_vertex(const std::string& label) const;
    int index_of(const std::string& label) const;  // Errc::unknown_label if absent

    bool adjacent(int u, int v) const;
    bool adjacent(const std::string& u, const std::string& v) const;
    const std::vector<int>& neighbors(int u) const;  // sorted vertex indices
    int edge_count() const;

    // Edges as label pairs, each pair lexicographically ordered, whole list sorted.
    std::vector<std::pair<std::string, std::string>> sorted_edges() const;

private:
    void add_edge(int u, int v);
    void finalize();

    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
};

// Red/blue assignment to chord labels. A pipeline-valid coloring makes each
// color class a pairwise-crossing family (a clique in the interlacement graph).
struct ChordColoring {
    std::map<std::string, Color> assignment;

    bool contains(const std::string& label) const {
        return assignment.find(label) != assignment.end();
    }
    Color at(const std::string& label) const;  // Errc::unknown_label
    std::vector<std::string> labels_of(Color c) const;

    friend bool operator==(const ChordColoring&, const ChordColoring&) = default;
};

// Same vertex set; u~v in the output iff u != v and not u~v in g.
InterlacementGraph complement(const InterlacementGraph& g);

// Colors vertices so that every same-colored pair is adjacent in g, i.e. a
// proper 2-coloring of complement(g). Deterministic: vertices are processed
// in vertex order, BFS runs on the complement component by component, each
// component's root is red and layers alternate. The complement is never
// materialized: a pool of unvisited vertices is swept and every pooled vertex
// not adjacent to the current one joins the next layer, which is O(V+E).
// Throws Errc::not_bipartite when complement(g) has an odd cycle.
ChordColoring two_color_complement(const InterlacementGraph& g);

// Label-preserving equality (identical vertex sets and adjacency), not isomorphism.
bool graphs_equal(const InterlacementGraph& a, const InterlacementGraph& b);

// DOT output: undirected, vertices sorted by label, edges lexicographically.
std::string graph_to_dot(const InterlacementGraph& g);

// JSON adjacency-list object: {"a": ["b", ...], ...}, keys and lists sorted.
std::string graph_to_json(const InterlacementGraph& g);
InterlacementGraph graph_from_json(const std::string& text);  // Errc::bad_input

}  // namespace chordflip
