#include "chordflip/graph.hpp"

#include <algorithm>
#include <utility>

#include <nlohmann/json.hpp>

namespace chordflip {

InterlacementGraph::InterlacementGraph(std::vector<std::string> vertex_labels)
    : labels_(std::move(vertex_labels)), adj_(labels_.size()) {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], i);
        if (!inserted)
            throw Error(Errc::bad_input, "duplicate vertex label '" + labels_[i] + "'");
    }
}

InterlacementGraph InterlacementGraph::build(
    std::vector<std::string> vertex_labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
    InterlacementGraph g(std::move(vertex_labels));
    for (const auto& [u, v] : edges) g.add_edge(g.index_of(u), g.index_of(v));
    g.finalize();
    return g;
}

InterlacementGraph InterlacementGraph::build_indexed(std::vector<std::string> vertex_labels,
                                                     const std::vector<std::pair<int, int>>& edges) {
    InterlacementGraph g(std::move(vertex_labels));
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    g.finalize();
    return g;
}

bool InterlacementGraph::has_vertex(const std::string& label) const {
    return index_.find(label) != index_.end();
}

int InterlacementGraph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw Error(Errc::unknown_label, "unknown vertex label '" + label + "'");
    return it->second;
}

bool InterlacementGraph::adjacent(int u, int v) const {
    const auto& row = adj_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
}

bool InterlacementGraph::adjacent(const std::string& u, const std::string& v) const {
    return adjacent(index_of(u), index_of(v));
}

const std::vector<int>& InterlacementGraph::neighbors(int u) const {
    return adj_.at(u);
}

int InterlacementGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.size();
    return static_cast<int>(total / 2);
}

std::vector<std::pair<std::string, std::string>> InterlacementGraph::sorted_edges() const {
    std::vector<std::pair<std::string, std::string>> edges;
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) {
                auto e = std::minmax(labels_[u], labels_[v]);
                edges.emplace_back(e.first, e.second);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

void InterlacementGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw Error(Errc::bad_input, "edge endpoint out of range");
    if (u == v) throw Error(Errc::bad_input, "self-loops are not allowed");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

void InterlacementGraph::finalize() {
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
}

Color ChordColoring::at(const std::string& label) const {
    auto it = assignment.find(label);
    if (it == assignment.end())
        throw Error(Errc::unknown_label, "no color assigned to label '" + label + "'");
    return it->second;
}

std::vector<std::string> ChordColoring::labels_of(Color c) const {
    std::vector<std::string> out;
    for (const auto& [label, color] : assignment)
        if (color == c) out.push_back(label);
    return out;
}

InterlacementGraph complement(const InterlacementGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> row(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) row[v] = 1;
        for (int v = u + 1; v < n; ++v)
            if (!row[v]) edges.emplace_back(u, v);
        for (int v : g.neighbors(u)) row[v] = 0;
    }
    return InterlacementGraph::build_indexed(g.vertex_labels(), edges);
}

ChordColoring two_color_complement(const InterlacementGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);

    // Pool of unvisited vertices, kept in vertex order. Sweeping the pool and
    // keeping only the current vertex's g-neighbors is a BFS step on the
    // complement; every kept vertex is charged to an edge of g.
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;

    std::vector<char> marked(n, 0);
    std::vector<int> queue;
    queue.reserve(n);
    std::size_t head = 0;

    while (!pool.empty()) {
        const int root = pool.front();
        pool.erase(pool.begin());
        color[root] = 0;  // component roots are red
        queue.push_back(root);

        while (head < queue.size()) {
            const int u = queue[head++];
            for (int v : g.neighbors(u)) marked[v] = 1;
            std::vector<int> kept;
            kept.reserve(pool.size());
            for (int w : pool) {
                if (marked[w]) {
                    kept.push_back(w);
                } else {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                }
            }
            pool.swap(kept);
            for (int v : g.neighbors(u)) marked[v] = 0;
        }
    }

    // The layering is proper iff each color class is a clique in g: count each
    // vertex's same-colored neighbors instead of materializing the classes.
    int class_size[2] = {0, 0};
    for (int u = 0; u < n; ++u) ++class_size[color[u]];
    for (int u = 0; u < n; ++u) {
        int same = 0;
        for (int v : g.neighbors(u))
            if (color[v] == color[u]) ++same;
        if (same != class_size[color[u]] - 1)
            throw Error(Errc::not_bipartite,
                        "no red/blue coloring with pairwise-crossing classes exists "
                        "(the complement has an odd cycle)");
    }

    ChordColoring result;
    for (int u = 0; u < n; ++u)
        result.assignment[g.vertex_labels()[u]] = color[u] == 0 ? Color::red : Color::blue;
    return result;
}

bool graphs_equal(const InterlacementGraph& a, const InterlacementGraph& b) {
    std::vector<std::string> va = a.vertex_labels();
    std::vector<std::string> vb = b.vertex_labels();
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) return false;
    return a.sorted_edges() == b.sorted_edges();
}

namespace {

std::string dot_quote(const std::string& label) {
    std::string out = "\"";
    for (char ch : label) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string graph_to_dot(const InterlacementGraph& g) {
    std::vector<std::string> vertices = g.vertex_labels();
    std::sort(vertices.begin(), vertices.end());
    std::string out = "graph {\n";
    for (const auto& v : vertices) out += "  " + dot_quote(v) + ";\n";
    for (const auto& [u, v] : g.sorted_edges())
        out += "  " + dot_quote(u) + " -- " + dot_quote(v) + ";\n";
    out += "}\n";
    return out;
}

std::string graph_to_json(const InterlacementGraph& g) {
    nlohmann::json doc = nlohmann::json::object();
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<std::string> row;
        for (int v : g.neighbors(u)) row.push_back(g.vertex_labels()[v]);
        std::sort(row.begin(), row.end());
        doc[g.vertex_labels()[u]] = std::move(row);
    }
    return doc.dump(2);
}

InterlacementGraph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::bad_input, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw Error(Errc::bad_input, "graph JSON must be an adjacency object");

    std::vector<std::string> labels;
    for (const auto& [label, row] : doc.items()) {
        labels.push_back(label);
        if (!row.is_array())
            throw Error(Errc::bad_input, "adjacency of '" + label + "' must be an array");
    }

    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& item : doc.items()) {
        const std::string& label = item.key();
        for (const auto& entry : item.value()) {
            if (!entry.is_string())
                throw Error(Errc::bad_input, "adjacency entries must be strings");
            const std::string other = entry.get<std::string>();
            if (other == label)
                throw Error(Errc::bad_input, "self-loop on '" + label + "'");
            if (!doc.contains(other))
                throw Error(Errc::bad_input, "edge to unknown vertex '" + other + "'");
            if (!std::any_of(doc[other].begin(), doc[other].end(),
                             [&](const nlohmann::json& e) {
                                 return e.is_string() && e.get<std::string>() == label;
                             }))
                throw Error(Errc::bad_input,
                            "asymmetric adjacency between '" + label + "' and '" + other + "'");
            if (label < other) edges.emplace_back(label, other);
        }
    }
    return InterlacementGraph::build(std::move(labels), edges);
}

}  // namespace chordflip
