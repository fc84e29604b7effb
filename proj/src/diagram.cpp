#include "chordflip/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <utility>

#include <nlohmann/json.hpp>

namespace chordflip {

namespace {

bool valid_label(const std::string& label) {
    if (label.empty()) return false;
    return std::none_of(label.begin(), label.end(),
                        [](unsigned char ch) { return std::isspace(ch); });
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) tokens.emplace_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

int normalize_start(int start, int m) {
    int s = start % m;
    return s < 0 ? s + m : s;
}

}  // namespace

bool Window::contains(int position, int num_positions) const {
    if (num_positions <= 0 || length <= 0) return false;
    int off = (position - start) % num_positions;
    if (off < 0) off += num_positions;
    return off < length;
}

std::string to_string(const Window& w) {
    return std::to_string(w.start) + ":" + std::to_string(w.length);
}

Window parse_window(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::bad_input, "window must be start:length");
    Window w;
    auto head = text.substr(0, colon);
    auto tail = text.substr(colon + 1);
    auto r1 = std::from_chars(head.data(), head.data() + head.size(), w.start);
    auto r2 = std::from_chars(tail.data(), tail.data() + tail.size(), w.length);
    if (r1.ec != std::errc{} || r1.ptr != head.data() + head.size() ||
        r2.ec != std::errc{} || r2.ptr != tail.data() + tail.size())
        throw Error(Errc::bad_input, "window must be start:length with integer fields");
    return w;
}

ChordDiagram::ChordDiagram(std::vector<int> pairing, std::vector<std::string> position_labels)
    : pairing_(std::move(pairing)), position_labels_(std::move(position_labels)) {
    const int m = static_cast<int>(pairing_.size());
    if (position_labels_.size() != pairing_.size() || m % 2 != 0)
        throw Error(Errc::invalid_diagram, "pairing and labels must have equal even length");
    for (int p = 0; p < m; ++p) {
        const int q = pairing_[p];
        if (q < 0 || q >= m || q == p || pairing_[q] != p)
            throw Error(Errc::invalid_diagram,
                        "pairing is not a fixed-point-free involution at position " +
                            std::to_string(p));
        if (position_labels_[p] != position_labels_[q])
            throw Error(Errc::invalid_diagram,
                        "partner positions carry different labels at position " +
                            std::to_string(p));
        if (!valid_label(position_labels_[p]))
            throw Error(Errc::invalid_diagram,
                        "empty or whitespace-bearing label at position " + std::to_string(p));
    }
    for (int p = 0; p < m; ++p) {
        const std::string& label = position_labels_[p];
        auto [it, inserted] = first_position_.emplace(label, p);
        if (inserted) {
            label_order_.push_back(label);
        } else if (it->second != pairing_[p]) {
            throw Error(Errc::invalid_diagram, "label '" + label + "' used by two chords");
        }
    }
}

int ChordDiagram::partner(int position) const {
    if (position < 0 || position >= num_positions())
        throw Error(Errc::invalid_diagram, "position out of range: " + std::to_string(position));
    return pairing_[position];
}

const std::string& ChordDiagram::label_at(int position) const {
    if (position < 0 || position >= num_positions())
        throw Error(Errc::invalid_diagram, "position out of range: " + std::to_string(position));
    return position_labels_[position];
}

bool ChordDiagram::has_label(const std::string& label) const {
    return first_position_.find(label) != first_position_.end();
}

Chord ChordDiagram::chord(const std::string& label) const {
    auto it = first_position_.find(label);
    if (it == first_position_.end())
        throw Error(Errc::unknown_label, "unknown chord label '" + label + "'");
    const int a = it->second;
    return Chord{label, a, pairing_[a]};
}

std::vector<Chord> ChordDiagram::chords() const {
    std::vector<Chord> out;
    out.reserve(label_order_.size());
    for (const auto& label : label_order_) out.push_back(chord(label));
    return out;
}

ChordDiagram parse_dow(std::string_view text) {
    const std::vector<std::string> tokens = tokenize(text);
    std::map<std::string, std::vector<int>> occurrences;
    for (int p = 0; p < static_cast<int>(tokens.size()); ++p)
        occurrences[tokens[p]].push_back(p);
    // An odd token count always entails a token of odd multiplicity, so the
    // multiplicity check subsumes the length check.
    for (const auto& [token, positions] : occurrences) {
        if (positions.size() != 2)
            throw Error(Errc::bad_multiplicity,
                        "label '" + token + "' occurs " + std::to_string(positions.size()) +
                            " times, expected exactly 2");
    }
    if (tokens.size() % 2 != 0)
        throw Error(Errc::odd_length, "odd number of tokens");
    std::vector<int> pairing(tokens.size());
    for (const auto& [token, positions] : occurrences) {
        pairing[positions[0]] = positions[1];
        pairing[positions[1]] = positions[0];
    }
    return ChordDiagram(std::move(pairing), tokens);
}

std::string emit_dow(const ChordDiagram& d) {
    std::string out;
    for (int p = 0; p < d.num_positions(); ++p) {
        if (p > 0) out += ' ';
        out += d.label_at(p);
    }
    return out;
}

bool endpoints_cross(int a1, int a2, int b1, int b2) {
    if (a1 > a2) std::swap(a1, a2);
    const bool b1_inside = a1 < b1 && b1 < a2;
    const bool b2_inside = a1 < b2 && b2 < a2;
    return b1_inside != b2_inside;
}

bool chords_cross(const ChordDiagram& d, const std::string& u, const std::string& v) {
    const Chord cu = d.chord(u);
    const Chord cv = d.chord(v);
    return endpoints_cross(cu.a, cu.b, cv.a, cv.b);
}

InterlacementGraph interlacement_graph(const ChordDiagram& d) {
    const std::vector<Chord> chords = d.chords();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j)
            if (endpoints_cross(chords[i].a, chords[i].b, chords[j].a, chords[j].b))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return InterlacementGraph::build_indexed(d.labels(), edges);
}

ChordDiagram reverse_arc(const ChordDiagram& d, const Window& w) {
    const int m = d.num_positions();
    if (m == 0 || w.length <= 1) return d;
    if (w.length > m)
        throw Error(Errc::bad_input, "window length exceeds the number of positions");
    const int start = normalize_start(w.start, m);

    std::vector<int> rho(m);
    std::iota(rho.begin(), rho.end(), 0);
    for (int t = 0; t < w.length; ++t)
        rho[(start + t) % m] = (start + w.length - 1 - t) % m;

    std::vector<int> pairing(m);
    std::vector<std::string> labels(m);
    for (int p = 0; p < m; ++p) {
        pairing[rho[p]] = rho[d.partner(p)];
        labels[rho[p]] = d.label_at(p);
    }
    return ChordDiagram(std::move(pairing), std::move(labels));
}

BoundaryStatus boundary_status(const ChordDiagram& d, const Window& w, const std::string& label) {
    const Chord c = d.chord(label);
    const int m = d.num_positions();
    const int inside = (w.contains(c.a, m) ? 1 : 0) + (w.contains(c.b, m) ? 1 : 0);
    if (inside == 2) return BoundaryStatus::inside;
    if (inside == 0) return BoundaryStatus::outside;
    return BoundaryStatus::crossing;
}

std::string diagram_to_json(const ChordDiagram& d, const ChordColoring* coloring) {
    nlohmann::json doc;
    doc["n"] = d.num_chords();
    doc["word"] = d.position_labels();
    if (coloring != nullptr) {
        nlohmann::json colors = nlohmann::json::object();
        for (const auto& [label, color] : coloring->assignment)
            colors[label] = std::string(1, color_char(color));
        doc["coloring"] = std::move(colors);
    }
    return doc.dump(2);
}

DiagramDocument diagram_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::bad_input, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("word"))
        throw Error(Errc::bad_input, "diagram JSON needs keys \"n\" and \"word\"");
    if (!doc["n"].is_number_integer() || !doc["word"].is_array())
        throw Error(Errc::bad_input, "\"n\" must be an integer and \"word\" an array");
    const long long n = doc["n"].get<long long>();
    if (n < 0) throw Error(Errc::bad_input, "\"n\" must be nonnegative");

    std::string word;
    for (const auto& entry : doc["word"]) {
        if (!entry.is_string())
            throw Error(Errc::bad_input, "\"word\" entries must be strings");
        const std::string label = entry.get<std::string>();
        if (!valid_label(label))
            throw Error(Errc::bad_input,
                        "\"word\" entries must be nonempty and free of whitespace");
        if (!word.empty()) word += ' ';
        word += label;
    }
    if (static_cast<long long>(doc["word"].size()) != 2 * n)
        throw Error(Errc::bad_input, "\"word\" must have length 2n");

    DiagramDocument result;
    result.diagram = parse_dow(word);

    if (doc.contains("coloring")) {
        if (!doc["coloring"].is_object())
            throw Error(Errc::bad_input, "\"coloring\" must be an object");
        ChordColoring coloring;
        for (const auto& [label, value] : doc["coloring"].items()) {
            if (!value.is_string() || value.get<std::string>().size() != 1)
                throw Error(Errc::bad_input, "coloring values must be \"R\" or \"B\"");
            coloring.assignment[label] = color_from_char(value.get<std::string>()[0]);
        }
        for (const auto& label : result.diagram.labels())
            if (!coloring.contains(label))
                throw Error(Errc::bad_input, "coloring misses label '" + label + "'");
        if (coloring.assignment.size() != result.diagram.labels().size())
            throw Error(Errc::bad_input, "coloring mentions labels not in the diagram");
        result.coloring = std::move(coloring);
    }
    return result;
}

DiagramDocument read_diagram(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return diagram_from_json(text);
        break;
    }
    return DiagramDocument{parse_dow(text), std::nullopt};
}

}  // namespace chordflip
