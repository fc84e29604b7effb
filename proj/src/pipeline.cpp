#include "chordflip/pipeline.hpp"

#include <utility>

#include <nlohmann/json.hpp>

namespace chordflip {

FlipResult complement_representation(const ChordDiagram& d) {
    InterlacementGraph input_graph = interlacement_graph(d);
    ChordColoring coloring = two_color_complement(input_graph);
    const ColorSequence colors = induced_color_sequence(d, coloring);
    BalanceProfile profile = balance_profile(colors);
    const Window window = find_bisecting_window(colors);

    // Unreachable for valid inputs: a window bisecting both classes crosses
    // every chord of each pairwise-crossing class. Kept as a runtime check so
    // logic errors surface as diagnosable failures.
    if (!is_transversal(d, window))
        throw Error(Errc::transversal_violation,
                    "bisecting window " + to_string(window) + " does not cross every chord");

    ChordDiagram output = reverse_arc(d, window);
    FlipCertificate cert;
    cert.coloring = std::move(coloring);
    cert.window = window;
    cert.profile = std::move(profile);
    cert.transversal_ok = true;
    cert.input_interlacement = std::move(input_graph);
    cert.output_interlacement = interlacement_graph(output);
    return FlipResult{std::move(output), std::move(cert)};
}

const char* clause_letter(CertClause c) {
    switch (c) {
        case CertClause::none: return "-";
        case CertClause::coloring_classes: return "a";
        case CertClause::window_bisection: return "b";
        case CertClause::transversality: return "c";
        case CertClause::arc_reversal: return "d";
        case CertClause::interlacement_complement: return "e";
    }
    return "?";
}

std::string clause_description(CertClause c) {
    switch (c) {
        case CertClause::none:
            return "all clauses hold";
        case CertClause::coloring_classes:
            return "coloring classes are not pairwise-crossing cliques in the input interlacement";
        case CertClause::window_bisection:
            return "window does not bisect both color classes' endpoint sets";
        case CertClause::transversality:
            return "window does not cross every chord";
        case CertClause::arc_reversal:
            return "reversing the window does not reproduce the output diagram";
        case CertClause::interlacement_complement:
            return "output interlacement is not the complement of the input interlacement";
    }
    return "unknown clause";
}

VerifyResult verify_certificate(const ChordDiagram& input, const ChordDiagram& output,
                                const FlipCertificate& cert) {
    // (a) the coloring is total over the input's labels and each class is a
    // clique in the input interlacement graph.
    const std::vector<std::string>& labels = input.labels();
    if (cert.coloring.assignment.size() != labels.size())
        return VerifyResult{CertClause::coloring_classes};
    for (const auto& label : labels)
        if (!cert.coloring.contains(label)) return VerifyResult{CertClause::coloring_classes};
    for (Color c : {Color::red, Color::blue}) {
        const std::vector<std::string> cls = cert.coloring.labels_of(c);
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (!chords_cross(input, cls[i], cls[j]))
                    return VerifyResult{CertClause::coloring_classes};
    }

    // (b) the window holds exactly half of each class's endpoints.
    const ColorSequence colors = induced_color_sequence(input, cert.coloring);
    const int m = input.num_positions();
    int red_total = 0, red_inside = 0, blue_total = 0, blue_inside = 0;
    for (int p = 0; p < m; ++p) {
        const bool in = cert.window.contains(p, m);
        if (colors[p] == Color::red) {
            ++red_total;
            red_inside += in ? 1 : 0;
        } else {
            ++blue_total;
            blue_inside += in ? 1 : 0;
        }
    }
    if (red_total % 2 != 0 || blue_total % 2 != 0 || 2 * red_inside != red_total ||
        2 * blue_inside != blue_total)
        return VerifyResult{CertClause::window_bisection};

    // (c)
    if (!is_transversal(input, cert.window))
        return VerifyResult{CertClause::transversality};

    // (d)
    if (!(reverse_arc(input, cert.window) == output))
        return VerifyResult{CertClause::arc_reversal};

    // (e)
    if (!graphs_equal(interlacement_graph(output), complement(interlacement_graph(input))))
        return VerifyResult{CertClause::interlacement_complement};

    return VerifyResult{};
}

std::string certificate_to_json(const FlipCertificate& cert) {
    nlohmann::json doc;
    nlohmann::json coloring = nlohmann::json::object();
    for (const auto& [label, color] : cert.coloring.assignment)
        coloring[label] = std::string(1, color_char(color));
    doc["coloring"] = std::move(coloring);
    doc["window"] = {{"start", cert.window.start}, {"length", cert.window.length}};
    doc["profile"] = cert.profile;
    doc["input_graph"] = nlohmann::json::parse(graph_to_json(cert.input_interlacement));
    doc["output_graph"] = nlohmann::json::parse(graph_to_json(cert.output_interlacement));
    return doc.dump(2);
}

FlipCertificate certificate_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::bad_input, std::string("invalid JSON: ") + e.what());
    }
    for (const char* key : {"coloring", "window", "profile", "input_graph", "output_graph"})
        if (!doc.is_object() || !doc.contains(key))
            throw Error(Errc::bad_input, std::string("certificate JSON misses key \"") + key + '"');

    FlipCertificate cert;
    if (!doc["coloring"].is_object())
        throw Error(Errc::bad_input, "\"coloring\" must be an object");
    for (const auto& [label, value] : doc["coloring"].items()) {
        if (!value.is_string() || value.get<std::string>().size() != 1)
            throw Error(Errc::bad_input, "coloring values must be \"R\" or \"B\"");
        cert.coloring.assignment[label] = color_from_char(value.get<std::string>()[0]);
    }

    const auto& window = doc["window"];
    if (!window.is_object() || !window.contains("start") || !window.contains("length") ||
        !window["start"].is_number_integer() || !window["length"].is_number_integer())
        throw Error(Errc::bad_input, "\"window\" must carry integer \"start\" and \"length\"");
    cert.window = Window{window["start"].get<int>(), window["length"].get<int>()};

    if (!doc["profile"].is_array())
        throw Error(Errc::bad_input, "\"profile\" must be an integer array");
    for (const auto& entry : doc["profile"]) {
        if (!entry.is_number_integer())
            throw Error(Errc::bad_input, "\"profile\" must be an integer array");
        cert.profile.push_back(entry.get<int>());
    }

    cert.input_interlacement = graph_from_json(doc["input_graph"].dump());
    cert.output_interlacement = graph_from_json(doc["output_graph"].dump());
    // The serialized form omits transversal_ok; an emitted certificate always
    // claims it and verification recomputes it.
    cert.transversal_ok = true;
    return cert;
}

}  // namespace chordflip
