// chordflip: transform a chord diagram into one representing the complement
// of its interlacement graph, with a verifiable certificate.
//
// Exit codes: 0 ok, 1 verification failed, 2 parse/usage error,
// 3 not bipartite, 4 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chordflip/bisector.hpp"
#include "chordflip/diagram.hpp"
#include "chordflip/graph.hpp"
#include "chordflip/oracle.hpp"
#include "chordflip/pipeline.hpp"
#include "chordflip/svg.hpp"

namespace {

using namespace chordflip;

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::bad_input, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_sink(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::bad_input, "cannot open '" + path + "' for writing");
    out << content;
}

std::vector<int> parse_position_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw Error(Errc::bad_input, "invalid position '" + token + "'");
        }
        if (used != token.size())
            throw Error(Errc::bad_input, "invalid position '" + token + "'");
        out.push_back(value);
    }
    return out;
}

struct FlipOptions {
    std::string input = "-";
    std::string output;
    std::string format = "dow";
    std::string certificate_path;
};

void run_flip(const FlipOptions& opt) {
    const DiagramDocument doc = read_diagram(read_source(opt.input));
    const FlipResult result = complement_representation(doc.diagram);
    if (opt.format == "json")
        write_sink(opt.output, diagram_to_json(result.output) + "\n");
    else
        write_sink(opt.output, emit_dow(result.output) + "\n");
    if (!opt.certificate_path.empty())
        write_sink(opt.certificate_path, certificate_to_json(result.certificate) + "\n");
}

struct CheckOptions {
    std::string input;
    std::string output;
    std::string certificate;
};

int run_check(const CheckOptions& opt) {
    const DiagramDocument input = read_diagram(read_source(opt.input));
    const DiagramDocument output = read_diagram(read_source(opt.output));
    const FlipCertificate cert = certificate_from_json(read_source(opt.certificate));
    const VerifyResult verdict = verify_certificate(input.diagram, output.diagram, cert);
    if (verdict.ok()) {
        std::cout << "OK\n";
        return 0;
    }
    std::cout << "FAIL clause (" << clause_letter(verdict.failed_clause)
              << "): " << clause_description(verdict.failed_clause) << "\n";
    return 1;
}

struct GenOptions {
    int n = 0;
    std::string red_list;
    bool red_given = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string format = "json";
    std::string output;
};

void run_gen(const GenOptions& opt) {
    std::vector<int> red_positions;
    if (opt.red_given) {
        red_positions = parse_position_list(opt.red_list);
    } else {
        const ColorSequence colors = random_color_sequence(2 * opt.n, opt.seed);
        for (int p = 0; p < static_cast<int>(colors.size()); ++p)
            if (colors[p] == Color::red) red_positions.push_back(p);
    }
    const ColoredDiagram generated = gen_bicrossing_diagram(opt.n, red_positions);
    if (opt.format == "dow")
        write_sink(opt.output, emit_dow(generated.diagram) + "\n");
    else
        write_sink(opt.output, diagram_to_json(generated.diagram, &generated.coloring) + "\n");
}

struct InterlaceOptions {
    std::string input = "-";
    std::string format = "dot";
    std::string output;
};

void run_interlace(const InterlaceOptions& opt) {
    const DiagramDocument doc = read_diagram(read_source(opt.input));
    const InterlacementGraph g = interlacement_graph(doc.diagram);
    if (opt.format == "json")
        write_sink(opt.output, graph_to_json(g) + "\n");
    else
        write_sink(opt.output, graph_to_dot(g));
}

struct RenderOptions {
    std::string input = "-";
    std::string output;
    int window_start = 0;
    bool window_given = false;
};

void run_render(const RenderOptions& opt) {
    const DiagramDocument doc = read_diagram(read_source(opt.input));
    Window window{opt.window_start, doc.diagram.num_chords()};
    const ChordColoring* coloring = doc.coloring ? &*doc.coloring : nullptr;
    write_sink(opt.output,
               render_svg(doc.diagram, coloring, opt.window_given ? &window : nullptr));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "chordflip: complement a circle graph's representation.\n"
        "Reverses a carefully chosen arc of a chord diagram so the resulting\n"
        "diagram's interlacement graph is the complement of the original's;\n"
        "this works exactly when the complement is bipartite."};
    app.require_subcommand(1);

    FlipOptions flip_opt;
    auto* flip = app.add_subcommand(
        "flip", "Produce a diagram representing the complement, with a certificate");
    flip->add_option("input", flip_opt.input, "Diagram file, '-' for stdin (word or JSON)");
    flip->add_option("--format", flip_opt.format, "Output format")
        ->check(CLI::IsMember({"dow", "json"}));
    flip->add_option("--certificate", flip_opt.certificate_path, "Write the JSON certificate here");
    flip->add_option("-o,--output", flip_opt.output, "Output file (default stdout)");
    flip->callback([&] { run_flip(flip_opt); });

    CheckOptions check_opt;
    int check_status = 0;
    auto* check = app.add_subcommand("check", "Verify a flip certificate against its diagrams");
    check->add_option("input", check_opt.input, "Input diagram file")->required();
    check->add_option("output", check_opt.output, "Output diagram file")->required();
    check->add_option("certificate", check_opt.certificate, "Certificate JSON file")->required();
    check->callback([&] { check_status = run_check(check_opt); });

    GenOptions gen_opt;
    auto* gen = app.add_subcommand(
        "gen", "Generate a diagram whose red and blue chord classes each pairwise cross");
    gen->add_option("n", gen_opt.n, "Number of chords")->required()->check(CLI::NonNegativeNumber);
    auto* red = gen->add_option("--red", gen_opt.red_list,
                                "Comma-separated red endpoint positions (even count)");
    auto* seed = gen->add_option("--seed", gen_opt.seed, "Derive the red set from this seed");
    red->excludes(seed);
    seed->excludes(red);
    gen->add_option("--format", gen_opt.format, "Output format")
        ->check(CLI::IsMember({"dow", "json"}));
    gen->add_option("-o,--output", gen_opt.output, "Output file (default stdout)");
    gen->callback([&] {
        gen_opt.red_given = red->count() > 0;
        gen_opt.seed_given = seed->count() > 0;
        if (!gen_opt.red_given && !gen_opt.seed_given)
            throw CLI::RequiredError("--red or --seed");
        run_gen(gen_opt);
    });

    InterlaceOptions inter_opt;
    auto* interlace = app.add_subcommand("interlace", "Emit the interlacement graph");
    interlace->add_option("input", inter_opt.input, "Diagram file, '-' for stdin");
    interlace->add_option("--format", inter_opt.format, "Output format")
        ->check(CLI::IsMember({"dot", "json"}));
    interlace->add_option("-o,--output", inter_opt.output, "Output file (default stdout)");
    interlace->callback([&] { run_interlace(inter_opt); });

    RenderOptions render_opt;
    auto* render = app.add_subcommand("render", "Render the diagram as SVG");
    render->add_option("input", render_opt.input, "Diagram file, '-' for stdin");
    auto* win = render->add_option("--window", render_opt.window_start,
                                   "Highlight the window of n positions starting here");
    render->add_option("-o,--output", render_opt.output, "Output file (default stdout)");
    render->callback([&] {
        render_opt.window_given = win->count() > 0;
        run_render(render_opt);
    });

    try {
        app.parse(argc, argv);
        return check_status;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const chordflip::Error& e) {
        switch (e.code()) {
            case Errc::not_bipartite:
                std::cerr << "G is not bipartite\n";
                return 3;
            case Errc::transversal_violation:
                std::cerr << "internal error: " << e.what() << "\n";
                return 4;
            default:
                std::cerr << "error: " << e.what() << "\n";
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
