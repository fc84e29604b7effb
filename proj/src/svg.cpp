#include "chordflip/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace chordflip {

namespace {

constexpr double kRadius = 100.0;

std::string fmt(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

// Position angles increase counterclockwise from angle 0; the y axis is
// flipped into SVG screen coordinates.
double angle_of(double position, int num_positions) {
    return 2.0 * std::numbers::pi * position / num_positions;
}

std::string point_x(double theta, double radius) { return fmt(radius * std::cos(theta)); }
std::string point_y(double theta, double radius) { return fmt(-radius * std::sin(theta)); }

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

const char* stroke_of(const ChordColoring* coloring, const std::string& label) {
    if (coloring == nullptr || !coloring->contains(label)) return "black";
    return coloring->at(label) == Color::red ? "red" : "blue";
}

}  // namespace

std::string render_svg(const ChordDiagram& d, const ChordColoring* coloring,
                       const Window* window) {
    const int m = d.num_positions();
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-130 -130 260 260\">\n";
    svg += "  <circle cx=\"0\" cy=\"0\" r=\"" + fmt(kRadius) +
           "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

    if (window != nullptr && m > 0 && window->length > 0) {
        // Highlight band over the window's arc, from the gap before its first
        // position to the gap after its last, and the separating line through
        // the two gaps (the chord between them, extended past the circle).
        const double theta_a = angle_of(window->start - 0.5, m);
        const double theta_b = angle_of(window->start - 0.5 + window->length, m);
        const int large_arc = 2 * window->length > m ? 1 : 0;
        svg += "  <path d=\"M " + point_x(theta_a, kRadius) + " " + point_y(theta_a, kRadius) +
               " A " + fmt(kRadius) + " " + fmt(kRadius) + " 0 " + std::to_string(large_arc) +
               " 0 " + point_x(theta_b, kRadius) + " " + point_y(theta_b, kRadius) +
               "\" fill=\"none\" stroke=\"#ffcc33\" stroke-width=\"9\" stroke-opacity=\"0.6\"/>\n";
        const double ax = kRadius * std::cos(theta_a), ay = -kRadius * std::sin(theta_a);
        const double bx = kRadius * std::cos(theta_b), by = -kRadius * std::sin(theta_b);
        svg += "  <line x1=\"" + fmt(ax + 0.15 * (ax - bx)) + "\" y1=\"" +
               fmt(ay + 0.15 * (ay - by)) + "\" x2=\"" + fmt(bx + 0.15 * (bx - ax)) +
               "\" y2=\"" + fmt(by + 0.15 * (by - ay)) +
               "\" stroke=\"#777777\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
    }

    for (const Chord& c : d.chords()) {
        const double ta = angle_of(c.a, m);
        const double tb = angle_of(c.b, m);
        svg += "  <line x1=\"" + point_x(ta, kRadius) + "\" y1=\"" + point_y(ta, kRadius) +
               "\" x2=\"" + point_x(tb, kRadius) + "\" y2=\"" + point_y(tb, kRadius) +
               "\" stroke=\"" + stroke_of(coloring, c.label) + "\" stroke-width=\"2\"/>\n";
    }

    for (int p = 0; p < m; ++p) {
        const double theta = angle_of(p, m);
        svg += "  <circle cx=\"" + point_x(theta, kRadius) + "\" cy=\"" + point_y(theta, kRadius) +
               "\" r=\"3\" fill=\"" + stroke_of(coloring, d.label_at(p)) + "\"/>\n";
        svg += "  <text x=\"" + point_x(theta, kRadius * 1.12) + "\" y=\"" +
               point_y(theta, kRadius * 1.12) +
               "\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               xml_escape(d.label_at(p)) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace chordflip
