#include "chordflip/bisector.hpp"

#include <algorithm>
#include <cassert>

namespace chordflip {

namespace {

void check_even_classes(const ColorSequence& colors) {
    const auto red = std::count(colors.begin(), colors.end(), Color::red);
    const auto blue = static_cast<long>(colors.size()) - red;
    if (red % 2 != 0 || blue % 2 != 0)
        throw Error(Errc::odd_class,
                    "color class sizes must be even (red " + std::to_string(red) +
                        ", blue " + std::to_string(blue) + ")");
}

}  // namespace

ColorSequence parse_color_sequence(std::string_view text) {
    ColorSequence colors;
    colors.reserve(text.size());
    for (char ch : text) colors.push_back(color_from_char(ch));
    return colors;
}

std::string to_string(const ColorSequence& colors) {
    std::string out;
    out.reserve(colors.size());
    for (Color c : colors) out += color_char(c);
    return out;
}

BalanceProfile balance_profile(const ColorSequence& colors) {
    check_even_classes(colors);
    const int m = static_cast<int>(colors.size());
    const int n = m / 2;
    const auto is_red = [&](int p) { return colors[p] == Color::red ? 1 : 0; };

    int half_red = 0;
    for (int p = 0; p < m; ++p) half_red += is_red(p);
    half_red /= 2;

    BalanceProfile f(m);
    int in_window = 0;
    for (int p = 0; p < n; ++p) in_window += is_red(p);
    for (int i = 0; i < m; ++i) {
        f[i] = in_window - half_red;
        in_window += is_red((i + n) % m) - is_red(i);
    }
    return f;
}

Window find_bisecting_window(const ColorSequence& colors) {
    if (colors.empty()) return Window{0, 0};
    const BalanceProfile f = balance_profile(colors);
    const int n = static_cast<int>(colors.size()) / 2;
    for (int i = 0; i < static_cast<int>(f.size()); ++i)
        if (f[i] == 0) return Window{i, n};
    // f(n) = -f(0) and steps are in {-1,0,1}, so a zero always exists.
    assert(false);
    throw Error(Errc::odd_class, "balance profile has no zero");
}

std::set<int> brute_force_bisecting_windows(const ColorSequence& colors) {
    check_even_classes(colors);
    const int m = static_cast<int>(colors.size());
    const int n = m / 2;
    int half_red = 0;
    for (int p = 0; p < m; ++p)
        if (colors[p] == Color::red) ++half_red;
    half_red /= 2;

    std::set<int> starts;
    for (int i = 0; i < m; ++i) {
        int reds = 0;
        for (int t = 0; t < n; ++t)
            if (colors[(i + t) % m] == Color::red) ++reds;
        if (reds == half_red) starts.insert(i);
    }
    return starts;
}

ColorSequence induced_color_sequence(const ChordDiagram& d, const ChordColoring& coloring) {
    ColorSequence colors;
    colors.reserve(d.num_positions());
    for (int p = 0; p < d.num_positions(); ++p)
        colors.push_back(coloring.at(d.label_at(p)));
    return colors;
}

bool is_transversal(const ChordDiagram& d, const Window& w) {
    for (const auto& label : d.labels())
        if (boundary_status(d, w, label) != BoundaryStatus::crossing) return false;
    return true;
}

}  // namespace chordflip
