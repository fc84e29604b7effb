#pragma once

#include <string>

#include "chordflip/error.hpp"

namespace chordflip {

enum class Color : unsigned char { red, blue };

constexpr Color opposite(Color c) noexcept {
    return c == Color::red ? Color::blue : Color::red;
}

constexpr char color_char(Color c) noexcept {
    return c == Color::red ? 'R' : 'B';
}

inline Color color_from_char(char ch) {
    if (ch == 'R') return Color::red;
    if (ch == 'B') return Color::blue;
    throw Error(Errc::bad_input,
                std::string("invalid color character '") + ch + "', expected 'R' or 'B'");
}

}  // namespace chordflip
