#pragma once

#include <stdexcept>
#include <string>

namespace chordflip {

// Failure codes raised by the library. The CLI maps these onto its exit-code
// contract: parse/usage problems -> 2, not_bipartite -> 3,
// transversal_violation -> 4.
enum class Errc {
    odd_length,
    bad_multiplicity,
    unknown_label,
    invalid_diagram,
    bad_input,
    not_bipartite,
    odd_class,
    empty_input,
    bad_parity,
    too_large,
    transversal_violation,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace chordflip
