#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chroma {

enum class ErrorCode {
    invalid_argument,
    no_valid_b,
    budget_exhausted,
    inconsistent_bounds,
    bracket_invalid,
    non_monotone_detected,
    eps_unstable,
    out_of_table,
    none_found,
    tolerance_not_reached,
};

// Stable machine-readable name, e.g. "budget_exhausted".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace chroma
