#include "chroma/error.hpp"

namespace chroma {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::no_valid_b: return "no_valid_b";
        case ErrorCode::budget_exhausted: return "budget_exhausted";
        case ErrorCode::inconsistent_bounds: return "inconsistent_bounds";
        case ErrorCode::bracket_invalid: return "bracket_invalid";
        case ErrorCode::non_monotone_detected: return "non_monotone_detected";
        case ErrorCode::eps_unstable: return "eps_unstable";
        case ErrorCode::out_of_table: return "out_of_table";
        case ErrorCode::none_found: return "none_found";
        case ErrorCode::tolerance_not_reached: return "tolerance_not_reached";
    }
    return "unknown";
}

}  // namespace chroma
