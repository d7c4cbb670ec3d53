#include "chroma/format.hpp"

#include <cstdio>

namespace chroma {

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

}  // namespace chroma
