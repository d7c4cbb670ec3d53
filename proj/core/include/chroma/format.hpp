#pragma once

#include <string>

namespace chroma {

// Locale-independent rendering with 9 significant digits ("%.9g").
std::string format_real(double value);

}  // namespace chroma
