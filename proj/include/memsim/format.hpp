#pragma once

#include <string>

namespace memsim {

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

// 64-bit FNV-1a digest, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace memsim
