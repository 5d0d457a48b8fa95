#pragma once

#include <string>
#include <vector>

namespace morpholab {

// Characters throughout the library are Unicode scalar values; all file and
// in-memory text is UTF-8. Decoding is strict: invalid sequences throw.

std::u32string utf8_decode(const std::string& s);
std::string utf8_encode(const std::u32string& s);
std::string utf8_encode(char32_t c);

// Number of Unicode scalar values in a UTF-8 string.
std::size_t utf8_length(const std::string& s);

// Each scalar value as its own UTF-8 string, in order.
std::vector<std::string> utf8_chars(const std::string& s);

}  // namespace morpholab
