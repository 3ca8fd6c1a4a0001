#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace uzsyllable {

// Minimal UTF-8 codec. Decoding is lenient: an invalid byte decodes as
// U+FFFD and consumes exactly one byte, so offsets stay aligned with the
// original buffer.

void appendUtf8(std::string& out, char32_t cp);

std::string encodeUtf8(std::u32string_view cps);

std::u32string decodeUtf8(std::string_view utf8);

// Decodes and records the byte offset where each codepoint starts.
// offsets.size() == codepoints.size() + 1; the last entry is utf8.size().
struct DecodedText {
  std::u32string codepoints;
  std::vector<size_t> offsets;
};

DecodedText decodeUtf8WithOffsets(std::string_view utf8);

}  // namespace uzsyllable
