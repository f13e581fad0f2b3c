#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hlcd/code.hpp"

namespace hlcd::io {

struct CodeFile {
    std::vector<std::string> header;  // comment lines without the leading '#'
    LinearCode code;
};

// Body rows of symbols 0, 1, w, W; '#' lines are header comments, blank lines
// are skipped, whitespace between symbols is optional.
// Throws ParseError (with line and column) or RankDeficient.
CodeFile parse_code_file(std::string_view text);
LinearCode parse_code(std::string_view text);

// Header lines are written as "# line". The body is the code's generator.
std::string format_code_file(const LinearCode& code, const std::vector<std::string>& header = {});

// Reads a whole file. Throws InvalidArgument if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

enum class Format { Text, Json };
// Accepts "text" or "json". Throws InvalidArgument.
Format parse_format(std::string_view name);

std::string summary_json(const CodeSummary& s);
// Inverse of summary_json. Throws ParseError.
CodeSummary summary_from_json(std::string_view text);
std::string summary_text(const CodeSummary& s);
std::string emit_summary(const CodeSummary& s, Format format);

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace hlcd::io
