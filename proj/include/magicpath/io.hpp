#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "magicpath/analysis.hpp"
#include "magicpath/square.hpp"

namespace magicpath {

// Squares file:
//   # magicpath squares order=N count=M
//   one square per line, N*N space-separated integers, row-major
std::string format_squares(int order, std::span<const Square> squares);
// Throws ValidationError naming the offending line.
std::vector<Square> parse_squares(std::string_view text);

// Analysis file: a `# magicpath analysis ...` header line followed by one JSON
// object per square with a fixed field order. Floats use 17 significant
// digits.
std::string format_analysis(const AnalysisSet& set);
std::string format_record(const AnalysisRecord& rec);
// Parses and re-checks every record against its cells.
AnalysisSet parse_analysis(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace magicpath
