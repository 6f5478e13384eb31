#include "magicpath/io.hpp"

#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "magicpath/error.hpp"

namespace magicpath {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_int(std::string_view s, long& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

// "# magicpath <kind> key=value ..." -> key/value map.
std::map<std::string, long> parse_header(std::string_view line, std::string_view kind) {
  const auto tokens = split_ws(line);
  if (tokens.size() < 3 || tokens[0] != "#" || tokens[1] != "magicpath" || tokens[2] != kind)
    throw ValidationError(fmt::format("line 1: expected header '# magicpath {} ...'", kind));
  std::map<std::string, long> kv;
  for (std::size_t i = 3; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    long v = 0;
    if (eq == std::string_view::npos || !parse_int(tokens[i].substr(eq + 1), v))
      throw ValidationError(fmt::format("line 1: malformed header field '{}'", tokens[i]));
    kv[std::string(tokens[i].substr(0, eq))] = v;
  }
  return kv;
}

long require_key(const std::map<std::string, long>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ValidationError(fmt::format("line 1: header is missing '{}'", key));
  return it->second;
}

std::string fmt_double(double v) { return fmt::format("{:.17g}", v); }

std::string fmt_opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "null"; }

}  // namespace

std::string format_squares(int order, std::span<const Square> squares) {
  std::string out = fmt::format("# magicpath squares order={} count={}\n", order, squares.size());
  for (const Square& s : squares) {
    out += s.to_string();
    out += '\n';
  }
  return out;
}

std::vector<Square> parse_squares(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ValidationError("line 1: empty squares file");
  const auto header = parse_header(lines[0], "squares");
  const long order = require_key(header, "order");
  const long count = require_key(header, "count");
  if (order != 3 && order != 4) throw ValidationError(fmt::format("line 1: unsupported order {}", order));

  std::vector<Square> squares;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const auto tokens = split_ws(lines[ln]);
    if (tokens.empty()) continue;
    const std::size_t line_no = ln + 1;
    if (tokens.size() != static_cast<std::size_t>(order * order))
      throw ValidationError(fmt::format("line {}: expected {} integers, got {}", line_no, order * order, tokens.size()));
    std::vector<int> cells;
    for (auto t : tokens) {
      long v = 0;
      if (!parse_int(t, v)) throw ValidationError(fmt::format("line {}: '{}' is not an integer", line_no, t));
      cells.push_back(static_cast<int>(v));
    }
    if (!is_magic(cells, static_cast<int>(order)))
      throw ValidationError(
          fmt::format("line {}: square {} is not a magic square", line_no, squares.size() + 1));
    squares.push_back(Square::make(static_cast<int>(order), std::move(cells)));
  }
  if (static_cast<long>(squares.size()) != count)
    throw ValidationError(fmt::format("header declares {} squares but file holds {}", count, squares.size()));
  return squares;
}

std::string format_record(const AnalysisRecord& r) {
  return fmt::format(
      "{{\"index\":{},\"cells\":[{}],\"legs_squared\":[{}],\"total\":{},\"per_city_average\":{},"
      "\"reflexive\":{},\"mismatch_pairs\":{},\"longest_local_palindrome_length\":{},\"period\":{},"
      "\"assigned_class\":\"{}\",\"dudeney_group\":{},\"duplicate_group_id\":{},\"is_associative\":{},"
      "\"is_pandiagonal\":{}}}",
      r.index, fmt::join(r.cells, ","), fmt::join(r.legs_squared, ","), fmt_double(r.total),
      fmt_double(r.per_city_average), r.reflexive, r.mismatch_pairs, r.longest_local_palindrome_length,
      fmt_opt(r.period), to_string(r.assigned_class), fmt_opt(r.dudeney_group), r.duplicate_group_id,
      r.is_associative, r.is_pandiagonal);
}

std::string format_analysis(const AnalysisSet& set) {
  std::string out = fmt::format("# magicpath analysis order={} count={} local_min_length={} partial_max_mismatch={}\n",
                                set.order, set.records.size(), set.params.local_min_length,
                                set.params.partial_max_mismatch);
  for (const auto& r : set.records) {
    out += format_record(r);
    out += '\n';
  }
  return out;
}

AnalysisSet parse_analysis(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ValidationError("line 1: empty analysis file");
  const auto header = parse_header(lines[0], "analysis");
  AnalysisSet set;
  set.order = static_cast<int>(require_key(header, "order"));
  const long count = require_key(header, "count");
  set.params.local_min_length = static_cast<int>(require_key(header, "local_min_length"));
  set.params.partial_max_mismatch = static_cast<int>(require_key(header, "partial_max_mismatch"));
  if (set.order != 3 && set.order != 4) throw ValidationError(fmt::format("line 1: unsupported order {}", set.order));
  set.params.validate();

  using nlohmann::json;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    if (lines[ln].find_first_not_of(" \t") == std::string_view::npos) continue;
    const std::size_t line_no = ln + 1;
    try {
      const json j = json::parse(lines[ln]);
      AnalysisRecord r;
      r.index = j.at("index").get<std::size_t>();
      r.cells = j.at("cells").get<std::vector<int>>();
      r.legs_squared = j.at("legs_squared").get<std::vector<int>>();
      r.total = j.at("total").get<double>();
      r.per_city_average = j.at("per_city_average").get<double>();
      r.reflexive = j.at("reflexive").get<bool>();
      r.mismatch_pairs = j.at("mismatch_pairs").get<int>();
      r.longest_local_palindrome_length = j.at("longest_local_palindrome_length").get<int>();
      if (!j.at("period").is_null()) r.period = j.at("period").get<int>();
      const auto cls = symmetry_class_from_string(j.at("assigned_class").get<std::string>());
      if (!cls) throw ValidationError("unknown assigned_class");
      r.assigned_class = *cls;
      if (!j.at("dudeney_group").is_null()) r.dudeney_group = j.at("dudeney_group").get<int>();
      r.duplicate_group_id = j.at("duplicate_group_id").get<std::size_t>();
      r.is_associative = j.at("is_associative").get<bool>();
      r.is_pandiagonal = j.at("is_pandiagonal").get<bool>();
      if (r.index != set.records.size() + 1)
        throw ValidationError(fmt::format("index {} out of sequence", r.index));
      check_consistency(r, set.order, set.params);
      set.records.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw ValidationError(fmt::format("line {}: {}", line_no, e.what()));
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  if (static_cast<long>(set.records.size()) != count)
    throw ValidationError(fmt::format("header declares {} records but file holds {}", count, set.records.size()));
  return set;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(fmt::format("error reading '{}'", path.string()));
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError(fmt::format("error writing '{}'", path.string()));
}

}  // namespace magicpath
