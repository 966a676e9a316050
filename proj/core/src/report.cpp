#include "tropic/report.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "tropic/errors.hpp"

namespace tropic {
namespace {

std::string join(const TokenList& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string format_index_list(const IndexList& list) {
  std::string out = "{";
  for (std::size_t i = 0; i < list.values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(list.values[i]);
  }
  return out + "}";
}

struct TextWriter {
  std::string operator()(const std::string& s) const { return s; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(const TokenList& l) const { return "[" + join(l) + "]"; }
  std::string operator()(const IndexList& l) const { return format_index_list(l); }
  std::string operator()(const TokenGrid& g) const {
    std::string out = "[";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) out += "; ";
      out += join(g[i]);
    }
    if (g.size() == 1) out += ";";
    return out + "]";
  }
  std::string operator()(const BoxEntry& b) const {
    return format_index_list(b.index_set) + " [" + join(b.components) + "]";
  }
};

TokenList split_tokens(std::string_view s) {
  TokenList out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

IndexList parse_index_list(std::string_view s, std::size_t line) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw ParseError("malformed index set '" + std::string(s) + "'", line, 1);
  }
  IndexList out;
  std::string_view body = s.substr(1, s.size() - 2);
  std::size_t i = 0;
  while (i < body.size()) {
    std::size_t start = i;
    while (i < body.size() && body[i] != ',') ++i;
    std::string item(body.substr(start, i - start));
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("malformed index '" + item + "'", line, 1);
    }
    out.values.push_back(std::stoul(item));
    ++i;
  }
  return out;
}

ReportValue parse_value(std::string_view s, std::size_t line) {
  if (s == "true") return true;
  if (s == "false") return false;
  if (!s.empty() && s.front() == '{') {
    auto space = s.find(' ');
    if (space == std::string_view::npos) return parse_index_list(s, line);
    BoxEntry box;
    box.index_set = parse_index_list(s.substr(0, space), line);
    std::string_view rest = s.substr(space + 1);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
      throw ParseError("malformed box components", line, 1);
    }
    box.components = split_tokens(rest.substr(1, rest.size() - 2));
    return box;
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated list", line, 1);
    std::string_view body = s.substr(1, s.size() - 2);
    if (body.find(';') == std::string_view::npos) return split_tokens(body);
    TokenGrid grid;
    std::size_t i = 0;
    while (i <= body.size()) {
      std::size_t semi = body.find(';', i);
      if (semi == std::string_view::npos) semi = body.size();
      auto row = split_tokens(body.substr(i, semi - i));
      if (!row.empty()) grid.push_back(std::move(row));
      i = semi + 1;
    }
    return grid;
  }
  return std::string(s);
}

nlohmann::ordered_json to_json(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IndexList>) {
          return x.values;
        } else if constexpr (std::is_same_v<T, BoxEntry>) {
          return {{"index_set", x.index_set.values}, {"components", x.components}};
        } else {
          return x;
        }
      },
      v);
}

}  // namespace

std::string write_text(const ReportDocument& doc) {
  std::string out;
  for (const auto& f : doc.fields()) {
    out += f.key;
    out += ": ";
    out += std::visit(TextWriter{}, f.value);
    out += '\n';
  }
  return out;
}

ReportDocument read_text(std::string_view text) {
  ReportDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    auto colon = line.find(": ");
    if (colon == std::string_view::npos || colon == 0) {
      throw ParseError("expected 'key: value'", line_no, 1);
    }
    doc.add(std::string(line.substr(0, colon)), parse_value(line.substr(colon + 2), line_no));
  }
  return doc;
}

std::string write_json(const ReportDocument& doc) {
  std::map<std::string, std::size_t> counts;
  for (const auto& f : doc.fields()) ++counts[f.key];

  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& f : doc.fields()) {
    const bool as_array = counts[f.key] > 1 || std::holds_alternative<BoxEntry>(f.value);
    if (as_array) {
      if (!out.contains(f.key)) out[f.key] = nlohmann::ordered_json::array();
      out[f.key].push_back(to_json(f.value));
    } else {
      out[f.key] = to_json(f.value);
    }
  }
  return out.dump(2) + "\n";
}

}  // namespace tropic
