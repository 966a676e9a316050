#pragma once

/**
 * @file report.hpp
 * @brief Ordered key/value report documents with a text and a JSON form.
 *
 * Text form, one field per line:
 *
 *     command: solve
 *     residual_is_one: true
 *     principal: [1 1]
 *     free: {}
 *     a_hat: [2 -inf; -inf 3]
 *     box: {2} [<=1 =1 <=1]
 *
 * Scalars are stored as already formatted tokens, so a document round-trips
 * through the text form exactly. Single-row matrices are written "[a b;]" to
 * keep them apart from lists.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tropic {

/// 1-based indices as they appear in reports.
struct IndexList {
  std::vector<std::size_t> values;
  friend bool operator==(const IndexList&, const IndexList&) = default;
};

using TokenList = std::vector<std::string>;
using TokenGrid = std::vector<std::vector<std::string>>;

/// One box of a general solution: "=v" fixed, "<=v" bounded, "*" free.
struct BoxEntry {
  IndexList index_set;
  TokenList components;
  friend bool operator==(const BoxEntry&, const BoxEntry&) = default;
};

using ReportValue = std::variant<std::string, bool, TokenList, IndexList, TokenGrid, BoxEntry>;

struct ReportField {
  std::string key;
  ReportValue value;
  friend bool operator==(const ReportField&, const ReportField&) = default;
};

class ReportDocument {
 public:
  void add(std::string key, ReportValue value) {
    fields_.push_back({std::move(key), std::move(value)});
  }

  const std::vector<ReportField>& fields() const noexcept { return fields_; }

  /// First field with the key, or nullptr.
  const ReportValue* find(std::string_view key) const {
    for (const auto& f : fields_) {
      if (f.key == key) return &f.value;
    }
    return nullptr;
  }

  std::vector<const ReportValue*> find_all(std::string_view key) const {
    std::vector<const ReportValue*> out;
    for (const auto& f : fields_) {
      if (f.key == key) out.push_back(&f.value);
    }
    return out;
  }

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;

 private:
  std::vector<ReportField> fields_;
};

std::string write_text(const ReportDocument& doc);

/// Inverse of write_text. Throws ParseError.
ReportDocument read_text(std::string_view text);

/// JSON object; keys that repeat, and every "box" key, become arrays.
std::string write_json(const ReportDocument& doc);

}  // namespace tropic
