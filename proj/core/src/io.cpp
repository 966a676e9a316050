#include "tropic/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace tropic {
namespace {

enum class Lex { word, open, close, semicolon, colon, newline, end };

struct Lexeme {
  Lex kind;
  Token token;
};

std::vector<Lexeme> lex(std::string_view text) {
  std::vector<Lexeme> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Lex kind, std::string s, std::size_t l, std::size_t c) {
    out.push_back({kind, Token{std::move(s), l, c}});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      push(Lex::newline, "\n", line, col);
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '[' || c == ']' || c == ';' || c == ':') {
      const Lex k = c == '[' ? Lex::open : c == ']' ? Lex::close : c == ';' ? Lex::semicolon : Lex::colon;
      push(k, std::string(1, c), line, col);
      ++col;
      ++i;
      continue;
    }
    const std::size_t start = i;
    const std::size_t start_col = col;
    while (i < text.size()) {
      const char w = text[i];
      if (w == ' ' || w == '\t' || w == '\r' || w == '\n' || w == ',' || w == '#' || w == '[' ||
          w == ']' || w == ';' || w == ':') {
        break;
      }
      ++i;
      ++col;
    }
    push(Lex::word, std::string(text.substr(start, i - start)), line, start_col);
  }
  push(Lex::end, "", line, col);
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Lexeme> lexemes) : lx_(std::move(lexemes)) {}

  const Lexeme& peek() const { return lx_[pos_]; }
  const Lexeme& next() { return lx_[pos_ < lx_.size() - 1 ? pos_++ : pos_]; }

  void skip_newlines() {
    while (peek().kind == Lex::newline) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek().token;
    throw ParseError(what, t.line, t.column);
  }

  const Lexeme& expect(Lex kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return next();
  }

 private:
  std::vector<Lexeme> lx_;
  std::size_t pos_ = 0;
};

// '[' already consumed. Rows split on ';' or newline; blank rows skipped.
std::vector<TokenRow> bracket_matrix(Cursor& cur) {
  std::vector<TokenRow> rows;
  TokenRow row;
  while (true) {
    const Lexeme& l = cur.peek();
    switch (l.kind) {
      case Lex::word:
        row.push_back(cur.next().token);
        break;
      case Lex::semicolon:
      case Lex::newline:
        cur.next();
        if (!row.empty()) rows.push_back(std::move(row));
        row.clear();
        break;
      case Lex::close:
        cur.next();
        if (!row.empty()) rows.push_back(std::move(row));
        return rows;
      default:
        cur.fail("unexpected '" + l.token.text + "' in matrix");
    }
  }
}

// '[' already consumed.
TokenRow bracket_vector(Cursor& cur) {
  TokenRow v;
  while (true) {
    const Lexeme& l = cur.peek();
    if (l.kind == Lex::word) {
      v.push_back(cur.next().token);
    } else if (l.kind == Lex::newline) {
      cur.next();
    } else if (l.kind == Lex::close) {
      cur.next();
      return v;
    } else {
      cur.fail("unexpected '" + l.token.text + "' in vector");
    }
  }
}

void check_rectangular(const std::vector<TokenRow>& rows) {
  if (rows.empty()) throw ParseError("empty matrix");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) {
      throw ParseError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       rows[i].front().line, rows[i].front().column);
    }
  }
}

void end_statement(Cursor& cur) {
  const Lex k = cur.peek().kind;
  if (k == Lex::semicolon || k == Lex::newline) {
    cur.next();
  } else if (k != Lex::end) {
    cur.fail("expected end of statement");
  }
}

}  // namespace

RawProblem parse_problem_text(std::string_view text) {
  Cursor cur(lex(text));
  RawProblem p;
  bool have_a = false;
  bool have_d = false;
  while (true) {
    while (cur.peek().kind == Lex::newline || cur.peek().kind == Lex::semicolon) cur.next();
    if (cur.peek().kind == Lex::end) break;
    const Lexeme head = cur.expect(Lex::word, "a statement");
    if (cur.peek().kind != Lex::colon) {
      if (p.kind || have_a || have_d) {
        throw ParseError("unexpected '" + head.token.text + "'", head.token.line, head.token.column);
      }
      p.kind = head.token;
      end_statement(cur);
      continue;
    }
    cur.next();  // ':'
    const std::string& key = head.token.text;
    if (key == "semifield") {
      if (p.kind) throw ParseError("semifield given twice", head.token.line, head.token.column);
      p.kind = cur.expect(Lex::word, "a semifield tag").token;
    } else if (key == "A") {
      if (have_a) throw ParseError("matrix given twice", head.token.line, head.token.column);
      cur.expect(Lex::open, "'['");
      p.matrix = bracket_matrix(cur);
      check_rectangular(p.matrix);
      have_a = true;
    } else if (key == "d") {
      if (have_d) throw ParseError("vector given twice", head.token.line, head.token.column);
      cur.expect(Lex::open, "'['");
      p.vector = bracket_vector(cur);
      if (p.vector.empty()) throw ParseError("empty vector", head.token.line, head.token.column);
      have_d = true;
    } else {
      throw ParseError("unknown key '" + key + "'", head.token.line, head.token.column);
    }
    end_statement(cur);
  }
  if (!have_a) throw ParseError("problem has no matrix 'A'");
  if (!have_d) throw ParseError("problem has no vector 'd'");
  if (p.matrix.size() != p.vector.size()) {
    throw DimensionMismatch("matrix has " + std::to_string(p.matrix.size()) +
                            " rows but vector has " + std::to_string(p.vector.size()) +
                            " components");
  }
  return p;
}

std::vector<TokenRow> parse_matrix_text(std::string_view text) {
  Cursor cur(lex(text));
  cur.skip_newlines();
  std::vector<TokenRow> rows;
  if (cur.peek().kind == Lex::open) {
    cur.next();
    rows = bracket_matrix(cur);
    cur.skip_newlines();
    if (cur.peek().kind != Lex::end) cur.fail("trailing input after matrix");
  } else {
    TokenRow row;
    while (cur.peek().kind != Lex::end) {
      const Lexeme& l = cur.peek();
      if (l.kind == Lex::word) {
        row.push_back(cur.next().token);
      } else if (l.kind == Lex::newline || l.kind == Lex::semicolon) {
        cur.next();
        if (!row.empty()) rows.push_back(std::move(row));
        row.clear();
      } else {
        cur.fail("unexpected '" + l.token.text + "' in matrix");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  check_rectangular(rows);
  return rows;
}

TokenRow parse_vector_text(std::string_view text) {
  Cursor cur(lex(text));
  cur.skip_newlines();
  TokenRow v;
  if (cur.peek().kind == Lex::open) {
    cur.next();
    v = bracket_vector(cur);
    cur.skip_newlines();
    if (cur.peek().kind != Lex::end) cur.fail("trailing input after vector");
  } else {
    while (cur.peek().kind != Lex::end) {
      const Lexeme& l = cur.peek();
      if (l.kind == Lex::word) {
        v.push_back(cur.next().token);
      } else if (l.kind == Lex::newline) {
        cur.next();
      } else {
        cur.fail("unexpected '" + l.token.text + "' in vector");
      }
    }
  }
  if (v.empty()) throw ParseError("empty vector");
  return v;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buf.data(), ptr);
}

std::string_view zero_literal(SemifieldKind kind) {
  switch (kind) {
    case SemifieldKind::max_plus_float:
    case SemifieldKind::max_plus_rational:
      return "-inf";
    case SemifieldKind::min_plus_float:
      return "+inf";
    case SemifieldKind::max_times_float:
      return "0";
  }
  return "-inf";
}

}  // namespace tropic
