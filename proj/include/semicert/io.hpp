#pragma once

/**
 * @file io.hpp
 * @brief Line-oriented instance files.
 *
 *     semiring <boolean|tropical|nonneg-rational|rational>
 *     matrix <d> <n>
 *     <d lines, n tokens each>
 *     vector <d>
 *     <d tokens>
 *
 * The vector block is optional. Blank lines and lines starting with '#' are
 * ignored. format_instance writes the canonical form that parse_instance
 * reads back unchanged.
 */

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "semicert/matrix.hpp"

namespace semicert {

struct Instance {
  Tag tag;
  Matrix a;
  std::optional<ColVec> b;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos >= raw.size()) break;
      const std::size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      line.tokens.push_back({raw.substr(start, pos - start), start + 1});
    }
    if (!line.tokens.empty() && line.tokens.front().text.front() != '#') lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
  }
  return lines;
}

class InstanceReader {
 public:
  explicit InstanceReader(std::string_view text) : lines_(tokenize_lines(text)) {}

  Instance read() {
    const Line& head = next("expected 'semiring <tag>'");
    expect_keyword(head, "semiring", 2);
    Tag tag;
    try {
      tag = parse_tag(head.tokens[1].text);
    } catch (const error&) {
      fail(head, head.tokens[1], "unknown semiring '" + std::string(head.tokens[1].text) + "'");
    }

    const Line& dims = next("expected 'matrix <d> <n>'");
    expect_keyword(dims, "matrix", 3);
    const std::size_t d = count(dims, dims.tokens[1]);
    const std::size_t n = count(dims, dims.tokens[2]);
    if (d == 0) fail(dims, dims.tokens[1], "a matrix needs at least one row");

    std::vector<Element> entries;
    entries.reserve(d * n);
    if (n > 0) {
      for (std::size_t i = 0; i < d; ++i) {
        const Line& row = next("expected matrix row " + std::to_string(i + 1) + " of " + std::to_string(d));
        if (row.tokens.size() != n) {
          fail(row, row.tokens.front(),
               "matrix row has " + std::to_string(row.tokens.size()) + " tokens, expected " + std::to_string(n));
        }
        for (const auto& tok : row.tokens) entries.push_back(element(tag, row, tok));
      }
    }
    Instance inst{tag, Matrix(tag, d, n, std::move(entries)), std::nullopt};

    if (at_end()) return inst;
    const Line& vec = next("expected 'vector <d>'");
    expect_keyword(vec, "vector", 2);
    if (count(vec, vec.tokens[1]) != d) {
      fail(vec, vec.tokens[1], "vector length " + std::string(vec.tokens[1].text) + " differs from matrix rows " +
                                   std::to_string(d));
    }
    std::vector<Element> b;
    b.reserve(d);
    while (b.size() < d) {
      const Line& line = next("expected " + std::to_string(d - b.size()) + " more vector entries");
      if (b.size() + line.tokens.size() > d) fail(line, line.tokens[d - b.size()], "too many vector entries");
      for (const auto& tok : line.tokens) b.push_back(element(tag, line, tok));
    }
    inst.b = ColVec(tag, std::move(b));
    if (!at_end()) {
      const Line& extra = lines_[pos_];
      fail(extra, extra.tokens.front(), "unexpected content after the vector block");
    }
    return inst;
  }

 private:
  [[noreturn]] static void fail(const Line& line, const Token& tok, const std::string& why) {
    throw parse_error(line.number, tok.column, why);
  }

  bool at_end() const { return pos_ >= lines_.size(); }

  const Line& next(const std::string& expectation) {
    if (at_end()) {
      const std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
      throw parse_error(line, 1, "unexpected end of input: " + expectation);
    }
    return lines_[pos_++];
  }

  static void expect_keyword(const Line& line, std::string_view keyword, std::size_t arity) {
    if (line.tokens.front().text != keyword) {
      fail(line, line.tokens.front(), "expected '" + std::string(keyword) + "'");
    }
    if (line.tokens.size() != arity) {
      const Token& at = line.tokens.size() > arity ? line.tokens[arity] : line.tokens.back();
      fail(line, at, "'" + std::string(keyword) + "' takes " + std::to_string(arity - 1) + " argument(s)");
    }
  }

  static std::size_t count(const Line& line, const Token& tok) {
    std::size_t value = 0;
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value > 4096) fail(line, tok, "expected a count in [0, 4096]");
    return value;
  }

  static Element element(Tag tag, const Line& line, const Token& tok) {
    try {
      return parse_element(tag, tok.text);
    } catch (const error& e) {
      fail(line, tok, e.what());
    }
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Instance parse_instance(std::string_view text) { return detail::InstanceReader(text).read(); }

inline std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  os << "semiring " << to_string(inst.tag) << '\n';
  os << "matrix " << inst.a.rows() << ' ' << inst.a.cols() << '\n';
  if (inst.a.cols() > 0) {
    for (std::size_t i = 0; i < inst.a.rows(); ++i) os << inst.a.row(i) << '\n';
  }
  if (inst.b) {
    os << "vector " << inst.b->size() << '\n';
    os << *inst.b << '\n';
  }
  return os.str();
}

}  // namespace semicert
