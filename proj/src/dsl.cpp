#include "dcup/dsl.hpp"

#include <cctype>
#include <limits>

namespace dcup {

SyntaxError::SyntaxError(std::size_t position, std::string expected)
    : std::runtime_error("syntax error at " + std::to_string(position) + ": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RawArcs run() {
    RawArcs out;
    out.k = integer();
    expect(':');
    arc(out);
    while (peek() == ';') {
      ++pos_;
      arc(out);
    }
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "';' or end of input");
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) throw SyntaxError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) throw SyntaxError(start, "integer in range");
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "integer");
    return static_cast<int>(v);
  }

  void arc(RawArcs& out) {
    char head = peek();
    if (head != 'c' && head != 'r') throw SyntaxError(pos_, "'c' or 'r'");
    ++pos_;
    bool dotted = false;
    if (peek() == '*') {
      dotted = true;
      ++pos_;
    }
    expect('(');
    int a = integer();
    if (head == 'c') {
      expect(',');
      int b = integer();
      expect(')');
      out.cups.push_back({a, b, dotted});
    } else {
      expect(')');
      out.rays.push_back({a, dotted});
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RawArcs parse_raw(const std::string& text) { return Parser(text).run(); }

CupDiagram parse_dsl(const std::string& text) { return validate(parse_raw(text)); }

}  // namespace dcup
