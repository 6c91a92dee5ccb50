#include "dgalab/expression.hpp"

#include <cctype>

#include "dgalab/errors.hpp"

namespace dgalab {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(const Algebra& algebra, std::string_view text, const AliasTable& aliases, int line,
         int column_offset)
      : alg_(algebra), s_(text), aliases_(aliases), line_(line), offset_(column_offset) {}

  Element run() {
    Element total;
    skip_ws();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      Element t = term();
      if (sign < 0) t *= Q(-1);
      total += t;
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return total;
  }

 private:
  Element term() {
    skip_ws();
    std::size_t start = pos_;
    Q coeff = 1;
    bool have_anything = false;
    if (!at_end() && digit(peek())) {
      std::size_t b = pos_;
      while (!at_end() && digit(peek())) ++pos_;
      if (!at_end() && peek() == '/') {
        ++pos_;
        if (at_end() || !digit(peek())) fail("malformed rational", pos_);
        while (!at_end() && digit(peek())) ++pos_;
      }
      try {
        coeff = parse_rational(s_.substr(b, pos_ - b));
      } catch (const std::exception& e) {
        fail(e.what(), b);
      }
      have_anything = true;
    }
    Element acc = alg_.one();
    for (;;) {
      skip_ws();
      if (at_end() || !ident_start(peek())) break;
      std::size_t b = pos_;
      while (!at_end() && ident_char(peek())) ++pos_;
      std::string name(s_.substr(b, pos_ - b));
      unsigned k = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t eb = pos_;
        while (!at_end() && digit(peek())) ++pos_;
        if (eb == pos_) fail("expected integer exponent after '^'", eb);
        k = static_cast<unsigned>(std::stoul(std::string(s_.substr(eb, pos_ - eb))));
      }
      Element factor;
      if (auto gi = alg_.index_of(name)) {
        factor = alg_.gen(*gi);
      } else if (auto it = aliases_.find(name); it != aliases_.end()) {
        factor = it->second;
      } else {
        fail("unknown generator '" + name + "'", b);
      }
      acc = alg_.multiply(acc, alg_.power(factor, k));
      have_anything = true;
    }
    if (!have_anything) fail("expected a coefficient or a factor", start);
    return acc * coeff;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw InputError(msg, line_, offset_ + static_cast<int>(at) + 1);
  }

  const Algebra& alg_;
  std::string_view s_;
  const AliasTable& aliases_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(const Algebra& algebra, std::string_view text, const AliasTable& aliases,
                         int line, int column_offset) {
  return Parser(algebra, text, aliases, line, column_offset).run();
}

}  // namespace dgalab
