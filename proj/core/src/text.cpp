#include "oinv/text.hpp"

#include <cctype>
#include <sstream>

#include "oinv/errors.hpp"

namespace oinv {

namespace {

constexpr unsigned kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail({"'+'", "'-'", "'*'", "end of input"});
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  /// Skips whitespace, then consumes `c` if it is next.
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    std::ostringstream msg;
    msg << "syntax error at " << line_ << ':' << column_ << ": found ";
    if (at_end())
      msg << "end of input";
    else
      msg << '\'' << peek() << '\'';
    msg << ", expected ";
    bool first = true;
    for (const auto& e : expected) {
      msg << (first ? "" : " or ") << e;
      first = false;
    }
    throw SyntaxError(msg.str(), line_, column_, std::move(expected));
  }

  std::string digits(const std::set<std::string>& expected) {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(expected);
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  int index() {
    skip_space();
    const int line = line_;
    const int column = column_;
    const std::string raw = digits({"index"});
    const Integer value(raw);
    if (value < 1 || value > Variable::kMaxIndex) {
      std::ostringstream msg;
      msg << "index " << raw << " at " << line << ':' << column << " outside 1.."
          << Variable::kMaxIndex;
      throw IndexError(msg.str(), line, column);
    }
    return static_cast<int>(value.get_si());
  }

  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      advance();
    }
    Polynomial out = term();
    if (negate) out = -out;
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  Polynomial term() {
    Polynomial out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    const int line = line_;
    const int column = column_;
    const Integer e(digits({"exponent"}));
    if (e > kMaxExponent) {
      throw SyntaxError("exponent too large", line, column, {"exponent <= 1000"});
    }
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      advance();
      Polynomial inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'x' || c == 'Y') {
      advance();
      expect('[');
      const int first = index();
      expect(',');
      const int second = index();
      expect(']');
      return Polynomial(c == 'x' ? Variable::x(first, second) : Variable::y(first, second));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits({"number"}));
      Integer den(1);
      if (accept('/')) {
        skip_space();
        const int line = line_;
        const int column = column_;
        den = Integer(digits({"denominator"}));
        if (den == 0) throw SyntaxError("zero denominator", line, column, {"nonzero denominator"});
      }
      Rational r(num, den);
      r.canonicalize();
      return Polynomial(r);
    }
    fail({"number", "'x'", "'Y'", "'('"});
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string format_variable(Variable v) {
  std::ostringstream out;
  out << (v.is_coord() ? "x[" : "Y[") << v.first() << ',' << v.second() << ']';
  return out.str();
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += format_variable(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational magnitude = abs(c);
    if (m.is_one()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += format_monomial(m);
    } else {
      out += to_string(magnitude) + '*' + format_monomial(m);
    }
  }
  return out;
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<Rational> row;
    std::string field;
    while (fields >> field) row.push_back(parse_rational(field));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  for (const auto& row : rows)
    if (row.size() != rows.front().size()) throw Error("matrix rows have different lengths");
  return Matrix(std::move(rows));
}

}  // namespace oinv
