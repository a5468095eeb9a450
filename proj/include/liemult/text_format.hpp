#ifndef LIEMULT_TEXT_FORMAT_HPP
#define LIEMULT_TEXT_FORMAT_HPP

// Line-oriented text format for Lie algebras:
//
//   # comment
//   dim 6
//   param eps = 1
//   [1,2] = 5
//   [2,4] = eps*6
//   [3,5] = -7 + 1/2*6
//
// `dim N` comes first. A bracket line gives [x_i, x_j] for 1-based i < j as
// a sum of terms `[RATIONAL|NAME][*]k`; a term without a coefficient is the
// basis vector x_k, optionally negated. Whitespace inside a line is
// ignored. Brackets not listed are zero.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liemult/lie_algebra.hpp"

namespace liemult {

struct Term {
  Scalar coeff{1};
  /// Parameter multiplying the term; empty for a plain rational coefficient.
  std::string param;
  int target = 1;  // 1-based
};

struct BracketLine {
  int i = 1;  // 1-based, i < j
  int j = 2;
  std::vector<Term> terms;
};

/// Parsed form of an algebra file, before parameters are substituted.
struct AlgebraSpec {
  int dim = 0;
  std::vector<std::pair<std::string, Scalar>> params;
  std::vector<BracketLine> brackets;
};

/// Substitutes parameter values (bindings override the declared defaults).
inline LieAlgebra instantiate(const AlgebraSpec& spec, const std::map<std::string, Scalar>& bindings = {}) {
  std::map<std::string, Scalar> values;
  for (const auto& [name, v] : spec.params) values[name] = v;
  for (const auto& [name, v] : bindings) values[name] = v;
  std::vector<Product> ps;
  for (const auto& b : spec.brackets) {
    std::map<int, Scalar> acc;
    for (const auto& t : b.terms) {
      Scalar c = t.coeff;
      if (!t.param.empty()) {
        auto it = values.find(t.param);
        if (it == values.end()) throw MissingParameter(t.param);
        c *= it->second;
      }
      acc[t.target - 1] += c;
    }
    SparseVec v;
    for (const auto& [k, c] : acc)
      if (sgn(c) != 0) v.emplace_back(k, c);
    if (!v.empty()) ps.push_back({b.i - 1, b.j - 1, std::move(v)});
  }
  return LieAlgebra(spec.dim, ps);
}

namespace detail {

/// A line with whitespace removed, remembering original 1-based columns.
class Cursor {
 public:
  Cursor(const std::string& line, int line_no) : line_no_(line_no) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] == '#') break;
      if (!std::isspace(static_cast<unsigned char>(line[c]))) {
        chars_.push_back(line[c]);
        cols_.push_back(static_cast<int>(c) + 1);
      }
    }
  }

  bool empty() const { return chars_.empty(); }
  bool done() const { return pos_ >= chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[pos_]; }
  int column() const { return done() ? (cols_.empty() ? 1 : cols_.back() + 1) : cols_[pos_]; }
  const std::string& text() const { return chars_; }
  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }

  bool accept(const std::string& s) {
    if (chars_.compare(pos_, s.size(), s) != 0) return false;
    pos_ += s.size();
    return true;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, ParseError::Kind kind = ParseError::Kind::Syntax) const {
    throw ParseError(kind, line_no_, column(), what);
  }

  int integer() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(chars_.substr(start, pos_ - start));
  }

  Scalar rational() {
    const std::size_t start = pos_;
    accept("-");
    const std::size_t digits = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (digits == pos_) fail("expected a rational number");
    if (accept("/")) {
      const std::size_t den = pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("expected a denominator");
      if (chars_.find_first_not_of('0', den) >= pos_) {
        pos_ = den;
        fail("zero denominator");
      }
    }
    Scalar q(chars_.substr(start, pos_ - start));
    q.canonicalize();
    return q;
  }

  std::string name() {
    const std::size_t start = pos_;
    if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a name");
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return chars_.substr(start, pos_ - start);
  }

  int line_no() const { return line_no_; }

 private:
  std::string chars_;
  std::vector<int> cols_;
  std::size_t pos_ = 0;
  int line_no_;
};

}  // namespace detail

/// Parses one algebra without validating the Jacobi identity.
inline AlgebraSpec parse_algebra_spec(const std::string& text) {
  AlgebraSpec spec;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_dim = false;
  std::map<std::pair<int, int>, int> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    detail::Cursor cur(raw, line_no);
    if (cur.empty()) continue;
    if (!have_dim) {
      if (!cur.accept("dim")) cur.fail("expected 'dim N' first");
      const int n = cur.integer();
      if (n < 1) cur.fail("dimension must be positive");
      if (!cur.done()) cur.fail("unexpected text after dimension");
      spec.dim = n;
      have_dim = true;
      continue;
    }
    if (cur.peek() != '[' && cur.accept("param")) {
      const std::string name = cur.name();
      cur.expect('=');
      const Scalar v = cur.rational();
      if (!cur.done()) cur.fail("unexpected text after parameter value");
      for (const auto& p : spec.params)
        if (p.first == name) throw ParseError(ParseError::Kind::Syntax, line_no, 0, "parameter declared twice: " + name);
      spec.params.emplace_back(name, v);
      continue;
    }
    BracketLine b;
    cur.expect('[');
    const int i_col = cur.column();
    b.i = cur.integer();
    cur.expect(',');
    const int j_col = cur.column();
    b.j = cur.integer();
    cur.expect(']');
    if (b.i < 1 || b.i > spec.dim)
      throw ParseError(ParseError::Kind::IndexOutOfRange, line_no, i_col, "index " + std::to_string(b.i));
    if (b.j < 1 || b.j > spec.dim)
      throw ParseError(ParseError::Kind::IndexOutOfRange, line_no, j_col, "index " + std::to_string(b.j));
    if (b.i >= b.j) throw ParseError(ParseError::Kind::Syntax, line_no, i_col, "bracket indices must satisfy i < j");
    if (auto [it, fresh] = seen.emplace(std::pair{b.i, b.j}, line_no); !fresh)
      throw ParseError(ParseError::Kind::DuplicateBracket, line_no, 0,
                       "[" + std::to_string(b.i) + "," + std::to_string(b.j) + "] already given on line " +
                           std::to_string(it->second));
    cur.expect('=');
    do {
      Term t;
      const std::size_t start = cur.pos();
      // A coefficient is present exactly when a '*' follows the first token.
      const std::size_t star = cur.text().find('*', start);
      const std::size_t plus = cur.text().find('+', start);
      if (star != std::string::npos && star < plus) {
        if (std::isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_') {
          t.param = cur.name();
          bool declared = false;
          for (const auto& p : spec.params) declared = declared || p.first == t.param;
          if (!declared) cur.fail("undeclared parameter " + t.param, ParseError::Kind::MissingParameter);
        } else {
          t.coeff = cur.rational();
        }
        cur.expect('*');
      } else if (cur.accept("-")) {
        t.coeff = -1;
      }
      const int k_col = cur.column();
      t.target = cur.integer();
      if (t.target < 1 || t.target > spec.dim)
        throw ParseError(ParseError::Kind::IndexOutOfRange, line_no, k_col, "index " + std::to_string(t.target));
      b.terms.push_back(std::move(t));
    } while (cur.accept("+"));
    if (!cur.done()) cur.fail("expected '+' or end of line");
    spec.brackets.push_back(std::move(b));
  }
  if (!have_dim) throw ParseError(ParseError::Kind::Syntax, line_no + 1, 0, "missing 'dim N'");
  return spec;
}

/// Parses and validates one algebra.
inline LieAlgebra parse_algebra(const std::string& text, const std::map<std::string, Scalar>& bindings = {}) {
  const AlgebraSpec spec = parse_algebra_spec(text);
  LieAlgebra l;
  try {
    l = instantiate(spec, bindings);
  } catch (const MissingParameter& e) {
    throw ParseError(ParseError::Kind::MissingParameter, 0, 0, e.what());
  }
  const ValidationReport v = validate(l);
  if (!v.ok) {
    const auto& t = *v.triple;
    throw ParseError(ParseError::Kind::JacobiFailure, 0, 0,
                     "triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  }
  return l;
}

inline std::string format_term(const Term& t) {
  std::string k = std::to_string(t.target);
  if (!t.param.empty()) {
    if (t.coeff != 1) throw std::invalid_argument("cannot write a scaled parameter term");
    return t.param + "*" + k;
  }
  if (t.coeff == 1) return k;
  if (t.coeff == -1) return "-" + k;
  return t.coeff.get_str() + "*" + k;
}

inline std::string serialize(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "dim " << spec.dim << "\n";
  for (const auto& [name, v] : spec.params) out << "param " << name << " = " << v.get_str() << "\n";
  for (const auto& b : spec.brackets) {
    out << "[" << b.i << "," << b.j << "] = ";
    for (std::size_t t = 0; t < b.terms.size(); ++t) out << (t ? " + " : "") << format_term(b.terms[t]);
    out << "\n";
  }
  return out.str();
}

inline AlgebraSpec spec_of(const LieAlgebra& l) {
  AlgebraSpec spec;
  spec.dim = l.dim();
  for (const auto& p : l.products()) {
    BracketLine b{p.i + 1, p.j + 1, {}};
    for (const auto& [k, c] : p.value) b.terms.push_back({c, "", k + 1});
    spec.brackets.push_back(std::move(b));
  }
  return spec;
}

inline std::string serialize(const LieAlgebra& l) { return serialize(spec_of(l)); }

/// Splits a multi-algebra file at its `dim` lines. A preceding comment
/// `# section: NAME` names the section.
inline std::vector<std::pair<std::string, AlgebraSpec>> parse_sections(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> chunks;
  std::istringstream in(text);
  std::string raw, pending_name;
  while (std::getline(in, raw)) {
    const auto first = raw.find_first_not_of(" \t");
    if (first != std::string::npos && raw.compare(first, 10, "# section:") == 0) {
      pending_name = raw.substr(first + 10);
      pending_name.erase(0, pending_name.find_first_not_of(' '));
      continue;
    }
    if (first != std::string::npos && raw.compare(first, 3, "dim") == 0) {
      chunks.emplace_back(pending_name, "");
      pending_name.clear();
    }
    if (!chunks.empty()) chunks.back().second += raw + "\n";
  }
  std::vector<std::pair<std::string, AlgebraSpec>> out;
  for (const auto& [name, body] : chunks) out.emplace_back(name, parse_algebra_spec(body));
  return out;
}

}  // namespace liemult

#endif  // LIEMULT_TEXT_FORMAT_HPP
