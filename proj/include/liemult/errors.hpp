#ifndef LIEMULT_ERRORS_HPP
#define LIEMULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liemult {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("Lie algebra is not nilpotent") {}
};

class NotAnIdeal : public Error {
 public:
  NotAnIdeal() : Error("subspace is not an ideal") {}
};

class AbelianInput : public Error {
 public:
  AbelianInput() : Error("invariant is only defined for non-abelian Lie algebras") {}
};

class WrongClass : public Error {
 public:
  explicit WrongClass(int cls)
      : Error("expected a Lie algebra of nilpotency class 2, got class " + std::to_string(cls)) {}
};

class ResourceLimit : public Error {
 public:
  ResourceLimit(long long needed, long long cap)
      : Error("Hall basis of dimension " + std::to_string(needed) + " exceeds the cap of " +
              std::to_string(cap) + " (set LIEMULT_BASIS_CAP to raise it)") {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t got, int expected)
      : Error("vector of length " + std::to_string(got) + " used with a Lie algebra of dimension " +
              std::to_string(expected)) {}
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name) : Error("unknown catalogue name: " + name) {}
};

class MissingParameter : public Error {
 public:
  explicit MissingParameter(const std::string& name) : Error("parameter not bound: " + name) {}
};

/// Raised by the algebra text parser. `line` and `column` are 1-based;
/// column is 0 when the error concerns the whole line.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, IndexOutOfRange, DuplicateBracket, JacobiFailure, MissingParameter };

  ParseError(Kind kind, int line, int column, const std::string& what)
      : Error(format(kind, line, column, what)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(Kind kind, int line, int column, const std::string& what) {
    static const char* names[] = {"syntax error", "index out of range", "duplicate bracket",
                                  "Jacobi identity fails", "missing parameter"};
    std::string out = names[static_cast<int>(kind)];
    if (line > 0) {
      out += " at line " + std::to_string(line);
      if (column > 0) out += ", column " + std::to_string(column);
    }
    return out + ": " + what;
  }

  Kind kind_;
  int line_;
  int column_;
};

}  // namespace liemult

#endif  // LIEMULT_ERRORS_HPP
