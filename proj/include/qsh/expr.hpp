#pragma once

// The expression language.
//
//   expr   := term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := "-" factor | scalar | gen | "w[" int ("," int)* "]" | "(" expr ")"
//   gen    := ("F" | "E" | "K" | "Kinv" | "dp" | "serre") "(" int ("," int)* ")"
//   scalar := atom ("^" ["+" | "-"] int)?      atom := "q" | "v" | "s(" int "," int ")" | int
//
// Indices are 1-based and only range-checked on evaluation.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsh/scalar_io.hpp"
#include "qsh/shuffle.hpp"
#include "qsh/verma.hpp"

namespace qsh {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_, column_;
};

// Raised when an expression is valid syntax but cannot be evaluated in the
// requested carrier (bad index, module operator in a ring context, ...).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { integer, q, v, symbol, power, gen, word, add, sub, mul, neg };

  Kind kind;
  Integer value;          // integer
  std::string name;       // gen: F, E, K, Kinv, dp, serre
  std::vector<int> args;  // gen arguments, word letters, symbol (p, i)
  int exponent = 0;       // power
  std::vector<ExprPtr> children;
  int line = 0, column = 0;  // source position, ignored by ==

  friend bool operator==(const Expr& a, const Expr& b);
};

ExprPtr parse(const std::string& text);
std::string print(const Expr& e);

// Scalars: only integer, q, v, s(p,i), powers and arithmetic of those.
Scalar eval_scalar(const Expr& e, const SymbolTable& symbols);

// The free algebra (F(i,k) and dp(i,k) are divided powers, w[...] words).
GradedVector eval_free(const Expr& e, const CartanDatum& datum, const SymbolTable& symbols);
// The shuffle side via iota.
BMElement eval_shuffle(const Expr& e, PairingEngine& engine, const SymbolTable& symbols, bool normalized);
// As an operator on a Verma tensor product, applied to m.
TensorElement eval_operator(const Expr& e, const VermaModule& module, const TensorElement& m);

}  // namespace qsh
