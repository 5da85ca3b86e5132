#include "qsh/expr.hpp"

#include <cctype>
#include <sstream>

#include "qsh/qnumbers.hpp"

namespace qsh {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.args != b.args || a.exponent != b.exponent ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!(*a.children[i] == *b.children[i])) return false;
  return true;
}

namespace {

struct Token {
  enum class Type { ident, integer, punct, end };
  Type type;
  std::string text;
  int line, column;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, col = column;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Type::ident, text.substr(i, j - i), l, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Type::integer, text.substr(i, j - i), l, col});
      advance(j - i);
    } else if (std::string("()[],+-*^").find(c) != std::string::npos) {
      out.push_back({Token::Type::punct, std::string(1, c), l, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, col);
    }
  }
  out.push_back({Token::Type::end, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().type != Token::Type::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool is_punct(const char* p) const { return peek().type == Token::Type::punct && peek().text == p; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(t.type == Token::Type::end ? msg + " (at end of input)" : msg, t.line, t.column);
  }
  void expect(const char* p) {
    if (!is_punct(p)) fail(std::string("expected '") + p + "'");
    ++pos_;
  }
  int integer_arg() {
    if (peek().type != Token::Type::integer) fail("expected an integer");
    const std::string& text = tokens_[pos_].text;
    if (text.size() > 9) fail("integer argument too large");
    ++pos_;
    return std::stoi(text);
  }

  static std::shared_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (is_punct("+") || is_punct("-")) {
      const Token op = peek();
      ++pos_;
      auto e = node(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, op);
      e->children = {lhs, term()};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (is_punct("*")) {
      const Token op = peek();
      ++pos_;
      auto e = node(Expr::Kind::mul, op);
      e->children = {lhs, factor()};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr factor() {
    const Token t = peek();
    if (is_punct("-")) {
      ++pos_;
      auto e = node(Expr::Kind::neg, t);
      e->children = {factor()};
      return e;
    }
    if (is_punct("(")) {
      ++pos_;
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (t.type == Token::Type::integer) {
      ++pos_;
      auto e = node(Expr::Kind::integer, t);
      e->value = Integer(t.text);
      return power(e);
    }
    if (t.type != Token::Type::ident) fail(t.type == Token::Type::end ? "expected an operand" : "unexpected '" + t.text + "'");
    ++pos_;
    if (t.text == "q" || t.text == "v") return power(node(t.text == "q" ? Expr::Kind::q : Expr::Kind::v, t));
    if (t.text == "s") {
      auto e = node(Expr::Kind::symbol, t);
      expect("(");
      e->args.push_back(integer_arg());
      expect(",");
      e->args.push_back(integer_arg());
      expect(")");
      return power(e);
    }
    if (t.text == "w") {
      auto e = node(Expr::Kind::word, t);
      expect("[");
      e->args.push_back(integer_arg());
      while (is_punct(",")) {
        ++pos_;
        e->args.push_back(integer_arg());
      }
      expect("]");
      return e;
    }
    if (t.text == "F" || t.text == "E" || t.text == "K" || t.text == "Kinv" || t.text == "dp" || t.text == "serre") {
      auto e = node(Expr::Kind::gen, t);
      e->name = t.text;
      expect("(");
      e->args.push_back(integer_arg());
      while (is_punct(",")) {
        ++pos_;
        e->args.push_back(integer_arg());
      }
      const Token close = peek();
      expect(")");
      const std::size_t n = e->args.size();
      const bool ok = (t.text == "F" || t.text == "E") ? (n == 1 || n == 2)
                      : (t.text == "K" || t.text == "Kinv") ? n == 1
                                                              : n == 2;
      if (!ok) throw ParseError("wrong number of arguments to " + t.text, close.line, close.column);
      return e;
    }
    throw ParseError("unknown name '" + t.text + "'", t.line, t.column);
  }

  ExprPtr power(std::shared_ptr<Expr> atom) {
    if (!is_punct("^")) return atom;
    const Token caret = peek();
    ++pos_;
    int sign = 1;
    if (is_punct("-") || is_punct("+")) {
      sign = peek().text == "-" ? -1 : 1;
      ++pos_;
    }
    if (peek().type != Token::Type::integer) fail("malformed exponent");
    const std::string& text = tokens_[pos_].text;
    if (text.size() > 6) fail("exponent too large");
    ++pos_;
    auto e = node(Expr::Kind::power, caret);
    e->exponent = sign * std::stoi(text);
    e->children = {atom};
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer: sums 1, products 2, factors 3.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul: return 2;
    default: return 3;
  }
}

void print_to(std::ostream& os, const Expr& e, int min_prec) {
  const bool paren = precedence(e) < min_prec;
  if (paren) os << '(';
  auto join = [&](const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  };
  switch (e.kind) {
    case Expr::Kind::integer: os << e.value.get_str(); break;
    case Expr::Kind::q: os << 'q'; break;
    case Expr::Kind::v: os << 'v'; break;
    case Expr::Kind::symbol: os << "s(" << e.args[0] << ',' << e.args[1] << ')'; break;
    case Expr::Kind::power:
      print_to(os, *e.children[0], 3);
      os << '^' << e.exponent;
      break;
    case Expr::Kind::gen:
      os << e.name << '(';
      join(e.args);
      os << ')';
      break;
    case Expr::Kind::word:
      os << "w[";
      join(e.args);
      os << ']';
      break;
    case Expr::Kind::add:
    case Expr::Kind::sub:
      print_to(os, *e.children[0], 1);
      os << (e.kind == Expr::Kind::add ? " + " : " - ");
      print_to(os, *e.children[1], 2);
      break;
    case Expr::Kind::mul:
      print_to(os, *e.children[0], 2);
      os << '*';
      print_to(os, *e.children[1], 3);
      break;
    case Expr::Kind::neg:
      os << '-';
      if (e.children[0]->kind == Expr::Kind::neg) os << ' ';
      print_to(os, *e.children[0], 3);
      break;
  }
  if (paren) os << ')';
}

std::string where(const Expr& e) { return " (at " + std::to_string(e.line) + ":" + std::to_string(e.column) + ")"; }

int root_arg(const Expr& e, int value, int rank) {
  if (value < 1 || value > rank)
    throw EvalError("root index " + std::to_string(value) + " out of range 1.." + std::to_string(rank) + where(e));
  return value - 1;
}

bool is_scalar_tree(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer:
    case Expr::Kind::q:
    case Expr::Kind::v:
    case Expr::Kind::symbol: return true;
    case Expr::Kind::gen:
    case Expr::Kind::word: return false;
    default:
      for (const auto& c : e.children)
        if (!is_scalar_tree(*c)) return false;
      return true;
  }
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(lex(text)).parse_all(); }

std::string print(const Expr& e) {
  std::ostringstream os;
  print_to(os, e, 1);
  return os.str();
}

Scalar eval_scalar(const Expr& e, const SymbolTable& symbols) {
  switch (e.kind) {
    case Expr::Kind::integer: return Scalar(LaurentPoly(e.value));
    case Expr::Kind::q: return Scalar(LaurentPoly::v(2));
    case Expr::Kind::v: return Scalar(LaurentPoly::v(1));
    case Expr::Kind::symbol: {
      const int p = e.args[0], i = e.args[1];
      if (p < 1 || p > symbols.punctures || i < 1 || i > symbols.rank)
        throw EvalError("symbol s(" + std::to_string(p) + "," + std::to_string(i) + ") is not declared" + where(e));
      return Scalar(LaurentPoly::var(symbols.slot(p, i)));
    }
    case Expr::Kind::power: {
      const Scalar base = eval_scalar(*e.children[0], symbols);
      try {
        return base.pow(e.exponent);
      } catch (const NonInvertibleError&) {
        throw EvalError("negative power of zero" + where(e));
      }
    }
    case Expr::Kind::add: return eval_scalar(*e.children[0], symbols) + eval_scalar(*e.children[1], symbols);
    case Expr::Kind::sub: return eval_scalar(*e.children[0], symbols) - eval_scalar(*e.children[1], symbols);
    case Expr::Kind::mul: return eval_scalar(*e.children[0], symbols) * eval_scalar(*e.children[1], symbols);
    case Expr::Kind::neg: return -eval_scalar(*e.children[0], symbols);
    default: throw EvalError("expected a scalar" + where(e));
  }
}

GradedVector eval_free(const Expr& e, const CartanDatum& datum, const SymbolTable& symbols) {
  if (is_scalar_tree(e)) return eval_scalar(e, symbols) * unit_vector();
  const int rank = datum.rank();
  switch (e.kind) {
    case Expr::Kind::word: {
      Word w;
      for (int x : e.args) w.push_back(root_arg(e, x, rank));
      return word_vector(w);
    }
    case Expr::Kind::gen: {
      if (e.name == "E" || e.name == "K" || e.name == "Kinv")
        throw EvalError(e.name + " is a module operator, not an element of the algebra" + where(e));
      const int i = root_arg(e, e.args[0], rank);
      if (e.name == "F") return e.args.size() == 1 ? word_vector(Word{i}) : divided_power_word(datum, i, e.args[1]);
      if (e.name == "dp") return divided_power_word(datum, i, e.args[1]);
      const int j = root_arg(e, e.args[1], rank);
      if (i == j) throw EvalError("serre needs two distinct roots" + where(e));
      return serre_element(datum, i, j);
    }
    case Expr::Kind::add: return eval_free(*e.children[0], datum, symbols) + eval_free(*e.children[1], datum, symbols);
    case Expr::Kind::sub: return eval_free(*e.children[0], datum, symbols) - eval_free(*e.children[1], datum, symbols);
    case Expr::Kind::mul:
      return concat_mul(eval_free(*e.children[0], datum, symbols), eval_free(*e.children[1], datum, symbols));
    case Expr::Kind::neg: return -eval_free(*e.children[0], datum, symbols);
    case Expr::Kind::power: throw EvalError("only scalars can be raised to a power" + where(e));
    default: throw EvalError("unexpected expression" + where(e));
  }
}

BMElement eval_shuffle(const Expr& e, PairingEngine& engine, const SymbolTable& symbols, bool normalized) {
  return iota(engine, eval_free(e, engine.datum(), symbols), normalized);
}

TensorElement eval_operator(const Expr& e, const VermaModule& module, const TensorElement& m) {
  const CartanDatum& datum = module.datum();
  const SymbolTable symbols{datum.rank(), module.max_label()};
  if (is_scalar_tree(e)) return eval_scalar(e, symbols) * m;
  const int rank = datum.rank();
  switch (e.kind) {
    case Expr::Kind::gen: {
      const int i = root_arg(e, e.args[0], rank);
      if (e.name == "F") return module.act_F(i, e.args.size() == 1 ? 1 : e.args[1], m);
      if (e.name == "E") return e.args.size() == 1 ? module.act_E(i, m) : module.act_E_divided_power(i, e.args[1], m);
      if (e.name == "K") return module.act_K(i, 1, m);
      if (e.name == "Kinv") return module.act_K(i, -1, m);
      [[fallthrough]];
    }
    case Expr::Kind::word: {
      // an element of the negative half acts through its F-monomials
      const GradedVector x = eval_free(e, datum, symbols);
      TensorElement out;
      for (const auto& [w, c] : x) {
        TensorElement t = m;
        for (std::size_t p = w.size(); p-- > 0;) t = module.act_F(w[p], 1, t);
        out += c * t;
      }
      return out;
    }
    case Expr::Kind::add: return eval_operator(*e.children[0], module, m) + eval_operator(*e.children[1], module, m);
    case Expr::Kind::sub: return eval_operator(*e.children[0], module, m) - eval_operator(*e.children[1], module, m);
    case Expr::Kind::mul: return eval_operator(*e.children[0], module, eval_operator(*e.children[1], module, m));
    case Expr::Kind::neg: return -eval_operator(*e.children[0], module, m);
    case Expr::Kind::power: throw EvalError("only scalars can be raised to a power" + where(e));
    default: throw EvalError("unexpected expression" + where(e));
  }
}

}  // namespace qsh
