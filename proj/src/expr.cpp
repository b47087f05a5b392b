#include "nflux/expr.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>

namespace nflux {

struct Expression::Node {
  enum class Kind { Constant, Variable, Unary, Binary, Call } kind;
  double value = 0.0;
  std::size_t var = 0;
  char op = 0;
  double (*fn1)(double) = nullptr;
  double (*fn2)(double, double) = nullptr;
  std::shared_ptr<const Node> lhs, rhs;

  double eval(std::span<const double> vars) const {
    switch (kind) {
      case Kind::Constant: return value;
      case Kind::Variable: return vars[var];
      case Kind::Unary: return -lhs->eval(vars);
      case Kind::Binary: {
        double a = lhs->eval(vars), b = rhs->eval(vars);
        switch (op) {
          case '+': return a + b;
          case '-': return a - b;
          case '*': return a * b;
          case '/': return a / b;
          default: return std::pow(a, b);
        }
      }
      case Kind::Call:
        return fn2 ? fn2(lhs->eval(vars), rhs->eval(vars)) : fn1(lhs->eval(vars));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ConfigError, "expression parse error at line " +
                                            std::to_string(line) + ", column " +
                                            std::to_string(col) + ": " + message);
  }

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool consume(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  NodePtr make_const(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Constant;
    n->value = v;
    return n;
  }

  NodePtr make_binary(char op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  NodePtr parse_expression() {
    NodePtr node = parse_term();
    while (true) {
      skip_space();
      if (consume('+')) {
        node = make_binary('+', node, parse_term());
      } else if (consume('-')) {
        node = make_binary('-', node, parse_term());
      } else {
        return node;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr node = parse_power();
    while (true) {
      skip_space();
      if (consume('*')) {
        node = make_binary('*', node, parse_power());
      } else if (consume('/')) {
        node = make_binary('/', node, parse_power());
      } else {
        return node;
      }
    }
  }

  NodePtr parse_power() {
    NodePtr base = parse_unary();
    if (consume('^')) return make_binary('^', base, parse_power());
    return base;
  }

  NodePtr parse_unary() {
    skip_space();
    if (consume('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Unary;
      n->lhs = parse_unary();
      return n;
    }
    if (consume('+')) return parse_unary();
    return parse_primary();
  }

  NodePtr parse_primary() {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
    if (consume('(')) {
      NodePtr inner = parse_expression();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    const char* start = text.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start) fail("malformed number");
    pos += std::size_t(end - start);
    return make_const(v);
  }

  NodePtr parse_name() {
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_')) {
      ++pos;
    }
    std::string name = text.substr(start, pos - start);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Variable;
        n->var = i;
        return n;
      }
    }
    if (name == "pi") return make_const(3.14159265358979323846);
    if (name == "e") return make_const(2.71828182845904523536);

    static const std::map<std::string, double (*)(double)> unary_fns = {
        {"sin", std::sin},   {"cos", std::cos},   {"tan", std::tan},
        {"asin", std::asin}, {"acos", std::acos}, {"atan", std::atan},
        {"sinh", std::sinh}, {"cosh", std::cosh}, {"tanh", std::tanh},
        {"exp", std::exp},   {"log", std::log},   {"sqrt", std::sqrt},
        {"abs", std::fabs}};
    static const std::map<std::string, double (*)(double, double)> binary_fns = {
        {"atan2", std::atan2}, {"pow", std::pow}, {"min", std::fmin},
        {"max", std::fmax}};

    auto u = unary_fns.find(name);
    auto b = binary_fns.find(name);
    if (u == unary_fns.end() && b == binary_fns.end()) {
      pos = start;
      fail("unknown identifier '" + name + "'");
    }
    if (!consume('(')) fail("expected '(' after function name");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Call;
    n->lhs = parse_expression();
    if (b != binary_fns.end()) {
      if (!consume(',')) fail("expected ',' in two-argument function");
      n->rhs = parse_expression();
      n->fn2 = b->second;
    } else {
      n->fn1 = u->second;
    }
    if (!consume(')')) fail("expected ')' after function arguments");
    return n;
  }
};

}  // namespace

Expression Expression::parse(const std::string& text,
                             const std::vector<std::string>& variables) {
  Parser parser{text, variables};
  Expression out;
  out.root_ = parser.parse_expression();
  parser.skip_space();
  if (parser.pos != text.size()) parser.fail("trailing input");
  out.text_ = text;
  out.n_vars_ = variables.size();
  return out;
}

double Expression::eval(std::span<const double> values) const {
  if (values.size() < n_vars_) {
    throw Error(ErrorKind::ConfigError, "expression evaluated with too few variables");
  }
  return root_->eval(values);
}

}  // namespace nflux
