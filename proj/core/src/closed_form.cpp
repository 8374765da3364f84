#include "telescope/closed_form.hpp"

#include <vector>

#include "lexer.hpp"
#include "telescope/errors.hpp"

namespace telescope {

struct ClosedForm::Node {
  enum class Op { number, var_n, neg, add, sub, mul, div, pow, call, guard };

  Op op = Op::number;
  Rational value;    // number
  std::string name;  // call
  bool even = true;  // guard
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using Node = ClosedForm::Node;
using NodePtr = std::shared_ptr<const Node>;
using detail::TokenCursor;
using detail::TokenKind;

NodePtr make(Node::Op op, std::vector<NodePtr> kids = {}) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->kids = std::move(kids);
  return n;
}

class ClosedFormParser {
 public:
  explicit ClosedFormParser(std::string_view text) : cur_(text) {}

  NodePtr parse() {
    if (cur_.at_end()) {
      cur_.fail("expected an expression");
    }
    NodePtr e = expr();
    if (!cur_.at_end()) {
      cur_.fail("unexpected token");
    }
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr acc = term();
    while (true) {
      if (cur_.accept('+')) {
        acc = make(Node::Op::add, {acc, term()});
      } else if (cur_.accept('-')) {
        acc = make(Node::Op::sub, {acc, term()});
      } else {
        return acc;
      }
    }
  }

  // A term is a flat product; guards sit first so they short-circuit.
  NodePtr term() {
    std::vector<NodePtr> guards;
    NodePtr acc;
    auto push = [&](NodePtr item) {
      if (item->op == Node::Op::guard) {
        guards.push_back(std::move(item));
      } else {
        acc = acc ? make(Node::Op::mul, {acc, item}) : item;
      }
    };
    push(item());
    while (true) {
      if (cur_.accept('*')) {
        push(item());
      } else if (cur_.is_punct('/')) {
        cur_.next();
        NodePtr divisor = item();
        if (divisor->op == Node::Op::guard) {
          cur_.fail("cannot divide by a parity guard");
        }
        acc = make(Node::Op::div, {acc ? acc : number(1), divisor});
      } else if (cur_.is_punct('[')) {
        push(guard());
      } else {
        break;
      }
    }
    if (guards.empty()) {
      return acc;
    }
    guards.push_back(acc ? acc : number(1));
    NodePtr product = make(Node::Op::mul, std::move(guards));
    return product;
  }

  NodePtr item() {
    if (cur_.is_punct('[')) {
      return guard();
    }
    if (cur_.accept('-')) {
      return make(Node::Op::neg, {item()});
    }
    return power();
  }

  NodePtr guard() {
    cur_.expect('[');
    if (!cur_.is_ident("n")) {
      cur_.fail("expected 'n' in parity guard");
    }
    cur_.next();
    auto g = std::make_shared<Node>();
    g->op = Node::Op::guard;
    if (cur_.is_ident("even")) {
      g->even = true;
    } else if (cur_.is_ident("odd")) {
      g->even = false;
    } else {
      cur_.fail("expected 'even' or 'odd'");
    }
    cur_.next();
    cur_.expect(']');
    return g;
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!cur_.accept('^')) {
      return base;
    }
    NodePtr exponent = cur_.accept('-') ? make(Node::Op::neg, {primary()}) : primary();
    return make(Node::Op::pow, {base, exponent});
  }

  NodePtr number(const Rational& v) {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::number;
    n->value = v;
    return n;
  }

  NodePtr primary() {
    const auto& t = cur_.peek();
    if (t.kind == TokenKind::number) {
      return number(Rational(Integer(cur_.next().text)));
    }
    if (cur_.accept('(')) {
      NodePtr e = expr();
      cur_.expect(')');
      return e;
    }
    if (t.kind == TokenKind::ident) {
      const std::string name = t.text;
      if (name == "n") {
        cur_.next();
        return make(Node::Op::var_n);
      }
      int arity = 0;
      if (name == "binom") {
        arity = 2;
      } else if (name == "catalan" || name == "factorial" || name == "floor") {
        arity = 1;
      } else {
        throw ParseError(t.pos, "unknown name '" + name + "'");
      }
      cur_.next();
      cur_.expect('(');
      auto call = std::make_shared<Node>();
      call->op = Node::Op::call;
      call->name = name;
      call->kids.push_back(expr());
      for (int i = 1; i < arity; ++i) {
        cur_.expect(',');
        call->kids.push_back(expr());
      }
      cur_.expect(')');
      return call;
    }
    cur_.fail("expected a number, n, a function or '('");
  }

  TokenCursor cur_;
};

std::int64_t integer_arg(const Rational& v, const std::string& fn) {
  if (!v.is_integer()) {
    throw EvalError(fn + " argument " + v.to_string() + " is not an integer");
  }
  return v.to_int64();
}

Rational evaluate(const Node& node, std::int64_t n) {
  switch (node.op) {
    case Node::Op::number:
      return node.value;
    case Node::Op::var_n:
      return Rational(n);
    case Node::Op::neg:
      return -evaluate(*node.kids[0], n);
    case Node::Op::add:
      return evaluate(*node.kids[0], n) + evaluate(*node.kids[1], n);
    case Node::Op::sub:
      return evaluate(*node.kids[0], n) - evaluate(*node.kids[1], n);
    case Node::Op::mul: {
      for (const auto& kid : node.kids) {
        if (kid->op == Node::Op::guard && ((n % 2 == 0) != kid->even)) {
          return Rational();
        }
      }
      Rational acc = 1;
      for (const auto& kid : node.kids) {
        if (kid->op != Node::Op::guard) {
          acc *= evaluate(*kid, n);
        }
      }
      return acc;
    }
    case Node::Op::div: {
      const Rational d = evaluate(*node.kids[1], n);
      if (d.is_zero()) {
        throw EvalError("division by zero at n=" + std::to_string(n));
      }
      return evaluate(*node.kids[0], n) / d;
    }
    case Node::Op::pow: {
      const Rational base = evaluate(*node.kids[0], n);
      const std::int64_t e = integer_arg(evaluate(*node.kids[1], n), "exponent");
      if (base.is_zero() && e < 0) {
        throw EvalError("zero raised to a negative power at n=" + std::to_string(n));
      }
      return base.pow(e);
    }
    case Node::Op::guard:
      return Rational((n % 2 == 0) == node.even ? 1 : 0);
    case Node::Op::call: {
      const Rational x = evaluate(*node.kids[0], n);
      if (node.name == "floor") {
        return Rational(x.floor());
      }
      if (node.name == "factorial") {
        const std::int64_t m = integer_arg(x, node.name);
        if (m < 0) {
          throw EvalError("factorial of negative argument " + std::to_string(m));
        }
        return Rational(factorial(m));
      }
      if (node.name == "catalan") {
        const std::int64_t m = integer_arg(x, node.name);
        if (m < 0) {
          return Rational();
        }
        return Rational(binomial(2 * Integer(x.numerator()), x.numerator()), x.numerator() + 1);
      }
      const std::int64_t top = integer_arg(x, node.name);
      const std::int64_t bottom = integer_arg(evaluate(*node.kids[1], n), node.name);
      if (top < 0) {
        return Rational();
      }
      return Rational(binomial(Integer(x.numerator()), Integer(std::to_string(bottom))));
    }
  }
  return Rational();
}

}  // namespace

ClosedForm ClosedForm::parse(std::string_view text) {
  ClosedForm f;
  f.root_ = ClosedFormParser(text).parse();
  f.text_ = std::string(text);
  return f;
}

Rational ClosedForm::eval(std::int64_t n) const { return evaluate(*root_, n); }

Rational eval_closed_form(std::string_view expr, std::int64_t n) { return ClosedForm::parse(expr).eval(n); }

}  // namespace telescope
