////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  Copyright 2026 The richter developers                                     //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "richter/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "richter/error.hpp"

namespace richter {

namespace {

struct Node {
  enum class Op { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Call };
  Op op = Op::Constant;
  double value = 0.0;
  std::size_t variable = 0;
  std::string function;
  std::vector<std::shared_ptr<const Node>> args;
};

using NodePtr = std::shared_ptr<const Node>;

double eval(const Node& n, std::span<const double> x) {
  switch (n.op) {
    case Node::Op::Constant: return n.value;
    case Node::Op::Variable: return x[n.variable];
    case Node::Op::Neg: return -eval(*n.args[0], x);
    case Node::Op::Add: return eval(*n.args[0], x) + eval(*n.args[1], x);
    case Node::Op::Sub: return eval(*n.args[0], x) - eval(*n.args[1], x);
    case Node::Op::Mul: return eval(*n.args[0], x) * eval(*n.args[1], x);
    case Node::Op::Div: return eval(*n.args[0], x) / eval(*n.args[1], x);
    case Node::Op::Pow: return std::pow(eval(*n.args[0], x), eval(*n.args[1], x));
    case Node::Op::Call: break;
  }
  const auto& f = n.function;
  auto arg = [&](std::size_t i) { return eval(*n.args[i], x); };
  if (f == "step") {
    if (n.args.size() == 3) return x[0] <= arg(0) ? arg(1) : arg(2);
    return arg(0) <= arg(1) ? arg(2) : arg(3);
  }
  if (f == "abs") return std::abs(arg(0));
  if (f == "sqrt") return std::sqrt(arg(0));
  if (f == "exp") return std::exp(arg(0));
  if (f == "log") return std::log(arg(0));
  if (f == "sin") return std::sin(arg(0));
  if (f == "cos") return std::cos(arg(0));
  if (f == "tan") return std::tan(arg(0));
  if (f == "min") return std::min(arg(0), arg(1));
  if (f == "max") return std::max(arg(0), arg(1));
  return std::pow(arg(0), arg(1));  // pow
}

class Parser {
 public:
  Parser(std::string_view src, std::size_t dimension) : src_(src), dimension_(dimension) {}

  NodePtr parse() {
    NodePtr root = expression();
    skip_space();
    if (pos_ != src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  static NodePtr make(Node::Op op, std::vector<NodePtr> args) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->args = std::move(args);
    return n;
  }

  NodePtr expression() {
    NodePtr lhs = term();
    while (true) {
      if (accept('+'))
        lhs = make(Node::Op::Add, {lhs, term()});
      else if (accept('-'))
        lhs = make(Node::Op::Sub, {lhs, term()});
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (true) {
      if (accept('*'))
        lhs = make(Node::Op::Mul, {lhs, unary()});
      else if (accept('/'))
        lhs = make(Node::Op::Div, {lhs, unary()});
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Op::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  // Right-associative; binds tighter than unary minus on its left, so -x^2 is -(x^2).
  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Node::Op::Pow, {base, unary()});
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= src_.size()) error("unexpected end of input");
    const char c = src_[pos_];
    if (accept('(')) {
      NodePtr inner = expression();
      expect(')');
      return inner;
    }
    if ((c >= '0' && c <= '9') || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    error("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    double v = 0.0;
    const char* begin = src_.data() + pos_;
    const auto [end, ec] = std::from_chars(begin, src_.data() + src_.size(), v);
    if (ec != std::errc()) error("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    auto n = std::make_shared<Node>();
    n->value = v;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string name(src_.substr(start, pos_ - start));

    if (name == "pi") {
      auto n = std::make_shared<Node>();
      n->value = std::numbers::pi;
      return n;
    }
    if (name == "x" || (name.size() > 1 && name[0] == 'x' &&
                        name.find_first_not_of("0123456789", 1) == std::string::npos)) {
      std::size_t axis = 1;
      if (name.size() > 1) axis = std::stoul(name.substr(1));
      if (axis == 0 || axis > dimension_) {
        pos_ = start;
        error("variable " + name + " outside x1..x" + std::to_string(dimension_));
      }
      auto n = std::make_shared<Node>();
      n->op = Node::Op::Variable;
      n->variable = axis - 1;
      return n;
    }

    struct Arity {
      const char* name;
      std::size_t lo, hi;
    };
    static constexpr Arity kFunctions[] = {
        {"step", 3, 4}, {"abs", 1, 1}, {"sqrt", 1, 1}, {"exp", 1, 1}, {"log", 1, 1}, {"sin", 1, 1},
        {"cos", 1, 1},  {"tan", 1, 1}, {"min", 2, 2},  {"max", 2, 2}, {"pow", 2, 2},
    };
    const Arity* spec = nullptr;
    for (const auto& a : kFunctions)
      if (name == a.name) spec = &a;
    if (!spec) {
      pos_ = start;
      error("unknown identifier '" + name + "'");
    }
    expect('(');
    std::vector<NodePtr> args;
    if (!accept(')')) {
      do args.push_back(expression());
      while (accept(','));
      expect(')');
    }
    if (args.size() < spec->lo || args.size() > spec->hi)
      error(name + " takes " + std::to_string(spec->lo) +
            (spec->lo == spec->hi ? "" : " or " + std::to_string(spec->hi)) + " arguments, got " +
            std::to_string(args.size()));
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Call;
    n->function = name;
    n->args = std::move(args);
    return n;
  }

  std::string_view src_;
  std::size_t dimension_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarFunction parse_expression(std::string_view source, std::size_t dimension) {
  if (dimension == 0) fail(ErrorKind::InvalidArgument, "expression dimension must be at least 1");
  NodePtr root = Parser(source, dimension).parse();
  return [root](std::span<const double> x) { return eval(*root, x); };
}

}  // namespace richter
