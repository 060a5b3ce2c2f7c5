#include "thetakit/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <cmath>
#include <numbers>

#include "thetakit/error.hpp"

namespace thetakit {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 13> kFunctions{{
    {"sin", Function::Sin},   {"cos", Function::Cos},   {"tan", Function::Tan},
    {"asin", Function::Asin}, {"acos", Function::Acos}, {"atan", Function::Atan},
    {"sqrt", Function::Sqrt}, {"exp", Function::Exp},   {"log", Function::Log},
    {"abs", Function::Abs},   {"sinh", Function::Sinh}, {"cosh", Function::Cosh},
    {"tanh", Function::Tanh},
}};

std::optional<double> named_constant(std::string_view name) {
  if (name == "pi") return std::numbers::pi;
  if (name == "e") return std::numbers::e;
  return std::nullopt;
}

bool is_reserved(std::string_view name) {
  return function_from_name(name).has_value() || named_constant(name).has_value();
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

using NodePtr = std::shared_ptr<const Node>;

NodePtr make_constant(double v) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Constant;
  n->value = v;
  return n;
}

NodePtr make_variable() {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Variable;
  n->has_variable = true;
  return n;
}

NodePtr make_unary(NodeKind kind, NodePtr a, Function fn = Function::Sin) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->function = fn;
  n->has_variable = a->has_variable;
  n->args[0] = std::move(a);
  return n;
}

NodePtr make_binary(NodeKind kind, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->has_variable = a->has_variable || b->has_variable;
  n->args[0] = std::move(a);
  n->args[1] = std::move(b);
  return n;
}

class Parser {
 public:
  Parser(std::string_view src, std::optional<std::string> variable)
      : src_(src), variable_(std::move(variable)) {
    if (variable_) {
      if (variable_->empty() || !is_ident_start((*variable_)[0]) || is_reserved(*variable_)) {
        throw Error(ErrorCode::InvalidArgument,
                    "'" + *variable_ + "' cannot be used as a variable name");
      }
    }
  }

  NodePtr parse() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "expression");
    NodePtr root = expr();
    skip_ws();
    if (pos_ < src_.size()) throw SyntaxError(pos_, "operator or end of input");
    return root;
  }

  std::string variable() const { return variable_.value_or(std::string{}); }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_binary(NodeKind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make_binary(NodeKind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_binary(NodeKind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_binary(NodeKind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make_unary(NodeKind::Negate, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make_binary(NodeKind::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "number, identifier or '('");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (is_ident_start(c)) return identifier();
    throw SyntaxError(pos_, "number, identifier or '('");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    double v = 0.0;
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
    if (ec == std::errc::result_out_of_range) throw SyntaxError(start, "finite number");
    if (ec != std::errc{}) throw SyntaxError(start, "number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return make_constant(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);

    if (auto fn = function_from_name(name)) {
      if (!accept('(')) throw SyntaxError(pos_, "'(' after function name");
      NodePtr arg = expr();
      if (!accept(')')) throw SyntaxError(pos_, "')'");
      return make_unary(NodeKind::Call, arg, *fn);
    }
    if (auto k = named_constant(name)) return make_constant(*k);

    std::size_t next = pos_;
    while (next < src_.size() && std::isspace(static_cast<unsigned char>(src_[next]))) ++next;
    if (next < src_.size() && src_[next] == '(') {
      throw Error(ErrorCode::UnknownIdentifier, "unknown function '" + std::string(name) +
                                                    "' at offset " + std::to_string(start));
    }

    if (!variable_) {
      variable_ = std::string(name);
    } else if (*variable_ != name) {
      throw Error(ErrorCode::UnknownIdentifier, "'" + std::string(name) + "' at offset " +
                                                    std::to_string(start) +
                                                    " (variable is '" + *variable_ + "')");
    }
    return make_variable();
  }

  std::string_view src_;
  std::optional<std::string> variable_;
  std::size_t pos_ = 0;
};

[[noreturn]] void domain_failure(const char* what, double x) {
  throw Error(ErrorCode::DomainError,
              std::string(what) + " is not finite at x = " + std::to_string(x));
}

double check(double v, const char* what, double x) {
  if (!std::isfinite(v)) domain_failure(what, x);
  return v;
}

const char* kind_label(const Node& n) {
  switch (n.kind) {
    case NodeKind::Constant: return "constant";
    case NodeKind::Variable: return "variable";
    case NodeKind::Negate: return "negation";
    case NodeKind::Add: return "sum";
    case NodeKind::Sub: return "difference";
    case NodeKind::Mul: return "product";
    case NodeKind::Div: return "quotient";
    case NodeKind::Pow: return "power";
    case NodeKind::Call: return function_name(n.function).data();
  }
  return "node";
}

double apply_scalar(Function fn, double a) {
  switch (fn) {
    case Function::Sin: return std::sin(a);
    case Function::Cos: return std::cos(a);
    case Function::Tan: return std::tan(a);
    case Function::Asin: return std::asin(a);
    case Function::Acos: return std::acos(a);
    case Function::Atan: return std::atan(a);
    case Function::Sqrt: return std::sqrt(a);
    case Function::Exp: return std::exp(a);
    case Function::Log: return a > 0.0 ? std::log(a) : std::numeric_limits<double>::quiet_NaN();
    case Function::Abs: return std::fabs(a);
    case Function::Sinh: return std::sinh(a);
    case Function::Cosh: return std::cosh(a);
    case Function::Tanh: return std::tanh(a);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

Jet apply_jet(Function fn, const Jet& a) {
  switch (fn) {
    case Function::Sin: return sin(a);
    case Function::Cos: return cos(a);
    case Function::Tan: return tan(a);
    case Function::Asin: return asin(a);
    case Function::Acos: return acos(a);
    case Function::Atan: return atan(a);
    case Function::Sqrt: return sqrt(a);
    case Function::Exp: return exp(a);
    case Function::Log: return log(a);
    case Function::Abs: return abs(a);
    case Function::Sinh: return sinh(a);
    case Function::Cosh: return cosh(a);
    case Function::Tanh: return tanh(a);
  }
  return {};
}

double eval_node(const Node& n, double x) {
  double v = 0.0;
  switch (n.kind) {
    case NodeKind::Constant: return n.value;
    case NodeKind::Variable: return x;
    case NodeKind::Negate: v = -eval_node(*n.args[0], x); break;
    case NodeKind::Add: v = eval_node(*n.args[0], x) + eval_node(*n.args[1], x); break;
    case NodeKind::Sub: v = eval_node(*n.args[0], x) - eval_node(*n.args[1], x); break;
    case NodeKind::Mul: v = eval_node(*n.args[0], x) * eval_node(*n.args[1], x); break;
    case NodeKind::Div: v = eval_node(*n.args[0], x) / eval_node(*n.args[1], x); break;
    case NodeKind::Pow: v = std::pow(eval_node(*n.args[0], x), eval_node(*n.args[1], x)); break;
    case NodeKind::Call: v = apply_scalar(n.function, eval_node(*n.args[0], x)); break;
  }
  return check(v, kind_label(n), x);
}

bool is_small_integer(double p) {
  return std::isfinite(p) && std::floor(p) == p && std::fabs(p) < 1.0e9;
}

Jet jet_node(const Node& n, double x, int order) {
  Jet r;
  switch (n.kind) {
    case NodeKind::Constant: return Jet::constant(n.value);
    case NodeKind::Variable: return Jet::variable(x);
    case NodeKind::Negate: r = -jet_node(*n.args[0], x, order); break;
    case NodeKind::Add: r = jet_node(*n.args[0], x, order) + jet_node(*n.args[1], x, order); break;
    case NodeKind::Sub: r = jet_node(*n.args[0], x, order) - jet_node(*n.args[1], x, order); break;
    case NodeKind::Mul: r = jet_node(*n.args[0], x, order) * jet_node(*n.args[1], x, order); break;
    case NodeKind::Div: r = jet_node(*n.args[0], x, order) / jet_node(*n.args[1], x, order); break;
    case NodeKind::Pow: {
      const Jet base = jet_node(*n.args[0], x, order);
      const Node& exponent = *n.args[1];
      if (!exponent.has_variable) {
        const double p = eval_node(exponent, x);
        r = is_small_integer(p) ? pow_int(base, static_cast<int>(p)) : pow_real(base, p);
      } else {
        r = pow_jet(base, jet_node(exponent, x, order));
      }
      break;
    }
    case NodeKind::Call: r = apply_jet(n.function, jet_node(*n.args[0], x, order)); break;
  }
  for (int k = 0; k <= order; ++k) check(r[static_cast<std::size_t>(k)], kind_label(n), x);
  return r;
}

void append_number(std::string& out, double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), ptr);
}

void serialize_node(const Node& n, const std::string& var, std::string& out) {
  switch (n.kind) {
    case NodeKind::Constant: append_number(out, n.value); return;
    case NodeKind::Variable: out += var; return;
    case NodeKind::Negate:
      out += "(-";
      serialize_node(*n.args[0], var, out);
      out += ')';
      return;
    case NodeKind::Call:
      out += function_name(n.function);
      out += '(';
      serialize_node(*n.args[0], var, out);
      out += ')';
      return;
    default: break;
  }
  const char* op = " + ";
  switch (n.kind) {
    case NodeKind::Sub: op = " - "; break;
    case NodeKind::Mul: op = " * "; break;
    case NodeKind::Div: op = " / "; break;
    case NodeKind::Pow: op = " ^ "; break;
    default: break;
  }
  out += '(';
  serialize_node(*n.args[0], var, out);
  out += op;
  serialize_node(*n.args[1], var, out);
  out += ')';
}

bool equal_nodes(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Constant: return a.value == b.value;
    case NodeKind::Variable: return true;
    case NodeKind::Call:
      return a.function == b.function && equal_nodes(*a.args[0], *b.args[0]);
    case NodeKind::Negate: return equal_nodes(*a.args[0], *b.args[0]);
    default:
      return equal_nodes(*a.args[0], *b.args[0]) && equal_nodes(*a.args[1], *b.args[1]);
  }
}

}  // namespace

std::string_view function_name(Function fn) noexcept {
  for (const auto& [name, f] : kFunctions) {
    if (f == fn) return name;
  }
  return "?";
}

std::optional<Function> function_from_name(std::string_view name) noexcept {
  for (const auto& [n, f] : kFunctions) {
    if (n == name) return f;
  }
  return std::nullopt;
}

int Node::arity() const noexcept {
  switch (kind) {
    case NodeKind::Constant:
    case NodeKind::Variable: return 0;
    case NodeKind::Negate:
    case NodeKind::Call: return 1;
    default: return 2;
  }
}

Expression Expression::parse(std::string_view source, std::optional<std::string> variable) {
  Parser parser(source, std::move(variable));
  NodePtr root = parser.parse();
  return Expression(std::move(root), parser.variable());
}

double Expression::evaluate(double x) const { return eval_node(*root_, x); }

Jet Expression::evaluate_jet(double x, int order) const {
  if (order < 1 || order > 3) {
    throw Error(ErrorCode::InvalidArgument, "jet order must be in 1..3");
  }
  return jet_node(*root_, x, order);
}

std::string Expression::serialize() const {
  std::string out;
  serialize_node(*root_, variable_, out);
  return out;
}

bool Expression::structurally_equal(const Expression& other) const {
  return equal_nodes(*root_, *other.root_);
}

}  // namespace thetakit
