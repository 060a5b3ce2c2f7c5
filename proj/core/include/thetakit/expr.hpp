#pragma once

// Scalar expressions of one variable: parsing, evaluation and exact
// derivatives up to third order through jet arithmetic.
//
// Grammar (whitespace-insensitive):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | constant | variable | function '(' expr ')' | '(' expr ')'
//
// Constants: pi, e. Functions: sin cos tan asin acos atan sqrt exp log abs
// sinh cosh tanh.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "thetakit/jet.hpp"

namespace thetakit {

enum class NodeKind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };

enum class Function { Sin, Cos, Tan, Asin, Acos, Atan, Sqrt, Exp, Log, Abs, Sinh, Cosh, Tanh };

std::string_view function_name(Function fn) noexcept;
std::optional<Function> function_from_name(std::string_view name) noexcept;

struct Node {
  NodeKind kind = NodeKind::Constant;
  double value = 0.0;             // Constant only
  Function function = Function::Sin;  // Call only
  std::array<std::shared_ptr<const Node>, 2> args{};
  bool has_variable = false;

  int arity() const noexcept;
};

/// Immutable parsed expression. Copies share the tree.
class Expression {
 public:
  /// Parses `source`. When `variable` is given, it is the only admissible
  /// free symbol; otherwise the first non-reserved identifier becomes the
  /// variable and any second distinct one is rejected.
  ///
  /// Throws SyntaxError (with byte offset) or Error{UnknownIdentifier}.
  static Expression parse(std::string_view source,
                          std::optional<std::string> variable = std::nullopt);

  /// Throws Error{DomainError} if any intermediate value is NaN or infinite.
  double evaluate(double x) const;

  /// Value and derivatives up to `order` (1..3) at x. Entries above `order`
  /// are unspecified. The value is bit-identical to evaluate(x).
  Jet evaluate_jet(double x, int order = 3) const;

  /// Fully parenthesized text that parses back to a structurally equal tree.
  std::string serialize() const;

  /// Variable symbol; empty when the expression is constant and no variable
  /// was declared.
  const std::string& variable() const noexcept { return variable_; }
  bool is_constant() const noexcept { return !root_->has_variable; }
  const Node& root() const noexcept { return *root_; }

  bool structurally_equal(const Expression& other) const;

 private:
  Expression(std::shared_ptr<const Node> root, std::string variable)
      : root_(std::move(root)), variable_(std::move(variable)) {}

  std::shared_ptr<const Node> root_;
  std::string variable_;
};

}  // namespace thetakit
