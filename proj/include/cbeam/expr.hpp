#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "cbeam/errors.hpp"

namespace cbeam {

/// Independent variables of all expressions in this library.
enum class Var { x, t };

/// Immutable closed-form expression in the variables x and t.
///
/// Supported grammar: decimal literals, `pi`, `x`, `t`, unary minus,
/// sin/cos/sinh/cosh/exp, the four arithmetic operators with standard
/// precedence, and `^` with a constant integer exponent. Trees are
/// shared and never mutated after construction, so Expr values may be
/// copied and evaluated concurrently.
class Expr {
public:
    Expr() = default;

    bool valid() const { return node_ != nullptr; }

    static Expr constant(double value);
    static Expr variable(Var v);
    static Expr pi();

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    explicit Expr(NodePtr node) : node_(std::move(node)) {}
    const NodePtr& ptr() const { return node_; }
    const Node& node() const { return *node_; }

private:
    NodePtr node_;
};

/// Parse an expression; throws ParseError with byte offset on bad input.
Expr parse(std::string_view src);

/// IEEE double evaluation; throws EvalError on division by zero.
double eval(const Expr& e, double x, double t);

/// Exact symbolic derivative with respect to v. Total on the grammar.
Expr diff(const Expr& e, Var v);

/// Replace a variable by a constant, folding what becomes constant.
Expr substitute(const Expr& e, Var v, double value);

/// Render to text; parse(to_string(e)) evaluates identically to e.
std::string to_string(const Expr& e);

/// Forcing that makes u an exact solution of
/// EI*u_xxxx + rho*u_tt + c*u_t = f.
Expr manufacture_forcing(const Expr& u, double EI, double rho, double c);

// Expression-building operators with light constant folding; diff() results
// are produced through these.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, int exponent);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr sinh(const Expr& a);
Expr cosh(const Expr& a);
Expr exp(const Expr& a);

}  // namespace cbeam
