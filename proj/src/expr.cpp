#include "cbeam/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace cbeam {

struct Expr::Node {
    enum class Kind { Constant, Pi, Variable, Unary, Binary, Power };
    enum class UnaryOp { Neg, Sin, Cos, Sinh, Cosh, Exp };
    enum class BinaryOp { Add, Sub, Mul, Div };

    Kind kind;
    double value = 0.0;  // Constant
    Var var = Var::x;    // Variable
    UnaryOp uop = UnaryOp::Neg;
    BinaryOp bop = BinaryOp::Add;
    int exponent = 0;    // Power
    NodePtr a, b;
};

namespace {

using Node = Expr::Node;
using NodePtr = Expr::NodePtr;
using Kind = Node::Kind;
using UnaryOp = Node::UnaryOp;
using BinaryOp = Node::BinaryOp;

constexpr double kPi = 3.14159265358979323846;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

NodePtr constant_node(double v) {
    Node n;
    n.kind = Kind::Constant;
    n.value = v;
    return make_node(std::move(n));
}

bool is_const(const NodePtr& n, double v) {
    return n->kind == Kind::Constant && n->value == v;
}

double int_pow(double base, int e) {
    // exponentiation by squaring; deterministic across platforms
    if (e < 0) return 1.0 / int_pow(base, -e);
    double r = 1.0, p = base;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= p;
        p *= p;
    }
    return r;
}

double apply_unary(UnaryOp op, double v) {
    switch (op) {
        case UnaryOp::Neg: return -v;
        case UnaryOp::Sin: return std::sin(v);
        case UnaryOp::Cos: return std::cos(v);
        case UnaryOp::Sinh: return std::sinh(v);
        case UnaryOp::Cosh: return std::cosh(v);
        case UnaryOp::Exp: return std::exp(v);
    }
    return 0.0;
}

NodePtr unary_node(UnaryOp op, NodePtr a) {
    if (a->kind == Kind::Constant)
        return constant_node(apply_unary(op, a->value));
    if (op == UnaryOp::Neg && a->kind == Kind::Unary && a->uop == UnaryOp::Neg)
        return a->a;  // -(-e) = e
    Node n;
    n.kind = Kind::Unary;
    n.uop = op;
    n.a = std::move(a);
    return make_node(std::move(n));
}

NodePtr binary_node(BinaryOp op, NodePtr a, NodePtr b) {
    const bool ca = a->kind == Kind::Constant, cb = b->kind == Kind::Constant;
    switch (op) {
        case BinaryOp::Add:
            if (ca && cb) return constant_node(a->value + b->value);
            if (is_const(a, 0.0)) return b;
            if (is_const(b, 0.0)) return a;
            break;
        case BinaryOp::Sub:
            if (ca && cb) return constant_node(a->value - b->value);
            if (is_const(b, 0.0)) return a;
            if (is_const(a, 0.0)) return unary_node(UnaryOp::Neg, std::move(b));
            break;
        case BinaryOp::Mul:
            if (ca && cb) return constant_node(a->value * b->value);
            if (is_const(a, 0.0) || is_const(b, 0.0)) return constant_node(0.0);
            if (is_const(a, 1.0)) return b;
            if (is_const(b, 1.0)) return a;
            if (is_const(a, -1.0)) return unary_node(UnaryOp::Neg, std::move(b));
            if (is_const(b, -1.0)) return unary_node(UnaryOp::Neg, std::move(a));
            break;
        case BinaryOp::Div:
            // a zero denominator is left in the tree so eval() reports it
            if (ca && cb && b->value != 0.0) return constant_node(a->value / b->value);
            if (is_const(b, 1.0)) return a;
            break;
    }
    Node n;
    n.kind = Kind::Binary;
    n.bop = op;
    n.a = std::move(a);
    n.b = std::move(b);
    return make_node(std::move(n));
}

NodePtr power_node(NodePtr base, int e) {
    if (e == 0) return constant_node(1.0);
    if (e == 1) return base;
    if (base->kind == Kind::Constant) return constant_node(int_pow(base->value, e));
    Node n;
    n.kind = Kind::Power;
    n.exponent = e;
    n.a = std::move(base);
    return make_node(std::move(n));
}

double eval_node(const Node& n, double x, double t) {
    switch (n.kind) {
        case Kind::Constant: return n.value;
        case Kind::Pi: return kPi;
        case Kind::Variable: return n.var == Var::x ? x : t;
        case Kind::Unary: return apply_unary(n.uop, eval_node(*n.a, x, t));
        case Kind::Binary: {
            const double a = eval_node(*n.a, x, t);
            const double b = eval_node(*n.b, x, t);
            switch (n.bop) {
                case BinaryOp::Add: return a + b;
                case BinaryOp::Sub: return a - b;
                case BinaryOp::Mul: return a * b;
                case BinaryOp::Div:
                    if (b == 0.0) throw EvalError("division by zero");
                    return a / b;
            }
            return 0.0;
        }
        case Kind::Power: return int_pow(eval_node(*n.a, x, t), n.exponent);
    }
    return 0.0;
}

NodePtr diff_node(const NodePtr& n, Var v) {
    switch (n->kind) {
        case Kind::Constant:
        case Kind::Pi:
            return constant_node(0.0);
        case Kind::Variable:
            return constant_node(n->var == v ? 1.0 : 0.0);
        case Kind::Unary: {
            NodePtr da = diff_node(n->a, v);
            switch (n->uop) {
                case UnaryOp::Neg: return unary_node(UnaryOp::Neg, std::move(da));
                case UnaryOp::Sin:
                    return binary_node(BinaryOp::Mul, unary_node(UnaryOp::Cos, n->a), std::move(da));
                case UnaryOp::Cos:
                    return binary_node(
                        BinaryOp::Mul,
                        unary_node(UnaryOp::Neg, unary_node(UnaryOp::Sin, n->a)),
                        std::move(da));
                case UnaryOp::Sinh:
                    return binary_node(BinaryOp::Mul, unary_node(UnaryOp::Cosh, n->a), std::move(da));
                case UnaryOp::Cosh:
                    return binary_node(BinaryOp::Mul, unary_node(UnaryOp::Sinh, n->a), std::move(da));
                case UnaryOp::Exp:
                    return binary_node(BinaryOp::Mul, unary_node(UnaryOp::Exp, n->a), std::move(da));
            }
            return constant_node(0.0);
        }
        case Kind::Binary: {
            NodePtr da = diff_node(n->a, v);
            NodePtr db = diff_node(n->b, v);
            switch (n->bop) {
                case BinaryOp::Add: return binary_node(BinaryOp::Add, std::move(da), std::move(db));
                case BinaryOp::Sub: return binary_node(BinaryOp::Sub, std::move(da), std::move(db));
                case BinaryOp::Mul:
                    return binary_node(
                        BinaryOp::Add,
                        binary_node(BinaryOp::Mul, std::move(da), n->b),
                        binary_node(BinaryOp::Mul, n->a, std::move(db)));
                case BinaryOp::Div:
                    // (a'b - ab') / b^2
                    return binary_node(
                        BinaryOp::Div,
                        binary_node(
                            BinaryOp::Sub,
                            binary_node(BinaryOp::Mul, std::move(da), n->b),
                            binary_node(BinaryOp::Mul, n->a, std::move(db))),
                        power_node(n->b, 2));
            }
            return constant_node(0.0);
        }
        case Kind::Power: {
            // d(u^k) = k u^(k-1) u'
            NodePtr da = diff_node(n->a, v);
            return binary_node(
                BinaryOp::Mul,
                binary_node(BinaryOp::Mul, constant_node(double(n->exponent)),
                            power_node(n->a, n->exponent - 1)),
                std::move(da));
        }
    }
    return constant_node(0.0);
}

NodePtr substitute_node(const NodePtr& n, Var v, double value) {
    switch (n->kind) {
        case Kind::Constant:
        case Kind::Pi:
            return n;
        case Kind::Variable:
            return n->var == v ? constant_node(value) : n;
        case Kind::Unary:
            return unary_node(n->uop, substitute_node(n->a, v, value));
        case Kind::Binary:
            return binary_node(n->bop, substitute_node(n->a, v, value),
                               substitute_node(n->b, v, value));
        case Kind::Power:
            return power_node(substitute_node(n->a, v, value), n->exponent);
    }
    return n;
}

// ---- printing -------------------------------------------------------------

// precedence levels: add/sub 1, mul/div 2, unary minus 3, power 4, atoms 5
int node_prec(const Node& n) {
    switch (n.kind) {
        case Kind::Binary:
            return (n.bop == BinaryOp::Add || n.bop == BinaryOp::Sub) ? 1 : 2;
        case Kind::Unary:
            return n.uop == UnaryOp::Neg ? 3 : 5;
        case Kind::Power:
            return 4;
        default:
            return 5;
    }
}

std::string format_constant(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_node(const Node& n, int parent_prec, std::string& out) {
    const int prec = node_prec(n);
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (n.kind) {
        case Kind::Constant:
            out += format_constant(n.value);
            break;
        case Kind::Pi:
            out += "pi";
            break;
        case Kind::Variable:
            out += n.var == Var::x ? 'x' : 't';
            break;
        case Kind::Unary:
            switch (n.uop) {
                case UnaryOp::Neg:
                    out += '-';
                    print_node(*n.a, 4, out);
                    break;
                case UnaryOp::Sin: out += "sin("; print_node(*n.a, 0, out); out += ')'; break;
                case UnaryOp::Cos: out += "cos("; print_node(*n.a, 0, out); out += ')'; break;
                case UnaryOp::Sinh: out += "sinh("; print_node(*n.a, 0, out); out += ')'; break;
                case UnaryOp::Cosh: out += "cosh("; print_node(*n.a, 0, out); out += ')'; break;
                case UnaryOp::Exp: out += "exp("; print_node(*n.a, 0, out); out += ')'; break;
            }
            break;
        case Kind::Binary: {
            print_node(*n.a, prec, out);
            switch (n.bop) {
                case BinaryOp::Add: out += '+'; break;
                case BinaryOp::Sub: out += '-'; break;
                case BinaryOp::Mul: out += '*'; break;
                case BinaryOp::Div: out += '/'; break;
            }
            print_node(*n.b, prec + 1, out);
            break;
        }
        case Kind::Power:
            print_node(*n.a, 5, out);
            out += '^';
            out += std::to_string(n.exponent);
            break;
    }
    if (parens) out += ')';
}

// ---- parser ---------------------------------------------------------------

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::size_t offset;
    std::string_view text;
    double value = 0.0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_.offset = pos_;
        if (pos_ >= src_.size()) {
            tok_.type = Token::Type::End;
            tok_.text = {};
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': single(Token::Type::Plus); return;
            case '-': single(Token::Type::Minus); return;
            case '*': single(Token::Type::Star); return;
            case '/': single(Token::Type::Slash); return;
            case '^': single(Token::Type::Caret); return;
            case '(': single(Token::Type::LParen); return;
            case ')': single(Token::Type::RParen); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size()
                   && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            tok_.type = Token::Type::Ident;
            tok_.text = src_.substr(pos_, end - pos_);
            pos_ = end;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_, "");
    }

    void single(Token::Type t) {
        tok_.type = t;
        tok_.text = src_.substr(pos_, 1);
        ++pos_;
    }

    void lex_number() {
        std::size_t end = pos_;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        }
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t e = end + 1;
            if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
            std::size_t digits = e;
            while (digits < src_.size() && std::isdigit(static_cast<unsigned char>(src_[digits])))
                ++digits;
            if (digits > e) end = digits;
        }
        tok_.text = src_.substr(pos_, end - pos_);
        double value = 0.0;
        const auto res = std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), value);
        if (res.ec != std::errc{} || res.ptr != tok_.text.data() + tok_.text.size())
            throw ParseError("malformed number literal", pos_, "number");
        tok_.type = Token::Type::Number;
        tok_.value = value;
        pos_ = end;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token tok_{};
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    NodePtr parse() {
        NodePtr e = parse_sum();
        const Token& t = lex_.peek();
        if (t.type != Token::Type::End)
            throw ParseError("unexpected trailing input", t.offset, "operator or end of input");
        return e;
    }

private:
    NodePtr parse_sum() {
        NodePtr e = parse_term();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.type == Token::Type::Plus) {
                lex_.take();
                e = binary_node(BinaryOp::Add, std::move(e), parse_term());
            } else if (t.type == Token::Type::Minus) {
                lex_.take();
                e = binary_node(BinaryOp::Sub, std::move(e), parse_term());
            } else {
                return e;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr e = parse_unary();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.type == Token::Type::Star) {
                lex_.take();
                e = binary_node(BinaryOp::Mul, std::move(e), parse_unary());
            } else if (t.type == Token::Type::Slash) {
                lex_.take();
                e = binary_node(BinaryOp::Div, std::move(e), parse_unary());
            } else {
                return e;
            }
        }
    }

    NodePtr parse_unary() {
        if (lex_.peek().type == Token::Type::Minus) {
            lex_.take();
            return unary_node(UnaryOp::Neg, parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (lex_.peek().type != Token::Type::Caret) return base;
        lex_.take();
        bool negate = false;
        if (lex_.peek().type == Token::Type::Minus) {
            lex_.take();
            negate = true;
        }
        const Token t = lex_.take();
        if (t.type != Token::Type::Number || t.text.find('.') != std::string_view::npos
            || t.text.find('e') != std::string_view::npos
            || t.text.find('E') != std::string_view::npos)
            throw ParseError("exponent of '^' must be a constant integer", t.offset,
                             "integer literal");
        int e = 0;
        const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), e);
        if (res.ec != std::errc{})
            throw ParseError("exponent out of range", t.offset, "integer literal");
        return power_node(std::move(base), negate ? -e : e);
    }

    NodePtr parse_primary() {
        const Token t = lex_.take();
        switch (t.type) {
            case Token::Type::Number:
                return constant_node(t.value);
            case Token::Type::LParen: {
                NodePtr e = parse_sum();
                expect_rparen();
                return e;
            }
            case Token::Type::Ident: {
                if (t.text == "pi") {
                    Node n;
                    n.kind = Kind::Pi;
                    return make_node(std::move(n));
                }
                if (t.text == "x" || t.text == "t") {
                    Node n;
                    n.kind = Kind::Variable;
                    n.var = t.text == "x" ? Var::x : Var::t;
                    return make_node(std::move(n));
                }
                UnaryOp op;
                if (t.text == "sin") op = UnaryOp::Sin;
                else if (t.text == "cos") op = UnaryOp::Cos;
                else if (t.text == "sinh") op = UnaryOp::Sinh;
                else if (t.text == "cosh") op = UnaryOp::Cosh;
                else if (t.text == "exp") op = UnaryOp::Exp;
                else
                    throw ParseError("unknown identifier '" + std::string(t.text) + "'", t.offset,
                                     "sin, cos, sinh, cosh, exp, pi, x or t");
                if (lex_.peek().type != Token::Type::LParen)
                    throw ParseError("function '" + std::string(t.text) + "' needs an argument",
                                     lex_.peek().offset, "'('");
                lex_.take();
                NodePtr arg = parse_sum();
                expect_rparen();
                return unary_node(op, std::move(arg));
            }
            default:
                throw ParseError("unexpected token", t.offset,
                                 "number, 'pi', 'x', 't', function, '(' or '-'");
        }
    }

    void expect_rparen() {
        const Token t = lex_.take();
        if (t.type != Token::Type::RParen)
            throw ParseError("unbalanced parenthesis", t.offset, "')'");
    }

    Lexer lex_;
};

}  // namespace

Expr Expr::constant(double value) { return Expr(constant_node(value)); }

Expr Expr::variable(Var v) {
    Node n;
    n.kind = Kind::Variable;
    n.var = v;
    return Expr(make_node(std::move(n)));
}

Expr Expr::pi() {
    Node n;
    n.kind = Kind::Pi;
    return Expr(make_node(std::move(n)));
}

Expr parse(std::string_view src) { return Expr(Parser(src).parse()); }

double eval(const Expr& e, double x, double t) { return eval_node(e.node(), x, t); }

Expr diff(const Expr& e, Var v) { return Expr(diff_node(e.ptr(), v)); }

Expr substitute(const Expr& e, Var v, double value) {
    return Expr(substitute_node(e.ptr(), v, value));
}

std::string to_string(const Expr& e) {
    std::string out;
    print_node(e.node(), 0, out);
    return out;
}

Expr manufacture_forcing(const Expr& u, double EI, double rho, double c) {
    const Expr u_x4 = diff(diff(diff(diff(u, Var::x), Var::x), Var::x), Var::x);
    const Expr u_tt = diff(diff(u, Var::t), Var::t);
    const Expr u_t = diff(u, Var::t);
    return Expr::constant(EI) * u_x4 + Expr::constant(rho) * u_tt + Expr::constant(c) * u_t;
}

Expr operator+(const Expr& a, const Expr& b) {
    return Expr(binary_node(BinaryOp::Add, a.ptr(), b.ptr()));
}

Expr operator-(const Expr& a, const Expr& b) {
    return Expr(binary_node(BinaryOp::Sub, a.ptr(), b.ptr()));
}

Expr operator*(const Expr& a, const Expr& b) {
    return Expr(binary_node(BinaryOp::Mul, a.ptr(), b.ptr()));
}

Expr operator/(const Expr& a, const Expr& b) {
    return Expr(binary_node(BinaryOp::Div, a.ptr(), b.ptr()));
}

Expr operator-(const Expr& a) { return Expr(unary_node(UnaryOp::Neg, a.ptr())); }

Expr pow(const Expr& base, int exponent) { return Expr(power_node(base.ptr(), exponent)); }

Expr sin(const Expr& a) { return Expr(unary_node(UnaryOp::Sin, a.ptr())); }
Expr cos(const Expr& a) { return Expr(unary_node(UnaryOp::Cos, a.ptr())); }
Expr sinh(const Expr& a) { return Expr(unary_node(UnaryOp::Sinh, a.ptr())); }
Expr cosh(const Expr& a) { return Expr(unary_node(UnaryOp::Cosh, a.ptr())); }
Expr exp(const Expr& a) { return Expr(unary_node(UnaryOp::Exp, a.ptr())); }

}  // namespace cbeam
