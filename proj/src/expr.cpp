#include "cauchyderiv/expr.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace cauchy {

namespace {

enum class Func { exp, log, sin, cos, tan, sec, sinh, cosh, sqrt };

constexpr std::array<const char*, 9> kFuncNames = {"exp", "log",  "sin",  "cos", "tan",
                                                   "sec", "sinh", "cosh", "sqrt"};

} // namespace

struct ExprNode {
    enum class Kind { number, variable, negate, add, sub, mul, div, pow, call };
    Kind kind;
    size_t pos = 0;
    Complex value{0.0, 0.0}; // number
    Func func = Func::exp;   // call
    std::shared_ptr<const ExprNode> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input or an operator (+ - * / ^)");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        std::string got = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'"
                                              : "end of input";
        throw ExprError("syntax error at byte " + std::to_string(pos_) + ": expected " + expected +
                            ", got " + got,
                        pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            skip_ws();
            size_t at = pos_;
            if (eat('+')) {
                ExprNode n{ExprNode::Kind::add, at};
                n.lhs = lhs;
                n.rhs = parse_term();
                lhs = make_node(std::move(n));
            } else if (eat('-')) {
                ExprNode n{ExprNode::Kind::sub, at};
                n.lhs = lhs;
                n.rhs = parse_term();
                lhs = make_node(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            skip_ws();
            size_t at = pos_;
            if (eat('*')) {
                ExprNode n{ExprNode::Kind::mul, at};
                n.lhs = lhs;
                n.rhs = parse_unary();
                lhs = make_node(std::move(n));
            } else if (eat('/')) {
                ExprNode n{ExprNode::Kind::div, at};
                n.lhs = lhs;
                n.rhs = parse_unary();
                lhs = make_node(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        skip_ws();
        size_t at = pos_;
        if (eat('-')) {
            ExprNode n{ExprNode::Kind::negate, at};
            n.rhs = parse_unary();
            return make_node(std::move(n));
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        skip_ws();
        size_t at = pos_;
        if (eat('^')) {
            ExprNode n{ExprNode::Kind::pow, at};
            n.lhs = base;
            n.rhs = parse_unary(); // right-associative, exponent may carry a sign
            return make_node(std::move(n));
        }
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("a number, 'z', a constant, a function call, or '('");
        size_t at = pos_;
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!eat(')')) fail("')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier(at);
        fail("a number, 'z', a constant, a function call, or '('");
    }

    NodePtr parse_number() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '.'))
            fail("digits in a numeric literal");
        // scientific exponent, only when digits follow
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            size_t probe = pos_ + 1;
            if (probe < text_.size() && (text_[probe] == '+' || text_[probe] == '-')) ++probe;
            if (probe < text_.size() && std::isdigit(static_cast<unsigned char>(text_[probe]))) {
                pos_ = probe;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        ExprNode n{ExprNode::Kind::number, start};
        n.value = Complex(std::strtod(text_.c_str() + start, nullptr), 0.0);
        return make_node(std::move(n));
    }

    NodePtr parse_identifier(size_t at) {
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "z") {
            ExprNode n{ExprNode::Kind::variable, at};
            return make_node(std::move(n));
        }
        if (name == "pi") {
            ExprNode n{ExprNode::Kind::number, at};
            n.value = Complex(3.141592653589793238462643383279, 0.0);
            return make_node(std::move(n));
        }
        if (name == "e") {
            ExprNode n{ExprNode::Kind::number, at};
            n.value = Complex(2.718281828459045235360287471353, 0.0);
            return make_node(std::move(n));
        }
        if (name == "i") {
            ExprNode n{ExprNode::Kind::number, at};
            n.value = Complex(0.0, 1.0);
            return make_node(std::move(n));
        }
        for (size_t k = 0; k < kFuncNames.size(); ++k) {
            if (name == kFuncNames[k]) {
                if (!eat('(')) fail("'(' after function name '" + name + "'");
                NodePtr arg = parse_expr();
                if (!eat(')')) fail("')'");
                ExprNode n{ExprNode::Kind::call, at};
                n.func = static_cast<Func>(k);
                n.rhs = arg;
                return make_node(std::move(n));
            }
        }
        throw ExprError("unknown identifier '" + name + "' at byte " + std::to_string(at) +
                            " (known: z, pi, e, i, exp, log, sin, cos, tan, sec, sinh, cosh, sqrt)",
                        at);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

Complex check_finite(Complex v, size_t pos) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw ExprError("non-finite result at byte " + std::to_string(pos), pos);
    return v;
}

Complex eval_node(const ExprNode& n, Complex z) {
    switch (n.kind) {
        case ExprNode::Kind::number: return n.value;
        case ExprNode::Kind::variable: return z;
        case ExprNode::Kind::negate: return -eval_node(*n.rhs, z);
        case ExprNode::Kind::add:
            return check_finite(eval_node(*n.lhs, z) + eval_node(*n.rhs, z), n.pos);
        case ExprNode::Kind::sub:
            return check_finite(eval_node(*n.lhs, z) - eval_node(*n.rhs, z), n.pos);
        case ExprNode::Kind::mul:
            return check_finite(eval_node(*n.lhs, z) * eval_node(*n.rhs, z), n.pos);
        case ExprNode::Kind::div: {
            Complex den = eval_node(*n.rhs, z);
            if (den == Complex(0.0, 0.0))
                throw ExprError("division by zero at byte " + std::to_string(n.pos), n.pos);
            return check_finite(eval_node(*n.lhs, z) / den, n.pos);
        }
        case ExprNode::Kind::pow: {
            Complex base = eval_node(*n.lhs, z);
            Complex expn = eval_node(*n.rhs, z);
            if (base == Complex(0.0, 0.0)) {
                if (expn == Complex(0.0, 0.0)) return {1.0, 0.0};
                if (expn.real() > 0.0) return {0.0, 0.0};
                throw ExprError("zero raised to a nonpositive power at byte " +
                                    std::to_string(n.pos),
                                n.pos);
            }
            return check_finite(std::exp(expn * std::log(base)), n.pos);
        }
        case ExprNode::Kind::call: {
            Complex a = eval_node(*n.rhs, z);
            switch (n.func) {
                case Func::exp: return check_finite(std::exp(a), n.pos);
                case Func::log:
                    if (a == Complex(0.0, 0.0))
                        throw ExprError("log of zero at byte " + std::to_string(n.pos), n.pos);
                    return check_finite(std::log(a), n.pos);
                case Func::sin: return check_finite(std::sin(a), n.pos);
                case Func::cos: return check_finite(std::cos(a), n.pos);
                case Func::tan: return check_finite(std::tan(a), n.pos);
                case Func::sec: {
                    Complex c = std::cos(a);
                    if (c == Complex(0.0, 0.0))
                        throw ExprError("sec at a pole, byte " + std::to_string(n.pos), n.pos);
                    return check_finite(1.0 / c, n.pos);
                }
                case Func::sinh: return check_finite(std::sinh(a), n.pos);
                case Func::cosh: return check_finite(std::cosh(a), n.pos);
                case Func::sqrt: return check_finite(std::sqrt(a), n.pos);
            }
            throw ExprError("unreachable", n.pos);
        }
    }
    throw ExprError("unreachable", n.pos);
}

} // namespace

Expression parse(const std::string& text) {
    Parser p(text);
    Expression e;
    e.root = p.run();
    e.source = text;
    return e;
}

Complex evaluate(const Expression& expr, Complex z) { return eval_node(*expr.root, z); }

AnalyticFunction make_expression_function(const Expression& expr,
                                          std::optional<double> radius_of_convergence) {
    AnalyticFunction f;
    Expression copy = expr;
    f.evaluate = [copy](Complex z) { return evaluate(copy, z); };
    if (radius_of_convergence) f.radius_of_convergence = *radius_of_convergence;
    return f;
}

} // namespace cauchy
