#pragma once

#include <memory>
#include <optional>
#include <string>

#include "cauchyderiv/analytic_function.hpp"

namespace cauchy {

/// Parse or evaluation failure, carrying the byte offset into the source text.
class ExprError : public std::runtime_error {
public:
    ExprError(std::string message, size_t offset)
        : std::runtime_error(std::move(message)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

struct ExprNode;

/// Immutable AST over complex literals, the constants pi/e/i, the variable z,
/// unary minus, + - * / ^, and calls exp log sin cos tan sec sinh cosh sqrt.
struct Expression {
    std::shared_ptr<const ExprNode> root;
    std::string source;
};

/// Precedence (low to high): + -; * /; unary -; ^ (right-associative, binding
/// tighter than unary minus, so -z^2 parses as -(z^2)). Whitespace is
/// insignificant; no implicit multiplication. Throws ExprError with the byte
/// offset and the expected-token set on malformed input.
Expression parse(const std::string& text);

/// Principal branches throughout; w^p = exp(p log w). Singularities and
/// non-finite intermediates raise ExprError at the offending node's offset.
Complex evaluate(const Expression& expr, Complex z);

/// Wrap a parsed expression as an AnalyticFunction. The disk radius is
/// caller-supplied (unknown defaults to entire).
AnalyticFunction make_expression_function(const Expression& expr,
                                          std::optional<double> radius_of_convergence = {});

} // namespace cauchy
