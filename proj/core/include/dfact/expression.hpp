#pragma once

// Potential expressions f(q):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := number | 'q' | '(' expr ')' | func '(' expr ')'
//   func   := 'sqrt' | 'exp' | 'sin' | 'cos' | 'abs'
//
// Whitespace is insignificant. Evaluation carries f, f' and f'' together
// (second-order forward differentiation), so no derivative is approximated.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dfact {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    [[nodiscard]] std::size_t offset() const { return offset_; }
    [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Value with first and second derivative.
struct Jet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

namespace expr {
struct Node;
}

class Expression {
public:
    /// Throws ParseError.
    static Expression parse(std::string_view source);

    [[nodiscard]] double operator()(double q) const { return eval(q).value; }
    [[nodiscard]] Jet eval(double q) const;
    [[nodiscard]] const std::string& source() const { return source_; }
    /// Canonical fully parenthesized rendering of the tree.
    [[nodiscard]] std::string to_string() const;

private:
    Expression(std::string source, std::shared_ptr<const expr::Node> root);

    std::string source_;
    std::shared_ptr<const expr::Node> root_;
};

}  // namespace dfact
