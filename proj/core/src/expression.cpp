#include <dfact/expression.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <variant>

namespace dfact {

namespace {

std::string join_expected(const std::vector<std::string>& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i > 0) s += i + 1 == e.size() ? " or " : ", ";
        s += e[i];
    }
    return s;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::invalid_argument("parse error at byte " + std::to_string(offset) + ": expected " +
                            join_expected(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace expr {

enum class Func { sqrt, exp, sin, cos, abs };

struct Number {
    double value;
};
struct Variable {};
struct Binary {
    char op;
    std::shared_ptr<const Node> lhs, rhs;
};
struct Power {
    std::shared_ptr<const Node> base;
    int exponent;
};
struct Call {
    Func func;
    std::shared_ptr<const Node> arg;
};

struct Node {
    std::variant<Number, Variable, Binary, Power, Call> v;
};

using NodePtr = std::shared_ptr<const Node>;

template <class T>
NodePtr make(T t) {
    return std::make_shared<const Node>(Node{std::move(t)});
}

Jet apply(Func f, const Jet& u) {
    // chain rule: (g o u)' = g'(u) u', (g o u)'' = g''(u) u'^2 + g'(u) u''
    double g0 = 0, g1 = 0, g2 = 0;
    switch (f) {
        case Func::sqrt:
            g0 = std::sqrt(u.value);
            g1 = 0.5 / g0;
            g2 = -0.25 / (g0 * u.value);
            break;
        case Func::exp:
            g0 = g1 = g2 = std::exp(u.value);
            break;
        case Func::sin:
            g0 = std::sin(u.value);
            g1 = std::cos(u.value);
            g2 = -g0;
            break;
        case Func::cos:
            g0 = std::cos(u.value);
            g1 = -std::sin(u.value);
            g2 = -g0;
            break;
        case Func::abs:
            g0 = std::abs(u.value);
            g1 = u.value > 0 ? 1.0 : (u.value < 0 ? -1.0 : 0.0);
            g2 = 0.0;
            break;
    }
    return {g0, g1 * u.d1, g2 * u.d1 * u.d1 + g1 * u.d2};
}

Jet eval(const Node& n, double q) {
    struct Visitor {
        double q;
        Jet operator()(const Number& x) const { return {x.value, 0.0, 0.0}; }
        Jet operator()(const Variable&) const { return {q, 1.0, 0.0}; }
        Jet operator()(const Binary& b) const {
            const Jet a = eval(*b.lhs, q);
            const Jet c = eval(*b.rhs, q);
            switch (b.op) {
                case '+': return {a.value + c.value, a.d1 + c.d1, a.d2 + c.d2};
                case '-': return {a.value - c.value, a.d1 - c.d1, a.d2 - c.d2};
                case '*':
                    return {a.value * c.value, a.d1 * c.value + a.value * c.d1,
                            a.d2 * c.value + 2.0 * a.d1 * c.d1 + a.value * c.d2};
                default: {
                    // a / c = a * (1/c)
                    const double r = 1.0 / c.value;
                    const Jet inv{r, -c.d1 * r * r, (2.0 * c.d1 * c.d1 * r - c.d2) * r * r};
                    return {a.value * inv.value, a.d1 * inv.value + a.value * inv.d1,
                            a.d2 * inv.value + 2.0 * a.d1 * inv.d1 + a.value * inv.d2};
                }
            }
        }
        Jet operator()(const Power& p) const {
            const Jet u = eval(*p.base, q);
            const int k = p.exponent;
            if (k == 0) return {1.0, 0.0, 0.0};
            const double uk2 = k >= 2 ? std::pow(u.value, k - 2) : 0.0;
            const double uk1 = std::pow(u.value, k - 1);
            const double g1 = k * uk1;
            const double g2 = k >= 2 ? static_cast<double>(k) * (k - 1) * uk2 : 0.0;
            return {std::pow(u.value, k), g1 * u.d1, g2 * u.d1 * u.d1 + g1 * u.d2};
        }
        Jet operator()(const Call& c) const { return apply(c.func, eval(*c.arg, q)); }
    };
    return std::visit(Visitor{q}, n.v);
}

const char* func_name(Func f) {
    switch (f) {
        case Func::sqrt: return "sqrt";
        case Func::exp: return "exp";
        case Func::sin: return "sin";
        case Func::cos: return "cos";
        case Func::abs: return "abs";
    }
    return "?";
}

void render(const Node& n, std::ostringstream& os) {
    struct Visitor {
        std::ostringstream& os;
        void operator()(const Number& x) const { os << x.value; }
        void operator()(const Variable&) const { os << 'q'; }
        void operator()(const Binary& b) const {
            os << '(';
            render(*b.lhs, os);
            os << ' ' << b.op << ' ';
            render(*b.rhs, os);
            os << ')';
        }
        void operator()(const Power& p) const {
            os << '(';
            render(*p.base, os);
            os << '^' << p.exponent << ')';
        }
        void operator()(const Call& c) const {
            os << func_name(c.func) << '(';
            render(*c.arg, os);
            os << ')';
        }
    };
    std::visit(Visitor{os}, n.v);
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, std::move(expected), found);
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                const char op = s_[pos_++];
                lhs = make(Binary{op, lhs, parse_term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
                const char op = s_[pos_++];
                lhs = make(Binary{op, lhs, parse_factor()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_factor() {
        NodePtr base = parse_base();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail({"integer exponent"});
            int k = 0;
            const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, k);
            if (ec != std::errc{}) {
                pos_ = start;
                fail({"integer exponent that fits in int"});
            }
            return make(Power{base, k});
        }
        return base;
    }

    NodePtr parse_base() {
        skip_ws();
        if (pos_ >= s_.size()) fail({"number", "'q'", "'('", "function name"});
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_expr();
            if (!accept(')')) fail({"')'"});
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string_view word = s_.substr(start, pos_ - start);
            if (word == "q") return make(Variable{});
            Func f;
            if (word == "sqrt") f = Func::sqrt;
            else if (word == "exp") f = Func::exp;
            else if (word == "sin") f = Func::sin;
            else if (word == "cos") f = Func::cos;
            else if (word == "abs") f = Func::abs;
            else {
                pos_ = start;
                fail({"'q'", "sqrt", "exp", "sin", "cos", "abs"});
            }
            if (!accept('(')) fail({"'('"});
            NodePtr arg = parse_expr();
            if (!accept(')')) fail({"')'"});
            return make(Call{f, arg});
        }
        fail({"number", "'q'", "'('", "function name"});
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t d0 = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return pos_ - d0;
        };
        std::size_t nd = digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            nd += digits();
        }
        if (nd == 0) {
            pos_ = start;
            fail({"digit"});
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            const std::size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (digits() == 0) pos_ = save;
        }
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (ec != std::errc{} || ptr != s_.data() + pos_) {
            pos_ = start;
            fail({"decimal literal"});
        }
        return make(Number{v});
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace expr

Expression::Expression(std::string source, std::shared_ptr<const expr::Node> root)
    : source_(std::move(source)), root_(std::move(root)) {}

Expression Expression::parse(std::string_view source) {
    expr::Parser p(source);
    return Expression(std::string(source), p.parse());
}

Jet Expression::eval(double q) const { return expr::eval(*root_, q); }

std::string Expression::to_string() const {
    std::ostringstream os;
    os.precision(17);
    expr::render(*root_, os);
    return os.str();
}

}  // namespace dfact
