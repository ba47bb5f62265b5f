#pragma once

// Higher-order (multi-variable) Hermite polynomials H_n^(m)(x1..xm), defined by
//
//   sum_n t^n/n! H_n^(m)(x) = exp(x1 t + x2 t^2 + ... + xm t^m),
//
// together with the operator-ordering expansion of (d/dx + a x^2)^n and the
// derivatives of exp(-a x^3 / 3).
//
// Everything is templated on the scalar ring so the same code runs on double,
// exact rationals and polynomials with rational coefficients. Integer
// coefficients (factorial ratios, binomials) are always formed exactly.

#include <dfact/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dfact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Dense univariate polynomial, coeffs[i] multiplies x^i. Trailing zeros are trimmed.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(T constant) : coeffs_{std::move(constant)} { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(int degree, T coeff = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }

    [[nodiscard]] const std::vector<T>& coeffs() const { return coeffs_; }
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    [[nodiscard]] T coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)]
                                                              : T(0);
    }

    template <class U>
    [[nodiscard]] U evaluate(const U& x) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + static_cast<U>(*it);
        }
        return acc;
    }

    [[nodiscard]] Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * T(static_cast<int>(i));
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const T& s, Polynomial p) {
        for (auto& c : p.coeffs_) c = s * c;
        p.trim();
        return p;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i] == T(0)) continue;
            if (!first) os << " + ";
            os << "(" << p.coeffs_[i] << ")";
            if (i > 0) os << "*x^" << i;
            first = false;
        }
        return os;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

// Exact integer -> scalar conversion for each supported ring.
template <class T>
struct IntegerEmbedding;

template <>
struct IntegerEmbedding<double> {
    static double from(const BigInt& v) { return v.convert_to<double>(); }
};
template <>
struct IntegerEmbedding<long double> {
    static long double from(const BigInt& v) { return v.convert_to<long double>(); }
};
template <>
struct IntegerEmbedding<Rational> {
    static Rational from(const BigInt& v) { return Rational(v); }
};
template <class U>
struct IntegerEmbedding<Polynomial<U>> {
    static Polynomial<U> from(const BigInt& v) { return Polynomial<U>(IntegerEmbedding<U>::from(v)); }
};

template <class T>
T from_integer(const BigInt& v) {
    return IntegerEmbedding<T>::from(v);
}

/// Argument vector (x1..xm) of H_n^(m). The order m is the number of arguments.
template <class T>
class HermiteArgs {
public:
    HermiteArgs(int order, std::vector<T> values) : values_(std::move(values)) {
        if (order < 1) throw InvalidArgument("HermiteArgs: order must be >= 1");
        if (static_cast<int>(values_.size()) != order)
            throw InvalidArgument("HermiteArgs: expected " + std::to_string(order) + " values, got " +
                                  std::to_string(values_.size()));
    }
    HermiteArgs(std::initializer_list<T> values)
        : HermiteArgs(static_cast<int>(values.size()), std::vector<T>(values)) {}

    [[nodiscard]] int order() const { return static_cast<int>(values_.size()); }
    [[nodiscard]] std::span<const T> values() const { return values_; }
    [[nodiscard]] const T& operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }

    friend HermiteArgs operator+(const HermiteArgs& a, const HermiteArgs& b) {
        if (a.order() != b.order()) throw InvalidArgument("HermiteArgs: order mismatch in sum");
        std::vector<T> v(a.values_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + b.values_[i];
        return HermiteArgs(a.order(), std::move(v));
    }

private:
    std::vector<T> values_;
};

namespace detail {

template <class T>
T power(const T& x, int k) {
    T acc(1);
    for (int i = 0; i < k; ++i) acc = acc * x;
    return acc;
}

// H_n^(m) over the leading m arguments of `x`.
template <class T>
T hermite_recursive(int n, std::span<const T> x) {
    const int m = static_cast<int>(x.size());
    if (m == 1) return power(x[0], n);
    const T& xm = x[static_cast<std::size_t>(m - 1)];
    const auto lower = x.first(static_cast<std::size_t>(m - 1));
    const BigInt nfact = factorial(n);
    T sum(0);
    T xm_pow(1);
    for (int k = 0; k <= n / m; ++k) {
        const BigInt c = nfact / (factorial(k) * factorial(n - m * k));
        sum = sum + from_integer<T>(c) * xm_pow * hermite_recursive(n - m * k, lower);
        xm_pow = xm_pow * xm;
    }
    return sum;
}

}  // namespace detail

/// H_n^(m)(x1..xm) via the order-lowering recursion
///   H_n^(m) = n! sum_{k=0}^{floor(n/m)} xm^k / (k! (n-mk)!) H_{n-mk}^(m-1),
/// with H_n^(1)(x1) = x1^n. Exact for exact scalar types.
template <class T>
T hermite_eval(int n, const HermiteArgs<T>& args) {
    if (n < 0) throw InvalidArgument("hermite_eval: negative degree " + std::to_string(n));
    return detail::hermite_recursive<T>(n, args.values());
}

/// H_0..H_{n_max} from the truncated power series of exp(sum_k x_k t^k).
///
/// Independent of hermite_eval: uses E' = P' E on the series, which in terms
/// of H_j reads H_j = sum_{k=1}^{min(m,j)} k x_k (j-1)!/(j-k)! H_{j-k}.
template <class T>
std::vector<T> hermite_series_oracle(int n_max, const HermiteArgs<T>& args) {
    if (n_max < 0) throw InvalidArgument("hermite_series_oracle: negative n_max");
    const int m = args.order();
    std::vector<T> h;
    h.reserve(static_cast<std::size_t>(n_max) + 1);
    h.push_back(T(1));
    for (int j = 1; j <= n_max; ++j) {
        T acc(0);
        for (int k = 1; k <= std::min(m, j); ++k) {
            const BigInt c = BigInt(k) * factorial(j - 1) / factorial(j - k);
            acc = acc + from_integer<T>(c) * args[k - 1] * h[static_cast<std::size_t>(j - k)];
        }
        h.push_back(std::move(acc));
    }
    return h;
}

/// Normal-ordered form of O_n = (d/dx + alpha x^2)^n:
///   O_n = sum_k C(n,k) c_{n-k}(x) d^k/dx^k,  c_j(x) = H_j^(3)(alpha x^2, alpha x, alpha/3).
template <class T>
class OrderedPowerExpansion {
public:
    OrderedPowerExpansion(int n, T alpha) : n_(n), alpha_(alpha) {
        if (n < 0) throw InvalidArgument("ordered_power: negative power");
        using P = Polynomial<T>;
        const HermiteArgs<P> args(3, {P::monomial(2, alpha), P::monomial(1, alpha), P(alpha / T(3))});
        coeffs_.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) coeffs_.push_back(hermite_eval(j, args));
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const T& alpha() const { return alpha_; }

    /// c_j(x) as an explicit polynomial, j = 0..n.
    [[nodiscard]] const Polynomial<T>& coefficient(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }

    /// Operator weight multiplying d^k/dx^k, i.e. C(n,k) c_{n-k}(x).
    [[nodiscard]] Polynomial<T> derivative_weight(int k) const {
        return from_integer<T>(binomial(n_, k)) * coefficient(n_ - k);
    }

    /// O_n g for a polynomial g, exactly.
    [[nodiscard]] Polynomial<T> apply(const Polynomial<T>& g) const {
        Polynomial<T> out;
        Polynomial<T> dg = g;
        for (int k = 0; k <= n_; ++k) {
            out += derivative_weight(k) * dg;
            dg = dg.derivative();
        }
        return out;
    }

    /// (O_n g)(x) given the derivatives g(x), g'(x), ..., g^(n)(x).
    template <class U>
    [[nodiscard]] U apply_at(const U& x, std::span<const U> derivatives) const {
        if (static_cast<int>(derivatives.size()) < n_ + 1)
            throw InvalidArgument("ordered_power: need n+1 derivative values");
        U acc(0);
        for (int k = 0; k <= n_; ++k)
            acc = acc + derivative_weight(k).evaluate(x) * derivatives[static_cast<std::size_t>(k)];
        return acc;
    }

private:
    int n_;
    T alpha_;
    std::vector<Polynomial<T>> coeffs_;
};

template <class T>
OrderedPowerExpansion<T> ordered_power(int n, T alpha) {
    return OrderedPowerExpansion<T>(n, std::move(alpha));
}

/// d^k/dx^k exp(-a x^3/3) divided by exp(-a x^3/3) = H_k^(3)(-a x^2, -a x, -a/3).
template <class T>
T derivative_exp_cubic(int k, const T& a, const T& x) {
    if (k < 0) throw InvalidArgument("derivative_exp_cubic: negative order");
    return hermite_eval(k, HermiteArgs<T>(3, {-a * x * x, -a * x, -a / T(3)}));
}

/// Both sides of the addition theorem:
///   (sum_k C(n,k) H_{n-k}(x) H_k(y),  H_n(x + y)).
template <class T>
std::pair<T, T> addition_combine(int n, const HermiteArgs<T>& x, const HermiteArgs<T>& y) {
    if (n < 0) throw InvalidArgument("addition_combine: negative degree");
    if (x.order() != 3 || y.order() != 3)
        throw InvalidArgument("addition_combine: both argument vectors must have order 3");
    T lhs(0);
    for (int k = 0; k <= n; ++k)
        lhs = lhs + from_integer<T>(binomial(n, k)) * hermite_eval(n - k, x) * hermite_eval(k, y);
    return {lhs, hermite_eval(n, x + y)};
}

}  // namespace dfact
