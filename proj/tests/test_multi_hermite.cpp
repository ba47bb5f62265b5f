#include <dfact/errors.hpp>
#include <dfact/multi_hermite.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace {

using dfact::BigInt;
using dfact::HermiteArgs;
using dfact::Polynomial;
using dfact::Rational;

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    return Rational(num(rng), den(rng));
}

HermiteArgs<Rational> random_args(std::mt19937_64& rng, int m) {
    std::vector<Rational> v;
    for (int i = 0; i < m; ++i) v.push_back(random_rational(rng));
    return HermiteArgs<Rational>(m, v);
}

TEST(HermiteEval, DegreeZeroIsOne) {
    EXPECT_EQ(dfact::hermite_eval(0, HermiteArgs<Rational>{Rational(3), Rational(-7, 2)}), Rational(1));
    EXPECT_DOUBLE_EQ(dfact::hermite_eval(0, HermiteArgs<double>{0.3, 1.1, -2.0}), 1.0);
}

TEST(HermiteEval, DegreeOneIsFirstArgument) {
    const HermiteArgs<Rational> args{Rational(5, 3), Rational(2), Rational(-1)};
    EXPECT_EQ(dfact::hermite_eval(1, args), Rational(5, 3));
}

TEST(HermiteEval, CubicAtOnes) {
    EXPECT_EQ(dfact::hermite_eval(3, HermiteArgs<Rational>{Rational(1), Rational(1), Rational(1)}), Rational(13));
}

TEST(HermiteEval, OrderOneIsPower) {
    EXPECT_EQ(dfact::hermite_eval(7, HermiteArgs<Rational>{Rational(-2, 3)}), Rational(-128, 2187));
}

TEST(HermiteEval, OrderTwoMatchesPhysicistsConvention) {
    // H_n(x) physicists' = H_n^(2)(2x, -1)
    const Rational x(3, 4);
    const HermiteArgs<Rational> args{Rational(2) * x, Rational(-1)};
    EXPECT_EQ(dfact::hermite_eval(2, args), Rational(4) * x * x - 2);
    EXPECT_EQ(dfact::hermite_eval(3, args), Rational(8) * x * x * x - Rational(12) * x);
}

TEST(HermiteEval, RejectsNegativeDegree) {
    EXPECT_THROW((void)dfact::hermite_eval(-1, HermiteArgs<double>{1.0}), dfact::InvalidArgument);
}

TEST(HermiteArgs, RejectsWrongArity) {
    EXPECT_THROW(HermiteArgs<double>(3, {1.0, 2.0}), dfact::InvalidArgument);
    EXPECT_THROW(HermiteArgs<double>(0, {}), dfact::InvalidArgument);
}

TEST(SeriesOracle, LowOrders) {
    const HermiteArgs<Rational> args{Rational(2), Rational(5), Rational(-3)};
    const auto h = dfact::hermite_series_oracle(2, args);
    ASSERT_EQ(h.size(), 3u);
    EXPECT_EQ(h[0], Rational(1));
    EXPECT_EQ(h[1], Rational(2));
    EXPECT_EQ(h[2], Rational(4 + 10));
    EXPECT_EQ(dfact::hermite_series_oracle(0, args).size(), 1u);
}

TEST(SeriesOracle, AgreesExactlyWithRecursion) {
    std::mt19937_64 rng(20241016);
    for (int m = 1; m <= 4; ++m) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto args = random_args(rng, m);
            const auto oracle = dfact::hermite_series_oracle(12, args);
            for (int n = 0; n <= 12; ++n)
                ASSERT_EQ(dfact::hermite_eval(n, args), oracle[static_cast<std::size_t>(n)])
                    << "m=" << m << " n=" << n;
        }
    }
}

TEST(Parity, RandomizedExact) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_args(rng, 3);
        const int k = trial % 11;
        const HermiteArgs<Rational> flipped{-a[0], a[1], -a[2]};
        const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
        ASSERT_EQ(dfact::hermite_eval(k, flipped), sign * dfact::hermite_eval(k, a)) << "trial " << trial;
    }
}

TEST(Addition, RandomizedExact) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = random_args(rng, 3);
        const auto y = random_args(rng, 3);
        const auto [lhs, rhs] = dfact::addition_combine(trial % 9, x, y);
        ASSERT_EQ(lhs, rhs) << "trial " << trial;
    }
}

TEST(Addition, Examples) {
    const HermiteArgs<double> x{1.0, 2.0, 3.0}, y{2.0, -1.0, 0.0}, zero{0.0, 0.0, 0.0};
    const auto [l0, r0] = dfact::addition_combine(0, x, y);
    EXPECT_EQ(l0, 1.0);
    EXPECT_EQ(r0, 1.0);
    const auto [lz, rz] = dfact::addition_combine(6, x, zero);
    EXPECT_DOUBLE_EQ(lz, dfact::hermite_eval(6, x));
    EXPECT_DOUBLE_EQ(rz, dfact::hermite_eval(6, x));
    const auto [l5, r5] = dfact::addition_combine(5, x, y);
    const double oracle = dfact::hermite_series_oracle(5, HermiteArgs<double>{3.0, 1.0, 3.0})[5];
    EXPECT_NEAR(l5, r5, 1e-12 * std::abs(r5));
    EXPECT_NEAR(r5, oracle, 1e-12 * std::abs(oracle));
}

TEST(Addition, RejectsOtherOrders) {
    EXPECT_THROW((void)dfact::addition_combine(2, HermiteArgs<double>{1.0, 2.0}, HermiteArgs<double>{1.0, 2.0}),
                 dfact::InvalidArgument);
}

TEST(OrderedPower, LowOrderCoefficients) {
    const double alpha = 1.7;
    const auto o0 = dfact::ordered_power(0, alpha);
    EXPECT_EQ(o0.derivative_weight(0), Polynomial<double>(1.0));

    const auto o1 = dfact::ordered_power(1, Rational(3, 2));
    EXPECT_EQ(o1.derivative_weight(0), Polynomial<Rational>::monomial(2, Rational(3, 2)));
    EXPECT_EQ(o1.derivative_weight(1), Polynomial<Rational>(Rational(1)));

    const Rational a(2, 5);
    const auto o2 = dfact::ordered_power(2, a);
    EXPECT_EQ(o2.derivative_weight(0), Polynomial<Rational>({Rational(0), 2 * a, Rational(0), Rational(0), a * a}));
    EXPECT_EQ(o2.derivative_weight(1), Polynomial<Rational>::monomial(2, 2 * a));
    EXPECT_EQ(o2.derivative_weight(2), Polynomial<Rational>(Rational(1)));
}

// (d/dx + alpha x^2) applied n times to a polynomial, done directly.
Polynomial<Rational> apply_direct(int n, const Rational& alpha, Polynomial<Rational> g) {
    const auto ax2 = Polynomial<Rational>::monomial(2, alpha);
    for (int i = 0; i < n; ++i) g = g.derivative() + ax2 * g;
    return g;
}

TEST(OrderedPower, MatchesDirectApplicationOnPolynomials) {
    std::mt19937_64 rng(3);
    for (int n = 0; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const Rational alpha = random_rational(rng);
            std::vector<Rational> c;
            for (int i = 0; i < 6; ++i) c.push_back(random_rational(rng));
            const Polynomial<Rational> g(c);
            EXPECT_EQ(dfact::ordered_power(n, alpha).apply(g), apply_direct(n, alpha, g)) << "n=" << n;
        }
    }
}

TEST(OrderedPower, MatchesDirectApplicationOnExponential) {
    // g = e^{bx}: derivatives are b^k g.
    const double alpha = -0.8, b = 0.6;
    for (int n = 0; n <= 4; ++n) {
        const auto op = dfact::ordered_power(n, alpha);
        for (double x : {-1.3, 0.0, 0.4, 2.1}) {
            std::vector<double> d;
            for (int k = 0; k <= n; ++k) d.push_back(std::pow(b, k) * std::exp(b * x));
            // Direct: (D + alpha x^2)^n e^{bx} = P_n(x) e^{bx} with P_{j+1} = P_j' + (b + alpha x^2) P_j.
            Polynomial<double> p(1.0);
            const Polynomial<double> shift({b, 0.0, alpha});
            for (int j = 0; j < n; ++j) p = p.derivative() + shift * p;
            const double direct = p.evaluate(x) * std::exp(b * x);
            EXPECT_NEAR(op.apply_at<double>(x, d), direct, 1e-8 * (1.0 + std::abs(direct)));
        }
    }
}

TEST(OrderedPower, ApplyAtNeedsEnoughDerivatives) {
    const auto op = dfact::ordered_power(3, 1.0);
    const std::vector<double> d{1.0, 2.0};
    EXPECT_THROW((void)op.apply_at<double>(0.5, d), dfact::InvalidArgument);
}

TEST(DerivativeExpCubic, LowOrders) {
    EXPECT_DOUBLE_EQ(dfact::derivative_exp_cubic(0, 2.5, 0.3), 1.0);
    EXPECT_DOUBLE_EQ(dfact::derivative_exp_cubic(1, 2.5, 0.3), -2.5 * 0.09);
}

// Richardson-extrapolated central differences of e^{-a x^3/3} in long double.
long double fd_derivative(int k, long double a, long double x, long double h) {
    auto f = [a](long double t) { return std::exp(-a * t * t * t / 3.0L); };
    auto d = [&](long double step) {
        long double acc = 0.0L;
        for (int j = 0; j <= k; ++j) {
            const long double c = static_cast<long double>(dfact::binomial(k, j).convert_to<double>());
            acc += ((j % 2 == 0) ? c : -c) * f(x + (0.5L * k - j) * step);
        }
        return acc / std::pow(step, static_cast<long double>(k));
    };
    // Error expansion in even powers of h.
    long double t[4];
    for (int i = 0; i < 4; ++i) t[i] = d(h / std::pow(2.0L, static_cast<long double>(i)));
    for (int lvl = 1; lvl < 4; ++lvl) {
        const long double w = std::pow(4.0L, static_cast<long double>(lvl));
        for (int i = 3; i >= lvl; --i) t[i] = (w * t[i] - t[i - 1]) / (w - 1.0L);
    }
    return t[3];
}

TEST(DerivativeExpCubic, MatchesFiniteDifferenceOracle) {
    const double a = 3.0, x = 0.7;
    const long double ratio = fd_derivative(4, a, x, 0.1L * (std::abs(x) + 1.0L)) / std::exp(-a * x * x * x / 3.0);
    const double value = dfact::derivative_exp_cubic(4, a, x);
    EXPECT_LT(std::abs(value - static_cast<double>(ratio)) / std::abs(value), 1e-6);
}

TEST(Factorials, Values) {
    EXPECT_EQ(dfact::factorial(0), BigInt(1));
    EXPECT_EQ(dfact::factorial(20), BigInt("2432902008176640000"));
    EXPECT_EQ(dfact::binomial(10, 3), BigInt(120));
    EXPECT_EQ(dfact::binomial(4, 5), BigInt(0));
}

}  // namespace
