#include "hyptor/moments.hpp"
#include "hyptor/truncated_series.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hyptor;
using namespace hyptor::series;

TEST_SUITE("series") {

TEST_CASE("product truncation") {
    TruncatedSeries<double> a(2, 2), b(2, 2);
    a.set({0, 0}, 1.0);
    a.set({1, 0}, 1.0);  // 1 + x1
    b.set({0, 0}, 1.0);
    b.set({0, 1}, 1.0);  // 1 + x2
    auto p = a * b;
    CHECK(p.coefficient({0, 0}) == 1.0);
    CHECK(p.coefficient({1, 0}) == 1.0);
    CHECK(p.coefficient({0, 1}) == 1.0);
    CHECK(p.coefficient({1, 1}) == 1.0);

    // mul-then-truncate equals truncate-then-mul on the kept degrees
    TruncatedSeries<double> c(2, 4);
    c.set({2, 0}, 3.0);
    c.set({0, 3}, -2.0);
    auto lhs = (c * c).truncated(3);
    auto rhs = c.truncated(3) * c.truncated(3);
    for (const auto& [alpha, v] : lhs.terms())
        if (total_degree(alpha) <= 3) CHECK(v == rhs.coefficient(alpha));

    CHECK(a.scaled(0.0).is_zero());
}

TEST_CASE("shape mismatch is rejected") {
    TruncatedSeries<double> a(2, 2), b(3, 2), c(2, 3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("associativity is exact in rational mode") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5), deg(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries<Rational> f1(2, 6), f2(2, 6), f3(2, 6);
        for (auto* f : {&f1, &f2, &f3})
            for (int t = 0; t < 5; ++t) {
                MultiIndex alpha{deg(rng), deg(rng)};
                f->set(alpha, Rational(num(rng), den(rng)));
            }
        auto lhs = (f1 * f2) * f3;
        auto rhs = f1 * (f2 * f3);
        CHECK(lhs.terms() == rhs.terms());
    }
}

TEST_CASE("compose_radial") {
    TruncatedSeries<double> u(1, 2);
    u.set({1}, 1.0);
    auto s = compose_radial(u, 2, 2);
    CHECK(s.coefficient({2, 0}) == 1.0);
    CHECK(s.coefficient({0, 2}) == 1.0);

    TruncatedSeries<double> u2(1, 2);
    u2.set({2}, 1.0);
    auto s2 = compose_radial(u2, 2, 4);
    CHECK(s2.coefficient({4, 0}) == 1.0);
    CHECK(s2.coefficient({2, 2}) == 2.0);
    CHECK(s2.coefficient({0, 4}) == 1.0);
}

TEST_CASE("gauss moments against quadrature") {
    CHECK(gauss_moment({0}) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(gauss_moment({1, 0}) == 0.0);
    CHECK(gauss_moment({2}) == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));
    for (int a = 0; a <= 6; a += 2) {
        CHECK(gauss_moment({a}) == doctest::Approx(oracles::gauss_moment({a}, 1)).epsilon(1e-10));
        CHECK(gauss_moment({a, 2}) ==
              doctest::Approx(oracles::gauss_moment({a, 2}, 2)).epsilon(1e-10));
    }
}

TEST_CASE("gauss log moments: frozen oracle values and closed form") {
    // Oracle values computed by independent quadrature; the spec's formula
    // -sqrt(pi)(gamma + 2 log 2)/2 evaluates to -1.74012 (its quoted decimal
    // -1.63410 is a typo).
    CHECK(oracles::gauss_log_moment({0}, 1) == doctest::Approx(-1.7401154534566).epsilon(1e-10));
    CHECK(gauss_log_moment({0}, 1) == doctest::Approx(-1.7401154534566).epsilon(1e-12));
    CHECK(gauss_log_moment({0}, 1) ==
          doctest::Approx(-std::sqrt(M_PI) * (kEulerGamma + 2.0 * std::log(2.0)) / 2.0));

    CHECK(oracles::gauss_log_moment({0, 0}, 2) == doctest::Approx(-0.9066882461958).epsilon(1e-10));
    CHECK(gauss_log_moment({0, 0}, 2) == doctest::Approx(-M_PI * kEulerGamma / 2.0));

    CHECK(gauss_log_moment({1, 1}, 2) == 0.0);
}

TEST_CASE("closed form matches the quadrature oracle, all even |alpha| <= 6, m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        std::vector<MultiIndex> alphas;
        MultiIndex cur(m, 0);
        std::function<void(int, int)> gen = [&](int pos, int left) {
            if (pos == m) {
                alphas.push_back(cur);
                return;
            }
            for (int h = 0; 2 * h <= left; ++h) {
                cur[pos] = 2 * h;
                gen(pos + 1, left - 2 * h);
            }
        };
        gen(0, 6);
        for (const auto& alpha : alphas) {
            double closed = gauss_log_moment(alpha, m);
            double oracle = oracles::gauss_log_moment(alpha, m);
            CHECK(std::abs(closed - oracle) < 1e-8);
        }
    }
}

TEST_CASE("nested 2-D oracle agrees with the polar one") {
    CHECK(oracles::gauss_log_moment_nested({0, 0}, 2) ==
          doctest::Approx(oracles::gauss_log_moment({0, 0}, 2)).epsilon(1e-7));
    CHECK(oracles::gauss_log_moment_nested({2, 0}, 2) ==
          doctest::Approx(oracles::gauss_log_moment({2, 0}, 2)).epsilon(1e-7));
}

TEST_CASE("scaled log moment") {
    CHECK(scaled_log_moment({0}, 1, 1.0) == doctest::Approx(gauss_log_moment({0}, 1)));
    // lambda = 4, m = 1: (1/2)(L_0 - (1/2) sqrt(pi) log 4)
    double expected = 0.5 * (gauss_log_moment({0}, 1) - 0.5 * std::sqrt(M_PI) * std::log(4.0));
    CHECK(scaled_log_moment({0}, 1, 4.0) == doctest::Approx(expected).epsilon(1e-13));
    // quadrature of the defining integral at lambda = 4
    double direct = oracles::gauss_log_moment({0}, 1) / 2.0 -
                    0.25 * std::log(4.0) * oracles::gauss_moment({0}, 1);
    CHECK(scaled_log_moment({0}, 1, 4.0) == doctest::Approx(direct).epsilon(1e-9));
    CHECK(scaled_log_moment({3, 0}, 2, 2.5) == 0.0);
    CHECK_THROWS_AS(scaled_log_moment({0}, 1, -1.0), std::domain_error);
}

TEST_CASE("log-lambda derivative consistency") {
    // d/d(log lambda) of lambda^{(m+|a|)/2} scaled_log_moment at lambda=1
    // equals -G_alpha / 2.
    for (const MultiIndex alpha : {MultiIndex{0, 0}, MultiIndex{2, 0}, MultiIndex{2, 4}}) {
        const int m = 2;
        double p = 0.5 * (m + total_degree(alpha));
        auto normalized = [&](double loglam) {
            double lam = std::exp(loglam);
            return std::pow(lam, p) * scaled_log_moment(alpha, m, lam);
        };
        double h = 1e-5;
        double deriv = (normalized(h) - normalized(-h)) / (2.0 * h);
        CHECK(deriv == doctest::Approx(-0.5 * gauss_moment(alpha)).epsilon(1e-8));
    }
}

TEST_CASE("gamma and digamma recursions") {
    CHECK(gamma_half(1) == doctest::Approx(std::sqrt(M_PI)));
    CHECK(gamma_half(3) == doctest::Approx(0.5 * std::sqrt(M_PI)));
    CHECK(gamma_half(8) == doctest::Approx(6.0));  // Gamma(4)
    CHECK(digamma_half(2) == doctest::Approx(-kEulerGamma));
    CHECK(digamma_half(4) == doctest::Approx(1.0 - kEulerGamma));
    CHECK(digamma_half(1) == doctest::Approx(-kEulerGamma - 2.0 * std::log(2.0)));
}

}  // TEST_SUITE
