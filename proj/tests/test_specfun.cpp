#include <doctest.h>

#include <cmath>
#include <random>

#include "curvedspec/specfun.hpp"

using namespace curvedspec::specfun;

namespace {

// Independent series oracle: L_n^a(x) = sum_k binom(n+a, n-k) (-x)^k / k!
double laguerre_series_oracle(int n, double alpha, double x) {
    long double sum = 0.0L;
    for (int k = 0; k <= n; ++k) {
        long double term = binom(n + alpha, n - k);
        for (int j = 1; j <= k; ++j) term *= -x / j;
        sum += term;
    }
    return static_cast<double>(sum);
}

// J0 power series oracle, independent of the implementation's branch split.
double j0_series_oracle(double x) {
    long double term = 1.0L, sum = 1.0L;
    const long double q = static_cast<long double>(x) * x / 4.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * k);
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-22) break;
    }
    return static_cast<double>(sum);
}

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("laguerre basics") {
    CHECK(laguerre(0, 1.0, 3.7) == 1.0);
    for (double x : {-2.0, 0.0, 0.8, 5.5})
        CHECK(laguerre(1, 1.0, x) == doctest::Approx(2.0 - x).epsilon(1e-15));
    // degree-3 value frozen from the series oracle
    CHECK(laguerre(3, 2.0, 1.5) == doctest::Approx(0.0625).epsilon(1e-13));
    CHECK(laguerre(3, 2.0, 1.5) ==
          doctest::Approx(laguerre_series_oracle(3, 2.0, 1.5)).epsilon(1e-13));
    CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(laguerre(61, 0.0, 1.0), std::domain_error);
}

TEST_CASE("laguerre equals the series oracle across the recurrence regime") {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
        for (double alpha : {0.0, 1.0, 2.5, 5.0})
            for (double x : {0.0, 0.4, 2.2, 8.0, 19.0, 30.0}) {
                const double a = laguerre(n, alpha, x);
                const double b = laguerre_series_oracle(n, alpha, x);
                worst = std::max(worst, std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}));
            }
    CHECK(worst < 1e-11);
}

TEST_CASE("terminating hypergeometric sums") {
    CHECK(hyp_terminating(0, 123.0, 2.0, 5.0, HypKind::TwoF1) == 1.0);
    CHECK(hyp_terminating(1, 3.0, 2.0, 0.5, HypKind::TwoF1) == doctest::Approx(0.25).epsilon(1e-15));
    // identity L_n^nu = binom(n+nu, n) 1F1(-n; nu+1; x) at n=2, nu=1, x=0.8
    const double f = hyp_terminating(2, 0.0, 2.0, 0.8, HypKind::OneF1);
    const double expected = laguerre(2, 1.0, 0.8) * 2.0 / pochhammer(2.0, 2);
    CHECK(f == doctest::Approx(expected).epsilon(1e-14));
    // forbidden c: non-positive integer reachable by the sum
    CHECK_THROWS_AS(hyp1f1_terminating(3, -1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(hyp2f1_terminating(3, 1.0, 0.0, 0.5), std::domain_error);
    CHECK_NOTHROW(hyp1f1_terminating(3, -3.0, 0.5));  // (c)_k stays nonzero up to k = n
}

TEST_CASE("laguerre-1F1 identity over the full invariant range") {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
        for (int nu = 0; nu <= 5; ++nu)
            for (double x : {0.0, 0.3, 1.7, 4.2, 9.5, 17.0, 30.0}) {
                const double lhs = laguerre(n, nu, x);
                const double rhs = binom(n + nu, n) * hyp1f1_terminating(n, nu + 1.0, x);
                worst = std::max(worst, std::abs(lhs - rhs) / std::max({std::abs(lhs), 1.0}));
            }
    CHECK(worst < 1e-11);
}

TEST_CASE("jacobi explicit sum") {
    CHECK(jacobi(0, -2.5, -2.5, 1.3) == 1.0);
    // degree 1: ((a+b+2)x + (a-b))/2
    CHECK(jacobi(1, -1.5, -1.5, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> ux(-1.5, 1.5), up(-3.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double a = up(rng), b = up(rng), x = ux(rng);
        const double expected = 0.5 * ((a + b + 2.0) * x + (a - b));
        CHECK(jacobi(1, a, b, x) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("associated Legendre on the hyperbolic cut") {
    const double rho = 0.5;
    CHECK(assoc_legendre_hyp(1, 1, std::cosh(rho)) ==
          doctest::Approx(0.52109530549374736).epsilon(1e-12));  // sinh(0.5)
    for (double z : {1.0, 1.2, 2.7}) CHECK(assoc_legendre_hyp(1, 0, z) == doctest::Approx(z));
    CHECK_THROWS_AS(assoc_legendre_hyp(2, 1, 0.8), std::domain_error);
    CHECK_THROWS_AS(assoc_legendre_hyp(2, 3, 1.5), std::domain_error);
}

TEST_CASE("Legendre-Jacobi identity with the derived constant") {
    // P_l^m(cosh r) = c * sinh^l(r) P_{l-m}^{(-l-1/2,-l-1/2)}(coth r),
    // c = [(2l)!/(2^l l! (l-m)!)] / binom(-m-1/2, l-m)
    double worst = 0.0;
    for (int l = 0; l <= 5; ++l)
        for (int m = 0; m <= l; ++m)
            for (double rho = 0.1; rho <= 3.0; rho += 0.29) {
                const double lhs = assoc_legendre_hyp(l, m, std::cosh(rho));
                double dfact = 1.0;
                for (int i = 1; i <= l; ++i) dfact *= (l + i) / 2.0;
                for (int i = 1; i <= l - m; ++i) dfact /= i;
                const double cst = dfact / binom(-m - 0.5, l - m);
                const double rhs = cst * std::pow(std::sinh(rho), l) *
                                   jacobi(l - m, -l - 0.5, -l - 0.5, 1.0 / std::tanh(rho));
                worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
            }
    CHECK(worst < 1e-10);
    // the specific cross-check point: P_3^2(1.8) via the Jacobi route
    const double z = 1.8;
    const double r32 = std::acosh(z);
    const double cst = (720.0 / (8.0 * 6.0 * 1.0)) / binom(-2.5, 1);
    const double via_jacobi =
        cst * std::pow(std::sinh(r32), 3) * jacobi(1, -3.5, -3.5, 1.0 / std::tanh(r32));
    CHECK(assoc_legendre_hyp(3, 2, z) == doctest::Approx(via_jacobi).epsilon(1e-12));
}

TEST_CASE("bessel J0") {
    CHECK(bessel(BesselKind::J0, 0.0) == 1.0);
    // first root, located by bisection on the series oracle
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (j0_series_oracle(lo) * j0_series_oracle(mid) <= 0.0 ? hi : lo) = mid;
    }
    const double root = 0.5 * (lo + hi);
    CHECK(root == doctest::Approx(2.4048255576957728).epsilon(1e-12));
    CHECK(std::abs(bessel_j0(root)) < 1e-10);
    // both branches against the series oracle
    for (double x : {0.5, 4.0, 11.9, 12.1, 14.0, 25.0, 50.0})
        CHECK(bessel_j0(x) == doctest::Approx(j0_series_oracle(x)).epsilon(2e-11));
}

TEST_CASE("bessel I family") {
    CHECK(bessel(BesselKind::I0, 0.0) == 1.0);
    CHECK(bessel(BesselKind::I1, 0.0) == 0.0);
    // I0' = I1 by central differences
    for (double x : {0.5, 3.0, 11.0, 20.0}) {
        const double h = 1e-5;
        const double d = (bessel_i0(x + h) - bessel_i0(x - h)) / (2.0 * h);
        CHECK(d == doctest::Approx(bessel_i1(x)).epsilon(1e-7));
    }
    // parity
    CHECK(bessel_i0(-2.0) == bessel_i0(2.0));
    CHECK(bessel_i1(-2.0) == -bessel_i1(2.0));
    CHECK_THROWS_AS(bessel_i0(701.0), std::overflow_error);
    CHECK(std::isfinite(bessel_i0(700.0)));
}

}  // TEST_SUITE
