#include <catch2/catch_amalgamated.hpp>

#include "bergman/models.hpp"
#include "test_support.hpp"

using namespace bergman;
using bergman::testing::random_hpd_matrix;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("closed-form kernels at reference points") {
    // fock: K(0,0) = (k/pi)^n, diagonal K e^{-k|x|^2} = (k/pi)^n
    const std::vector<Complex> zero{0.0};
    CHECK(std::abs(fock_kernel(1.0, zero, zero) - Complex(1.0 / pi)) < 1e-15);
    const std::vector<Complex> x{{0.3, 0.1}};
    const double k = 17.0;
    CHECK(std::abs(fock_kernel(k, x, x) * std::exp(-k * std::norm(x[0])) -
                   Complex(k / pi)) < 1e-12);

    // fubini-study: k=1 at the origin gives 2/pi; diagonal K e^{-k phi} = (k+1)/pi
    CHECK(std::abs(fs_kernel(1.0, 0.0, 0.0) - Complex(2.0 / pi)) < 1e-15);
    const Complex p{0.2, -0.1};
    CHECK(std::abs(fs_kernel(k, p, p) * std::pow(1.0 + std::norm(p), -k) -
                   Complex((k + 1.0) / pi)) < 1e-12);

    // hyperbolic: diagonal K e^{-k phi} = (k-1)/pi
    CHECK(std::abs(hyperbolic_kernel(k, p, p) * std::pow(1.0 - std::norm(p), k) -
                   Complex((k - 1.0) / pi)) < 1e-12);
    CHECK_THROWS_AS(hyperbolic_kernel(k, Complex(1.5, 0.0), p), DomainError);
}

TEST_CASE("kernels satisfy Hermitian symmetry K(x,y) = conj(K(y,x))") {
    const Complex x{0.21, 0.05}, y{-0.13, 0.17};
    const double k = 11.0;
    CHECK(std::abs(fs_kernel(k, x, y) - std::conj(fs_kernel(k, y, x))) < 1e-12);
    CHECK(std::abs(hyperbolic_kernel(k, x, y) - std::conj(hyperbolic_kernel(k, y, x))) < 1e-12);
    const std::vector<Complex> xv{x}, yv{y};
    CHECK(std::abs(fock_kernel(k, xv, yv) - std::conj(fock_kernel(k, yv, xv))) < 1e-10);
}

TEST_CASE("fock kernel matches its monomial series") {
    // K(x,y) = sum_j x^j ybar^j k^{j+1} / (pi j!), norms pi j! / k^{j+1}
    const double k = 9.0;
    const Complex x{0.4, 0.1}, y{0.3, -0.2};
    Complex acc = 0.0;
    for (int j = 0; j <= 60; ++j)
        acc += std::pow(x * std::conj(y), j) / fock_monomial_norm(k, j);
    const std::vector<Complex> xv{x}, yv{y};
    CHECK(std::abs(acc - fock_kernel(k, xv, yv)) < 1e-12 * std::abs(acc));
}

TEST_CASE("gram oracle reproduces the fock kernel") {
    auto model = KernelModel::fock();
    model.kind = KernelModel::Kind::radial_numeric; // force the quadrature path
    model.quad.max_monomial_degree = 48;
    const double k = 12.0;
    const Complex x{0.5, 0.2}, y{0.4, -0.1};
    const auto g = radial_gram_kernel(model, k, x, y);
    const std::vector<Complex> xv{x}, yv{y};
    const Complex truth = fock_kernel(k, xv, yv);
    CHECK(std::abs(g.value - truth) < 1e-9 * std::abs(truth));
    // norm oracle against the closed form
    for (int j = 0; j <= 10; ++j)
        CHECK(std::abs(g.norms[static_cast<std::size_t>(j)] - fock_monomial_norm(k, j)) <
              1e-11 * fock_monomial_norm(k, j));
}

TEST_CASE("gram oracle reproduces the hyperbolic kernel and Beta norms") {
    auto model = KernelModel::hyperbolic();
    model.kind = KernelModel::Kind::hyperbolic;
    model.quad.max_monomial_degree = 24;
    const long k = 12;
    const auto g = radial_gram_kernel(model, static_cast<double>(k), Complex(0.3, 0.0),
                                      Complex(0.25, 0.1));
    for (int j = 0; j <= 10; ++j) {
        const double closed = hyperbolic_monomial_norm(k, j);
        CHECK(std::abs(g.norms[static_cast<std::size_t>(j)] - closed) < 1e-10 * closed);
    }
    const Complex truth = hyperbolic_kernel(static_cast<double>(k), Complex(0.3, 0.0),
                                            Complex(0.25, 0.1));
    CHECK(std::abs(g.value - truth) < 1e-8 * std::abs(truth));
}

TEST_CASE("gram oracle is self-consistent under refinement") {
    auto model = KernelModel::radial({mpq_class(1), mpq_class(1, 10)});
    model.quad.max_monomial_degree = 32;
    const double k = 25.0;
    const Complex x{0.3, 0.0}, y{0.2, 0.1};
    const auto coarse = radial_gram_kernel(model, k, x, y);
    auto fine_model = model;
    fine_model.quad.max_monomial_degree = 48;
    fine_model.quad.abs_tolerance = 1e-15;
    const auto fine = radial_gram_kernel(fine_model, k, x, y);
    CHECK(std::abs(coarse.value - fine.value) <=
          coarse.error_bound + fine.error_bound + 1e-14 * std::abs(fine.value));
}

TEST_CASE("gram oracle rejects bad inputs") {
    auto neg = KernelModel::radial({mpq_class(1), mpq_class(-1)});
    CHECK_THROWS_AS(radial_gram_kernel(neg, 10.0, 0.1, 0.1), NonIntegrableWeight);

    auto tiny = KernelModel::radial({mpq_class(1)});
    tiny.quad.max_monomial_degree = 2;
    // |x ybar| ~ 1 at k = 40 needs far more than 2 monomials
    CHECK_THROWS_AS(radial_gram_kernel(tiny, 40.0, Complex(1.0, 0.0), Complex(1.0, 0.0)),
                    TailNotConverged);
}

TEST_CASE("wick moments: identity covariance") {
    const auto I1 = matrix_identity<GaussianRational>(1);
    const mpq_class k(7);
    // integral e^{-k|u|^2} = pi/k
    CHECK(wick_moment({0}, {0}, I1, k) == GaussianRational(mpq_class(1, 7)));
    // integral |u|^2 e^{-k|u|^2} = pi/k^2
    CHECK(wick_moment({1}, {1}, I1, k) == GaussianRational(mpq_class(1, 49)));
    // integral u ubar^2 e = 0 (degree mismatch)
    CHECK(wick_moment({1}, {2}, I1, k).is_zero());
    // integral |u|^4 e = 2 pi / k^3
    CHECK(wick_moment({2}, {2}, I1, k) == GaussianRational(mpq_class(2, 343)));
}

TEST_CASE("wick moments: only positive definite forms are accepted") {
    auto bad = matrix_identity<GaussianRational>(2);
    bad[0][0] = GaussianRational(-1);
    CHECK_THROWS_AS(wick_moment({1, 0}, {1, 0}, bad, mpq_class(3)), NotPositiveDefinite);
}

TEST_CASE("wick moments against brute-force pairings in n=2") {
    std::mt19937_64 rng(0x5eed0004);
    const auto Q = random_hpd_matrix(rng, 2);
    const auto qinv = matrix_inverse(Q);
    const mpq_class k(3);
    // alpha = (1,1), beta = (1,1): two pairings, written out by hand
    const auto direct = (qinv[0][0] * qinv[1][1] + qinv[1][0] * qinv[0][1]) / matrix_det(Q) *
                        GaussianRational(mpq_class(1, 81)); // k^{n+p} = 3^4
    CHECK(wick_moment({1, 1}, {1, 1}, Q, k) == direct);
}

TEST_CASE("cutoff profile shape") {
    CHECK(cutoff_chi(0.0) == 1.0);
    CHECK(cutoff_chi(0.5) == 1.0);
    CHECK(cutoff_chi(0.75) == 0.0);
    CHECK(cutoff_chi(0.9) == 0.0);
    const double mid = cutoff_chi(0.625);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
    // monotone on the transition annulus
    CHECK(cutoff_chi(0.55) > cutoff_chi(0.65));
}

TEST_CASE("model potential jets agree with the closed forms") {
    const auto m = KernelModel::radial({mpq_class(1), mpq_class(1, 10)});
    const auto p = m.potential_jet<GaussianRational>(8);
    const std::vector<Complex> pt{Complex(0.3, 0.1), Complex(0.3, -0.1)};
    CHECK(std::abs(eval_point(p.phi, pt) - Complex(m.phi_radial(std::norm(pt[0])))) < 1e-14);

    const auto fs = KernelModel::fubini_study();
    const auto pfs = fs.potential_jet<GaussianRational>(30);
    CHECK(std::abs(eval_point(pfs.phi, pt) - Complex(fs.phi_radial(std::norm(pt[0])))) < 1e-12);
}
