#pragma once

#include <random>
#include <vector>

#include "bergman/jet.hpp"
#include "bergman/matrix.hpp"

namespace bergman::testing {

inline mpq_class random_rational(std::mt19937_64& rng, long max_abs = 9, long max_den = 9) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_den);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline GaussianRational random_scalar(std::mt19937_64& rng) {
    return GaussianRational(random_rational(rng), random_rational(rng));
}

/// Sparse random exact jet with roughly `fill` of the admissible keys set.
inline ExactJet random_jet(std::mt19937_64& rng, const VarLayout& lay, int cap,
                           double fill = 0.25) {
    ExactJet j(lay, cap);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<int> exps(static_cast<std::size_t>(lay.total_slots()), 0);
    // walk all exponent vectors with total degree <= cap
    const int slots = lay.total_slots();
    for (;;) {
        int deg = 0;
        for (int e : exps) deg += e;
        if (deg <= cap && coin(rng) < fill) {
            auto s = random_scalar(rng);
            if (!s.is_zero()) j.add_term(j.pack(exps), s);
        }
        int i = 0;
        while (i < slots) {
            if (exps[static_cast<std::size_t>(i)] < cap) {
                ++exps[static_cast<std::size_t>(i)];
                break;
            }
            exps[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == slots) break;
    }
    return j;
}

/// Random Hermitian jet (real-valued semantics): a + conj(a).
inline ExactJet random_hermitian_jet(std::mt19937_64& rng, const VarLayout& lay, int cap,
                                     double fill = 0.25) {
    const ExactJet a = random_jet(rng, lay, cap, fill);
    return a + conjugate(a);
}

/// Random Hermitian positive definite matrix: A* A + I.
inline Matrix<GaussianRational> random_hpd_matrix(std::mt19937_64& rng, int n) {
    auto a = matrix_zero<GaussianRational>(n, n);
    for (auto& row : a)
        for (auto& e : row) e = random_scalar(rng);
    auto q = matrix_identity<GaussianRational>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < n; ++t)
                q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    a[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)].conj() *
                    a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
    return q;
}

} // namespace bergman::testing
