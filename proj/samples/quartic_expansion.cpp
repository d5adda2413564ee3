// Walkthrough: exact coefficient jets for a quartic weight, their values at
// the origin, and a remainder check of the truncated kernel against the
// quadrature-backed Gram oracle.

#include <cstdio>

#include "bergman/expansion.hpp"
#include "bergman/potentials.hpp"

using namespace bergman;

int main() {
    // phi = |z|^2 + |z|^4 / 10 on C
    const mpq_class lambda(1, 10);
    const int M = 3, D = 4;
    const auto p =
        radial_potential<GaussianRational>({mpq_class(1), lambda}, required_order(M, D));

    const auto table = compute_all(p, M, D);
    std::printf("coefficient values at the origin:\n");
    for (int m = 0; m <= M; ++m)
        std::printf("  b_%d(0) = %s\n", m,
                    table.b[static_cast<std::size_t>(m)].constant_term().str().c_str());

    const auto psi = polarize(p).psi;
    auto model = KernelModel::radial({mpq_class(1), lambda});
    model.quad.max_monomial_degree = 8;

    std::printf("\nnormalized remainders against the Gram oracle at x = y = 0:\n");
    const std::vector<Complex> origin{Complex(0.0)};
    const auto scan = remainder_scan(model, table, psi, {20, 40, 80}, {0, 1, 2, 3},
                                     origin, origin);
    for (std::size_t i = 0; i < scan.n_list.size(); ++i) {
        std::printf("  N=%d:", scan.n_list[i]);
        for (double e : scan.errors[i]) std::printf("  %.3e", e);
        std::printf("   (slope %.2f)\n", scan.slopes[i]);
    }
    return 0;
}
