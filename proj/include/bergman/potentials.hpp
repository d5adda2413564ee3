#pragma once

#include <vector>

#include "bergman/geometry.hpp"

namespace bergman {

/// phi = |z|^2 on C^n.
template <class S>
PotentialJet<S> fock_potential(int n, int order) {
    Jet<S> phi(point_layout(n), order);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(2 * n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>(n + i)] = 1;
        phi.add_term(phi.pack(e), Jet<S>::traits::one());
    }
    return PotentialJet<S>::make(phi);
}

/// phi = log(1 + |z|^2), n = 1.
template <class S>
PotentialJet<S> fubini_study_potential(int order) {
    const Jet<S> zzb =
        Jet<S>::from_terms(point_layout(1), order, {{{1, 1}, Jet<S>::traits::one()}});
    return PotentialJet<S>::make(log(zzb + Jet<S>::traits::one()));
}

/// phi = -log(1 - |z|^2), n = 1.
template <class S>
PotentialJet<S> hyperbolic_potential(int order) {
    const Jet<S> neg =
        Jet<S>::from_terms(point_layout(1), order, {{{1, 1}, -Jet<S>::traits::one()}});
    return PotentialJet<S>::make(-log(neg + Jet<S>::traits::one()));
}

/// Radial polynomial potential phi = sum_t c_t |z|^{2t}, n = 1;
/// coefficients are indexed from t = 1.
template <class S>
PotentialJet<S> radial_potential(const std::vector<mpq_class>& coeffs, int order) {
    Jet<S> phi(point_layout(1), order);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        const int d = static_cast<int>(t) + 1;
        phi.add_term(phi.pack(std::vector<int>{d, d}), Jet<S>::traits::from_rational(coeffs[t]));
    }
    return PotentialJet<S>::make(phi);
}

} // namespace bergman
