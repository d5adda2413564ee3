#pragma once

#include <utility>
#include <vector>

#include "bergman/jet.hpp"
#include "bergman/matrix.hpp"

namespace bergman {

/// Hermitian jet of a Kähler potential at the base point (normalized to
/// vanish there), with a positive definite metric certified at construction.
template <class S>
struct PotentialJet {
    Jet<S> phi;      // on point_layout(dimension)
    int dimension = 0;
    int input_order = 0;

    static PotentialJet make(Jet<S> phi_in) {
        PotentialJet p;
        p.dimension = phi_in.layout().group(0).size;
        p.input_order = phi_in.degree_cap();
        if (phi_in.layout() != point_layout(p.dimension))
            throw LayoutMismatch("potential must live on the (z, zbar) layout");
        if (Jet<S>::traits::keep(phi_in.constant_term()))
            throw PreconditionViolated("potential must vanish at the base point");
        if (!hermitian(phi_in, scalar_traits<S>::exact ? 0.0 : 1e-12))
            throw PreconditionViolated("potential must be real-valued (Hermitian jet)");
        p.phi = std::move(phi_in);
        check_positivity(p);
        return p;
    }

private:
    static void check_positivity(const PotentialJet& p) {
        const int n = p.dimension;
        Matrix<S> g0 = matrix_zero<S>(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<int> exps(static_cast<std::size_t>(2 * n), 0);
                exps[static_cast<std::size_t>(i)] = 1;
                exps[static_cast<std::size_t>(n + j)] = 1;
                g0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.phi.coeff(exps);
            }
        const auto minors = leading_principal_minors(g0);
        for (const S& m : minors) {
            if constexpr (scalar_traits<S>::exact) {
                if (!m.is_real() || m.real() <= 0)
                    throw DegenerateMetric("metric at the base point is not positive definite");
            } else {
                if (m.real() <= 1e-12 || std::abs(m.imag()) > 1e-12)
                    throw DegenerateMetric("metric at the base point is not positive definite");
            }
        }
    }
};

/// Metric, inverse metric and volume density derived from one potential.
template <class S>
struct MetricJets {
    JetMatrix<S> g;       // g_{i jbar} = d_i d_jbar phi, on point_layout
    JetMatrix<S> g_inv;   // matrix inverse: g * g_inv = I up to the cap
    Jet<S> volume;        // v = det g
    Jet<S> volume_inv;    // 1/v
    int dimension = 0;
};

template <class S>
MetricJets<S> metric_from_potential(const PotentialJet<S>& p) {
    const int n = p.dimension;
    MetricJets<S> m;
    m.dimension = n;
    m.g.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.g[static_cast<std::size_t>(i)].push_back(derive(derive(p.phi, 0, i), 1, j));
    m.volume = determinant(m.g);
    const S v0 = m.volume.constant_term();
    if constexpr (scalar_traits<S>::exact) {
        if (!v0.is_real() || v0.real() <= 0)
            throw DegenerateMetric("volume density vanishes at the base point");
    } else {
        if (v0.real() <= 0) throw DegenerateMetric("volume density vanishes at the base point");
    }
    m.g_inv = jet_matrix_inverse(m.g);
    m.volume_inv = inverse(m.volume);
    return m;
}

/// The potential's coefficients transported onto independent slots (x, ybar):
/// holomorphic in x, antiholomorphic in the second argument.
template <class S>
struct PolarizedPotential {
    Jet<S> psi; // on polarized_layout(dimension)
    int dimension = 0;
};

template <class S>
PolarizedPotential<S> polarize(const PotentialJet<S>& p) {
    PolarizedPotential<S> out;
    out.dimension = p.dimension;
    out.psi = reinterpret(p.phi, polarized_layout(p.dimension), {0, 1});
    return out;
}

/// Calabi's diastasis D(x,y) = phi(x) + phi(y) - psi(x, ybar) - psi(y, xbar)
/// as a jet on the two-point layout (x, xbar, y, ybar).
template <class S>
Jet<S> diastasis(const PotentialJet<S>& p) {
    const VarLayout pair = pair_layout(p.dimension);
    const Jet<S> phi_x = reinterpret(p.phi, pair, {0, 1});
    const Jet<S> phi_y = reinterpret(p.phi, pair, {2, 3});
    const Jet<S> psi_xy = reinterpret(p.phi, pair, {0, 3});
    const Jet<S> psi_yx = reinterpret(p.phi, pair, {2, 1});
    return phi_x + phi_y - psi_xy - psi_yx;
}

/// The potential re-expanded at a moving base point w with offset u = y - w,
/// split into the u-holomorphic part f (countered by its conjugate) and the
/// mixed remainder: shifted = phi_tilde + f + conj(f) exactly.
template <class S>
struct PhaseSplit {
    Jet<S> shifted;    // phi(w+u, wbar+ubar) on offset_layout
    Jet<S> f;          // ubar-free part minus half the (u,ubar)-constant
    Jet<S> phi_tilde;  // terms with u-degree >= 1 and ubar-degree >= 1
    int dimension = 0;
};

template <class S>
PhaseSplit<S> phase_split(const PotentialJet<S>& p) {
    const VarLayout lay4 = offset_layout(p.dimension);
    const int W = 0, WB = 1, U = 2, UB = 3;
    PhaseSplit<S> out;
    out.dimension = p.dimension;
    const Jet<S> lifted = reinterpret(p.phi, lay4, {W, WB});
    out.shifted = shift_group(shift_group(lifted, W, U), WB, UB);
    const Jet<S> ubar_free = select_group_degree(out.shifted, UB, 0, 0);
    const Jet<S> constant = select_group_degree(ubar_free, U, 0, 0);
    const S half = Jet<S>::traits::one() / Jet<S>::traits::from_int(2);
    out.f = ubar_free - constant * half;
    out.phi_tilde = select_group_degree(select_group_degree(out.shifted, U, 1, 127), UB, 1, 127);
    return out;
}

/// The phase remainder: phi_tilde minus its Hermitian (u, ubar)-quadratic
/// part. Every term has u-degree >= 1, ubar-degree >= 1 and joint degree >= 3.
template <class S>
struct SwJet {
    Jet<S> s; // on offset_layout
    int dimension = 0;
};

template <class S>
SwJet<S> build_sw(const PhaseSplit<S>& ps) {
    const int U = 2, UB = 3;
    SwJet<S> out;
    out.dimension = ps.dimension;
    const Jet<S> quad =
        select_group_degree(select_group_degree(ps.phi_tilde, U, 1, 1), UB, 1, 1);
    out.s = ps.phi_tilde - quad;
    return out;
}

template <class S>
SwJet<S> build_sw(const PotentialJet<S>& p) {
    return build_sw(phase_split(p));
}

/// Real-vs-complex Hessian determinants at the base point for a real-valued
/// jet whose purely (anti)holomorphic second derivatives vanish there:
/// returns (det Hess_R, 4^n |det Hess_C|^2), which must agree.
template <class S>
std::pair<S, S> hessian_check(const Jet<S>& h) {
    const int n = h.layout().group(0).size;
    if (h.layout() != point_layout(n) && h.layout() != base_layout(n))
        throw LayoutMismatch("hessian check expects a two-group jet");

    auto second = [&](int ga, int sa, int gb, int sb) {
        return derive(derive(h, ga, sa), gb, sb).constant_term();
    };

    // B = [[h_zz, h_zzbar], [h_zbarz, h_zbarzbar]]
    Matrix<S> B = matrix_zero<S>(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = second(0, i, 0, j);
            B[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)] = second(0, i, 1, j);
            B[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(j)] = second(1, i, 0, j);
            B[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(n + j)] =
                second(1, i, 1, j);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (Jet<S>::traits::keep(B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ||
                Jet<S>::traits::keep(
                    B[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(n + j)]))
                throw PreconditionViolated(
                    "purely (anti)holomorphic second derivatives must vanish at 0");
        }

    // real coordinates (x, y), z = x + iy: Hess_R = P B P^T
    const S one = Jet<S>::traits::one();
    const S im = Jet<S>::traits::imag_unit();
    Matrix<S> P = matrix_zero<S>(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        P[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = one;
        P[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = one;
        P[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i)] = im;
        P[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(n + i)] = -im;
    }
    Matrix<S> hess_r = matrix_zero<S>(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            S acc = scalar_traits<S>::zero();
            for (int a = 0; a < 2 * n; ++a)
                for (int b = 0; b < 2 * n; ++b)
                    acc += P[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                           B[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                           P[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
            hess_r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }

    const S lhs = matrix_det(hess_r);

    Matrix<S> hc = matrix_zero<S>(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            hc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = second(0, i, 1, j);
    const S dc = matrix_det(hc);
    S rhs = dc * scalar_traits<S>::conj(dc);
    for (int i = 0; i < n; ++i) rhs = rhs * Jet<S>::traits::from_int(4);
    return {lhs, rhs};
}

/// Scalar curvature jet: rho = sum_{i,j} g^{i jbar} d_i d_jbar (-log v),
/// normalized so that b_1 = rho / 2 on the exact model geometries.
template <class S>
Jet<S> scalar_curvature(const MetricJets<S>& m) {
    const int n = m.dimension;
    const Jet<S>& v = m.volume;
    const S v0 = v.constant_term();
    // -log v = -log(v/v(0)) - log v(0); the constant dies under derivatives
    const Jet<S> v_unit = v * (Jet<S>::traits::one() / v0);
    const Jet<S> neg_log_v = -log(v_unit);
    Jet<S> rho(v.layout(), std::max(0, v.degree_cap() - 2));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // Kähler inverse-metric symbols are the transposed matrix inverse
            const Jet<S> coeff = with_cap(m.g_inv[static_cast<std::size_t>(j)]
                                               [static_cast<std::size_t>(i)],
                                          rho.degree_cap());
            rho = rho + coeff * derive(derive(neg_log_v, 0, i), 1, j);
        }
    return rho;
}

} // namespace bergman
