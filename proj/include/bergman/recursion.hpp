#pragma once

#include <atomic>
#include <vector>

#include "bergman/geometry.hpp"
#include "bergman/parallel.hpp"

namespace bergman {

/// One summand of the coefficient recursion: the operator order nu, the
/// phase-remainder power mu and the level j are tied by nu - mu = j with
/// 2 nu >= 3 mu, so for fixed j the index set is exactly
/// {(mu, mu + j) : 0 <= mu <= 2j}.
struct RecursionTermIndex {
    int j = 0;
    int mu = 0;
    int nu = 0;

    bool valid() const {
        return j >= 1 && mu >= 0 && nu - mu == j && 2 * nu >= 3 * mu;
    }

    static std::vector<RecursionTermIndex> enumerate(int j) {
        std::vector<RecursionTermIndex> out;
        for (int mu = 0; mu <= 2 * j; ++mu) out.push_back({j, mu, mu + j});
        return out;
    }
};

/// Conservative input order needed to certify all coefficients b_0..b_M to
/// jet degree D: level j consumes up to 6j offset-derivatives and one
/// antiholomorphic transfer of order j, summed over a path of total weight M.
inline int required_order(int M, int D) { return D + 6 * M + 4; }

/// The computed coefficient jets b_0..b_M on the base layout (w, wbar),
/// each truncated to jet degree `cap`, plus the bookkeeping that produced
/// them.
template <class S>
struct CoefficientTable {
    int dimension = 0;
    int max_m = 0;      // M
    int cap = 0;        // D
    int input_order = 0;
    std::vector<Jet<S>> b;
};

/// The Laplace operator with inverse-metric coefficients frozen at the
/// moving base point: each application contracts one d_{u_i} d_{ubar_j}
/// pair against the (w, wbar)-jet multiplier carried in coeff[i][j].
template <class S>
struct FrozenLaplacian {
    JetMatrix<S> coeff; // on offset_layout, no (u, ubar) dependence
    int dimension = 0;

    static FrozenLaplacian from_metric(const MetricJets<S>& m) {
        const int n = m.dimension;
        FrozenLaplacian out;
        out.dimension = n;
        const VarLayout lay4 = offset_layout(n);
        out.coeff.assign(static_cast<std::size_t>(n), {});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                // Kähler symbols g^{i jbar} form the transposed matrix inverse
                const Jet<S>& entry =
                    m.g_inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                out.coeff[static_cast<std::size_t>(i)].push_back(
                    embed_by_name(reinterpret(entry, base_layout(n), {0, 1}), lay4));
            }
        return out;
    }

    Jet<S> apply(const Jet<S>& f) const {
        const int U = 2, UB = 3;
        Jet<S> out(f.layout(), std::max(0, f.degree_cap() - 2));
        for (int i = 0; i < dimension; ++i)
            for (int j = 0; j < dimension; ++j) {
                const Jet<S> d = derive(derive(f, U, i), UB, j);
                if (d.is_zero()) continue;
                out = out +
                      with_cap(coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                               d.degree_cap()) *
                          d;
            }
        return out;
    }
};

/// (sum_{i,j} g^{i jbar}(w) d_{u_i} d_{ubar_j})^nu applied to a jet on the
/// offset layout; the multipliers are frozen, derivatives never hit them.
template <class S>
Jet<S> frozen_laplacian_pow(const Jet<S>& f, int nu, const MetricJets<S>& geo) {
    const auto lap = FrozenLaplacian<S>::from_metric(geo);
    Jet<S> out = f;
    for (int t = 0; t < nu; ++t) out = lap.apply(out);
    return out;
}

/// Holomorphic extension in the second argument: b(w, wbar) -> b(w, ybar)
/// with ybar = wbar + ubar. The result has no u-dependence.
template <class S>
Jet<S> extend_antiholomorphic(const Jet<S>& b) {
    const int n = b.layout().group(0).size;
    const int WB = 1, UB = 3;
    return shift_group(embed_by_name(b, offset_layout(n)), WB, UB);
}

/// Off-diagonal transport: coefficients of b(w, wbar) moved to independent
/// slots (x, ybar); restricting ybar = xbar recovers the input.
template <class S>
Jet<S> polarize_bm(const Jet<S>& b) {
    const int n = b.layout().group(0).size;
    return reinterpret(b, polarized_layout(n), {0, 1});
}

/// Shared context for one coefficient run: the derived geometry, the phase
/// remainder and its boxed powers, and the coefficient jets computed so far
/// at their staged working degrees D + (M - m).
template <class S>
struct RecursionWorkspace {
    int dimension = 0;
    int max_m = 0;
    int cap = 0;
    int input_order = 0;
    MetricJets<S> geo;
    SwJet<S> sw;
    Jet<S> v4;            // v(y, ybar) on the offset layout
    FrozenLaplacian<S> lap;
    Jet<S> v_inv_base;    // 1/v(w, wbar) on the base layout
    std::vector<Jet<S>> b_work;  // staged caps D + (M - m)
    std::vector<Jet<S>> sw_pow;  // boxed powers of S_w, index = mu
};

namespace detail {

template <class S>
Jet<S> boxed(const Jet<S>& a, int u_max, int ubar_max, int w_total_max, int cap) {
    const int U = 2, UB = 3;
    Jet<S> r = select_group_degree(select_group_degree(a, U, 0, u_max), UB, 0, ubar_max);
    r = restrict_groups_total(r, {0, 1}, w_total_max);
    return with_cap(r, cap);
}

/// Powers of the phase remainder, each pruned to the widest box any term at
/// this mu can read: offset degrees mu + M, base degrees D + M - 1.
template <class S>
void build_sw_powers(RecursionWorkspace<S>& ws) {
    const int M = ws.max_m;
    const int w_box = ws.cap + M - 1;
    ws.sw_pow.assign(static_cast<std::size_t>(2 * M) + 1, Jet<S>(ws.sw.s.layout(), 0));
    if (M == 0) return;
    auto cap_for = [&](int mu) { return w_box + 2 * (mu + M); };
    ws.sw_pow[1] = boxed(ws.sw.s, 1 + M, 1 + M, w_box, cap_for(1));
    for (int mu = 2; mu <= 2 * M; ++mu) {
        if (ws.sw_pow[static_cast<std::size_t>(mu - 1)].is_zero()) break;
        const Jet<S> prev = with_cap(ws.sw_pow[static_cast<std::size_t>(mu - 1)], cap_for(mu));
        const Jet<S> base = boxed(ws.sw.s, mu + M, mu + M, w_box, cap_for(mu));
        ws.sw_pow[static_cast<std::size_t>(mu)] =
            boxed(prev * base, mu + M, mu + M, w_box, cap_for(mu));
    }
}

/// One recursion summand, already scaled by (-1)^mu / (mu! nu!), as a
/// (w, wbar)-jet of degree target_cap.
template <class S>
Jet<S> recursion_term_impl(const RecursionTermIndex& idx, const Jet<S>& b_prev,
                           const Jet<S>& sw_pow_mu, const Jet<S>& v4,
                           const FrozenLaplacian<S>& lap, int target_cap) {
    const int U = 2, UB = 3;
    const int j = idx.j, mu = idx.mu, nu = idx.nu;
    const int work_cap = target_cap + 2 * nu;
    const int n = lap.dimension;

    // b(w, ybar) can transfer at most j antiholomorphic orders; v(y, ybar)
    // contributes at most j offset orders on each side
    Jet<S> bx = boxed(extend_antiholomorphic(b_prev), 0, j, target_cap, work_cap);
    Jet<S> v4p = boxed(v4, j, j, target_cap, work_cap);
    Jet<S> f = boxed(bx * v4p, j, j, target_cap, work_cap);
    if (mu > 0) {
        if (sw_pow_mu.is_zero()) return Jet<S>(base_layout(n), target_cap);
        f = f * boxed(sw_pow_mu, nu, nu, target_cap, work_cap);
    }
    // only the exact offset-bidegree (nu, nu) slice survives nu contractions
    f = select_group_degree(select_group_degree(f, U, nu, nu), UB, nu, nu);
    f = restrict_groups_total(f, {0, 1}, target_cap);
    for (int t = 0; t < nu; ++t) {
        if (f.is_zero()) break;
        f = restrict_groups_total(lap.apply(f), {0, 1}, target_cap);
    }
    Jet<S> value = eval_zero(f, {U, UB});

    mpq_class scale(mpz_class(mu % 2 == 0 ? 1 : -1),
                    factorial_mpz(static_cast<unsigned long>(mu)) *
                        factorial_mpz(static_cast<unsigned long>(nu)));
    scale.canonicalize();
    return with_cap(value, target_cap) * Jet<S>::traits::from_rational(scale);
}

} // namespace detail

/// One summand of the coefficient recursion, evaluated standalone:
/// (-1)^mu/(mu! nu!) * Delta^nu(S_w^mu b(w, ybar) v(y, ybar)) |_{y=w}
/// as a (w, wbar)-jet of degree target_cap.
template <class S>
Jet<S> recursion_term(const RecursionTermIndex& idx, const Jet<S>& b_prev, const SwJet<S>& s,
                      const Jet<S>& v4, const MetricJets<S>& geo, int target_cap) {
    if (!idx.valid()) throw PreconditionViolated("invalid recursion term index");
    const auto lap = FrozenLaplacian<S>::from_metric(geo);
    Jet<S> pow = Jet<S>::constant(s.s.layout(), s.s.degree_cap(), Jet<S>::traits::one());
    for (int t = 0; t < idx.mu; ++t) pow = pow * s.s;
    return detail::recursion_term_impl(idx, b_prev, pow, v4, lap, target_cap);
}

/// Derives everything compute_bm needs and seeds b_0 = 1 at its working
/// degree. Throws InsufficientInputOrder unless the potential jet reaches
/// required_order(M, D).
template <class S>
RecursionWorkspace<S> prepare_recursion(const PotentialJet<S>& p, int M, int D) {
    if (M < 0 || D < 0) throw PreconditionViolated("negative order or cap");
    if (p.input_order < required_order(M, D))
        throw InsufficientInputOrder("potential jet order " + std::to_string(p.input_order) +
                                     " cannot certify M=" + std::to_string(M) +
                                     ", D=" + std::to_string(D) + "; need " +
                                     std::to_string(required_order(M, D)));
    RecursionWorkspace<S> ws;
    ws.dimension = p.dimension;
    ws.max_m = M;
    ws.cap = D;
    ws.input_order = p.input_order;
    ws.geo = metric_from_potential(p);
    ws.sw = build_sw(p);
    ws.lap = FrozenLaplacian<S>::from_metric(ws.geo);

    const int n = p.dimension;
    const int W = 0, WB = 1, U = 2, UB = 3;
    const Jet<S> v_lift = embed_by_name(reinterpret(ws.geo.volume, base_layout(n), {0, 1}),
                                        offset_layout(n));
    ws.v4 = shift_group(shift_group(v_lift, W, U), WB, UB);
    ws.v_inv_base = reinterpret(ws.geo.volume_inv, base_layout(n), {0, 1});

    detail::build_sw_powers(ws);

    ws.b_work.reserve(static_cast<std::size_t>(M) + 1);
    ws.b_work.push_back(
        Jet<S>::constant(base_layout(n), D + M, Jet<S>::traits::one()));
    return ws;
}

/// Computes b_m from b_0..b_{m-1}, appends it to the workspace and returns
/// it at the staged cap D + (M - m). Terms are evaluated independently and
/// reduced in (j, mu) order.
template <class S>
Jet<S> compute_bm(RecursionWorkspace<S>& ws, int m) {
    if (m <= 0 || static_cast<std::size_t>(m) != ws.b_work.size())
        throw PreconditionViolated("coefficients must be computed in order");
    const int n = ws.dimension;
    const int target_cap = ws.cap + (ws.max_m - m);

    std::vector<RecursionTermIndex> indices;
    for (int j = 1; j <= m; ++j)
        for (const auto& idx : RecursionTermIndex::enumerate(j)) indices.push_back(idx);

    std::vector<Jet<S>> values(indices.size(), Jet<S>(base_layout(n), target_cap));
    parallel_for(indices.size(), [&](std::size_t t) {
        const auto& idx = indices[t];
        values[t] = detail::recursion_term_impl(idx, ws.b_work[static_cast<std::size_t>(m - idx.j)],
                                        ws.sw_pow[static_cast<std::size_t>(idx.mu)], ws.v4,
                                        ws.lap, target_cap);
    });

    const Jet<S> total = ordered_sum(values);
    Jet<S> bm = with_cap(ws.v_inv_base, target_cap) * total;
    bm.scale_in_place(Jet<S>::traits::from_int(-1));
    ws.b_work.push_back(bm);
    return bm;
}

/// Runs the full recursion: all coefficient jets b_0..b_M at degree D.
template <class S>
CoefficientTable<S> compute_all(const PotentialJet<S>& p, int M, int D) {
    auto ws = prepare_recursion(p, M, D);
    CoefficientTable<S> table;
    table.dimension = p.dimension;
    table.max_m = M;
    table.cap = D;
    table.input_order = p.input_order;
    for (int m = 1; m <= M; ++m) compute_bm(ws, m);
    table.b.reserve(static_cast<std::size_t>(M) + 1);
    for (int m = 0; m <= M; ++m) {
        Jet<S> bm = with_cap(ws.b_work[static_cast<std::size_t>(m)], D);
        if constexpr (scalar_traits<S>::exact) {
            if (!hermitian(bm))
                throw PreconditionViolated("computed coefficient lost Hermitian symmetry");
        }
        table.b.push_back(std::move(bm));
    }
    return table;
}

} // namespace bergman
