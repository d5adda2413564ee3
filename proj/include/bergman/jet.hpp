#pragma once

#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "bergman/layout.hpp"
#include "bergman/rational.hpp"
#include "bergman/scalar_traits.hpp"

namespace bergman {

/// Truncated multivariate power series over grouped variable slots.
///
/// Terms are stored sparsely, keyed by the packed exponent vector; no stored
/// key exceeds the total-degree cap and no stored coefficient fails the
/// scalar keep() predicate (exact zeros in exact mode). Jets are treated as
/// immutable values once built: every operation returns a fresh jet.
template <class S>
class Jet {
public:
    using traits = scalar_traits<S>;
    using Terms = std::map<ExpKey, S>;

    Jet() = default;

    Jet(VarLayout layout, int degree_cap) : layout_(std::move(layout)), cap_(degree_cap) {
        if (cap_ < 0 || cap_ > 127)
            throw LayoutMismatch("degree cap out of the supported range [0,127]");
    }

    static Jet constant(const VarLayout& layout, int cap, S value) {
        Jet j(layout, cap);
        j.add_term(zero_key(), std::move(value));
        return j;
    }

    /// The degree-one monomial for one slot of one group.
    static Jet variable(const VarLayout& layout, int cap, int group, int slot) {
        Jet j(layout, cap);
        if (cap < 1) return j;
        ExpKey k = zero_key();
        k[static_cast<std::size_t>(layout.offset(group) + slot)] = 1;
        j.add_term(k, traits::one());
        return j;
    }

    /// Builds from (full slot exponent vector, coefficient) pairs.
    static Jet from_terms(const VarLayout& layout, int cap,
                          const std::vector<std::pair<std::vector<int>, S>>& entries) {
        Jet j(layout, cap);
        for (const auto& [exps, c] : entries) j.add_term(j.pack(exps), c);
        return j;
    }

    const VarLayout& layout() const { return layout_; }
    int degree_cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool same_shape(const Jet& o) const { return cap_ == o.cap_ && layout_ == o.layout_; }

    ExpKey pack(std::span<const int> exps) const {
        if (static_cast<int>(exps.size()) != layout_.total_slots())
            throw LayoutMismatch("exponent vector does not match the layout slot count");
        ExpKey k = zero_key();
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > 127) throw LayoutMismatch("exponent out of range");
            k[i] = static_cast<std::uint8_t>(exps[i]);
        }
        return k;
    }

    S coeff(std::span<const int> exps) const { return coeff_key(pack(exps)); }
    S coeff(std::initializer_list<int> exps) const {
        return coeff(std::span<const int>(exps.begin(), exps.size()));
    }

    S coeff_key(const ExpKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? traits::zero() : it->second;
    }

    S constant_term() const { return coeff_key(zero_key()); }

    int max_stored_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, total_degree(k, layout_.total_slots()));
        return d;
    }

    /// Accumulates one term, respecting the cap and the sparse canonical form.
    void add_term(const ExpKey& key, const S& value) {
        if (total_degree(key, layout_.total_slots()) > cap_) return;
        auto [it, fresh] = terms_.try_emplace(key, value);
        if (!fresh) it->second += value;
        if (!traits::keep(it->second)) terms_.erase(it);
    }

    void scale_in_place(const S& factor) {
        if (!traits::keep(factor)) {
            terms_.clear();
            return;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= factor;
            it = traits::keep(it->second) ? std::next(it) : terms_.erase(it);
        }
    }

private:
    VarLayout layout_;
    int cap_ = 0;
    Terms terms_;
};

using ExactJet = Jet<GaussianRational>;
using FloatJet = Jet<std::complex<double>>;

namespace detail {

inline ExpKey key_add(const ExpKey& a, const ExpKey& b) {
    ExpKey r;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    return r;
}

template <class S>
void require_same_shape(const Jet<S>& a, const Jet<S>& b, const char* op) {
    if (!a.same_shape(b))
        throw LayoutMismatch(std::string(op) + ": layout or degree cap mismatch");
}

/// Terms grouped by total degree; the buckets borrow from the source map.
template <class S>
using DegreeBuckets = std::vector<std::vector<std::pair<const ExpKey*, const S*>>>;

template <class S>
DegreeBuckets<S> bucket_by_degree(const Jet<S>& a) {
    DegreeBuckets<S> buckets(static_cast<std::size_t>(a.degree_cap()) + 1);
    const int slots = a.layout().total_slots();
    for (const auto& [k, c] : a.terms())
        buckets[static_cast<std::size_t>(total_degree(k, slots))].emplace_back(&k, &c);
    return buckets;
}

} // namespace detail

template <class S>
Jet<S> operator+(const Jet<S>& a, const Jet<S>& b) {
    detail::require_same_shape(a, b, "add");
    Jet<S> r = a;
    for (const auto& [k, c] : b.terms()) r.add_term(k, c);
    return r;
}

template <class S>
Jet<S> operator-(const Jet<S>& a) {
    Jet<S> r(a.layout(), a.degree_cap());
    for (const auto& [k, c] : a.terms()) r.add_term(k, -c);
    return r;
}

template <class S>
Jet<S> operator-(const Jet<S>& a, const Jet<S>& b) {
    detail::require_same_shape(a, b, "subtract");
    Jet<S> r = a;
    for (const auto& [k, c] : b.terms()) r.add_term(k, -c);
    return r;
}

template <class S>
Jet<S> operator*(const Jet<S>& a, const S& s) {
    Jet<S> r = a;
    r.scale_in_place(s);
    return r;
}

template <class S>
Jet<S> operator*(const S& s, const Jet<S>& a) {
    return a * s;
}

template <class S>
Jet<S> operator+(const Jet<S>& a, const S& s) {
    Jet<S> r = a;
    r.add_term(zero_key(), s);
    return r;
}

template <class S>
Jet<S> operator-(const Jet<S>& a, const S& s) {
    return a + (-s);
}

template <class S>
bool operator==(const Jet<S>& a, const Jet<S>& b) {
    if (!a.same_shape(b) || a.term_count() != b.term_count()) return false;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!scalar_traits<S>::equal(ia->second, ib->second)) return false;
    }
    return true;
}

/// Cauchy product truncated at the shared total-degree cap.
template <class S>
Jet<S> operator*(const Jet<S>& a, const Jet<S>& b) {
    detail::require_same_shape(a, b, "multiply");
    Jet<S> r(a.layout(), a.degree_cap());
    if (a.is_zero() || b.is_zero()) return r;
    const auto ba = detail::bucket_by_degree(a);
    const auto bb = detail::bucket_by_degree(b);
    const int cap = a.degree_cap();
    for (int da = 0; da <= cap; ++da) {
        if (ba[static_cast<std::size_t>(da)].empty()) continue;
        for (int db = 0; db + da <= cap; ++db) {
            const auto& ta = ba[static_cast<std::size_t>(da)];
            const auto& tb = bb[static_cast<std::size_t>(db)];
            if (tb.empty()) continue;
            for (const auto& [ka, ca] : ta)
                for (const auto& [kb, cb] : tb)
                    r.add_term(detail::key_add(*ka, *kb), (*ca) * (*cb));
        }
    }
    return r;
}

/// Formal partial derivative in one slot; the degree cap drops by the order.
template <class S>
Jet<S> derive(const Jet<S>& a, int group, int slot, int order = 1) {
    if (order < 0) throw LayoutMismatch("derivative order must be non-negative");
    if (slot < 0 || slot >= a.layout().group(group).size)
        throw LayoutMismatch("derivative slot out of range");
    Jet<S> r(a.layout(), std::max(0, a.degree_cap() - order));
    const std::size_t pos = static_cast<std::size_t>(a.layout().offset(group) + slot);
    for (const auto& [k, c] : a.terms()) {
        if (k[pos] < order) continue;
        mpz_class falling(1);
        for (int t = 0; t < order; ++t) falling *= static_cast<long>(k[pos]) - t;
        ExpKey nk = k;
        nk[pos] = static_cast<std::uint8_t>(k[pos] - order);
        r.add_term(nk, c * Jet<S>::traits::from_rational(mpq_class(falling)));
    }
    return r;
}

/// New cap; truncation when lowering, lossless relabel when raising.
template <class S>
Jet<S> with_cap(const Jet<S>& a, int cap) {
    Jet<S> r(a.layout(), cap);
    for (const auto& [k, c] : a.terms()) r.add_term(k, c);
    return r;
}

/// Keeps only terms whose degree in `group` lies in [min_deg, max_deg].
template <class S>
Jet<S> select_group_degree(const Jet<S>& a, int group, int min_deg, int max_deg) {
    Jet<S> r(a.layout(), a.degree_cap());
    for (const auto& [k, c] : a.terms()) {
        const int d = group_degree(k, a.layout(), group);
        if (d >= min_deg && d <= max_deg) r.add_term(k, c);
    }
    return r;
}

/// Keeps only terms whose summed degree over `groups` is at most max_deg.
template <class S>
Jet<S> restrict_groups_total(const Jet<S>& a, const std::vector<int>& groups, int max_deg) {
    Jet<S> r(a.layout(), a.degree_cap());
    for (const auto& [k, c] : a.terms()) {
        int d = 0;
        for (int g : groups) d += group_degree(k, a.layout(), g);
        if (d <= max_deg) r.add_term(k, c);
    }
    return r;
}

namespace detail {

/// Homogeneous slices a[0..cap] of a jet, as standalone jets of the same shape.
template <class S>
std::vector<Jet<S>> graded_parts(const Jet<S>& a) {
    std::vector<Jet<S>> parts(static_cast<std::size_t>(a.degree_cap()) + 1,
                              Jet<S>(a.layout(), a.degree_cap()));
    const int slots = a.layout().total_slots();
    for (const auto& [k, c] : a.terms())
        parts[static_cast<std::size_t>(total_degree(k, slots))].add_term(k, c);
    return parts;
}

template <class S>
void accumulate_product(const Jet<S>& a, const Jet<S>& b, Jet<S>& out) {
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term(key_add(ka, kb), ca * cb);
}

} // namespace detail

/// Multiplicative inverse, computed order by order in the total-degree grading.
template <class S>
Jet<S> inverse(const Jet<S>& a) {
    const S a0 = a.constant_term();
    if (!Jet<S>::traits::keep(a0))
        throw ZeroConstantTerm("inverse of a jet with zero constant term");
    const auto parts = detail::graded_parts(a);
    const int cap = a.degree_cap();
    const S inv0 = Jet<S>::traits::one() / a0;
    std::vector<Jet<S>> x;
    x.reserve(static_cast<std::size_t>(cap) + 1);
    x.push_back(Jet<S>::constant(a.layout(), cap, inv0));
    for (int d = 1; d <= cap; ++d) {
        Jet<S> s(a.layout(), cap);
        for (int e = 1; e <= d; ++e)
            detail::accumulate_product(parts[static_cast<std::size_t>(e)],
                                       x[static_cast<std::size_t>(d - e)], s);
        s.scale_in_place(-inv0);
        x.push_back(std::move(s));
    }
    Jet<S> r(a.layout(), cap);
    for (const auto& part : x)
        for (const auto& [k, c] : part.terms()) r.add_term(k, c);
    return r;
}

/// log of a jet with constant term 1, via the graded Euler-operator recurrence.
template <class S>
Jet<S> log(const Jet<S>& a) {
    if (!Jet<S>::traits::equal(a.constant_term(), Jet<S>::traits::one()))
        throw BadConstantTerm("log needs constant term exactly 1");
    const auto parts = detail::graded_parts(a);
    const int cap = a.degree_cap();
    std::vector<Jet<S>> h;
    h.reserve(static_cast<std::size_t>(cap) + 1);
    h.push_back(Jet<S>(a.layout(), cap));
    // d*h_d = d*a_d - sum_{e<d} e*h_e*a_{d-e}
    for (int d = 1; d <= cap; ++d) {
        Jet<S> s(a.layout(), cap);
        for (int e = 1; e < d; ++e) {
            Jet<S> he = h[static_cast<std::size_t>(e)] * Jet<S>::traits::from_int(e);
            detail::accumulate_product(he, parts[static_cast<std::size_t>(d - e)], s);
        }
        Jet<S> hd = parts[static_cast<std::size_t>(d)] -
                    s * (Jet<S>::traits::one() / Jet<S>::traits::from_int(d));
        h.push_back(std::move(hd));
    }
    Jet<S> r(a.layout(), cap);
    for (const auto& part : h)
        for (const auto& [k, c] : part.terms()) r.add_term(k, c);
    return r;
}

/// exp of a jet with constant term 0, via the graded Euler-operator recurrence.
template <class S>
Jet<S> exp(const Jet<S>& a) {
    if (Jet<S>::traits::keep(a.constant_term()))
        throw BadConstantTerm("exp needs constant term exactly 0");
    const auto parts = detail::graded_parts(a);
    const int cap = a.degree_cap();
    std::vector<Jet<S>> g;
    g.reserve(static_cast<std::size_t>(cap) + 1);
    g.push_back(Jet<S>::constant(a.layout(), cap, Jet<S>::traits::one()));
    // d*g_d = sum_{e=1..d} e*a_e*g_{d-e}
    for (int d = 1; d <= cap; ++d) {
        Jet<S> s(a.layout(), cap);
        for (int e = 1; e <= d; ++e) {
            Jet<S> ae = parts[static_cast<std::size_t>(e)] * Jet<S>::traits::from_int(e);
            detail::accumulate_product(ae, g[static_cast<std::size_t>(d - e)], s);
        }
        g.push_back(s * (Jet<S>::traits::one() / Jet<S>::traits::from_int(d)));
    }
    Jet<S> r(a.layout(), cap);
    for (const auto& part : g)
        for (const auto& [k, c] : part.terms()) r.add_term(k, c);
    return r;
}

/// Determinant of a square matrix of jets by cofactor expansion.
template <class S>
Jet<S> determinant(const std::vector<std::vector<Jet<S>>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw NotSquare("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw NotSquare("determinant of a non-square matrix");
    if (n == 1) return m[0][0];
    Jet<S> r(m[0][0].layout(), m[0][0].degree_cap());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Jet<S>>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Jet<S>> row;
            row.reserve(n - 1);
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        Jet<S> c = m[0][j] * determinant(minor);
        r = (j % 2 == 0) ? r + c : r - c;
    }
    return r;
}

/// Substitutes x_src -> x_src + x_dst (groups of equal size in one layout);
/// exact binomial re-expansion, total degree preserved.
template <class S>
Jet<S> shift_group(const Jet<S>& a, int src_group, int dst_group) {
    const VarLayout& lay = a.layout();
    if (lay.group(src_group).size != lay.group(dst_group).size || src_group == dst_group)
        throw LayoutMismatch("shift needs two distinct groups of equal size");
    const int n = lay.group(src_group).size;
    const int src_off = lay.offset(src_group);
    const int dst_off = lay.offset(dst_group);
    Jet<S> r(lay, a.degree_cap());
    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    for (const auto& [k, c] : a.terms()) {
        // enumerate componentwise beta <= alpha over the source block
        std::fill(beta.begin(), beta.end(), 0);
        for (;;) {
            mpz_class w(1);
            ExpKey nk = k;
            for (int i = 0; i < n; ++i) {
                const int ai = k[static_cast<std::size_t>(src_off + i)];
                const int bi = beta[static_cast<std::size_t>(i)];
                w *= binomial_mpz(static_cast<unsigned long>(ai), static_cast<unsigned long>(bi));
                nk[static_cast<std::size_t>(src_off + i)] = static_cast<std::uint8_t>(ai - bi);
                nk[static_cast<std::size_t>(dst_off + i)] =
                    static_cast<std::uint8_t>(nk[static_cast<std::size_t>(dst_off + i)] + bi);
            }
            r.add_term(nk, c * Jet<S>::traits::from_rational(mpq_class(w)));
            int i = 0;
            while (i < n) {
                if (beta[static_cast<std::size_t>(i)] < k[static_cast<std::size_t>(src_off + i)]) {
                    ++beta[static_cast<std::size_t>(i)];
                    break;
                }
                beta[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == n) break;
        }
    }
    return r;
}

/// Sets the named conjugate-paired groups to zero and drops them from the
/// layout: only terms with zero degree in those groups survive.
template <class S>
Jet<S> eval_zero(const Jet<S>& a, const std::vector<int>& groups) {
    const VarLayout& lay = a.layout();
    for (int g : groups) {
        const int partner = lay.conjugate_group(g);
        if (std::find(groups.begin(), groups.end(), partner) == groups.end())
            throw LayoutMismatch("eval_zero needs conjugate-paired groups");
    }
    std::vector<VarGroup> kept;
    std::vector<int> kept_idx;
    for (int g = 0; g < lay.group_count(); ++g) {
        if (std::find(groups.begin(), groups.end(), g) == groups.end()) {
            kept.push_back(lay.group(g));
            kept_idx.push_back(g);
        }
    }
    if (kept.empty()) throw LayoutMismatch("eval_zero cannot drop every group");
    VarLayout target(kept);
    Jet<S> r(target, a.degree_cap());
    for (const auto& [k, c] : a.terms()) {
        bool survives = true;
        for (int g : groups)
            if (group_degree(k, lay, g) > 0) {
                survives = false;
                break;
            }
        if (!survives) continue;
        ExpKey nk = zero_key();
        for (std::size_t t = 0; t < kept_idx.size(); ++t) {
            const int g = kept_idx[t];
            for (int i = 0; i < lay.group(g).size; ++i)
                nk[static_cast<std::size_t>(target.offset(static_cast<int>(t)) + i)] =
                    k[static_cast<std::size_t>(lay.offset(g) + i)];
        }
        r.add_term(nk, c);
    }
    return r;
}

/// Complex conjugation: swaps each conjugate pair's exponents and conjugates
/// coefficients. An involution.
template <class S>
Jet<S> conjugate(const Jet<S>& a) {
    const VarLayout& lay = a.layout();
    Jet<S> r(lay, a.degree_cap());
    for (const auto& [k, c] : a.terms()) {
        ExpKey nk = zero_key();
        for (int g = 0; g < lay.group_count(); ++g) {
            const int p = lay.conjugate_group(g);
            for (int i = 0; i < lay.group(g).size; ++i)
                nk[static_cast<std::size_t>(lay.offset(p) + i)] =
                    k[static_cast<std::size_t>(lay.offset(g) + i)];
        }
        r.add_term(nk, Jet<S>::traits::conj(c));
    }
    return r;
}

/// True when the jet equals its own conjugate (real-valued semantics).
/// Exact mode compares bit-exactly; float mode within tol.
template <class S>
bool hermitian(const Jet<S>& a, double tol = 0.0) {
    const Jet<S> c = conjugate(a);
    if (scalar_traits<S>::exact || tol == 0.0) return a == c;
    for (const auto& [k, v] : a.terms())
        if (scalar_traits<S>::abs_value(v - c.coeff_key(k)) > tol) return false;
    for (const auto& [k, v] : c.terms())
        if (scalar_traits<S>::abs_value(v - a.coeff_key(k)) > tol) return false;
    return true;
}

/// Moves the jet onto a target layout, group i landing on group_map[i].
/// A pure relabel: exponents and coefficients are untouched.
template <class S>
Jet<S> reinterpret(const Jet<S>& a, const VarLayout& target, const std::vector<int>& group_map) {
    const VarLayout& lay = a.layout();
    if (static_cast<int>(group_map.size()) != lay.group_count())
        throw LayoutMismatch("group map does not cover the source layout");
    for (int g = 0; g < lay.group_count(); ++g) {
        if (lay.group(g).size != target.group(group_map[static_cast<std::size_t>(g)]).size)
            throw LayoutMismatch("group map pairs groups of different sizes");
        for (int h = 0; h < g; ++h)
            if (group_map[static_cast<std::size_t>(g)] == group_map[static_cast<std::size_t>(h)])
                throw LayoutMismatch("group map sends two groups to the same target");
    }
    Jet<S> r(target, a.degree_cap());
    for (const auto& [k, c] : a.terms()) {
        ExpKey nk = zero_key();
        for (int g = 0; g < lay.group_count(); ++g) {
            const int tg = group_map[static_cast<std::size_t>(g)];
            for (int i = 0; i < lay.group(g).size; ++i)
                nk[static_cast<std::size_t>(target.offset(tg) + i)] =
                    k[static_cast<std::size_t>(lay.offset(g) + i)];
        }
        r.add_term(nk, c);
    }
    return r;
}

/// Relabel by matching group names between layouts.
template <class S>
Jet<S> embed_by_name(const Jet<S>& a, const VarLayout& target) {
    std::vector<int> map;
    map.reserve(static_cast<std::size_t>(a.layout().group_count()));
    for (int g = 0; g < a.layout().group_count(); ++g)
        map.push_back(target.require(a.layout().group(g).name));
    return reinterpret(a, target, map);
}

/// Evaluates the jet as a truncated polynomial at numeric slot values.
template <class S>
std::complex<double> eval_point(const Jet<S>& a, std::span<const std::complex<double>> values) {
    const int slots = a.layout().total_slots();
    if (static_cast<int>(values.size()) != slots)
        throw LayoutMismatch("evaluation point does not match the layout slot count");
    std::vector<std::vector<std::complex<double>>> powers(static_cast<std::size_t>(slots));
    for (int s = 0; s < slots; ++s) {
        auto& p = powers[static_cast<std::size_t>(s)];
        p.resize(static_cast<std::size_t>(a.degree_cap()) + 1);
        p[0] = 1.0;
        for (int e = 1; e <= a.degree_cap(); ++e)
            p[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(e - 1)] * values[static_cast<std::size_t>(s)];
    }
    std::complex<double> acc = 0.0;
    for (const auto& [k, c] : a.terms()) {
        std::complex<double> t = scalar_traits<S>::to_complex(c);
        for (int s = 0; s < slots; ++s)
            if (k[static_cast<std::size_t>(s)] != 0)
                t *= powers[static_cast<std::size_t>(s)][k[static_cast<std::size_t>(s)]];
        acc += t;
    }
    return acc;
}

inline FloatJet to_float(const ExactJet& a) {
    FloatJet r(a.layout(), a.degree_cap());
    for (const auto& [k, c] : a.terms()) r.add_term(k, c.to_complex());
    return r;
}

/// Deterministic sum of same-shape jets in the given order. Exact mode folds
/// plainly; float mode uses per-coefficient compensated accumulation.
template <class S>
Jet<S> ordered_sum(const std::vector<Jet<S>>& items) {
    if (items.empty()) throw LayoutMismatch("ordered_sum of an empty list");
    if constexpr (scalar_traits<S>::exact) {
        Jet<S> acc = items.front();
        for (std::size_t i = 1; i < items.size(); ++i) acc = acc + items[i];
        return acc;
    } else {
        Jet<S> r(items.front().layout(), items.front().degree_cap());
        std::map<ExpKey, std::pair<S, S>> acc; // value, compensation
        for (const auto& jt : items) {
            detail::require_same_shape(items.front(), jt, "ordered_sum");
            for (const auto& [k, c] : jt.terms()) {
                auto& [sum, comp] = acc[k];
                const S y = c - comp;
                const S t = sum + y;
                comp = (t - sum) - y;
                sum = t;
            }
        }
        for (const auto& [k, sc] : acc) r.add_term(k, sc.first);
        return r;
    }
}

} // namespace bergman
