#include <catch2/catch_amalgamated.hpp>

#include "bergman/jet.hpp"

using namespace bergman;

namespace {

GaussianRational q(long n, long d = 1) { return GaussianRational::ratio(n, d); }

// n=1 point-layout jet helpers: exponents are (z, zbar)
ExactJet zjet(int cap, std::vector<std::pair<std::vector<int>, GaussianRational>> terms) {
    return ExactJet::from_terms(point_layout(1), cap, terms);
}

} // namespace

TEST_CASE("addition cancels and merges like terms") {
    const auto one_plus_z = zjet(3, {{{0, 0}, q(1)}, {{1, 0}, q(1)}});
    const auto one_minus_z = zjet(3, {{{0, 0}, q(1)}, {{1, 0}, q(-1)}});
    const auto sum = one_plus_z + one_minus_z;
    CHECK(sum == zjet(3, {{{0, 0}, q(2)}}));
    CHECK(sum.term_count() == 1); // the z terms cancel and are purged

    const auto zzb = zjet(3, {{{1, 1}, q(1)}});
    CHECK(zzb + zzb == zjet(3, {{{1, 1}, q(2)}}));

    const auto zero = ExactJet(point_layout(1), 3);
    CHECK(one_plus_z + zero == one_plus_z);
}

TEST_CASE("addition rejects mismatched shapes") {
    const auto a = zjet(3, {{{0, 0}, q(1)}});
    const auto b = ExactJet(point_layout(2), 3);
    const auto c = ExactJet(point_layout(1), 4);
    CHECK_THROWS_AS(a + b, LayoutMismatch);
    CHECK_THROWS_AS(a + c, LayoutMismatch);
}

TEST_CASE("multiplication truncates at the cap") {
    const auto one_plus_z = zjet(3, {{{0, 0}, q(1)}, {{1, 0}, q(1)}});
    const auto one_minus_z = zjet(3, {{{0, 0}, q(1)}, {{1, 0}, q(-1)}});
    CHECK(one_plus_z * one_minus_z == zjet(3, {{{0, 0}, q(1)}, {{2, 0}, q(-1)}}));

    // z^3 * zbar^3 with cap 4 truncates to zero
    const auto z3 = zjet(4, {{{3, 0}, q(1)}});
    const auto zb3 = zjet(4, {{{0, 3}, q(1)}});
    CHECK((z3 * zb3).is_zero());

    // (1+z+z^2)^2 at cap 2: direct convolution gives 1 + 2z + 3z^2
    const auto p = zjet(2, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{2, 0}, q(1)}});
    CHECK(p * p == zjet(2, {{{0, 0}, q(1)}, {{1, 0}, q(2)}, {{2, 0}, q(3)}}));
}

TEST_CASE("derivatives") {
    // d/dz (z^2 zbar) = 2 z zbar
    const auto a = zjet(4, {{{2, 1}, q(1)}});
    CHECK(derive(a, 0, 0) == zjet(3, {{{1, 1}, q(2)}}));
    // d/dz zbar = 0
    CHECK(derive(zjet(4, {{{0, 1}, q(1)}}), 0, 0).is_zero());
    // d/dz d/dzbar (z zbar)^2 = 4 z zbar
    const auto b = zjet(4, {{{2, 2}, q(1)}});
    CHECK(derive(derive(b, 0, 0), 1, 0) == zjet(2, {{{1, 1}, q(4)}}));
    // cap drops by the order
    CHECK(derive(a, 0, 0, 2).degree_cap() == 2);
}

TEST_CASE("inverse") {
    // inv(1+z) = 1 - z + z^2 - z^3
    const auto a = zjet(3, {{{0, 0}, q(1)}, {{1, 0}, q(1)}});
    CHECK(inverse(a) ==
          zjet(3, {{{0, 0}, q(1)}, {{1, 0}, q(-1)}, {{2, 0}, q(1)}, {{3, 0}, q(-1)}}));

    CHECK(inverse(zjet(2, {{{0, 0}, q(2)}})) == zjet(2, {{{0, 0}, q(1, 2)}}));

    // inv(1 + z zbar) at cap 4 = 1 - z zbar + z^2 zbar^2
    const auto b = zjet(4, {{{0, 0}, q(1)}, {{1, 1}, q(1)}});
    CHECK(inverse(b) == zjet(4, {{{0, 0}, q(1)}, {{1, 1}, q(-1)}, {{2, 2}, q(1)}}));

    CHECK_THROWS_AS(inverse(zjet(3, {{{1, 0}, q(1)}})), ZeroConstantTerm);
}

TEST_CASE("log and exp") {
    // log(1 + z zbar) at cap 4 = z zbar - (z zbar)^2 / 2
    const auto a = zjet(4, {{{0, 0}, q(1)}, {{1, 1}, q(1)}});
    CHECK(log(a) == zjet(4, {{{1, 1}, q(1)}, {{2, 2}, q(-1, 2)}}));

    // exp(0) = 1
    CHECK(exp(ExactJet(point_layout(1), 4)) == zjet(4, {{{0, 0}, q(1)}}));

    // exp(log(1+z)) recovers 1+z up to the cap
    const auto one_plus_z = zjet(5, {{{0, 0}, q(1)}, {{1, 0}, q(1)}});
    CHECK(exp(log(one_plus_z)) == one_plus_z);

    CHECK_THROWS_AS(log(zjet(3, {{{0, 0}, q(2)}})), BadConstantTerm);
    CHECK_THROWS_AS(exp(zjet(3, {{{0, 0}, q(1)}})), BadConstantTerm);
}

TEST_CASE("determinant") {
    const auto lay = point_layout(1);
    const auto one = ExactJet::constant(lay, 4, q(1));
    const auto zero = ExactJet(lay, 4);
    CHECK(determinant<GaussianRational>({{one}}) == one);
    CHECK(determinant<GaussianRational>({{one, zero}, {zero, one}}) == one);

    const auto d = zjet(4, {{{0, 0}, q(1)}, {{1, 1}, q(1)}}); // 1 + z zbar
    CHECK(determinant<GaussianRational>({{d, zero}, {zero, one}}) == d);

    CHECK_THROWS_AS(determinant<GaussianRational>({{one, zero}}), NotSquare);
}

TEST_CASE("taylor shift") {
    // shift z -> w+u on z^2 gives w^2 + 2wu + u^2 (offset layout, n=1)
    const auto lay = offset_layout(1);
    const int W = 0, WB = 1, U = 2, UB = 3;
    const auto w2 = ExactJet::from_terms(lay, 4, {{{2, 0, 0, 0}, q(1)}});
    const auto shifted = shift_group(w2, W, U);
    CHECK(shifted == ExactJet::from_terms(lay, 4,
                                          {{{2, 0, 0, 0}, q(1)},
                                           {{1, 0, 1, 0}, q(2)},
                                           {{0, 0, 2, 0}, q(1)}}));

    // substituting u = ubar = 0 recovers the original
    const auto back = eval_zero(shifted, {U, UB});
    CHECK(back == ExactJet::from_terms(base_layout(1), 4, {{{2, 0}, q(1)}}));

    // shift z zbar on both groups: ww̄ + wū + uw̄ + uū
    const auto wwb = ExactJet::from_terms(lay, 4, {{{1, 1, 0, 0}, q(1)}});
    const auto both = shift_group(shift_group(wwb, W, U), WB, UB);
    CHECK(both == ExactJet::from_terms(lay, 4,
                                       {{{1, 1, 0, 0}, q(1)},
                                        {{1, 0, 0, 1}, q(1)},
                                        {{0, 1, 1, 0}, q(1)},
                                        {{0, 0, 1, 1}, q(1)}}));
}

TEST_CASE("eval_zero") {
    const auto lay = offset_layout(1);
    const int U = 2, UB = 3;
    // eval u=ubar=0 on 1 + u + w*ubar leaves 1
    const auto a = ExactJet::from_terms(
        lay, 3, {{{0, 0, 0, 0}, q(1)}, {{0, 0, 1, 0}, q(1)}, {{1, 0, 0, 1}, q(1)}});
    CHECK(eval_zero(a, {U, UB}) == ExactJet::from_terms(base_layout(1), 3, {{{0, 0}, q(1)}}));

    // a jet with no u-dependence comes back unchanged (up to layout)
    const auto b = ExactJet::from_terms(lay, 3, {{{1, 1, 0, 0}, q(5)}});
    CHECK(eval_zero(b, {U, UB}) == ExactJet::from_terms(base_layout(1), 3, {{{1, 1}, q(5)}}));

    // dropping only one half of a pair is rejected
    CHECK_THROWS_AS(eval_zero(a, {U}), LayoutMismatch);
}

TEST_CASE("conjugation") {
    // conj(i z) = -i zbar
    const auto iz = zjet(3, {{{1, 0}, GaussianRational::i()}});
    CHECK(conjugate(iz) == zjet(3, {{{0, 1}, -GaussianRational::i()}}));

    // conj of a Hermitian jet is itself
    const auto h = zjet(3, {{{1, 1}, q(2)}, {{0, 0}, q(1)}});
    CHECK(conjugate(h) == h);
    CHECK(hermitian(h));

    // conj(z^2 zbar) = z zbar^2
    CHECK(conjugate(zjet(4, {{{2, 1}, q(1)}})) == zjet(4, {{{1, 2}, q(1)}}));

    // involution on a non-Hermitian jet
    const auto nh = zjet(4, {{{2, 0}, GaussianRational(mpq_class(1), mpq_class(3))}});
    CHECK(conjugate(conjugate(nh)) == nh);
    CHECK_FALSE(hermitian(nh));
}

TEST_CASE("reinterpret and embed") {
    const auto phi = zjet(4, {{{1, 1}, q(1)}});
    const auto on_base = reinterpret(phi, base_layout(1), {0, 1});
    CHECK(on_base.coeff({1, 1}) == q(1));
    const auto on_offset = embed_by_name(on_base, offset_layout(1));
    CHECK(on_offset.coeff({1, 1, 0, 0}) == q(1));
    CHECK_THROWS_AS(embed_by_name(phi, offset_layout(1)), LayoutMismatch);
}

TEST_CASE("group degree filters") {
    const auto lay = offset_layout(1);
    const auto a = ExactJet::from_terms(lay, 6,
                                        {{{0, 0, 1, 1}, q(1)},
                                         {{1, 0, 2, 1}, q(2)},
                                         {{0, 0, 0, 2}, q(3)},
                                         {{2, 2, 0, 0}, q(4)}});
    const auto mixed = select_group_degree(select_group_degree(a, 2, 1, 127), 3, 1, 127);
    CHECK(mixed.term_count() == 2);
    const auto low_w = restrict_groups_total(a, {0, 1}, 1);
    CHECK(low_w.coeff({2, 2, 0, 0}).is_zero());
    CHECK(low_w.coeff({1, 0, 2, 1}) == q(2));
}

TEST_CASE("numeric evaluation") {
    // 1 + 2 z zbar at z = 1/2 evaluates to 3/2
    const auto a = zjet(4, {{{0, 0}, q(1)}, {{1, 1}, q(2)}});
    const std::complex<double> z{0.5, 0.0};
    const auto v = eval_point(a, std::vector<std::complex<double>>{z, std::conj(z)});
    CHECK(std::abs(v - std::complex<double>(1.5, 0.0)) < 1e-15);
}

TEST_CASE("float jets prune below epsilon and keep the rest") {
    FloatJet a(point_layout(1), 3);
    a.add_term(zero_key(), {1e-320, 0.0}); // below default epsilon: dropped
    CHECK(a.is_zero());
    a.add_term(zero_key(), {1e-200, 0.0});
    CHECK(a.term_count() == 1);
}

TEST_CASE("ordered_sum matches plain fold in exact mode") {
    const auto a = zjet(3, {{{0, 0}, q(1, 3)}});
    const auto b = zjet(3, {{{0, 0}, q(1, 6)}, {{1, 1}, q(2)}});
    const auto c = zjet(3, {{{1, 1}, q(-2)}});
    CHECK(ordered_sum<GaussianRational>({a, b, c}) == zjet(3, {{{0, 0}, q(1, 2)}}));
}
