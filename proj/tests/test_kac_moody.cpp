#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>

#include "twinkit/errors.hpp"
#include "twinkit/km_algebra.hpp"
#include "twinkit/roots.hpp"

using namespace twinkit;

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Mat3 unit(int i, int j) {
    Mat3 m{};
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    return m;
}

Mat3 commutator(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const auto iu = static_cast<std::size_t>(i), ju = static_cast<std::size_t>(j), ku = static_cast<std::size_t>(k);
                out[iu][ju] += a[iu][ku] * b[ku][ju] - b[iu][ku] * a[ku][ju];
            }
    return out;
}

// Nested bracket of generators, read right to left: {g1, g2, g3} = [g1, [g2, g3]].
struct Word {
    std::vector<int> letters; // 0,1 = e_i ; 2,3 = f_i
};

QVector alg_of(const KmAlgebra& alg, const Word& w) {
    auto gen = [&](int l) { return l < 2 ? alg.e(l) : alg.f(l - 2); };
    QVector x = gen(w.letters.back());
    for (int k = static_cast<int>(w.letters.size()) - 2; k >= 0; --k) x = alg.bracket(gen(w.letters[static_cast<std::size_t>(k)]), x);
    return x;
}

Mat3 sl3_of(const Word& w) {
    const Mat3 gens[] = {unit(0, 1), unit(1, 2), unit(1, 0), unit(2, 1)};
    Mat3 x = gens[w.letters.back()];
    for (int k = static_cast<int>(w.letters.size()) - 2; k >= 0; --k) x = commutator(gens[w.letters[static_cast<std::size_t>(k)]], x);
    return x;
}

std::vector<Word> words_upto(int depth) {
    std::vector<Word> out;
    std::vector<Word> layer{{{0}}, {{1}}, {{2}}, {{3}}};
    for (int d = 1; d <= depth; ++d) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int g = 0; g < 4; ++g) {
                Word v = w;
                v.letters.insert(v.letters.begin(), g);
                next.push_back(v);
            }
        layer = next;
    }
    return out;
}

// Solve for the linear map L with L(alg vector) = matrix on the sampled words, by elimination.
struct LinearFit {
    std::vector<QVector> rows;   // reduced alg vectors
    std::vector<Mat3> images;
    std::vector<int> pivots;

    bool add(QVector v, Mat3 m) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto p = static_cast<std::size_t>(pivots[r]);
            if (v[p] == 0) continue;
            const Rational c = v[p] / rows[r][p];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * rows[r][k];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= c * images[r][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        int pivot = -1;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) {
                pivot = static_cast<int>(k);
                break;
            }
        if (pivot < 0) {
            // Dependent vector: consistency requires the reduced image to vanish.
            for (const auto& row : m)
                for (const auto& x : row)
                    if (x != 0) return false;
            return true;
        }
        rows.push_back(v);
        images.push_back(m);
        pivots.push_back(pivot);
        return true;
    }
};

QVector neg(QVector v) {
    for (auto& x : v) x = -x;
    return v;
}

} // namespace

TEST_CASE("graded dimensions") {
    CHECK(KmAlgebra(gcm_a(1), 3).dimension() == 3);
    KmAlgebra a2(gcm_a(2), 3);
    CHECK(a2.dimension() == 8);
    CHECK(a2.positive_dims() == std::vector<int>{2, 1, 0});
    CHECK(KmAlgebra(gcm_b2(), 4).dimension() == 10);
    CHECK(KmAlgebra(gcm_g2(), 6).dimension() == 14);
    KmAlgebra aff(gcm_affine_a1(), 4);
    CHECK(aff.positive_dims() == std::vector<int>{2, 1, 2, 1});
    CHECK_FALSE(aff.window_closed());
    CHECK(a2.window_closed());
}

TEST_CASE("A_2 is isomorphic to sl_3 via e_i, f_i -> elementary matrices") {
    KmAlgebra alg(gcm_a(2), 3);
    LinearFit fit;
    for (const auto& w : words_upto(4)) CHECK(fit.add(alg_of(alg, w), sl3_of(w)));
    CHECK(fit.rows.size() == 8);
}

TEST_CASE("real root spaces and Serre relations") {
    for (const auto& [a, h] : std::vector<std::pair<Gcm, int>>{{gcm_a(2), 3}, {gcm_b2(), 4}, {gcm_g2(), 6}, {gcm_affine_a1(), 5}}) {
        KmAlgebra alg(a, h);
        for (const auto& r : positive_real_roots(a, h).roots) CHECK(alg.component_dim(r.coords) == 1);
        for (int i = 0; i < a.rank(); ++i)
            for (int j = 0; j < a.rank(); ++j) {
                if (i == j) continue;
                QVector x = alg.e(j);
                for (int k = 0; k < 1 - a(i, j); ++k) x = alg.bracket(alg.e(i), x);
                CHECK(x == alg.zero());
            }
    }
}

TEST_CASE("structural checks pass on the rank-2 windows") {
    for (const auto& [a, h] : std::vector<std::pair<Gcm, int>>{{gcm_a(2), 3}, {gcm_b2(), 4}, {gcm_g2(), 6}, {gcm_affine_a1(), 4}}) {
        KmAlgebra alg(a, h);
        for (const auto& r : algebra_checks(alg)) {
            INFO(r.name << " " << r.detail);
            CHECK(r.passed);
        }
    }
    // Finite windows are closed, so Jacobi is checked on every triple.
    for (const auto& r : algebra_checks(KmAlgebra(gcm_g2(), 6)))
        if (r.name == "jacobi") CHECK(r.detail.empty());
}

TEST_CASE("A_1 adjoint unipotent matrices") {
    KmAlgebra alg(gcm_a(1), 2);
    const Carrier c = window_carrier(alg);
    std::map<std::string, int> pos;
    for (int k = 0; k < alg.dimension(); ++k) pos[alg.basis_label(k)] = k;
    const int e = pos.at("e(1)"), h = pos.at("h1"), f = pos.at("f(1)");
    CHECK(alg.basis_vector(e) == alg.e(0));
    CHECK(alg.basis_vector(f) == alg.f(0));
    const auto x = ad_unipotent(alg, 0, true, Rational(1), c).matrix;
    // e -> e, h -> h - 2e, f -> f + h - e
    CHECK(x(e, e) == 1);
    CHECK(x(h, e) == 0);
    CHECK(x(f, e) == 0);
    CHECK(x(e, h) == -2);
    CHECK(x(h, h) == 1);
    CHECK(x(e, f) == -1);
    CHECK(x(h, f) == 1);
    CHECK(x(f, f) == 1);
    CHECK(ad_unipotent(alg, 0, true, Rational(0), c).matrix == QMatrix::identity(3));

    TorusElement t{TorusFlavour::Adjoint, {Rational(5)}};
    const auto d = torus_ad(alg, t, c).matrix;
    CHECK(d(e, e) == 5);
    CHECK(d(f, f) == Rational(1, 5));
    CHECK(d(h, h) == 1);
    CHECK(torus_ad(alg, {TorusFlavour::SimplyConnected, {Rational(1)}}, c).matrix == QMatrix::identity(3));
    // Simply connected: h_1(u) acts on e_1 by u^{a_11} = u^2.
    CHECK(character(alg, {TorusFlavour::SimplyConnected, {Rational(3)}}, {1}) == 9);
}

TEST_CASE("one-parameter law and torus conjugation on certified carriers") {
    for (const auto& [a, h] : std::vector<std::pair<Gcm, int>>{{gcm_a(2), 3}, {gcm_b2(), 4}}) {
        KmAlgebra alg(a, h);
        for (const auto& r : carrier_checks(alg, window_carrier(alg))) CHECK(r.passed);
    }
    KmAlgebra aff(gcm_affine_a1(), 4);
    const Carrier sub = invariant_subspace(aff, aff.e(0), {0});
    CHECK(sub.dimension() == 3);
    for (const auto& r : carrier_checks(aff, sub)) {
        CHECK(r.passed);
        CHECK_FALSE(r.skipped);
    }
    CHECK_THROWS_AS(ad_unipotent(aff, 1, true, Rational(1), sub), NotInvariant);
    CHECK(window_carrier(aff).certified.empty());
}

TEST_CASE("invariant subspaces") {
    KmAlgebra a1(gcm_a(1), 2), a2(gcm_a(2), 3);
    CHECK(invariant_subspace(a2, a2.h(0), {}).dimension() == 1);
    CHECK(invariant_subspace(a1, a1.e(0), {0}).dimension() == 3);
    CHECK(invariant_subspace(a2, a2.e(0), {0, 1}).dimension() == 8);
    CHECK(invariant_subspace(a2, a2.e(0), {0}).dimension() == 3);
    KmAlgebra aff(gcm_affine_a1(), 4);
    CHECK_THROWS_AS(invariant_subspace(aff, aff.e(0), {0, 1}), WindowExceeded);
}

TEST_CASE("divided powers are integral up to the nilpotency degree") {
    KmAlgebra g2(gcm_g2(), 6);
    for (int i = 0; i < 2; ++i)
        for (bool positive : {true, false}) {
            int k = 1;
            for (; k < 10; ++k) {
                const auto m = g2.divided_power(i, positive, k);
                if (m.is_zero()) break;
                CHECK(m.integral());
            }
            CHECK(k <= 4);
        }
    // (ad e_i)^(-a_ij) e_j is the last nonzero power.
    for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        QVector x = g2.e(j);
        for (int k = 0; k < -g2.cartan()(i, j); ++k) x = g2.bracket(g2.e(i), x);
        CHECK(x != g2.zero());
        CHECK(g2.nilpotency_degree(i, true, g2.e(j)) == 1 - g2.cartan()(i, j));
    }
}

TEST_CASE("brackets outside the window") {
    KmAlgebra aff(gcm_affine_a1(), 2);
    const QVector x = aff.bracket(aff.e(0), aff.e(1));
    CHECK(x != aff.zero());
    CHECK_THROWS_AS(aff.bracket(aff.e(0), x), WindowExceeded);
    CHECK(aff.chevalley(aff.e(0)) == neg(aff.f(0)));
}

TEST_CASE("real roots and their enumeration") {
    auto coords = [](const RealRootTable& t) {
        std::vector<RootVector> out;
        for (const auto& r : t.roots) out.push_back(r.coords);
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(coords(positive_real_roots(gcm_a(2), 1)) == std::vector<RootVector>{{0, 1}, {1, 0}});
    CHECK(coords(positive_real_roots(gcm_a(2), 3)) == std::vector<RootVector>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(coords(positive_real_roots(gcm_affine_a1(), 3)) == std::vector<RootVector>{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    CHECK(positive_real_roots(gcm_g2(), 10).roots.size() == 6);
    CHECK_THROWS_AS(positive_real_roots(gcm_a(2), 0), IndexOutOfRange);

    auto a2 = positive_real_roots(gcm_a(2), 3);
    const auto order = root_enumeration(a2);
    std::vector<RootVector> seq;
    for (int k : order) seq.push_back(a2.roots[static_cast<std::size_t>(k)].coords);
    CHECK(seq == std::vector<RootVector>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(enumeration_compatible(a2, order));

    auto aff = positive_real_roots(gcm_affine_a1(), 5);
    const auto aff_order = root_enumeration(aff);
    CHECK(enumeration_compatible(aff, aff_order));
    for (std::size_t k = 0; k + 1 < aff_order.size(); ++k)
        CHECK(aff.roots[static_cast<std::size_t>(aff_order[k])].height <= aff.roots[static_cast<std::size_t>(aff_order[k + 1])].height);
    CHECK(aff.roots[static_cast<std::size_t>(aff_order[0])].simple >= 0);
    CHECK(aff.roots[static_cast<std::size_t>(aff_order[1])].simple >= 0);

    // A reversed order breaks the depth condition.
    std::vector<int> reversed(order.rbegin(), order.rend());
    CHECK_FALSE(enumeration_compatible(a2, reversed));
}

TEST_CASE("rank-2 Chevalley groups over F_2 and F_3") {
    for (const auto& a : {gcm_a(2), gcm_b2(), gcm_g2()})
        for (const auto& r : rank2_rgd_check(a, 2)) {
            INFO(r.name << " " << r.detail);
            CHECK(r.passed);
        }
    for (const auto& r : rank2_rgd_check(gcm_a(2), 3)) CHECK(r.passed);
    CHECK_THROWS_AS(rank2_rgd_check(gcm_affine_a1(), 2), NotRankTwoFinite);
    CHECK_THROWS_AS(rank2_rgd_check(gcm_a(3), 2), NotRankTwoFinite);
}

TEST_CASE("window limits") {
    AlgebraLimits tight;
    tight.max_dimension = 5;
    CHECK_THROWS_AS(KmAlgebra(gcm_a(2), 3, tight), WindowTooLarge);
    CHECK_THROWS(KmAlgebra(gcm_a(2), 0));
}
