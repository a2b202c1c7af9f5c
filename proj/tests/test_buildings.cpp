#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "twinkit/building.hpp"
#include "twinkit/building_checks.hpp"
#include "twinkit/building_io.hpp"
#include "twinkit/errors.hpp"
#include "twinkit/sl_group.hpp"
#include "twinkit/thin_building.hpp"

using namespace twinkit;

namespace {

const TwinBuilding& sl3_2() {
    static const TwinBuilding b = TwinBuilding::tabulate(SlTwinBuilding(3, 2));
    return b;
}

const TwinBuilding& sl3_3() {
    static const TwinBuilding b = TwinBuilding::tabulate(SlTwinBuilding(3, 3));
    return b;
}

TwinBuilding thin(const Gcm& a, std::optional<int> cap = std::nullopt) {
    return TwinBuilding::tabulate(ThinTwinBuilding(CoxeterSystem(a), cap));
}

long long power(long long q, int k) {
    long long r = 1;
    while (k-- > 0) r *= q;
    return r;
}

// S_3 as permutations of {0,1,2}; s_k swaps k and k+1, words act left to right.
using Perm = std::array<int, 3>;

Perm perm_of(const std::vector<int>& word) {
    Perm p{0, 1, 2};
    for (int s : word) std::swap(p[static_cast<std::size_t>(s)], p[static_cast<std::size_t>(s + 1)]);
    return p;
}

Perm perm_inverse(const Perm& p) {
    Perm q{};
    for (int i = 0; i < 3; ++i) q[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
    return q;
}

Perm perm_mul(const Perm& x, const Perm& y) {
    // composition matching perm_of(a ++ b) = perm_mul(perm_of(a), perm_of(b))
    Perm r{};
    for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(y[static_cast<std::size_t>(i)])];
    return r;
}

std::vector<int> w(std::initializer_list<int> one_based) {
    std::vector<int> out;
    for (int s : one_based) out.push_back(s - 1);
    return out;
}

} // namespace

TEST_CASE("thin A_2: distances are x^-1 y in a permutation model") {
    const auto b = thin(gcm_a(2));
    ThinTwinBuilding model(CoxeterSystem(gcm_a(2)));
    REQUIRE(b.chamber_count(Sign::Plus) == 6);
    REQUIRE(b.chamber_count(Sign::Minus) == 6);
    CHECK(perm_mul(perm_of({0}), perm_of({1})) == perm_of({0, 1}));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            const Perm expect = perm_mul(perm_inverse(perm_of(model.element(x).word)), perm_of(model.element(y).word));
            CHECK(perm_of(b.distance(Sign::Plus, x, y).word) == expect);
            CHECK(perm_of(b.distance(Sign::Minus, x, y).word) == expect);
            CHECK(perm_of(b.codistance({Sign::Plus, x}, {Sign::Minus, y}).word) == expect);
        }
    CHECK(b.is_thin());
    CHECK_FALSE(b.is_thick());
    CHECK(check_axioms(b).passed());
}

TEST_CASE("axioms hold on thin and matrix models") {
    for (const auto& b : {thin(gcm_a(2)), thin(gcm_b2()), thin(gcm_g2()), thin(gcm_affine_a1(), 5), sl3_2(),
                          TwinBuilding::tabulate(SlTwinBuilding(2, 5))}) {
        const auto rep = check_axioms(b);
        INFO(b.name());
        CHECK(rep.checks.size() == 6);
        CHECK(rep.passed());
        CHECK(check_projections(b).passed);
    }
    CHECK_THROWS_AS(check_axioms(thin(gcm_affine_a1(), 0)), RegionTooSmall);
}

TEST_CASE("a corrupted codistance entry breaks Tw1") {
    const auto& b = sl3_2();
    // Find an opposite pair and make it adjacent-opposite instead.
    const Chamber x{Sign::Plus, 0};
    int y = 0;
    while (!b.codistance(x, {Sign::Minus, y}).is_identity()) ++y;
    const auto bad = b.with_codistance(x, {Sign::Minus, y}, b.type().generator(0));
    const auto rep = check_axioms(bad);
    CHECK_FALSE(rep.passed());
    bool tw1_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "Tw1" && !c.passed) tw1_failed = !c.witness.is_null();
    CHECK(tw1_failed);
}

TEST_CASE("projections and co-projections against brute force") {
    const auto& b = sl3_2();
    const auto& W = b.type();
    for (Sign sg : {Sign::Plus, Sign::Minus})
        for (int c = 0; c < b.chamber_count(sg); c += 3)
            for (int s = 0; s < 2; ++s) {
                const auto r = panel_residue(b, {sg, c}, s);
                CHECK(r.chambers.size() == 3);
                for (int x = 0; x < b.chamber_count(sg); ++x) {
                    // Nearest chamber: unique one of minimal distance length.
                    int best = -1, best_len = 99, ties = 0;
                    for (int y : r.chambers) {
                        const int l = b.distance(sg, x, y).length();
                        if (l < best_len) best = y, best_len = l, ties = 1;
                        else if (l == best_len) ++ties;
                    }
                    CHECK(ties == 1);
                    CHECK(proj(b, r, {sg, x}) == Chamber{sg, best});
                }
                const Sign og = opposite(sg);
                for (int x = 0; x < b.chamber_count(og); ++x) {
                    int best = -1, best_len = -1, ties = 0;
                    for (int y : r.chambers) {
                        const int l = b.codistance({og, x}, {sg, y}).length();
                        if (l > best_len) best = y, best_len = l, ties = 1;
                        else if (l == best_len) ++ties;
                    }
                    CHECK(ties == 1);
                    const auto cp = coproj(b, r, {og, x});
                    CHECK(cp == Chamber{sg, best});
                    CHECK(coproj_panel(b, {sg, c}, s, {og, x}) == cp);
                    // Every other chamber of the panel sits one step closer.
                    for (int y : r.chambers)
                        if (y != best) CHECK(W.mul_right(b.codistance({og, x}, {sg, y}), s) == b.codistance({og, x}, cp));
                }
            }
}

TEST_CASE("twin apartments and retractions") {
    const auto& b = sl3_2();
    const Chamber c{Sign::Plus, 0};
    int d = 0;
    while (!b.codistance(c, {Sign::Minus, d}).is_identity()) ++d;
    const auto apt = twin_apartment(b, c, {Sign::Minus, d});
    CHECK(apt.plus.size() == 6);
    CHECK(apt.minus.size() == 6);
    CHECK(apt.contains(c));
    std::set<CoxeterElement> seen;
    for (int x : apt.plus) seen.insert(b.distance(Sign::Plus, c.index, x));
    CHECK(seen.size() == 6);
    for (int x = 0; x < b.chamber_count(Sign::Plus); ++x) {
        const auto r = retraction(b, apt, c, {Sign::Plus, x});
        CHECK(apt.contains(r));
        CHECK(b.distance(Sign::Plus, c.index, r.index) == b.distance(Sign::Plus, c.index, x));
    }
    CHECK(check_twin_apartments(b).passed);
    CHECK(check_retractions(b).passed);
    int near = 0;
    while (b.codistance(c, {Sign::Minus, near}).is_identity()) ++near;
    CHECK_THROWS_AS(twin_apartment(b, c, {Sign::Minus, near}), NotOpposite);
}

TEST_CASE("Schubert census") {
    const auto& b = sl3_2();
    const auto census = schubert_census(b, {Sign::Plus, 0});
    CHECK(census.partition_ok);
    CHECK(census.total_schubert == 21);
    CHECK(census.total_coschubert == 21);
    for (const auto& [el, n] : census.schubert) CHECK(n == power(2, el.length()));
    for (const auto& [el, n] : census.coschubert) CHECK(n == power(2, 3 - el.length()));

    const auto sl2 = TwinBuilding::tabulate(SlTwinBuilding(2, 5));
    const auto c2 = schubert_census(sl2, {Sign::Minus, 2});
    CHECK(c2.total_schubert == 6);
    CHECK(c2.schubert.at(CoxeterElement{}) == 1);
    CHECK(c2.schubert.at(CoxeterElement{{0}}) == 5);
    CHECK(check_census(b).passed);
    CHECK(check_cell_sizes(b).passed);
    CHECK(check_cell_sizes(sl3_3()).passed);
}

TEST_CASE("gallery spaces") {
    const auto& b = sl3_2();
    const auto g = gallery_space(b, w({1, 2, 1}), {Sign::Plus, 0});
    CHECK(g.count == 27);
    CHECK(g.prefix_counts == std::vector<long long>{1, 3, 9, 27});
    CHECK(g.fibration_ok);
    CHECK(g.reduced);
    CHECK(g.endpoint_surjective);
    CHECK(g.open_cell_unique);
    CHECK(g.non_stammering == 8);
    long long total = 0;
    for (const auto& [end, m] : g.endpoint_multiplicity) total += m;
    CHECK(total == 27);
    CHECK(g.endpoint_multiplicity.size() == 21);

    const auto stammer = gallery_space(b, w({1, 1}), {Sign::Minus, 4});
    CHECK(stammer.count == 9);
    CHECK_FALSE(stammer.reduced);
    CHECK(stammer.non_stammering == 4);
    CHECK(check_gallery_spaces(b, 4).passed);
    CHECK(check_gallery_spaces(thin(gcm_affine_a1(), 4), 6).passed);
}

TEST_CASE("lemma-level checks on SL_3(F_2)") {
    const auto& b = sl3_2();
    CHECK(check_coprojection_agreement(b).passed);
    CHECK(check_codistance_subexpression(b).passed);
    CHECK(check_opposite_witness(b).passed);
    CHECK(check_common_opposites(b).passed);
    CHECK(check_common_opposites(thin(gcm_a(2))).skipped);
}

TEST_CASE("panel multiplication recovers F_p^*") {
    for (int p : {2, 3}) {
        const auto& b = p == 2 ? sl3_2() : sl3_3();
        CHECK(check_panel_multiplication(b).passed);
        const Chamber cp{Sign::Plus, 0};
        int cm = 0;
        while (!b.codistance(cp, {Sign::Minus, cm}).is_identity()) ++cm;
        const auto zero = coproj_panel(b, {Sign::Minus, cm}, 1, cp);
        int one = -1;
        for (int y : b.panel(Sign::Minus, 1, cm))
            if (y != cm && y != zero.index) one = y;
        const auto pm = panel_mul(b, cp, {Sign::Minus, cm}, 0, 1, {Sign::Minus, one});
        CHECK(pm.ok());
        CHECK(static_cast<int>(pm.rows.size()) == p);
        // Non-zero rows times non-zero columns form a Latin square of order p - 1.
        std::set<int> units;
        for (std::size_t i = 0; i < pm.rows.size(); ++i) {
            if (pm.rows[i] == pm.zero_plus.index) continue;
            std::set<int> row;
            for (std::size_t j = 0; j < pm.columns.size(); ++j)
                if (pm.columns[j] != pm.zero_minus.index) row.insert(pm.table[i][j]);
            CHECK(static_cast<int>(row.size()) == p - 1);
            CHECK_FALSE(row.count(pm.zero_plus.index));
            units.insert(pm.rows[i]);
        }
        CHECK(static_cast<int>(units.size()) == p - 1);
        CHECK_THROWS_AS(panel_mul(b, cp, {Sign::Minus, cm}, 0, 0, {Sign::Minus, one}), BadGeometry);
    }
    CHECK_THROWS_AS(panel_mul(thin(gcm_a(2)), {Sign::Plus, 0}, {Sign::Plus, 1}, 0, 1, {Sign::Minus, 0}), BadGeometry);
}

TEST_CASE("codistance strata") {
    const auto& b = sl3_2();
    const auto st = stratification(b, {Sign::Plus, 0});
    CHECK(st.ok());
    long long total = 0;
    for (const auto& [el, n] : st.strata) {
        CHECK(n == power(2, 3 - el.length()));
        total += n;
    }
    CHECK(total == 21);
    for (const auto& [lo, hi] : st.right_steps) CHECK(hi.length() == lo.length() + 1);
    // The closure of the stratum of w contains every v >= w in the Bruhat order.
    for (const auto& [el, cl] : st.closure)
        for (const auto& [other, n] : st.strata) CHECK(cl.count(other) == (b.type().bruhat_leq(el, other) ? 1u : 0u));
    CHECK(st.to_dot(b.type()).find("digraph") != std::string::npos);
    CHECK(check_stratification(b).passed);
    CHECK(check_stratification(TwinBuilding::tabulate(SlTwinBuilding(2, 5))).passed);
}

TEST_CASE("dimension functions") {
    const auto a2 = check_dimension_function(CoxeterSystem(gcm_a(2)), {1, 2}, 8);
    CHECK_FALSE(a2.well_defined);
    CHECK(a2.consistent());
    REQUIRE(a2.offender.has_value());
    CHECK(a2.offender->word == w({1, 2, 1}));
    CHECK(check_dimension_function(CoxeterSystem(gcm_a(2)), {2, 2}, 8).well_defined);
    for (const auto& a : {gcm_b2(), gcm_g2(), gcm_affine_a1()}) {
        const auto r = check_dimension_function(CoxeterSystem(a), {1, 2}, 8);
        CHECK(r.well_defined);
        CHECK(r.consistent());
    }
}

TEST_CASE("building documents round trip") {
    for (const auto& b : {sl3_2(), TwinBuilding::tabulate(SlTwinBuilding(2, 3)), thin(gcm_affine_a1(), 4)}) {
        const auto j = building_to_json(b);
        const auto back = building_from_json(j);
        CHECK(building_to_json(back) == j);
        REQUIRE(back.chamber_count(Sign::Plus) == b.chamber_count(Sign::Plus));
        for (int x = 0; x < b.chamber_count(Sign::Plus); ++x)
            for (int y = 0; y < b.chamber_count(Sign::Minus); ++y)
                CHECK(back.codistance({Sign::Plus, x}, {Sign::Minus, y}) == b.codistance({Sign::Plus, x}, {Sign::Minus, y}));
    }
    const auto gen = building_from_json({{"generator", "sl_n"}, {"n", 2}, {"p", 3}});
    CHECK(gen.chamber_count(Sign::Plus) == 4);
    const auto th = building_from_json({{"generator", "thin"}, {"type", "B2"}});
    CHECK(th.chamber_count(Sign::Minus) == 8);

    auto bad = building_to_json(sl3_2());
    bad["panels"]["plus"][0][0].push_back(bad["panels"]["plus"][0][1][0]);
    CHECK_THROWS_AS(building_from_json(bad), MalformedInput);
    CHECK_THROWS_AS(building_from_json({{"generator", "nope"}}), MalformedInput);
    CHECK_THROWS_AS(building_from_json(nlohmann::json::array()), MalformedInput);
    CHECK_THROWS_AS(gcm_by_name("E9"), MalformedInput);
}
