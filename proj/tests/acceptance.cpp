// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "twinkit/building.hpp"
#include "twinkit/building_checks.hpp"
#include "twinkit/dynkin.hpp"
#include "twinkit/km_algebra.hpp"
#include "twinkit/rgd.hpp"
#include "twinkit/sl_group.hpp"
#include "twinkit/thin_building.hpp"

using namespace twinkit;

namespace {

struct Verdict {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
    void require(const CheckResult& r, const std::string& where) {
        require(r.passed && !r.skipped, where + ": " + r.name + (r.detail.empty() ? "" : " (" + r.detail + ")"));
        require(r.instances > 0, where + ": " + r.name + " examined nothing");
    }
    void require(const std::vector<CheckResult>& rs, const std::string& where) {
        for (const auto& r : rs) require(r, where);
    }
};

TwinBuilding sl(int n, int p) { return TwinBuilding::tabulate(SlTwinBuilding(n, p)); }

TwinBuilding thin(const Gcm& a, std::optional<int> cap = std::nullopt) {
    return TwinBuilding::tabulate(ThinTwinBuilding(CoxeterSystem(a), cap));
}

Verdict axioms() {
    Verdict v;
    const std::vector<std::pair<std::string, std::function<TwinBuilding()>>> models{
        {"thin A2", [] { return thin(gcm_a(2)); }},
        {"thin B2", [] { return thin(gcm_b2()); }},
        {"thin ~A1 cap 5", [] { return thin(gcm_affine_a1(), 5); }},
        {"SL2(F2)", [] { return sl(2, 2); }},
        {"SL2(F3)", [] { return sl(2, 3); }},
        {"SL2(F5)", [] { return sl(2, 5); }},
        {"SL3(F2)", [] { return sl(3, 2); }},
        {"SL3(F3)", [] { return sl(3, 3); }}};
    for (const auto& [name, make] : models) {
        const auto rep = check_axioms(make());
        v.require(rep.checks.size() == 6, name + ": six axioms");
        v.require(rep.checks, name);
    }
    return v;
}

Verdict coprojection_formula() {
    Verdict v;
    for (const auto& [n, p] : {std::pair{3, 2}, std::pair{2, 5}}) {
        SlTwinBuilding model(n, p);
        const auto table = TwinBuilding::tabulate(model);
        v.require(check_coprojection_formula(model, table, false), "SL" + std::to_string(n) + "(F" + std::to_string(p) + ")");
        v.require(check_coprojection_formula(model, table, true), "SL" + std::to_string(n) + "(F" + std::to_string(p) + ") twisted");
    }
    return v;
}

Verdict rho() {
    Verdict v;
    for (const auto& [n, p] : {std::pair{2, 3}, std::pair{3, 2}}) {
        SlRealization G(n, p);
        v.require(check_rho_membership(G), "rho membership");
        v.require(check_rho_one_is_pi(G), "rho_1 = pi");
    }
    return v;
}

Verdict codistance_lemmas() {
    Verdict v;
    const auto b = sl(3, 2);
    v.require(check_coprojection_agreement(b), "SL3(F2)");
    v.require(check_codistance_subexpression(b), "SL3(F2)");
    v.require(check_opposite_witness(b), "SL3(F2)");
    return v;
}

Verdict stratification() {
    Verdict v;
    v.require(check_stratification(sl(3, 2)), "SL3(F2)");
    v.require(check_stratification(sl(2, 5)), "SL2(F5)");
    return v;
}

Verdict census_and_galleries() {
    Verdict v;
    for (const auto& [n, p, total] : {std::tuple{3, 2, 21}, std::tuple{2, 5, 6}}) {
        const auto b = sl(n, p);
        for (Sign s : {Sign::Plus, Sign::Minus})
            for (int c = 0; c < b.chamber_count(s); ++c) {
                const auto census = schubert_census(b, {s, c});
                v.require(census.partition_ok && census.total_schubert == total, "census total");
                for (const auto& [w, k] : census.schubert) {
                    long long expect = 1;
                    for (int i = 0; i < w.length(); ++i) expect *= p;
                    v.require(k == expect, "cell size q^l(w)");
                }
            }
        v.require(check_cell_sizes(b), "cell sizes");
        v.require(check_gallery_spaces(b, 4), "gallery spaces");
    }
    const auto g = gallery_space(sl(3, 2), {0, 1, 0}, {Sign::Plus, 0});
    v.require(g.count == 27 && g.non_stammering == 8 && g.open_cell_unique && g.endpoint_surjective,
              "gallery space of type (1,2,1)");
    return v;
}

Verdict panel_multiplication() {
    Verdict v;
    v.require(check_panel_multiplication(sl(3, 2)), "SL3(F2)");
    v.require(check_panel_multiplication(sl(3, 3)), "SL3(F3)");
    return v;
}

Verdict dimension_function() {
    Verdict v;
    for (const auto& a : {gcm_a(2), gcm_b2(), gcm_g2(), gcm_affine_a1()}) {
        const CoxeterSystem sys(a);
        for (int d1 = 1; d1 <= 3; ++d1)
            for (int d2 = 1; d2 <= 3; ++d2) {
                const auto r = check_dimension_function(sys, {d1, d2}, 8);
                v.require(r.consistent(), "well-definedness iff constant on odd components");
            }
    }
    return v;
}

Verdict kac_moody() {
    Verdict v;
    v.require(KmAlgebra(gcm_a(2), 3).dimension() == 8, "A2 dimension 8");
    v.require(KmAlgebra(gcm_g2(), 6).dimension() == 14, "G2 dimension 14");
    KmAlgebra aff(gcm_affine_a1(), 4);
    v.require(aff.positive_dims() == std::vector<int>{2, 1, 2, 1}, "~A1 window dims (2,1,2,1)");
    for (const auto& [a, h] : std::vector<std::pair<Gcm, int>>{{gcm_a(2), 3}, {gcm_b2(), 4}, {gcm_g2(), 6}}) {
        KmAlgebra alg(a, h);
        v.require(alg.window_closed(), "rank-2 window closed");
        for (const auto& r : algebra_checks(alg)) {
            v.require(r, "algebra");
            if (r.name == "jacobi") v.require(r.detail.empty(), "Jacobi on the full window");
        }
        v.require(carrier_checks(alg, window_carrier(alg)), "carrier");
    }
    v.require(algebra_checks(aff), "~A1 algebra");
    v.require(carrier_checks(aff, invariant_subspace(aff, aff.e(0), {0})), "~A1 carrier");
    return v;
}

Verdict rgd() {
    Verdict v;
    for (const auto& [n, p] : {std::pair{3, 2}, std::pair{3, 3}}) v.require(rgd_axiom_check(SlRealization(n, p)), "SL3");
    for (const auto& a : {gcm_a(2), gcm_b2(), gcm_g2()}) v.require(rank2_rgd_check(a, 2), "rank 2 over F2");
    v.require(check_ordered_products(SlRealization(3, 3)), "ordered products");
    return v;
}

Verdict lang() {
    Verdict v;
    for (const auto& [n, p] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        SlTwinBuilding model(n, p);
        const auto rep = flip_lang(model, transpose_inverse);
        v.require(rep.equivalence_ok && rep.elements_checked == static_cast<long long>(model.group().elements().size()),
                  "stratum equivalence");
    }
    return v;
}

// Decorated labelled trees up to isomorphism by exhaustive relabelling.
std::size_t brute_force_classes(int n) {
    std::vector<std::vector<std::pair<int, int>>> trees;
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    // Every tree on {0..n-1} arises from a parent array with parent[v] < v, up to relabelling.
    std::function<void(int)> grow = [&](int v) {
        if (v == n) {
            std::vector<std::pair<int, int>> e;
            for (int k = 1; k < n; ++k) e.emplace_back(parent[static_cast<std::size_t>(k)], k);
            trees.push_back(e);
            return;
        }
        for (int u = 0; u < v; ++u) {
            parent[static_cast<std::size_t>(v)] = u;
            grow(v + 1);
        }
    };
    grow(1);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    using Key = std::vector<std::tuple<int, int, int>>;
    std::set<Key> classes;
    for (const auto& edges : trees) {
        std::vector<int> deco(edges.size(), 0);
        while (true) {
            Key best;
            for (const auto& p : perms) {
                Key k;
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    int a = p[static_cast<std::size_t>(edges[e].first)], b = p[static_cast<std::size_t>(edges[e].second)];
                    int d = deco[e];
                    if (a > b) {
                        std::swap(a, b);
                        if (d != 0) d = d % 2 == 1 ? d + 1 : d - 1;
                    }
                    k.emplace_back(a, b, d);
                }
                std::sort(k.begin(), k.end());
                if (best.empty() || k < best) best = k;
            }
            classes.insert(best);
            std::size_t k = 0;
            while (k < deco.size() && ++deco[k] == 5) deco[k++] = 0;
            if (k == deco.size()) break;
        }
    }
    return classes.size();
}

Verdict classification() {
    Verdict v;
    v.require(brute_force_classes(2) == 3 && brute_force_classes(3) == 15, "brute-force oracle");
    v.require(enumerate_trees(2).size() == 3, "n = 2");
    v.require(enumerate_trees(3).size() == 15, "n = 3");
    std::mt19937 rng(1);
    for (int n = 2; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n)) {
            const auto code = canonical_code(t);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int k = 0; k < 1000 && v.ok; ++k) {
                std::shuffle(perm.begin(), perm.end(), rng);
                v.require(canonical_code(t.relabelled(perm)) == code, "relabelling invariance");
            }
            v.require(canonical_code(dynkin_of_gcm(gcm_of_dynkin(t))) == code, "GCM round trip");
        }
    return v;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {"twin building axioms", 10, axioms},
        {"co-projection formula", 30, coprojection_formula},
        {"rho membership and rho_1 = pi", 10, rho},
        {"codistance lemmas on SL3(F2)", 30, codistance_lemmas},
        {"codistance stratification", 30, stratification},
        {"Schubert census and gallery spaces", 10, census_and_galleries},
        {"panel multiplication", 30, panel_multiplication},
        {"dimension function well-definedness", 10, dimension_function},
        {"Kac-Moody windows and carriers", 60, kac_moody},
        {"RGD, BN and ordered products", 60, rgd},
        {"Lang map strata", 10, lang},
        {"Dynkin tree classification", 10, classification},
    };
    int failed = 0;
    int k = 0;
    for (const auto& c : criteria) {
        ++k;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.ok = false;
            v.note = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (v.ok && secs > c.budget) {
            v.ok = false;
            v.note = "over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
        }
        if (!v.ok) ++failed;
        std::printf("%s %2d %-40s %7.2f s%s%s\n", v.ok ? "PASS" : "FAIL", k, c.name, secs, v.ok ? "" : "  ",
                    v.note.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
