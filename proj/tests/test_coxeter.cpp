#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "twinkit/coxeter.hpp"
#include "twinkit/errors.hpp"

using namespace twinkit;

namespace {

// Faithful permutation models of the finite test groups; generator k acts as gens[k].
using Perm = std::vector<int>;

struct PermModel {
    std::vector<Perm> gens;

    Perm identity() const {
        Perm p(gens.front().size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
        return p;
    }
    // Right action: apply letters left to right on positions.
    Perm eval(const std::vector<int>& word) const {
        Perm p = identity();
        for (int s : word) {
            Perm q(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[static_cast<std::size_t>(gens[static_cast<std::size_t>(s)][i])];
            p = q;
        }
        return p;
    }
    // Shortlex-least word of every element, by breadth-first search in generator order.
    std::map<Perm, std::vector<int>> shortlex() const {
        std::map<Perm, std::vector<int>> seen{{identity(), {}}};
        std::queue<std::vector<int>> q;
        q.push({});
        while (!q.empty()) {
            auto w = q.front();
            q.pop();
            for (int s = 0; s < static_cast<int>(gens.size()); ++s) {
                auto v = w;
                v.push_back(s);
                if (seen.emplace(eval(v), v).second) q.push(v);
            }
        }
        return seen;
    }
};

PermModel symmetric(int letters) {
    PermModel m;
    for (int i = 0; i + 1 < letters; ++i) {
        Perm p(static_cast<std::size_t>(letters));
        for (int k = 0; k < letters; ++k) p[static_cast<std::size_t>(k)] = k;
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
        m.gens.push_back(p);
    }
    return m;
}

// Dihedral group of order 2m acting on the m vertices of a polygon.
PermModel dihedral(int m) {
    PermModel d;
    Perm a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        a[static_cast<std::size_t>(i)] = (m - i) % m;
        b[static_cast<std::size_t>(i)] = (m + 1 - i) % m;
    }
    d.gens = {a, b};
    return d;
}

std::vector<int> w(std::initializer_list<int> one_based) {
    std::vector<int> out;
    for (int s : one_based) out.push_back(s - 1);
    return out;
}

bool subword_leq(const PermModel& m, const std::vector<int>& v, const std::vector<int>& word) {
    const auto target = m.eval(v);
    const std::size_t l = word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
        std::vector<int> sub;
        for (std::size_t k = 0; k < l; ++k)
            if (mask >> k & 1) sub.push_back(word[k]);
        if (m.eval(sub) == target) return true;
    }
    return false;
}

} // namespace

TEST_CASE("normal forms match the shortlex words of the permutation models") {
    const std::vector<std::pair<Gcm, PermModel>> cases = {
        {gcm_a(2), symmetric(3)}, {gcm_a(3), symmetric(4)}, {gcm_b2(), dihedral(4)}, {gcm_g2(), dihedral(6)}};
    std::mt19937 rng(7);
    for (const auto& [a, model] : cases) {
        CoxeterSystem sys(a);
        const auto oracle = model.shortlex();
        const auto all = sys.enumerate_finite(GeneratorSet::all(sys.rank()));
        CHECK(all.size() == oracle.size());
        std::set<std::vector<int>> words;
        for (const auto& [p, word] : oracle) words.insert(word);
        for (const auto& e : all) CHECK(words.count(e.word) == 1);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<int> word(rng() % 12);
            for (auto& s : word) s = static_cast<int>(rng() % static_cast<unsigned>(sys.rank()));
            CHECK(sys.normal_form(word).word == oracle.at(model.eval(word)));
        }
    }
}

TEST_CASE("normal form examples") {
    CoxeterSystem a2(gcm_a(2)), b2(gcm_b2());
    CHECK(a2.normal_form(w({1, 1})).word.empty());
    CHECK(a2.normal_form(w({2, 1, 2})).word == w({1, 2, 1}));
    CHECK(b2.normal_form(w({1, 2, 1, 2, 1})).word == w({2, 1, 2}));
    CHECK_THROWS_AS(a2.normal_form(w({3})), IndexOutOfRange);
    const auto nf = a2.normal_form(w({2, 1, 2}));
    CHECK(a2.normal_form(nf.word) == nf);
}

TEST_CASE("multiplication") {
    CoxeterSystem a2(gcm_a(2));
    CHECK(a2.multiply(a2.generator(0), a2.generator(0)).is_identity());
    CHECK(a2.multiply(a2.generator(0), a2.generator(1)).word == w({1, 2}));
    CHECK(a2.multiply({w({1, 2})}, {w({1})}).word == w({1, 2, 1}));
    std::mt19937 rng(3);
    CoxeterSystem aff(gcm_affine_a1());
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> u(rng() % 8), v(rng() % 8);
        for (auto& s : u) s = static_cast<int>(rng() % 2);
        for (auto& s : v) s = static_cast<int>(rng() % 2);
        auto uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(aff.multiply(aff.normal_form(u), aff.normal_form(v)) == aff.normal_form(uv));
    }
}

TEST_CASE("Bruhat order agrees with subword search") {
    const std::vector<std::pair<Gcm, PermModel>> cases = {
        {gcm_a(2), symmetric(3)}, {gcm_a(3), symmetric(4)}, {gcm_b2(), dihedral(4)}};
    for (const auto& [a, model] : cases) {
        CoxeterSystem sys(a);
        const auto all = sys.enumerate_finite(GeneratorSet::all(sys.rank()));
        for (const auto& v : all)
            for (const auto& x : all) CHECK(sys.bruhat_leq(v, x) == subword_leq(model, v.word, x.word));
    }
    CoxeterSystem a2(gcm_a(2));
    CHECK(a2.bruhat_leq({}, {w({1, 2, 1})}));
    CHECK(a2.bruhat_leq({w({1})}, {w({1, 2, 1})}));
    CHECK_FALSE(a2.bruhat_leq({w({1, 2})}, {w({2, 1})}));
}

TEST_CASE("Bruhat order on the infinite dihedral group") {
    CoxeterSystem aff(gcm_affine_a1());
    std::vector<CoxeterElement> ball;
    for (const auto& layer : aff.enumerate_upto(5))
        for (const auto& e : layer) ball.push_back(e);
    // In the infinite dihedral group, v <= w iff l(v) < l(w) or v = w.
    for (const auto& v : ball)
        for (const auto& x : ball) CHECK(aff.bruhat_leq(v, x) == (v == x || v.length() < x.length()));
}

TEST_CASE("descents and the exchange property") {
    CoxeterSystem a2(gcm_a(2));
    CHECK(a2.descents({}, Side::Right).empty());
    CHECK(a2.descents({w({1, 2, 1})}, Side::Right) == GeneratorSet{0, 1});
    CHECK(a2.descents({w({1, 2})}, Side::Right) == GeneratorSet{1});
    for (const auto& a : {gcm_a(3), gcm_b2(), gcm_g2(), gcm_affine_a1()}) {
        CoxeterSystem sys(a);
        for (const auto& layer : sys.enumerate_upto(6))
            for (const auto& e : layer)
                for (int s = 0; s < sys.rank(); ++s) {
                    const int l = sys.mul_right(e, s).length();
                    CHECK((l == e.length() + 1 || l == e.length() - 1));
                    CHECK(sys.is_right_descent(e, s) == (l < e.length()));
                    CHECK(sys.is_left_descent(e, s) == (sys.mul_left(s, e).length() < e.length()));
                }
    }
}

TEST_CASE("parabolic subgroups") {
    CoxeterSystem a2(gcm_a(2));
    auto one = a2.parabolic_info(GeneratorSet{0});
    CHECK(one.finite);
    CHECK(*one.order == 2);
    CHECK(one.longest->word == w({1}));
    auto all = a2.parabolic_info(GeneratorSet::all(2));
    CHECK(*all.order == 6);
    CHECK(all.longest->word == w({1, 2, 1}));
    CHECK_FALSE(CoxeterSystem(gcm_affine_a1()).parabolic_info(GeneratorSet::all(2)).finite);
    CHECK(*CoxeterSystem(gcm_g2()).parabolic_info(GeneratorSet::all(2)).order == 12);
    CHECK(*CoxeterSystem(gcm_a(3)).parabolic_info(GeneratorSet::all(3)).order == 24);

    // Finiteness against enumeration stabilisation, for every J of some rank-3 systems.
    for (const auto& rows : std::vector<std::vector<std::vector<int>>>{
             {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
             {{2, -1, 0}, {-2, 2, -1}, {0, -1, 2}},
             {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}},
             {{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}}) {
        CoxeterSystem sys{Gcm(rows)};
        for (std::uint32_t bits = 0; bits < 8; ++bits) {
            const auto j = GeneratorSet::from_bits(bits);
            const auto info = sys.parabolic_info(j);
            const auto layers = sys.enumerate_upto(14, j);
            const bool stabilised = layers.size() <= 14;
            CHECK(info.finite == stabilised);
            if (info.finite) {
                std::uint64_t total = 0;
                for (const auto& l : layers) total += l.size();
                CHECK(total == *info.order);
            }
        }
    }
}

TEST_CASE("enumeration counts") {
    auto counts = [](const CoxeterSystem& sys, int l) {
        std::vector<std::size_t> out;
        for (const auto& layer : sys.enumerate_upto(l)) out.push_back(layer.size());
        return out;
    };
    CHECK(counts(CoxeterSystem(gcm_a(2)), 0) == std::vector<std::size_t>{1});
    CHECK(counts(CoxeterSystem(gcm_a(2)), 3) == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(counts(CoxeterSystem(gcm_affine_a1()), 4) == std::vector<std::size_t>{1, 2, 2, 2, 2});
}

TEST_CASE("reduced words") {
    CoxeterSystem a2(gcm_a(2)), b2(gcm_b2());
    CHECK(a2.reduced_words(a2.generator(0)) == std::vector<std::vector<int>>{w({1})});
    CHECK(a2.reduced_words({w({1, 2, 1})}) == std::vector<std::vector<int>>{w({1, 2, 1}), w({2, 1, 2})});
    CHECK(b2.reduced_words({w({1, 2})}) == std::vector<std::vector<int>>{w({1, 2})});
    const auto model = dihedral(4);
    for (const auto& e : b2.enumerate_finite(GeneratorSet::all(2)))
        for (const auto& r : b2.reduced_words(e)) {
            CHECK(static_cast<int>(r.size()) == e.length());
            CHECK(model.eval(r) == model.eval(e.word));
        }
}

TEST_CASE("Coxeter matrices from GCMs") {
    CHECK(coxeter_label(0) == 2);
    CHECK(coxeter_label(1) == 3);
    CHECK(coxeter_label(2) == 4);
    CHECK(coxeter_label(3) == 6);
    CHECK(coxeter_label(4) == kInfiniteLabel);
    CHECK(coxeter_matrix(gcm_b2())(0, 1) == 4);
    CHECK(coxeter_matrix(gcm_g2())(0, 1) == 6);
    CHECK_THROWS_AS(Gcm({{2, 1}, {-1, 2}}), InvalidGcm);
    CHECK_THROWS_AS(Gcm({{2, 0}, {-1, 2}}), InvalidGcm);
    CHECK_THROWS_AS(CoxeterMatrix({{1, 5}, {5, 1}}), InvalidCoxeterMatrix);
    const auto m = coxeter_matrix(gcm_g2());
    CHECK(coxeter_matrix(realize_coxeter_matrix(m)) == m);
}
