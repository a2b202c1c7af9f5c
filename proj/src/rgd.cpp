#include "twinkit/rgd.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <unordered_map>

#include "twinkit/errors.hpp"
#include "twinkit/roots.hpp"

namespace twinkit {

namespace {

nlohmann::json root_json(MatrixRoot a) { return {a.i + 1, a.j + 1}; }

std::array<int, 16> root_vec(int n, MatrixRoot a) {
    std::array<int, 16> v{};
    (void)n;
    v[static_cast<std::size_t>(a.i)] += 1;
    v[static_cast<std::size_t>(a.j)] -= 1;
    return v;
}

std::vector<FpMatrix> sample(const std::vector<FpMatrix>& all, std::size_t limit, std::mt19937_64& rng) {
    if (all.size() <= limit) return all;
    std::vector<FpMatrix> out;
    std::sample(all.begin(), all.end(), std::back_inserter(out), limit, rng);
    return out;
}

} // namespace

std::vector<MatrixRoot> matrix_roots(int n) {
    std::vector<MatrixRoot> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) out.push_back({i, j});
    return out;
}

MatrixRoot reflect_root(int k, MatrixRoot a) {
    auto sw = [k](int x) { return x == k ? k + 1 : x == k + 1 ? k : x; };
    return {sw(a.i), sw(a.j)};
}

std::vector<MatrixRoot> open_interval(int n, MatrixRoot a, MatrixRoot b) {
    std::vector<MatrixRoot> out;
    const auto va = root_vec(n, a), vb = root_vec(n, b);
    for (const auto& g : matrix_roots(n)) {
        const auto vg = root_vec(n, g);
        bool hit = false;
        for (int c = 1; c <= 3 && !hit; ++c)
            for (int d = 1; d <= 3 && !hit; ++d) {
                bool eq = true;
                for (int k = 0; k < n; ++k)
                    if (c * va[static_cast<std::size_t>(k)] + d * vb[static_cast<std::size_t>(k)] != vg[static_cast<std::size_t>(k)])
                        eq = false;
                hit = eq;
            }
        if (hit) out.push_back(g);
    }
    return out;
}

std::vector<FpMatrix> root_group(const SlRealization& r, MatrixRoot a) {
    std::vector<FpMatrix> out;
    for (int t = 0; t < r.p(); ++t) out.push_back(r.root_element(a.i, a.j, t));
    return out;
}

FpMatrix mu(const SlRealization& r, MatrixRoot a, int t) {
    const auto& f = r.field();
    const int c = f.neg(f.inv(t));
    const FpMatrix y = r.root_element(a.j, a.i, c);
    return y * r.root_element(a.i, a.j, t) * y;
}

std::set<FpMatrix> generated_subgroup(const std::vector<FpMatrix>& gens, int n, int p) {
    const FpMatrix e = FpMatrix::identity(n, p);
    std::set<FpMatrix> seen{e};
    std::deque<FpMatrix> queue{e};
    while (!queue.empty()) {
        const FpMatrix g = queue.front();
        queue.pop_front();
        for (const auto& x : gens) {
            FpMatrix h = x * g;
            if (seen.insert(h).second) queue.push_back(std::move(h));
        }
    }
    return seen;
}

std::vector<CheckResult> rgd_axiom_check(const SlRealization& r, const RgdOptions& opt) {
    const int n = r.n(), p = r.p();
    const auto& W = r.weyl();
    std::mt19937_64 rng(opt.seed);
    std::vector<MatrixRoot> family;
    for (const auto& a : matrix_roots(n))
        if (!opt.deleted || a != *opt.deleted) family.push_back(a);
    auto in_family = [&](MatrixRoot a) { return std::find(family.begin(), family.end(), a) != family.end(); };
    std::map<MatrixRoot, std::set<FpMatrix>> U;
    for (const auto& a : family) {
        auto g = root_group(r, a);
        U[a] = std::set<FpMatrix>(g.begin(), g.end());
    }
    const auto torus = r.torus();
    std::vector<CheckResult> out;

    CheckResult rgd0("RGD0");
    for (const auto& a : family) {
        ++rgd0.instances;
        if (U[a].size() < 2) rgd0.fail("trivial root group", {{"root", root_json(a)}});
    }
    out.push_back(rgd0);

    CheckResult rgd1("RGD1");
    for (const auto& a : family)
        for (const auto& b : family) {
            if (b == a.negated()) continue;
            std::vector<FpMatrix> gens;
            for (const auto& g : open_interval(n, a, b)) {
                if (!in_family(g)) continue;
                gens.push_back(r.root_element(g.i, g.j, 1));
            }
            const auto target = generated_subgroup(gens, n, p);
            for (const auto& x : U[a])
                for (const auto& y : U[b]) {
                    ++rgd1.instances;
                    const FpMatrix c = x * y * x.inverse() * y.inverse();
                    if (!target.count(c))
                        rgd1.fail("commutator outside the interval group",
                                  {{"alpha", root_json(a)}, {"beta", root_json(b)}, {"x", x.to_json()}, {"y", y.to_json()}});
                }
        }
    out.push_back(rgd1);

    CheckResult rgd2("RGD2");
    for (int k = 0; k + 1 < n; ++k) {
        const MatrixRoot a{k, k + 1};
        if (!in_family(a) || !in_family(a.negated())) {
            rgd2.fail("root group of a simple root or its negative is missing", {{"s", k + 1}});
            continue;
        }
        for (int t = 1; t < p; ++t) {
            const FpMatrix m = mu(r, a, t), mi = m.inverse();
            for (const auto& b : family) {
                ++rgd2.instances;
                const MatrixRoot sb = reflect_root(k, b);
                std::set<FpMatrix> conj;
                for (const auto& x : U[b]) conj.insert(m * x * mi);
                if (!in_family(sb) || conj != U[sb])
                    rgd2.fail("mu_s U_beta mu_s^-1 differs from U_s(beta)",
                              {{"s", k + 1}, {"t", t}, {"beta", root_json(b)}, {"mu", m.to_json()}});
            }
        }
    }
    out.push_back(rgd2);

    std::vector<FpMatrix> plus_gens;
    for (const auto& a : family)
        if (a.positive()) plus_gens.push_back(r.root_element(a.i, a.j, 1));
    const auto u_plus = generated_subgroup(plus_gens, n, p);
    CheckResult rgd3("RGD3");
    for (int k = 0; k + 1 < n; ++k) {
        const MatrixRoot a{k + 1, k};
        if (!in_family(a)) continue;
        ++rgd3.instances;
        bool inside = true;
        for (const auto& x : U[a])
            if (!u_plus.count(x)) inside = false;
        if (inside) rgd3.fail("U_{-alpha_s} lies in U_+", {{"s", k + 1}});
    }
    out.push_back(rgd3);

    CheckResult rgd4("RGD4");
    {
        std::vector<FpMatrix> gens = torus;
        for (const auto& a : family) gens.push_back(r.root_element(a.i, a.j, 1));
        const auto g = generated_subgroup(gens, n, p);
        rgd4.instances = static_cast<long long>(g.size());
        if (g.size() != r.group_order())
            rgd4.fail("T and the root groups generate a proper subgroup",
                      {{"generated", g.size()}, {"order", r.group_order()}});
    }
    out.push_back(rgd4);

    CheckResult rgd5("RGD5");
    for (const auto& t : torus) {
        const FpMatrix ti = t.inverse();
        for (const auto& a : family) {
            ++rgd5.instances;
            std::set<FpMatrix> conj;
            for (const auto& x : U[a]) conj.insert(t * x * ti);
            if (conj != U[a]) rgd5.fail("torus does not normalize a root group", {{"t", t.to_json()}, {"root", root_json(a)}});
        }
    }
    out.push_back(rgd5);

    const auto& G = r.elements();
    std::vector<FpMatrix> N;
    for (const auto& g : G)
        if (g.is_monomial()) N.push_back(g);
    const std::set<FpMatrix> Tset(torus.begin(), torus.end());
    const std::vector<FpMatrix> B[2] = {r.borel(Sign::Plus), r.borel(Sign::Minus)};
    const auto weyl = W.enumerate_finite(GeneratorSet::all(W.rank()));

    CheckResult bn1("BN1");
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
        std::set<FpMatrix> cap;
        for (const auto& x : N)
            if (r.in_borel(x, sg)) cap.insert(x);
        ++bn1.instances;
        if (cap != Tset) bn1.fail("B intersect N differs from T", {{"sign", sign_name(sg)}});
    }
    {
        ++bn1.instances;
        if (N.size() != torus.size() * weyl.size())
            bn1.fail("N/T is not the Weyl group", {{"N", N.size()}, {"T", torus.size()}, {"W", weyl.size()}});
        for (const auto& x : N)
            for (const auto& t : torus)
                if (!Tset.count(x * t * x.inverse())) bn1.fail("T is not normal in N", {{"n", x.to_json()}});
    }
    {
        ++bn1.instances;
        std::vector<FpMatrix> gens = B[0];
        for (const auto& x : N) gens.push_back(x);
        if (generated_subgroup(gens, n, p).size() != r.group_order()) bn1.fail("B and N do not generate G", nullptr);
    }
    out.push_back(bn1);

    CheckResult bn2("BN2");
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
        const auto bs = sample(B[idx(sg)], opt.exhaustive_limit, rng);
        for (int s = 0; s < W.rank(); ++s) {
            const FpMatrix sh = r.s_hat(s);
            bool leaves = false;
            for (const auto& b : bs)
                if (!r.in_borel(sh * b * sh.inverse(), sg)) leaves = true;
            ++bn2.instances;
            if (!leaves) bn2.fail("s B s = B", {{"sign", sign_name(sg)}, {"s", s + 1}});
            for (const auto& w : weyl) {
                const FpMatrix wh = r.w_hat(w);
                const auto ws = W.mul_right(w, s);
                for (const auto& b : bs) {
                    ++bn2.instances;
                    const auto cell = r.decompose(wh * b * sh, sg, sg).w;
                    const bool ok = ws.length() > w.length() ? cell == ws : (cell == ws || cell == w);
                    if (!ok)
                        bn2.fail("w B s leaves the allowed double cosets",
                                 {{"sign", sign_name(sg)}, {"w", element_to_json(w)}, {"s", s + 1}, {"b", b.to_json()}});
                }
            }
        }
    }
    out.push_back(bn2);

    CheckResult tbn1("TBN1");
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
        const auto bs = sample(B[idx(sg)], opt.exhaustive_limit, rng);
        for (int s = 0; s < W.rank(); ++s)
            for (const auto& w : weyl) {
                const auto sw = W.mul_left(s, w);
                if (sw.length() > w.length()) continue;
                const FpMatrix sh = r.s_hat(s), wh = r.w_hat(w);
                for (const auto& b : bs) {
                    ++tbn1.instances;
                    if (r.decompose(sh * b * wh, sg, opposite(sg)).w != sw)
                        tbn1.fail("B s B w B' is not B sw B'",
                                  {{"sign", sign_name(sg)}, {"w", element_to_json(w)}, {"s", s + 1}, {"b", b.to_json()}});
                }
            }
    }
    out.push_back(tbn1);

    CheckResult tbn2("TBN2");
    for (Sign sg : {Sign::Plus, Sign::Minus})
        for (int s = 0; s < W.rank(); ++s) {
            const FpMatrix sh = r.s_hat(s);
            for (const auto& b : B[idx(sg)]) {
                ++tbn2.instances;
                if (r.in_borel(b * sh, opposite(sg)))
                    tbn2.fail("B s meets the opposite Borel", {{"sign", sign_name(sg)}, {"s", s + 1}, {"b", b.to_json()}});
            }
        }
    out.push_back(tbn2);

    CheckResult prod("rank_one_products");
    {
        std::unordered_map<FpMatrix, std::array<int, 2>, FpMatrixHash> len;
        for (const auto& g : G)
            len[g] = {r.decompose(g, Sign::Plus, Sign::Plus).w.length(), r.decompose(g, Sign::Minus, Sign::Minus).w.length()};
        std::vector<std::vector<FpMatrix>> rank_one;
        for (int k = 0; k + 1 < n; ++k) {
            const auto s = generated_subgroup({r.root_element(k, k + 1, 1), r.root_element(k + 1, k, 1)}, n, p);
            rank_one.emplace_back(s.begin(), s.end());
        }
        const int max_k = W.parabolic_info(GeneratorSet::all(W.rank())).longest->length() + 1;
        std::vector<std::pair<std::vector<int>, std::set<FpMatrix>>> layer{{{}, Tset}};
        for (int k = 1; k <= max_k; ++k) {
            std::vector<std::pair<std::vector<int>, std::set<FpMatrix>>> next;
            for (const auto& [tuple, set] : layer)
                for (int i = 0; i + 1 < n; ++i) {
                    std::set<FpMatrix> s;
                    for (const auto& x : set)
                        for (const auto& y : rank_one[static_cast<std::size_t>(i)]) s.insert(x * y);
                    auto t = tuple;
                    t.push_back(i + 1);
                    for (const auto& x : s) {
                        ++prod.instances;
                        const auto l = len.at(x);
                        if (l[0] > k || l[1] > k)
                            prod.fail("product leaves the length-k Bruhat cells", {{"tuple", t}, {"x", x.to_json()}});
                    }
                    next.emplace_back(std::move(t), std::move(s));
                }
            layer = std::move(next);
        }
    }
    out.push_back(prod);

    for (auto& c : check_ordered_products(r)) out.push_back(std::move(c));
    return out;
}

std::vector<CheckResult> check_ordered_products(const SlRealization& r) {
    const int n = r.n(), p = r.p();
    auto table = positive_real_roots(gcm_a(n - 1), n - 1);
    const auto order = root_enumeration(table);
    std::vector<MatrixRoot> beta;
    for (int k : order) {
        const auto& c = table.roots[static_cast<std::size_t>(k)].coords;
        int first = -1, last = -1;
        for (int m = 0; m < static_cast<int>(c.size()); ++m)
            if (c[static_cast<std::size_t>(m)]) {
                if (first < 0) first = m;
                last = m;
            }
        beta.push_back({first, last + 1});
    }
    CheckResult uni("ordered_product_unipotent"), bor("ordered_product_borel");
    std::set<FpMatrix> images;
    const std::size_t N = beta.size();
    std::vector<int> t(N, 0);
    for (;;) {
        FpMatrix x = r.identity();
        for (std::size_t k = 0; k < N; ++k) x = x * r.root_element(beta[k].i, beta[k].j, t[k]);
        ++uni.instances;
        if (!x.is_unitriangular_upper()) uni.fail("product is not upper unitriangular", {{"params", t}});
        if (!images.insert(x).second) uni.fail("two parameter tuples give the same product", {{"params", t}});
        std::size_t k = 0;
        while (k < N && ++t[k] == p) t[k++] = 0;
        if (k == N) break;
    }
    std::size_t expected = 1;
    for (std::size_t k = 0; k < N; ++k) expected *= static_cast<std::size_t>(p);
    if (images.size() != expected) uni.fail("image is not all of U_+", {{"image", images.size()}, {"expected", expected}});
    std::set<FpMatrix> borel_images;
    for (const auto& tt : r.torus())
        for (const auto& u : images) {
            ++bor.instances;
            if (!borel_images.insert(tt * u).second) bor.fail("t u collides", {{"t", tt.to_json()}, {"u", u.to_json()}});
        }
    if (borel_images.size() != r.borel(Sign::Plus).size())
        bor.fail("image is not all of B_+", {{"image", borel_images.size()}});
    return {uni, bor};
}

} // namespace twinkit
