#include "twinkit/sl_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "twinkit/errors.hpp"

namespace twinkit {

SlRealization::SlRealization(int n, int p) : n_(n), field_(p), weyl_(gcm_a(std::max(n - 1, 1))) {
    if (n < 2) throw InvalidGcm("SL_n needs n >= 2");
}

void SlRealization::require_sl(const FpMatrix& g) const {
    if (g.n() != n_ || g.p() != p()) throw NotSpecialLinear("matrix has the wrong size or modulus");
    if (g.det() != 1) throw NotSpecialLinear("determinant is " + std::to_string(g.det()) + ", not 1");
}

FpMatrix SlRealization::s_hat(int i) const {
    if (i < 0 || i >= n_ - 1) throw IndexOutOfRange("generator " + std::to_string(i) + " outside A_" + std::to_string(n_ - 1));
    FpMatrix m = identity();
    m.set(i, i, 0);
    m.set(i + 1, i + 1, 0);
    m.set(i, i + 1, 1);
    m.set(i + 1, i, -1);
    return m;
}

FpMatrix SlRealization::w_hat(const CoxeterElement& w) const {
    FpMatrix m = identity();
    for (int s : w.word) m = m * s_hat(s);
    return m;
}

CoxeterElement SlRealization::weyl_element_of_monomial(const FpMatrix& m) const {
    if (!m.is_monomial()) throw WrongCell("matrix is not monomial");
    std::vector<int> sigma(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i)
            if (m(i, j)) sigma[static_cast<std::size_t>(j)] = i;
    // Strip right descents: sigma(i) > sigma(i+1) means sigma = sigma' tau_i with sigma' shorter.
    std::vector<int> letters;
    for (bool again = true; again;) {
        again = false;
        for (int i = 0; i + 1 < n_; ++i)
            if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(i + 1)]) {
                std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i + 1)]);
                letters.push_back(i);
                again = true;
                break;
            }
    }
    std::reverse(letters.begin(), letters.end());
    return weyl_.normal_form(letters);
}

Decomposition SlRealization::decompose(const FpMatrix& g, Sign left, Sign right) const {
    require_sl(g);
    const auto& f = field_;
    FpMatrix a = g, L = identity(), R = identity();
    for (int step = 0; step < n_; ++step) {
        const int j = right == Sign::Plus ? step : n_ - 1 - step;
        int piv = -1;
        for (int i = 0; i < n_; ++i)
            if (a(i, j) && (piv < 0 || left == Sign::Plus)) piv = i;
        const int iv = f.inv(a(piv, j));
        for (int k = 0; k < n_; ++k) {
            if (k == piv || a(k, j) == 0) continue;
            const int c = f.neg(f.mul(a(k, j), iv));
            a.add_row(k, piv, c);
            L.add_row(k, piv, c);
        }
        for (int m = 0; m < n_; ++m) {
            if (m == j || a(piv, m) == 0) continue;
            const int c = f.neg(f.mul(a(piv, m), iv));
            a.add_col(m, j, c);
            R.add_col(m, j, c);
        }
    }
    Decomposition d;
    d.w = weyl_element_of_monomial(a);
    const FpMatrix wh = w_hat(d.w);
    const FpMatrix t = wh.inverse() * a;
    if (!t.is_diagonal()) throw Error("monomial part is not w_hat times a torus element");
    d.left = L.inverse();
    d.right = t * R.inverse();
    return d;
}

MatrixChamber SlRealization::chamber(const FpMatrix& g, Sign sign) const {
    require_sl(g);
    const auto& f = field_;
    FpMatrix a = g;
    std::vector<int> pivot(static_cast<std::size_t>(n_), -1);
    const int last = sign == Sign::Plus ? n_ - 1 : 0;
    for (int step = 0; step < n_; ++step) {
        const int j = sign == Sign::Plus ? step : n_ - 1 - step;
        // Reduce against the columns already in echelon form.
        for (int prev = 0; prev < step; ++prev) {
            const int k = sign == Sign::Plus ? prev : n_ - 1 - prev;
            const int r = pivot[static_cast<std::size_t>(k)];
            if (a(r, j)) a.add_col(j, k, f.neg(a(r, j)));
        }
        int piv = -1;
        for (int i = 0; i < n_; ++i)
            if (a(i, j) && (piv < 0 || sign == Sign::Plus)) piv = i;
        pivot[static_cast<std::size_t>(j)] = piv;
        if (j != last) {
            const int lambda = a(piv, j);
            a.scale_col(j, f.inv(lambda));
            a.scale_col(last, lambda);
        }
    }
    return {sign, a};
}

CoxeterElement SlRealization::chamber_distance(const MatrixChamber& c, const MatrixChamber& d) const {
    return decompose(c.rep.inverse() * d.rep, c.sign, d.sign).w;
}

UltFactor SlRealization::ult_factor(const FpMatrix& x) const {
    require_sl(x);
    const auto& f = field_;
    FpMatrix a = x, U = identity();
    for (int j = n_ - 1; j >= 0; --j) {
        if (a(j, j) == 0) throw NotInBigCell("trailing principal minor of order " + std::to_string(n_ - j) + " vanishes");
        const int iv = f.inv(a(j, j));
        for (int k = 0; k < j; ++k) {
            if (a(k, j) == 0) continue;
            const int c = f.neg(f.mul(a(k, j), iv));
            a.add_row(k, j, c);
            U.add_row(k, j, c);
        }
    }
    std::vector<int> d;
    for (int i = 0; i < n_; ++i) d.push_back(a(i, i));
    const FpMatrix t = FpMatrix::diagonal(p(), d);
    return {U.inverse(), t, t.inverse() * a};
}

FpMatrix SlRealization::pi(const FpMatrix& x) const {
    const auto u = ult_factor(x);
    return u.t * u.u_minus;
}

FpMatrix SlRealization::rho_w(const CoxeterElement& w, const FpMatrix& x) const { return rho_w(w, w_hat(w), x); }

FpMatrix SlRealization::rho_w(const CoxeterElement& w, const FpMatrix& w_rep, const FpMatrix& x) const {
    const auto cell = decompose(x, Sign::Plus, Sign::Minus).w;
    if (cell != weyl_.normal_form(w.word))
        throw WrongCell("element lies in B+ " + to_string(cell) + " B-, not B+ " + to_string(w) + " B-");
    return pi(w_rep.inverse() * x);
}

MatrixChamber SlRealization::coproj_formula(const FpMatrix& g, const FpMatrix& h, int s) const {
    const auto w = decompose(g.inverse() * h, Sign::Plus, Sign::Minus).w;
    return coproj_formula(g, h, s, w_hat(w), s_hat(s));
}

MatrixChamber SlRealization::coproj_formula(const FpMatrix& g, const FpMatrix& h, int s, const FpMatrix& w_rep,
                                            const FpMatrix& s_rep) const {
    const FpMatrix x = g.inverse() * h;
    const auto w = decompose(x, Sign::Plus, Sign::Minus).w;
    if (weyl_.mul_right(w, s).length() < w.length())
        throw LengthCondition("l(ws) < l(w) for w = " + to_string(w) + ", s = s" + std::to_string(s + 1));
    return chamber(h * rho_w(w, w_rep, x).inverse() * s_rep, Sign::Minus);
}

const std::vector<FpMatrix>& SlRealization::elements() const {
    if (!elements_.empty()) return elements_;
    std::vector<FpMatrix> gens;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) gens.push_back(root_element(i, j, 1));
    std::set<FpMatrix> seen{identity()};
    std::deque<FpMatrix> queue{identity()};
    while (!queue.empty()) {
        const FpMatrix g = queue.front();
        queue.pop_front();
        for (const auto& x : gens) {
            FpMatrix h = x * g;
            if (seen.insert(h).second) queue.push_back(std::move(h));
        }
    }
    elements_.assign(seen.begin(), seen.end());
    return elements_;
}

std::vector<FpMatrix> SlRealization::torus() const {
    std::vector<FpMatrix> out;
    std::vector<int> d(static_cast<std::size_t>(n_), 1);
    const auto units = field_.units();
    const auto k = units.size();
    std::vector<std::size_t> pos(static_cast<std::size_t>(n_ - 1), 0);
    for (;;) {
        int prod = 1;
        for (int i = 0; i + 1 < n_; ++i) {
            d[static_cast<std::size_t>(i)] = units[pos[static_cast<std::size_t>(i)]];
            prod = field_.mul(prod, d[static_cast<std::size_t>(i)]);
        }
        d.back() = field_.inv(prod);
        out.push_back(FpMatrix::diagonal(p(), d));
        std::size_t i = 0;
        while (i < pos.size() && ++pos[i] == k) pos[i++] = 0;
        if (i == pos.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FpMatrix> SlRealization::borel(Sign sign) const {
    std::vector<FpMatrix> out;
    for (const auto& g : elements())
        if (in_borel(g, sign)) out.push_back(g);
    return out;
}

std::uint64_t SlRealization::group_order() const {
    std::uint64_t q = static_cast<std::uint64_t>(p()), order = 1;
    for (int i = 0; i < n_ * (n_ - 1) / 2; ++i) order *= q;
    std::uint64_t qi = q;
    for (int i = 2; i <= n_; ++i) {
        qi *= q;
        order *= qi - 1;
    }
    return order;
}

SlTwinBuilding::SlTwinBuilding(int n, int p) : group_(n, p) {
    std::vector<FpMatrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) gens.push_back(group_.root_element(i, j, 1));
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
        auto& list = chambers_[idx(sg)];
        auto& index = index_[idx(sg)];
        list.push_back(group_.chamber(group_.identity(), sg));
        index.emplace(list.back().rep, 0);
        for (std::size_t k = 0; k < list.size(); ++k)
            for (const auto& x : gens) {
                auto c = group_.chamber(x * list[k].rep, sg);
                if (index.emplace(c.rep, static_cast<int>(list.size())).second) list.push_back(std::move(c));
            }
    }
}

CoxeterElement SlTwinBuilding::distance(Sign sign, int x, int y) const {
    return group_.chamber_distance(chamber({sign, x}), chamber({sign, y}));
}

CoxeterElement SlTwinBuilding::codistance(const Chamber& x, const Chamber& y) const {
    if (x.sign == y.sign) throw BadGeometry("codistance needs chambers in opposite halves");
    return group_.chamber_distance(chamber(x), chamber(y));
}

std::string SlTwinBuilding::chamber_label(const Chamber& c) const {
    return std::string(sign_name(c.sign)) + chamber(c).rep.str();
}

std::string SlTwinBuilding::name() const {
    return "sl_" + std::to_string(group_.n()) + " p=" + std::to_string(group_.p());
}

int SlTwinBuilding::index_of(const FpMatrix& g, Sign sign) const {
    return index_[idx(sign)].at(group_.chamber(g, sign).rep);
}

FpMatrix transpose_inverse(const FpMatrix& g) { return g.inverse().transpose(); }

nlohmann::json LangReport::to_json() const {
    auto strata = [](const std::map<CoxeterElement, long long>& m) {
        auto a = nlohmann::json::array();
        for (const auto& [w, k] : m) a.push_back({{"w", element_to_json(w)}, {"size", k}});
        return a;
    };
    auto cod_j = nlohmann::json::array();
    for (const auto& w : cod) cod_j.push_back(element_to_json(w));
    nlohmann::json j{{"element_strata", strata(element_strata)},
                     {"chamber_strata", strata(chamber_strata)},
                     {"cod", cod_j},
                     {"elements_checked", elements_checked},
                     {"equivalence_ok", equivalence_ok}};
    if (!equivalence_ok) j["witness"] = witness;
    return j;
}

LangReport flip_lang(const SlTwinBuilding& model, const GroupMap& theta) {
    const auto& G = model.group();
    std::set<FpMatrix> image;
    for (const auto& b : G.borel(Sign::Plus)) {
        const FpMatrix t = theta(b);
        if (!t.is_lower()) throw NotSwapping("theta maps " + b.str() + " outside B-");
        image.insert(t);
    }
    if (image.size() != G.borel(Sign::Minus).size()) throw NotSwapping("theta(B+) is a proper subset of B-");

    LangReport rep;
    for (const auto& x : G.elements()) {
        ++rep.elements_checked;
        const FpMatrix tx = theta(x);
        const auto via_lang = G.birkhoff_decompose(tx.inverse() * x).w;
        const Chamber cm{Sign::Minus, model.index_of(tx, Sign::Minus)};
        const Chamber cp{Sign::Plus, model.index_of(x, Sign::Plus)};
        const auto via_building = model.codistance(cm, cp);
        ++rep.element_strata[via_lang];
        if (via_lang != via_building && rep.equivalence_ok) {
            rep.equivalence_ok = false;
            rep.witness = {{"x", x.to_json()},
                           {"lang", element_to_json(via_lang)},
                           {"codistance", element_to_json(via_building)}};
        }
    }
    for (int c = 0; c < model.chamber_count(Sign::Plus); ++c) {
        const auto& g = model.chamber({Sign::Plus, c}).rep;
        const Chamber cm{Sign::Minus, model.index_of(theta(g), Sign::Minus)};
        ++rep.chamber_strata[model.codistance(cm, {Sign::Plus, c})];
    }
    for (const auto& kv : rep.chamber_strata) rep.cod.push_back(kv.first);
    return rep;
}

CheckResult check_decompositions(const SlRealization& g) {
    CheckResult r("decomposition_reconstruction");
    const std::pair<Sign, Sign> pairs[] = {
        {Sign::Plus, Sign::Plus}, {Sign::Minus, Sign::Minus}, {Sign::Plus, Sign::Minus}, {Sign::Minus, Sign::Plus}};
    for (const auto& x : g.elements())
        for (const auto& [l, rt] : pairs) {
            ++r.instances;
            const auto d = g.decompose(x, l, rt);
            if (!(d.left * g.w_hat(d.w) * d.right == x) || !g.in_borel(d.left, l) || !g.in_borel(d.right, rt))
                r.fail("factors do not reassemble", {{"x", x.to_json()}, {"left", sign_name(l)}, {"right", sign_name(rt)}});
        }
    return r;
}

CheckResult check_rho_membership(const SlRealization& g) {
    CheckResult r("rho_membership");
    for (const auto& x : g.elements()) {
        ++r.instances;
        const auto w = g.decompose(x, Sign::Plus, Sign::Minus).w;
        const FpMatrix rho = g.rho_w(w, x);
        const FpMatrix b = x * rho.inverse() * g.w_hat(w).inverse();
        if (!rho.is_lower() || !b.is_upper())
            r.fail("x is not in B+ w rho_w(x)", {{"x", x.to_json()}, {"w", element_to_json(w)}, {"rho", rho.to_json()}});
    }
    return r;
}

CheckResult check_rho_one_is_pi(const SlRealization& g) {
    CheckResult r("rho_one_is_pi");
    for (const auto& x : g.elements()) {
        if (!g.decompose(x, Sign::Plus, Sign::Minus).w.is_identity()) continue;
        ++r.instances;
        if (!(g.rho_w({}, x) == g.pi(x))) r.fail("rho_1(x) != pi(x)", {{"x", x.to_json()}});
    }
    return r;
}

CheckResult check_coprojection_formula(const SlTwinBuilding& model, const TwinBuilding& table, bool twisted) {
    CheckResult r(twisted ? "coprojection_formula_representatives" : "coprojection_formula");
    const auto& G = model.group();
    const auto torus = G.torus();
    const auto bp = G.borel(Sign::Plus), bm = G.borel(Sign::Minus);
    const int np = model.chamber_count(Sign::Plus), nm = model.chamber_count(Sign::Minus);
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < nm; ++y) {
            const Chamber cp{Sign::Plus, x}, cm{Sign::Minus, y};
            const auto w = model.codistance(cp, cm);
            for (int s = 0; s < G.n() - 1; ++s) {
                if (G.weyl().is_right_descent(w, s)) continue;
                const Chamber expected = coproj_panel(table, cm, s, cp);
                auto compare = [&](const FpMatrix& g, const FpMatrix& h, const FpMatrix& w_rep, const FpMatrix& s_rep) {
                    ++r.instances;
                    const auto got = G.coproj_formula(g, h, s, w_rep, s_rep);
                    const int index = model.index_of(got.rep, Sign::Minus);
                    if (index != expected.index)
                        r.fail("formula disagrees with the co-projection",
                               {{"c_plus", x}, {"c_minus", y}, {"s", s + 1}, {"formula", index}, {"expected", expected.index}});
                };
                const FpMatrix& g = model.chamber(cp).rep;
                const FpMatrix& h = model.chamber(cm).rep;
                if (!twisted) {
                    compare(g, h, G.w_hat(w), G.s_hat(s));
                    continue;
                }
                for (const auto& t : torus)
                    for (const auto& t2 : torus) compare(g, h, G.w_hat(w) * t, G.s_hat(s) * t2);
                for (std::size_t k = 0; k < bp.size(); k += std::max<std::size_t>(1, bp.size() / 5))
                    compare(g * bp[k], h * bm[bm.size() - 1 - k], G.w_hat(w), G.s_hat(s));
            }
        }
    return r;
}

} // namespace twinkit
