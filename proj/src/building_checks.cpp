#include "twinkit/building_checks.hpp"

#include <algorithm>
#include <sstream>

#include "twinkit/errors.hpp"

namespace twinkit {

namespace {

constexpr Sign kSigns[] = {Sign::Plus, Sign::Minus};

nlohmann::json cj(const TwinBuilding& b, const Chamber& c) {
    return {{"sign", sign_name(c.sign)}, {"index", c.index}, {"label", b.chamber_label(c)}};
}

nlohmann::json ej(const CoxeterElement& w) { return element_to_json(w); }

// Memoised w -> ws and w -> w^-1 u on interned ids; both only grow.
class ElementCache {
public:
    explicit ElementCache(const TwinBuilding& b) : b_(b) {}

    const CoxeterElement& times(int id, int s) {
        const auto key = std::make_pair(id, s);
        auto it = right_.find(key);
        if (it == right_.end()) it = right_.emplace(key, b_.type().mul_right(b_.element(id), s)).first;
        return it->second;
    }
    const CoxeterElement& quotient(int w, int u) {
        const auto key = std::make_pair(w, u);
        auto it = quot_.find(key);
        if (it == quot_.end())
            it = quot_.emplace(key, b_.type().multiply(b_.type().inverse(b_.element(w)), b_.element(u))).first;
        return it->second;
    }

private:
    const TwinBuilding& b_;
    std::map<std::pair<int, int>, CoxeterElement> right_;
    std::map<std::pair<int, int>, CoxeterElement> quot_;
};

bool is_generator(const TwinBuilding& b, int id, int s) {
    const auto& w = b.element(id).word;
    return w.size() == 1 && w[0] == s;
}

} // namespace

nlohmann::json AxiomReport::to_json() const {
    nlohmann::json j{{"checks", twinkit::to_json(checks)},
                     {"interior", {{"plus", interior_plus}, {"minus", interior_minus}}},
                     {"passed", passed()}};
    if (cap) j["cap"] = *cap;
    return j;
}

AxiomReport check_axioms(const TwinBuilding& b) {
    AxiomReport rep;
    rep.cap = b.length_cap();
    const auto inner_plus = b.interior(Sign::Plus);
    const auto inner_minus = b.interior(Sign::Minus);
    rep.interior_plus = static_cast<int>(inner_plus.size());
    rep.interior_minus = static_cast<int>(inner_minus.size());
    if (inner_plus.empty() || inner_minus.empty()) throw RegionTooSmall("no interior chamber to certify");

    CheckResult bu1{"Bu1"}, bu2{"Bu2"}, bu3{"Bu3"}, tw1{"Tw1"}, tw2{"Tw2"}, tw3{"Tw3"};
    ElementCache cache(b);
    const int rank = b.rank();

    for (Sign sg : kSigns) {
        const int n = b.chamber_count(sg);
        const auto& inner = sg == Sign::Plus ? inner_plus : inner_minus;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                ++bu1.instances;
                if ((b.delta_id(sg, x, y) == b.identity_id()) != (x == y))
                    bu1.fail("delta(x, y) = 1 does not match x = y",
                             {{"x", cj(b, {sg, x})}, {"y", cj(b, {sg, y})}, {"delta", ej(b.distance(sg, x, y))}});
            }
        for (int x = 0; x < n; ++x)
            for (int y : inner) {
                const int w = b.delta_id(sg, x, y);
                for (int s = 0; s < rank; ++s) {
                    const auto& ws = cache.times(w, s);
                    const bool longer = ws.length() > b.length(w);
                    bool found = false;
                    for (int z : b.panel(sg, s, y)) {
                        if (z == y) continue;
                        ++bu2.instances;
                        if (!is_generator(b, b.delta_id(sg, y, z), s)) continue;
                        const auto& got = b.element(b.delta_id(sg, x, z));
                        if (got == ws) found = true;
                        if ((longer && got != ws) || (!longer && got != ws && got != b.element(w)))
                            bu2.fail("delta(x, z) outside {ws, w}",
                                     {{"x", cj(b, {sg, x})}, {"y", cj(b, {sg, y})}, {"z", cj(b, {sg, z})},
                                      {"s", s + 1}, {"w", ej(b.element(w))}, {"got", ej(got)}});
                    }
                    ++bu3.instances;
                    if (!found)
                        bu3.fail("no z in P_s(y) with delta(x, z) = ws",
                                 {{"x", cj(b, {sg, x})}, {"y", cj(b, {sg, y})}, {"s", s + 1}, {"w", ej(b.element(w))}});
                }
            }
    }

    for (Sign sg : kSigns) {
        const Sign og = opposite(sg);
        const int n = b.chamber_count(sg);
        const int m = b.chamber_count(og);
        const auto& inner_other = og == Sign::Plus ? inner_plus : inner_minus;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < m; ++y) {
                ++tw1.instances;
                const auto& w = b.element(b.codelta_id({sg, x}, {og, y}));
                const auto& back = b.element(b.codelta_id({og, y}, {sg, x}));
                if (back != b.type().inverse(w))
                    tw1.fail("delta*(y, x) != delta*(x, y)^-1",
                             {{"x", cj(b, {sg, x})}, {"y", cj(b, {og, y})}, {"forward", ej(w)}, {"backward", ej(back)}});
            }
        for (int x = 0; x < n; ++x)
            for (int y : inner_other) {
                const int w = b.codelta_id({sg, x}, {og, y});
                for (int s = 0; s < rank; ++s) {
                    const auto& ws = cache.times(w, s);
                    const bool shorter = ws.length() < b.length(w);
                    bool found = false;
                    for (int z : b.panel(og, s, y)) {
                        if (z == y || !is_generator(b, b.delta_id(og, y, z), s)) continue;
                        ++tw2.instances;
                        const auto& got = b.element(b.codelta_id({sg, x}, {og, z}));
                        if (got == ws) found = true;
                        if (shorter && got != ws)
                            tw2.fail("delta*(x, z) != ws although l(ws) < l(w)",
                                     {{"x", cj(b, {sg, x})}, {"y", cj(b, {og, y})}, {"z", cj(b, {og, z})},
                                      {"s", s + 1}, {"w", ej(b.element(w))}, {"got", ej(got)}});
                    }
                    ++tw3.instances;
                    if (!found)
                        tw3.fail("no z in P_s(y) with delta*(x, z) = ws",
                                 {{"x", cj(b, {sg, x})}, {"y", cj(b, {og, y})}, {"s", s + 1}, {"w", ej(b.element(w))}});
                }
            }
    }
    rep.checks = {bu1, bu2, bu3, tw1, tw2, tw3};
    return rep;
}

CheckResult check_projections(const TwinBuilding& b) {
    CheckResult r{"projections"};
    const auto& W = b.type();
    for (Sign sg : kSigns)
        for (int s = 0; s < b.rank(); ++s)
            for (const auto& p : b.panels(sg, s)) {
                if (!b.is_interior({sg, p.front()})) continue;
                const Residue res{sg, GeneratorSet{s}, {sg, p.front()}, p};
                for (int c = 0; c < b.chamber_count(sg); ++c) {
                    ++r.instances;
                    Chamber q;
                    try {
                        q = proj(b, res, {sg, c});
                    } catch (const NotABuilding& e) {
                        r.fail(e.what(), {{"c", cj(b, {sg, c})}, {"panel", cj(b, res.representative)}});
                        continue;
                    }
                    const auto& to_q = b.element(b.delta_id(sg, c, q.index));
                    for (int z : p) {
                        const auto expect = W.multiply(to_q, b.element(b.delta_id(sg, q.index, z)));
                        if (b.element(b.delta_id(sg, c, z)) != expect)
                            r.fail("gate property fails",
                                   {{"c", cj(b, {sg, c})}, {"proj", cj(b, q)}, {"z", cj(b, {sg, z})}});
                    }
                }
            }
    return r;
}

CheckResult check_coprojection_agreement(const TwinBuilding& b) {
    CheckResult r{"coprojection_agreement"};
    for (Sign sg : kSigns) {
        const Sign og = opposite(sg);
        for (int s = 0; s < b.rank(); ++s)
            for (int c1 = 0; c1 < b.chamber_count(sg); ++c1)
                for (int c2 : b.panel(sg, s, c1)) {
                    if (c2 == c1) continue;
                    for (int d = 0; d < b.chamber_count(og); ++d) {
                        if (b.codelta_id({sg, c1}, {og, d}) != b.identity_id() ||
                            b.codelta_id({sg, c2}, {og, d}) != b.identity_id())
                            continue;
                        for (int t = 0; t < b.rank(); ++t) {
                            if (t == s) continue;
                            ++r.instances;
                            const auto p1 = coproj_panel(b, {og, d}, t, {sg, c1});
                            const auto p2 = coproj_panel(b, {og, d}, t, {sg, c2});
                            if (p1 != p2)
                                r.fail("co-projections differ",
                                       {{"c1", cj(b, {sg, c1})}, {"c2", cj(b, {sg, c2})}, {"d", cj(b, {og, d})},
                                        {"s", s + 1}, {"t", t + 1}, {"first", cj(b, p1)}, {"second", cj(b, p2)}});
                        }
                    }
                }
    }
    return r;
}

CheckResult check_common_opposites(const TwinBuilding& b) {
    CheckResult r{"common_opposites"};
    if (!b.is_thick()) {
        r.skip("model is not thick");
        return r;
    }
    for (Sign sg : kSigns) {
        const Sign og = opposite(sg);
        const int n = b.chamber_count(sg);
        const int m = b.chamber_count(og);
        for (int c1 = 0; c1 < n; ++c1)
            for (int c2 = c1; c2 < n; ++c2) {
                ++r.instances;
                bool found = false;
                for (int d = 0; d < m && !found; ++d)
                    found = b.codelta_id({sg, c1}, {og, d}) == b.identity_id() &&
                            b.codelta_id({sg, c2}, {og, d}) == b.identity_id();
                if (!found) r.fail("no common opposite", {{"c1", cj(b, {sg, c1})}, {"c2", cj(b, {sg, c2})}});
            }
    }
    return r;
}

CheckResult check_codistance_subexpression(const TwinBuilding& b) {
    CheckResult r{"codistance_subexpression"};
    ElementCache cache(b);
    const auto& W = b.type();
    std::map<std::pair<CoxeterElement, int>, bool> below;
    for (Sign sg : kSigns) {
        const Sign og = opposite(sg);
        const int m = b.chamber_count(og);
        for (int c = 0; c < b.chamber_count(sg); ++c)
            for (int d = 0; d < m; ++d) {
                const int w = b.codelta_id({sg, c}, {og, d});
                for (int e = 0; e < m; ++e) {
                    ++r.instances;
                    const int v = b.delta_id(og, d, e);
                    const auto& vprime = cache.quotient(w, b.codelta_id({sg, c}, {og, e}));
                    auto key = std::make_pair(vprime, v);
                    auto it = below.find(key);
                    if (it == below.end()) it = below.emplace(key, W.bruhat_leq(vprime, b.element(v))).first;
                    if (!it->second)
                        r.fail("w^-1 delta*(c, e) is not below delta(d, e)",
                               {{"c", cj(b, {sg, c})}, {"d", cj(b, {og, d})}, {"e", cj(b, {og, e})},
                                {"w", ej(b.element(w))}, {"v", ej(b.element(v))}, {"v_prime", ej(vprime)}});
                }
            }
    }
    return r;
}

CheckResult check_opposite_witness(const TwinBuilding& b) {
    CheckResult r{"opposite_witness"};
    if (!b.is_thick()) {
        r.skip("model is not thick");
        return r;
    }
    const auto& W = b.type();
    for (Sign sg : kSigns) {
        const Sign og = opposite(sg);
        const int n = b.chamber_count(sg);
        const int m = b.chamber_count(og);
        for (int cp = 0; cp < n; ++cp)
            for (int cm = 0; cm < m; ++cm) {
                if (b.codelta_id({sg, cp}, {og, cm}) != b.identity_id()) continue;
                // E*_w(c-) for every realized w.
                std::map<int, std::vector<int>> cells;
                for (int x = 0; x < n; ++x) cells[b.codelta_id({og, cm}, {sg, x})].push_back(x);
                for (const auto& [w, cell] : cells) {
                    if (w == b.identity_id()) continue;
                    for (int s : W.descents(b.element(w), Side::Right).elements()) {
                        ++r.instances;
                        bool found = false;
                        for (int d = 0; d < m && !found; ++d) {
                            if (b.codelta_id({sg, cp}, {og, d}) != b.identity_id()) continue;
                            found = std::all_of(cell.begin(), cell.end(), [&](int x) {
                                return is_generator(b, b.codelta_id({sg, x}, {og, d}), s);
                            });
                        }
                        if (!found)
                            r.fail("no opposite chamber at codistance s from the whole co-Schubert cell",
                                   {{"c_plus", cj(b, {sg, cp})}, {"c_minus", cj(b, {og, cm})},
                                    {"w", ej(b.element(w))}, {"s", s + 1}});
                    }
                }
            }
    }
    return r;
}

CheckResult check_twin_apartments(const TwinBuilding& b) {
    CheckResult r{"twin_apartments"};
    const auto info = b.type().parabolic_info(GeneratorSet::all(b.rank()));
    for (Sign sg : kSigns) {
        const Sign og = opposite(sg);
        for (int c : b.interior(sg))
            for (int d : b.interior(og)) {
                if (b.codelta_id({sg, c}, {og, d}) != b.identity_id()) continue;
                ++r.instances;
                try {
                    const auto apt = twin_apartment(b, {sg, c}, {og, d});
                    if (info.finite && !b.length_cap() && apt.plus.size() != *info.order)
                        r.fail("apartment has the wrong size", {{"c", cj(b, {sg, c})}, {"d", cj(b, {og, d})}});
                } catch (const Error& e) {
                    r.fail(e.what(), {{"c", cj(b, {sg, c})}, {"d", cj(b, {og, d})}});
                }
            }
    }
    return r;
}

CheckResult check_retractions(const TwinBuilding& b) {
    CheckResult r{"retractions"};
    for (Sign sg : kSigns) {
        const Sign og = opposite(sg);
        const Chamber c{sg, 0};
        for (int d = 0; d < b.chamber_count(og); ++d) {
            if (b.codelta_id(c, {og, d}) != b.identity_id()) continue;
            TwinApartment apt;
            try {
                apt = twin_apartment(b, c, {og, d});
            } catch (const Error& e) {
                r.fail(e.what(), {{"c", cj(b, c)}, {"d", cj(b, {og, d})}});
                continue;
            }
            for (Sign half : kSigns) {
                std::vector<int> image;
                for (int x = 0; x < b.chamber_count(half); ++x) {
                    Chamber rx;
                    try {
                        rx = retraction(b, apt, c, {half, x});
                    } catch (const RegionTooSmall&) {
                        image.push_back(-1);
                        continue;
                    }
                    image.push_back(rx.index);
                    if (apt.contains({half, x}) && rx.index != x)
                        r.fail("retraction moves an apartment chamber", {{"c", cj(b, c)}, {"x", cj(b, {half, x})}});
                }
                for (int x = 0; x < b.chamber_count(half); ++x)
                    for (int y = 0; y < b.chamber_count(half); ++y) {
                        const int rx = image[static_cast<std::size_t>(x)], ry = image[static_cast<std::size_t>(y)];
                        if (rx < 0 || ry < 0) continue;
                        ++r.instances;
                        if (b.length(b.delta_id(half, rx, ry)) > b.length(b.delta_id(half, x, y)))
                            r.fail("retraction increases a distance",
                                   {{"c", cj(b, c)}, {"x", cj(b, {half, x})}, {"y", cj(b, {half, y})}});
                    }
            }
        }
    }
    return r;
}

CheckResult check_census(const TwinBuilding& b) {
    CheckResult r{"census"};
    for (Sign sg : kSigns)
        for (int c = 0; c < b.chamber_count(sg); ++c) {
            ++r.instances;
            const auto cen = schubert_census(b, {sg, c});
            long long opposite_count = 0;
            for (int y = 0; y < b.chamber_count(opposite(sg)); ++y)
                if (b.codelta_id({sg, c}, {opposite(sg), y}) == b.identity_id()) ++opposite_count;
            const auto it = cen.coschubert.find(CoxeterElement{});
            const long long e1 = it == cen.coschubert.end() ? 0 : it->second;
            if (!cen.partition_ok || cen.total_schubert != b.chamber_count(sg) ||
                cen.total_coschubert != b.chamber_count(opposite(sg)) || e1 != opposite_count)
                r.fail("cells do not partition the halves", {{"c", cj(b, {sg, c})}});
        }
    return r;
}

nlohmann::json PanelMultiplication::to_json() const {
    return {{"c_plus", chamber_to_json(c_plus)},
            {"c_minus", chamber_to_json(c_minus)},
            {"r", r + 1},
            {"s", s + 1},
            {"zero_plus", chamber_to_json(zero_plus)},
            {"zero_minus", chamber_to_json(zero_minus)},
            {"one_minus", chamber_to_json(one_minus)},
            {"rows", rows},
            {"columns", columns},
            {"table", table},
            {"identity_ok", identity_ok},
            {"zero_ok", zero_ok},
            {"closed", closed},
            {"bijective", bijective}};
}

PanelMultiplication panel_mul(const TwinBuilding& b, const Chamber& c_plus, const Chamber& c_minus, int r, int s,
                              const Chamber& one_minus) {
    const auto& M = b.type().matrix();
    if (r < 0 || s < 0 || r >= b.rank() || s >= b.rank()) throw IndexOutOfRange("panel type outside the generating set");
    if (r == s || (!M.is_infinite(r, s) && M(r, s) < 3)) throw BadGeometry("panel multiplication needs m_rs >= 3");
    if (c_plus.sign == c_minus.sign || b.codelta_id(c_plus, c_minus) != b.identity_id())
        throw BadGeometry("base chambers are not opposite");

    PanelMultiplication pm;
    pm.c_plus = c_plus;
    pm.c_minus = c_minus;
    pm.r = r;
    pm.s = s;
    pm.one_minus = one_minus;
    pm.zero_plus = coproj_panel(b, c_plus, r, c_minus);
    pm.zero_minus = coproj_panel(b, c_minus, s, c_plus);
    const auto& ps = b.panel(c_minus.sign, s, c_minus.index);
    if (one_minus.sign != c_minus.sign || !std::binary_search(ps.begin(), ps.end(), one_minus.index) ||
        one_minus == c_minus || one_minus == pm.zero_minus)
        throw BadGeometry("1_- must lie in the punctured s-panel of c_- and differ from 0_-");
    pm.d_plus = coproj_panel(b, c_plus, s, c_minus);

    for (int x : b.panel(c_plus.sign, r, c_plus.index))
        if (x != c_plus.index) pm.rows.push_back(x);
    for (int y : ps)
        if (y != c_minus.index) pm.columns.push_back(y);

    for (int x : pm.rows) {
        std::vector<int> row;
        const auto a = coproj_panel(b, one_minus, r, {c_plus.sign, x});
        const auto dd = coproj_panel(b, pm.d_plus, r, a);
        for (int y : pm.columns) {
            const auto e = coproj_panel(b, {c_minus.sign, y}, r, dd);
            row.push_back(coproj_panel(b, c_plus, r, e).index);
        }
        pm.table.push_back(std::move(row));
    }

    for (std::size_t i = 0; i < pm.rows.size(); ++i)
        for (std::size_t j = 0; j < pm.columns.size(); ++j) {
            const int v = pm.table[i][j];
            if (v == c_plus.index) pm.closed = false;
            if (pm.columns[j] == one_minus.index && v != pm.rows[i]) pm.identity_ok = false;
            if (pm.columns[j] == pm.zero_minus.index && v != pm.zero_plus.index) pm.zero_ok = false;
        }
    for (std::size_t j = 0; j < pm.columns.size(); ++j) {
        if (pm.columns[j] == pm.zero_minus.index) continue;
        std::vector<int> col;
        for (std::size_t i = 0; i < pm.rows.size(); ++i) col.push_back(pm.table[i][j]);
        std::sort(col.begin(), col.end());
        if (col != pm.rows) pm.bijective = false;
    }
    return pm;
}

CheckResult check_panel_multiplication(const TwinBuilding& b) {
    CheckResult res{"panel_multiplication"};
    if (!b.is_thick()) {
        res.skip("model is not thick");
        return res;
    }
    const auto& M = b.type().matrix();
    for (Sign sg : kSigns) {
        const Sign og = opposite(sg);
        for (int cp = 0; cp < b.chamber_count(sg); ++cp)
            for (int cm = 0; cm < b.chamber_count(og); ++cm) {
                if (b.codelta_id({sg, cp}, {og, cm}) != b.identity_id()) continue;
                for (int r = 0; r < b.rank(); ++r)
                    for (int s = 0; s < b.rank(); ++s) {
                        if (r == s || (!M.is_infinite(r, s) && M(r, s) < 3)) continue;
                        const auto zero = coproj_panel(b, {og, cm}, s, {sg, cp});
                        for (int one : b.panel(og, s, cm)) {
                            if (one == cm || one == zero.index) continue;
                            ++res.instances;
                            const auto pm = panel_mul(b, {sg, cp}, {og, cm}, r, s, {og, one});
                            if (!pm.ok()) res.fail("panel multiplication identities fail", pm.to_json());
                        }
                    }
            }
    }
    return res;
}

nlohmann::json Stratification::to_json() const {
    auto strata_j = nlohmann::json::array();
    for (const auto& [w, n] : strata) strata_j.push_back({{"w", ej(w)}, {"size", n}});
    auto closure_j = nlohmann::json::array();
    for (const auto& [w, up] : closure) {
        auto ups = nlohmann::json::array();
        for (const auto& u : up) ups.push_back(ej(u));
        closure_j.push_back({{"w", ej(w)}, {"reachable", ups}});
    }
    auto steps = [](const std::set<std::pair<CoxeterElement, CoxeterElement>>& e) {
        auto a = nlohmann::json::array();
        for (const auto& [u, v] : e) a.push_back({ej(u), ej(v)});
        return a;
    };
    nlohmann::json j{{"d", chamber_to_json(d)},        {"strata", strata_j},
                     {"profiles_ok", profiles_ok},      {"closure_ok", closure_ok},
                     {"right_steps", steps(right_steps)}, {"left_steps", steps(left_steps)},
                     {"closure", closure_j}};
    if (!witness.is_null()) j["witness"] = witness;
    return j;
}

std::string Stratification::to_dot(const CoxeterSystem& sys) const {
    std::ostringstream os;
    std::map<CoxeterElement, int> id;
    os << "digraph strata {\n  rankdir=BT;\n";
    for (const auto& [w, n] : strata) {
        const int k = static_cast<int>(id.size());
        id[w] = k;
        os << "  n" << k << " [label=\"" << to_string(w) << " (" << n << ")\"];\n";
    }
    std::set<std::pair<CoxeterElement, CoxeterElement>> all = right_steps;
    all.insert(left_steps.begin(), left_steps.end());
    for (const auto& [u, v] : all) {
        // Keep covering relations only.
        if (v.length() != u.length() + 1 || !sys.bruhat_leq(u, v)) continue;
        os << "  n" << id.at(u) << " -> n" << id.at(v) << ";\n";
    }
    os << "}\n";
    return os.str();
}

Stratification stratification(const TwinBuilding& b, const Chamber& d) {
    const auto& W = b.type();
    const Sign og = opposite(d.sign);
    Stratification st;
    st.d = d;
    for (int c = 0; c < b.chamber_count(og); ++c) ++st.strata[b.element(b.codelta_id(d, {og, c}))];

    for (int s = 0; s < b.rank(); ++s) {
        for (const auto& p : b.panels(og, s)) {
            if (!b.is_interior({og, p.front()})) continue;
            std::map<int, long long> values;
            for (int c : p) ++values[b.codelta_id(d, {og, c})];
            PanelProfile prof;
            prof.type = s;
            prof.member = {og, p.front()};
            bool ok = values.size() == 2;
            if (ok) {
                auto a = values.begin(), z = std::next(a);
                if (b.length(a->first) > b.length(z->first)) std::swap(a, z);
                prof.shorter = b.element(a->first);
                prof.longer = b.element(z->first);
                prof.shorter_count = a->second;
                prof.longer_count = z->second;
                ok = W.mul_right(prof.shorter, s) == prof.longer && prof.longer_count == 1 &&
                     prof.shorter_count == static_cast<long long>(p.size()) - 1;
                if (ok) st.right_steps.emplace(prof.shorter, prof.longer);
            }
            if (!ok && st.profiles_ok) {
                st.profiles_ok = false;
                auto vals = nlohmann::json::array();
                for (const auto& [id, n] : values) vals.push_back({{"w", ej(b.element(id))}, {"count", n}});
                st.witness = {{"panel_type", s + 1}, {"member", cj(b, prof.member)}, {"values", vals}};
            }
            st.profiles.push_back(std::move(prof));
        }
        // Left steps move d inside its own s-panel.
        for (int dp : b.panel(d.sign, s, d.index)) {
            if (dp == d.index) continue;
            for (int c = 0; c < b.chamber_count(og); ++c) {
                const auto& u = b.element(b.codelta_id(d, {og, c}));
                const auto& v = b.element(b.codelta_id({d.sign, dp}, {og, c}));
                if (v.length() > u.length() && W.mul_left(s, u) == v) st.left_steps.emplace(u, v);
            }
        }
    }

    std::map<CoxeterElement, std::vector<CoxeterElement>> adj;
    for (const auto& [u, v] : st.right_steps) adj[u].push_back(v);
    for (const auto& [u, v] : st.left_steps) adj[u].push_back(v);
    for (const auto& [w, n] : st.strata) {
        std::set<CoxeterElement> seen{w};
        std::vector<CoxeterElement> stack{w};
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (const auto& v : adj[u])
                if (seen.insert(v).second) stack.push_back(v);
        }
        std::set<CoxeterElement> filter;
        for (const auto& [v, k] : st.strata)
            if (W.bruhat_leq(w, v)) filter.insert(v);
        if (seen != filter && st.closure_ok) {
            st.closure_ok = false;
            auto a = nlohmann::json::array(), f = nlohmann::json::array();
            for (const auto& v : seen) a.push_back(ej(v));
            for (const auto& v : filter) f.push_back(ej(v));
            st.witness = {{"w", ej(w)}, {"reachable", a}, {"bruhat_filter", f}};
        }
        st.closure[w] = std::move(seen);
    }
    return st;
}

CheckResult check_stratification(const TwinBuilding& b) {
    CheckResult r{"stratification"};
    if (b.length_cap()) {
        r.skip("length-capped model: strata near the boundary are truncated");
        return r;
    }
    for (Sign sg : kSigns)
        for (int d : b.interior(sg)) {
            ++r.instances;
            const auto st = stratification(b, {sg, d});
            if (!st.ok()) r.fail(st.profiles_ok ? "reachability differs from the Bruhat filter" : "bad panel profile",
                                 {{"d", cj(b, {sg, d})}, {"detail", st.witness}});
        }
    return r;
}

nlohmann::json DimensionReport::to_json() const {
    nlohmann::json j{{"well_defined", well_defined},
                     {"constant_on_odd_components", constant_on_odd_components},
                     {"consistent", consistent()},
                     {"elements_checked", elements_checked}};
    if (offender) {
        auto one = [](const std::vector<int>& w) {
            auto a = nlohmann::json::array();
            for (int s : w) a.push_back(s + 1);
            return a;
        };
        j["offender"] = {{"w", ej(*offender)}, {"words", {one(word_a), one(word_b)}}};
    }
    return j;
}

DimensionReport check_dimension_function(const CoxeterSystem& sys, const std::vector<int>& d, int cap) {
    if (static_cast<int>(d.size()) != sys.rank()) throw MalformedInput("dimension vector has the wrong length");
    DimensionReport rep;
    const int n = sys.rank();
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = i;
    // Components of the graph of odd labels; labels are in {2,3,4,6,inf}, so odd means 3.
    auto find = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sys.matrix()(i, j) == 3) comp[static_cast<std::size_t>(find(j))] = find(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (find(i) == find(j) && d[static_cast<std::size_t>(i)] != d[static_cast<std::size_t>(j)])
                rep.constant_on_odd_components = false;

    for (const auto& level : sys.enumerate_upto(cap)) {
        for (const auto& w : level) {
            ++rep.elements_checked;
            if (!rep.well_defined) continue;
            const auto words = sys.reduced_words(w);
            auto weight = [&](const std::vector<int>& word) {
                int t = 0;
                for (int s : word) t += d[static_cast<std::size_t>(s)];
                return t;
            };
            for (const auto& word : words)
                if (weight(word) != weight(words.front())) {
                    rep.well_defined = false;
                    rep.offender = w;
                    rep.word_a = words.front();
                    rep.word_b = word;
                    break;
                }
        }
    }
    return rep;
}

CheckResult check_cell_sizes(const TwinBuilding& b) {
    CheckResult r("cell_sizes");
    if (b.length_cap()) {
        r.skip("cell sizes need the full building");
        return r;
    }
    std::vector<long long> q;
    bool uniform = true;
    for (int s = 0; s < b.rank(); ++s) {
        q.push_back(static_cast<long long>(b.panel(Sign::Plus, s, 0).size()) - 1);
        if (q.back() != q.front()) uniform = false;
    }
    const auto info = b.type().parabolic_info(GeneratorSet::all(b.rank()));
    for (Sign sg : {Sign::Plus, Sign::Minus})
        for (int c = 0; c < b.chamber_count(sg); ++c) {
            const auto census = schubert_census(b, {sg, c});
            for (const auto& [w, size] : census.schubert) {
                long long want = 1;
                for (int s : w.word) want *= q[static_cast<std::size_t>(s)];
                ++r.instances;
                if (size != want)
                    r.fail("|E_w(c)| differs from the panel product",
                           {{"c", chamber_to_json({sg, c})}, {"w", element_to_json(w)}, {"size", size}, {"expected", want}});
            }
            if (!info.finite || !uniform) continue;
            for (const auto& [w, size] : census.coschubert) {
                long long want = 1;
                for (int k = w.length(); k < info.longest->length(); ++k) want *= q.front();
                ++r.instances;
                if (size != want)
                    r.fail("|E*_w(c)| differs from q^(l(w_0) - l(w))",
                           {{"c", chamber_to_json({sg, c})}, {"w", element_to_json(w)}, {"size", size}, {"expected", want}});
            }
        }
    return r;
}

CheckResult check_gallery_spaces(const TwinBuilding& b, int max_length) {
    CheckResult r("gallery_spaces");
    if (b.length_cap()) max_length = std::min(max_length, *b.length_cap());
    std::vector<std::vector<int>> words{{}};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (int s = 0; s < b.rank(); ++s) {
                    auto v = w;
                    v.push_back(s);
                    next.push_back(v);
                }
        words.insert(words.end(), next.begin(), next.end());
    }
    for (Sign sg : {Sign::Plus, Sign::Minus})
        for (const auto& type : words) {
            const auto g = gallery_space(b, type, {sg, 0});
            ++r.instances;
            auto word = nlohmann::json::array();
            for (int s : type) word.push_back(s + 1);
            if (!g.fibration_ok) r.fail("gallery counts are not a product of panel sizes", {{"type", word}, {"sign", sign_name(sg)}});
            if (g.reduced && !g.endpoint_surjective)
                r.fail("endpoints miss the Bruhat ball", {{"type", word}, {"sign", sign_name(sg)}});
            if (g.reduced && !g.open_cell_unique)
                r.fail("open-cell endpoint without a unique non-stammering gallery", {{"type", word}, {"sign", sign_name(sg)}});
        }
    return r;
}

} // namespace twinkit
