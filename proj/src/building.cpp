#include "twinkit/building.hpp"

#include <algorithm>
#include <set>

#include "twinkit/errors.hpp"

namespace twinkit {

const char* sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

nlohmann::json chamber_to_json(const Chamber& c) { return {{"sign", sign_name(c.sign)}, {"index", c.index}}; }

Chamber chamber_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("sign") || !j.contains("index"))
        throw MalformedInput("chamber must be {\"sign\": \"+\"|\"-\", \"index\": n}");
    const auto s = j.at("sign").get<std::string>();
    if (s != "+" && s != "-") throw MalformedInput("chamber sign must be \"+\" or \"-\"");
    return {s == "+" ? Sign::Plus : Sign::Minus, j.at("index").get<int>()};
}

std::string TwinBuildingModel::chamber_label(const Chamber& c) const {
    return std::string(sign_name(c.sign)) + std::to_string(c.index);
}

TwinBuilding TwinBuilding::tabulate(const TwinBuildingModel& model) {
    std::array<std::vector<std::string>, 2> labels;
    std::array<std::vector<CoxeterElement>, 2> dist, cod;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        const int n = model.chamber_count(s);
        const int m = model.chamber_count(opposite(s));
        for (int x = 0; x < n; ++x) labels[idx(s)].push_back(model.chamber_label({s, x}));
        dist[idx(s)].reserve(static_cast<std::size_t>(n * n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) dist[idx(s)].push_back(model.distance(s, x, y));
        cod[idx(s)].reserve(static_cast<std::size_t>(n * m));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < m; ++y) cod[idx(s)].push_back(model.codistance({s, x}, {opposite(s), y}));
    }
    return TwinBuilding(model.type(), model.name(), std::move(labels), std::move(dist), std::move(cod),
                        model.length_cap(), model.metadata());
}

TwinBuilding::TwinBuilding(CoxeterSystem type, std::string name, std::array<std::vector<std::string>, 2> labels,
                           std::array<std::vector<CoxeterElement>, 2> distances,
                           std::array<std::vector<CoxeterElement>, 2> codistances, std::optional<int> cap,
                           nlohmann::json metadata)
    : type_(std::move(type)), name_(std::move(name)), labels_(std::move(labels)), cap_(cap),
      metadata_(std::move(metadata)) {
    identity_id_ = intern(CoxeterElement{});
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        const auto n = labels_[idx(s)].size();
        const auto m = labels_[idx(opposite(s))].size();
        if (n == 0) throw MalformedInput("empty half");
        if (distances[idx(s)].size() != n * n) throw MalformedInput("distance table has the wrong size");
        if (codistances[idx(s)].size() != n * m) throw MalformedInput("codistance table has the wrong size");
        for (const auto& w : distances[idx(s)]) dist_[idx(s)].push_back(intern(w));
        for (const auto& w : codistances[idx(s)]) cod_[idx(s)].push_back(intern(w));
    }
    finish();
}

int TwinBuilding::intern(const CoxeterElement& w) {
    for (int s : w.word)
        if (s < 0 || s >= rank()) throw IndexOutOfRange("element letter outside the type");
    auto [it, fresh] = element_ids_.emplace(w, static_cast<int>(elements_.size()));
    if (fresh) elements_.push_back(w);
    return it->second;
}

void TwinBuilding::finish() {
    const int k = element_count();
    bruhat_.assign(static_cast<std::size_t>(k * k), 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            bruhat_[static_cast<std::size_t>(a * k + b)] = type_.bruhat_leq(element(a), element(b)) ? 1 : 0;

    for (Sign sg : {Sign::Plus, Sign::Minus}) {
        const int n = chamber_count(sg);
        auto& of = panel_of_[idx(sg)];
        auto& ps = panels_[idx(sg)];
        of.assign(static_cast<std::size_t>(rank()), std::vector<int>(static_cast<std::size_t>(n), -1));
        ps.assign(static_cast<std::size_t>(rank()), {});
        for (int s = 0; s < rank(); ++s) {
            const auto gen = find_element(type_.generator(s));
            for (int x = 0; x < n; ++x) {
                if (of[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)] >= 0) continue;
                std::vector<int> members;
                for (int y = 0; y < n; ++y) {
                    const int d = delta_id(sg, x, y);
                    if (d == identity_id_ || (gen && d == *gen)) members.push_back(y);
                }
                const int id = static_cast<int>(ps[static_cast<std::size_t>(s)].size());
                for (int y : members) of[static_cast<std::size_t>(s)][static_cast<std::size_t>(y)] = id;
                ps[static_cast<std::size_t>(s)].push_back(std::move(members));
            }
        }
        auto& bl = base_length_[idx(sg)];
        bl.resize(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) bl[static_cast<std::size_t>(x)] = length(delta_id(sg, 0, x));
    }
}

std::string TwinBuilding::chamber_label(const Chamber& c) const {
    return labels_[idx(c.sign)].at(static_cast<std::size_t>(c.index));
}

int TwinBuilding::delta_id(Sign sign, int x, int y) const {
    const int n = chamber_count(sign);
    return dist_[idx(sign)][static_cast<std::size_t>(x * n + y)];
}

int TwinBuilding::codelta_id(const Chamber& x, const Chamber& y) const {
    if (x.sign == y.sign) throw BadGeometry("codistance needs chambers in opposite halves");
    const int m = chamber_count(y.sign);
    return cod_[idx(x.sign)][static_cast<std::size_t>(x.index * m + y.index)];
}

std::optional<int> TwinBuilding::find_element(const CoxeterElement& w) const {
    if (auto it = element_ids_.find(w); it != element_ids_.end()) return it->second;
    return std::nullopt;
}

const std::vector<int>& TwinBuilding::panel(Sign sign, int s, int x) const {
    const auto su = static_cast<std::size_t>(s);
    return panels_[idx(sign)].at(su)[static_cast<std::size_t>(panel_of_[idx(sign)][su].at(static_cast<std::size_t>(x)))];
}

const std::vector<std::vector<int>>& TwinBuilding::panels(Sign sign, int s) const {
    return panels_[idx(sign)].at(static_cast<std::size_t>(s));
}

bool TwinBuilding::is_interior(const Chamber& c) const {
    if (!cap_) return true;
    return base_length_[idx(c.sign)][static_cast<std::size_t>(c.index)] <= *cap_ - 1;
}

std::vector<int> TwinBuilding::interior(Sign sign) const {
    std::vector<int> out;
    for (int x = 0; x < chamber_count(sign); ++x)
        if (is_interior({sign, x})) out.push_back(x);
    return out;
}

bool TwinBuilding::is_thick() const {
    for (Sign sg : {Sign::Plus, Sign::Minus})
        for (int s = 0; s < rank(); ++s)
            for (int x : interior(sg))
                if (panel(sg, s, x).size() < 3) return false;
    return true;
}

bool TwinBuilding::is_thin() const {
    for (Sign sg : {Sign::Plus, Sign::Minus})
        for (int s = 0; s < rank(); ++s)
            for (const auto& p : panels(sg, s))
                if (p.size() > 2) return false;
    return true;
}

TwinBuilding TwinBuilding::with_codistance(const Chamber& x, const Chamber& y, const CoxeterElement& w) const {
    if (x.sign == y.sign) throw BadGeometry("codistance needs chambers in opposite halves");
    TwinBuilding out = *this;
    const int id = out.intern(w);
    const int m = chamber_count(y.sign);
    out.cod_[idx(x.sign)].at(static_cast<std::size_t>(x.index * m + y.index)) = id;
    out.finish();
    return out;
}

bool Residue::contains(int x) const { return std::binary_search(chambers.begin(), chambers.end(), x); }

Residue residue(const TwinBuilding& b, const Chamber& c, GeneratorSet j) {
    Residue r{c.sign, j, c, {}};
    for (int y = 0; y < b.chamber_count(c.sign); ++y)
        if (b.type().in_parabolic(b.element(b.delta_id(c.sign, c.index, y)), j)) r.chambers.push_back(y);
    return r;
}

Residue panel_residue(const TwinBuilding& b, const Chamber& c, int s) {
    if (s < 0 || s >= b.rank()) throw IndexOutOfRange("panel type outside the generating set");
    return Residue{c.sign, GeneratorSet{s}, c, b.panel(c.sign, s, c.index)};
}

Chamber proj(const TwinBuilding& b, const Residue& r, const Chamber& c) {
    if (c.sign != r.sign) throw BadGeometry("projection needs a chamber in the residue's half");
    int best = -1, best_len = 0;
    bool tie = false;
    for (int y : r.chambers) {
        const int l = b.length(b.delta_id(c.sign, c.index, y));
        if (best < 0 || l < best_len) {
            best = y;
            best_len = l;
            tie = false;
        } else if (l == best_len) {
            tie = true;
        }
    }
    if (best < 0) throw BadGeometry("empty residue");
    if (tie) throw NotABuilding("projection onto residue of " + b.chamber_label(r.representative) + " from " +
                                b.chamber_label(c) + " is not unique");
    return {r.sign, best};
}

Chamber coproj(const TwinBuilding& b, const Residue& r, const Chamber& c) {
    if (c.sign == r.sign) throw BadGeometry("co-projection needs a chamber in the opposite half");
    if (!b.type().parabolic_info(r.type).finite) throw NotSpherical("co-projection onto a non-spherical residue");
    // Maximal elements of the codistance set; exactly one chamber may carry the maximum.
    std::vector<int> ids;
    ids.reserve(r.chambers.size());
    for (int y : r.chambers) ids.push_back(b.codelta_id(c, {r.sign, y}));
    int found = -1;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        bool maximum = true;
        for (std::size_t k = 0; k < ids.size() && maximum; ++k)
            if (!b.leq(ids[k], ids[i])) maximum = false;
        if (!maximum) continue;
        if (found >= 0)
            throw NotABuilding("co-projection of " + b.chamber_label(c) + " onto residue of " +
                               b.chamber_label(r.representative) + " is not unique");
        found = r.chambers[i];
    }
    if (found < 0)
        throw NotABuilding("no Bruhat-maximum codistance from " + b.chamber_label(c) + " onto residue of " +
                           b.chamber_label(r.representative));
    return {r.sign, found};
}

Chamber coproj_panel(const TwinBuilding& b, const Chamber& p, int s, const Chamber& c) {
    const auto& members = b.panel(p.sign, s, p.index);
    if (c.sign == p.sign) throw BadGeometry("co-projection needs a chamber in the opposite half");
    int found = -1;
    for (int y : members) {
        const int id = b.codelta_id(c, {p.sign, y});
        bool maximum = true;
        for (int z : members)
            if (!b.leq(b.codelta_id(c, {p.sign, z}), id)) {
                maximum = false;
                break;
            }
        if (!maximum) continue;
        if (found >= 0)
            throw NotABuilding("co-projection of " + b.chamber_label(c) + " onto panel of " + b.chamber_label(p) +
                               " is not unique");
        found = y;
    }
    if (found < 0) throw NotABuilding("no Bruhat-maximum codistance onto panel of " + b.chamber_label(p));
    return {p.sign, found};
}

bool TwinApartment::contains(const Chamber& x) const {
    const auto& h = half(x.sign);
    return std::binary_search(h.begin(), h.end(), x.index);
}

TwinApartment twin_apartment(const TwinBuilding& b, const Chamber& c, const Chamber& d) {
    if (c.sign == d.sign || b.codelta_id(c, d) != b.identity_id())
        throw NotOpposite(b.chamber_label(c) + " and " + b.chamber_label(d) + " are not opposite");
    TwinApartment apt{c, d, {}, {}};
    auto collect = [&](const Chamber& centre, const Chamber& other) {
        std::vector<int> out;
        for (int x = 0; x < b.chamber_count(centre.sign); ++x)
            if (b.delta_id(centre.sign, centre.index, x) == b.codelta_id(other, {centre.sign, x})) out.push_back(x);
        return out;
    };
    (c.sign == Sign::Plus ? apt.plus : apt.minus) = collect(c, d);
    (d.sign == Sign::Plus ? apt.plus : apt.minus) = collect(d, c);

    // Isometry with the thin model: x -> delta(c, x) on one half, y -> delta(d, y) on the other.
    const auto& sc = apt.half(c.sign);
    const auto& sd = apt.half(d.sign);
    const auto& W = b.type();
    auto coordinate = [&](const Chamber& centre, int x) { return b.element(b.delta_id(centre.sign, centre.index, x)); };
    std::set<CoxeterElement> seen_c, seen_d;
    for (int x : sc) seen_c.insert(coordinate(c, x));
    for (int y : sd) seen_d.insert(coordinate(d, y));
    if (seen_c.size() != sc.size() || seen_d.size() != sd.size())
        throw NotABuilding("twin apartment coordinates are not injective");
    const auto info = W.parabolic_info(GeneratorSet::all(W.rank()));
    if (info.finite && !b.length_cap() && (sc.size() != *info.order || sd.size() != *info.order))
        throw NotABuilding("twin apartment does not have |W| chambers per half");
    for (int x : sc)
        for (int y : sc)
            if (b.element(b.delta_id(c.sign, x, y)) != W.multiply(W.inverse(coordinate(c, x)), coordinate(c, y)))
                throw NotABuilding("twin apartment half is not isometric to W");
    for (int x : sd)
        for (int y : sd)
            if (b.element(b.delta_id(d.sign, x, y)) != W.multiply(W.inverse(coordinate(d, x)), coordinate(d, y)))
                throw NotABuilding("twin apartment half is not isometric to W");
    for (int x : sc) {
        int partners = 0;
        for (int y : sd) {
            const auto expect = W.multiply(W.inverse(coordinate(c, x)), coordinate(d, y));
            const int id = b.codelta_id({c.sign, x}, {d.sign, y});
            if (b.element(id) != expect) throw NotABuilding("twin apartment codistance differs from the thin model");
            if (id == b.identity_id()) ++partners;
        }
        if (partners != 1) throw NotABuilding("twin apartment chamber is not opposite exactly one chamber");
    }
    return apt;
}

Chamber retraction(const TwinBuilding& b, const TwinApartment& apt, const Chamber& c, const Chamber& x) {
    if (!apt.contains(c)) throw NotInApartment(b.chamber_label(c) + " is not in the twin apartment");
    const bool same = x.sign == c.sign;
    const int target = same ? b.delta_id(c.sign, c.index, x.index) : b.codelta_id(c, x);
    int found = -1;
    for (int y : apt.half(x.sign)) {
        const int v = same ? b.delta_id(c.sign, c.index, y) : b.codelta_id(c, {x.sign, y});
        if (v != target) continue;
        if (found >= 0) throw NotABuilding("retraction image is not unique");
        found = y;
    }
    if (found < 0) throw RegionTooSmall("retraction image of " + b.chamber_label(x) + " lies outside the region");
    return {x.sign, found};
}

nlohmann::json Census::to_json() const {
    auto cells = [](const std::map<CoxeterElement, long long>& m) {
        auto a = nlohmann::json::array();
        for (const auto& [w, n] : m) a.push_back({{"w", element_to_json(w)}, {"size", n}});
        return a;
    };
    nlohmann::json j{{"base", chamber_to_json(base)},
                     {"schubert", cells(schubert)},
                     {"coschubert", cells(coschubert)},
                     {"total_schubert", total_schubert},
                     {"total_coschubert", total_coschubert},
                     {"partition_ok", partition_ok}};
    if (cap) j["cap"] = *cap;
    return j;
}

Census schubert_census(const TwinBuilding& b, const Chamber& c, std::optional<int> cap) {
    Census out;
    out.base = c;
    out.cap = cap;
    const int n = b.chamber_count(c.sign);
    const int m = b.chamber_count(opposite(c.sign));
    std::vector<long long> by_id(static_cast<std::size_t>(b.element_count()), 0), co_by_id = by_id;
    for (int x = 0; x < n; ++x) ++by_id[static_cast<std::size_t>(b.delta_id(c.sign, c.index, x))];
    for (int y = 0; y < m; ++y) ++co_by_id[static_cast<std::size_t>(b.codelta_id(c, {opposite(c.sign), y}))];
    long long all = 0, co_all = 0;
    for (int id = 0; id < b.element_count(); ++id) {
        const auto iu = static_cast<std::size_t>(id);
        all += by_id[iu];
        co_all += co_by_id[iu];
        if (cap && b.length(id) > *cap) continue;
        if (by_id[iu]) {
            out.schubert[b.element(id)] = by_id[iu];
            out.total_schubert += by_id[iu];
        }
        if (co_by_id[iu]) {
            out.coschubert[b.element(id)] = co_by_id[iu];
            out.total_coschubert += co_by_id[iu];
        }
    }
    out.partition_ok = all == n && co_all == m && by_id[static_cast<std::size_t>(b.identity_id())] == 1;
    return out;
}

GallerySpace gallery_space(const TwinBuilding& b, const std::vector<int>& type, const Chamber& c0) {
    const auto& W = b.type();
    GallerySpace g;
    g.type = type;
    g.start = c0;
    const auto w = W.normal_form(type);
    g.reduced = w.length() == static_cast<int>(type.size());

    // Galleries are counted through endpoint multiplicities, level by level.
    std::map<int, long long> all{{c0.index, 1}}, fresh{{c0.index, 1}};
    g.prefix_counts.push_back(1);
    for (int s : type) {
        std::map<int, long long> next_all, next_fresh;
        long long expected = 0;
        std::optional<std::size_t> uniform;
        for (const auto& [x, mult] : all) {
            const auto& p = b.panel(c0.sign, s, x);
            expected += mult * static_cast<long long>(p.size());
            if (!uniform) uniform = p.size();
            else if (*uniform != p.size()) g.fibration_ok = false;
            for (int y : p) next_all[y] += mult;
        }
        for (const auto& [x, mult] : fresh)
            for (int y : b.panel(c0.sign, s, x))
                if (y != x) next_fresh[y] += mult;
        long long count = 0;
        for (const auto& kv : next_all) count += kv.second;
        if (count != expected || (uniform && count != g.prefix_counts.back() * static_cast<long long>(*uniform)))
            g.fibration_ok = false;
        g.prefix_counts.push_back(count);
        all = std::move(next_all);
        fresh = std::move(next_fresh);
    }
    g.count = g.prefix_counts.back();
    g.endpoint_multiplicity = all;
    for (const auto& kv : fresh) g.non_stammering += kv.second;

    if (g.reduced) {
        const int wid = b.find_element(w).value_or(-1);
        bool surj = true, unique = true;
        for (int x = 0; x < b.chamber_count(c0.sign); ++x) {
            const int d = b.delta_id(c0.sign, c0.index, x);
            const bool below = W.bruhat_leq(b.element(d), w);
            const bool hit = all.count(x) > 0;
            if (below != hit) surj = false;
            const bool open = d == wid;
            const auto it = fresh.find(x);
            const long long k = it == fresh.end() ? 0 : it->second;
            if (open ? k != 1 : k != 0) unique = false;
        }
        g.endpoint_surjective = surj;
        g.open_cell_unique = unique;
    }
    return g;
}

} // namespace twinkit
