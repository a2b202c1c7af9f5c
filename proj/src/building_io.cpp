#include "twinkit/building_io.hpp"

#include <deque>

#include "twinkit/errors.hpp"
#include "twinkit/sl_group.hpp"
#include "twinkit/thin_building.hpp"

namespace twinkit {

namespace {

using nlohmann::json;

const char* half_key(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

Gcm gcm_of(const json& t) {
    if (t.is_string()) return gcm_by_name(t.get<std::string>());
    return gcm_from_json(t);
}

TwinBuilding named(const json& j) {
    const auto gen = j.at("generator").get<std::string>();
    if (gen == "thin") {
        std::optional<int> cap;
        if (j.contains("cap") && !j["cap"].is_null()) cap = j["cap"].get<int>();
        return TwinBuilding::tabulate(ThinTwinBuilding(CoxeterSystem(gcm_of(j.at("type"))), cap));
    }
    if (gen == "sl_n") return TwinBuilding::tabulate(SlTwinBuilding(j.at("n").get<int>(), j.at("p").get<int>()));
    throw MalformedInput("unknown generator '" + gen + "'");
}

/// delta(x, .) by breadth-first search along panels; first arrivals follow minimal galleries.
std::vector<CoxeterElement> distances_from_panels(const CoxeterSystem& sys, int n,
                                                  const std::vector<std::vector<std::vector<int>>>& panels) {
    std::vector<std::vector<int>> panel_of(panels.size(), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (std::size_t s = 0; s < panels.size(); ++s)
        for (std::size_t k = 0; k < panels[s].size(); ++k)
            for (int y : panels[s][k]) {
                if (y < 0 || y >= n) throw MalformedInput("panel member out of range");
                if (panel_of[s][static_cast<std::size_t>(y)] >= 0) throw MalformedInput("panels overlap");
                panel_of[s][static_cast<std::size_t>(y)] = static_cast<int>(k);
            }
    for (const auto& row : panel_of)
        for (int k : row)
            if (k < 0) throw MalformedInput("panels do not cover the half");

    std::vector<CoxeterElement> out(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::deque<int> queue{x};
        seen[static_cast<std::size_t>(x)] = 1;
        while (!queue.empty()) {
            const int z = queue.front();
            queue.pop_front();
            const auto& dz = out[static_cast<std::size_t>(x * n + z)];
            for (std::size_t s = 0; s < panels.size(); ++s)
                for (int y : panels[s][static_cast<std::size_t>(panel_of[s][static_cast<std::size_t>(z)])]) {
                    if (seen[static_cast<std::size_t>(y)]) continue;
                    seen[static_cast<std::size_t>(y)] = 1;
                    out[static_cast<std::size_t>(x * n + y)] = sys.mul_right(dz, static_cast<int>(s));
                    queue.push_back(y);
                }
        }
        for (char c : seen)
            if (!c) throw MalformedInput("half is not gallery connected");
    }
    return out;
}

} // namespace

Gcm gcm_by_name(const std::string& name) {
    if (name == "B2") return gcm_b2();
    if (name == "G2") return gcm_g2();
    if (name == "~A1" || name == "affine_A1") return gcm_affine_a1();
    if (name.size() >= 2 && name[0] == 'A') {
        try {
            std::size_t used = 0;
            const int n = std::stoi(name.substr(1), &used);
            if (used + 1 == name.size() && n >= 1 && n <= 8) return gcm_a(n);
        } catch (const std::exception&) {
        }
    }
    throw MalformedInput("unknown type '" + name + "'");
}

nlohmann::json building_to_json(const TwinBuilding& b) {
    json j;
    j["format"] = "twin-building";
    j["name"] = b.name();
    j["type"] = gcm_to_json(b.type().cartan());
    j["cap"] = b.length_cap() ? json(*b.length_cap()) : json(nullptr);
    j["metadata"] = b.metadata();
    json elements = json::array();
    for (int id = 0; id < b.element_count(); ++id) elements.push_back(element_to_json(b.element(id)));
    j["elements"] = elements;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        const int n = b.chamber_count(s);
        const int m = b.chamber_count(opposite(s));
        json labels = json::array();
        for (int x = 0; x < n; ++x) labels.push_back(b.chamber_label({s, x}));
        j["chambers"][half_key(s)] = labels;
        json panels = json::array();
        for (int t = 0; t < b.rank(); ++t) panels.push_back(b.panels(s, t));
        j["panels"][half_key(s)] = panels;
        json cod = json::array();
        for (int x = 0; x < n; ++x) {
            json row = json::array();
            for (int y = 0; y < m; ++y) row.push_back(b.codelta_id({s, x}, {opposite(s), y}));
            cod.push_back(row);
        }
        j["codistance"][s == Sign::Plus ? "plus_minus" : "minus_plus"] = cod;
        if (b.length_cap()) {
            json dist = json::array();
            for (int x = 0; x < n; ++x) {
                json row = json::array();
                for (int y = 0; y < n; ++y) row.push_back(b.delta_id(s, x, y));
                dist.push_back(row);
            }
            j["distance"][half_key(s)] = dist;
        }
    }
    return j;
}

TwinBuilding building_from_json(const nlohmann::json& j) {
    try {
        if (j.contains("generator")) return named(j);
        CoxeterSystem sys(gcm_from_json(j.at("type")));
        std::vector<CoxeterElement> elements;
        for (const auto& w : j.at("elements")) elements.push_back(element_from_json(sys, w));
        auto element = [&](const json& id) {
            const auto k = id.get<std::size_t>();
            if (k >= elements.size()) throw MalformedInput("element id out of range");
            return elements[k];
        };
        std::array<std::vector<std::string>, 2> labels;
        std::array<std::vector<CoxeterElement>, 2> dist, cod;
        for (Sign s : {Sign::Plus, Sign::Minus})
            labels[idx(s)] = j.at("chambers").at(half_key(s)).get<std::vector<std::string>>();
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const int n = static_cast<int>(labels[idx(s)].size());
            const int m = static_cast<int>(labels[idx(opposite(s))].size());
            if (j.contains("distance")) {
                const auto& rows = j["distance"].at(half_key(s));
                if (static_cast<int>(rows.size()) != n) throw MalformedInput("distance table has the wrong size");
                for (const auto& row : rows) {
                    if (static_cast<int>(row.size()) != n) throw MalformedInput("distance table has the wrong size");
                    for (const auto& id : row) dist[idx(s)].push_back(element(id));
                }
            } else {
                const auto panels = j.at("panels").at(half_key(s)).get<std::vector<std::vector<std::vector<int>>>>();
                if (static_cast<int>(panels.size()) != sys.rank()) throw MalformedInput("one panel list per generator");
                dist[idx(s)] = distances_from_panels(sys, n, panels);
            }
            const auto& rows = j.at("codistance").at(s == Sign::Plus ? "plus_minus" : "minus_plus");
            if (static_cast<int>(rows.size()) != n) throw MalformedInput("codistance table has the wrong size");
            for (const auto& row : rows) {
                if (static_cast<int>(row.size()) != m) throw MalformedInput("codistance table has the wrong size");
                for (const auto& id : row) cod[idx(s)].push_back(element(id));
            }
        }
        std::optional<int> cap;
        if (j.contains("cap") && !j["cap"].is_null()) cap = j["cap"].get<int>();
        return TwinBuilding(std::move(sys), j.value("name", std::string("imported")), std::move(labels),
                            std::move(dist), std::move(cod), cap, j.value("metadata", json::object()));
    } catch (const json::exception& ex) {
        throw MalformedInput(ex.what());
    } catch (const InvalidGcm& ex) {
        throw MalformedInput(ex.what());
    } catch (const IndexOutOfRange& ex) {
        throw MalformedInput(ex.what());
    }
}

} // namespace twinkit
