#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twinkit/coxeter.hpp"

namespace twinkit {

enum class Sign : int { Plus = 0, Minus = 1 };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int idx(Sign s) { return static_cast<int>(s); }
const char* sign_name(Sign s);

struct Chamber {
    Sign sign = Sign::Plus;
    int index = 0;

    friend auto operator<=>(const Chamber&, const Chamber&) = default;
};

nlohmann::json chamber_to_json(const Chamber& c);
Chamber chamber_from_json(const nlohmann::json& j);

/// Anything that can enumerate the chambers of both halves and evaluate the
/// distances and the codistance between them.
class TwinBuildingModel {
public:
    virtual ~TwinBuildingModel() = default;

    virtual const CoxeterSystem& type() const = 0;
    virtual int chamber_count(Sign sign) const = 0;
    virtual CoxeterElement distance(Sign sign, int x, int y) const = 0;
    /// x and y lie in opposite halves.
    virtual CoxeterElement codistance(const Chamber& x, const Chamber& y) const = 0;
    virtual std::string chamber_label(const Chamber& c) const;
    /// Set when the halves are balls of this radius around chamber 0.
    virtual std::optional<int> length_cap() const { return std::nullopt; }
    virtual std::string name() const = 0;
    /// Free-form model data, e.g. {"orientation": [[i, j], ...]} for the collapse.
    virtual nlohmann::json metadata() const { return nlohmann::json::object(); }
};

/// Table-backed twin building. All building algorithms run on this form.
class TwinBuilding final : public TwinBuildingModel {
public:
    static TwinBuilding tabulate(const TwinBuildingModel& model);

    /// Raw constructor. Distances are given per half as row-major n x n tables,
    /// codistances as plus_minus[x][y] = delta*(x+, y-) and minus_plus[y][x] = delta*(y-, x+).
    TwinBuilding(CoxeterSystem type, std::string name, std::array<std::vector<std::string>, 2> labels,
                 std::array<std::vector<CoxeterElement>, 2> distances,
                 std::array<std::vector<CoxeterElement>, 2> codistances, std::optional<int> cap,
                 nlohmann::json metadata);

    const CoxeterSystem& type() const override { return type_; }
    int chamber_count(Sign sign) const override { return static_cast<int>(labels_[idx(sign)].size()); }
    CoxeterElement distance(Sign sign, int x, int y) const override { return element(delta_id(sign, x, y)); }
    CoxeterElement codistance(const Chamber& x, const Chamber& y) const override {
        return element(codelta_id(x, y));
    }
    std::string chamber_label(const Chamber& c) const override;
    std::optional<int> length_cap() const override { return cap_; }
    std::string name() const override { return name_; }
    nlohmann::json metadata() const override { return metadata_; }

    int rank() const { return type_.rank(); }

    // Interned elements.
    int delta_id(Sign sign, int x, int y) const;
    int codelta_id(const Chamber& x, const Chamber& y) const;
    const CoxeterElement& element(int id) const { return elements_[static_cast<std::size_t>(id)]; }
    int element_count() const { return static_cast<int>(elements_.size()); }
    std::optional<int> find_element(const CoxeterElement& w) const;
    int length(int id) const { return element(id).length(); }
    bool leq(int a, int b) const { return bruhat_[static_cast<std::size_t>(a * element_count() + b)] != 0; }
    int identity_id() const { return identity_id_; }

    /// Chambers y with delta(x, y) in {1, s}, sorted; includes x.
    const std::vector<int>& panel(Sign sign, int s, int x) const;
    /// Every s-panel of one half, each listed once.
    const std::vector<std::vector<int>>& panels(Sign sign, int s) const;

    /// Chambers of the certified region: full halves, or the (cap - 1)-ball when capped.
    bool is_interior(const Chamber& c) const;
    std::vector<int> interior(Sign sign) const;

    bool is_thick() const;
    bool is_thin() const;

    /// Copy with one directed codistance entry overwritten (no symmetrisation).
    TwinBuilding with_codistance(const Chamber& x, const Chamber& y, const CoxeterElement& w) const;

    /// Sign-indexed raw tables, used by serialization.
    const std::vector<int>& distance_table(Sign sign) const { return dist_[idx(sign)]; }
    const std::vector<int>& codistance_table(Sign from) const { return cod_[idx(from)]; }

private:
    TwinBuilding() = default;
    int intern(const CoxeterElement& w);
    void finish();

    CoxeterSystem type_{gcm_a(1)};
    std::string name_;
    std::array<std::vector<std::string>, 2> labels_;
    std::vector<CoxeterElement> elements_;
    std::map<CoxeterElement, int> element_ids_;
    std::vector<char> bruhat_;
    int identity_id_ = 0;
    std::array<std::vector<int>, 2> dist_;
    std::array<std::vector<int>, 2> cod_;
    // panel_of_[sign][s][x] indexes panels_[sign][s]
    std::array<std::vector<std::vector<int>>, 2> panel_of_;
    std::array<std::vector<std::vector<std::vector<int>>>, 2> panels_;
    std::array<std::vector<int>, 2> base_length_;
    std::optional<int> cap_;
    nlohmann::json metadata_;
};

struct Residue {
    Sign sign = Sign::Plus;
    GeneratorSet type;
    Chamber representative;
    std::vector<int> chambers;

    bool contains(int x) const;
};

Residue residue(const TwinBuilding& b, const Chamber& c, GeneratorSet j);
Residue panel_residue(const TwinBuilding& b, const Chamber& c, int s);

/// Unique chamber of r nearest to c (same half). Throws NotABuilding if not unique.
Chamber proj(const TwinBuilding& b, const Residue& r, const Chamber& c);
/// Unique chamber of r whose codistance from c (other half) is Bruhat-maximal.
Chamber coproj(const TwinBuilding& b, const Residue& r, const Chamber& c);
/// Shorthand for the co-projection onto the s-panel of p.
Chamber coproj_panel(const TwinBuilding& b, const Chamber& p, int s, const Chamber& c);

struct TwinApartment {
    Chamber c;
    Chamber d;
    std::vector<int> plus;
    std::vector<int> minus;

    const std::vector<int>& half(Sign s) const { return s == Sign::Plus ? plus : minus; }
    bool contains(const Chamber& x) const;
};

/// Twin apartment through the opposite pair (c, d); certified isometric to the thin model.
TwinApartment twin_apartment(const TwinBuilding& b, const Chamber& c, const Chamber& d);
/// Retraction onto a twin apartment centred at c.
Chamber retraction(const TwinBuilding& b, const TwinApartment& apt, const Chamber& c, const Chamber& x);

struct Census {
    Chamber base;
    std::optional<int> cap;
    /// |E_w(c)| and |E*_w(c)| keyed by w.
    std::map<CoxeterElement, long long> schubert;
    std::map<CoxeterElement, long long> coschubert;
    long long total_schubert = 0;
    long long total_coschubert = 0;
    bool partition_ok = true;

    nlohmann::json to_json() const;
};

Census schubert_census(const TwinBuilding& b, const Chamber& c, std::optional<int> cap = std::nullopt);

struct GallerySpace {
    std::vector<int> type;
    Chamber start;
    long long count = 0;
    /// count of galleries after each prefix, starting with 1 for the empty type.
    std::vector<long long> prefix_counts;
    bool fibration_ok = true;
    bool reduced = false;
    /// Only meaningful for reduced types.
    bool endpoint_surjective = false;
    bool open_cell_unique = false;
    long long non_stammering = 0;
    std::map<int, long long> endpoint_multiplicity;
};

GallerySpace gallery_space(const TwinBuilding& b, const std::vector<int>& type, const Chamber& c0);

} // namespace twinkit
