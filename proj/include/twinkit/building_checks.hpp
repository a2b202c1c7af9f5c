#pragma once

#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "twinkit/building.hpp"
#include "twinkit/report.hpp"

namespace twinkit {

struct AxiomReport {
    std::vector<CheckResult> checks; // Bu1, Bu2, Bu3, Tw1, Tw2, Tw3
    std::optional<int> cap;
    int interior_plus = 0;
    int interior_minus = 0;

    bool passed() const { return all_passed(checks); }
    nlohmann::json to_json() const;
};

/// Building and twin-building axioms for all x and every interior y.
/// Throws RegionTooSmall if a half has no interior chamber.
AxiomReport check_axioms(const TwinBuilding& b);

/// Projections onto every panel exist, are unique and satisfy the gate property.
CheckResult check_projections(const TwinBuilding& b);
/// s-adjacent chambers opposite d have the same co-projection onto P_t(d), t != s.
CheckResult check_coprojection_agreement(const TwinBuilding& b);
/// Every pair of chambers in one half has a common opposite chamber (thick models only).
CheckResult check_common_opposites(const TwinBuilding& b);
/// delta*(c, e) = w v' with v' <= v whenever delta*(c, d) = w and delta(d, e) = v.
CheckResult check_codistance_subexpression(const TwinBuilding& b);
/// For opposite c, c' and w != 1 with a right descent s there is d opposite c at
/// codistance s from every chamber of E*_w(c') (thick models only).
CheckResult check_opposite_witness(const TwinBuilding& b);
/// Twin apartments of every opposite pair are isometric to the thin model.
CheckResult check_twin_apartments(const TwinBuilding& b);
/// Retractions centred at the base chambers fix the apartment and do not increase distances.
CheckResult check_retractions(const TwinBuilding& b);
/// Schubert cells partition each half and co-Schubert cells partition the other.
CheckResult check_census(const TwinBuilding& b);

/// |E_w(c)| = prod q_s over a reduced word of w for every chamber c, with q_s + 1 the s-panel size;
/// for spherical types with uniform q also |E*_w(c)| = q^(l(w_0) - l(w)). Skipped on capped models.
CheckResult check_cell_sizes(const TwinBuilding& b);
/// Gallery spaces of every type word of length <= max_length from the base chambers: fibration counts,
/// and for reduced types surjectivity onto the Bruhat ball and a unique non-stammering gallery per open-cell endpoint.
CheckResult check_gallery_spaces(const TwinBuilding& b, int max_length);

struct PanelMultiplication {
    Chamber c_plus, c_minus;
    int r = 0, s = 0;
    Chamber zero_plus, zero_minus, one_minus, d_plus;
    std::vector<int> rows;    // punctured P_r(c_plus)
    std::vector<int> columns; // punctured P_s(c_minus)
    std::vector<std::vector<int>> table; // table[i][j] = rows[i] * columns[j]
    bool identity_ok = true;
    bool zero_ok = true;
    bool closed = true;
    bool bijective = true;

    bool ok() const { return identity_ok && zero_ok && closed && bijective; }
    nlohmann::json to_json() const;
};

/// x * y = coproj_{P_r(c+)} coproj_{P_r(y)} coproj_{P_r(d+)} coproj_{P_r(1-)} (x).
/// Throws BadGeometry if m_rs < 3 or the base configuration is invalid.
PanelMultiplication panel_mul(const TwinBuilding& b, const Chamber& c_plus, const Chamber& c_minus, int r, int s,
                              const Chamber& one_minus);
/// panel_mul on every admissible configuration.
CheckResult check_panel_multiplication(const TwinBuilding& b);

struct PanelProfile {
    int type = 0;
    Chamber member;
    CoxeterElement longer, shorter;
    long long longer_count = 0;
    long long shorter_count = 0;
};

struct Stratification {
    Chamber d;
    std::map<CoxeterElement, long long> strata;
    std::vector<PanelProfile> profiles;
    bool profiles_ok = true;
    /// Single-panel, length-increasing steps between strata.
    std::set<std::pair<CoxeterElement, CoxeterElement>> right_steps, left_steps;
    std::map<CoxeterElement, std::set<CoxeterElement>> closure;
    bool closure_ok = true;
    nlohmann::json witness;

    bool ok() const { return profiles_ok && closure_ok; }
    nlohmann::json to_json() const;
    /// Hasse-style DOT of the reachability poset.
    std::string to_dot(const CoxeterSystem& sys) const;
};

Stratification stratification(const TwinBuilding& b, const Chamber& d);
/// stratification at every chamber of both halves.
CheckResult check_stratification(const TwinBuilding& b);

struct DimensionReport {
    bool well_defined = true;
    bool constant_on_odd_components = true;
    /// Smallest element whose reduced words disagree.
    std::optional<CoxeterElement> offender;
    std::vector<int> word_a, word_b;
    int elements_checked = 0;

    bool consistent() const { return well_defined == constant_on_odd_components; }
    nlohmann::json to_json() const;
};

/// d(w) = d(s_1) + ... + d(s_k) over all reduced words of every w with l(w) <= cap.
DimensionReport check_dimension_function(const CoxeterSystem& sys, const std::vector<int>& d, int cap);

} // namespace twinkit
