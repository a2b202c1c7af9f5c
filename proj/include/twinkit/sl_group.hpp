#pragma once

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "twinkit/building.hpp"
#include "twinkit/coxeter.hpp"
#include "twinkit/field.hpp"
#include "twinkit/report.hpp"

namespace twinkit {

/// g = left * w_hat(w) * right with left in B_{left sign}, right in B_{right sign}.
struct Decomposition {
    CoxeterElement w;
    FpMatrix left;
    FpMatrix right;
};

struct UltFactor {
    FpMatrix u_plus; // upper unitriangular
    FpMatrix t;      // diagonal
    FpMatrix u_minus; // lower unitriangular
};

struct MatrixChamber {
    Sign sign = Sign::Plus;
    FpMatrix rep;

    friend bool operator==(const MatrixChamber&, const MatrixChamber&) = default;
};

/// SL_n(F_p) with B_+ upper triangular, B_- lower triangular, T diagonal and N monomial.
class SlRealization {
public:
    SlRealization(int n, int p);

    int n() const { return n_; }
    int p() const { return field_.p(); }
    const PrimeField& field() const { return field_; }
    /// Weyl group, type A_{n-1} with s_i swapping coordinates i and i+1.
    const CoxeterSystem& weyl() const { return weyl_; }

    FpMatrix identity() const { return FpMatrix::identity(n_, p()); }
    /// Identity with the block [[0,1],[-1,0]] at rows/columns (i, i+1).
    FpMatrix s_hat(int i) const;
    /// Product of s_hat along the normal form of w.
    FpMatrix w_hat(const CoxeterElement& w) const;
    /// Root group element x_{ij}(t) = I + t E_ij, i != j.
    FpMatrix root_element(int i, int j, int t) const { return FpMatrix::elementary(n_, p(), i, j, t); }

    bool in_borel(const FpMatrix& g, Sign s) const { return s == Sign::Plus ? g.is_upper() : g.is_lower(); }
    void require_sl(const FpMatrix& g) const;

    /// g = b1 w_hat b2 with b1 in B_{left}, b2 in B_{right}.
    Decomposition decompose(const FpMatrix& g, Sign left, Sign right) const;
    /// B_+ w B_+.
    Decomposition bruhat_decompose(const FpMatrix& g) const { return decompose(g, Sign::Plus, Sign::Plus); }
    /// B_- w B_+.
    Decomposition birkhoff_decompose(const FpMatrix& g) const { return decompose(g, Sign::Minus, Sign::Plus); }

    /// Weyl element of a monomial matrix.
    CoxeterElement weyl_element_of_monomial(const FpMatrix& m) const;

    /// Canonical coset representative of g B_sign.
    MatrixChamber chamber(const FpMatrix& g, Sign sign) const;
    /// delta_± for equal signs, delta* for opposite signs.
    CoxeterElement chamber_distance(const MatrixChamber& c, const MatrixChamber& d) const;

    /// x = u_+ t u_-. Throws NotInBigCell.
    UltFactor ult_factor(const FpMatrix& x) const;
    /// pi(x) = t u_-.
    FpMatrix pi(const FpMatrix& x) const;
    /// rho_w(x) = pi(w_hat^-1 x); throws WrongCell unless x in B_+ w B_-.
    FpMatrix rho_w(const CoxeterElement& w, const FpMatrix& x) const;
    /// Same with an explicit representative of w.
    FpMatrix rho_w(const CoxeterElement& w, const FpMatrix& w_rep, const FpMatrix& x) const;

    /// h rho_w(g^-1 h)^-1 s_hat B_- for c_+ = g B_+, c_- = h B_-. Throws LengthCondition.
    MatrixChamber coproj_formula(const FpMatrix& g, const FpMatrix& h, int s) const;
    /// Same with explicit representatives of w = delta*(c_+, c_-) and of s.
    MatrixChamber coproj_formula(const FpMatrix& g, const FpMatrix& h, int s, const FpMatrix& w_rep,
                                 const FpMatrix& s_rep) const;

    /// All elements of SL_n(F_p), sorted.
    const std::vector<FpMatrix>& elements() const;
    std::vector<FpMatrix> torus() const;
    /// Elements of B_sign, sorted.
    std::vector<FpMatrix> borel(Sign sign) const;
    std::uint64_t group_order() const;

private:
    int n_;
    PrimeField field_;
    CoxeterSystem weyl_;
    mutable std::vector<FpMatrix> elements_;
};

/// Twin building G/B_+ , G/B_- of SL_n(F_p).
class SlTwinBuilding final : public TwinBuildingModel {
public:
    SlTwinBuilding(int n, int p);

    const SlRealization& group() const { return group_; }
    const CoxeterSystem& type() const override { return group_.weyl(); }
    int chamber_count(Sign sign) const override { return static_cast<int>(chambers_[idx(sign)].size()); }
    CoxeterElement distance(Sign sign, int x, int y) const override;
    CoxeterElement codistance(const Chamber& x, const Chamber& y) const override;
    std::string chamber_label(const Chamber& c) const override;
    std::string name() const override;

    const MatrixChamber& chamber(const Chamber& c) const {
        return chambers_[idx(c.sign)].at(static_cast<std::size_t>(c.index));
    }
    /// Index of the chamber g B_sign.
    int index_of(const FpMatrix& g, Sign sign) const;

private:
    SlRealization group_;
    std::array<std::vector<MatrixChamber>, 2> chambers_;
    std::array<std::map<FpMatrix, int>, 2> index_;
};

struct LangReport {
    std::map<CoxeterElement, long long> element_strata; // |tau^-1(B_- w B_+)|
    std::map<CoxeterElement, long long> chamber_strata; // |Delta_w|
    std::vector<CoxeterElement> cod;
    long long elements_checked = 0;
    bool equivalence_ok = true;
    nlohmann::json witness;

    nlohmann::json to_json() const;
};

using GroupMap = std::function<FpMatrix(const FpMatrix&)>;

FpMatrix transpose_inverse(const FpMatrix& g);

/// Lang map tau(x) = theta(x)^-1 x for a flip theta with theta(B_+) = B_-. Throws NotSwapping.
LangReport flip_lang(const SlTwinBuilding& model, const GroupMap& theta);

/// g = left w_hat right with the declared Borel factors, for every element and all four sign pairs.
CheckResult check_decompositions(const SlRealization& g);
/// x in B_+ w_hat rho_w(x) for every x, w being its B_+ . B_- cell.
CheckResult check_rho_membership(const SlRealization& g);
/// rho_1 = pi on the big cell.
CheckResult check_rho_one_is_pi(const SlRealization& g);
/// coproj_formula equals the brute-force co-projection on `table` for every c_+, c_-, s with l(ws) > l(w).
/// With `twisted`, also for w_hat t, s_hat t' over all torus pairs and for other coset representatives.
CheckResult check_coprojection_formula(const SlTwinBuilding& model, const TwinBuilding& table, bool twisted);

} // namespace twinkit
