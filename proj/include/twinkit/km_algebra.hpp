#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "twinkit/gcm.hpp"
#include "twinkit/report.hpp"
#include "twinkit/roots.hpp"

namespace twinkit {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using QVector = std::vector<Rational>;

std::string rational_str(const Rational& q);
bool is_integral(const Rational& q);

/// Dense rational matrix acting on column vectors.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix scaled(const Rational& c) const;
    QVector apply(const QVector& v) const;
    QVector column(int j) const;
    bool integral() const;
    bool is_zero() const;
    /// Entries reduced to [0, p); throws InvalidField if a denominator is divisible by p.
    QMatrix mod(int p) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;
    nlohmann::json to_json() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// An exact matrix on a declared carrier, over Q or over F_p.
struct AdOperator {
    std::optional<int> modulus;
    QMatrix matrix;
    std::string provenance;

    AdOperator compose(const AdOperator& o) const;
    bool same_action(const AdOperator& o) const { return modulus == o.modulus && matrix == o.matrix; }
    nlohmann::json to_json() const;
};

enum class TorusFlavour { SimplyConnected, Adjoint };

/// A torus element given by unit values u_1..u_n. Simply connected: t = prod h_i(u_i), so
/// t(alpha_j) = prod_i u_i^{a_ij}. Adjoint: t(alpha_i) = u_i.
struct TorusElement {
    TorusFlavour flavour = TorusFlavour::SimplyConnected;
    std::vector<Rational> values;
};

struct AlgebraLimits {
    int max_height = 12;
    /// Bound on tensor coordinates per graded piece and on the total dimension.
    long long max_words = 200000;
    int max_dimension = 4000;
};

/// A Z-lattice inside a certified subspace of the window, closed under divided powers of the listed generators.
struct Carrier {
    /// Rows are lattice basis vectors in integral coordinates of the window.
    std::vector<QVector> basis;
    /// Generators i whose (ad e_i)^(k), (ad f_i)^(k) preserve the lattice.
    std::vector<int> certified;
    /// True for homogeneous spans, so the torus acts.
    bool graded = true;

    int dimension() const { return static_cast<int>(basis.size()); }
    /// Integer coordinates of v in the basis; throws NotInvariant if v lies outside the lattice.
    QVector coordinates(const QVector& v) const;
    /// Rational coordinates; throws NotInvariant only if v leaves the span.
    QVector span_coordinates(const QVector& v) const;
    bool contains(const QVector& v) const;
    nlohmann::json to_json() const;
};

/// Height-truncated Kac-Moody algebra: n_- + h + n_+ restricted to |ht| <= H.
///
/// n_+ is the free Lie algebra on e_i modulo the Serre ideal, computed degree by degree inside
/// the tensor algebra; n_- is its image under the Chevalley involution. One extra layer at
/// height H+1 is kept to detect when an operator leaves the window. All public vectors use
/// the integral basis of the window (a Z-basis of the lattice generated by e_i, f_i, h_i under
/// divided powers).
class KmAlgebra {
public:
    KmAlgebra(const Gcm& a, int window, const AlgebraLimits& limits = {});
    ~KmAlgebra();
    KmAlgebra(KmAlgebra&&) noexcept;

    const Gcm& cartan() const;
    int window() const;
    int dimension() const;
    int rank() const;

    struct Component {
        RootVector degree;
        int height = 0;
        int dim = 0;
        int offset = 0;
    };
    /// Window components sorted by (height, degree); the Cartan component has degree 0.
    const std::vector<Component>& components() const;
    std::optional<int> component_of(const RootVector& degree) const;
    int component_dim(const RootVector& degree) const;
    /// dim of g_alpha summed over each positive height 1..H.
    std::vector<int> positive_dims() const;
    RootVector degree_of(int basis_index) const;
    std::string basis_label(int basis_index) const;

    QVector zero() const;
    QVector e(int i) const;
    QVector f(int i) const;
    QVector h(int i) const;
    QVector basis_vector(int k) const;

    /// Exact bracket; throws WindowExceeded if the result leaves the window.
    QVector bracket(const QVector& x, const QVector& y) const;
    /// e_i -> -f_i, f_i -> -e_i, h -> -h.
    QVector chevalley(const QVector& x) const;
    /// Matrix of ad x on the window (columns are images of basis vectors); throws WindowExceeded.
    QMatrix ad_matrix(const QVector& x) const;
    /// (ad e_i)^k / k! (positive) or (ad f_i)^k / k! (negative) with components beyond the window dropped.
    QMatrix divided_power(int i, bool positive, int k) const;
    /// Same for an arbitrary window element.
    QMatrix divided_power(const QVector& x, int k) const;
    /// Smallest k with (ad e_i)^k x = 0 (ad f_i if !positive), or nullopt if the halo is left first.
    std::optional<int> nilpotency_degree(int i, bool positive, const QVector& x) const;
    /// True iff no (ad e_i), (ad f_i) image of a window vector reaches the halo.
    bool window_closed() const;

    /// Integral basis vectors written in the construction basis (diagnostic).
    nlohmann::json to_json() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Generators i -> exp(r ad e_i) (or f_i) on a certified carrier.
AdOperator ad_unipotent(const KmAlgebra& alg, int i, bool positive, const Rational& r, const Carrier& carrier,
                        std::optional<int> modulus = std::nullopt);
/// Torus element acting diagonally by degree.
AdOperator torus_ad(const KmAlgebra& alg, const TorusElement& t, const Carrier& carrier,
                    std::optional<int> modulus = std::nullopt);
Rational character(const KmAlgebra& alg, const TorusElement& t, const RootVector& degree);

/// The whole window as a carrier; certified for every generator iff the window is closed.
Carrier window_carrier(const KmAlgebra& alg);
/// Z-span of the homogeneous parts of v closed under (ad e_i)^(k), (ad f_i)^(k) for i in alphas.
/// Throws WindowExceeded if the closure leaves the window.
Carrier invariant_subspace(const KmAlgebra& alg, const QVector& v, const std::vector<int>& alphas);

/// Structural invariants: bracket relations, Chevalley involution, real-root dimensions, Jacobi,
/// divided-power integrality, local nilpotency.
std::vector<CheckResult> algebra_checks(const KmAlgebra& alg);

/// x_i(r) x_i(s) = x_i(r + s) and t x_i(r) t^-1 = x_i(alpha_i(t) r) for every certified generator,
/// exactly over Q, for both torus flavours when the carrier is graded.
std::vector<CheckResult> carrier_checks(const KmAlgebra& alg, const Carrier& carrier);

/// RGD1, RGD2 and injectivity modulo the centre for the adjoint Chevalley group of a rank-2 finite GCM over F_p.
std::vector<CheckResult> rank2_rgd_check(const Gcm& a, int p);

} // namespace twinkit
