#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace twinkit {

/// m_ij = infinity is stored as 0.
inline constexpr int kInfiniteLabel = 0;

/// Symmetric Coxeter matrix with off-diagonal labels in {2, 3, 4, 6, inf}.
class CoxeterMatrix {
public:
    CoxeterMatrix() = default;
    /// Validates symmetry, unit diagonal and the crystallographic label set.
    explicit CoxeterMatrix(std::vector<std::vector<int>> rows);

    int rank() const { return rank_; }
    int operator()(int i, int j) const { return m_[static_cast<std::size_t>(i * rank_ + j)]; }
    bool is_infinite(int i, int j) const { return (*this)(i, j) == kInfiniteLabel; }

    friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
    int rank_ = 0;
    std::vector<int> m_;
};

/// Generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the diagonal, a_ij = 0 iff a_ji = 0.
class Gcm {
public:
    Gcm() = default;
    explicit Gcm(std::vector<std::vector<int>> rows);

    int rank() const { return rank_; }
    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * rank_ + j)]; }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const Gcm&, const Gcm&) = default;

private:
    int rank_ = 0;
    std::vector<int> a_;
};

/// Label table a_ij * a_ji in {0,1,2,3,>=4} -> m in {2,3,4,6,inf}.
int coxeter_label(int product);

CoxeterMatrix coxeter_matrix(const Gcm& a);

/// A GCM whose Coxeter matrix is m (labels 4 and 6 put the long root first).
Gcm realize_coxeter_matrix(const CoxeterMatrix& m);

// Named GCMs used throughout the tests and the CLI.
Gcm gcm_a(int n);
Gcm gcm_b2();
Gcm gcm_g2();
Gcm gcm_affine_a1();

/// {"rank": n, "cartan": [[...]]}
Gcm gcm_from_json(const nlohmann::json& j);
nlohmann::json gcm_to_json(const Gcm& a);

} // namespace twinkit
