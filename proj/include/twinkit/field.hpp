#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace twinkit {

/// Arithmetic in Z/pZ for a prime p <= kMaxPrime.
class PrimeField {
public:
    static constexpr int kMaxPrime = 13;

    explicit PrimeField(int p);

    int p() const { return p_; }
    int reduce(long long x) const {
        const long long r = x % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }
    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b + p_) % p_; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }
    int mul(int a, int b) const { return (a * b) % p_; }
    /// Throws InvalidField for a = 0.
    int inv(int a) const;
    std::vector<int> units() const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    int p_;
    std::vector<int> inverse_;
};

bool is_prime(int p);

/// Square matrix over a prime field, entries kept in [0, p).
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int n, int p);
    FpMatrix(int p, const std::vector<std::vector<long long>>& rows);

    static FpMatrix identity(int n, int p);
    /// I + t E_ij.
    static FpMatrix elementary(int n, int p, int i, int j, int t);
    static FpMatrix diagonal(int p, const std::vector<int>& d);

    int n() const { return n_; }
    int p() const { return p_; }
    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    void set(int i, int j, long long v);
    const std::vector<std::uint8_t>& data() const { return a_; }

    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix inverse() const;
    FpMatrix transpose() const;
    int det() const;

    bool is_identity() const;
    bool is_upper() const;
    bool is_lower() const;
    bool is_diagonal() const;
    bool is_monomial() const;
    bool is_unitriangular_upper() const { return is_upper() && unit_diagonal(); }
    bool is_unitriangular_lower() const { return is_lower() && unit_diagonal(); }

    // Elementary operations used by the elimination routines.
    void add_row(int target, int source, int c); // row_target += c row_source
    void add_col(int target, int source, int c); // col_target += c col_source
    void scale_col(int j, int c);

    std::string str() const;
    nlohmann::json to_json() const;
    static FpMatrix from_json(const nlohmann::json& j);

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
    friend auto operator<=>(const FpMatrix& x, const FpMatrix& y) { return x.a_ <=> y.a_; }

private:
    bool unit_diagonal() const;

    int n_ = 0;
    int p_ = 2;
    std::vector<std::uint8_t> a_;
};

struct FpMatrixHash {
    std::size_t operator()(const FpMatrix& m) const;
};

} // namespace twinkit
