#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twinkit/report.hpp"
#include "twinkit/sl_group.hpp"

namespace twinkit {

/// The root e_i - e_j of A_{n-1}; positive iff i < j.
struct MatrixRoot {
    int i = 0;
    int j = 0;

    bool positive() const { return i < j; }
    MatrixRoot negated() const { return {j, i}; }
    friend auto operator<=>(const MatrixRoot&, const MatrixRoot&) = default;
};

std::vector<MatrixRoot> matrix_roots(int n);
/// s_k permutes the indices k and k+1.
MatrixRoot reflect_root(int k, MatrixRoot a);
/// Roots c a + d b with c, d >= 1.
std::vector<MatrixRoot> open_interval(int n, MatrixRoot a, MatrixRoot b);

/// {x_a(t) : t in F_p}.
std::vector<FpMatrix> root_group(const SlRealization& r, MatrixRoot a);
/// x_{-a}(-1/t) x_a(t) x_{-a}(-1/t).
FpMatrix mu(const SlRealization& r, MatrixRoot a, int t);

/// Subgroup generated by gens (breadth-first closure under left multiplication).
std::set<FpMatrix> generated_subgroup(const std::vector<FpMatrix>& gens, int n, int p);

struct RgdOptions {
    /// Root whose group is removed from the family.
    std::optional<MatrixRoot> deleted;
    /// Borel-element sweeps are sampled beyond this many elements.
    std::size_t exhaustive_limit = 20000;
    std::uint64_t seed = 1;
};

/// RGD0-RGD5, BN1, BN2, TBN1, TBN2, the rank-one product bound and the ordered-product bijections.
std::vector<CheckResult> rgd_axiom_check(const SlRealization& r, const RgdOptions& opt = {});

/// Products x_{beta[1]}(t_1)...x_{beta[N]}(t_N) over the root enumeration, with and without T prepended.
std::vector<CheckResult> check_ordered_products(const SlRealization& r);

} // namespace twinkit
