#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "twinkit/coxeter.hpp"

namespace twinkit {

using RootVector = std::vector<std::int64_t>;

int height(const RootVector& v);

struct RealRoot {
    RootVector coords;
    int height = 0;
    /// min l(w) with w(alpha) negative, searched inside the height window.
    int depth = 0;
    /// alpha = w(alpha_simple) with w = word.
    CoxeterElement word;
    int simple = 0;
    /// The reflection t_alpha = w s w^-1.
    CoxeterElement reflection;
    /// Position in the root enumeration beta[1], beta[2], ... (0-based).
    int index = -1;
};

struct RealRootTable {
    Gcm cartan;
    int window = 0;
    /// Sorted by (height, coords) until root_enumeration reorders the index field.
    std::vector<RealRoot> roots;

    std::optional<int> find(const RootVector& v) const;
    nlohmann::json to_json() const;
};

/// Positive real roots of height <= h: closure of the simple roots under the simple reflections.
RealRootTable positive_real_roots(const Gcm& a, int h);

/// Order by depth, then by Bruhat order of the reflections, then by decreasing coordinate vectors.
/// Fills RealRoot::index and returns table positions in enumeration order.
std::vector<int> root_enumeration(RealRootTable& table);

/// True iff the order respects depth and the Bruhat order on reflections.
bool enumeration_compatible(const RealRootTable& table, const std::vector<int>& order);

} // namespace twinkit
