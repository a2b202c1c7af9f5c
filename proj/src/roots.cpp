#include "twinkit/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

#include "twinkit/errors.hpp"

namespace twinkit {

int height(const RootVector& v) {
    std::int64_t h = 0;
    for (auto c : v) h += c;
    return static_cast<int>(h);
}

std::optional<int> RealRootTable::find(const RootVector& v) const {
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (roots[k].coords == v) return static_cast<int>(k);
    return std::nullopt;
}

nlohmann::json RealRootTable::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& r : roots)
        arr.push_back({{"coords", r.coords},
                       {"height", r.height},
                       {"depth", r.depth},
                       {"word", element_to_json(r.word)},
                       {"index", r.index + 1}});
    return {{"cartan", gcm_to_json(cartan)}, {"window", window}, {"roots", arr}};
}

RealRootTable positive_real_roots(const Gcm& a, int h) {
    if (h < 1) throw IndexOutOfRange("height window must be >= 1");
    const CoxeterSystem sys(a);
    const int n = a.rank();
    RealRootTable table;
    table.cartan = a;
    table.window = h;
    std::map<RootVector, RealRoot> found;
    std::deque<RootVector> queue;
    for (int i = 0; i < n; ++i) {
        RootVector v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(i)] = 1;
        RealRoot r;
        r.coords = v;
        r.height = 1;
        r.depth = 1;
        r.simple = i;
        found.emplace(v, r);
        queue.push_back(v);
    }
    // Breadth-first, so the distance to the simple roots gives the windowed depth.
    while (!queue.empty()) {
        const RootVector v = queue.front();
        queue.pop_front();
        const RealRoot cur = found.at(v);
        for (int i = 0; i < n; ++i) {
            RootVector u = sys.reflect(i, v);
            if (std::any_of(u.begin(), u.end(), [](auto c) { return c < 0; })) continue;
            if (height(u) > h || found.count(u)) continue;
            RealRoot r;
            r.coords = u;
            r.height = height(u);
            r.depth = cur.depth + 1;
            r.simple = cur.simple;
            r.word = sys.mul_left(i, cur.word);
            found.emplace(u, r);
            queue.push_back(u);
        }
    }
    for (auto& [v, r] : found) {
        r.reflection = sys.multiply(sys.multiply(r.word, sys.generator(r.simple)), sys.inverse(r.word));
        table.roots.push_back(r);
    }
    std::sort(table.roots.begin(), table.roots.end(), [](const RealRoot& x, const RealRoot& y) {
        return std::tie(x.height, x.coords) < std::tie(y.height, y.coords);
    });
    return table;
}

std::vector<int> root_enumeration(RealRootTable& table) {
    const CoxeterSystem sys(table.cartan);
    const int m = static_cast<int>(table.roots.size());
    auto less = [&](int a, int b) {
        const auto& x = table.roots[static_cast<std::size_t>(a)];
        const auto& y = table.roots[static_cast<std::size_t>(b)];
        return x.reflection != y.reflection && sys.bruhat_leq(x.reflection, y.reflection);
    };
    std::map<int, std::vector<int>> by_depth;
    for (int k = 0; k < m; ++k) by_depth[table.roots[static_cast<std::size_t>(k)].depth].push_back(k);
    std::vector<int> order;
    for (auto& [d, members] : by_depth) {
        // Kahn's algorithm; among ready roots the lexicographically largest coordinates go first (alpha_1 before alpha_2).
        auto cmp = [&](int a, int b) {
            return table.roots[static_cast<std::size_t>(a)].coords < table.roots[static_cast<std::size_t>(b)].coords;
        };
        std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
        std::map<int, int> indeg;
        for (int a : members) {
            indeg[a] = 0;
            for (int b : members)
                if (less(b, a)) ++indeg[a];
        }
        for (int a : members)
            if (indeg[a] == 0) ready.push(a);
        while (!ready.empty()) {
            const int a = ready.top();
            ready.pop();
            order.push_back(a);
            for (int b : members)
                if (less(a, b) && --indeg[b] == 0) ready.push(b);
        }
    }
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        table.roots[static_cast<std::size_t>(order[pos])].index = static_cast<int>(pos);
    return order;
}

bool enumeration_compatible(const RealRootTable& table, const std::vector<int>& order) {
    const CoxeterSystem sys(table.cartan);
    if (order.size() != table.roots.size()) return false;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const auto& x = table.roots[static_cast<std::size_t>(order[i])];
            const auto& y = table.roots[static_cast<std::size_t>(order[j])];
            if (y.depth < x.depth) return false;
            if (y.reflection != x.reflection && sys.bruhat_leq(y.reflection, x.reflection)) return false;
        }
    return true;
}

} // namespace twinkit
