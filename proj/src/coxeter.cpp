#include "twinkit/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "twinkit/errors.hpp"

namespace twinkit {

namespace {

using RootMatrix = std::vector<std::int64_t>; // column-major n x n, column c = image of alpha_c

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) throw Error("group order overflows 64 bits");
    return a * b;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

struct Component {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
};

// Classifies one connected component of the Coxeter graph restricted to J.
// Returns the type name and group order, or nullopt when the component is infinite.
std::optional<std::pair<std::string, std::uint64_t>> classify_component(const CoxeterMatrix& m,
                                                                        const Component& c) {
    const int k = static_cast<int>(c.vertices.size());
    if (k == 1) return std::make_pair(std::string("A1"), std::uint64_t{2});
    for (auto [u, v] : c.edges)
        if (m.is_infinite(u, v)) return std::nullopt;
    if (static_cast<int>(c.edges.size()) != k - 1) return std::nullopt; // contains a cycle

    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : c.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int branch = -1;
    for (int v : c.vertices) {
        const auto deg = adj[v].size();
        if (deg > 3) return std::nullopt;
        if (deg == 3) {
            if (branch != -1) return std::nullopt;
            branch = v;
        }
    }

    if (branch == -1) {
        // Path: walk from one end and read off the labels in order.
        int start = c.vertices.front();
        for (int v : c.vertices)
            if (adj[v].size() == 1) {
                start = v;
                break;
            }
        std::vector<int> labels;
        int prev = -1, cur = start;
        for (int step = 0; step < k - 1; ++step) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            if (adj[cur].size() == 1) next = adj[cur][0];
            labels.push_back(m(cur, next));
            prev = cur;
            cur = next;
        }
        const auto fours = std::count(labels.begin(), labels.end(), 4);
        const auto sixes = std::count(labels.begin(), labels.end(), 6);
        if (fours == 0 && sixes == 0) return std::make_pair("A" + std::to_string(k), factorial(k + 1));
        if (sixes == 1 && k == 2) return std::make_pair(std::string("G2"), std::uint64_t{12});
        if (sixes > 0 || fours > 1) return std::nullopt;
        if (labels.front() == 4 || labels.back() == 4)
            return std::make_pair("B" + std::to_string(k), checked_mul(std::uint64_t{1} << k, factorial(k)));
        if (k == 4 && labels[1] == 4) return std::make_pair(std::string("F4"), std::uint64_t{1152});
        return std::nullopt;
    }

    for (auto [u, v] : c.edges)
        if (m(u, v) != 3) return std::nullopt;
    std::vector<int> arms;
    for (int first : adj[branch]) {
        int len = 1, prev = branch, cur = first;
        while (adj[cur].size() == 2) {
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
        return std::make_pair("D" + std::to_string(k), checked_mul(std::uint64_t{1} << (k - 1), factorial(k)));
    if (arms[0] == 1 && arms[1] == 2) {
        if (arms[2] == 2) return std::make_pair(std::string("E6"), std::uint64_t{51840});
        if (arms[2] == 3) return std::make_pair(std::string("E7"), std::uint64_t{2903040});
        if (arms[2] == 4) return std::make_pair(std::string("E8"), std::uint64_t{696729600});
    }
    return std::nullopt;
}

} // namespace

bool is_negative_root(std::span<const std::int64_t> v) {
    for (auto x : v) {
        if (x < 0) return true;
        if (x > 0) return false;
    }
    return false;
}

CoxeterSystem::CoxeterSystem(Gcm cartan) : cartan_(std::move(cartan)), matrix_(coxeter_matrix(cartan_)) {}

CoxeterSystem CoxeterSystem::from_matrix(const CoxeterMatrix& m) {
    return CoxeterSystem(realize_coxeter_matrix(m));
}

void CoxeterSystem::check_index(int s) const {
    if (s < 0 || s >= rank())
        throw IndexOutOfRange("generator " + std::to_string(s) + " outside [0, " + std::to_string(rank()) + ")");
}

CoxeterElement CoxeterSystem::generator(int s) const {
    check_index(s);
    return CoxeterElement{{s}};
}

std::vector<std::int64_t> CoxeterSystem::reflect(int s, std::vector<std::int64_t> root) const {
    check_index(s);
    std::int64_t pairing = 0;
    for (int j = 0; j < rank(); ++j) pairing += root[static_cast<std::size_t>(j)] * cartan_(s, j);
    root[static_cast<std::size_t>(s)] -= pairing;
    return root;
}

std::vector<std::int64_t> CoxeterSystem::act(const CoxeterElement& w, std::vector<std::int64_t> root) const {
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) root = reflect(*it, std::move(root));
    return root;
}

CoxeterElement CoxeterSystem::normal_form(std::span<const int> word) const {
    const int n = rank();
    const auto un = static_cast<std::size_t>(n);
    for (int s : word) check_index(s);

    // m holds the action of w^-1; w^-1 = s_k ... s_1, so each letter left-multiplies.
    RootMatrix m(un * un, 0);
    for (std::size_t c = 0; c < un; ++c) m[c * un + c] = 1;
    for (int s : word) {
        for (std::size_t c = 0; c < un; ++c) {
            std::int64_t pairing = 0;
            for (int j = 0; j < n; ++j) pairing += m[c * un + static_cast<std::size_t>(j)] * cartan_(s, j);
            m[c * un + static_cast<std::size_t>(s)] -= pairing;
        }
    }

    // Peel off the smallest left descent until the identity is reached.
    CoxeterElement out;
    out.word.reserve(word.size());
    for (;;) {
        int descent = -1;
        for (int s = 0; s < n && descent < 0; ++s)
            if (is_negative_root(std::span<const std::int64_t>(m.data() + static_cast<std::size_t>(s) * un, un)))
                descent = s;
        if (descent < 0) break;
        out.word.push_back(descent);
        // w <- s w, i.e. w^-1 <- w^-1 s: right-multiply m by the reflection matrix.
        const auto ds = static_cast<std::size_t>(descent);
        for (std::size_t j = 0; j < un; ++j) {
            if (j == ds) continue;
            const std::int64_t a = cartan_(descent, static_cast<int>(j));
            if (a == 0) continue;
            for (std::size_t r = 0; r < un; ++r) m[j * un + r] -= a * m[ds * un + r];
        }
        for (std::size_t r = 0; r < un; ++r) m[ds * un + r] = -m[ds * un + r];
    }
    return out;
}

CoxeterElement CoxeterSystem::multiply(const CoxeterElement& x, const CoxeterElement& y) const {
    std::vector<int> w = x.word;
    w.insert(w.end(), y.word.begin(), y.word.end());
    return normal_form(w);
}

CoxeterElement CoxeterSystem::inverse(const CoxeterElement& w) const {
    std::vector<int> r(w.word.rbegin(), w.word.rend());
    return normal_form(r);
}

CoxeterElement CoxeterSystem::mul_right(const CoxeterElement& w, int s) const {
    std::vector<int> r = w.word;
    r.push_back(s);
    return normal_form(r);
}

CoxeterElement CoxeterSystem::mul_left(int s, const CoxeterElement& w) const {
    std::vector<int> r{s};
    r.insert(r.end(), w.word.begin(), w.word.end());
    return normal_form(r);
}

bool CoxeterSystem::is_right_descent(const CoxeterElement& w, int s) const {
    check_index(s);
    std::vector<std::int64_t> alpha(static_cast<std::size_t>(rank()), 0);
    alpha[static_cast<std::size_t>(s)] = 1;
    return is_negative_root(act(w, std::move(alpha)));
}

bool CoxeterSystem::is_left_descent(const CoxeterElement& w, int s) const {
    return is_right_descent(inverse(w), s);
}

GeneratorSet CoxeterSystem::descents(const CoxeterElement& w, Side side) const {
    GeneratorSet out;
    const CoxeterElement probe = side == Side::Right ? w : inverse(w);
    for (int s = 0; s < rank(); ++s)
        if (is_right_descent(probe, s)) out.insert(s);
    return out;
}

bool CoxeterSystem::bruhat_leq(const CoxeterElement& v, const CoxeterElement& w) const {
    // Prefixes of a ShortLex normal form are again normal forms, so w shrinks by dropping its
    // last letter s, and v <= w iff min(v, vs) <= ws.
    CoxeterElement x = v;
    std::vector<int> rest = w.word;
    while (!rest.empty()) {
        if (x.length() > static_cast<int>(rest.size())) return false;
        const int s = rest.back();
        rest.pop_back();
        if (!x.is_identity() && is_right_descent(x, s)) x = mul_right(x, s);
    }
    return x.is_identity();
}

bool CoxeterSystem::in_parabolic(const CoxeterElement& w, GeneratorSet j) const {
    return std::all_of(w.word.begin(), w.word.end(), [&](int s) { return j.contains(s); });
}

ParabolicInfo CoxeterSystem::parabolic_info(GeneratorSet j) const {
    for (int s : j.elements()) check_index(s);
    ParabolicInfo info;
    // Connected components of the Coxeter graph on J (edges where m_st != 2).
    std::vector<int> verts = j.elements();
    std::vector<int> comp(static_cast<std::size_t>(rank()), -1);
    std::vector<Component> comps;
    for (int v : verts) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        Component c;
        std::vector<int> stack{v};
        comp[static_cast<std::size_t>(v)] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            c.vertices.push_back(u);
            for (int x : verts) {
                if (x == u || matrix_(u, x) == 2) continue;
                if (u < x) c.edges.emplace_back(u, x);
                if (comp[static_cast<std::size_t>(x)] < 0) {
                    comp[static_cast<std::size_t>(x)] = comp[static_cast<std::size_t>(v)];
                    stack.push_back(x);
                }
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        comps.push_back(std::move(c));
    }

    std::uint64_t order = 1;
    bool finite = true;
    for (const auto& c : comps) {
        auto cls = classify_component(matrix_, c);
        if (!cls) {
            finite = false;
            info.components.push_back("~");
            continue;
        }
        info.components.push_back(cls->first);
        order = checked_mul(order, cls->second);
    }
    info.finite = finite;
    if (!finite) return info;

    info.order = order;
    CoxeterElement w;
    for (bool grew = true; grew;) {
        grew = false;
        for (int s : verts)
            if (!is_right_descent(w, s)) {
                w = mul_right(w, s);
                grew = true;
                break;
            }
    }
    info.longest = std::move(w);
    return info;
}

std::vector<std::vector<CoxeterElement>> CoxeterSystem::enumerate_upto(int max_length, GeneratorSet j) const {
    std::vector<std::vector<CoxeterElement>> levels;
    if (max_length < 0) return levels;
    levels.push_back({identity()});
    const auto gens = j.elements();
    for (int l = 1; l <= max_length; ++l) {
        std::set<CoxeterElement> next;
        for (const auto& w : levels.back())
            for (int s : gens)
                if (!is_right_descent(w, s)) next.insert(mul_right(w, s));
        if (next.empty()) break;
        levels.emplace_back(next.begin(), next.end());
    }
    return levels;
}

std::vector<CoxeterElement> CoxeterSystem::enumerate_finite(GeneratorSet j) const {
    const auto info = parabolic_info(j);
    if (!info.finite) throw NotSpherical("W_J is infinite");
    std::vector<CoxeterElement> out;
    for (auto& level : enumerate_upto(info.longest->length(), j))
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<std::vector<int>> CoxeterSystem::reduced_words(const CoxeterElement& w) const {
    std::map<CoxeterElement, std::vector<std::vector<int>>> memo;
    auto rec = [&](auto&& self, const CoxeterElement& x) -> const std::vector<std::vector<int>>& {
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        std::vector<std::vector<int>> out;
        if (x.is_identity()) {
            out.push_back({});
        } else {
            for (int s : descents(x, Side::Right).elements()) {
                const auto prefix = mul_right(x, s);
                for (auto rw : self(self, prefix)) {
                    rw.push_back(s);
                    out.push_back(std::move(rw));
                }
            }
            std::sort(out.begin(), out.end());
        }
        return memo.emplace(x, std::move(out)).first->second;
    };
    return rec(rec, w);
}

nlohmann::json element_to_json(const CoxeterElement& w) {
    auto j = nlohmann::json::array();
    for (int s : w.word) j.push_back(s + 1);
    return j;
}

CoxeterElement element_from_json(const CoxeterSystem& sys, const nlohmann::json& j) {
    if (!j.is_array()) throw MalformedInput("element must be an array of 1-based generator indices");
    std::vector<int> word;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw MalformedInput("generator index must be an integer");
        word.push_back(x.get<int>() - 1);
    }
    return sys.normal_form(word);
}

std::string to_string(const CoxeterElement& w) {
    if (w.is_identity()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.word.size(); ++i) os << (i ? "." : "") << "s" << (w.word[i] + 1);
    return os.str();
}

} // namespace twinkit
