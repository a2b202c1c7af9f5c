#include "twinkit/dynkin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "twinkit/errors.hpp"

namespace twinkit {

namespace {

struct Arc {
    int to;
    std::string decoration;
};

std::vector<std::vector<Arc>> arcs(const DynkinTree& t) {
    std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(t.size()));
    for (const auto& e : t.edges()) {
        const std::string m = std::to_string(e.label);
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.directed() ? m + ">" : m});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.directed() ? m + "<" : m});
    }
    return adj;
}

std::string encode(const std::vector<std::vector<Arc>>& adj, int v, int parent) {
    std::vector<std::string> parts;
    for (const auto& a : adj[static_cast<std::size_t>(v)])
        if (a.to != parent) parts.push_back(a.decoration + encode(adj, a.to, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& s : parts) out += s;
    return out + ")";
}

std::vector<int> centers(const std::vector<std::vector<Arc>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (const auto& a : adj[static_cast<std::size_t>(v)])
                if (--degree[static_cast<std::size_t>(a.to)] == 1) next.push_back(a.to);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
}

} // namespace

DynkinTree::DynkinTree(int vertices, std::vector<DynkinEdge> edges) : n_(vertices), edges_(std::move(edges)) {
    if (n_ < 2) throw NotATree("a Dynkin tree needs at least two vertices");
    if (static_cast<int>(edges_.size()) != n_ - 1)
        throw NotATree(std::to_string(edges_.size()) + " edges on " + std::to_string(n_) + " vertices");
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v) throw NotATree("bad edge endpoints");
        if (e.label != 3 && e.label != 4 && e.label != 6) throw NotATree("label " + std::to_string(e.label));
        if (!e.directed() && e.u > e.v) std::swap(e.u, e.v);
        const int a = find_root(parent, e.u), b = find_root(parent, e.v);
        if (a == b) throw NotATree("cycle through vertex " + std::to_string(e.u + 1));
        parent[static_cast<std::size_t>(a)] = b;
    }
}

DynkinTree DynkinTree::relabelled(const std::vector<int>& perm) const {
    std::vector<DynkinEdge> out;
    for (const auto& e : edges_)
        out.push_back({perm.at(static_cast<std::size_t>(e.u)), perm.at(static_cast<std::size_t>(e.v)), e.label});
    return DynkinTree(n_, std::move(out));
}

nlohmann::json DynkinTree::to_json() const {
    nlohmann::json verts = nlohmann::json::array();
    for (int v = 1; v <= n_; ++v) verts.push_back(v);
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : edges_) {
        nlohmann::json j = {{"u", e.u + 1}, {"v", e.v + 1}, {"label", e.label}};
        if (e.directed()) j["arrow"] = {e.u + 1, e.v + 1};
        es.push_back(j);
    }
    return {{"vertices", verts}, {"edges", es}};
}

DynkinTree DynkinTree::from_json(const nlohmann::json& j) {
    try {
        const auto& vs = j.at("vertices");
        const int n = vs.is_number_integer() ? vs.get<int>() : static_cast<int>(vs.size());
        std::vector<DynkinEdge> edges;
        for (const auto& e : j.at("edges")) {
            DynkinEdge d{e.at("u").get<int>() - 1, e.at("v").get<int>() - 1, e.at("label").get<int>()};
            if (d.directed()) {
                if (!e.contains("arrow")) throw MalformedInput("edge labelled " + std::to_string(d.label) + " needs an arrow");
                const int from = e["arrow"].at(0).get<int>() - 1, to = e["arrow"].at(1).get<int>() - 1;
                if (!((from == d.u && to == d.v) || (from == d.v && to == d.u)))
                    throw MalformedInput("arrow does not match its edge");
                d.u = from;
                d.v = to;
            } else if (e.contains("arrow")) {
                throw MalformedInput("3-edges carry no orientation");
            }
            edges.push_back(d);
        }
        return DynkinTree(n, std::move(edges));
    } catch (const nlohmann::json::exception& ex) {
        throw MalformedInput(ex.what());
    }
}

std::string DynkinTree::to_dot() const {
    std::ostringstream os;
    os << "graph dynkin {\n  node [shape=circle];\n";
    for (int v = 1; v <= n_; ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const auto& e : edges_) {
        os << "  v" << e.u + 1 << " -- v" << e.v + 1 << " [label=\"" << e.label << "\"";
        if (e.directed()) os << ", dir=forward";
        if (e.label == 4) os << ", style=bold";
        if (e.label == 6) os << ", penwidth=3";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string canonical_code(const DynkinTree& t) {
    const auto adj = arcs(t);
    std::string best;
    for (int c : centers(adj)) {
        std::string s = encode(adj, c, -1);
        if (best.empty() || s < best) best = std::move(s);
    }
    return hex(best);
}

bool isomorphic(const DynkinTree& a, const DynkinTree& b) {
    return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::vector<DynkinTree> enumerate_trees(int n) {
    if (n < 2) throw TooSmall("trees need at least two vertices, got " + std::to_string(n));
    static const DynkinEdge kinds[] = {{0, 1, 3}, {0, 1, 4}, {1, 0, 4}, {0, 1, 6}, {1, 0, 6}};
    std::map<std::string, DynkinTree> classes;
    for (const auto& k : kinds) {
        DynkinTree t(2, {k});
        classes.emplace(canonical_code(t), t);
    }
    for (int m = 3; m <= n; ++m) {
        std::map<std::string, DynkinTree> next;
        const int leaf = m - 1;
        for (const auto& [code, t] : classes)
            for (int v = 0; v < leaf; ++v)
                for (const auto& k : kinds) {
                    auto edges = t.edges();
                    edges.push_back({k.u == 0 ? v : leaf, k.u == 0 ? leaf : v, k.label});
                    DynkinTree grown(m, std::move(edges));
                    next.emplace(canonical_code(grown), std::move(grown));
                }
        classes = std::move(next);
    }
    std::vector<DynkinTree> out;
    for (auto& [code, t] : classes) out.push_back(std::move(t));
    return out;
}

Gcm gcm_of_dynkin(const DynkinTree& t) {
    const int n = t.size();
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (const auto& e : t.edges()) {
        const int m = e.label == 3 ? 1 : e.label == 4 ? 2 : 3;
        a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = -1;
        a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = -m;
    }
    return Gcm(a);
}

DynkinTree dynkin_of_gcm(const Gcm& a) {
    std::vector<DynkinEdge> edges;
    for (int i = 0; i < a.rank(); ++i)
        for (int j = i + 1; j < a.rank(); ++j) {
            if (a(i, j) == 0) continue;
            const int prod = a(i, j) * a(j, i);
            if (prod >= 4)
                throw NotTwoSpherical("a_" + std::to_string(i + 1) + std::to_string(j + 1) + " a_" +
                                      std::to_string(j + 1) + std::to_string(i + 1) + " = " + std::to_string(prod));
            if (prod == 1) {
                edges.push_back({i, j, 3});
            } else if (a(i, j) == -1) {
                edges.push_back({i, j, prod == 2 ? 4 : 6});
            } else if (a(j, i) == -1) {
                edges.push_back({j, i, prod == 2 ? 4 : 6});
            } else {
                throw NotTwoSpherical("entries " + std::to_string(a(i, j)) + ", " + std::to_string(a(j, i)));
            }
        }
    return DynkinTree(a.rank(), std::move(edges));
}

nlohmann::json FoundationDescriptor::type_list() const {
    std::vector<nlohmann::json> items;
    for (const auto& e : edges) {
        nlohmann::json j = {{"edge", {e.i + 1, e.j + 1}}, {"label", e.label}, {"panels", {e.panel_i, e.panel_j}},
                            {"residue_size", e.residue_size}};
        if (e.arrow) j["arrow"] = {e.arrow->first + 1, e.arrow->second + 1};
        items.push_back(j);
    }
    std::sort(items.begin(), items.end());
    return items;
}

nlohmann::json FoundationDescriptor::to_json() const {
    return {{"base", chamber_to_json(base)}, {"rank", rank}, {"residues", type_list()}, {"gluing", "identity"}};
}

DynkinTree FoundationDescriptor::dynkin() const {
    std::vector<DynkinEdge> out;
    for (const auto& e : edges) {
        if (e.label == 3) {
            out.push_back({e.i, e.j, 3});
        } else {
            if (!e.arrow)
                throw MalformedInput("no orientation recorded for edge {" + std::to_string(e.i + 1) + "," +
                                     std::to_string(e.j + 1) + "}");
            out.push_back({e.arrow->first, e.arrow->second, e.label});
        }
    }
    return DynkinTree(rank, std::move(out));
}

FoundationDescriptor collapse_foundation(const TwinBuilding& b, const Chamber& c) {
    if (!b.is_thick()) throw NotThick(b.name() + " has a thin panel");
    const auto& m = b.type().matrix();
    FoundationDescriptor out;
    out.base = c;
    out.rank = b.rank();
    const auto meta = b.metadata();
    for (int i = 0; i < b.rank(); ++i)
        for (int j = i + 1; j < b.rank(); ++j) {
            if (m.is_infinite(i, j))
                throw NotTwoSpherical("m_" + std::to_string(i + 1) + std::to_string(j + 1) + " is infinite");
            if (m(i, j) == 2) continue;
            FoundationEdge e;
            e.i = i;
            e.j = j;
            e.label = m(i, j) == 3 ? 3 : m(i, j);
            e.panel_i = static_cast<int>(b.panel(c.sign, i, c.index).size());
            e.panel_j = static_cast<int>(b.panel(c.sign, j, c.index).size());
            e.residue_size = static_cast<int>(residue(b, c, GeneratorSet{i, j}).chambers.size());
            if (e.label != 3 && meta.contains("orientation"))
                for (const auto& arrow : meta["orientation"]) {
                    const int from = arrow.at(0).get<int>(), to = arrow.at(1).get<int>();
                    if ((from == i && to == j) || (from == j && to == i)) e.arrow = std::make_pair(from, to);
                }
            out.edges.push_back(e);
        }
    return out;
}

} // namespace twinkit
