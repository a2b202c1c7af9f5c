#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twinkit/building.hpp"
#include "twinkit/gcm.hpp"

namespace twinkit {

/// Edge of a Dynkin tree. For labels 4 and 6 the arrow points from u to v (long to short root).
struct DynkinEdge {
    int u = 0;
    int v = 0;
    int label = 3;

    bool directed() const { return label != 3; }
    friend bool operator==(const DynkinEdge&, const DynkinEdge&) = default;
};

/// {3,4,6}-labelled tree on vertices 0..n-1 with orientations on the 4- and 6-edges.
class DynkinTree {
public:
    DynkinTree() = default;
    /// Throws NotATree unless the edges form a tree on n >= 2 vertices with labels in {3,4,6}.
    DynkinTree(int vertices, std::vector<DynkinEdge> edges);

    int size() const { return n_; }
    const std::vector<DynkinEdge>& edges() const { return edges_; }
    /// Image under the vertex map v -> perm[v].
    DynkinTree relabelled(const std::vector<int>& perm) const;

    /// {"vertices": [1..n], "edges": [{"u", "v", "label", "arrow": [from, to]}]} with 1-based vertices.
    nlohmann::json to_json() const;
    static DynkinTree from_json(const nlohmann::json& j);
    std::string to_dot() const;

private:
    int n_ = 0;
    std::vector<DynkinEdge> edges_;
};

/// Center-rooted decorated encoding as lowercase hex; equal iff the trees are isomorphic.
std::string canonical_code(const DynkinTree& t);
bool isomorphic(const DynkinTree& a, const DynkinTree& b);

/// One representative per isomorphism class on n vertices, sorted by code. Throws TooSmall for n < 2.
std::vector<DynkinTree> enumerate_trees(int n);

/// Label 3 -> (-1,-1); arrow i->j with label 4 or 6 -> (a_ij, a_ji) = (-1,-2) or (-1,-3).
Gcm gcm_of_dynkin(const DynkinTree& t);
/// Throws NotTwoSpherical if some a_ij a_ji >= 4, NotATree if the diagram is not a tree.
DynkinTree dynkin_of_gcm(const Gcm& a);

struct FoundationEdge {
    int i = 0;
    int j = 0;
    int label = 3;
    /// (from, to) when the model supplies an orientation.
    std::optional<std::pair<int, int>> arrow;
    int panel_i = 0;
    int panel_j = 0;
    int residue_size = 0;
};

/// Rank-2 residues at a base chamber. Gluings are identity placeholders.
struct FoundationDescriptor {
    Chamber base;
    int rank = 0;
    std::vector<FoundationEdge> edges;

    /// Residue types sorted, independent of the base chamber.
    nlohmann::json type_list() const;
    nlohmann::json to_json() const;
    /// Throws MalformedInput if a 4- or 6-edge has no recorded orientation.
    DynkinTree dynkin() const;
};

/// Throws NotThick for thin models, NotTwoSpherical if some m_ij is infinite.
/// Orientations come from metadata {"orientation": [[from, to], ...]} with 0-based generators.
FoundationDescriptor collapse_foundation(const TwinBuilding& b, const Chamber& c);

} // namespace twinkit
