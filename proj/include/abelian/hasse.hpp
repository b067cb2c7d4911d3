#pragma once

#include <map>
#include <string>
#include <vector>

#include "abelian/affine.hpp"
#include "abelian/ideals.hpp"

namespace abelian {

struct HasseEdge {
    int lower;   // node index of the smaller ideal
    int upper;
    int label;   // wall type 0..l, or -1 if the alcoves are not adjacent
    auto operator<=>(const HasseEdge&) const = default;
};

struct HasseGraph {
    std::vector<AbelianIdeal> nodes;
    std::vector<AffineWord> words;  // reduced word of each node's alcove
    std::vector<HasseEdge> edges;   // one-root-difference rule, sorted
    // Alcove adjacency inside 2A coincides with the edge rule.
    bool alcove_edges_match = false;
    std::vector<std::vector<int>> adjacency() const;
};

// Nodes are taken in the given order (enumerate_all order is (dim, root sum)).
HasseGraph build_graph(const RootSystem& rs, const std::vector<AbelianIdeal>& ideals);

struct UpperAlcoveInfo {
    int ideal;
    int lower_vertex_type;
};
std::vector<UpperAlcoveInfo> upper_alcoves(const RootSystem& rs, const HasseGraph& g);

// vol^2(F_i) / vol^2(F_0) for the facets of the fundamental alcove, i = 0..l
std::vector<Rational> facet_volume_ratios(const RootSystem& rs);
// n_i^2 ||alpha_i||^2 / ||theta||^2 with n_0 = 1, alpha_0 = -theta
std::vector<Rational> expected_facet_ratios(const RootSystem& rs);

using Permutation = std::vector<int>;

// Every automorphism of the simple graph given by adjacency lists.
std::vector<Permutation> graph_automorphisms(const std::vector<std::vector<int>>& adj);

struct GroupFingerprint {
    int order = 0;
    bool is_abelian = false;
    std::map<int, int> element_orders;  // order -> multiplicity
    int center_order = 0;
    std::string name;
    bool same_group_invariants(const GroupFingerprint& o) const {
        return order == o.order && is_abelian == o.is_abelian && element_orders == o.element_orders &&
               center_order == o.center_order;
    }
};

// Invariants of the group formed by the given permutations (must be closed).
GroupFingerprint fingerprint(const std::vector<Permutation>& group);
GroupFingerprint automorphism_group(const HasseGraph& g);
std::string identify_group(const GroupFingerprint& f);

// Catalog groups as permutation groups.
std::vector<Permutation> dihedral_group(int n);
std::vector<Permutation> symmetric_group(int n);
std::vector<Permutation> klein_group();

}  // namespace abelian
