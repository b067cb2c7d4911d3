#include <algorithm>

#include "doctest.h"

#include "abelian/hasse.hpp"

using namespace abelian;

namespace {

std::vector<std::vector<int>> cycle(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        adj[i].push_back((i + 1) % n);
        adj[(i + 1) % n].push_back(i);
    }
    return adj;
}

std::vector<std::vector<int>> complete(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) adj[i].push_back(j);
    return adj;
}

std::vector<int> lower_types(const RootSystem& rs) {
    HasseGraph g = build_graph(rs, enumerate_all(rs));
    std::vector<int> out;
    for (const auto& u : upper_alcoves(rs, g)) out.push_back(u.lower_vertex_type);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("automorphisms of small graphs") {
    CHECK(graph_automorphisms(cycle(5)).size() == 10);
    CHECK(identify_group(fingerprint(graph_automorphisms(cycle(5)))) == "Dih_5");
    CHECK(identify_group(fingerprint(graph_automorphisms(cycle(4)))) == "Dih_4");
    CHECK(graph_automorphisms(complete(4)).size() == 24);
    CHECK(identify_group(fingerprint(graph_automorphisms(complete(4)))) == "Sym_4");
    std::vector<std::vector<int>> path = {{1}, {0, 2}, {1}};
    CHECK(identify_group(fingerprint(graph_automorphisms(path))) == "Z/2");
    std::vector<std::vector<int>> rigid = {{1}, {0, 2}, {1, 3, 6}, {2, 4}, {3, 5}, {4}, {2}};
    CHECK(graph_automorphisms(rigid).size() == 1);
}

TEST_CASE("model groups") {
    CHECK(fingerprint(dihedral_group(3)).same_group_invariants(fingerprint(symmetric_group(3))));
    CHECK(!fingerprint(dihedral_group(4)).same_group_invariants(fingerprint(klein_group())));
    CHECK(fingerprint(klein_group()).is_abelian);
    CHECK(fingerprint(symmetric_group(4)).center_order == 1);
    CHECK(fingerprint(dihedral_group(4)).center_order == 2);
    CHECK(identify_group(fingerprint(klein_group())) == "Z/2 × Z/2");
}

TEST_CASE("Hasse graph") {
    RootSystem rs = RootSystem::build("A2");
    HasseGraph g = build_graph(rs, enumerate_all(rs));
    CHECK(g.nodes.size() == 4);
    CHECK(g.edges.size() == 3);
    CHECK(g.alcove_edges_match);
    for (const auto& e : g.edges) {
        CHECK(g.nodes[e.upper].dim() == g.nodes[e.lower].dim() + 1);
        CHECK(e.label >= 0);
    }
    RootSystem d5 = RootSystem::build("D5");
    HasseGraph h = build_graph(d5, enumerate_all(d5));
    CHECK(h.alcove_edges_match);
    CHECK(automorphism_group(h).name == "Dih_4");
}

TEST_CASE("upper alcoves") {
    CHECK(lower_types(RootSystem::build("A2")) == std::vector<int>{1, 2});
    CHECK(lower_types(RootSystem::build("C2")) == std::vector<int>{2, 2});
    CHECK(lower_types(RootSystem::build("G2")) == std::vector<int>{2});
}

TEST_CASE("facet volumes") {
    for (const auto& t : all_types(8)) {
        RootSystem rs = RootSystem::build(t);
        CAPTURE(t.name());
        CHECK(facet_volume_ratios(rs) == expected_facet_ratios(rs));
    }
}
