#pragma once

#include <set>
#include <string>
#include <vector>

#include "abelian/polynomial.hpp"
#include "abelian/root_system.hpp"
#include "abelian/weyl.hpp"

namespace abelian {

// s_{a_1} ... s_{a_k}, letters in 0..l; s_0 is the scaled affine reflection.
struct AffineWord {
    std::vector<int> letters;
    int size() const { return static_cast<int>(letters.size()); }
    AffineWord then(int i) const;
    AffineWord operator+(const AffineWord& o) const;
    std::string str() const;
    bool operator==(const AffineWord&) const = default;
};

// finite_part + level * delta
struct AffineRoot {
    Root finite_part;
    int level = 0;

    bool positive() const;
    AffineRoot operator-() const { return {-finite_part, -level}; }
    auto operator<=>(const AffineRoot&) const = default;
    std::string str() const;
};

struct Alcove {
    AffineWord word;
    Weight rho_point;
};

struct Vertex {
    int type;  // 0..l
    Weight point;
};

AffineRoot simple_affine_root(const RootSystem& rs, int i);  // alpha_0 = delta - theta
Weight reflect_affine(const RootSystem& rs, int i, const Weight& x);
Weight apply_affine(const RootSystem& rs, const AffineWord& w, const Weight& x);
AffineRoot reflect_affine_root(const RootSystem& rs, int i, const AffineRoot& beta);
AffineRoot apply_affine(const RootSystem& rs, const AffineWord& w, const AffineRoot& beta);
// {alpha_{a1}, s_{a1} alpha_{a2}, ...}; throws NonReducedWord.
std::vector<AffineRoot> affine_inversion_set(const RootSystem& rs, const AffineWord& w);

bool in_2A(const RootSystem& rs, const Weight& x);
bool in_dominant_chamber(const RootSystem& rs, const Weight& x);
std::vector<Vertex> fundamental_vertices(const RootSystem& rs);
std::vector<Vertex> alcove_vertices(const RootSystem& rs, const AffineWord& w);

// Extended Cartan matrix, row/column 0 is alpha_0.
IntMatrix affine_cartan(const RootSystem& rs);
std::set<int> perp_generators(const RootSystem& rs, const Root& phi);

struct CosetRep {
    AffineWord word;
    Weight rho_point;
};

// Minimal length representatives of W_perp(phi) \ What_perp(phi), in BFS
// order (nondecreasing length); phi any positive root.
std::vector<CosetRep> minimal_coset_reps(const RootSystem& rs, const Root& phi);
Polynomial poincare_P(const RootSystem& rs, const Root& phi);
// What_perp(t) / W_perp(t) from the two parabolic Poincare series.
Polynomial poincare_P_quotient(const RootSystem& rs, const Root& phi);
// Number of positive roots of What_perp(phi) and W_perp(phi).
int affine_perp_longest_length(const RootSystem& rs, const Root& phi);
int finite_perp_longest_length(const RootSystem& rs, const Root& phi);

}  // namespace abelian
