#pragma once

#include <map>
#include <optional>
#include <vector>

#include "abelian/affine.hpp"
#include "abelian/root_system.hpp"

namespace abelian {

struct AbelianIdeal {
    std::vector<Root> roots;  // lexicographically sorted
    Root root_sum;

    static AbelianIdeal from_roots(int rank, std::vector<Root> roots);
    int dim() const { return static_cast<int>(roots.size()); }
    bool contains(const Root& r) const;
    bool subset_of(const AbelianIdeal& o) const;
    Weight rho_point(const RootSystem& rs) const { return rs.rho() + Weight(root_sum); }
    bool operator==(const AbelianIdeal& o) const { return roots == o.roots; }
};

struct IdealParam {
    Root phi;
    AffineWord coset_word;
};

// All abelian ideals by depth-first growth of up-closed abelian sets; sorted
// by (dim, root sum).
std::vector<AbelianIdeal> enumerate_all(const RootSystem& rs);

bool is_abelian_ideal(const RootSystem& rs, const std::vector<Root>& roots);
// ||rho + <Psi>||^2 - ||rho||^2; Psi must consist of positive roots.
Rational kostant_value(const RootSystem& rs, const std::vector<Root>& psi);

AbelianIdeal a_min(const RootSystem& rs, const Root& phi);
AbelianIdeal a_min_plus(const RootSystem& rs, const Root& phi);
AbelianIdeal from_param(const RootSystem& rs, const IdealParam& param);
AbelianIdeal not_perp_theta(const RootSystem& rs, const AbelianIdeal& a);
Root associated_long_root(const RootSystem& rs, const AbelianIdeal& a);

struct ParamEntry {
    IdealParam param;
    AbelianIdeal ideal;
};
// from_param over every positive long root and every minimal coset representative.
std::vector<ParamEntry> all_params(const RootSystem& rs);

// Inclusion-maximal members of `ideals`.
std::vector<AbelianIdeal> maximal_ideals(const std::vector<AbelianIdeal>& ideals);
std::vector<AbelianIdeal> maximal_ideals(const RootSystem& rs);

struct MaxDimension {
    int dim = 0;
    std::vector<int> witnesses;  // long simple roots attaining dim
    int g_minus_1 = 0;
    int n_hat = 0;  // for the first witness
    int n = 0;
};
// max over long simple alpha of g-1 + N(What_perp alpha) - N(W_perp alpha)
MaxDimension max_dimension(const RootSystem& rs);

// Positive roots phi with theta - 2 phi a nonzero sum of positive roots.
std::vector<Root> forbidden_roots(const RootSystem& rs);
// Positive roots lying in no ideal of the list.
std::vector<Root> roots_outside_all(const RootSystem& rs, const std::vector<AbelianIdeal>& ideals);

// Support node of phi nearest the affine node (ties to the smaller index).
int pr(const RootSystem& rs, const Root& phi);

struct SumFormulaReport {
    std::int64_t first_sum = 0;           // sum of P_phi(1) over long positive phi
    std::int64_t second_sum = 0;          // sum of n_i P_{alpha_i}(1) over long simple alpha_i
    std::vector<int> r;                   // r_i = #{phi long : pr(phi) = alpha_i}
    std::vector<std::int64_t> p_simple;   // P_{alpha_i}(1)
    std::int64_t breakdown = 0;           // sum r_i P_{alpha_i}(1)
    bool first_ok = false;
    bool second_ok = false;
};
SumFormulaReport sum_formula_report(const RootSystem& rs);

}  // namespace abelian
