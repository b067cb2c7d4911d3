#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abelian/polynomial.hpp"
#include "abelian/root_system.hpp"
#include "abelian/weyl.hpp"

// Closed forms tabulated for each type, in the repository labeling.
namespace abelian::catalog {

int max_dim(const SimpleType& t);
int max_dim_multiplicity(const SimpleType& t);
int long_positive_count(const SimpleType& t);  // nu(X)
int positive_count(const SimpleType& t);       // N_X
int dual_coxeter(const SimpleType& t);
std::vector<int> exponents(const SimpleType& t);
// W(t) / W_perp_theta(t)
Polynomial theta_quotient_poincare(const SimpleType& t);
// P_{alpha_i}(t), i in 1..l
Polynomial simple_root_poincare(const SimpleType& t, int i);
// r_i = #{phi long positive : pr(phi) = alpha_i}; not tabulated for type A
std::optional<std::vector<int>> r_counts(const SimpleType& t);
// w with w alpha_i = theta, where tabulated
std::optional<WeylWord> theta_word(const SimpleType& t, int i);

struct AutExpectation {
    int order;
    std::string name;
};
AutExpectation hasse_aut(const SimpleType& t);

}  // namespace abelian::catalog
