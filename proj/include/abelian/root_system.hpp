#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelian/rational.hpp"

namespace abelian {

using IntMatrix = std::vector<std::vector<int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

struct SimpleType {
    char family = 'A';
    int rank = 1;

    // Accepts "<letter><rank>", e.g. "A11", "E8". Throws InvalidType.
    static SimpleType parse(std::string_view s);
    static bool valid(char family, int rank);
    static std::string grammar_help();
    std::string name() const;
    bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
    bool operator==(const SimpleType&) const = default;
};

// All types of rank <= max_rank, in family order A, B, C, D, E, F, G.
std::vector<SimpleType> all_types(int max_rank);

// Integer coordinates in the simple-root basis.
struct Root {
    std::vector<int> c;

    Root() = default;
    explicit Root(std::vector<int> coords) : c(std::move(coords)) {}
    static Root simple(int rank, int i);  // i in 1..rank
    static Root zero(int rank) { return Root(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(c.size()); }
    int height() const;
    bool is_zero() const;
    bool nonnegative() const;
    bool nonpositive() const;

    Root operator-() const;
    Root operator+(const Root& o) const;
    Root operator-(const Root& o) const;
    Root operator*(int k) const;
    auto operator<=>(const Root&) const = default;

    std::string str() const;
};

// Rational coordinates in the simple-root basis.
struct Weight {
    std::vector<Rational> c;

    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : c(std::move(coords)) {}
    Weight(const Root& r);  // NOLINT(google-explicit-constructor)
    static Weight zero(int rank) { return Weight(std::vector<Rational>(rank)); }

    int rank() const { return static_cast<int>(c.size()); }
    Weight operator-() const;
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator*(const Rational& k) const;
    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

    // Integral coordinates as a Root; nullopt if some coordinate is fractional.
    std::optional<Root> as_root() const;
    std::string str() const;
};

// Cartan matrix a_ij = <alpha_i^vee, alpha_j> in the repository labeling.
IntMatrix cartan_matrix(const SimpleType& t);

// Positive roots of any finite-type Cartan matrix (possibly reducible),
// generated by root-string closure from the simple roots.
std::vector<Root> positive_roots_of(const IntMatrix& cartan);

class RootSystem {
public:
    static RootSystem build(const SimpleType& t);
    static RootSystem build(std::string_view t) { return build(SimpleType::parse(t)); }

    // Same system with the Gram matrix multiplied by `factor`. Used to build
    // deliberately mis-normalized fixtures.
    RootSystem rescaled(const Rational& factor) const;

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const IntMatrix& cartan() const { return cartan_; }
    const RatMatrix& gram() const { return gram_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const std::vector<Root>& long_positive_roots() const { return long_positive_; }
    const Root& theta() const { return theta_; }
    const std::vector<int>& marks() const { return theta_.c; }
    const std::vector<int>& exponents() const { return exponents_; }
    int g() const { return g_; }
    int h() const { return h_; }
    const Weight& rho() const { return rho_; }
    const std::vector<Weight>& fundamental_weights() const { return fund_; }
    const std::vector<Weight>& fundamental_coweights() const { return cofund_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }

    Rational inner(const Weight& x, const Weight& y) const;
    Rational inner(const Root& x, const Root& y) const;
    Rational norm2(const Weight& x) const { return inner(x, x); }
    Rational norm2(const Root& x) const { return inner(x, x); }
    Rational simple_norm2(int i) const { return gram_[i - 1][i - 1]; }
    // 2(lambda|phi)/(phi|phi)
    Rational coroot_pairing(const Weight& lambda, const Root& phi) const;
    // <beta, alpha_i^vee> for integral beta, via the Cartan matrix
    int cartan_pairing(const Root& beta, int i) const;
    // 2(theta - phi | rho)/(theta|theta)
    Rational L(const Root& phi) const;
    static int height(const Root& phi) { return phi.height(); }

    bool is_long(const Root& phi) const;
    bool is_long_simple(int i) const;
    std::vector<int> long_simple_indices() const;
    // Index into positive_roots(), or -1.
    int index_of(const Root& phi) const;
    bool is_positive_root(const Root& phi) const { return index_of(phi) >= 0; }
    bool is_root(const Root& phi) const { return is_positive_root(phi) || is_positive_root(-phi); }
    // Index of positive_roots()[a] + positive_roots()[b] if that is a root, else -1.
    int sum_index(int a, int b) const { return sum_table_[a * positive_.size() + b]; }
    // Indices j with positive_roots()[i] + alpha_j a root, as root indices.
    const std::vector<int>& upper_covers(int i) const { return covers_[i]; }

    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    // The five normalization identities plus the marks/height relation.
    std::vector<Check> normalization_checks() const;

private:
    SimpleType type_;
    IntMatrix cartan_;
    RatMatrix gram_;
    std::vector<Root> positive_;
    std::vector<Root> long_positive_;
    std::vector<bool> long_flag_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> sum_table_;
    std::vector<std::vector<int>> covers_;
    Root theta_;
    std::vector<int> exponents_;
    int g_ = 0;
    int h_ = 0;
    Weight rho_;
    std::vector<Weight> fund_;
    std::vector<Weight> cofund_;

    void derive_tables();
};

// Gaussian elimination over Q.
Rational determinant(RatMatrix m);
RatMatrix inverse(const RatMatrix& m);

}  // namespace abelian
