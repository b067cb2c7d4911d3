#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "abelian/polynomial.hpp"
#include "abelian/root_system.hpp"

namespace abelian {

// s_{a_1} s_{a_2} ... s_{a_k}, letters in 1..l; acts right-to-left on vectors.
struct WeylWord {
    std::vector<int> letters;
    int size() const { return static_cast<int>(letters.size()); }
    std::string str() const;
    bool operator==(const WeylWord&) const = default;
};

class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(IntMatrix m) : m_(std::move(m)) {}
    static WeylElement identity(int rank);
    static WeylElement generator(const IntMatrix& cartan, int row);  // 0-based row
    static WeylElement of(const RootSystem& rs, const WeylWord& w);

    const IntMatrix& matrix() const { return m_; }
    WeylElement operator*(const WeylElement& o) const;
    Root apply(const Root& x) const;
    Weight apply(const Weight& x) const;
    bool operator==(const WeylElement&) const = default;
    auto operator<=>(const WeylElement&) const = default;

private:
    IntMatrix m_;
};

Root reflect(const RootSystem& rs, int i, const Root& x);
Weight reflect(const RootSystem& rs, int i, const Weight& x);
Weight apply(const RootSystem& rs, const WeylWord& w, const Weight& x);
Root apply(const RootSystem& rs, const WeylWord& w, const Root& x);

// Phi_w = {alpha_{a1}, s_{a1} alpha_{a2}, ...}; throws NonReducedWord.
std::vector<Root> inversion_set(const RootSystem& rs, const WeylWord& w);

// Number of positive roots sent to negative roots.
int length(const RootSystem& rs, const WeylElement& w);

enum class TieBreak { Smallest, Largest };

// Word w with apply(w, phi) = theta and length L(phi); phi positive long.
WeylWord minimal_word_to_theta(const RootSystem& rs, const Root& phi, TieBreak tie = TieBreak::Smallest);

// Restriction of a Cartan matrix to the given 0-based rows/columns.
IntMatrix sub_cartan(const IntMatrix& cartan, const std::vector<int>& rows);

// Length generating function of the Coxeter group of a finite-type Cartan
// matrix, as a product of orbit generating functions along a node tower.
Polynomial coxeter_poincare(const IntMatrix& cartan);
// Same, by breadth-first search over group elements. Throws std::length_error
// once more than `limit` elements are visited.
Polynomial coxeter_poincare_bfs(const IntMatrix& cartan, std::size_t limit = 10'000'000);
// Number of positive roots of the (possibly reducible) system.
int longest_element_length(const IntMatrix& cartan);

// Parabolic subgroups of W generated by simple reflections with nodes in 1..l.
Polynomial parabolic_poincare(const RootSystem& rs, const std::vector<int>& nodes);
int longest_element_length(const RootSystem& rs, const std::vector<int>& nodes);

// prod [m_i + 1]
Polynomial product_formula(const std::vector<int>& exponents);

}  // namespace abelian
