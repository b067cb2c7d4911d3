#include "abelian/weyl.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "abelian/errors.hpp"

namespace abelian {

std::string WeylWord::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? " " : "") << "s" << letters[i];
    return os.str();
}

WeylElement WeylElement::identity(int rank) {
    IntMatrix m(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) m[i][i] = 1;
    return WeylElement(std::move(m));
}

WeylElement WeylElement::generator(const IntMatrix& cartan, int row) {
    WeylElement e = identity(static_cast<int>(cartan.size()));
    for (std::size_t j = 0; j < cartan.size(); ++j) e.m_[row][j] -= cartan[row][j];
    return e;
}

WeylElement WeylElement::of(const RootSystem& rs, const WeylWord& w) {
    WeylElement e = identity(rs.rank());
    for (int a : w.letters) {
        if (a < 1 || a > rs.rank()) throw PreconditionError("letter out of range");
        e = e * generator(rs.cartan(), a - 1);
    }
    return e;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    const std::size_t n = m_.size();
    IntMatrix r(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (m_[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += m_[i][k] * o.m_[k][j];
        }
    return WeylElement(std::move(r));
}

Root WeylElement::apply(const Root& x) const {
    Root r = Root::zero(x.rank());
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j) r.c[i] += m_[i][j] * x.c[j];
    return r;
}

Weight WeylElement::apply(const Weight& x) const {
    Weight r = Weight::zero(x.rank());
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j)
            if (m_[i][j] != 0) r.c[i] += Rational(m_[i][j]) * x.c[j];
    return r;
}

Root reflect(const RootSystem& rs, int i, const Root& x) {
    Root r = x;
    r.c[i - 1] -= rs.cartan_pairing(x, i);
    return r;
}

Weight reflect(const RootSystem& rs, int i, const Weight& x) {
    Rational p = 0;
    for (int j = 0; j < rs.rank(); ++j) p += Rational(rs.cartan()[i - 1][j]) * x.c[j];
    Weight r = x;
    r.c[i - 1] -= p;
    return r;
}

Weight apply(const RootSystem& rs, const WeylWord& w, const Weight& x) {
    Weight r = x;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = reflect(rs, *it, r);
    return r;
}

Root apply(const RootSystem& rs, const WeylWord& w, const Root& x) {
    Root r = x;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = reflect(rs, *it, r);
    return r;
}

std::vector<Root> inversion_set(const RootSystem& rs, const WeylWord& w) {
    std::vector<Root> out;
    std::set<Root> seen;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        WeylWord prefix{{w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(k)}};
        Root r = apply(rs, prefix, Root::simple(rs.rank(), w.letters[k]));
        if (!r.nonnegative() || !seen.insert(r).second) {
            Root rep = r.nonnegative() ? r : -r;
            throw NonReducedWord("word " + w.str() + " is not reduced: root " + rep.str() + " repeats", rep.str());
        }
        out.push_back(r);
    }
    return out;
}

int length(const RootSystem& rs, const WeylElement& w) {
    int n = 0;
    for (const auto& r : rs.positive_roots())
        if (!w.apply(r).nonnegative()) ++n;
    return n;
}

WeylWord minimal_word_to_theta(const RootSystem& rs, const Root& phi, TieBreak tie) {
    if (!rs.is_positive_root(phi) || !rs.is_long(phi))
        throw PreconditionError("minimal_word_to_theta needs a positive long root, got " + phi.str());
    std::vector<int> picks;
    Root psi = phi;
    while (psi != rs.theta()) {
        int pick = 0;
        for (int i = 1; i <= rs.rank(); ++i) {
            if (rs.cartan_pairing(psi, i) < 0) {
                pick = i;
                if (tie == TieBreak::Smallest) break;
            }
        }
        if (pick == 0) throw InvariantViolation("dominant long root other than theta");
        psi = reflect(rs, pick, psi);
        picks.push_back(pick);
    }
    return WeylWord{{picks.rbegin(), picks.rend()}};
}

IntMatrix sub_cartan(const IntMatrix& cartan, const std::vector<int>& rows) {
    IntMatrix m(rows.size(), std::vector<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m[i][j] = cartan[rows[i]][rows[j]];
    return m;
}

namespace {

// Generating function of the orbit of the fundamental weight of the last
// node under the whole group, graded by distance from the dominant weight.
Polynomial orbit_polynomial(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<int> start(n, 0);
    start[n - 1] = 1;
    std::vector<std::int64_t> counts;
    std::set<std::vector<int>> level{start};
    while (!level.empty()) {
        counts.push_back(static_cast<std::int64_t>(level.size()));
        std::set<std::vector<int>> next;
        for (const auto& lam : level)
            for (std::size_t j = 0; j < n; ++j) {
                if (lam[j] <= 0) continue;
                std::vector<int> mu = lam;
                for (std::size_t i = 0; i < n; ++i) mu[i] -= lam[j] * a[i][j];
                next.insert(std::move(mu));
            }
        level = std::move(next);
    }
    return Polynomial(std::move(counts));
}

struct MatrixHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

Polynomial coxeter_poincare(const IntMatrix& cartan) {
    Polynomial p = Polynomial::constant(1);
    for (std::size_t m = 1; m <= cartan.size(); ++m) {
        std::vector<int> rows(m);
        for (std::size_t i = 0; i < m; ++i) rows[i] = static_cast<int>(i);
        p = p * orbit_polynomial(sub_cartan(cartan, rows));
    }
    return p;
}

Polynomial coxeter_poincare_bfs(const IntMatrix& cartan, std::size_t limit) {
    const int n = static_cast<int>(cartan.size());
    std::vector<WeylElement> gens;
    for (int i = 0; i < n; ++i) gens.push_back(WeylElement::generator(cartan, i));
    auto flat = [](const WeylElement& e) {
        std::vector<int> v;
        for (const auto& row : e.matrix()) v.insert(v.end(), row.begin(), row.end());
        return v;
    };
    std::unordered_set<std::vector<int>, MatrixHash> seen;
    std::vector<WeylElement> level{WeylElement::identity(n)};
    seen.insert(flat(level[0]));
    std::vector<std::int64_t> counts;
    while (!level.empty()) {
        counts.push_back(static_cast<std::int64_t>(level.size()));
        std::vector<WeylElement> next;
        for (const auto& e : level)
            for (const auto& s : gens) {
                WeylElement f = e * s;
                if (seen.insert(flat(f)).second) {
                    if (seen.size() > limit) throw std::length_error("group larger than BFS limit");
                    next.push_back(std::move(f));
                }
            }
        level = std::move(next);
    }
    return Polynomial(std::move(counts));
}

int longest_element_length(const IntMatrix& cartan) {
    if (cartan.empty()) return 0;
    return static_cast<int>(positive_roots_of(cartan).size());
}

static std::vector<int> to_rows(const RootSystem& rs, const std::vector<int>& nodes) {
    std::vector<int> rows;
    for (int i : nodes) {
        if (i < 1 || i > rs.rank()) throw PreconditionError("node out of range");
        rows.push_back(i - 1);
    }
    return rows;
}

Polynomial parabolic_poincare(const RootSystem& rs, const std::vector<int>& nodes) {
    return coxeter_poincare(sub_cartan(rs.cartan(), to_rows(rs, nodes)));
}

int longest_element_length(const RootSystem& rs, const std::vector<int>& nodes) {
    return longest_element_length(sub_cartan(rs.cartan(), to_rows(rs, nodes)));
}

Polynomial product_formula(const std::vector<int>& exponents) {
    Polynomial p = Polynomial::constant(1);
    for (int m : exponents) p = p * Polynomial::q_int(m + 1);
    return p;
}

}  // namespace abelian
