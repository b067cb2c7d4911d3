#include "abelian/affine.hpp"

#include <algorithm>
#include <sstream>

#include "abelian/errors.hpp"

namespace abelian {

AffineWord AffineWord::then(int i) const {
    AffineWord w = *this;
    w.letters.push_back(i);
    return w;
}

AffineWord AffineWord::operator+(const AffineWord& o) const {
    AffineWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

std::string AffineWord::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? " " : "") << "s" << letters[i];
    return os.str();
}

bool AffineRoot::positive() const {
    if (level != 0) return level > 0;
    return !finite_part.is_zero() && finite_part.nonnegative();
}

std::string AffineRoot::str() const {
    return finite_part.str() + (level >= 0 ? "+" : "") + std::to_string(level) + "d";
}

AffineRoot simple_affine_root(const RootSystem& rs, int i) {
    if (i == 0) return {-rs.theta(), 1};
    return {Root::simple(rs.rank(), i), 0};
}

static int theta_pairing(const RootSystem& rs, const Root& phi) {
    Rational p = rs.coroot_pairing(Weight(phi), rs.theta());
    if (!p.is_integer()) throw InvariantViolation("non-integral pairing with theta coroot");
    return static_cast<int>(p.num());
}

Weight reflect_affine(const RootSystem& rs, int i, const Weight& x) {
    if (i < 0 || i > rs.rank()) throw PreconditionError("affine letter out of range");
    if (i > 0) return reflect(rs, i, x);
    Rational k = rs.coroot_pairing(x, rs.theta()) - Rational(rs.g());
    return x - Weight(rs.theta()) * k;
}

Weight apply_affine(const RootSystem& rs, const AffineWord& w, const Weight& x) {
    Weight r = x;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = reflect_affine(rs, *it, r);
    return r;
}

AffineRoot reflect_affine_root(const RootSystem& rs, int i, const AffineRoot& beta) {
    if (i < 0 || i > rs.rank()) throw PreconditionError("affine letter out of range");
    if (i > 0) return {reflect(rs, i, beta.finite_part), beta.level};
    int p = theta_pairing(rs, beta.finite_part);
    return {beta.finite_part - rs.theta() * p, beta.level + p};
}

AffineRoot apply_affine(const RootSystem& rs, const AffineWord& w, const AffineRoot& beta) {
    AffineRoot r = beta;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = reflect_affine_root(rs, *it, r);
    return r;
}

std::vector<AffineRoot> affine_inversion_set(const RootSystem& rs, const AffineWord& w) {
    std::vector<AffineRoot> out;
    std::set<AffineRoot> seen;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        AffineWord prefix{{w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(k)}};
        AffineRoot r = apply_affine(rs, prefix, simple_affine_root(rs, w.letters[k]));
        if (!r.positive() || !seen.insert(r).second) {
            AffineRoot rep = r.positive() ? r : -r;
            throw NonReducedWord("affine word " + w.str() + " is not reduced: root " + rep.str() + " repeats",
                                 rep.str());
        }
        out.push_back(r);
    }
    return out;
}

bool in_dominant_chamber(const RootSystem& rs, const Weight& x) {
    for (int i = 1; i <= rs.rank(); ++i)
        if (rs.inner(x, Weight(Root::simple(rs.rank(), i))).sign() < 0) return false;
    return true;
}

bool in_2A(const RootSystem& rs, const Weight& x) {
    return in_dominant_chamber(rs, x) && rs.inner(x, Weight(rs.theta())) <= Rational(1);
}

std::vector<Vertex> fundamental_vertices(const RootSystem& rs) {
    std::vector<Vertex> out{{0, Weight::zero(rs.rank())}};
    for (int i = 1; i <= rs.rank(); ++i)
        out.push_back({i, rs.fundamental_coweights()[i - 1] * Rational(1, rs.marks()[i - 1])});
    return out;
}

std::vector<Vertex> alcove_vertices(const RootSystem& rs, const AffineWord& w) {
    std::vector<Vertex> out = fundamental_vertices(rs);
    for (auto& v : out) v.point = apply_affine(rs, w, v.point);
    return out;
}

IntMatrix affine_cartan(const RootSystem& rs) {
    const int l = rs.rank();
    std::vector<Root> simple{-rs.theta()};
    for (int i = 1; i <= l; ++i) simple.push_back(Root::simple(l, i));
    IntMatrix a(l + 1, std::vector<int>(l + 1));
    for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j) {
            Rational v = Rational(2) * rs.inner(simple[i], simple[j]) / rs.norm2(simple[i]);
            a[i][j] = static_cast<int>(v.num());
        }
    return a;
}

std::set<int> perp_generators(const RootSystem& rs, const Root& phi) {
    std::set<int> out;
    if (rs.inner(rs.theta(), phi).is_zero()) out.insert(0);
    for (int i = 1; i <= rs.rank(); ++i)
        if (rs.inner(Root::simple(rs.rank(), i), phi).is_zero()) out.insert(i);
    return out;
}

static void require_positive(const RootSystem& rs, const Root& phi) {
    if (!rs.is_positive_root(phi)) throw PreconditionError("expected a positive root, got " + phi.str());
}

std::vector<CosetRep> minimal_coset_reps(const RootSystem& rs, const Root& phi) {
    require_positive(rs, phi);
    const std::set<int> gens = perp_generators(rs, phi);
    std::vector<int> finite;
    for (int j : gens)
        if (j != 0) finite.push_back(j);

    std::vector<CosetRep> out{{AffineWord{}, rs.rho()}};
    std::set<Weight> seen{rs.rho()};
    std::size_t begin = 0;
    while (begin < out.size()) {
        std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k) {
            const AffineWord base = out[k].word;
            for (int j : gens) {
                if (!apply_affine(rs, base, simple_affine_root(rs, j)).positive()) continue;
                AffineWord cand = base.then(j);
                AffineWord inv{{cand.letters.rbegin(), cand.letters.rend()}};
                bool left_minimal = std::all_of(finite.begin(), finite.end(), [&](int i) {
                    return apply_affine(rs, inv, simple_affine_root(rs, i)).positive();
                });
                if (!left_minimal) continue;
                Weight p = apply_affine(rs, cand, rs.rho());
                if (!seen.insert(p).second) continue;
                out.push_back({std::move(cand), std::move(p)});
            }
        }
        begin = end;
    }
    return out;
}

Polynomial poincare_P(const RootSystem& rs, const Root& phi) {
    std::vector<std::int64_t> counts;
    for (const auto& r : minimal_coset_reps(rs, phi)) {
        std::size_t len = r.word.letters.size();
        if (counts.size() <= len) counts.resize(len + 1, 0);
        ++counts[len];
    }
    return Polynomial(std::move(counts));
}

static std::vector<int> perp_rows(const RootSystem& rs, const Root& phi, bool with_affine) {
    std::vector<int> rows;
    for (int j : perp_generators(rs, phi))
        if (with_affine || j != 0) rows.push_back(j);
    return rows;
}

Polynomial poincare_P_quotient(const RootSystem& rs, const Root& phi) {
    require_positive(rs, phi);
    IntMatrix a = affine_cartan(rs);
    Polynomial top = coxeter_poincare(sub_cartan(a, perp_rows(rs, phi, true)));
    Polynomial bottom = coxeter_poincare(sub_cartan(a, perp_rows(rs, phi, false)));
    return top / bottom;
}

int affine_perp_longest_length(const RootSystem& rs, const Root& phi) {
    return longest_element_length(sub_cartan(affine_cartan(rs), perp_rows(rs, phi, true)));
}

int finite_perp_longest_length(const RootSystem& rs, const Root& phi) {
    return longest_element_length(sub_cartan(affine_cartan(rs), perp_rows(rs, phi, false)));
}

}  // namespace abelian
