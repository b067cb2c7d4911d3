#include "abelian/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "abelian/errors.hpp"
#include "abelian/weyl.hpp"

namespace abelian {

AbelianIdeal AbelianIdeal::from_roots(int rank, std::vector<Root> roots) {
    AbelianIdeal a;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    a.root_sum = Root::zero(rank);
    for (const auto& r : roots) a.root_sum = a.root_sum + r;
    a.roots = std::move(roots);
    return a;
}

bool AbelianIdeal::contains(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }

bool AbelianIdeal::subset_of(const AbelianIdeal& o) const {
    return std::includes(o.roots.begin(), o.roots.end(), roots.begin(), roots.end());
}

namespace {

bool by_dim_then_sum(const AbelianIdeal& a, const AbelianIdeal& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.root_sum < b.root_sum;
}

}  // namespace

std::vector<AbelianIdeal> enumerate_all(const RootSystem& rs) {
    const int n = rs.num_positive();
    std::set<std::vector<int>> seen{{}};
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
        std::vector<int> cur = std::move(stack.back());
        stack.pop_back();
        std::vector<char> in(n, 0);
        for (int k : cur) in[k] = 1;
        for (int b = 0; b < n; ++b) {
            if (in[b] || rs.sum_index(b, b) >= 0) continue;
            const auto& covers = rs.upper_covers(b);
            if (!std::all_of(covers.begin(), covers.end(), [&](int c) { return in[c]; })) continue;
            if (std::any_of(cur.begin(), cur.end(), [&](int p) { return rs.sum_index(b, p) >= 0; })) continue;
            std::vector<int> next = cur;
            next.insert(std::upper_bound(next.begin(), next.end(), b), b);
            if (seen.insert(next).second) stack.push_back(std::move(next));
        }
    }
    std::vector<AbelianIdeal> out;
    for (const auto& s : seen) {
        std::vector<Root> roots;
        for (int k : s) roots.push_back(rs.positive_roots()[k]);
        out.push_back(AbelianIdeal::from_roots(rs.rank(), std::move(roots)));
    }
    std::sort(out.begin(), out.end(), by_dim_then_sum);
    return out;
}

bool is_abelian_ideal(const RootSystem& rs, const std::vector<Root>& roots) {
    std::vector<int> idx;
    for (const auto& r : roots) {
        int k = rs.index_of(r);
        if (k < 0) return false;
        idx.push_back(k);
    }
    std::set<int> in(idx.begin(), idx.end());
    for (int a : idx) {
        for (int c : rs.upper_covers(a))
            if (!in.count(c)) return false;
        for (int b : idx)
            if (rs.sum_index(a, b) >= 0) return false;
    }
    return true;
}

Rational kostant_value(const RootSystem& rs, const std::vector<Root>& psi) {
    Root sum = Root::zero(rs.rank());
    for (const auto& r : psi) {
        if (!rs.is_positive_root(r)) throw PreconditionError("kostant_value: " + r.str() + " is not a positive root");
        sum = sum + r;
    }
    return rs.norm2(rs.rho() + Weight(sum)) - rs.norm2(rs.rho());
}

static void require_long_positive(const RootSystem& rs, const Root& phi) {
    if (!rs.is_positive_root(phi) || !rs.is_long(phi))
        throw PreconditionError("expected a positive long root, got " + phi.str());
}

AbelianIdeal a_min(const RootSystem& rs, const Root& phi) {
    require_long_positive(rs, phi);
    WeylWord w = minimal_word_to_theta(rs, phi);
    std::vector<Root> roots{rs.theta()};
    for (const auto& psi : inversion_set(rs, w)) {
        Root r = rs.theta() - psi;
        if (!rs.is_positive_root(r)) throw InvariantViolation("theta - psi not a positive root: " + r.str());
        roots.push_back(r);
    }
    return AbelianIdeal::from_roots(rs.rank(), std::move(roots));
}

AbelianIdeal a_min_plus(const RootSystem& rs, const Root& phi) {
    require_long_positive(rs, phi);
    if (!rs.inner(phi, rs.theta()).is_zero()) throw PreconditionError("a_min_plus needs phi perpendicular to theta");
    AbelianIdeal base = a_min(rs, phi);
    Root extra = apply(rs, minimal_word_to_theta(rs, phi), rs.theta());
    if (!rs.is_positive_root(extra) || !rs.inner(extra, rs.theta()).is_zero())
        throw InvariantViolation("w theta is not a positive root perpendicular to theta");
    std::vector<Root> roots = base.roots;
    roots.push_back(extra);
    return AbelianIdeal::from_roots(rs.rank(), std::move(roots));
}

AbelianIdeal from_param(const RootSystem& rs, const IdealParam& param) {
    require_long_positive(rs, param.phi);
    WeylWord w = minimal_word_to_theta(rs, param.phi);
    AffineWord u{{0}};
    u.letters.insert(u.letters.end(), w.letters.begin(), w.letters.end());
    u = u + param.coset_word;
    std::vector<AffineRoot> inv;
    try {
        inv = affine_inversion_set(rs, u);
    } catch (const NonReducedWord& e) {
        throw InvariantViolation(std::string("from_param: ") + e.what());
    }
    std::vector<Root> roots;
    for (const auto& b : inv) {
        Root psi = -b.finite_part;
        if (b.level != 1 || !rs.is_positive_root(psi))
            throw InvariantViolation("from_param: inversion root " + b.str() + " is not delta minus a positive root");
        roots.push_back(psi);
    }
    AbelianIdeal a = AbelianIdeal::from_roots(rs.rank(), std::move(roots));
    Weight p = apply_affine(rs, u, rs.rho());
    if (p != a.rho_point(rs)) throw InvariantViolation("from_param: rho-point mismatch");
    if (!in_2A(rs, p)) throw InvariantViolation("from_param: rho-point outside 2A");
    return a;
}

AbelianIdeal not_perp_theta(const RootSystem& rs, const AbelianIdeal& a) {
    std::vector<Root> roots;
    for (const auto& r : a.roots)
        if (rs.inner(r, rs.theta()).sign() > 0) roots.push_back(r);
    return AbelianIdeal::from_roots(rs.rank(), std::move(roots));
}

Root associated_long_root(const RootSystem& rs, const AbelianIdeal& a) {
    if (a.roots.empty()) throw PreconditionError("associated_long_root of the zero ideal");
    AbelianIdeal core = not_perp_theta(rs, a);
    std::optional<Root> found;
    for (const auto& phi : rs.long_positive_roots()) {
        if (a_min(rs, phi) == core) {
            if (found) throw InvariantViolation("two long roots share a_min");
            found = phi;
        }
    }
    if (!found) throw InvariantViolation("no long root with matching a_min");
    return *found;
}

std::vector<ParamEntry> all_params(const RootSystem& rs) {
    std::vector<ParamEntry> out;
    for (const auto& phi : rs.long_positive_roots())
        for (const auto& rep : minimal_coset_reps(rs, phi)) {
            IdealParam p{phi, rep.word};
            out.push_back({p, from_param(rs, p)});
        }
    return out;
}

std::vector<AbelianIdeal> maximal_ideals(const std::vector<AbelianIdeal>& ideals) {
    std::vector<AbelianIdeal> out;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < ideals.size() && maximal; ++j)
            if (i != j && ideals[j].dim() > ideals[i].dim() && ideals[i].subset_of(ideals[j])) maximal = false;
        if (maximal) out.push_back(ideals[i]);
    }
    return out;
}

std::vector<AbelianIdeal> maximal_ideals(const RootSystem& rs) { return maximal_ideals(enumerate_all(rs)); }

MaxDimension max_dimension(const RootSystem& rs) {
    MaxDimension m;
    m.g_minus_1 = rs.g() - 1;
    m.dim = -1;
    for (int i : rs.long_simple_indices()) {
        Root a = Root::simple(rs.rank(), i);
        int nh = affine_perp_longest_length(rs, a);
        int nf = finite_perp_longest_length(rs, a);
        int d = rs.g() - 1 + nh - nf;
        if (d > m.dim) {
            m = MaxDimension{d, {i}, rs.g() - 1, nh, nf};
        } else if (d == m.dim) {
            m.witnesses.push_back(i);
        }
    }
    return m;
}

std::vector<Root> forbidden_roots(const RootSystem& rs) {
    std::vector<Root> out;
    for (const auto& phi : rs.positive_roots()) {
        Root rest = rs.theta() - phi * 2;
        if (!rest.is_zero() && rest.nonnegative()) out.push_back(phi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Root> roots_outside_all(const RootSystem& rs, const std::vector<AbelianIdeal>& ideals) {
    std::set<Root> used;
    for (const auto& a : ideals) used.insert(a.roots.begin(), a.roots.end());
    std::vector<Root> out;
    for (const auto& phi : rs.positive_roots())
        if (!used.count(phi)) out.push_back(phi);
    std::sort(out.begin(), out.end());
    return out;
}

int pr(const RootSystem& rs, const Root& phi) {
    IntMatrix a = affine_cartan(rs);
    const int n = rs.rank() + 1;
    std::vector<int> dist(n, -1);
    std::deque<int> q{0};
    dist[0] = 0;
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        for (int j = 0; j < n; ++j)
            if (j != i && a[i][j] != 0 && dist[j] < 0) {
                dist[j] = dist[i] + 1;
                q.push_back(j);
            }
    }
    int best = 0;
    for (int i = 1; i <= rs.rank(); ++i)
        if (phi.c[i - 1] != 0 && (best == 0 || dist[i] < dist[best])) best = i;
    return best;
}

SumFormulaReport sum_formula_report(const RootSystem& rs) {
    SumFormulaReport r;
    const int l = rs.rank();
    r.r.assign(l, 0);
    r.p_simple.assign(l, 0);
    for (int i = 1; i <= l; ++i) r.p_simple[i - 1] = poincare_P(rs, Root::simple(l, i)).eval(1);
    for (const auto& phi : rs.long_positive_roots()) {
        r.first_sum += poincare_P(rs, phi).eval(1);
        ++r.r[pr(rs, phi) - 1];
    }
    for (int i = 1; i <= l; ++i) {
        r.breakdown += static_cast<std::int64_t>(r.r[i - 1]) * r.p_simple[i - 1];
        if (rs.is_long_simple(i)) r.second_sum += static_cast<std::int64_t>(rs.marks()[i - 1]) * r.p_simple[i - 1];
    }
    r.first_ok = r.first_sum == (std::int64_t{1} << l) - 1;
    r.second_ok = r.second_sum == (std::int64_t{1} << (l - 1));
    return r;
}

}  // namespace abelian
