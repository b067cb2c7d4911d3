#include "abelian/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "abelian/errors.hpp"

namespace abelian {

// ---------------------------------------------------------------- SimpleType

bool SimpleType::valid(char family, int rank) {
    switch (family) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

std::string SimpleType::grammar_help() {
    return "valid types: A<l> (l>=1), B<l> (l>=2), C<l> (l>=2), D<l> (l>=4), E6, E7, E8, F4, G2";
}

SimpleType SimpleType::parse(std::string_view s) {
    auto fail = [&]() -> SimpleType {
        throw InvalidType("invalid type '" + std::string(s) + "'; " + grammar_help());
    };
    if (s.size() < 2 || s.size() > 4) return fail();
    char f = s[0];
    if (f < 'A' || f > 'G') return fail();
    if (s[1] == '0') return fail();
    int r = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return fail();
        r = r * 10 + (s[i] - '0');
    }
    if (!valid(f, r)) return fail();
    return SimpleType{f, r};
}

std::string SimpleType::name() const { return std::string(1, family) + std::to_string(rank); }

std::vector<SimpleType> all_types(int max_rank) {
    std::vector<SimpleType> out;
    for (char f : std::string("ABCDEFG"))
        for (int r = 1; r <= max_rank; ++r)
            if (SimpleType::valid(f, r)) out.push_back({f, r});
    return out;
}

// ---------------------------------------------------------------- Root / Weight

Root Root::simple(int rank, int i) {
    Root r = zero(rank);
    r.c[i - 1] = 1;
    return r;
}

int Root::height() const {
    int s = 0;
    for (int x : c) s += x;
    return s;
}

bool Root::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Root::nonnegative() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool Root::nonpositive() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
}

static void same_rank(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionMismatch("vectors of different rank");
}

Root Root::operator-() const {
    Root r = *this;
    for (int& x : r.c) x = -x;
    return r;
}

Root Root::operator+(const Root& o) const {
    same_rank(c.size(), o.c.size());
    Root r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Root Root::operator-(const Root& o) const { return *this + (-o); }

Root Root::operator*(int k) const {
    Root r = *this;
    for (int& x : r.c) x *= k;
    return r;
}

std::string Root::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

Weight::Weight(const Root& r) {
    c.reserve(r.c.size());
    for (int x : r.c) c.emplace_back(x);
}

Weight Weight::operator-() const {
    Weight w = *this;
    for (auto& x : w.c) x = -x;
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    same_rank(c.size(), o.c.size());
    Weight w = *this;
    for (std::size_t i = 0; i < c.size(); ++i) w.c[i] += o.c[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator*(const Rational& k) const {
    Weight w = *this;
    for (auto& x : w.c) x *= k;
    return w;
}

std::optional<Root> Weight::as_root() const {
    Root r = Root::zero(rank());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_integer()) return std::nullopt;
        r.c[i] = static_cast<int>(c[i].num());
    }
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- Cartan data

namespace {

void link(IntMatrix& a, int i, int j, int aij = -1, int aji = -1) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
}

}  // namespace

IntMatrix cartan_matrix(const SimpleType& t) {
    const int l = t.rank;
    IntMatrix a(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) a[i][i] = 2;
    switch (t.family) {
        case 'A':
            for (int i = 1; i < l; ++i) link(a, i, i + 1);
            break;
        case 'B':
            for (int i = 1; i + 1 < l; ++i) link(a, i, i + 1);
            link(a, l - 1, l, -1, -2);  // alpha_l short
            break;
        case 'C':
            for (int i = 1; i + 1 < l; ++i) link(a, i, i + 1);
            link(a, l - 1, l, -2, -1);  // alpha_l long
            break;
        case 'D':
            for (int i = 1; i + 1 < l; ++i) link(a, i, i + 1);
            link(a, l - 2, l);
            break;
        case 'E':
            // nodes numbered by distance from the affine node, which is attached to 1
            if (l == 6) {
                for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {3, 5}, {2, 4}, {4, 6}}) link(a, i, j);
            } else if (l == 7) {
                for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {6, 7}}) link(a, i, j);
            } else {
                for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 8}, {5, 7}})
                    link(a, i, j);
            }
            break;
        case 'F':
            link(a, 1, 2);
            link(a, 2, 3, -1, -2);  // alpha_1, alpha_2 long
            link(a, 3, 4);
            break;
        case 'G':
            link(a, 1, 2, -3, -1);  // alpha_1 short
            break;
        default:
            throw InvalidType("unknown family");
    }
    return a;
}

std::vector<Root> positive_roots_of(const IntMatrix& a) {
    const int l = static_cast<int>(a.size());
    std::vector<Root> out;
    std::set<std::vector<int>> seen;
    std::deque<Root> queue;
    for (int i = 1; i <= l; ++i) {
        Root s = Root::simple(l, i);
        seen.insert(s.c);
        out.push_back(s);
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Root beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < l; ++i) {
            int pairing = 0;
            for (int j = 0; j < l; ++j) pairing += a[i][j] * beta.c[j];
            int p = 0;
            Root down = beta;
            while (true) {
                down.c[i] -= 1;
                if (!seen.count(down.c)) break;
                ++p;
            }
            int q = p - pairing;
            if (q <= 0) continue;
            Root up = beta;
            up.c[i] += 1;
            if (seen.insert(up.c).second) {
                out.push_back(up);
                queue.push_back(up);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
        int hx = x.height(), hy = y.height();
        return hx != hy ? hx < hy : x < y;
    });
    return out;
}

Rational determinant(RatMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (std::size_t k = 0; k < n; ++k) {
            a[col][k] /= p;
            inv[col][k] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[col][k];
                inv[r][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------- RootSystem

RootSystem RootSystem::build(const SimpleType& t) {
    if (!SimpleType::valid(t.family, t.rank)) throw InvalidType("invalid rank for family " + t.name());
    RootSystem rs;
    rs.type_ = t;
    rs.cartan_ = cartan_matrix(t);
    const int l = t.rank;
    const auto& a = rs.cartan_;

    // symmetrizer d_i a_ij = d_j a_ji by BFS over the diagram
    std::vector<Rational> d(l);
    std::vector<bool> done(l, false);
    d[0] = 1;
    done[0] = true;
    std::deque<int> q{0};
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        for (int j = 0; j < l; ++j) {
            if (j == i || a[i][j] == 0 || done[j]) continue;
            d[j] = d[i] * Rational(a[i][j], a[j][i]);
            done[j] = true;
            q.push_back(j);
        }
    }
    RatMatrix b(l, std::vector<Rational>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) b[i][j] = d[i] * Rational(a[i][j]);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (b[i][j] != b[j][i]) throw InvariantViolation("Cartan matrix not symmetrizable");

    rs.positive_ = positive_roots_of(a);
    const Root& top = rs.positive_.back();
    int count_top = 0;
    for (const auto& r : rs.positive_)
        if (r.height() == top.height()) ++count_top;
    if (count_top != 1) throw InvariantViolation("highest root not unique");
    rs.theta_ = top;
    rs.h_ = top.height() + 1;

    Weight two_rho = Weight::zero(l);
    for (const auto& r : rs.positive_) two_rho = two_rho + Weight(r);
    rs.rho_ = two_rho * Rational(1, 2);

    rs.gram_ = b;  // provisional, for the unnormalized pairing
    Weight th(rs.theta_);
    Rational pairing = Rational(2) * rs.inner(rs.rho_, th) / rs.inner(th, th);
    if (!pairing.is_integer()) throw InvariantViolation("<rho, theta^vee> not integral");
    rs.g_ = static_cast<int>(pairing.num()) + 1;
    Rational scale = Rational(1) / (Rational(rs.g_) * rs.inner(th, th));
    for (auto& row : rs.gram_)
        for (auto& x : row) x *= scale;

    // exponents: conjugate partition of the height distribution
    std::vector<int> by_height(rs.h_ + 1, 0);
    for (const auto& r : rs.positive_) ++by_height[r.height()];
    for (int k = 1; k < rs.h_; ++k)
        for (int m = 0; m < by_height[k] - by_height[k + 1]; ++m) rs.exponents_.push_back(k);

    RatMatrix ar(l, std::vector<Rational>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) ar[i][j] = a[i][j];
    RatMatrix ainv = inverse(ar);
    for (int i = 0; i < l; ++i) {
        Weight w = Weight::zero(l);
        for (int k = 0; k < l; ++k) w.c[k] = ainv[k][i];
        rs.fund_.push_back(w);
    }

    for (int i = 0; i < static_cast<int>(rs.positive_.size()); ++i) rs.index_[rs.positive_[i].c] = i;
    const std::size_t n = rs.positive_.size();
    rs.sum_table_.assign(n * n, -1);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) rs.sum_table_[x * n + y] = rs.index_of(rs.positive_[x] + rs.positive_[y]);
    rs.covers_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x)
        for (int i = 1; i <= l; ++i) {
            int k = rs.index_of(rs.positive_[x] + Root::simple(l, i));
            if (k >= 0) rs.covers_[x].push_back(k);
        }
    rs.derive_tables();
    return rs;
}

void RootSystem::derive_tables() {
    const int l = rank();
    Rational tn = norm2(theta_);
    long_flag_.clear();
    long_positive_.clear();
    for (const auto& r : positive_) {
        bool lg = norm2(r) == tn;
        long_flag_.push_back(lg);
        if (lg) long_positive_.push_back(r);
    }
    cofund_.clear();
    for (int i = 0; i < l; ++i) cofund_.push_back(fund_[i] * (Rational(1) / gram_[i][i]));
}

RootSystem RootSystem::rescaled(const Rational& factor) const {
    RootSystem rs = *this;
    for (auto& row : rs.gram_)
        for (auto& x : row) x *= factor;
    rs.derive_tables();
    return rs;
}

Rational RootSystem::inner(const Weight& x, const Weight& y) const {
    same_rank(x.c.size(), static_cast<std::size_t>(rank()));
    same_rank(y.c.size(), static_cast<std::size_t>(rank()));
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x.c[i].is_zero()) continue;
        Rational t = 0;
        for (int j = 0; j < rank(); ++j)
            if (!y.c[j].is_zero()) t += gram_[i][j] * y.c[j];
        s += x.c[i] * t;
    }
    return s;
}

Rational RootSystem::inner(const Root& x, const Root& y) const {
    same_rank(x.c.size(), static_cast<std::size_t>(rank()));
    same_rank(y.c.size(), static_cast<std::size_t>(rank()));
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; j < rank(); ++j)
            if (y.c[j] != 0) s += gram_[i][j] * Rational(static_cast<std::int64_t>(x.c[i]) * y.c[j]);
    }
    return s;
}

Rational RootSystem::coroot_pairing(const Weight& lambda, const Root& phi) const {
    if (phi.is_zero()) throw PreconditionError("coroot pairing with the zero vector");
    return Rational(2) * inner(lambda, Weight(phi)) / norm2(phi);
}

int RootSystem::cartan_pairing(const Root& beta, int i) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += cartan_[i - 1][j] * beta.c[j];
    return s;
}

Rational RootSystem::L(const Root& phi) const {
    return Rational(2) * inner(Weight(theta_ - phi), rho_) / norm2(theta_);
}

bool RootSystem::is_long(const Root& phi) const { return norm2(phi) == norm2(theta_); }

bool RootSystem::is_long_simple(int i) const { return gram_[i - 1][i - 1] == norm2(theta_); }

std::vector<int> RootSystem::long_simple_indices() const {
    std::vector<int> out;
    for (int i = 1; i <= rank(); ++i)
        if (is_long_simple(i)) out.push_back(i);
    return out;
}

int RootSystem::index_of(const Root& phi) const {
    auto it = index_.find(phi.c);
    return it == index_.end() ? -1 : it->second;
}

std::vector<RootSystem::Check> RootSystem::normalization_checks() const {
    std::vector<Check> out;
    const int l = rank();
    const int n = num_positive();
    Weight th(theta_);
    auto add = [&](std::string name, const Rational& got, const Rational& want) {
        out.push_back({std::move(name), got == want, "got " + got.str() + ", want " + want.str()});
    };
    add("theta_norm_inverse_is_g", Rational(1) / norm2(th), g_);
    add("casimir_rho_theta", norm2(rho_ + th) - norm2(rho_), 1);
    add("strange_formula", norm2(rho_), Rational(l + 2 * n, 24));
    Rational brown = 0;
    for (const auto& r : positive_) brown += Rational(2) * norm2(r);
    add("brown_sum_of_root_norms", brown, l);
    Rational marks = norm2(th);
    for (int i = 1; i <= l; ++i) marks += Rational(theta_.c[i - 1]) * simple_norm2(i);
    add("marks_norm_sum", marks, 1);
    add("coxeter_number_root_count", Rational(h_ * l), 2 * n);
    return out;
}

}  // namespace abelian
