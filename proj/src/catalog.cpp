#include "abelian/catalog.hpp"

#include <algorithm>
#include <map>

#include "abelian/errors.hpp"

namespace abelian::catalog {

namespace {

Polynomial q(int n) { return Polynomial::q_int(n); }
Polynomial qf(int n) { return Polynomial::q_factorial(n); }
Polynomial qdf(int m) { return Polynomial::q_double_factorial(m); }

std::vector<int> range(int from, int to) {  // inclusive, either direction
    std::vector<int> out;
    if (from <= to)
        for (int i = from; i <= to; ++i) out.push_back(i);
    else
        for (int i = from; i >= to; --i) out.push_back(i);
    return out;
}

// ascending run from..to, empty when to < from
std::vector<int> up(int from, int to) { return to < from ? std::vector<int>{} : range(from, to); }
// descending run from..to, empty when from < to
std::vector<int> down(int from, int to) { return from < to ? std::vector<int>{} : range(from, to); }

WeylWord join(std::initializer_list<std::vector<int>> parts) {
    WeylWord w;
    for (const auto& p : parts) w.letters.insert(w.letters.end(), p.begin(), p.end());
    return w;
}

const std::map<std::string, std::vector<std::vector<int>>>& exceptional_words() {
    static const std::map<std::string, std::vector<std::vector<int>>> table = {
        {"E6",
         {{1, 2, 3, 4, 2, 5, 3, 6, 4, 2},
          {1, 2, 3, 4, 2, 1, 5, 3, 6, 4},
          {1, 2, 3, 4, 2, 1, 5, 6, 4, 2},
          {1, 2, 3, 4, 2, 1, 5, 3, 2, 6},
          {1, 2, 3, 4, 2, 1, 6, 4, 2, 3},
          {1, 2, 3, 4, 2, 1, 5, 3, 2, 4}}},
        {"E7",
         {{1, 2, 3, 4, 5, 3, 2, 6, 4, 3, 5, 7, 6, 4, 3, 2},
          {1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 5, 7, 6, 4, 3},
          {1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 5, 7, 6, 4},
          {1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 5, 3, 7, 6},
          {1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 7, 6, 4, 3},
          {1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 5, 3, 4, 7},
          {1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 5, 3, 4, 6}}},
        {"E8",
         {{1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 8, 6, 5, 4, 3, 7, 5, 4, 6, 5, 7, 8, 6, 5, 4, 3, 2},
          {1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 7, 5, 4, 6, 5, 7, 8, 6, 5, 4, 3},
          {1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 6, 5, 7, 8, 6, 5, 4},
          {1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 7, 8, 6, 5},
          {1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 7, 8, 6},
          {1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 7, 5, 8},
          {1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 8, 6, 5},
          {1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 7, 5, 6}}},
        {"F4", {{1, 2, 3, 2, 4, 3, 2}, {1, 2, 3, 2, 1, 4, 3}}},
        {"G2", {{}, {2, 1}}},
    };
    return table;
}

}  // namespace

int max_dim(const SimpleType& t) {
    const int l = t.rank;
    switch (t.family) {
        case 'A':
            if (l == 1) return 1;
            return l % 2 == 1 ? (l + 1) * (l + 1) / 4 : (l * l + 2 * l) / 4;
        case 'B':
            if (l == 2) return 3;
            if (l == 3) return 5;
            return (l * l - l + 2) / 2;
        case 'C': return (l * l + l) / 2;
        case 'D': return (l * l - l) / 2;
        case 'E': return l == 6 ? 16 : l == 7 ? 27 : 36;
        case 'F': return 9;
        case 'G': return 3;
    }
    throw InvalidType(t.name());
}

int max_dim_multiplicity(const SimpleType& t) {
    if (t.family == 'D') return t.rank == 4 ? 3 : 2;
    if (t.family == 'A' && t.rank % 2 == 0) return 2;
    if (t.family == 'E' && t.rank == 6) return 2;
    return 1;
}

int long_positive_count(const SimpleType& t) {
    const int l = t.rank;
    switch (t.family) {
        case 'A': return l * (l + 1) / 2;
        case 'B': return l * (l - 1);
        case 'C': return l;
        case 'D': return l * (l - 1);
        case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
        case 'F': return 12;
        case 'G': return 3;
    }
    throw InvalidType(t.name());
}

int positive_count(const SimpleType& t) {
    const int l = t.rank;
    switch (t.family) {
        case 'A': return l * (l + 1) / 2;
        case 'B':
        case 'C': return l * l;
        case 'D': return l * (l - 1);
        case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    throw InvalidType(t.name());
}

int dual_coxeter(const SimpleType& t) {
    const int l = t.rank;
    switch (t.family) {
        case 'A': return l + 1;
        case 'B': return 2 * l - 1;
        case 'C': return l + 1;
        case 'D': return 2 * l - 2;
        case 'E': return l == 6 ? 12 : l == 7 ? 18 : 30;
        case 'F': return 9;
        case 'G': return 4;
    }
    throw InvalidType(t.name());
}

std::vector<int> exponents(const SimpleType& t) {
    const int l = t.rank;
    std::vector<int> e;
    switch (t.family) {
        case 'A':
            for (int i = 1; i <= l; ++i) e.push_back(i);
            return e;
        case 'B':
        case 'C':
            for (int i = 1; i <= l; ++i) e.push_back(2 * i - 1);
            return e;
        case 'D':
            for (int i = 1; i < l; ++i) e.push_back(2 * i - 1);
            e.push_back(l - 1);
            std::sort(e.begin(), e.end());
            return e;
        case 'E':
            if (l == 6) return {1, 4, 5, 7, 8, 11};
            if (l == 7) return {1, 5, 7, 9, 11, 13, 17};
            return {1, 7, 11, 13, 17, 19, 23, 29};
        case 'F': return {1, 5, 7, 11};
        case 'G': return {1, 5};
    }
    throw InvalidType(t.name());
}

Polynomial theta_quotient_poincare(const SimpleType& t) {
    const int l = t.rank;
    switch (t.family) {
        case 'A': return q(l) * q(l + 1);
        case 'C': return q(2 * l);
        case 'B': return q(2 * l - 2) * q(2 * l) / q(2);
        case 'D': return q(l) * q(2 * l - 4) * q(2 * l - 2) / (q(2) * q(l - 2));
        case 'E':
            if (l == 6) return q(8) * q(9) * q(12) / (q(3) * q(4));
            if (l == 7) return q(12) * q(14) * q(18) / (q(4) * q(6));
            return q(20) * q(24) * q(30) / (q(6) * q(10));
        case 'F': return q(8) * q(12) / q(4);
        case 'G': return q(6);
    }
    throw InvalidType(t.name());
}

Polynomial simple_root_poincare(const SimpleType& t, int i) {
    const int l = t.rank;
    if (i < 1 || i > l) throw PreconditionError("node out of range");
    switch (t.family) {
        case 'A': return qf(l - 1) / (qf(i - 1) * qf(l - i));
        case 'C': return qdf(2 * i - 2) / qf(i - 1);
        case 'B':
            if (i == 1) return q(2);
            return qdf(2 * i - 4) / qf(i - 2);
        case 'D':
            if (i == 1) return q(2);
            if (i == l) i = l - 1;
            return qdf(2 * i - 4) / qf(i - 2);
        case 'E': {
            static const std::map<int, std::vector<Polynomial>> e = {
                {6, {q(1), q(2), q(3), q(3), q(6), q(6)}},
                {7, {q(1), q(2), q(3), q(4), q(4), q(6), q(6) * q(10) / q(5)}},
                {8, {q(1), q(2), q(3), q(4), q(5), q(6), q(6), q(8)}},
            };
            return e.at(l)[i - 1];
        }
        case 'F': return std::vector<Polynomial>{q(1), q(2), q(3), q(4)}[i - 1];
        case 'G': return i == 1 ? q(2) : q(1);
    }
    throw InvalidType(t.name());
}

std::optional<std::vector<int>> r_counts(const SimpleType& t) {
    const int l = t.rank;
    std::vector<int> r(l, 0);
    switch (t.family) {
        case 'A': return std::nullopt;
        case 'C':
            r.assign(l, 1);
            return r;
        case 'B':
            if (l == 2) return std::vector<int>{1, 1};
            r[0] = 1;
            r[1] = 4 * l - 7;
            for (int i = 3; i <= l - 2; ++i) r[i - 1] = 2 * l - 2 * i;
            if (l >= 4) r[l - 2] = 2;
            r[l - 1] = 0;
            return r;
        case 'D':
            r[0] = 1;
            r[1] = 4 * l - 7;
            for (int i = 3; i <= l - 3; ++i) r[i - 1] = 2 * l - 2 * i;
            if (l >= 5) r[l - 3] = 4;
            r[l - 2] = 1;
            r[l - 1] = 1;
            return r;
        case 'E':
            if (l == 6) return std::vector<int>{21, 9, 2, 2, 1, 1};
            if (l == 7) return std::vector<int>{33, 15, 8, 3, 1, 2, 1};
            return std::vector<int>{57, 27, 16, 10, 6, 2, 1, 1};
        case 'F': return std::vector<int>{9, 3, 0, 0};
        case 'G': return std::vector<int>{0, 3};
    }
    throw InvalidType(t.name());
}

std::optional<WeylWord> theta_word(const SimpleType& t, int i) {
    const int l = t.rank;
    switch (t.family) {
        case 'A': return join({up(1, i - 1), down(l, i + 1)});
        case 'C':
            if (i != l) return std::nullopt;
            return join({up(1, l - 1)});
        case 'B':
            if (i == l) return std::nullopt;
            return join({up(2, l), up(1, i - 1), down(l - 1, i + 1)});
        case 'D':
            if (i <= l - 2) return join({up(2, l - 2), up(1, i - 1), down(l, i + 1)});
            return join({up(2, l - 2), up(1, l - 3), {2 * l - i - 1, l - 2}});
        default: {
            const auto& rows = exceptional_words().at(t.name());
            if (i > static_cast<int>(rows.size())) return std::nullopt;
            if (t.family == 'G' && i == 1) return std::nullopt;
            return WeylWord{rows[i - 1]};
        }
    }
}

AutExpectation hasse_aut(const SimpleType& t) {
    const int l = t.rank;
    switch (t.family) {
        case 'A':
            if (l == 1) return {2, "Z/2"};
            return {2 * (l + 1), l + 1 == 3 ? "Sym_3" : "Dih_" + std::to_string(l + 1)};
        case 'B': return {2, "Z/2"};
        case 'C': return l == 3 ? AutExpectation{4, "Z/2 × Z/2"} : AutExpectation{2, "Z/2"};
        case 'D': return l == 4 ? AutExpectation{24, "Sym_4"} : AutExpectation{8, "Dih_4"};
        case 'E':
            if (l == 6) return {6, "Sym_3"};
            if (l == 7) return {2, "Z/2"};
            return {1, "1"};
        case 'F': return {1, "1"};
        case 'G': return {2, "Z/2"};
    }
    throw InvalidType(t.name());
}

}  // namespace abelian::catalog
