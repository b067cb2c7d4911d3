#include "abelian/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace abelian {

Polynomial::Polynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::q_int(int n) {
    if (n < 0) throw std::domain_error("q-integer of negative argument");
    return Polynomial(std::vector<std::int64_t>(n, 1));
}

Polynomial Polynomial::q_factorial(int n) {
    Polynomial p = constant(1);
    for (int k = 2; k <= n; ++k) p = p * q_int(k);
    return p;
}

Polynomial Polynomial::q_double_factorial(int m) {
    if (m % 2 != 0) throw std::domain_error("double factorial of odd argument");
    Polynomial p = constant(1);
    for (int k = 2; k <= m; k += 2) p = p * q_int(k);
    return p;
}

std::int64_t Polynomial::eval(std::int64_t t) const {
    std::int64_t v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator/(const Polynomial& o) const {
    if (o.c_.empty()) throw std::domain_error("polynomial division by zero");
    if (c_.size() < o.c_.size()) {
        if (c_.empty()) return {};
        throw std::domain_error("polynomial division not exact");
    }
    std::vector<std::int64_t> rem = c_;
    std::vector<std::int64_t> q(c_.size() - o.c_.size() + 1, 0);
    std::int64_t lead = o.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        std::int64_t top = rem[k + o.c_.size() - 1];
        if (top % lead != 0) throw std::domain_error("polynomial division not exact");
        q[k] = top / lead;
        for (std::size_t j = 0; j < o.c_.size(); ++j) rem[k + j] -= q[k] * o.c_[j];
    }
    for (auto v : rem)
        if (v != 0) throw std::domain_error("polynomial division not exact");
    return Polynomial(std::move(q));
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        std::int64_t v = c_[k];
        if (v == 0) continue;
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        std::int64_t a = v < 0 ? -v : v;
        if (k == 0 || a != 1) os << a;
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace abelian
