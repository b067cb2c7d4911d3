#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abelian {

// Integer polynomial in t, coefficient of t^k at index k.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::int64_t> coeffs);
    static Polynomial constant(std::int64_t c) { return Polynomial({c}); }

    // [n] = 1 + t + ... + t^{n-1}
    static Polynomial q_int(int n);
    // [n]! = [1][2]...[n]
    static Polynomial q_factorial(int n);
    // [2n]!! = [2][4]...[2n], indexed by the even argument m = 2n
    static Polynomial q_double_factorial(int m);

    const std::vector<std::int64_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::int64_t eval(std::int64_t t) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    // Exact division; throws std::domain_error on a nonzero remainder.
    Polynomial operator/(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const = default;

    std::string str() const;

private:
    void trim();
    std::vector<std::int64_t> c_;
};

}  // namespace abelian
