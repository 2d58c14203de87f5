#pragma once

#include "splitlevi/rational.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitlevi {

/// Dense univariate polynomial over the rationals, coefficients in
/// ascending degree order.  The zero polynomial has an empty
/// coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rational& a) { return a == 0 ? Poly() : Poly({a}); }
    static Poly monomial(int deg, const Rational& a = 1) {
        std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
        v.back() = a;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Rational& s) {
        std::vector<Rational> v = a.c_;
        for (auto& x : v) x *= s;
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division; divisor must be non-zero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("Poly: division by zero");
        Poly r = *this;
        std::vector<Rational> q(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational f = r.leading() / d.leading();
            q[static_cast<size_t>(k)] = f;
            for (size_t i = 0; i < d.c_.size(); ++i)
                r.c_[i + static_cast<size_t>(k)] -= f * d.c_[i];
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::string str(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            Rational a = c_[static_cast<size_t>(i)];
            if (a == 0) continue;
            if (!first) os << (a > 0 ? " + " : " - ");
            else if (a < 0) os << "-";
            Rational mag = a > 0 ? a : Rational(-a);
            if (i == 0 || mag != 1) os << mag.str();
            if (i > 0) {
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// d-th cyclotomic polynomial, computed by dividing q^d - 1 by the
/// cyclotomic polynomials of the proper divisors of d.
inline const Poly& cyclotomic_poly(unsigned long d) {
    static std::map<unsigned long, Poly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    Poly p = Poly::monomial(static_cast<int>(d)) - Poly::constant(1);
    for (unsigned long e = 1; e < d; ++e) {
        if (d % e == 0) {
            auto [q, r] = p.divmod(cyclotomic_poly(e));
            if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
            p = q;
        }
    }
    return cache.emplace(d, std::move(p)).first->second;
}

/// Exact factorization of a polynomial into cyclotomic polynomials
/// times a scalar.
struct CycloFactorization {
    std::map<unsigned long, unsigned> factors;  // d -> multiplicity
    Rational scalar = 1;

    Poly reconstruct() const {
        Poly p = Poly::constant(scalar);
        for (auto [d, m] : factors)
            for (unsigned i = 0; i < m; ++i) p = p * cyclotomic_poly(d);
        return p;
    }

    int degree() const {
        int deg = 0;
        for (auto [d, m] : factors) deg += static_cast<int>(euler_phi(d) * m);
        return deg;
    }

    CycloFactorization& operator*=(const CycloFactorization& other) {
        for (auto [d, m] : other.factors) factors[d] += m;
        scalar *= other.scalar;
        return *this;
    }

    /// Exact quotient; throws when some multiplicity would go negative.
    CycloFactorization& operator/=(const CycloFactorization& other) {
        for (auto [d, m] : other.factors) {
            auto it = factors.find(d);
            if (it == factors.end() || it->second < m)
                throw std::invalid_argument("CycloFactorization: inexact quotient");
            it->second -= m;
            if (it->second == 0) factors.erase(it);
        }
        scalar /= other.scalar;
        return *this;
    }

    friend bool operator==(const CycloFactorization& a, const CycloFactorization& b) {
        return a.factors == b.factors && a.scalar == b.scalar;
    }

    /// Renders e.g. "(q-1)^5(q+1)^3"; the empty product is "1".
    std::string str() const {
        std::ostringstream os;
        if (scalar != 1 || factors.empty()) os << scalar.str();
        for (auto [d, m] : factors) {
            os << "(" << cyclotomic_poly(d).str() << ")";
            if (m > 1) os << "^" << m;
        }
        return os.str();
    }

    /// Compact form using Phi-symbols, e.g. "P1^5.P2^3".
    std::string phi_str() const {
        if (factors.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (auto [d, m] : factors) {
            if (!first) os << ".";
            os << "P" << d;
            if (m > 1) os << "^" << m;
            first = false;
        }
        return os.str();
    }
};

/// Factors p as scalar * prod_d Phi_d^{m_d}.  Throws when a
/// non-cyclotomic residual remains, reporting it.
inline CycloFactorization cyclotomic_factor(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("cyclotomic_factor: zero polynomial");
    CycloFactorization out;
    out.scalar = p.leading();
    Poly rem = p * (Rational(1) / p.leading());
    // Eigenvalue orders of finite-order integral matrices in the ranks
    // handled here stay far below this bound.
    const unsigned long max_d = 3000;
    for (unsigned long d = 1; d <= max_d && rem.degree() > 0; ++d) {
        if (static_cast<int>(euler_phi(d)) > rem.degree()) continue;
        for (;;) {
            auto [q, r] = rem.divmod(cyclotomic_poly(d));
            if (!r.is_zero()) break;
            rem = q;
            ++out.factors[d];
            if (rem.degree() == 0) break;
        }
    }
    if (rem.degree() > 0)
        throw std::domain_error("cyclotomic_factor: non-cyclotomic residual " + rem.str());
    return out;
}

}  // namespace splitlevi
