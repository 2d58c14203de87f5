#pragma once

#include "splitlevi/polynomial.hpp"
#include "splitlevi/rational.hpp"

#include <stdexcept>
#include <vector>

namespace splitlevi {

/// Element of the cyclotomic field Q(zeta_n) in the power basis
/// 1, zeta, ..., zeta^{phi(n)-1} modulo the n-th cyclotomic
/// polynomial.  The conductor is fixed per computation; mixing
/// conductors throws.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& a, unsigned long n = 1)
        : n_(n), c_(euler_phi(n), Rational(0)) {
        c_[0] = a;
    }

    /// zeta_n^k
    static Cyclotomic root_of_unity(unsigned long n, long k) {
        long kk = k % static_cast<long>(n);
        if (kk < 0) kk += static_cast<long>(n);
        Cyclotomic z;
        z.n_ = n;
        std::vector<Rational> pow(static_cast<size_t>(kk) + 1, Rational(0));
        pow.back() = 1;
        z.c_ = reduce(Poly(std::move(pow)), n);
        return z;
    }

    unsigned long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& a : c_)
            if (a != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rational rational_part() const {
        if (!is_rational()) throw std::domain_error("Cyclotomic: not rational");
        return c_[0];
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = align(a, b);
        for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = align(a, b);
        for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a) {
        Cyclotomic x = a;
        for (auto& v : x.c_) v = -v;
        return x;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = align(a, b);
        Cyclotomic out;
        out.n_ = x.n_;
        out.c_ = reduce(Poly(x.c_) * Poly(y.c_), x.n_);
        return out;
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
    Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Inverse via the extended Euclidean algorithm against Phi_n,
    /// which is irreducible over Q.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
        if (is_rational()) {
            Cyclotomic out;
            out.n_ = n_;
            out.c_.assign(euler_phi(n_), Rational(0));
            out.c_[0] = Rational(1) / c_[0];
            return out;
        }
        // Bezout: u*a + v*Phi_n = gcd = nonzero constant.
        Poly a(c_), m = cyclotomic_poly(n_);
        Poly r0 = m, r1 = a, u0, u1 = Poly::constant(1);
        while (!r1.is_zero() && r1.degree() > 0) {
            auto [q, r] = r0.divmod(r1);
            Poly u2 = u0 - q * u1;
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u2;
        }
        if (r1.is_zero()) throw std::logic_error("Cyclotomic: Phi_n not irreducible?");
        Cyclotomic out;
        out.n_ = n_;
        out.c_ = reduce(u1 * (Rational(1) / r1.coeff(0)), n_);
        return out;
    }

private:
    static std::vector<Rational> reduce(const Poly& p, unsigned long n) {
        auto [q, r] = p.divmod(cyclotomic_poly(n));
        (void)q;
        std::vector<Rational> v(euler_phi(n), Rational(0));
        for (int i = 0; i <= r.degree(); ++i) v[static_cast<size_t>(i)] = r.coeff(i);
        return v;
    }
    // Rational constants may be promoted to the partner's conductor;
    // anything else must match exactly.
    static std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) return {a, b};
        if (a.is_rational()) return {Cyclotomic(a.c_[0], b.n_), b};
        if (b.is_rational()) return {a, Cyclotomic(b.c_[0], a.n_)};
        throw std::invalid_argument("Cyclotomic: conductor mismatch");
    }

    unsigned long n_;
    std::vector<Rational> c_;
};

}  // namespace splitlevi
