#pragma once

#include "splitlevi/matrix.hpp"
#include "splitlevi/subsystem.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace splitlevi {

/// Smallest t-split Levi subsystem containing S: the roots whose
/// image under the fixed-space projector of <t> lands in the projected
/// span of S.
inline RootSet split_levi_cover_set(const RootDatum& datum, const RootSet& s,
                                    const TwistedElement& t) {
    QMatrix theta = fixed_projector(t.matrix, t.order);
    std::vector<std::vector<Rational>> cols;
    for (int i : s) cols.push_back(theta.apply(datum.root(i)));
    QMatrix span = QMatrix::from_columns(cols, datum.rank());
    RootSet out;
    for (int r = 0; r < datum.num_roots(); ++r) {
        auto proj = theta.apply(datum.root(r));
        bool zero = true;
        for (const auto& c : proj)
            if (c != 0) zero = false;
        if (zero || (!s.empty() && in_column_space(span, proj))) out.insert(r);
    }
    return out;
}

inline SubsystemHandle split_levi_cover(const RootDatum& datum, const RootSet& s,
                                        const TwistedElement& t) {
    return make_handle(datum, split_levi_cover_set(datum, s, t));
}

inline bool is_split_levi(const RootDatum& datum, const RootSet& s, const TwistedElement& t) {
    return split_levi_cover_set(datum, s, t) == s;
}

/// Smallest (phi,d)-split Levi subsystem containing S, computed with
/// the zeta-eigenspace projector of w*phi over Q(mu_n).  When d does
/// not divide the order of w*phi the eigenspace is zero and the cover
/// degenerates to the full system.
inline RootSet d_split_cover_set(const RootDatum& datum, const RootSet& s,
                                 const TwistedElement& wphi, unsigned long d,
                                 long zeta_exponent_numerator = 1) {
    unsigned long n = wphi.order;
    if (d == 0) throw std::invalid_argument("d_split_cover: d must be positive");
    if (n % d != 0) {
        RootSet all;
        for (int r = 0; r < datum.num_roots(); ++r) all.insert(r);
        return all;
    }
    // zeta = zeta_n^{k n/d} with gcd(k,d)=1 a primitive d-th root
    long k = zeta_exponent_numerator * static_cast<long>(n / d);
    CycMatrix theta = eigen_projector(wphi.matrix, n, k);
    std::vector<std::vector<Cyclotomic>> cols;
    for (int i : s) {
        std::vector<Cyclotomic> v(static_cast<size_t>(datum.rank()));
        for (int j = 0; j < datum.rank(); ++j) v[static_cast<size_t>(j)] = Cyclotomic(datum.root(i)[static_cast<size_t>(j)], n);
        cols.push_back(theta.apply(v));
    }
    CycMatrix span = CycMatrix::from_columns(cols, datum.rank());
    RootSet out;
    for (int r = 0; r < datum.num_roots(); ++r) {
        std::vector<Cyclotomic> v(static_cast<size_t>(datum.rank()));
        for (int j = 0; j < datum.rank(); ++j) v[static_cast<size_t>(j)] = Cyclotomic(datum.root(r)[static_cast<size_t>(j)], n);
        auto proj = theta.apply(v);
        bool zero = true;
        for (const auto& c : proj)
            if (!c.is_zero()) zero = false;
        if (zero || (!s.empty() && in_column_space(span, proj))) out.insert(r);
    }
    return out;
}

inline SubsystemHandle d_split_cover(const RootDatum& datum, const RootSet& s,
                                     const TwistedElement& wphi, unsigned long d,
                                     long zeta_exponent_numerator = 1) {
    return make_handle(datum, d_split_cover_set(datum, s, wphi, d, zeta_exponent_numerator));
}

/// Brute-force enumeration of all t-split (resp. (phi,d)-split) Levi
/// subsystems: covers of singletons, closed under cover-of-union.
/// Test-side minimality oracle; rank-guarded.
inline std::set<RootSet> enumerate_split_levis(const RootDatum& datum, const TwistedElement& t,
                                               unsigned long d = 1, bool use_d = false) {
    if (datum.rank() > 6) throw std::invalid_argument("enumerate_split_levis: rank guard exceeded");
    auto cover = [&](const RootSet& s) {
        return use_d ? d_split_cover_set(datum, s, t, d) : split_levi_cover_set(datum, s, t);
    };
    std::set<RootSet> known;
    known.insert(cover({}));
    for (int r = 0; r < datum.num_roots(); ++r) known.insert(cover({r}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RootSet> cur(known.begin(), known.end());
        for (size_t a = 0; a < cur.size(); ++a)
            for (size_t b = a + 1; b < cur.size(); ++b) {
                RootSet u = cur[a];
                u.insert(cur[b].begin(), cur[b].end());
                if (known.insert(cover(u)).second) grew = true;
            }
    }
    return known;
}

/// Conjugation data returned by conjugate_to_standard.
struct StandardPair {
    std::vector<int> I;   // simple indices with x·Σ = Φ_I
    WeylElement z;        // z ∈ W_I, the standardized twist
    WeylElement x;        // conjugator
};

/// Moves a pair (Σ, w), Σ a wφ-split Levi subsystem, to standard form
/// (Φ_I, z) with z ∈ W_I, via a fixed-vector construction and the
/// dominance walk.
inline StandardPair conjugate_to_standard(const RootDatum& datum, const RootSet& sigma,
                                          const WeylElement& w,
                                          const std::vector<int>& diagram_perm) {
    TwistedElement t = datum.twisted(w, diagram_perm);
    int n = datum.rank();

    // basis of span(Σ)^⊥ ∩ V^{wφ}
    QMatrix theta = fixed_projector(t.matrix, t.order);
    QMatrix constraint((int)sigma.size() + n, n);
    int row = 0;
    for (int r : sigma) {
        const Vec& alpha = datum.root(r);
        for (int j = 0; j < n; ++j) {
            Vec ej(static_cast<size_t>(n), Rational(0));
            ej[static_cast<size_t>(j)] = 1;
            constraint(row, j) = datum.form(alpha, ej);
        }
        ++row;
    }
    QMatrix fix = theta - QMatrix::identity(n);
    for (int i = 0; i < n; ++i, ++row)
        for (int j = 0; j < n; ++j) constraint(row, j) = fix(i, j);
    auto basis = kernel_basis(constraint);
    if (basis.empty() && static_cast<int>(sigma.size()) != datum.num_roots())
        throw std::invalid_argument("conjugate_to_standard: input is not a wφ-split Levi");

    // generic fixed vector λ with Φ^λ = Σ: geometric coefficients M^i,
    // doubling M until no root outside Σ is orthogonal to λ
    Vec lambda(static_cast<size_t>(n), Rational(0));
    for (Rational m(2);; m *= 2) {
        lambda.assign(static_cast<size_t>(n), Rational(0));
        Rational coef(1);
        for (const auto& b : basis) {
            for (int j = 0; j < n; ++j) lambda[static_cast<size_t>(j)] += coef * b[static_cast<size_t>(j)];
            coef *= m;
        }
        bool ok = true;
        for (int r = 0; r < datum.num_roots() && ok; ++r)
            if (!sigma.count(r) && datum.form(datum.root(r), lambda) == 0) ok = false;
        if (ok) break;
        if (m > 1000000) throw std::logic_error("conjugate_to_standard: no generic vector found");
    }

    // dominance walk: x λ ∈ fundamental domain
    QMatrix xm = QMatrix::identity(n);
    Vec mu = lambda;
    for (;;) {
        int desc = -1;
        for (int i = 0; i < n; ++i)
            if (datum.form(mu, datum.simple_root(i)) < 0) {
                desc = i;
                break;
            }
        if (desc < 0) break;
        mu = datum.apply(datum.simple_reflection_matrix(desc), mu);
        xm = datum.simple_reflection_matrix(desc) * xm;
    }
    WeylElement x = datum.make_weyl(xm);

    StandardPair out;
    for (int i = 0; i < n; ++i)
        if (datum.form(mu, datum.simple_root(i)) == 0) out.I.push_back(i);
    // z = x w ι_φ(x)^{-1} where ι_φ(x) = φ x φ^{-1}
    QMatrix p = datum.diagram_perm_matrix(diagram_perm);
    QMatrix iphi = p * xm * inverse(p);
    QMatrix zm = xm * w.matrix * inverse(iphi);
    out.z = datum.make_weyl(zm);
    out.x = x;
    return out;
}

}  // namespace splitlevi
