#pragma once

#include "splitlevi/subsystem.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitlevi {

/// Congruence class of the field size q: q = residue (mod modulus).
struct QClass {
    unsigned long residue = 1;
    unsigned long modulus = 1;

    /// q modulo n; the declared modulus must determine it.
    unsigned long mod(unsigned long n) const {
        if (n <= 1) return 0;
        if (modulus % n != 0)
            throw std::invalid_argument("QClass: modulus does not determine q mod " + std::to_string(n));
        return residue % n;
    }
};

/// Semisimple element of the adjoint torus: a rational vector in the
/// fundamental-coweight basis, taken modulo the coweight lattice Z^n.
struct SemisimpleParam {
    Vec v;                              // reduced mod 1 componentwise
    std::vector<long> excluded_primes;  // the p of F_p-bar
    unsigned long order = 1;            // least N with N*v integral
};

inline SemisimpleParam make_param(Vec v, std::vector<long> excluded_primes = {}) {
    SemisimpleParam p;
    p.excluded_primes = std::move(excluded_primes);
    Integer order(1);
    for (auto& c : v) {
        c = frac_mod1(c);
        Integer d = denominator(c);
        for (long q : p.excluded_primes)
            if (q > 1 && d % q == 0)
                throw std::invalid_argument("make_param: denominator divisible by an excluded prime");
        order = boost::multiprecision::lcm(order, d);
    }
    p.v = std::move(v);
    p.order = order.convert_to<unsigned long>();
    return p;
}

inline bool same_param(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (frac_mod1(a[i]) != frac_mod1(b[i])) return false;
    return true;
}

/// Covariant action of a Weyl/twist matrix on coweight coordinates:
/// the contragredient (inverse-transpose) of its action on V.
inline QMatrix coweight_matrix(const QMatrix& m) { return inverse(m).transpose(); }

inline Vec act_coweight(const RootDatum& datum, const QMatrix& m, const Vec& v) {
    return datum.apply(coweight_matrix(m), v);
}

/// Phi(s) = {alpha : <alpha, v> integral}.
inline SubsystemHandle centralizer_roots(const RootDatum& datum, const Vec& v) {
    RootSet out;
    for (int r = 0; r < datum.num_roots(); ++r)
        if (is_integer(RootDatum::coweight_pairing(datum.root(r), v))) out.insert(r);
    return make_handle(datum, out);
}

/// One isolated class representative h_alpha per extended-diagram node.
struct IsolatedRep {
    int node = 0;          // 0..rank-1: simple root index; rank: the -alpha0 node
    long coefficient = 1;  // n_alpha (1 at the -alpha0 node)
    SemisimpleParam param;
    SubsystemHandle centralizer;  // Phi(h_alpha); its simples are Delta(s)
};

/// Bonnafe's classification for the adjoint group: h_alpha =
/// pi-check_alpha / n_alpha over the p'-nodes of the extended diagram.
/// The -alpha0 node carries the identity, as does every node with
/// n_alpha = 1.
inline std::vector<IsolatedRep> isolated_reps(const RootDatum& datum, long p = 0) {
    std::vector<long> excluded;
    if (p > 1) excluded.push_back(p);
    std::vector<IsolatedRep> out;
    auto push = [&](int node, long n_alpha, Vec v) {
        if (p > 1 && n_alpha % p == 0) return;
        IsolatedRep rep;
        rep.node = node;
        rep.coefficient = n_alpha;
        rep.param = make_param(std::move(v), excluded);
        rep.centralizer = centralizer_roots(datum, rep.param.v);
        if ((int)rep.centralizer.simples.size() != datum.rank())
            throw std::logic_error("isolated_reps: centralizer is not isolated");
        out.push_back(std::move(rep));
    };
    const Vec& highest = datum.highest_root();
    for (int i = 0; i < datum.rank(); ++i) {
        long n_alpha = (long)numerator(highest[(size_t)i]).convert_to<long long>();
        Vec v((size_t)datum.rank(), Rational(0));
        v[(size_t)i] = Rational(1, n_alpha);
        push(i, n_alpha, std::move(v));
    }
    push(datum.rank(), 1, Vec((size_t)datum.rank(), Rational(0)));
    return out;
}

/// F = q*phi on parameters: v -> q * phi-check(v) mod the lattice.
/// On coweight coordinates phi-check is the same permutation matrix.
inline SemisimpleParam frobenius_act(const RootDatum& datum, const SemisimpleParam& s,
                                     const std::vector<int>& diagram_perm, const QClass& q_class) {
    unsigned long n = s.order;
    if (n == 1) return s;
    unsigned long q = q_class.mod(n);
    if (std::gcd(q, n) != 1)
        throw std::invalid_argument("frobenius_act: q not coprime to the parameter order");
    Vec out((size_t)datum.rank());
    for (int j = 0; j < datum.rank(); ++j)
        out[(size_t)diagram_perm[(size_t)j]] = frac_mod1(Rational((long)q) * s.v[(size_t)j]);
    return make_param(std::move(out), s.excluded_primes);
}

/// Coset representative with certificate.
struct TwistedClassRep {
    SemisimpleParam param;
    WeylElement w;
    std::string branch;  // "split" (F(s) = s) or "w0" (^w0 F(s) = s)
};

namespace detail {

/// The element c of W(Phi(s)) with c*t fixing the chamber of Delta(s),
/// for t stabilizing Phi(s).
inline WeylElement chamber_correction(const RootDatum& datum, const SubsystemHandle& h,
                                      const QMatrix& t) {
    Vec lambda((size_t)datum.rank(), Rational(0));
    for (int r : h.positive)
        for (int j = 0; j < datum.rank(); ++j) lambda[(size_t)j] += datum.root(r)[(size_t)j];
    Vec mu = datum.apply(t, lambda);
    QMatrix c = QMatrix::identity(datum.rank());
    for (;;) {
        int desc = -1;
        for (int s : h.simples)
            if (datum.form(mu, datum.root(s)) < 0) {
                desc = s;
                break;
            }
        if (desc < 0) break;
        QMatrix refl = datum.reflection_matrix(datum.root(desc));
        mu = datum.apply(refl, mu);
        c = refl * c;
    }
    if (mu != lambda) throw std::logic_error("chamber_correction: walk did not return to the chamber");
    return datum.make_weyl(c);
}

inline bool stabilizes_simples(const RootDatum& datum, const SubsystemHandle& h, const QMatrix& t) {
    std::set<int> simples(h.simples.begin(), h.simples.end());
    for (int s : h.simples) {
        Vec img = datum.apply(t, datum.root(s));
        if (!datum.is_root(img) || !simples.count(datum.root_index(img))) return false;
    }
    return true;
}

}  // namespace detail

/// Representative w with ^wF(s) = s and (w phi)-stable Delta(s).
/// Lemma branches: F(s) = s, or ^{w0}F(s) = s; the leftover E8 coset
/// (n_alpha = 5, q = 2,3 mod 5) is unsupported.
inline TwistedClassRep choose_coset_rep(const RootDatum& datum, const IsolatedRep& rep,
                                        const std::vector<int>& diagram_perm, const QClass& q_class) {
    Vec fv = frobenius_act(datum, rep.param, diagram_perm, q_class).v;
    WeylElement w1;
    std::string branch;
    if (same_param(fv, rep.param.v)) {
        w1 = datum.identity_element();
        branch = "split";
    } else {
        WeylElement w0 = datum.longest_element();
        if (same_param(act_coweight(datum, w0.matrix, fv), rep.param.v)) {
            w1 = w0;
            branch = "w0";
        } else {
            throw UnsupportedError(
                "unsupported exceptional coset: F(s) is not conjugate to s via 1 or w0 "
                "(extended-node coefficient " + std::to_string(rep.coefficient) + ")");
        }
    }
    QMatrix p = datum.diagram_perm_matrix(diagram_perm);
    WeylElement c = detail::chamber_correction(datum, rep.centralizer, w1.matrix * p);
    WeylElement w = datum.make_weyl(c.matrix * w1.matrix);
    // certificates
    if (!detail::stabilizes_simples(datum, rep.centralizer, w.matrix * p))
        throw std::logic_error("choose_coset_rep: Delta(s) not stable");
    if (!same_param(act_coweight(datum, w.matrix, fv), rep.param.v))
        throw std::logic_error("choose_coset_rep: ^wF(s) != s");
    return {rep.param, w, branch};
}

namespace detail {

/// Diagram automorphisms of Delta(s) (pairing-preserving permutations
/// of the centralizer simples), found by backtracking.
inline std::vector<std::vector<int>> subsystem_diagram_autos(const RootDatum& datum,
                                                             const std::vector<int>& simples) {
    int k = (int)simples.size();
    std::vector<std::vector<Rational>> pairing((size_t)k, std::vector<Rational>((size_t)k));
    std::vector<Rational> len((size_t)k);
    for (int i = 0; i < k; ++i) {
        len[(size_t)i] = datum.form(datum.root(simples[(size_t)i]), datum.root(simples[(size_t)i]));
        for (int j = 0; j < k; ++j)
            pairing[(size_t)i][(size_t)j] =
                datum.coroot_pairing(datum.root(simples[(size_t)j]), datum.root(simples[(size_t)i]));
    }
    std::vector<std::vector<int>> out;
    std::vector<int> perm((size_t)k, -1);
    std::vector<bool> used((size_t)k, false);
    auto search = [&](auto&& self, int i) -> void {
        if (i == k) {
            out.push_back(perm);
            return;
        }
        for (int v = 0; v < k; ++v) {
            if (used[(size_t)v] || len[(size_t)v] != len[(size_t)i]) continue;
            bool ok = true;
            for (int j = 0; ok && j < i; ++j) {
                if (pairing[(size_t)v][(size_t)perm[(size_t)j]] != pairing[(size_t)i][(size_t)j]) ok = false;
                if (pairing[(size_t)perm[(size_t)j]][(size_t)v] != pairing[(size_t)j][(size_t)i]) ok = false;
            }
            if (!ok) continue;
            perm[(size_t)i] = v;
            used[(size_t)v] = true;
            self(self, i + 1);
            used[(size_t)v] = false;
        }
        perm[(size_t)i] = -1;
    };
    search(search, 0);
    return out;
}

}  // namespace detail

/// Orbit representatives of the coset space A_W(s,F) under twisted
/// C_W(s)-conjugation.  Delta(s) is a basis, so every normalized coset
/// representative is omega * w1 with omega realizing a diagram
/// automorphism of Delta(s) inside W and fixing s.
inline std::vector<TwistedClassRep> component_group_orbits(const RootDatum& datum,
                                                           const IsolatedRep& rep,
                                                           const std::vector<int>& diagram_perm,
                                                           const QClass& q_class) {
    TwistedClassRep base = choose_coset_rep(datum, rep, diagram_perm, q_class);
    const std::vector<int>& simples = rep.centralizer.simples;
    int k = (int)simples.size();

    std::vector<Vec> cols;
    for (int s : simples) cols.push_back(datum.root(s));
    QMatrix basis = QMatrix::from_columns(cols, datum.rank());
    QMatrix basis_inv = inverse(basis);

    // Omega: realizable, s-fixing diagram automorphisms
    std::vector<std::vector<int>> omega_perms;
    std::vector<QMatrix> omega_mats;
    for (const auto& perm : detail::subsystem_diagram_autos(datum, simples)) {
        QMatrix permuted(datum.rank(), k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < datum.rank(); ++i)
                permuted(i, j) = cols[(size_t)perm[(size_t)j]][(size_t)i];
        QMatrix m = permuted * basis_inv;
        if (!datum.try_word_of(m)) continue;
        if (!same_param(act_coweight(datum, m, rep.param.v), rep.param.v)) continue;
        omega_perms.push_back(perm);
        omega_mats.push_back(std::move(m));
    }

    // permutation of Delta(s) induced by w1*phi
    QMatrix t = base.w.matrix * datum.diagram_perm_matrix(diagram_perm);
    std::vector<int> tau((size_t)k);
    for (int i = 0; i < k; ++i) {
        int img = datum.root_index(datum.apply(t, datum.root(simples[(size_t)i])));
        tau[(size_t)i] =
            (int)(std::find(simples.begin(), simples.end(), img) - simples.begin());
    }

    auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out(a.size());
        for (size_t i = 0; i < a.size(); ++i) out[i] = a[(size_t)b[i]];
        return out;
    };
    auto invert = [](const std::vector<int>& a) {
        std::vector<int> out(a.size());
        for (size_t i = 0; i < a.size(); ++i) out[(size_t)a[i]] = (int)i;
        return out;
    };

    // twisted conjugation on cosets: pi -> pi' pi (tau pi'^{-1} tau^{-1})
    std::vector<int> orbit_of(omega_perms.size(), -1);
    int norbits = 0;
    for (size_t i = 0; i < omega_perms.size(); ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<size_t> stack{i};
        orbit_of[i] = norbits;
        while (!stack.empty()) {
            std::vector<int> pi = omega_perms[stack.back()];
            stack.pop_back();
            for (const auto& prime : omega_perms) {
                std::vector<int> img =
                    compose(compose(prime, pi), compose(tau, compose(invert(prime), invert(tau))));
                auto it = std::find(omega_perms.begin(), omega_perms.end(), img);
                if (it == omega_perms.end())
                    throw std::logic_error("component_group_orbits: action leaves Omega");
                size_t idx = (size_t)(it - omega_perms.begin());
                if (orbit_of[idx] < 0) {
                    orbit_of[idx] = norbits;
                    stack.push_back(idx);
                }
            }
        }
        ++norbits;
    }

    std::vector<TwistedClassRep> out;
    for (int o = 0; o < norbits; ++o) {
        size_t pick = 0;
        bool found = false;
        for (size_t i = 0; i < omega_perms.size(); ++i)
            if (orbit_of[i] == o && (!found || omega_perms[i] < omega_perms[pick])) {
                pick = i;
                found = true;
            }
        TwistedClassRep r;
        r.param = rep.param;
        r.w = datum.make_weyl(omega_mats[pick] * base.w.matrix);
        r.branch = base.branch;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace splitlevi
