#pragma once

#include "splitlevi/polynomial.hpp"
#include "splitlevi/rootsystem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace splitlevi {

using RootSet = std::set<int>;

/// A symmetric closed root subset with its derived data: positive
/// part, simple system, indecomposable components.
struct SubsystemHandle {
    const RootDatum* datum = nullptr;
    RootSet roots;
    std::vector<int> positive;       // roots ∩ Φ⁺, ascending
    std::vector<int> simples;        // simple system ⊆ positive part
    std::vector<std::vector<int>> components;  // partition of `simples`
    int torus_rank = 0;              // rank − dim span(roots)
};

/// One indecomposable factor as recognized, with the roots behind it.
struct RecognizedComponent {
    CartanLabel label;
    std::vector<int> orbit_simples;  // simples of the whole t-orbit of components
};

struct RecognizedType {
    std::vector<RecognizedComponent> components;  // sorted by label
    CycloFactorization torus;

    std::vector<CartanLabel> labels() const {
        std::vector<CartanLabel> out;
        for (const auto& c : components) out.push_back(c.label);
        return out;
    }
};

/// Smallest closed superset of S.
inline RootSet closure(const RootDatum& datum, const RootSet& s) {
    RootSet out = s;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(out.begin(), out.end());
        for (size_t a = 0; a < cur.size(); ++a)
            for (size_t b = a + 1; b < cur.size(); ++b) {
                Vec sum = datum.root(cur[a]);
                const Vec& beta = datum.root(cur[b]);
                for (size_t k = 0; k < sum.size(); ++k) sum[k] += beta[k];
                if (datum.is_root(sum) && out.insert(datum.root_index(sum)).second) grew = true;
            }
    }
    return out;
}

inline RootSet symmetrize(const RootDatum& datum, const RootSet& s) {
    RootSet out = s;
    for (int i : s) out.insert(datum.negative_of(i));
    return out;
}

/// Φ ∩ span(S): the unique minimal Levi subsystem containing S.
inline RootSet levi_closure_set(const RootDatum& datum, const RootSet& s) {
    if (s.empty()) return {};
    std::vector<Vec> cols;
    for (int i : s) cols.push_back(datum.root(i));
    QMatrix span = QMatrix::from_columns(cols, datum.rank());
    RootSet out;
    for (int r = 0; r < datum.num_roots(); ++r)
        if (in_column_space(span, datum.root(r))) out.insert(r);
    return out;
}

/// Ψ_λ = {α : (α|λ) ≥ 0} with λ in simple-root coordinates.
inline RootSet parabolic_from_vector(const RootDatum& datum, const Vec& lambda) {
    RootSet out;
    for (int r = 0; r < datum.num_roots(); ++r)
        if (datum.form(datum.root(r), lambda) >= 0) out.insert(r);
    return out;
}

inline bool is_closed(const RootDatum& datum, const RootSet& s) {
    return closure(datum, s) == s;
}

inline bool is_symmetric(const RootDatum& datum, const RootSet& s) {
    for (int i : s)
        if (!s.count(datum.negative_of(i))) return false;
    return true;
}

/// Builds the handle: positive part, simple system (positive roots not
/// expressible as a sum of two positive members), components.
inline SubsystemHandle make_handle(const RootDatum& datum, const RootSet& roots) {
    SubsystemHandle h;
    h.datum = &datum;
    h.roots = roots;
    for (int i : roots)
        if (datum.is_positive(i)) h.positive.push_back(i);
    std::set<int> pos(h.positive.begin(), h.positive.end());
    for (int i : h.positive) {
        bool is_sum = false;
        for (int a : h.positive) {
            if (is_sum) break;
            Vec diff = datum.root(i);
            const Vec& alpha = datum.root(a);
            for (size_t k = 0; k < diff.size(); ++k) diff[k] -= alpha[k];
            if (datum.is_root(diff) && pos.count(datum.root_index(diff))) is_sum = true;
        }
        if (!is_sum) h.simples.push_back(i);
    }
    // components via non-orthogonality of simples
    std::vector<int> comp_of(h.simples.size(), -1);
    int ncomp = 0;
    for (size_t i = 0; i < h.simples.size(); ++i) {
        if (comp_of[i] >= 0) continue;
        std::vector<size_t> stack{i};
        comp_of[i] = ncomp;
        while (!stack.empty()) {
            size_t a = stack.back();
            stack.pop_back();
            for (size_t b = 0; b < h.simples.size(); ++b) {
                if (comp_of[b] >= 0) continue;
                if (datum.form(datum.root(h.simples[a]), datum.root(h.simples[b])) != 0) {
                    comp_of[b] = ncomp;
                    stack.push_back(b);
                }
            }
        }
        ++ncomp;
    }
    h.components.assign(static_cast<size_t>(ncomp), {});
    for (size_t i = 0; i < h.simples.size(); ++i)
        h.components[static_cast<size_t>(comp_of[i])].push_back(h.simples[i]);
    h.torus_rank = datum.rank() - static_cast<int>(h.simples.size());
    return h;
}

inline SubsystemHandle levi_closure(const RootDatum& datum, const RootSet& s) {
    return make_handle(datum, levi_closure_set(datum, s));
}

namespace detail {

/// Classifies one indecomposable component from the Cartan data of its
/// simple roots.  `prefer_c` picks the C-form for the self-dual rank-2
/// double-bond diagram.
inline std::pair<Series, int> classify_component(const RootDatum& datum,
                                                 const std::vector<int>& simples,
                                                 bool prefer_c) {
    int k = static_cast<int>(simples.size());
    if (k == 1) return {Series::A, 1};
    std::vector<Vec> g;
    for (int s : simples) g.push_back(datum.root(s));
    // edge weights n_ab = <a,b^><b,a^> ∈ {0,1,2,3}
    std::vector<int> degree(static_cast<size_t>(k), 0);
    int max_weight = 1;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            Rational w = datum.coroot_pairing(g[static_cast<size_t>(a)], g[static_cast<size_t>(b)]) *
                         datum.coroot_pairing(g[static_cast<size_t>(b)], g[static_cast<size_t>(a)]);
            if (w != 0) {
                ++degree[static_cast<size_t>(a)];
                ++degree[static_cast<size_t>(b)];
                int wi = static_cast<int>(numerator(w));
                max_weight = std::max(max_weight, wi);
            }
        }
    if (max_weight == 3) return {Series::G, 2};
    int branch = -1;
    for (int a = 0; a < k; ++a)
        if (degree[static_cast<size_t>(a)] >= 3) branch = a;
    if (max_weight == 2) {
        if (k == 2) return {prefer_c ? Series::C : Series::B, 2};
        if (k == 4) {
            // F4 has two long and two short simples; B4/C4 have 3+1
            int n_long = 0;
            Rational min_len = datum.form(g[0], g[0]);
            for (const auto& v : g) min_len = std::min(min_len, datum.form(v, v));
            for (const auto& v : g)
                if (datum.form(v, v) != min_len) ++n_long;
            if (n_long == 2) return {Series::F, 4};
        }
        // B: the short simple is unique; C: the long simple is unique
        int n_short = 0;
        Rational min_len = datum.form(g[0], g[0]);
        for (const auto& v : g) min_len = std::min(min_len, datum.form(v, v));
        for (const auto& v : g)
            if (datum.form(v, v) == min_len) ++n_short;
        return n_short == 1 ? std::pair{Series::B, k} : std::pair{Series::C, k};
    }
    if (branch < 0) return {Series::A, k};
    // arm lengths from the branch node
    std::vector<int> arms;
    std::vector<bool> seen(static_cast<size_t>(k), false);
    seen[static_cast<size_t>(branch)] = true;
    for (int a = 0; a < k; ++a) {
        if (seen[static_cast<size_t>(a)]) continue;
        if (datum.form(g[static_cast<size_t>(a)], g[static_cast<size_t>(branch)]) == 0) continue;
        int len = 0, cur = a, prev = branch;
        for (;;) {
            seen[static_cast<size_t>(cur)] = true;
            ++len;
            int next = -1;
            for (int b = 0; b < k; ++b)
                if (b != prev && b != cur && !seen[static_cast<size_t>(b)] &&
                    datum.form(g[static_cast<size_t>(cur)], g[static_cast<size_t>(b)]) != 0)
                    next = b;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw std::domain_error("classify_component: unexpected diagram");
    if (arms[0] == 1 && arms[1] == 1) return {Series::D, k};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Series::E, k};
    throw std::domain_error("classify_component: unexpected branched diagram");
}

}  // namespace detail

/// Decomposes a t-stable subsystem into component orbits with twisted
/// labels, plus the torus order polynomial of t on the complement of
/// the root span.
inline RecognizedType recognize_type(const SubsystemHandle& h, const TwistedElement& t,
                                     bool prefer_c = false) {
    const RootDatum& datum = *h.datum;
    for (int r : h.roots)
        if (!h.roots.count(t.root_perm[static_cast<size_t>(r)]))
            throw std::invalid_argument("recognize_type: subsystem not t-stable");

    RecognizedType out;

    // component index of each root of the subsystem
    auto comp_of_root = [&](int r) -> int {
        for (size_t c = 0; c < h.components.size(); ++c) {
            RootSet comp_span;
            for (int s : h.components[c]) comp_span.insert(s);
            // r belongs to component c iff it is a combination of its simples
            std::vector<Vec> cols;
            for (int s : h.components[c]) cols.push_back(datum.root(s));
            if (in_column_space(QMatrix::from_columns(cols, datum.rank()), datum.root(r)))
                return static_cast<int>(c);
        }
        throw std::logic_error("recognize_type: root outside all components");
    };

    int ncomp = static_cast<int>(h.components.size());
    // how t permutes the components
    std::vector<int> comp_perm(static_cast<size_t>(ncomp));
    for (int c = 0; c < ncomp; ++c) {
        int img = t.root_perm[static_cast<size_t>(h.components[static_cast<size_t>(c)][0])];
        comp_perm[static_cast<size_t>(c)] = comp_of_root(img);
    }

    std::vector<bool> done(static_cast<size_t>(ncomp), false);
    for (int c0 = 0; c0 < ncomp; ++c0) {
        if (done[static_cast<size_t>(c0)]) continue;
        std::vector<int> orbit;
        int c = c0;
        do {
            orbit.push_back(c);
            done[static_cast<size_t>(c)] = true;
            c = comp_perm[static_cast<size_t>(c)];
        } while (c != c0);
        int e = static_cast<int>(orbit.size());

        auto [series, rk] = detail::classify_component(datum, h.components[static_cast<size_t>(c0)], prefer_c);

        // twist of t^e on the orbit representative: walk the image of a
        // regular-in-component vector back to the component's chamber
        // and read off the induced permutation of its simples.
        const std::vector<int>& simples = h.components[static_cast<size_t>(c0)];
        Vec lambda(static_cast<size_t>(datum.rank()), Rational(0));
        std::vector<Vec> comp_cols;
        for (int s : simples) comp_cols.push_back(datum.root(s));
        QMatrix comp_span = QMatrix::from_columns(comp_cols, datum.rank());
        for (int r : h.positive)
            if (in_column_space(comp_span, datum.root(r)))
                for (int j = 0; j < datum.rank(); ++j)
                    lambda[static_cast<size_t>(j)] += datum.root(r)[static_cast<size_t>(j)];
        QMatrix te = t.matrix.pow(static_cast<unsigned long>(e));
        Vec mu = datum.apply(te, lambda);
        QMatrix corr = QMatrix::identity(datum.rank());
        for (;;) {
            int desc = -1;
            for (int s : simples)
                if (datum.form(mu, datum.root(s)) < 0) {
                    desc = s;
                    break;
                }
            if (desc < 0) break;
            QMatrix refl = datum.reflection_matrix(datum.root(desc));
            mu = datum.apply(refl, mu);
            corr = refl * corr;
        }
        QMatrix induced = corr * te;
        std::vector<int> perm(simples.size());
        for (size_t i = 0; i < simples.size(); ++i) {
            Vec img = datum.apply(induced, datum.root(simples[i]));
            int idx = datum.root_index(img);
            auto it = std::find(simples.begin(), simples.end(), idx);
            if (it == simples.end()) throw std::logic_error("recognize_type: twist walk failed");
            perm[i] = static_cast<int>(it - simples.begin());
        }
        int twist = 1;
        {
            std::vector<int> p(simples.size());
            for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
            for (;;) {
                std::vector<int> q(p.size());
                for (size_t i = 0; i < p.size(); ++i) q[i] = perm[static_cast<size_t>(p[i])];
                p = q;
                bool ident = true;
                for (size_t i = 0; i < p.size(); ++i)
                    if (p[i] != static_cast<int>(i)) ident = false;
                ++twist;
                if (ident) break;
            }
            twist -= 1;
            if (twist == 0) twist = 1;
        }

        RecognizedComponent rc;
        rc.label = CartanLabel{series, rk, twist, e};
        // normalize degenerate twisted forms: a twisted A-diagram of
        // rank 1 cannot be twisted
        if (rk == 1) rc.label.twist_order = 1;
        for (int cc : orbit)
            for (int s : h.components[static_cast<size_t>(cc)]) rc.orbit_simples.push_back(s);
        out.components.push_back(std::move(rc));
    }

    std::sort(out.components.begin(), out.components.end(),
              [](const RecognizedComponent& a, const RecognizedComponent& b) {
                  if (a.label < b.label) return true;
                  if (b.label < a.label) return false;
                  return a.orbit_simples < b.orbit_simples;
              });

    // torus polynomial: char poly of t on V modulo its action on span Σ
    CycloFactorization total = cyclotomic_factor(char_poly(t.matrix));
    if (!h.simples.empty()) {
        std::vector<Vec> cols;
        for (int s : h.simples) cols.push_back(datum.root(s));
        QMatrix basis = QMatrix::from_columns(cols, datum.rank());
        int k = static_cast<int>(cols.size());
        QMatrix sub(k, k);
        for (int j = 0; j < k; ++j) {
            Vec img = datum.apply(t.matrix, cols[static_cast<size_t>(j)]);
            // solve basis * x = img
            QMatrix aug = basis;
            QMatrix img_m(datum.rank(), 1);
            for (int i = 0; i < datum.rank(); ++i) img_m(i, 0) = img[static_cast<size_t>(i)];
            auto rr = rref(basis.hstack(img_m));
            for (int r = 0; r < static_cast<int>(rr.pivots.size()); ++r) {
                if (rr.pivots[static_cast<size_t>(r)] == k)
                    throw std::logic_error("recognize_type: span not t-stable");
                sub(rr.pivots[static_cast<size_t>(r)], j) = rr.reduced(r, k);
            }
            (void)aug;
        }
        total /= cyclotomic_factor(char_poly(sub));
    }
    out.torus = total;
    return out;
}

}  // namespace splitlevi
