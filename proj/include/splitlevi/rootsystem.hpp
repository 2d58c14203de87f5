#pragma once

#include "splitlevi/matrix.hpp"
#include "splitlevi/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitlevi {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Component label X_rank, possibly twisted (2A, 2D, 3D, 2E) and
/// defined over an extension field q^e (field_power e).
struct CartanLabel {
    Series series;
    int rank;
    int twist_order = 1;
    int field_power = 1;

    friend bool operator==(const CartanLabel& a, const CartanLabel& b) {
        return a.series == b.series && a.rank == b.rank && a.twist_order == b.twist_order &&
               a.field_power == b.field_power;
    }
    friend bool operator<(const CartanLabel& a, const CartanLabel& b) {
        auto key = [](const CartanLabel& l) {
            return std::tuple(-l.rank, static_cast<char>(l.series), l.twist_order, l.field_power);
        };
        return key(a) < key(b);
    }

    std::string str() const {
        std::string s;
        if (twist_order > 1) s += std::to_string(twist_order);
        s += static_cast<char>(series);
        s += std::to_string(rank);
        if (field_power > 1) s += "(q^" + std::to_string(field_power) + ")";
        return s;
    }
};

using Vec = std::vector<Rational>;

class RootDatum;

/// Element of the Weyl group: exact matrix in the simple-root basis
/// plus a reduced word in simple reflections.
struct WeylElement {
    QMatrix matrix;
    std::vector<int> word;  // matrix = S_{word[0]} * S_{word[1]} * ...

    bool is_identity() const { return word.empty(); }
};

/// An automorphism w*phi of V: Weyl part times a diagram twist.
struct TwistedElement {
    QMatrix matrix;
    std::vector<int> diagram_perm;  // phi as a permutation of the simple roots
    WeylElement weyl;
    unsigned long order = 1;
    std::vector<int> root_perm;  // induced permutation of the root index set
};

/// Reduced crystallographic root system in the adjoint convention
/// X = Z-span of the simple roots.  Roots are integer vectors in the
/// simple-root basis; coweights live in the dual basis.
class RootDatum {
public:
    RootDatum(Series series, int rank) : RootDatum({{series, rank}}) {}

    /// Reducible system: direct sum of simple factors, block-diagonal
    /// Cartan matrix.
    explicit RootDatum(const std::vector<std::pair<Series, int>>& factors) : factors_(factors) {
        if (factors_.empty()) throw std::invalid_argument("RootDatum: no factors");
        rank_ = 0;
        for (const auto& [s, n] : factors_) rank_ += n;
        series_ = factors_.front().first;
        build_cartan();
        generate_roots();
    }

    Series series() const { return series_; }
    const std::vector<std::pair<Series, int>>& factors() const { return factors_; }
    int rank() const { return rank_; }
    const QMatrix& cartan() const { return cartan_; }
    const std::vector<Rational>& symmetrizer() const { return d_; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_pos_; }
    const Vec& root(int i) const { return roots_[static_cast<size_t>(i)]; }
    const std::vector<Vec>& roots() const { return roots_; }
    const Vec& highest_root() const { return roots_[static_cast<size_t>(num_pos_ - 1)]; }

    bool is_positive(int i) const { return i < num_pos_; }
    int negative_of(int i) const { return i < num_pos_ ? i + num_pos_ : i - num_pos_; }

    int root_index(const Vec& v) const {
        auto it = root_index_.find(v);
        if (it == root_index_.end()) throw std::invalid_argument("RootDatum: not a root");
        return it->second;
    }
    bool is_root(const Vec& v) const { return root_index_.count(v) != 0; }

    /// W-invariant form, short roots of squared length 2.
    Rational form(const Vec& x, const Vec& y) const {
        Rational acc(0);
        for (int i = 0; i < rank_; ++i) {
            if (x[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < rank_; ++j)
                acc += x[static_cast<size_t>(i)] * d_[static_cast<size_t>(i)] * cartan_(i, j) *
                       y[static_cast<size_t>(j)];
        }
        return acc;
    }

    /// <x, coroot of alpha> = 2(x|alpha)/(alpha|alpha).
    Rational coroot_pairing(const Vec& x, const Vec& alpha) const {
        return 2 * form(x, alpha) / form(alpha, alpha);
    }

    /// <alpha, v> with alpha in root coordinates and v in the dual
    /// fundamental-coweight coordinates.
    static Rational coweight_pairing(const Vec& alpha, const Vec& v) {
        Rational acc(0);
        for (size_t i = 0; i < alpha.size(); ++i) acc += alpha[i] * v[i];
        return acc;
    }

    /// Matrix of the reflection about an arbitrary root, acting on V.
    QMatrix reflection_matrix(const Vec& alpha) const {
        QMatrix m = QMatrix::identity(rank_);
        for (int j = 0; j < rank_; ++j) {
            Vec ej(static_cast<size_t>(rank_), Rational(0));
            ej[static_cast<size_t>(j)] = 1;
            Rational c = coroot_pairing(ej, alpha);
            for (int i = 0; i < rank_; ++i) m(i, j) -= c * alpha[static_cast<size_t>(i)];
        }
        return m;
    }

    const QMatrix& simple_reflection_matrix(int i) const { return simple_refl_[static_cast<size_t>(i)]; }

    Vec apply(const QMatrix& m, const Vec& v) const {
        Vec out(static_cast<size_t>(rank_), Rational(0));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) out[static_cast<size_t>(i)] += m(i, j) * v[static_cast<size_t>(j)];
        return out;
    }

    WeylElement identity_element() const { return {QMatrix::identity(rank_), {}}; }

    WeylElement word_element(const std::vector<int>& word) const {
        QMatrix m = QMatrix::identity(rank_);
        for (int i : word) m = m * simple_refl_[static_cast<size_t>(i)];
        return make_weyl(m);
    }

    /// Reflection about a root, as a Weyl element with reduced word.
    WeylElement reflection(const Vec& alpha) const {
        if (!is_root(alpha)) throw std::invalid_argument("reflection: not a root");
        return make_weyl(reflection_matrix(alpha));
    }

    /// Rebuilds the canonical reduced word of a W-matrix by the descent
    /// walk; throws when the matrix is not in W.
    WeylElement make_weyl(QMatrix m) const {
        auto w = try_word_of(m);
        if (!w) throw std::invalid_argument("make_weyl: matrix not in the Weyl group");
        return {std::move(m), std::move(*w)};
    }

    /// Word via descents, or nullopt when the matrix is not in W.
    std::optional<std::vector<int>> try_word_of(const QMatrix& m) const {
        // Dominant-chamber walk on a regular vector decides membership
        // without enumerating W.
        Vec mu = apply(m, rho_);
        QMatrix x = QMatrix::identity(rank_);
        for (;;) {
            int desc = -1;
            for (int i = 0; i < rank_; ++i)
                if (form(mu, simple_root(i)) < 0) {
                    desc = i;
                    break;
                }
            if (desc < 0) break;
            mu = apply(simple_refl_[static_cast<size_t>(desc)], mu);
            x = simple_refl_[static_cast<size_t>(desc)] * x;
        }
        if (x * m != QMatrix::identity(rank_)) return std::nullopt;
        // Read the reduced word off by right descents.
        std::vector<int> rev;
        QMatrix cur = m;
        while (cur != QMatrix::identity(rank_)) {
            int desc = -1;
            for (int i = 0; i < rank_; ++i) {
                Vec img = apply(cur, simple_root(i));
                bool neg = false;
                for (const auto& c : img)
                    if (c < 0) neg = true;
                if (neg) {
                    desc = i;
                    break;
                }
            }
            if (desc < 0) throw std::logic_error("try_word_of: stuck descent walk");
            cur = cur * simple_refl_[static_cast<size_t>(desc)];
            rev.push_back(desc);
        }
        return std::vector<int>(rev.rbegin(), rev.rend());
    }

    Vec simple_root(int i) const {
        Vec v(static_cast<size_t>(rank_), Rational(0));
        v[static_cast<size_t>(i)] = 1;
        return v;
    }

    /// Sum of the positive roots; regular dominant.
    const Vec& dominant_regular() const { return rho_; }

    /// Induced permutation of the root index set.
    std::vector<int> root_permutation(const QMatrix& m) const {
        std::vector<int> perm(roots_.size());
        for (size_t i = 0; i < roots_.size(); ++i) perm[i] = root_index(apply(m, roots_[i]));
        return perm;
    }

    /// All permutations of the simple roots preserving the Cartan matrix.
    std::vector<std::vector<int>> diagram_automorphisms() const {
        std::vector<std::vector<int>> out;
        std::vector<int> perm(static_cast<size_t>(rank_), -1);
        std::vector<bool> used(static_cast<size_t>(rank_), false);
        search_autos(perm, used, 0, out);
        return out;
    }

    bool is_diagram_automorphism(const std::vector<int>& perm) const {
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (cartan_(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) != cartan_(i, j))
                    return false;
        return true;
    }

    QMatrix diagram_perm_matrix(const std::vector<int>& perm) const {
        QMatrix p(rank_, rank_);
        for (int j = 0; j < rank_; ++j) p(perm[static_cast<size_t>(j)], j) = 1;
        return p;
    }

    /// w*phi with phi given by a diagram permutation.
    TwistedElement twisted(const WeylElement& w, const std::vector<int>& diagram_perm) const {
        if (!is_diagram_automorphism(diagram_perm))
            throw std::invalid_argument("twisted: not a diagram automorphism");
        TwistedElement t;
        t.weyl = w;
        t.diagram_perm = diagram_perm;
        t.matrix = w.matrix * diagram_perm_matrix(diagram_perm);
        t.order = matrix_order(t.matrix);
        t.root_perm = root_permutation(t.matrix);
        return t;
    }

    TwistedElement untwisted(const WeylElement& w) const {
        std::vector<int> id(static_cast<size_t>(rank_));
        for (int i = 0; i < rank_; ++i) id[static_cast<size_t>(i)] = i;
        return twisted(w, id);
    }

    /// Longest element of the standard parabolic W_I, by the
    /// antidominance walk (W is never enumerated).
    WeylElement longest_element(const std::vector<int>& I) const {
        Vec lambda(static_cast<size_t>(rank_), Rational(0));
        // sum of the positive roots supported on I
        for (int r = 0; r < num_pos_; ++r) {
            bool in_span = true;
            for (int j = 0; j < rank_; ++j)
                if (roots_[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0 &&
                    std::find(I.begin(), I.end(), j) == I.end())
                    in_span = false;
            if (!in_span) continue;
            for (int j = 0; j < rank_; ++j) lambda[static_cast<size_t>(j)] += roots_[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        QMatrix m = QMatrix::identity(rank_);
        Vec mu = lambda;
        for (;;) {
            int desc = -1;
            for (int i : I)
                if (form(mu, simple_root(i)) > 0) {
                    desc = i;
                    break;
                }
            if (desc < 0) break;
            mu = apply(simple_refl_[static_cast<size_t>(desc)], mu);
            m = simple_refl_[static_cast<size_t>(desc)] * m;
        }
        return make_weyl(m);
    }

    WeylElement longest_element() const {
        std::vector<int> all(static_cast<size_t>(rank_));
        for (int i = 0; i < rank_; ++i) all[static_cast<size_t>(i)] = i;
        return longest_element(all);
    }

private:
    void build_cartan();
    void generate_roots();
    void search_autos(std::vector<int>& perm, std::vector<bool>& used, int i,
                      std::vector<std::vector<int>>& out) const {
        if (i == rank_) {
            out.push_back(perm);
            return;
        }
        for (int v = 0; v < rank_; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            bool ok = cartan_(v, v) == cartan_(i, i) && d_[static_cast<size_t>(v)] == d_[static_cast<size_t>(i)];
            for (int j = 0; ok && j < i; ++j) {
                if (cartan_(v, perm[static_cast<size_t>(j)]) != cartan_(i, j)) ok = false;
                if (cartan_(perm[static_cast<size_t>(j)], v) != cartan_(j, i)) ok = false;
            }
            if (!ok) continue;
            perm[static_cast<size_t>(i)] = v;
            used[static_cast<size_t>(v)] = true;
            search_autos(perm, used, i + 1, out);
            used[static_cast<size_t>(v)] = false;
        }
        perm[static_cast<size_t>(i)] = -1;
    }

    std::vector<std::pair<Series, int>> factors_;
    Series series_;
    int rank_;
    QMatrix cartan_;
    std::vector<Rational> d_;
    std::vector<QMatrix> simple_refl_;
    std::vector<Vec> roots_;  // positives by (height, lex), then matching negatives
    std::map<Vec, int> root_index_;
    int num_pos_ = 0;
    Vec rho_;
};

inline void RootDatum::build_cartan() {
    auto bad = [&] { throw std::invalid_argument("RootDatum: invalid series/rank"); };
    cartan_ = QMatrix(rank_, rank_);
    for (int i = 0; i < rank_; ++i) cartan_(i, i) = 2;
    d_.assign(static_cast<size_t>(rank_), Rational(1));
    int off = 0;
    for (const auto& [series, n] : factors_) {
        auto chain = [&](int i, int j) { cartan_(off + i, off + j) = -1; cartan_(off + j, off + i) = -1; };
        auto dd = [&](int i) -> Rational& { return d_[static_cast<size_t>(off + i)]; };
        switch (series) {
            case Series::A:
                if (n < 1) bad();
                for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
                break;
            case Series::B:
                if (n < 2) bad();
                for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
                cartan_(off + n - 2, off + n - 1) = -1;
                cartan_(off + n - 1, off + n - 2) = -2;
                for (int i = 0; i + 1 < n; ++i) dd(i) = 2;
                break;
            case Series::C:
                if (n < 2) bad();
                for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
                cartan_(off + n - 2, off + n - 1) = -2;
                cartan_(off + n - 1, off + n - 2) = -1;
                dd(n - 1) = 2;
                break;
            case Series::D:
                if (n < 4) bad();
                for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
                chain(n - 3, n - 1);
                break;
            case Series::E:
                if (n < 6 || n > 8) bad();
                chain(0, 2);
                chain(1, 3);
                for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
                break;
            case Series::F:
                if (n != 4) bad();
                chain(0, 1);
                cartan_(off + 1, off + 2) = -1;
                cartan_(off + 2, off + 1) = -2;
                chain(2, 3);
                dd(0) = 2;
                dd(1) = 2;
                break;
            case Series::G:
                if (n != 2) bad();
                cartan_(off, off + 1) = -3;
                cartan_(off + 1, off) = -1;
                dd(1) = 3;
                break;
        }
        off += n;
    }
    simple_refl_.clear();
    for (int i = 0; i < rank_; ++i) {
        QMatrix s = QMatrix::identity(rank_);
        for (int j = 0; j < rank_; ++j) s(i, j) -= cartan_(i, j);
        simple_refl_.push_back(std::move(s));
    }
}

inline void RootDatum::generate_roots() {
    std::set<Vec> all;
    std::vector<Vec> frontier;
    for (int i = 0; i < rank_; ++i) {
        Vec v = simple_root(i);
        all.insert(v);
        frontier.push_back(v);
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& v : frontier)
            for (int i = 0; i < rank_; ++i) {
                Vec img = apply(simple_refl_[static_cast<size_t>(i)], v);
                if (all.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    std::vector<Vec> pos;
    for (const auto& v : all) {
        bool neg = false;
        for (const auto& c : v)
            if (c < 0) neg = true;
        if (!neg) pos.push_back(v);
    }
    auto height = [](const Vec& v) {
        Rational h(0);
        for (const auto& c : v) h += c;
        return h;
    };
    std::sort(pos.begin(), pos.end(), [&](const Vec& a, const Vec& b) {
        Rational ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    num_pos_ = static_cast<int>(pos.size());
    roots_ = pos;
    for (const auto& v : pos) {
        Vec m(v.size());
        for (size_t i = 0; i < v.size(); ++i) m[i] = -v[i];
        roots_.push_back(std::move(m));
    }
    for (size_t i = 0; i < roots_.size(); ++i) root_index_[roots_[i]] = static_cast<int>(i);
    rho_.assign(static_cast<size_t>(rank_), Rational(0));
    for (int r = 0; r < num_pos_; ++r)
        for (int j = 0; j < rank_; ++j) rho_[static_cast<size_t>(j)] += roots_[static_cast<size_t>(r)][static_cast<size_t>(j)];
}

inline Series series_from_char(char c) {
    switch (c) {
        case 'A': return Series::A;
        case 'B': return Series::B;
        case 'C': return Series::C;
        case 'D': return Series::D;
        case 'E': return Series::E;
        case 'F': return Series::F;
        case 'G': return Series::G;
        default: throw std::invalid_argument("unknown series");
    }
}

}  // namespace splitlevi
