#pragma once

#include "splitlevi/cyclotomic.hpp"
#include "splitlevi/polynomial.hpp"
#include "splitlevi/rational.hpp"

#include <stdexcept>
#include <vector>

namespace splitlevi {

/// Dense matrix over an exact field (Rational or Cyclotomic).
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T fill = T())
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend Matrix operator*(const Matrix& a, const T& s) {
        Matrix out = a;
        for (auto& v : out.a_) v = v * s;
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix: apply shape");
        std::vector<T> out(static_cast<size_t>(rows_), T());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix pow(unsigned long e) const {
        Matrix out = identity(rows_), base = *this;
        while (e) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    Matrix hstack(const Matrix& b) const {
        if (rows_ != b.rows_) throw std::invalid_argument("Matrix: hstack shape");
        Matrix out(rows_, cols_ + b.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            for (int j = 0; j < b.cols_; ++j) out(i, cols_ + j) = b(i, j);
        }
        return out;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = (*this)(i, j);
        return v;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, int rows) {
        Matrix m(rows, static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
        return m;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using CycMatrix = Matrix<Cyclotomic>;

template <class T>
struct RrefResult {
    Matrix<T> reduced;
    std::vector<int> pivots;
    int rank = 0;
};

/// Exact reduced row-echelon form by Gauss-Jordan elimination.
template <class T>
RrefResult<T> rref(const Matrix<T>& m) {
    RrefResult<T> out{m, {}, 0};
    Matrix<T>& a = out.reduced;
    int r = 0;
    for (int j = 0; j < a.cols() && r < a.rows(); ++j) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, j) != T()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(r, k));
        T inv = T(1) / a(r, j);
        for (int k = 0; k < a.cols(); ++k) a(r, k) = a(r, k) * inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, j) == T()) continue;
            T f = a(i, j);
            for (int k = 0; k < a.cols(); ++k) a(i, k) = a(i, k) - f * a(r, k);
        }
        out.pivots.push_back(j);
        ++r;
    }
    out.rank = r;
    return out;
}

template <class T>
int rank(const Matrix<T>& m) {
    return rref(m).rank;
}

/// True when v lies in the column space of m.
template <class T>
bool in_column_space(const Matrix<T>& m, const std::vector<T>& v) {
    Matrix<T> vm(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) vm(i, 0) = v[static_cast<size_t>(i)];
    return rank(m) == rank(m.hstack(vm));
}

/// Exact inverse by Gauss-Jordan on [A | I]; throws on singular input.
template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    int n = a.rows();
    auto rr = rref(a.hstack(Matrix<T>::identity(n)));
    if (static_cast<int>(rr.pivots.size()) < n || rr.pivots[static_cast<size_t>(n) - 1] >= n)
        throw std::invalid_argument("inverse: singular matrix");
    Matrix<T> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = rr.reduced(i, n + j);
    return out;
}

/// Basis of the kernel, one column vector per free variable.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    auto rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<T>> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        std::vector<T> v(static_cast<size_t>(m.cols()), T());
        v[static_cast<size_t>(j)] = T(1);
        for (size_t r = 0; r < rr.pivots.size(); ++r)
            v[static_cast<size_t>(rr.pivots[r])] = T() - rr.reduced(static_cast<int>(r), j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact characteristic polynomial (monic) via Faddeev-LeVerrier.
inline Poly char_poly(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: not square");
    int n = m.rows();
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[static_cast<size_t>(n)] = 1;
    QMatrix mk = QMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        Rational ck = -tr / Rational(k);
        c[static_cast<size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return Poly(std::move(c));
}

/// Multiplicative order of a finite-order matrix; throws past `bound`.
inline unsigned long matrix_order(const QMatrix& g, unsigned long bound = 10000) {
    QMatrix id = QMatrix::identity(g.rows()), p = g;
    for (unsigned long k = 1; k <= bound; ++k) {
        if (p == id) return k;
        p = p * g;
    }
    throw std::domain_error("matrix_order: order exceeds bound");
}

/// Projection onto the fixed space of the cyclic group generated by g:
/// the average (1/m) sum of the first m powers of g.
inline QMatrix fixed_projector(const QMatrix& g, unsigned long order) {
    if (g.pow(order) != QMatrix::identity(g.rows()))
        throw std::invalid_argument("fixed_projector: g^order != identity");
    QMatrix acc(g.rows(), g.rows()), p = QMatrix::identity(g.rows());
    for (unsigned long k = 0; k < order; ++k) {
        acc = acc + p;
        p = p * g;
    }
    return acc * (Rational(1) / Rational(static_cast<long>(order)));
}

/// Projection onto the zeta_n^k-eigenspace of g, as the averaged sum
/// (1/n) sum_j zeta^{-jk} g^j over Q(mu_n).
inline CycMatrix eigen_projector(const QMatrix& g, unsigned long n, long k) {
    if (g.pow(n) != QMatrix::identity(g.rows()))
        throw std::invalid_argument("eigen_projector: g^n != identity");
    int dim = g.rows();
    CycMatrix acc(dim, dim);
    QMatrix p = QMatrix::identity(dim);
    for (unsigned long j = 0; j < n; ++j) {
        Cyclotomic w = Cyclotomic::root_of_unity(n, -static_cast<long>(j) * k);
        for (int i = 0; i < dim; ++i)
            for (int c = 0; c < dim; ++c)
                if (p(i, c) != 0) acc(i, c) += w * Cyclotomic(p(i, c), n);
        p = p * g;
    }
    Cyclotomic inv_n = Cyclotomic(Rational(1, static_cast<long>(n)), n);
    return acc * inv_n;
}

inline CycMatrix to_cyclotomic(const QMatrix& m, unsigned long n) {
    CycMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = Cyclotomic(m(i, j), n);
    return out;
}

}  // namespace splitlevi
