#pragma once

#include <memory>
#include <vector>

#include "seqalg/calculus.hpp"

namespace seqalg {

// ---- linear ordinary difference equations (Klarner's method) -----------------------

// A linear constant-coefficient difference equation b(E) s = 0 given by the
// characteristic polynomial b (ascending coefficients, degree k, leading
// coefficient nonzero) plus the k initial terms of s.
template <class C>
struct Lode {
    Seq<C> b;
    Seq<C> inits;
};

// Solves the difference equation as a rational series:
//   s = (first k terms of reverse(b) * inits) / reverse(b).
template <class C>
Seq<C> klarner_solve(const Lode<C>& eq) {
    if (!eq.b.is_finite() || !eq.inits.is_finite())
        throw Error(ErrorKind::InfiniteInput,
                    "difference equation data must be finite");
    Seq<C> rb = reverse_poly(eq.b);
    if (!rb.is_finite() || *rb.finite_len() < 2)
        throw Error(ErrorKind::DegenerateRecurrence,
                    "characteristic polynomial must have degree at least 1");
    std::uint64_t k = *rb.finite_len() - 1;
    Seq<C> num = rb * eq.inits;
    std::vector<C> head;
    head.reserve(static_cast<std::size_t>(k));
    for (std::uint64_t i = 0; i < k; ++i) head.push_back(num.nth(i));
    return Seq<C>::from_coeffs(std::move(head)) / rb;
}

// Solution of the matching linear differential equation: the terms of the
// difference-equation solution reread as exponential coefficients.
template <class C>
Seq<C> lode_to_ode(const Lode<C>& eq) {
    return o2e(klarner_solve(eq));
}

// ---- dense matrices ------------------------------------------------------------------

template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw Error(ErrorKind::DimensionMismatch, "matrix addition shape");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_)
            throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
        Matrix r(x.rows_, y.cols_, T{}); // value-initialised T is zero
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k)
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& v : r.a_) v = c * v;
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

// Determinant by cofactor expansion along the first row; works over any
// commutative ring (in particular polynomial entries).
template <class T>
T det(const Matrix<T>& m, const T& zero) {
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return zero; // by convention not used; callers pass n >= 1
    if (n == 1) return m.at(0, 0);
    T acc = zero;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<T> minor(n - 1, n - 1, zero);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        T term = m.at(0, j) * det(minor, zero);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// ---- matrices of sequences ----------------------------------------------------------

// Entrywise star of A*x: entry (i,j) of the result is the sequence
// n -> (A^n)_{ij}, i.e. (I - Ax)^{-1} read entrywise.
template <class C>
Matrix<Seq<C>> kleene_star(const Matrix<C>& A) {
    if (A.rows() != A.cols())
        throw Error(ErrorKind::DimensionMismatch, "matrix star of a non-square matrix");
    std::size_t n = A.rows();
    auto powers = std::make_shared<std::vector<Matrix<C>>>();
    powers->push_back(Matrix<C>::identity(n, field_traits<C>::zero(),
                                          field_traits<C>::one()));
    Matrix<Seq<C>> r(n, n, Seq<C>::zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r.at(i, j) = Seq<C>::from_fn([powers, A, i, j](std::uint64_t k) {
                while (powers->size() <= k)
                    powers->push_back((*powers)[powers->size() - 1] * A);
                return (*powers)[k].at(i, j);
            });
    return r;
}

// Characteristic polynomial det(xI - A), ascending coefficients, monic.
template <class C>
Seq<C> char_poly(const Matrix<C>& A) {
    if (A.rows() != A.cols())
        throw Error(ErrorKind::DimensionMismatch,
                    "characteristic polynomial of a non-square matrix");
    std::size_t n = A.rows();
    Matrix<Seq<C>> m(n, n, Seq<C>::zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Seq<C> e(-A.at(i, j));
            if (i == j) e = e + Seq<C>::x();
            m.at(i, j) = e;
        }
    Seq<C> d = det(m, Seq<C>::zero());
    // normalise the length marker to exactly n+1 terms
    std::vector<C> cs;
    for (std::size_t k = 0; k <= n; ++k) cs.push_back(d.nth(k));
    return Seq<C>::from_coeffs(std::move(cs));
}

// Cayley-Hamilton, stated on sequences: with b the characteristic
// polynomial and s any entry of kleene_star(A), sum_j b_j s_{m+j} = 0 for
// all m; checked through prefix N.
template <class C>
bool cayley_hamilton_check(const Matrix<C>& A, std::size_t N) {
    Seq<C> b = char_poly(A);
    std::uint64_t deg = *b.finite_len() - 1;
    Matrix<Seq<C>> star = kleene_star(A);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            for (std::size_t m = 0; m < N; ++m) {
                C acc = field_traits<C>::zero();
                for (std::uint64_t t = 0; t <= deg; ++t)
                    acc = acc + b.nth(t) * star.at(i, j).nth(m + t);
                if (!field_traits<C>::is_zero(acc)) return false;
            }
    return true;
}

// Matrix exponential, entrywise as sequences: phi = sum_i S_i A^i where
// S_i solves the characteristic difference equation with initial terms
// x^i, and the whole is reread exponentially.  Equals o2e(kleene_star A)
// entrywise.
template <class C>
Matrix<Seq<C>> matrix_exp(const Matrix<C>& A) {
    if (A.rows() != A.cols())
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix exponential of a non-square matrix");
    std::size_t n = A.rows();
    Seq<C> b = char_poly(A);
    std::vector<Seq<C>> S;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<C> inits(n, field_traits<C>::zero());
        inits[i] = field_traits<C>::one();
        S.push_back(
            klarner_solve<C>({b, Seq<C>::from_coeffs(std::move(inits))}));
    }
    Matrix<C> Ai = Matrix<C>::identity(n, field_traits<C>::zero(),
                                       field_traits<C>::one());
    Matrix<Seq<C>> phi(n, n, Seq<C>::zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) Ai = Ai * A;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                phi.at(r, c) = phi.at(r, c) + scalar_mul(Ai.at(r, c), S[i]);
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) phi.at(r, c) = o2e(phi.at(r, c));
    return phi;
}

} // namespace seqalg
