#pragma once

#include "tlacalc/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlacalc {

/// Dense row-major matrix over an exact ring (Rational or Poly).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0L)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1L);
        return m;
    }

    /// Elementary matrix unit with a single 1 at (i, j).
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j)
    {
        Matrix m(n, n);
        m(i, j) = T(1L);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const noexcept { return data_; }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (!(v == T(0L)))
                return false;
        return true;
    }

    T trace() const
    {
        T t(0L);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            t += (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= o.data_[i];
        return *this;
    }

    template <class S>
    Matrix& scale(const S& s)
    {
        for (auto& v : data_)
            v = v * s;
        return *this;
    }

    Matrix operator-() const
    {
        Matrix out = *this;
        for (auto& v : out.data_)
            v = -v;
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product dimension mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0L))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!(b(k, j) == T(0L)))
                        out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_same(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b)
{
    return a * b - b * a;
}

inline PolyMatrix to_poly(const RMatrix& m)
{
    PolyMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Poly(m(i, j));
    return out;
}

/// Entrywise application of a vector field or any other linear map on Poly.
template <class F>
PolyMatrix map_entries(const PolyMatrix& m, F&& f)
{
    PolyMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = f(m(i, j));
    return out;
}

/// Determinant by cofactor expansion; intended for n <= 4.
template <class T>
T determinant(const Matrix<T>& m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return T(1L);
    if (n == 1)
        return m(0, 0);
    T det(0L);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == T(0L))
            continue;
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor(r - 1, cc++) = m(r, c);
            }
        T term = m(0, j) * determinant(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

std::string to_string(const PolyMatrix& m);

} // namespace tlacalc
