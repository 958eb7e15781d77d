#ifndef CORNERSTONE_LINALG_HPP
#define CORNERSTONE_LINALG_HPP

// Dense exact linear algebra over prime fields F_p.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cornerstone/error.hpp"

namespace cornerstone {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Arithmetic in F_p for a prime 2 <= p <= 2^31 - 1.
class Field {
public:
    explicit Field(std::uint64_t p = 101) : p_(static_cast<Scalar>(p)) {
        if (p < 2 || p > 2147483647ULL || !is_prime(p))
            throw Error(ErrorKind::NotPrime, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
    }

    Scalar p() const noexcept { return p_; }

    Scalar add(Scalar a, Scalar b) const noexcept {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Scalar>(s >= p_ ? s - p_ : s);
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : static_cast<Scalar>(std::uint64_t(a) + p_ - b); }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>(std::uint64_t(a) * b % p_); }

    Scalar pow(Scalar a, std::uint64_t e) const noexcept {
        std::uint64_t r = 1, base = a % p_;
        while (e) {
            if (e & 1) r = r * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<Scalar>(r);
    }

    Scalar inv(Scalar a) const {
        if (a % p_ == 0) throw Error(ErrorKind::Internal, "division by zero in F_p");
        return pow(a, p_ - 2);
    }

    Scalar from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % std::int64_t(p_);
        if (r < 0) r += p_;
        return static_cast<Scalar>(r);
    }

    friend bool operator==(const Field&, const Field&) = default;

private:
    Scalar p_;
};

/// Row-major dense matrix over F_p. Entries are kept reduced in [0, p).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    void set_column(std::size_t c, std::span<const Scalar> v) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    bool is_zero() const {
        for (Scalar x : data_)
            if (x) return false;
        return true;
    }

    const std::vector<Scalar>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::Internal, "matrix shape mismatch in multiply");
    Matrix c(a.rows(), b.cols());
    const std::uint64_t p = f.p();
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t x = a(i, k);
            if (!x) continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + x * brow[j]) % p;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Scalar>(acc[j]);
    }
    return c;
}

inline Vector apply(const Field& f, const Matrix& a, std::span<const Scalar> v) {
    if (a.cols() != v.size()) throw Error(ErrorKind::Internal, "matrix/vector shape mismatch");
    Vector out(a.rows(), 0);
    const std::uint64_t p = f.p();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t s = 0;
        auto r = a.row(i);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (r[k] && v[k]) s = (s + std::uint64_t(r[k]) * v[k]) % p;
        out[i] = static_cast<Scalar>(s);
    }
    return out;
}

inline Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
    return c;
}

inline Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
    return c;
}

inline Matrix scale(const Field& f, const Matrix& a, Scalar s) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(a(i, j), s);
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline void axpy(const Field& f, std::span<Scalar> y, Scalar a, std::span<const Scalar> x) {
    if (!a) return;
    const std::uint64_t p = f.p();
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i]) y[i] = static_cast<Scalar>((y[i] + std::uint64_t(a) * x[i]) % p);
}

/// Reduced row-echelon form. Pivots are chosen left to right, so the result
/// depends only on the row space and the column order.
struct Echelon {
    Matrix rref;                     // only the first rank() rows are nonzero
    std::vector<std::size_t> pivots; // pivot column of each nonzero row

    std::size_t rank() const noexcept { return pivots.size(); }
};

inline Echelon row_reduce(const Field& f, Matrix m) {
    Echelon e;
    std::size_t row = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(row, j));
        Scalar inv = f.inv(m(row, col));
        for (std::size_t j = col; j < cols; ++j) m(row, j) = f.mul(m(row, j), inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m(r, col) == 0) continue;
            Scalar factor = f.neg(m(r, col));
            axpy(f, m.row(r), factor, m.row(row));
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rref = std::move(m);
    return e;
}

inline std::size_t rank(const Field& f, const Matrix& m) { return row_reduce(f, m).rank(); }

/// Basis of the right null space {x : m x = 0}, one basis vector per column.
/// Each basis vector has a 1 at its own free column and 0 at the other free
/// columns, so the free-column rows of the result form an identity matrix.
struct KernelBasis {
    Matrix basis;                      // m.cols() x nullity
    std::vector<std::size_t> free_rows; // free_rows[k] is the row holding the 1 of column k
};

inline KernelBasis kernel(const Field& f, const Matrix& m) {
    Echelon e = row_reduce(f, m);
    const std::size_t n = m.cols();
    std::vector<char> is_pivot(n, 0);
    for (auto c : e.pivots) is_pivot[c] = 1;
    KernelBasis k;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) k.free_rows.push_back(c);
    k.basis = Matrix(n, k.free_rows.size());
    for (std::size_t idx = 0; idx < k.free_rows.size(); ++idx) {
        std::size_t fc = k.free_rows[idx];
        k.basis(fc, idx) = 1;
        for (std::size_t r = 0; r < e.rank(); ++r) k.basis(e.pivots[r], idx) = f.neg(e.rref(r, fc));
    }
    return k;
}

/// A subspace of F_p^n kept as reduced echelon rows. Insertion keeps the
/// rows fully reduced, so reduce() yields canonical coset representatives.
class RowSpace {
public:
    RowSpace(Field f, std::size_t ambient) : f_(f), n_(ambient) {}

    std::size_t ambient() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Subtracts the component along the stored pivots; the result is zero
    /// iff v lies in the subspace.
    Vector reduce(Vector v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Scalar c = v[pivots_[i]];
            if (c) axpy(f_, v, f_.neg(c), rows_[i]);
        }
        return v;
    }

    bool contains(const Vector& v) const {
        for (Scalar x : reduce(v))
            if (x) return false;
        return true;
    }

    /// Returns true if v enlarged the subspace.
    bool insert(Vector v) {
        v = reduce(std::move(v));
        std::size_t piv = 0;
        while (piv < n_ && v[piv] == 0) ++piv;
        if (piv == n_) return false;
        Scalar inv = f_.inv(v[piv]);
        for (auto& x : v) x = f_.mul(x, inv);
        for (auto& r : rows_)
            if (r[piv]) axpy(f_, r, f_.neg(r[piv]), v);
        // keep rows sorted by pivot for determinism
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, piv);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    /// Indices not used as pivots: a canonical complement drawn from the
    /// standard basis.
    std::vector<std::size_t> non_pivots() const {
        std::vector<char> used(n_, 0);
        for (auto p : pivots_) used[p] = 1;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (!used[i]) out.push_back(i);
        return out;
    }

    /// Basis vectors as columns; the pivot rows form an identity block.
    Matrix as_columns() const {
        Matrix m(n_, rows_.size());
        for (std::size_t k = 0; k < rows_.size(); ++k) m.set_column(k, rows_[k]);
        return m;
    }

private:
    Field f_;
    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

inline RowSpace column_space(const Field& f, const Matrix& m) {
    RowSpace s(f, m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) s.insert(m.column(c));
    return s;
}

/// Inverse of a square matrix; throws if singular.
inline Matrix inverse(const Field& f, const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorKind::Internal, "inverse of a non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = row_reduce(f, std::move(aug));
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw Error(ErrorKind::Internal, "matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

}  // namespace cornerstone

#endif
