#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hitp/arith.hpp"
#include "hitp/error.hpp"

namespace hitp {

using Vector = std::vector<Scalar>;

namespace detail {

template <unsigned P>
inline void axpy_fixed(Scalar* __restrict dst, const Scalar* __restrict src, unsigned c, std::size_t n)
{
    const auto cc = static_cast<std::uint16_t>(c);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint16_t t = static_cast<std::uint16_t>(dst[i] + cc * src[i]);
        dst[i] = static_cast<Scalar>(t % P);
    }
}

inline void axpy_generic(Scalar* __restrict dst, const Scalar* __restrict src, unsigned c, std::size_t n,
                         unsigned p)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<Scalar>((dst[i] + c * src[i]) % p);
}

/// dst += c * src (mod p), elementwise over n entries.
inline void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, PrimeModulus p)
{
    if (c == 0 || n == 0)
        return;
    // Constant divisors let the compiler vectorize the reduction.
    switch (p.value()) {
    case 3: axpy_fixed<3>(dst, src, c, n); break;
    case 5: axpy_fixed<5>(dst, src, c, n); break;
    case 7: axpy_fixed<7>(dst, src, c, n); break;
    case 11: axpy_fixed<11>(dst, src, c, n); break;
    case 13: axpy_fixed<13>(dst, src, c, n); break;
    default: axpy_generic(dst, src, c, n, p); break;
    }
}

inline void scale(Scalar* v, Scalar c, std::size_t n, PrimeModulus p)
{
    for (std::size_t i = 0; i < n; ++i)
        v[i] = p.mul(v[i], c);
}

} // namespace detail

/// Dense row-major matrix over Z/p. Entries are always canonical residues.
class Matrix {
  public:
    Matrix(PrimeModulus p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0)
    {
    }

    static Matrix identity(PrimeModulus p, std::size_t n)
    {
        Matrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, 1);
        return m;
    }

    /// Build from nested rows of integers; entries are reduced mod p.
    static Matrix from_rows(PrimeModulus p, const std::vector<std::vector<std::int64_t>>& rows)
    {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(p, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c)
                throw DimensionMismatch("ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                m.set(i, j, p.reduce(rows[i][j]));
        }
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(PrimeModulus p, std::size_t rows, const std::vector<Vector>& columns)
    {
        Matrix m(p, rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows)
                throw DimensionMismatch("column length differs from row count");
            for (std::size_t i = 0; i < rows; ++i)
                m.set(i, j, columns[j][i]);
        }
        return m;
    }

    [[nodiscard]] PrimeModulus modulus() const noexcept { return p_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = static_cast<Scalar>(v % p_); }
    void add_to(std::size_t r, std::size_t c, Scalar v)
    {
        auto& x = data_[r * cols_ + c];
        x = p_.add(x, static_cast<Scalar>(v % p_));
    }

    [[nodiscard]] std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    [[nodiscard]] Vector column(std::size_t c) const
    {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, c);
        return v;
    }

    [[nodiscard]] Matrix transpose() const
    {
        Matrix t(p_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.data_[j * rows_ + i] = data_[i * cols_ + j];
        return t;
    }

    [[nodiscard]] Matrix select_columns(std::span<const std::size_t> which) const
    {
        Matrix out(p_, rows_, which.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < which.size(); ++k)
                out.data_[i * which.size() + k] = data_[i * cols_ + which[k]];
        return out;
    }

    [[nodiscard]] Matrix select_rows(std::size_t first, std::size_t count) const
    {
        Matrix out(p_, count, cols_);
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_, out.data_.begin());
        return out;
    }

    [[nodiscard]] Vector apply(std::span<const Scalar> v) const
    {
        if (v.size() != cols_)
            throw DimensionMismatch("matrix-vector product: length " + std::to_string(v.size()) +
                                    " != " + std::to_string(cols_) + " columns");
        Vector out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            unsigned acc = 0;
            const Scalar* r = data_.data() + i * cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                acc += unsigned(r[j]) * v[j];
                if (acc >= (1u << 24))
                    acc %= p_;
            }
            out[i] = static_cast<Scalar>(acc % p_);
        }
        return out;
    }

    [[nodiscard]] bool is_zero() const noexcept
    {
        return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_ || !(a.p_ == b.p_))
            throw DimensionMismatch("matrix product shape mismatch");
        Matrix out(a.p_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                detail::axpy(out.data_.data() + i * b.cols_, b.data_.data() + k * b.cols_, a(i, k), b.cols_, a.p_);
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix difference shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] = a.p_.sub(a.data_[i], b.data_[i]);
        return out;
    }

    [[nodiscard]] Matrix scaled(Scalar c) const
    {
        Matrix out = *this;
        detail::scale(out.data_.data(), c, out.data_.size(), p_);
        return out;
    }

    /// [this | other]
    [[nodiscard]] Matrix hcat(const Matrix& other) const
    {
        if (other.rows_ != rows_)
            throw DimensionMismatch("hcat: row counts differ");
        Matrix out(p_, rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::copy_n(row(i).begin(), cols_, out.row(i).begin());
            std::copy_n(other.row(i).begin(), other.cols_, out.row(i).begin() + static_cast<std::ptrdiff_t>(cols_));
        }
        return out;
    }

    /// [this ; other]
    [[nodiscard]] Matrix vcat(const Matrix& other) const
    {
        if (other.cols_ != cols_)
            throw DimensionMismatch("vcat: column counts differ");
        Matrix out = *this;
        out.rows_ += other.rows_;
        out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a != b)
            std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

  private:
    PrimeModulus p_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row.
inline RrefResult rref_with_pivots(Matrix m)
{
    const auto p = m.modulus();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(r, piv);
        const std::size_t width = m.cols() - c;
        Scalar* prow = m.row(r).data() + c;
        detail::scale(prow, p.inv(m(r, c)), width, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r)
                continue;
            Scalar f = m(i, c);
            if (f != 0)
                detail::axpy(m.row(i).data() + c, prow, p.neg(f), width, p);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

/// Incrementally maintained reduced echelon basis of a subspace of F_p^n.
/// Basis rows are kept fully reduced, so membership needs one pass.
class SpanBuilder {
  public:
    SpanBuilder(PrimeModulus p, std::size_t n) : p_(p), n_(n), row_of_col_(n, kNone) {}

    [[nodiscard]] std::size_t dimension() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t ambient() const noexcept { return n_; }

    /// v minus its projection onto the span along pivot coordinates;
    /// zero iff v lies in the span.
    [[nodiscard]] Vector reduce(std::span<const Scalar> v) const
    {
        check(v);
        Vector r(v.begin(), v.end());
        reduce_in_place(r);
        return r;
    }

    [[nodiscard]] bool contains(std::span<const Scalar> v) const
    {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](Scalar x) { return x == 0; });
    }

    /// Adds v to the span; returns false if it was already in it.
    bool add(std::span<const Scalar> v)
    {
        check(v);
        Vector r(v.begin(), v.end());
        reduce_in_place(r);
        auto it = std::find_if(r.begin(), r.end(), [](Scalar x) { return x != 0; });
        if (it == r.end())
            return false;
        const auto c = static_cast<std::size_t>(it - r.begin());
        detail::scale(r.data() + c, p_.inv(r[c]), n_ - c, p_);
        for (auto& row : rows_) {
            Scalar f = row[c];
            if (f != 0)
                detail::axpy(row.data(), r.data(), p_.neg(f), n_, p_);
        }
        row_of_col_[c] = rows_.size();
        rows_.push_back(std::move(r));
        pivots_.push_back(c);
        return true;
    }

    bool add_unit(std::size_t i)
    {
        Vector e(n_, 0);
        e.at(i) = 1;
        return add(e);
    }

    /// The basis in reduced row echelon form (rows sorted by pivot).
    [[nodiscard]] RrefResult rref() const
    {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        Matrix m(p_, rows_.size(), n_);
        std::vector<std::size_t> piv;
        for (std::size_t k = 0; k < order.size(); ++k) {
            std::copy(rows_[order[k]].begin(), rows_[order[k]].end(), m.row(k).begin());
            piv.push_back(pivots_[order[k]]);
        }
        return {std::move(m), std::move(piv)};
    }

    /// Basis of the annihilator {k : <k, w> = 0 for all w in the span},
    /// one vector per non-pivot coordinate (that coordinate set to 1).
    [[nodiscard]] std::vector<Vector> annihilator() const
    {
        std::vector<Vector> out;
        for (std::size_t f = 0; f < n_; ++f) {
            if (row_of_col_[f] != kNone)
                continue;
            Vector k(n_, 0);
            k[f] = 1;
            for (std::size_t r = 0; r < rows_.size(); ++r)
                k[pivots_[r]] = p_.neg(rows_[r][f]);
            out.push_back(std::move(k));
        }
        return out;
    }

  private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void check(std::span<const Scalar> v) const
    {
        if (v.size() != n_)
            throw DimensionMismatch("vector length " + std::to_string(v.size()) + " != ambient " + std::to_string(n_));
    }

    void reduce_in_place(Vector& r) const
    {
        for (std::size_t c = 0; c < n_; ++c) {
            if (r[c] == 0 || row_of_col_[c] == kNone)
                continue;
            detail::axpy(r.data(), rows_[row_of_col_[c]].data(), p_.neg(r[c]), n_, p_);
        }
    }

    PrimeModulus p_;
    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> row_of_col_;
};

inline std::size_t rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return rref_with_pivots(m).pivot_columns.size();
}

/// One basis vector of {v : m v = 0} per free column of rref(m): the free
/// coordinate is 1 and the pivot coordinates are read off rref(m).
inline std::vector<Vector> right_kernel_basis(const Matrix& m)
{
    const auto p = m.modulus();
    auto [r, pivots] = rref_with_pivots(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = p.neg(r(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Indices of the columns kept by a greedy left-to-right rank test.
inline std::vector<std::size_t> independent_column_indices(const Matrix& m)
{
    SpanBuilder span(m.modulus(), m.rows());
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols() && span.dimension() < m.rows(); ++j)
        if (span.add(m.column(j)))
            keep.push_back(j);
    return keep;
}

inline Matrix independent_columns(const Matrix& m)
{
    auto keep = independent_column_indices(m);
    return m.select_columns(keep);
}

inline Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw NotSquareError("cannot invert a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " matrix");
    const std::size_t n = m.rows();
    auto [r, pivots] = rref_with_pivots(m.hcat(Matrix::identity(m.modulus(), n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw SingularMatrixError("matrix is singular");
    Matrix inv(m.modulus(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        std::copy_n(r.row(i).begin() + static_cast<std::ptrdiff_t>(n), n, inv.row(i).begin());
    return inv;
}

/// True iff v lies in the column span of m.
inline bool in_column_span(const Matrix& m, std::span<const Scalar> v)
{
    if (v.size() != m.rows())
        throw DimensionMismatch("vector length " + std::to_string(v.size()) + " != " + std::to_string(m.rows()) +
                                " rows");
    SpanBuilder span(m.modulus(), m.rows());
    for (std::size_t j = 0; j < m.cols() && span.dimension() < m.rows(); ++j)
        span.add(m.column(j));
    return span.contains(v);
}

} // namespace hitp
