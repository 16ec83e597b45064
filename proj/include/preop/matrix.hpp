#ifndef PREOP_MATRIX_HPP
#define PREOP_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace preop {

using Vector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // Columns of the result are the given vectors.
    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows)
    {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw DimMismatch("column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    [[nodiscard]] std::span<const Rational> entries() const { return data_; }

    [[nodiscard]] Vector column(std::size_t c) const
    {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
    }

    [[nodiscard]] Vector operator*(std::span<const Rational> v) const
    {
        if (v.size() != cols_) throw DimMismatch("matrix-vector size mismatch");
        Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const Rational& a = (*this)(r, c);
                if (!a.is_zero() && !v[c].is_zero()) out[r].add_product(a, v[c]);
            }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw DimMismatch("matrix product size mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) out(i, j).add_product(x, b(k, j));
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// row -= factor * pivot, both sorted by column.
inline SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot)
{
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
            out.push_back(row[a++]);
        } else if (a == row.size() || pivot[b].first < row[a].first) {
            out.emplace_back(pivot[b].first, -(factor * pivot[b].second));
            ++b;
        } else {
            Rational v = row[a].second - factor * pivot[b].second;
            if (!v.is_zero()) out.emplace_back(row[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

} // namespace detail

/*
 * Reduced row echelon form, computed with exact elimination.
 *
 * Pivoting rule: columns are processed left to right; among the rows whose
 * leading entry sits in the current column, the one with the smallest
 * original row index becomes the pivot. The result is a pure function of the
 * input matrix.
 *
 * Rows are held sparsely during elimination; coboundary matrices are very
 * sparse and dense elimination would be needlessly slow on them.
 */
class RowEchelon {
public:
    explicit RowEchelon(const Matrix& m) : cols_(m.cols())
    {
        std::vector<detail::SparseRow> rows(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m(r, c).is_zero()) rows[r].emplace_back(c, m(r, c));
        eliminate(std::move(rows));
    }

    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    // Pivot column of each nonzero reduced row, ascending.
    [[nodiscard]] const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
    // Reduced rows (leading entry 1, zero in every other pivot column).
    [[nodiscard]] const std::vector<detail::SparseRow>& reduced_rows() const { return reduced_; }

private:
    void eliminate(std::vector<detail::SparseRow> rows)
    {
        // Bucket row ids by leading column; every row in bucket c has been
        // cleared of all earlier pivot columns.
        std::vector<std::vector<std::size_t>> bucket(cols_);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!rows[r].empty()) bucket[rows[r].front().first].push_back(r);

        for (std::size_t c = 0; c < cols_; ++c) {
            auto& ids = bucket[c];
            if (ids.empty()) continue;
            std::sort(ids.begin(), ids.end());
            const std::size_t p = ids.front();
            detail::SparseRow pivot = std::move(rows[p]);
            const Rational lead = pivot.front().second;
            if (!lead.is_one())
                for (auto& e : pivot) e.second /= lead;
            for (std::size_t t = 1; t < ids.size(); ++t) {
                const std::size_t r = ids[t];
                const Rational factor = rows[r].front().second;
                rows[r] = detail::axpy(rows[r], factor, pivot);
                if (!rows[r].empty()) bucket[rows[r].front().first].push_back(r);
            }
            ids.clear();
            ids.shrink_to_fit();
            pivots_.push_back(c);
            reduced_.push_back(std::move(pivot));
        }

        // Back substitution to reach reduced form.
        for (std::size_t k = reduced_.size(); k-- > 0;) {
            const std::size_t pc = pivots_[k];
            for (std::size_t u = 0; u < k; ++u) {
                auto& row = reduced_[u];
                auto it = std::lower_bound(row.begin(), row.end(), pc,
                                           [](const auto& e, std::size_t col) { return e.first < col; });
                if (it == row.end() || it->first != pc) continue;
                const Rational factor = it->second;
                row = detail::axpy(row, factor, reduced_[k]);
            }
        }
    }

    std::size_t cols_ = 0;
    std::vector<std::size_t> pivots_;
    std::vector<detail::SparseRow> reduced_;
};

inline std::size_t rank(const Matrix& m) { return RowEchelon(m).rank(); }

// Basis of the null space, one vector per free column in ascending order;
// vector for free column f has a 1 in position f.
inline std::vector<Vector> kernel_basis(const RowEchelon& e)
{
    const auto& piv = e.pivot_columns();
    std::vector<bool> is_pivot(e.cols(), false);
    for (auto c : piv) is_pivot[c] = true;

    std::vector<Vector> basis;
    std::vector<std::size_t> slot(e.cols(), 0);
    for (std::size_t f = 0, k = 0; f < e.cols(); ++f)
        if (!is_pivot[f]) slot[f] = k++;
    basis.assign(e.cols() - piv.size(), Vector(e.cols()));
    for (std::size_t f = 0; f < e.cols(); ++f)
        if (!is_pivot[f]) basis[slot[f]][f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (const auto& [c, v] : e.reduced_rows()[r])
            if (c != piv[r]) basis[slot[c]][piv[r]] = -v;
    return basis;
}

inline std::vector<Vector> kernel_basis(const Matrix& m) { return kernel_basis(RowEchelon(m)); }

// Coordinates x with B x = b when b lies in the column span of B.
// Free variables are set to zero.
inline std::optional<Vector> solve_in_span(const Matrix& basis, std::span<const Rational> b)
{
    if (b.size() != basis.rows()) throw DimMismatch("right-hand side length mismatch");
    const std::size_t n = basis.cols();
    Matrix aug(basis.rows(), n + 1);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = basis(r, c);
        aug(r, n) = b[r];
    }
    RowEchelon e(aug);
    const auto& piv = e.pivot_columns();
    if (!piv.empty() && piv.back() == n) return std::nullopt;
    Vector x(n);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        const auto& row = e.reduced_rows()[r];
        if (!row.empty() && row.back().first == n) x[piv[r]] = row.back().second;
    }
    return x;
}

} // namespace preop

#endif // PREOP_MATRIX_HPP
