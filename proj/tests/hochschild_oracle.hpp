#ifndef PREOP_TESTS_HOCHSCHILD_ORACLE_HPP
#define PREOP_TESTS_HOCHSCHILD_ORACLE_HPP

// Test-only oracle: the textbook Hochschild coboundary
//   (b f)(a0,...,an) = a0 f(a1,...,an)
//                      + sum_{i=1}^{n} (-1)^i f(a0,...,a_{i-1} a_i,...,an)
//                      + (-1)^{n+1} f(a0,...,a_{n-1}) an
// built straight from structure constants, with its own dense rank. Shares
// nothing with the pre-operad delta path except the Rational scalar.

#include <cstddef>
#include <vector>

#include "preop/algebra.hpp"
#include "preop/rational.hpp"

namespace oracle {

using preop::AlgebraDef;
using preop::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline std::size_t power(std::size_t b, int e)
{
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::vector<std::size_t> digits(std::size_t x, std::size_t d, int n)
{
    std::vector<std::size_t> v(static_cast<std::size_t>(n));
    for (int s = n - 1; s >= 0; --s) {
        v[static_cast<std::size_t>(s)] = x % d;
        x /= d;
    }
    return v;
}

inline std::size_t number(const std::vector<std::size_t>& v, std::size_t d)
{
    std::size_t x = 0;
    for (auto t : v) x = x * d + t;
    return x;
}

// Matrix of b : C^n -> C^{n+1}; C^n has basis (k; i1..in) with entry
// index k * d^n + number(i1..in).
inline Dense hochschild_matrix(const AlgebraDef& A, int n)
{
    const std::size_t d = A.dim();
    const std::size_t cols = power(d, n + 1), rows = power(d, n + 2);
    const std::size_t in_n = power(d, n), in_n1 = power(d, n + 1);
    Dense M(rows, std::vector<Rational>(cols));

    for (std::size_t col = 0; col < cols; ++col) {
        // f = basis cochain: f(e_{u}) = e_{kf} for the single tuple u
        const std::size_t kf = col / in_n;
        const auto u = digits(col % in_n, d, n);
        for (std::size_t a = 0; a < in_n1; ++a) {
            const auto args = digits(a, d, n + 1);
            std::vector<Rational> val(d);
            // a0 f(a1..an)
            if (std::vector<std::size_t>(args.begin() + 1, args.end()) == u)
                for (std::size_t k = 0; k < d; ++k) val[k] += A.c(args[0], kf, k);
            // inner terms
            for (int i = 1; i <= n; ++i) {
                const auto ii = static_cast<std::size_t>(i);
                for (std::size_t m = 0; m < d; ++m) {
                    const Rational& c = A.c(args[ii - 1], args[ii], m);
                    if (c.is_zero()) continue;
                    std::vector<std::size_t> merged(args.begin(), args.begin() + static_cast<long>(ii - 1));
                    merged.push_back(m);
                    merged.insert(merged.end(), args.begin() + static_cast<long>(ii + 1), args.end());
                    if (merged == u) val[kf] += Rational((i % 2 == 0) ? 1 : -1) * c;
                }
            }
            // (-1)^{n+1} f(a0..a_{n-1}) an
            if (std::vector<std::size_t>(args.begin(), args.end() - 1) == u)
                for (std::size_t k = 0; k < d; ++k)
                    val[k] += Rational(((n + 1) % 2 == 0) ? 1 : -1) * A.c(kf, args[static_cast<std::size_t>(n)], k);
            for (std::size_t k = 0; k < d; ++k)
                if (!val[k].is_zero()) M[k * in_n1 + a][col] = val[k];
        }
    }
    return M;
}

// Plain dense Gaussian elimination.
inline std::size_t dense_rank(Dense M)
{
    std::size_t r = 0;
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (M[i][c].is_zero()) continue;
            const Rational f = M[i][c] / M[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!M[r][j].is_zero()) M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return r;
}

// dim HH^n for n = 0..top.
inline std::vector<std::size_t> hochschild_dims(const AlgebraDef& A, int top)
{
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= top; ++n) ranks.push_back(dense_rank(hochschild_matrix(A, n)));
    std::vector<std::size_t> dims;
    for (int n = 0; n <= top; ++n) {
        const std::size_t cn = power(A.dim(), n + 1);
        const std::size_t rin = n == 0 ? 0 : ranks[static_cast<std::size_t>(n - 1)];
        dims.push_back(cn - ranks[static_cast<std::size_t>(n)] - rin);
    }
    return dims;
}

} // namespace oracle

#endif // PREOP_TESTS_HOCHSCHILD_ORACLE_HPP
