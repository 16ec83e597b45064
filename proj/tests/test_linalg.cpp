#include <limits>

#include <gtest/gtest.h>

#include "preop/matrix.hpp"
#include "preop/prng.hpp"
#include "preop/rational.hpp"

using namespace preop;

namespace {

Rational random_rational(Prng& rng, std::int64_t bound)
{
    std::int64_t den = 0;
    while (den == 0) den = rng.between(-bound, bound);
    return Rational(rng.between(-bound, bound), den);
}

Matrix random_matrix(Prng& rng, std::size_t rows, std::size_t cols, std::int64_t bound)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.between(-bound, bound);
    return m;
}

Matrix transpose(const Matrix& m)
{
    Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

bool all_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace

TEST(Rational, ExactFractions)
{
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(7, 3) / Rational(14, 9), Rational(3, 2));
    EXPECT_EQ(Rational(-3, 7) * Rational(1), Rational(-3, 7));
    EXPECT_EQ(Rational(2, 4).str(), "1/2");
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational(0, -5).str(), "0");
    EXPECT_TRUE(Rational(0, 7).is_zero());
}

TEST(Rational, DivideByZero)
{
    EXPECT_THROW(Rational(1) / Rational(0), DivideByZero);
    EXPECT_THROW(Rational(1, 0), DivideByZero);
}

TEST(Rational, Parse)
{
    EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse("+5"), Rational(5));
    EXPECT_EQ(Rational::parse("0/9"), Rational(0));
    const auto big = Rational::parse("123456789012345678901234567891/7");
    EXPECT_FALSE(big.is_small());
    EXPECT_EQ(big.str(), "123456789012345678901234567891/7");
    EXPECT_THROW(Rational::parse("1/0"), ValidationError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse("1.5"), ParseError);
    EXPECT_THROW(Rational::parse("1/-2"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, PromotesAndDemotesAcrossInt64)
{
    const Rational max = std::numeric_limits<std::int64_t>::max();
    const Rational over = max + Rational(1);
    EXPECT_FALSE(over.is_small());
    EXPECT_EQ(over.str(), "9223372036854775808");
    const Rational back = over - Rational(1);
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, max);

    const Rational sq = max * max;
    EXPECT_EQ(sq / max, max);
    EXPECT_TRUE((sq / max).is_small());

    const Rational tiny(1, std::numeric_limits<std::int64_t>::max());
    EXPECT_EQ((tiny * tiny) / tiny, tiny);

    Rational acc = 0;
    acc.add_product(max, max);
    EXPECT_EQ(acc, sq);
    EXPECT_EQ(Rational(std::numeric_limits<std::int64_t>::min()).str(), "-9223372036854775808");
}

TEST(Rational, FieldLawsOnRandomValues)
{
    Prng rng(11);
    for (int t = 0; t < 2000; ++t) {
        Rational a = random_rational(rng, 1000), b = random_rational(rng, 1000);
        // push some values past int64
        if (t % 3 == 0) a *= Rational(std::numeric_limits<std::int64_t>::max() - 5, 3);
        if (t % 5 == 0) b *= Rational(1, std::numeric_limits<std::int64_t>::max() - 2);
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ(a * Rational(1), a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        if (!b.is_zero()) { EXPECT_EQ((a * b) / b, a); }
        EXPECT_EQ(a - a, Rational(0));
        EXPECT_EQ(-(-a), a);
        EXPECT_EQ(a.to_mpq() + b.to_mpq(), (a + b).to_mpq());
    }
}

TEST(Rank, Examples)
{
    EXPECT_EQ(rank(Matrix::identity(2)), 2u);
    EXPECT_EQ(rank(Matrix(3, 4)), 0u);
    EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}, {3, 6}}), 1u);
    EXPECT_EQ(rank(Matrix(0, 3)), 0u);
}

TEST(Kernel, Examples)
{
    const auto k = kernel_basis(Matrix{{1, 1}});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0][1], Rational(1));
    EXPECT_EQ(k[0][0], Rational(-1));

    EXPECT_TRUE(kernel_basis(Matrix{{2, 1}, {1, 1}}).empty());

    const Matrix m{{1, 2, 3}};
    const auto k3 = kernel_basis(m);
    ASSERT_EQ(k3.size(), 2u);
    for (const auto& v : k3) EXPECT_TRUE(all_zero(m * v));
}

TEST(SolveInSpan, Examples)
{
    const Vector b{Rational(3, 2), Rational(-7), Rational(0)};
    EXPECT_EQ(*solve_in_span(Matrix::identity(3), b), b);
    EXPECT_EQ(*solve_in_span(Matrix::identity(3), Vector(3)), Vector(3));

    const auto x = solve_in_span(Matrix{{1}, {2}}, Vector{2, 4});
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, Vector{2});
    EXPECT_FALSE(solve_in_span(Matrix{{1}, {2}}, Vector{2, 5}));
    EXPECT_THROW(solve_in_span(Matrix{{1}, {2}}, Vector{2}), DimMismatch);
}

TEST(Echelon, DeterministicFirstNonzeroPivot)
{
    // column 0 is zero, so column 1 pivots on row 1 (first nonzero), column 2 on row 0
    const Matrix m{{0, 0, 5}, {0, 3, 1}, {0, 6, 2}};
    RowEchelon e(m);
    EXPECT_EQ(e.pivot_columns(), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(kernel_basis(e), (std::vector<Vector>{Vector{1, 0, 0}}));
}

TEST(LinalgProperties, RandomMatrices)
{
    Prng rng(2024);
    for (int t = 0; t < 150; ++t) {
        const std::size_t rows = rng.between(1, 9), cols = rng.between(1, 9);
        Matrix m = random_matrix(rng, rows, cols, 2);
        // force some rank deficiency: copy a combination of rows
        if (rows > 2 && t % 2 == 0)
            for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Rational(3) - m(1, c);

        const RowEchelon e(m);
        const auto ker = kernel_basis(e);
        EXPECT_EQ(e.rank() + ker.size(), cols);
        EXPECT_LE(e.rank(), std::min(rows, cols));
        EXPECT_EQ(e.rank(), rank(transpose(m))) << "row rank differs from column rank";
        for (const auto& v : ker) EXPECT_TRUE(all_zero(m * v));
        if (!ker.empty()) { EXPECT_EQ(rank(Matrix::from_columns(ker, cols)), ker.size()); }

        // b in the span: B x0; b random: maybe outside
        Vector x0(cols);
        for (auto& x : x0) x = rng.between(-3, 3);
        const Vector inside = m * x0;
        const auto x = solve_in_span(m, inside);
        ASSERT_TRUE(x);
        EXPECT_EQ(m * *x, inside);

        Vector b(rows);
        for (auto& y : b) y = rng.between(-3, 3);
        const auto xb = solve_in_span(m, b);
        Matrix aug(rows, cols + 1);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
            aug(r, cols) = b[r];
        }
        if (xb)
            EXPECT_EQ(m * *xb, b);
        else
            EXPECT_GT(rank(aug), e.rank());
    }
}

TEST(Prng, SplitMix64ReferenceStream)
{
    Prng g(1234567);
    EXPECT_EQ(g.next(), 6457827717110365317ULL);
    EXPECT_EQ(g.next(), 3203168211198807973ULL);
    EXPECT_EQ(g.next(), 9817491932198370423ULL);
    EXPECT_EQ(g.next(), 4593380528125082431ULL);
    EXPECT_EQ(g.next(), 16408922859458223821ULL);
}

TEST(Prng, BetweenStaysInRange)
{
    Prng g(3);
    bool seen_lo = false, seen_hi = false;
    for (int t = 0; t < 1000; ++t) {
        const auto v = g.between(-3, 3);
        ASSERT_GE(v, -3);
        ASSERT_LE(v, 3);
        seen_lo |= v == -3;
        seen_hi |= v == 3;
    }
    EXPECT_TRUE(seen_lo && seen_hi);
}
