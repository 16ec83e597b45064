#include <gtest/gtest.h>

#include "preop/multimap.hpp"

using namespace preop;

namespace {

Vector unit_vector(std::size_t d, std::size_t i)
{
    Vector v(d);
    v[i] = 1;
    return v;
}

std::vector<Vector> basis_args(std::size_t d, std::initializer_list<std::size_t> idx)
{
    std::vector<Vector> v;
    for (auto i : idx) v.push_back(unit_vector(d, i));
    return v;
}

} // namespace

TEST(Sign, ParityOfSignedExponents)
{
    EXPECT_EQ(sign_pow(0), 1);
    EXPECT_EQ(sign_pow(-1), -1);
    EXPECT_EQ(sign_pow(-2), 1);
    EXPECT_EQ(sign_pow(7), -1);
}

TEST(MuOf, ReadsStructureConstants)
{
    const auto dual = mu_of(fixtures::dual_numbers());
    EXPECT_EQ(dual.arity(), 2);
    const std::vector<std::size_t> eps_eps{1, 1};
    EXPECT_EQ(evaluate(dual, std::span<const std::size_t>(eps_eps)), Vector(2));

    // e12 * e21 = e11
    const auto m2 = mu_of(fixtures::matrix_2x2());
    const std::vector<std::size_t> args{1, 2};
    EXPECT_EQ(evaluate(m2, std::span<const std::size_t>(args)), unit_vector(4, 0));
}

TEST(Evaluate, BasisTuplesAndMultilinearity)
{
    Prng rng(5);
    const auto f = random_multimap(3, 3, rng, 3);
    // basis tuples reproduce table columns
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
        const auto t = basis_tuple(3, 3, flat);
        const auto v = evaluate(f, std::span<const std::size_t>(t.inputs));
        EXPECT_EQ(v[t.output], f[flat]);
        const auto w = evaluate(f, std::span<const Vector>(basis_args(3, {t.inputs[0], t.inputs[1], t.inputs[2]})));
        EXPECT_EQ(v, w);
    }
    // linearity in the middle slot
    Vector x{1, -2, 3}, u{Rational(1, 2), 0, 5}, v{-1, 4, Rational(2, 3)}, z{0, 1, 1};
    Vector comb(3);
    for (std::size_t i = 0; i < 3; ++i) comb[i] = Rational(2) * u[i] + Rational(3) * v[i];
    const auto lhs = evaluate(f, std::span<const Vector>(std::vector<Vector>{x, comb, z}));
    const auto a = evaluate(f, std::span<const Vector>(std::vector<Vector>{x, u, z}));
    const auto b = evaluate(f, std::span<const Vector>(std::vector<Vector>{x, v, z}));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(lhs[i], Rational(2) * a[i] + Rational(3) * b[i]);
}

TEST(Evaluate, ArityZeroAndErrors)
{
    MultiMap a(0, 2);
    a[0] = 4;
    a[1] = Rational(-1, 3);
    EXPECT_EQ(evaluate(a, std::span<const Vector>()), (Vector{4, Rational(-1, 3)}));
    const auto mu = mu_of(fixtures::dual_numbers());
    EXPECT_THROW(evaluate(mu, std::span<const Vector>(basis_args(2, {0}))), ArityMismatch);
    EXPECT_THROW(evaluate(mu, std::span<const Vector>(std::vector<Vector>{Vector(3), Vector(3)})), DimMismatch);
}

TEST(IdentityMap, EvaluatesToItsArgument)
{
    const auto id = identity_map(3);
    for (std::size_t i = 0; i < 3; ++i) {
        const std::vector<std::size_t> arg{i};
        EXPECT_EQ(evaluate(id, std::span<const std::size_t>(arg)), unit_vector(3, i));
    }
}

TEST(Insert, UnitAndArityBookkeeping)
{
    Prng rng(9);
    const auto g = random_multimap(2, 2, rng, 3);
    EXPECT_EQ(insert(identity_map(2), g, 0), g);

    const auto mu = mu_of(fixtures::upper_triangular_2x2());
    EXPECT_EQ(insert(mu, mu, 0).arity(), 3);
    EXPECT_THROW(insert(mu, mu, 2), IndexOutOfRange);
    EXPECT_THROW(insert(mu, identity_map(2), 0), DimMismatch);
    EXPECT_THROW(insert(MultiMap(0, 3), mu, 0), IndexOutOfRange);
}

TEST(Insert, ArityZeroInSecondSlotFixesRightArgument)
{
    // insert(mu, a, 1) is x -> mu(x, a)
    const auto alg = fixtures::upper_triangular_2x2();
    const auto mu = mu_of(alg);
    MultiMap a(0, 3);
    a[0] = 2;
    a[1] = -1;
    a[2] = 5;
    const auto r = insert(mu, a, 1);
    ASSERT_EQ(r.arity(), 1);
    const Vector av{2, -1, 5};
    for (std::size_t x = 0; x < 3; ++x) {
        const std::vector<std::size_t> arg{x};
        const auto expect = evaluate(mu, std::span<const Vector>(std::vector<Vector>{unit_vector(3, x), av}));
        EXPECT_EQ(evaluate(r, std::span<const std::size_t>(arg)), expect);
    }
}

TEST(Insert, MatchesPointwiseComposition)
{
    // (f o_i g)(x...) = f(x_0..x_{i-1}, g(x_i..), ...) checked on every basis tuple
    Prng rng(21);
    for (int m = 1; m <= 3; ++m)
        for (int p = 0; p <= 2; ++p)
            for (int i = 0; i < m; ++i) {
                const auto f = random_multimap(m, 2, rng, 2);
                const auto g = random_multimap(p, 2, rng, 2);
                const auto r = insert(f, g, i);
                ASSERT_EQ(r.arity(), m + p - 1);
                for (std::size_t flat = 0; flat < r.size(); flat += 2) {
                    const auto t = basis_tuple(r.arity(), 2, flat);
                    std::vector<Vector> inner, outer;
                    for (int s = 0; s < p; ++s) inner.push_back(unit_vector(2, t.inputs[i + s]));
                    for (int s = 0; s < i; ++s) outer.push_back(unit_vector(2, t.inputs[s]));
                    outer.push_back(evaluate(g, std::span<const Vector>(inner)));
                    for (int s = i + p; s < r.arity(); ++s) outer.push_back(unit_vector(2, t.inputs[s]));
                    EXPECT_EQ(evaluate(r, std::span<const std::size_t>(t.inputs)),
                              evaluate(f, std::span<const Vector>(outer)));
                }
            }
}

TEST(PartialCompose, KoszulSign)
{
    Prng rng(4);
    const auto mu = mu_of(fixtures::dual_numbers());
    const auto g = random_multimap(2, 2, rng, 3);
    // |g| = 1, slot 1: sign (-1)^{1*1}
    EXPECT_EQ(partial_compose(mu, g, 1), -insert(mu, g, 1));
    EXPECT_EQ(partial_compose(mu, g, 0), insert(mu, g, 0));
    // |a| = -1, slot 0: exponent zero
    const auto a = random_multimap(0, 2, rng, 3);
    EXPECT_EQ(partial_compose(mu, a, 0), insert(mu, a, 0));
    EXPECT_EQ(partial_compose(mu, a, 1), -insert(mu, a, 1));
    EXPECT_EQ(partial_compose(mu, g, 1).degree(), mu.degree() + g.degree() - 1);
}

TEST(PartialCompose, UnitLaws)
{
    Prng rng(8);
    const auto I = identity_map(3);
    for (int n = 0; n <= 3; ++n) {
        const auto f = random_multimap(n, 3, rng, 3);
        EXPECT_EQ(partial_compose(I, f, 0), f);
        for (int i = 0; i < n; ++i) EXPECT_EQ(partial_compose(f, I, i), f);
    }
    const auto mu = mu_of(fixtures::matrix_2x2());
    EXPECT_TRUE(eq(partial_compose(mu, identity_map(4), 0), mu));
}

TEST(ModuleOps, AddScaleEq)
{
    Prng rng(1);
    const auto f = random_multimap(2, 2, rng, 3);
    EXPECT_EQ(add(f, MultiMap::zero(2, 2)), f);
    EXPECT_EQ(scale(Rational(1), f), f);
    EXPECT_EQ(scale(Rational(0), f), MultiMap::zero(2, 2));
    EXPECT_EQ(f - f, MultiMap::zero(2, 2));
    EXPECT_THROW(add(f, MultiMap(1, 2)), ArityMismatch);
    EXPECT_THROW((void)eq(f, MultiMap(2, 3)), DimMismatch);
}

TEST(NegativeDegree, IsTheZeroModule)
{
    MultiMap z(-1, 2);
    EXPECT_EQ(z.size(), 0u);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.reduced_degree(), -2);
}

TEST(BasisIndex, Bijection)
{
    EXPECT_EQ(basis_index(0, 2, {1, {}}), 1u);
    EXPECT_EQ(basis_tuple(0, 2, 0), (BasisTuple{0, {}}));
    EXPECT_EQ(MultiMap(2, 2).size(), 8u);
    for (int n = 0; n <= 3; ++n)
        for (std::size_t d = 1; d <= 3; ++d)
            for (std::size_t flat = 0; flat < ipow(d, n + 1); ++flat) {
                const auto t = basis_tuple(n, d, flat);
                ASSERT_EQ(basis_index(n, d, t), flat);
            }
    // output index slowest
    EXPECT_EQ(basis_index(2, 3, {1, {0, 2}}), 9u + 2u);
    EXPECT_THROW(basis_tuple(1, 2, 4), IndexOutOfRange);
    EXPECT_THROW(basis_index(1, 2, {0, {2}}), IndexOutOfRange);
}

TEST(RandomMultimap, DeterministicAndBounded)
{
    Prng a(77), b(77);
    EXPECT_EQ(random_multimap(3, 2, a, 3), random_multimap(3, 2, b, 3));
    Prng c(1);
    const auto f = random_multimap(3, 3, c, 1);
    for (const auto& x : f.coeffs()) EXPECT_TRUE(x == Rational(-1) || x == Rational(0) || x == Rational(1));
    EXPECT_THROW(random_multimap(1, 2, c, 0), InvalidArgument);
}
