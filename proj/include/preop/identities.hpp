#ifndef PREOP_IDENTITIES_HPP
#define PREOP_IDENTITIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multimap.hpp"
#include "operations.hpp"
#include "prng.hpp"

namespace preop {

// One side-by-side comparison produced by an identity on a sample.
struct Comparison {
    std::string where;
    MultiMap lhs;
    MultiMap rhs;
};

using IdentityFn = std::function<std::vector<Comparison>(const OperadContext&, std::span<const MultiMap>)>;

struct Identity {
    std::string name;
    // Identities sharing a stream see identical random operands.
    std::string stream;
    int operands;
    IdentityFn check;
};

namespace detail {

inline std::vector<Comparison> single(MultiMap lhs, MultiMap rhs)
{
    std::vector<Comparison> v;
    v.push_back({"", std::move(lhs), std::move(rhs)});
    return v;
}

inline std::string at(int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }

} // namespace detail

struct SignedComposition {
    MultiMap operator()(const MultiMap& f, const MultiMap& g, int i) const { return partial_compose(f, g, i); }
};

// Composition relations, one comparison per admissible (i, j). The
// composition is a parameter so the relation checkers can be exercised
// against deliberately wrong compositions.

// 0 <= j <= i-1: (h o_i f) o_j g = (-1)^{|f||g|} (h o_j g) o_{i+|g|} f
template <class Compose = SignedComposition>
std::vector<Comparison> composition_case_a(const MultiMap& h, const MultiMap& f, const MultiMap& g, Compose o = {})
{
    std::vector<Comparison> out;
    const Rational s = sign_pow(static_cast<long long>(f.reduced_degree()) * g.reduced_degree());
    for (int i = 0; i < h.arity(); ++i)
        for (int j = 0; j <= i - 1; ++j)
            out.push_back({detail::at(i, j), o(o(h, f, i), g, j), s * o(o(h, g, j), f, i + g.reduced_degree())});
    return out;
}

// i <= j <= i+|f|: (h o_i f) o_j g = h o_i (f o_{j-i} g)
template <class Compose = SignedComposition>
std::vector<Comparison> composition_case_b(const MultiMap& h, const MultiMap& f, const MultiMap& g, Compose o = {})
{
    std::vector<Comparison> out;
    for (int i = 0; i < h.arity(); ++i)
        for (int j = i; j <= i + f.reduced_degree(); ++j)
            out.push_back({detail::at(i, j), o(o(h, f, i), g, j), o(h, o(f, g, j - i), i)});
    return out;
}

// i+f <= j <= |h|+|f|: (h o_i f) o_j g = (-1)^{|f||g|} (h o_{j-|f|} g) o_i f
template <class Compose = SignedComposition>
std::vector<Comparison> composition_case_c(const MultiMap& h, const MultiMap& f, const MultiMap& g, Compose o = {})
{
    std::vector<Comparison> out;
    const Rational s = sign_pow(static_cast<long long>(f.reduced_degree()) * g.reduced_degree());
    for (int i = 0; i < h.arity(); ++i)
        for (int j = i + f.arity(); j <= h.reduced_degree() + f.reduced_degree(); ++j)
            out.push_back({detail::at(i, j), o(o(h, f, i), g, j), s * o(o(h, g, j - f.reduced_degree()), f, i)});
    return out;
}

// I o_0 f = f and f o_i I = f for 0 <= i <= |f|.
inline std::vector<Comparison> unit_axioms(const OperadContext& ctx, const MultiMap& f)
{
    std::vector<Comparison> out;
    out.push_back({"I o_0 f", partial_compose(ctx.unit(), f, 0), f});
    for (int i = 0; i < f.arity(); ++i) out.push_back({"f o_" + std::to_string(i) + " I", partial_compose(f, ctx.unit(), i), f});
    return out;
}

inline std::vector<Identity> axiom_catalog()
{
    using S = std::span<const MultiMap>;
    return {
        {"composition-a", "composition", 3, [](const OperadContext&, S x) { return composition_case_a(x[0], x[1], x[2]); }},
        {"composition-b", "composition", 3, [](const OperadContext&, S x) { return composition_case_b(x[0], x[1], x[2]); }},
        {"composition-c", "composition", 3, [](const OperadContext&, S x) { return composition_case_c(x[0], x[1], x[2]); }},
        {"unit", "unit", 1, [](const OperadContext& c, S x) { return unit_axioms(c, x[0]); }},
    };
}

// Every identity relating the derived operations; lhs == rhs exactly.
inline std::vector<Identity> identity_catalog()
{
    using S = std::span<const MultiMap>;
    using detail::single;
    auto sgn = [](long long e) { return Rational(sign_pow(e)); };
    auto r = [](const MultiMap& f) -> long long { return f.reduced_degree(); };
    auto d = [](const MultiMap& f) -> long long { return f.degree(); };

    std::vector<Identity> cat = axiom_catalog();
    std::vector<Identity> more = {
        {"getzler", "getzler", 3,
         [=](const OperadContext&, S x) {
             const auto &h = x[0], &f = x[1], &g = x[2];
             MultiMap rhs = braces3(h, f, g);
             rhs.add_scaled(sgn(r(f) * r(g)), braces3(h, g, f));
             return single(getzler_associator(h, f, g), std::move(rhs));
         }},
        {"gerstenhaber-symmetry", "getzler", 3,
         [=](const OperadContext&, S x) {
             const auto &h = x[0], &f = x[1], &g = x[2];
             return single(getzler_associator(h, f, g), sgn(r(f) * r(g)) * getzler_associator(h, g, f));
         }},
        {"graded-antisymmetry", "graded-antisymmetry", 2,
         [=](const OperadContext&, S x) {
             const auto &f = x[0], &g = x[1];
             return single(commutator(f, g), sgn(r(f) * r(g) + 1) * commutator(g, f));
         }},
        {"self-commutator", "self-commutator", 1,
         [=](const OperadContext&, S x) {
             const auto& f = x[0];
             return single(commutator(f, f), (Rational(1) - sgn(r(f) * r(f))) * total_compose(f, f));
         }},
        {"jacobi", "jacobi", 3,
         [=](const OperadContext&, S x) {
             const auto &f = x[0], &g = x[1], &h = x[2];
             MultiMap lhs = sgn(r(f) * r(h)) * commutator(commutator(f, g), h);
             lhs.add_scaled(sgn(r(g) * r(f)), commutator(commutator(g, h), f));
             lhs.add_scaled(sgn(r(h) * r(g)), commutator(commutator(h, f), g));
             MultiMap zero(lhs.arity(), lhs.dim());
             return single(std::move(lhs), std::move(zero));
         }},
        {"cup-via-tribraces", "cup-via-tribraces", 2,
         [=](const OperadContext& c, S x) {
             const auto &f = x[0], &g = x[1];
             return single(cup(c, f, g), sgn(d(f)) * braces3(c.mu(), f, g));
         }},
        {"cup-associator", "cup-associator", 3,
         [=](const OperadContext& c, S x) {
             const auto &f = x[0], &g = x[1], &h = x[2];
             return single(cup(c, cup(c, f, g), h) - cup(c, f, cup(c, g, h)), braces4(mu_squared(c), f, g, h));
         }},
        // The unsigned form above only holds when mu^2 = 0 or deg g is even;
        // in general the tetrabrace picks up (-1)^g.
        {"cup-associator-signed", "cup-associator", 3,
         [=](const OperadContext& c, S x) {
             const auto &f = x[0], &g = x[1], &h = x[2];
             return single(cup(c, cup(c, f, g), h) - cup(c, f, cup(c, g, h)),
                           sgn(d(g)) * braces4(mu_squared(c), f, g, h));
         }},
        {"delta-alternate-form", "delta", 1,
         [=](const OperadContext& c, S x) { return single(delta(c, x[0]), delta_via_cup(c, x[0])); }},
        {"delta-squared", "delta", 1,
         [=](const OperadContext& c, S x) {
             auto [lhs, rhs] = delta_squared_check(c, x[0]);
             return single(std::move(lhs), std::move(rhs));
         }},
        {"delta-commutator-derivation", "delta-pair", 2,
         [=](const OperadContext& c, S x) {
             const auto &f = x[0], &g = x[1];
             MultiMap rhs = commutator(f, delta(c, g));
             rhs.add_scaled(sgn(r(g)), commutator(delta(c, f), g));
             return single(delta(c, commutator(f, g)), std::move(rhs));
         }},
        {"cup-deviation", "delta-pair", 2,
         [=](const OperadContext& c, S x) {
             const auto &f = x[0], &g = x[1];
             return single(dev_cup(c, f, g), sgn(r(g)) * braces3(mu_squared(c), f, g));
         }},
        {"total-deviation", "delta-pair", 2,
         [=](const OperadContext& c, S x) {
             const auto &f = x[0], &g = x[1];
             MultiMap rhs = cup(c, f, g);
             rhs.add_scaled(-sgn(d(f) * d(g)), cup(c, g, f));
             return single(sgn(r(g)) * dev_total(c, f, g), std::move(rhs));
         }},
        {"brace-deviation-total", "delta-triple", 3,
         [=](const OperadContext& c, S x) {
             const auto &h = x[0], &f = x[1], &g = x[2];
             MultiMap rhs = cup(c, total_compose(h, f), g);
             rhs.add_scaled(sgn(r(h) * d(f)), cup(c, f, total_compose(h, g)));
             rhs -= total_compose(h, cup(c, f, g));
             return single(sgn(r(g)) * dev_braces(c, h, f, g), std::move(rhs));
         }},
        {"brace-deviation-bracket", "delta-triple", 3,
         [=](const OperadContext& c, S x) {
             const auto &h = x[0], &f = x[1], &g = x[2];
             MultiMap rhs = cup(c, commutator(h, f), g);
             rhs.add_scaled(sgn(r(h) * d(f)), cup(c, f, commutator(h, g)));
             rhs -= commutator(h, cup(c, f, g));
             return single(sgn(r(g)) * dev_braces(c, h, f, g), std::move(rhs));
         }},
        {"right-translation", "right-translation", 3,
         [=](const OperadContext& c, S x) {
             const auto &f = x[0], &g = x[1], &h = x[2];
             MultiMap rhs = cup(c, f, total_compose(g, h));
             rhs.add_scaled(sgn(r(h) * d(g)), cup(c, total_compose(f, h), g));
             return single(total_compose(cup(c, f, g), h), std::move(rhs));
         }},
    };
    for (auto& i : more) cat.push_back(std::move(i));
    return cat;
}

inline std::optional<Identity> find_identity(std::string_view name)
{
    for (auto& i : identity_catalog())
        if (i.name == name) return i;
    return std::nullopt;
}

struct SampleConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 200;
    int max_arity = 3;
    std::int64_t bound = 3;
};

// A failing sample with everything needed to replay it.
struct Counterexample {
    std::size_t sample = 0;
    std::uint64_t sample_seed = 0;
    std::string where;
    std::vector<MultiMap> inputs;
    MultiMap lhs;
    MultiMap rhs;
};

struct Verdict {
    std::string name;
    bool passed = true;
    std::size_t samples = 0;
    std::size_t comparisons = 0;
    // comparisons whose sides were nonzero; shows the check was not vacuous
    std::size_t nonzero = 0;
    std::optional<Counterexample> counterexample;
};

inline std::uint64_t stream_id(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t sample_seed(const SampleConfig& cfg, std::string_view stream, std::size_t sample)
{
    return derive_seed(cfg.seed, stream_id(stream), sample);
}

// Operands for one sample: arities uniform on [0, max_arity], then tables.
inline std::vector<MultiMap> draw_operands(std::size_t dim, int count, std::uint64_t seed, int max_arity, std::int64_t bound)
{
    Prng rng(seed);
    std::vector<int> arities;
    for (int t = 0; t < count; ++t) arities.push_back(static_cast<int>(rng.between(0, max_arity)));
    std::vector<MultiMap> ops;
    for (int a : arities) ops.push_back(random_multimap(a, dim, rng, bound));
    return ops;
}

inline Verdict run_identity(const OperadContext& ctx, const Identity& id, const SampleConfig& cfg)
{
    Verdict v;
    v.name = id.name;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        const std::uint64_t seed = sample_seed(cfg, id.stream, s);
        const auto ops = draw_operands(ctx.dim(), id.operands, seed, cfg.max_arity, cfg.bound);
        ++v.samples;
        for (auto& cmp : id.check(ctx, ops)) {
            ++v.comparisons;
            const bool same = cmp.lhs.arity() == cmp.rhs.arity() && cmp.lhs == cmp.rhs;
            if (!cmp.lhs.is_zero() || !cmp.rhs.is_zero()) ++v.nonzero;
            if (!same) {
                v.passed = false;
                v.counterexample = Counterexample{s, seed, cmp.where, ops, std::move(cmp.lhs), std::move(cmp.rhs)};
                return v;
            }
        }
    }
    return v;
}

// Random (generally non-associative) multiplication for exercising mu^2 != 0.
inline MultiMap random_mu(std::size_t dim, std::uint64_t seed, std::int64_t bound = 3)
{
    Prng rng(derive_seed(seed, stream_id("mu")));
    return random_multimap(2, dim, rng, bound);
}

} // namespace preop

#endif // PREOP_IDENTITIES_HPP
