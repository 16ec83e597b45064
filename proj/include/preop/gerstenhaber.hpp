#ifndef PREOP_GERSTENHABER_HPP
#define PREOP_GERSTENHABER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "identities.hpp"
#include "prng.hpp"

namespace preop {

struct StructureCheck {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::string failure;
};

// A basis class of H, addressed as (degree, index).
struct ClassRef {
    int degree;
    std::size_t index;
};

struct ProductEntry {
    ClassRef left;
    ClassRef right;
    CohomologyClass result;
};

struct GerstenhaberTables {
    std::vector<ProductEntry> cup;
    std::vector<ProductEntry> bracket;
    std::vector<StructureCheck> checks;

    [[nodiscard]] bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline std::string describe(const std::vector<ClassRef>& refs)
{
    std::string s;
    for (const auto& r : refs) {
        if (!s.empty()) s += ", ";
        s += "H" + std::to_string(r.degree) + "[" + std::to_string(r.index) + "]";
    }
    return s;
}

inline void record(StructureCheck& chk, bool ok, const std::vector<ClassRef>& refs)
{
    ++chk.checked;
    if (!ok && chk.passed) {
        chk.passed = false;
        chk.failure = "violated on " + describe(refs);
    }
}

} // namespace detail

/*
 * Induced cup and bracket on all basis classes of H^0..H^N, plus the
 * Gerstenhaber algebra axioms on every basis tuple whose intermediate and
 * final degrees stay within 0..N. Signs follow the printed conventions:
 * commutativity uses full degrees, antisymmetry/Jacobi/Leibniz reduced ones.
 */
inline GerstenhaberTables analyze_gerstenhaber(const CochainComplex& cx)
{
    const int top = cx.max_degree();
    std::vector<ClassRef> refs;
    for (int n = 0; n <= top; ++n)
        for (std::size_t i = 0; i < cx.cohomology_dim(n); ++i) refs.push_back({n, i});

    auto cls = [&](const ClassRef& r) -> const CohomologyClass& { return cx.cohomology_basis(r.degree)[r.index]; };
    auto fits = [&](int deg) { return deg <= top; };
    auto sgn = [](long long e) { return Rational(sign_pow(e)); };
    auto cupc = [&](const CohomologyClass& a, const CohomologyClass& b) { return induced_cup(cx, a, b); };
    auto brk = [&](const CohomologyClass& a, const CohomologyClass& b) { return induced_bracket(cx, a, b); };

    GerstenhaberTables out;
    StructureCheck degrees{"degree-bookkeeping", true, 0, {}}, assoc{"cup-associativity", true, 0, {}},
        comm{"cup-graded-commutativity", true, 0, {}}, anti{"bracket-antisymmetry", true, 0, {}}, jacobi{"bracket-jacobi", true, 0, {}},
        leibniz{"leibniz", true, 0, {}};

    for (const auto& a : refs)
        for (const auto& b : refs) {
            const int p = a.degree, q = b.degree;
            if (fits(p + q)) {
                auto r = cupc(cls(a), cls(b));
                detail::record(degrees, r.degree == p + q, {a, b});
                // a u b = (-1)^{pq} b u a
                detail::record(comm, r == sgn(1LL * p * q) * cupc(cls(b), cls(a)), {a, b});
                out.cup.push_back({a, b, std::move(r)});
            }
            if (fits(p + q - 1)) {
                auto r = brk(cls(a), cls(b));
                detail::record(degrees, r.degree == p + q - 1, {a, b});
                // [a, b] = -(-1)^{|a||b|} [b, a]
                detail::record(anti, r == sgn(1LL * (p - 1) * (q - 1) + 1) * brk(cls(b), cls(a)), {a, b});
                out.bracket.push_back({a, b, std::move(r)});
            }
        }

    for (const auto& a : refs)
        for (const auto& b : refs)
            for (const auto& c : refs) {
                const int p = a.degree, q = b.degree, s = c.degree;
                const auto &x = cls(a), &y = cls(b), &z = cls(c);
                if (fits(p + q + s)) detail::record(assoc, cupc(cupc(x, y), z) == cupc(x, cupc(y, z)), {a, b, c});

                if (fits(p + q - 1) && fits(q + s - 1) && fits(s + p - 1) && fits(p + q + s - 2)) {
                    const long long rp = p - 1, rq = q - 1, rs = s - 1;
                    auto sum = sgn(rp * rs) * brk(brk(x, y), z) + sgn(rq * rp) * brk(brk(y, z), x) +
                               sgn(rs * rq) * brk(brk(z, x), y);
                    detail::record(jacobi, sum.is_zero(), {a, b, c});
                }

                // [h, f u g] = [h, f] u g + (-1)^{|h| f} f u [h, g] with h = a, f = b, g = c
                if (fits(q + s) && fits(p + q - 1) && fits(p + s - 1) && fits(p + q + s - 1)) {
                    const auto lhs = brk(x, cupc(y, z));
                    const auto rhs = cupc(brk(x, y), z) + sgn(1LL * (p - 1) * q) * cupc(y, brk(x, z));
                    detail::record(leibniz, lhs == rhs, {a, b, c});
                }
            }

    out.checks = {degrees, assoc, comm, anti, jacobi, leibniz};
    return out;
}

/*
 * Induced products must not depend on representatives: add random
 * coboundaries delta(w) to each representative and compare the projected
 * product classes coordinate by coordinate.
 */
inline StructureCheck check_well_defined(const CochainComplex& cx, std::uint64_t seed, int perturbations = 5,
                                         std::int64_t bound = 3)
{
    StructureCheck chk{"well-definedness", true, 0, {}};
    const int top = cx.max_degree();
    const auto& ctx = cx.context();
    Prng rng(derive_seed(seed, stream_id("well-defined")));

    auto perturb = [&](const CohomologyClass& c) {
        MultiMap z = c.representative;
        if (c.degree >= 1)
            for (int t = 0; t < perturbations; ++t) z += delta(ctx, random_multimap(c.degree - 1, ctx.dim(), rng, bound));
        return z;
    };

    for (int p = 0; p <= top; ++p)
        for (int q = 0; q <= top; ++q)
            for (std::size_t i = 0; i < cx.cohomology_dim(p); ++i)
                for (std::size_t j = 0; j < cx.cohomology_dim(q); ++j) {
                    const auto& a = cx.cohomology_basis(p)[i];
                    const auto& b = cx.cohomology_basis(q)[j];
                    const std::vector<ClassRef> refs{{p, i}, {q, j}};
                    for (int t = 0; t < perturbations; ++t) {
                        const MultiMap za = perturb(a), zb = perturb(b);
                        // the perturbed representative still lies in the same class
                        detail::record(chk, cx.project_to_class(za) == a, refs);
                        if (p + q <= top)
                            detail::record(chk, cx.project_to_class(cup(ctx, za, zb)) == induced_cup(cx, a, b), refs);
                        if (p + q - 1 <= top)
                            detail::record(chk, cx.project_to_class(commutator(za, zb)) == induced_bracket(cx, a, b),
                                           refs);
                    }
                }
    return chk;
}

} // namespace preop

#endif // PREOP_GERSTENHABER_HPP
