#ifndef PREOP_OPERATIONS_HPP
#define PREOP_OPERATIONS_HPP

#include <utility>

#include "algebra.hpp"
#include "multimap.hpp"

namespace preop {

// The fixed element mu of C^2 together with the unit of C^1.
class OperadContext {
public:
    explicit OperadContext(const AlgebraDef& alg) : OperadContext(alg, mu_of(alg)) {}
    OperadContext(AlgebraDef alg, MultiMap mu) : alg_(std::move(alg)), mu_(std::move(mu)), unit_(identity_map(alg_.dim()))
    {
        if (mu_.arity() != 2) throw ArityMismatch("mu must have arity 2");
        if (mu_.dim() != alg_.dim()) throw DimMismatch("mu dimension differs from algebra");
    }

    [[nodiscard]] const AlgebraDef& algebra() const { return alg_; }
    [[nodiscard]] const MultiMap& mu() const { return mu_; }
    [[nodiscard]] const MultiMap& unit() const { return unit_; }
    [[nodiscard]] std::size_t dim() const { return alg_.dim(); }

    void check(const MultiMap& f) const
    {
        if (f.dim() != dim()) throw DimMismatch("operand dimension differs from context");
    }

private:
    AlgebraDef alg_;
    MultiMap mu_;
    MultiMap unit_;
};

namespace detail {

inline void same_dim(const MultiMap& a, const MultiMap& b)
{
    if (a.dim() != b.dim()) throw DimMismatch("operands have different dimensions");
}

inline long long rdeg(const MultiMap& f) { return f.reduced_degree(); }
inline long long deg(const MultiMap& f) { return f.degree(); }

} // namespace detail

// f . g = sum_{i=0}^{|f|} f o_i g, of degree f + |g|.
inline MultiMap total_compose(const MultiMap& f, const MultiMap& g)
{
    detail::same_dim(f, g);
    MultiMap out(f.arity() + g.arity() - 1, f.dim());
    for (int i = 0; i < f.arity(); ++i)
        detail::accumulate_insert(out, f, g, i, Rational(sign_pow(i * detail::rdeg(g))));
    return out;
}

// f u g = (-1)^f (mu o_0 f) o_f g, of degree f + g.
inline MultiMap cup(const OperadContext& ctx, const MultiMap& f, const MultiMap& g)
{
    ctx.check(f);
    ctx.check(g);
    MultiMap out(f.arity() + g.arity(), f.dim());
    if (f.arity() < 0 || g.arity() < 0) return out;
    const MultiMap left = partial_compose(ctx.mu(), f, 0);
    const long long e = detail::deg(f) + detail::deg(f) * detail::rdeg(g);
    detail::accumulate_insert(out, left, g, f.arity(), Rational(sign_pow(e)));
    return out;
}

// {h, f, g} = sum_{i=0}^{|h|-1} sum_{j=i+f}^{|f|+|h|} (h o_i f) o_j g.
inline MultiMap braces3(const MultiMap& h, const MultiMap& f, const MultiMap& g)
{
    detail::same_dim(h, f);
    detail::same_dim(h, g);
    MultiMap out(h.arity() + f.arity() + g.arity() - 2, h.dim());
    if (f.arity() < 0 || g.arity() < 0) return out;
    const int hr = h.reduced_degree();
    const int fr = f.reduced_degree();
    for (int i = 0; i <= hr - 1; ++i) {
        const MultiMap hf = partial_compose(h, f, i);
        for (int j = i + f.arity(); j <= fr + hr; ++j)
            detail::accumulate_insert(out, hf, g, j, Rational(sign_pow(j * detail::rdeg(g))));
    }
    return out;
}

// Triple sum of ((h o_i f) o_j g) o_k b over
// 0 <= i <= |h|-2, i+f <= j <= |h|+|f|-1, j+g <= k <= |h|+|f|+|g|.
inline MultiMap braces4(const MultiMap& h, const MultiMap& f, const MultiMap& g, const MultiMap& b)
{
    detail::same_dim(h, f);
    detail::same_dim(h, g);
    detail::same_dim(h, b);
    MultiMap out(h.arity() + f.arity() + g.arity() + b.arity() - 3, h.dim());
    if (f.arity() < 0 || g.arity() < 0 || b.arity() < 0) return out;
    const int hr = h.reduced_degree();
    const int fr = f.reduced_degree();
    const int gr = g.reduced_degree();
    for (int i = 0; i <= hr - 2; ++i) {
        const MultiMap hf = partial_compose(h, f, i);
        for (int j = i + f.arity(); j <= hr + fr - 1; ++j) {
            const MultiMap hfg = partial_compose(hf, g, j);
            for (int k = j + g.arity(); k <= hr + fr + gr; ++k)
                detail::accumulate_insert(out, hfg, b, k, Rational(sign_pow(k * detail::rdeg(b))));
        }
    }
    return out;
}

// The formal associator mu . mu.
inline MultiMap mu_squared(const OperadContext& ctx) { return total_compose(ctx.mu(), ctx.mu()); }

// (h, f, g) = (h . f) . g - h . (f . g)
inline MultiMap getzler_associator(const MultiMap& h, const MultiMap& f, const MultiMap& g)
{
    return total_compose(total_compose(h, f), g) - total_compose(h, total_compose(f, g));
}

// [f, g] = f . g - (-1)^{|f||g|} g . f
inline MultiMap commutator(const MultiMap& f, const MultiMap& g)
{
    MultiMap out = total_compose(f, g);
    out.add_scaled(Rational(-sign_pow(detail::rdeg(f) * detail::rdeg(g))), total_compose(g, f));
    return out;
}

// Coboundary with respect to an arbitrary element c: -delta_c f = [f, c].
inline MultiMap delta_wrt(const MultiMap& c, const MultiMap& f) { return -commutator(f, c); }

// Pre-coboundary operator, -delta f = [f, mu]; raises degree by one.
inline MultiMap delta(const OperadContext& ctx, const MultiMap& f)
{
    ctx.check(f);
    return delta_wrt(ctx.mu(), f);
}

// Second displayed form: -delta f = f u I + f . mu + (-1)^{|f|} I u f.
inline MultiMap delta_via_cup(const OperadContext& ctx, const MultiMap& f)
{
    MultiMap s = cup(ctx, f, ctx.unit());
    s += total_compose(f, ctx.mu());
    s.add_scaled(Rational(sign_pow(detail::rdeg(f))), cup(ctx, ctx.unit(), f));
    return s.negate();
}

// delta(f . g) - f . delta g - (-1)^{|g|} delta f . g
inline MultiMap dev_total(const OperadContext& ctx, const MultiMap& f, const MultiMap& g)
{
    MultiMap out = delta(ctx, total_compose(f, g));
    out -= total_compose(f, delta(ctx, g));
    out.add_scaled(Rational(-sign_pow(detail::rdeg(g))), total_compose(delta(ctx, f), g));
    return out;
}

// delta{h,f,g} - {h,f,delta g} - (-1)^{|g|}{h,delta f,g} - (-1)^{|g|+|f|}{delta h,f,g}
inline MultiMap dev_braces(const OperadContext& ctx, const MultiMap& h, const MultiMap& f, const MultiMap& g)
{
    MultiMap out = delta(ctx, braces3(h, f, g));
    out -= braces3(h, f, delta(ctx, g));
    out.add_scaled(Rational(-sign_pow(detail::rdeg(g))), braces3(h, delta(ctx, f), g));
    out.add_scaled(Rational(-sign_pow(detail::rdeg(g) + detail::rdeg(f))), braces3(delta(ctx, h), f, g));
    return out;
}

// delta(f u g) - f u delta g - (-1)^g delta f u g
inline MultiMap dev_cup(const OperadContext& ctx, const MultiMap& f, const MultiMap& g)
{
    MultiMap out = delta(ctx, cup(ctx, f, g));
    out -= cup(ctx, f, delta(ctx, g));
    out.add_scaled(Rational(-sign_pow(detail::deg(g))), cup(ctx, delta(ctx, f), g));
    return out;
}

// (delta_mu delta_mu f, -delta_{mu^2} f); the two must agree.
inline std::pair<MultiMap, MultiMap> delta_squared_check(const OperadContext& ctx, const MultiMap& f)
{
    MultiMap dd = delta(ctx, delta(ctx, f));
    MultiMap rhs = delta_wrt(mu_squared(ctx), f).negate();
    return {std::move(dd), std::move(rhs)};
}

} // namespace preop

#endif // PREOP_OPERATIONS_HPP
