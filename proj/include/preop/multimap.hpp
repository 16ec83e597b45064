#ifndef PREOP_MULTIMAP_HPP
#define PREOP_MULTIMAP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "prng.hpp"
#include "rational.hpp"

namespace preop {

// (-1)^e for any signed exponent; only the parity of e matters.
constexpr int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::size_t ipow(std::size_t base, int exp)
{
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > SIZE_MAX / base) throw MatrixTooLarge("coefficient table size overflows");
        r *= base;
    }
    return r;
}

/*
 * An element of C^n = Hom(A^{(x)n}, A) as a dense coefficient table.
 *
 * Entry (k; i1..in) is the e_k coordinate of f(e_i1, ..., e_in). The flat
 * index is lexicographic with the output index slowest:
 *     flat = k d^n + i1 d^(n-1) + ... + in,
 * so the table has d^(n+1) entries.
 *
 * Negative arities denote the zero module C^n = 0 (n < 0). They arise as
 * degrees of empty sums such as a . b for two arity-0 elements and carry an
 * empty table.
 */
class MultiMap {
public:
    MultiMap(int arity, std::size_t dim) : arity_(arity), dim_(dim)
    {
        if (dim == 0) throw DimMismatch("dimension must be at least 1");
        if (arity >= 0) coeffs_.resize(ipow(dim, arity + 1));
    }

    static MultiMap zero(int arity, std::size_t dim) { return MultiMap(arity, dim); }

    [[nodiscard]] int arity() const { return arity_; }
    [[nodiscard]] int degree() const { return arity_; }
    [[nodiscard]] int reduced_degree() const { return arity_ - 1; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
    [[nodiscard]] std::span<Rational> coeffs() { return coeffs_; }
    Rational& operator[](std::size_t flat) { return coeffs_[flat]; }
    const Rational& operator[](std::size_t flat) const { return coeffs_[flat]; }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x.is_zero(); });
    }

    MultiMap& operator+=(const MultiMap& o)
    {
        check_same_shape(o);
        for (std::size_t t = 0; t < coeffs_.size(); ++t)
            if (!o.coeffs_[t].is_zero()) coeffs_[t] += o.coeffs_[t];
        return *this;
    }
    MultiMap& operator-=(const MultiMap& o)
    {
        check_same_shape(o);
        for (std::size_t t = 0; t < coeffs_.size(); ++t)
            if (!o.coeffs_[t].is_zero()) coeffs_[t] -= o.coeffs_[t];
        return *this;
    }
    MultiMap& operator*=(const Rational& c)
    {
        for (auto& x : coeffs_)
            if (!x.is_zero()) x *= c;
        return *this;
    }
    MultiMap& negate()
    {
        for (auto& x : coeffs_)
            if (!x.is_zero()) x = -x;
        return *this;
    }
    // *this += c * o
    void add_scaled(const Rational& c, const MultiMap& o)
    {
        check_same_shape(o);
        if (c.is_zero()) return;
        for (std::size_t t = 0; t < coeffs_.size(); ++t)
            if (!o.coeffs_[t].is_zero()) coeffs_[t].add_product(c, o.coeffs_[t]);
    }

    friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
    friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
    friend MultiMap operator-(MultiMap a) { return a.negate(); }
    friend MultiMap operator*(const Rational& c, MultiMap f) { return f *= c; }

    // Exact componentwise equality; shapes must agree.
    friend bool operator==(const MultiMap& a, const MultiMap& b)
    {
        a.check_same_shape(b);
        return a.coeffs_ == b.coeffs_;
    }

    void check_same_shape(const MultiMap& o) const
    {
        if (dim_ != o.dim_) throw DimMismatch("multimap dimensions differ");
        if (arity_ != o.arity_)
            throw ArityMismatch("arity " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
    }

private:
    int arity_;
    std::size_t dim_;
    std::vector<Rational> coeffs_;
};

inline MultiMap add(const MultiMap& f, const MultiMap& g) { return f + g; }
inline MultiMap scale(const Rational& c, const MultiMap& f) { return c * f; }
inline bool eq(const MultiMap& f, const MultiMap& g) { return f == g; }

// Canonical basis of C^n: tuple (output; inputs...) <-> flat index.
struct BasisTuple {
    std::size_t output = 0;
    std::vector<std::size_t> inputs;
    friend bool operator==(const BasisTuple&, const BasisTuple&) = default;
};

inline std::size_t basis_index(int n, std::size_t d, const BasisTuple& t)
{
    if (n < 0 || t.inputs.size() != static_cast<std::size_t>(n)) throw ArityMismatch("tuple length differs from arity");
    std::size_t flat = t.output;
    if (t.output >= d) throw IndexOutOfRange("output index out of range");
    for (auto i : t.inputs) {
        if (i >= d) throw IndexOutOfRange("input index out of range");
        flat = flat * d + i;
    }
    return flat;
}

inline BasisTuple basis_tuple(int n, std::size_t d, std::size_t flat)
{
    if (n < 0) throw ArityMismatch("negative arity has no basis");
    if (flat >= ipow(d, n + 1)) throw IndexOutOfRange("flat index out of range");
    BasisTuple t;
    t.inputs.resize(static_cast<std::size_t>(n));
    for (int s = n - 1; s >= 0; --s) {
        t.inputs[static_cast<std::size_t>(s)] = flat % d;
        flat /= d;
    }
    t.output = flat;
    return t;
}

inline MultiMap basis_cochain(int n, std::size_t d, std::size_t flat)
{
    MultiMap f(n, d);
    if (flat >= f.size()) throw IndexOutOfRange("flat index out of range");
    f[flat] = 1;
    return f;
}

inline MultiMap identity_map(std::size_t d)
{
    MultiMap f(1, d);
    for (std::size_t i = 0; i < d; ++i) f[i * d + i] = 1;
    return f;
}

// The algebra multiplication as an element of C^2.
inline MultiMap mu_of(const AlgebraDef& alg)
{
    const std::size_t d = alg.dim();
    MultiMap mu(2, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) mu[(k * d + i) * d + j] = alg.c(i, j, k);
    return mu;
}

// Multilinear extension of the table on coordinate vectors.
inline Vector evaluate(const MultiMap& f, std::span<const Vector> args)
{
    if (f.arity() < 0 || args.size() != static_cast<std::size_t>(f.arity()))
        throw ArityMismatch("expected " + std::to_string(f.arity()) + " arguments, got " + std::to_string(args.size()));
    const std::size_t d = f.dim();
    for (const auto& a : args)
        if (a.size() != d) throw DimMismatch("argument dimension mismatch");
    const std::size_t block = ipow(d, f.arity());
    Vector out(d);
    for (std::size_t in = 0; in < block; ++in) {
        // product of argument coordinates for this input tuple
        Rational w = 1;
        std::size_t rest = in;
        for (std::size_t s = args.size(); s-- > 0;) {
            const Rational& x = args[s][rest % d];
            rest /= d;
            if (x.is_zero()) {
                w = 0;
                break;
            }
            w *= x;
        }
        if (w.is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k)
            if (!f[k * block + in].is_zero()) out[k].add_product(w, f[k * block + in]);
    }
    return out;
}

inline Vector evaluate(const MultiMap& f, std::span<const std::size_t> basis_args)
{
    if (f.arity() < 0 || basis_args.size() != static_cast<std::size_t>(f.arity()))
        throw ArityMismatch("expected " + std::to_string(f.arity()) + " arguments, got " + std::to_string(basis_args.size()));
    const std::size_t d = f.dim();
    std::size_t in = 0;
    for (auto i : basis_args) {
        if (i >= d) throw DimMismatch("basis index out of range");
        in = in * d + i;
    }
    const std::size_t block = ipow(d, f.arity());
    Vector out(d);
    for (std::size_t k = 0; k < d; ++k) out[k] = f[k * block + in];
    return out;
}

namespace detail {

inline void check_insert(const MultiMap& f, const MultiMap& g, int i)
{
    if (f.dim() != g.dim()) throw DimMismatch("operands have different dimensions");
    if (i < 0 || i >= f.arity())
        throw IndexOutOfRange("slot " + std::to_string(i) + " outside 0.." + std::to_string(f.arity() - 1));
}

// out += coeff * f o (1^i (x) g (x) 1^(m-1-i)), unsigned slot insertion.
inline void accumulate_insert(MultiMap& out, const MultiMap& f, const MultiMap& g, int i, const Rational& coeff)
{
    check_insert(f, g, i);
    const int m = f.arity();
    const int p = g.arity();
    if (out.arity() != m + p - 1 || out.dim() != f.dim()) throw ArityMismatch("accumulator shape mismatch");
    if (p < 0 || coeff.is_zero()) return;

    const std::size_t d = f.dim();
    const std::size_t n_prefix = ipow(d, i);
    const std::size_t n_suffix = ipow(d, m - 1 - i);
    const std::size_t n_g = ipow(d, p);
    const std::size_t f_out_stride = ipow(d, m);
    const std::size_t r_out_stride = ipow(d, m + p - 1);
    const bool unit = coeff.is_one();

    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t pre = 0; pre < n_prefix; ++pre)
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t suf = 0; suf < n_suffix; ++suf) {
                    const Rational& fv = f[k * f_out_stride + (pre * d + s) * n_suffix + suf];
                    if (fv.is_zero()) continue;
                    Rational w = fv;
                    if (!unit) w *= coeff;
                    const std::size_t g_base = s * n_g;
                    const std::size_t r_base = k * r_out_stride + pre * n_g * n_suffix + suf;
                    for (std::size_t b = 0; b < n_g; ++b) {
                        const Rational& gv = g[g_base + b];
                        if (!gv.is_zero()) out[r_base + b * n_suffix].add_product(w, gv);
                    }
                }
}

} // namespace detail

// f o (1^i (x) g (x) 1^(|f|-i)) without the Koszul sign.
inline MultiMap insert(const MultiMap& f, const MultiMap& g, int i)
{
    detail::check_insert(f, g, i);
    MultiMap out(f.arity() + g.arity() - 1, f.dim());
    detail::accumulate_insert(out, f, g, i, Rational(1));
    return out;
}

// f o_i g = (-1)^(i|g|) f o (1^i (x) g (x) 1^(|f|-i)).
inline MultiMap partial_compose(const MultiMap& f, const MultiMap& g, int i)
{
    detail::check_insert(f, g, i);
    MultiMap out(f.arity() + g.arity() - 1, f.dim());
    detail::accumulate_insert(out, f, g, i, Rational(sign_pow(static_cast<long long>(i) * g.reduced_degree())));
    return out;
}

// Integer coefficients uniform on [-bound, bound].
inline MultiMap random_multimap(int arity, std::size_t dim, Prng& rng, std::int64_t bound)
{
    if (bound < 1) throw InvalidArgument("coefficient bound must be at least 1");
    MultiMap f(arity, dim);
    for (auto& x : f.coeffs()) x = rng.between(-bound, bound);
    return f;
}

inline MultiMap random_multimap(int arity, const AlgebraDef& alg, Prng& rng, std::int64_t bound)
{
    return random_multimap(arity, alg.dim(), rng, bound);
}

} // namespace preop

#endif // PREOP_MULTIMAP_HPP
