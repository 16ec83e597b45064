#ifndef PREOP_COHOMOLOGY_HPP
#define PREOP_COHOMOLOGY_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "multimap.hpp"
#include "operations.hpp"

namespace preop {

// Refusal to build cohomology for a multiplication with mu^2 != 0.
class NotFormallyAssociative : public Error {
public:
    NotFormallyAssociative(std::array<std::size_t, 3> inputs, Vector value)
        : Error("mu^2 != 0: witness triple (" + std::to_string(inputs[0]) + ", " + std::to_string(inputs[1]) + ", " +
                std::to_string(inputs[2]) + ")"),
          inputs_(inputs), value_(std::move(value))
    {
    }
    [[nodiscard]] const std::array<std::size_t, 3>& inputs() const { return inputs_; }
    // mu^2(e_i, e_j, e_k) in coordinates.
    [[nodiscard]] const Vector& value() const { return value_; }

private:
    std::array<std::size_t, 3> inputs_;
    Vector value_;
};

// First basis triple on which mu^2 is nonzero, if any.
inline void require_formally_associative(const OperadContext& ctx)
{
    const MultiMap m2 = mu_squared(ctx);
    const std::size_t d = ctx.dim();
    for (std::size_t flat = 0; flat < m2.size(); ++flat) {
        if (m2[flat].is_zero()) continue;
        const auto t = basis_tuple(3, d, flat);
        throw NotFormallyAssociative({t.inputs[0], t.inputs[1], t.inputs[2]}, evaluate(m2, std::span<const std::size_t>(t.inputs)));
    }
}

/*
 * A class in H^n, stored as coordinates over the chosen basis of H^n
 * together with the canonical representative sum_i coords[i] * rep_i.
 *
 * Negative degrees stand for the zero module and have no coordinates.
 */
struct CohomologyClass {
    int degree = 0;
    Vector coords;
    MultiMap representative{0, 1};

    [[nodiscard]] bool is_zero() const
    {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b)
    {
        return a.degree == b.degree && a.coords == b.coords;
    }
};

inline CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b)
{
    if (a.degree != b.degree) throw ArityMismatch("adding classes of different degree");
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    a.representative += b.representative;
    return a;
}

inline CohomologyClass operator*(const Rational& c, CohomologyClass a)
{
    for (auto& x : a.coords) x *= c;
    a.representative *= c;
    return a;
}

inline CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) { return a + Rational(-1) * b; }

/*
 * The cochain complex (C^n, delta) for 0 <= n <= N, with per-degree
 * coboundary matrices, kernel and image bases and chosen cohomology
 * representatives. Requires mu^2 = 0. Immutable once built.
 */
class CochainComplex {
public:
    static constexpr int kDefaultMaxDegree = 4;
    static constexpr std::size_t kDefaultColumnCap = 65536;

    CochainComplex(OperadContext ctx, int max_degree, std::size_t column_cap = kDefaultColumnCap)
        : ctx_(std::move(ctx)), max_degree_(max_degree)
    {
        if (max_degree < 0) throw DegreeOutOfRange("max degree must be non-negative");
        require_formally_associative(ctx_);
        const std::size_t d = ctx_.dim();
        if (ipow(d, max_degree + 2) > column_cap)
            throw MatrixTooLarge(std::to_string(d) + "^" + std::to_string(max_degree + 2) + " exceeds cap " +
                                 std::to_string(column_cap));

        degrees_.resize(static_cast<std::size_t>(max_degree) + 1);
        for (int n = 0; n <= max_degree; ++n) {
            auto& deg = degrees_[static_cast<std::size_t>(n)];
            deg.coboundary = assemble(n);
            RowEchelon e(deg.coboundary);
            deg.rank = e.rank();
            deg.kernel = kernel_basis(e);
            deg.pivots = e.pivot_columns();
        }
        for (int n = 0; n + 1 <= max_degree; ++n) {
            if (!(coboundary(n + 1) * coboundary(n)).is_zero())
                throw InternalInconsistency("delta^2 != 0 at degree " + std::to_string(n));
        }
        for (int n = 0; n <= max_degree; ++n) choose_representatives(n);
    }

    [[nodiscard]] const OperadContext& context() const { return ctx_; }
    [[nodiscard]] int max_degree() const { return max_degree_; }

    // delta : C^n -> C^(n+1) in the canonical bases.
    [[nodiscard]] const Matrix& coboundary(int n) const { return at(n).coboundary; }
    [[nodiscard]] std::size_t rank(int n) const { return at(n).rank; }
    [[nodiscard]] std::size_t kernel_dim(int n) const { return at(n).kernel.size(); }
    [[nodiscard]] std::size_t image_dim(int n) const { return n == 0 ? 0 : at(n - 1).rank; }
    [[nodiscard]] const std::vector<Vector>& kernel(int n) const { return at(n).kernel; }
    // Basis of Im(C^(n-1) -> C^n): the pivot columns of the incoming matrix.
    [[nodiscard]] const std::vector<Vector>& image(int n) const { return at(n).image; }

    [[nodiscard]] std::size_t cohomology_dim(int n) const { return at(n).basis.size(); }
    [[nodiscard]] const std::vector<CohomologyClass>& cohomology_basis(int n) const { return at(n).basis; }

    [[nodiscard]] CohomologyClass zero_class(int n) const
    {
        CohomologyClass c;
        c.degree = n;
        c.representative = MultiMap(n, ctx_.dim());
        if (n >= 0) c.coords.assign(cohomology_dim(n), Rational(0));
        return c;
    }

    [[nodiscard]] bool is_cocycle(const MultiMap& z) const
    {
        if (z.arity() < 0) return true;
        const auto image = coboundary(z.arity()) * z.coeffs();
        for (const auto& x : image)
            if (!x.is_zero()) return false;
        return true;
    }

    // Class of a cocycle z: z - sum x_i rep_i lies in the image of delta.
    [[nodiscard]] CohomologyClass project_to_class(const MultiMap& z) const
    {
        if (z.dim() != ctx_.dim()) throw DimMismatch("cocycle dimension differs from complex");
        const int n = z.arity();
        if (n < 0) return zero_class(n);
        if (!is_cocycle(z)) throw NotACocycle("delta z != 0 in degree " + std::to_string(n));
        const auto& deg = at(n);
        const auto sol = solve_in_span(deg.quotient_frame, z.coeffs());
        if (!sol) throw InternalInconsistency("cocycle not in span of representatives and coboundaries");
        CohomologyClass c = zero_class(n);
        for (std::size_t i = 0; i < c.coords.size(); ++i) {
            c.coords[i] = (*sol)[i];
            c.representative.add_scaled(c.coords[i], deg.basis[i].representative);
        }
        return c;
    }

private:
    struct Degree {
        Matrix coboundary;
        std::size_t rank = 0;
        std::vector<std::size_t> pivots;
        std::vector<Vector> kernel;
        std::vector<Vector> image;
        std::vector<CohomologyClass> basis;
        // columns: representatives, then image basis
        Matrix quotient_frame;
    };

    [[nodiscard]] const Degree& at(int n) const
    {
        if (n < 0 || n > max_degree_)
            throw DegreeOutOfRange("degree " + std::to_string(n) + " outside 0.." + std::to_string(max_degree_));
        return degrees_[static_cast<std::size_t>(n)];
    }

    // Column j is delta applied to the j-th basis cochain of C^n.
    [[nodiscard]] Matrix assemble(int n) const
    {
        const std::size_t d = ctx_.dim();
        const std::size_t cols = ipow(d, n + 1);
        const std::size_t rows = ipow(d, n + 2);
        Matrix m(rows, cols);
        for (std::size_t j = 0; j < cols; ++j) {
            const MultiMap image = delta(ctx_, basis_cochain(n, d, j));
            for (std::size_t r = 0; r < rows; ++r)
                if (!image[r].is_zero()) m(r, j) = image[r];
        }
        return m;
    }

    // Representatives: kernel vectors that become pivots when appended, in
    // order, to the image basis.
    void choose_representatives(int n)
    {
        auto& deg = degrees_[static_cast<std::size_t>(n)];
        const std::size_t len = ipow(ctx_.dim(), n + 1);
        if (n > 0) {
            const auto& prev = degrees_[static_cast<std::size_t>(n - 1)];
            for (auto c : prev.pivots) deg.image.push_back(prev.coboundary.column(c));
        }
        std::vector<Vector> cols = deg.image;
        cols.insert(cols.end(), deg.kernel.begin(), deg.kernel.end());
        const RowEchelon e(Matrix::from_columns(cols, len));
        if (e.rank() != deg.kernel.size())
            throw InternalInconsistency("image not contained in kernel at degree " + std::to_string(n));

        std::vector<Vector> reps;
        for (auto c : e.pivot_columns())
            if (c >= deg.image.size()) reps.push_back(deg.kernel[c - deg.image.size()]);

        for (std::size_t i = 0; i < reps.size(); ++i) {
            CohomologyClass cls;
            cls.degree = n;
            cls.coords.assign(reps.size(), Rational(0));
            cls.coords[i] = 1;
            cls.representative = MultiMap(n, ctx_.dim());
            for (std::size_t t = 0; t < len; ++t) cls.representative[t] = reps[i][t];
            deg.basis.push_back(std::move(cls));
        }
        std::vector<Vector> frame = reps;
        frame.insert(frame.end(), deg.image.begin(), deg.image.end());
        deg.quotient_frame = Matrix::from_columns(frame, len);
    }

    OperadContext ctx_;
    int max_degree_;
    std::vector<Degree> degrees_;
};

inline CochainComplex build_complex(const OperadContext& ctx, int max_degree,
                                    std::size_t column_cap = CochainComplex::kDefaultColumnCap)
{
    return CochainComplex(ctx, max_degree, column_cap);
}

inline std::size_t cohomology_dim(const CochainComplex& cx, int n) { return cx.cohomology_dim(n); }

inline CohomologyClass project_to_class(const CochainComplex& cx, const MultiMap& z) { return cx.project_to_class(z); }

namespace detail {

inline void check_product_degree(const CochainComplex& cx, int degree)
{
    if (degree > cx.max_degree())
        throw DegreeOutOfRange("product degree " + std::to_string(degree) + " exceeds computed range 0.." +
                               std::to_string(cx.max_degree()));
}

} // namespace detail

// Induced products: operate on representatives, then project.
inline CohomologyClass induced_cup(const CochainComplex& cx, const CohomologyClass& a, const CohomologyClass& b)
{
    detail::check_product_degree(cx, a.degree + b.degree);
    return cx.project_to_class(cup(cx.context(), a.representative, b.representative));
}

inline CohomologyClass induced_bracket(const CochainComplex& cx, const CohomologyClass& a, const CohomologyClass& b)
{
    detail::check_product_degree(cx, a.degree + b.degree - 1);
    return cx.project_to_class(commutator(a.representative, b.representative));
}

} // namespace preop

#endif // PREOP_COHOMOLOGY_HPP
