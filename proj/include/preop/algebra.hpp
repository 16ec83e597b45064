#ifndef PREOP_ALGEBRA_HPP
#define PREOP_ALGEBRA_HPP

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace preop {

// A finite-dimensional algebra given by structure constants:
// e_i * e_j = sum_k c(i, j, k) e_k. Associativity and unitality are
// properties of particular instances, never assumed.
class AlgebraDef {
public:
    AlgebraDef(std::string name, std::vector<std::string> basis)
        : name_(std::move(name)), basis_(std::move(basis)), consts_(basis_.size() * basis_.size() * basis_.size())
    {
        if (basis_.empty()) throw ValidationError("algebra dimension must be at least 1");
        std::set<std::string> seen(basis_.begin(), basis_.end());
        if (seen.size() != basis_.size()) throw ValidationError("basis names must be distinct");
    }

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<std::string>& basis_names() const { return basis_; }

    [[nodiscard]] const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return consts_[index(i, j, k)]; }
    void set(std::size_t i, std::size_t j, std::size_t k, Rational v) { consts_[index(i, j, k)] = std::move(v); }

    friend bool operator==(const AlgebraDef& a, const AlgebraDef& b)
    {
        return a.name_ == b.name_ && a.basis_ == b.basis_ && a.consts_ == b.consts_;
    }

private:
    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j, std::size_t k) const
    {
        const std::size_t d = dim();
        if (i >= d || j >= d || k >= d) throw IndexOutOfRange("structure constant index out of range");
        return (i * d + j) * d + k;
    }

    std::string name_;
    std::vector<std::string> basis_;
    std::vector<Rational> consts_;
};

// The fixture algebras shipped with the tool (also under fixtures/*.json).
namespace fixtures {

inline AlgebraDef rationals()
{
    AlgebraDef a("Q", {"1"});
    a.set(0, 0, 0, 1);
    return a;
}

// Q[eps]/(eps^2), basis (1, eps).
inline AlgebraDef dual_numbers()
{
    AlgebraDef a("dual_numbers", {"1", "eps"});
    a.set(0, 0, 0, 1);
    a.set(0, 1, 1, 1);
    a.set(1, 0, 1, 1);
    return a;
}

inline AlgebraDef q_times_q()
{
    AlgebraDef a("Q_x_Q", {"e0", "e1"});
    a.set(0, 0, 0, 1);
    a.set(1, 1, 1, 1);
    return a;
}

// 2x2 matrix units, basis (e11, e12, e21, e22).
inline AlgebraDef matrix_2x2()
{
    AlgebraDef a("M2", {"e11", "e12", "e21", "e22"});
    auto idx = [](int r, int c) { return static_cast<std::size_t>(2 * r + c); };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) a.set(idx(i, j), idx(j, l), idx(i, l), 1);
    return a;
}

// Upper-triangular 2x2 matrices, basis (e11, e12, e22).
inline AlgebraDef upper_triangular_2x2()
{
    AlgebraDef a("T2", {"e11", "e12", "e22"});
    a.set(0, 0, 0, 1);
    a.set(0, 1, 1, 1);
    a.set(1, 2, 1, 1);
    a.set(2, 2, 2, 1);
    return a;
}

// a*a = b, a*b = a, b*b = a: (a*a)*a = 0 but a*(a*a) = a.
inline AlgebraDef nonassociative_2d()
{
    AlgebraDef a("nonassoc2", {"a", "b"});
    a.set(0, 0, 1, 1);
    a.set(0, 1, 0, 1);
    a.set(1, 1, 0, 1);
    return a;
}

inline std::vector<AlgebraDef> associative()
{
    return {rationals(), dual_numbers(), q_times_q(), matrix_2x2(), upper_triangular_2x2()};
}

inline std::vector<AlgebraDef> all()
{
    auto v = associative();
    v.push_back(nonassociative_2d());
    return v;
}

} // namespace fixtures

} // namespace preop

#endif // PREOP_ALGEBRA_HPP
