#ifndef PREOP_RATIONAL_HPP
#define PREOP_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace preop {

/*
 * Exact rational number.
 *
 * Values whose reduced numerator and denominator fit in int64 are kept inline;
 * anything larger is promoted to a GMP rational and demoted again as soon as a
 * result fits. The representation is canonical: a value is small iff it fits,
 * so equality never needs to compare across representations.
 *
 * Invariants: den > 0, gcd(|num|, den) = 1, zero is 0/1.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) // NOLINT(google-explicit-constructor)
    {
        if (n == std::numeric_limits<std::int64_t>::min()) assign_big(mpq_class(mpz_from(n)));
    }
    Rational(std::int64_t n, std::int64_t d) { assign(i128(n), i128(d)); }
    explicit Rational(const mpq_class& q) { assign_big(q); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_)
    {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o)
    {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    // Accepts "p" or "p/q" in base 10 with an optional leading sign on p.
    static Rational parse(std::string_view text)
    {
        auto valid_int = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        const auto slash = text.find('/');
        std::string_view p = text.substr(0, slash);
        std::string_view q = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!valid_int(p, true) || !valid_int(q, false))
            throw ParseError("bad rational literal '" + std::string(text) + "'");
        std::string ps(p);
        if (!ps.empty() && ps[0] == '+') ps.erase(0, 1);
        mpz_class pn(ps, 10), qd(std::string(q), 10);
        if (qd == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        mpq_class v(pn, qd);
        v.canonicalize();
        return Rational(v);
    }

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    [[nodiscard]] int sign() const
    {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }
    [[nodiscard]] bool is_small() const { return !big_; }

    [[nodiscard]] mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from(num_); }
    [[nodiscard]] mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from(den_); }
    [[nodiscard]] mpq_class to_mpq() const { return big_ ? *big_ : mpq_class(mpz_from(num_), mpz_from(den_)); }

    [[nodiscard]] std::string str() const
    {
        if (big_) return big_->get_str(10);
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const
    {
        if (big_) return Rational(mpq_class(-*big_));
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o)
    {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t s;
                if (!__builtin_add_overflow(num_, o.num_, &s) && s != kMin) {
                    num_ = s;
                    return *this;
                }
            }
            assign(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
            return *this;
        }
        assign_big(to_mpq() + o.to_mpq());
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o)
    {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t p;
                if (!__builtin_mul_overflow(num_, o.num_, &p) && p != kMin) {
                    num_ = p;
                    return *this;
                }
            }
            assign(i128(num_) * o.num_, i128(den_) * o.den_);
            return *this;
        }
        assign_big(to_mpq() * o.to_mpq());
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw DivideByZero();
        if (!big_ && !o.big_) {
            assign(i128(num_) * o.den_, i128(den_) * o.num_);
            return *this;
        }
        assign_big(to_mpq() / o.to_mpq());
        return *this;
    }

    // *this += a * b without a temporary on the common small-integer path.
    void add_product(const Rational& a, const Rational& b)
    {
        if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
            std::int64_t p, s;
            if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &s) && s != kMin) {
                num_ = s;
                return;
            }
        }
        Rational t = a;
        t *= b;
        *this += t;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
        return a.to_mpq() < b.to_mpq();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;
    static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

    static mpz_class mpz_from(std::int64_t v) { return mpz_from(i128(v)); }
    static mpz_class mpz_from(i128 v)
    {
        const bool neg = v < 0;
        u128 m = neg ? u128(0) - u128(v) : u128(v);
        mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
        mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    }
    static u128 gcd(u128 a, u128 b)
    {
        while (b != 0) {
            u128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void assign(i128 n, i128 d)
    {
        if (d == 0) throw DivideByZero();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        const u128 g = gcd(n < 0 ? u128(0) - u128(n) : u128(n), u128(d));
        n /= i128(g);
        d /= i128(g);
        if (n >= -i128(kMax) && n <= i128(kMax) && d <= i128(kMax)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            big_.reset();
            return;
        }
        mpq_class q(mpz_from(n), mpz_from(d));
        big_ = std::make_unique<mpq_class>(std::move(q));
        num_ = 0;
        den_ = 1;
    }

    void assign_big(const mpq_class& q)
    {
        const mpz_class& n = q.get_num();
        const mpz_class& d = q.get_den();
        if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 63) {
            num_ = to_i64(n);
            den_ = to_i64(d);
            big_.reset();
            return;
        }
        big_ = std::make_unique<mpq_class>(q);
        num_ = 0;
        den_ = 1;
    }
    static std::int64_t to_i64(const mpz_class& v)
    {
        // |v| < 2^63 here.
        mpz_class a = abs(v);
        std::uint64_t m = 0;
        mpz_export(&m, nullptr, -1, sizeof m, 0, 0, a.get_mpz_t());
        const auto s = static_cast<std::int64_t>(m);
        return sgn(v) < 0 ? -s : s;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

} // namespace preop

#endif // PREOP_RATIONAL_HPP
