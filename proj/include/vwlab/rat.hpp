#pragma once

/*
 * Exact rational scalars on top of GMP.
 *
 * Every value is kept canonical: gcd(|num|, den) = 1 and den > 0, so
 * equality is structural and zero-testing is exact.  No floating point
 * enters the coefficient domain anywhere in this library.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vwlab {

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /* Accepts "num" or "num/den"; exact, no whitespace tolerated. */
    static Rat parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rat: empty string");
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(mpz_class(s));
            mpz_class n(s.substr(0, slash));
            mpz_class d(s.substr(slash + 1));
            return Rat(n, d);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        }
    }

    /* 2^e for any integer e. */
    static Rat pow2(long e) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
        return e < 0 ? Rat(mpz_class(1), p) : Rat(p);
    }

    /* base^e as an exact rational, e may be negative when base != 0. */
    static Rat ipow(long base, long e) {
        if (base == 0 && e < 0) throw std::invalid_argument("Rat: 0^negative");
        mpz_class b(base), p;
        mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        return e < 0 ? Rat(mpz_class(1), p) : Rat(p);
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; v_.canonicalize(); return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; v_.canonicalize(); return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; v_.canonicalize(); return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    /* Floor as mpz (used for exponent window arithmetic). */
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    Rat inv() const {
        if (is_zero()) throw std::invalid_argument("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    /* "num/den", or "num" when den = 1. */
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rat operator*(long n, const Rat& r) { return Rat(n) * r; }

}  // namespace vwlab
