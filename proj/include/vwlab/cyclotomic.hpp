#pragma once

/*
 * Exact arithmetic in Q(zeta_N) for N = 1, 2, or an odd prime.
 *
 * Elements are stored in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
 * For an odd prime p the single reduction rule is
 *     zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}),
 * which keeps the representation canonical: an element is zero iff all
 * coordinates are zero, and equality is coordinate-wise.
 *
 * Orders are restricted to 1, 2 and odd primes; composite orders > 2 are
 * rejected.  Binary operations require matching orders (a rational value
 * can be re-embedded explicitly with embedded()).
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vwlab/rat.hpp"

namespace vwlab {

bool cyc_order_supported(long n);

/* phi(N) for supported N; throws on unsupported orders. */
long cyc_phi(long n);

class CycNum {
public:
    CycNum() : order_(1), c_(1) {}
    explicit CycNum(long order);                  /* zero of given order */
    CycNum(long order, const Rat& r);             /* rational embedding  */

    /* coords must have length phi(order); used by root construction and
     * deserialization */
    static CycNum from_coords(long order, std::vector<Rat> coords);

    long order() const { return order_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const;
    bool operator==(const CycNum& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { *this = *this + o; return *this; }

    CycNum scaled(const Rat& r) const;
    CycNum inv() const;

    /* Re-embed into a larger order; only rational values (order 1 or 2,
     * or any value whose non-constant coordinates vanish) can move. */
    CycNum embedded(long new_order) const;

    std::string str() const;

private:
    long order_;
    std::vector<Rat> c_;

    void require_same_order(const CycNum& o) const;
};

/* zeta_order^power in canonical form; power is reduced mod order, so any
 * integer power is accepted internally.  The public contract for callers
 * constructing a primitive root is 0 <= power < order. */
CycNum cyc_root_of_unity(long order, long power);

/* Integer power of an element (exponent may be negative for units). */
CycNum cyc_pow(const CycNum& x, long e);

/* The rational value when all coordinates beyond the constant one vanish. */
std::optional<Rat> cyc_is_rational(const CycNum& x);

}  // namespace vwlab
