#include "vwlab/cyclotomic.hpp"

namespace vwlab {

/* ------------------------------------------------------------------ */
/*  orders                                                             */
/* ------------------------------------------------------------------ */

bool cyc_order_supported(long n) {
    if (n == 1 || n == 2) return true;
    if (n < 3 || n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

long cyc_phi(long n) {
    if (!cyc_order_supported(n))
        throw std::invalid_argument(
            "cyclotomic order " + std::to_string(n) +
            " unsupported: only 1, 2 and odd primes are available");
    return n <= 2 ? 1 : n - 1;
}

/* ------------------------------------------------------------------ */
/*  construction                                                       */
/* ------------------------------------------------------------------ */

CycNum::CycNum(long order) : order_(order), c_(cyc_phi(order)) {}

CycNum::CycNum(long order, const Rat& r) : order_(order), c_(cyc_phi(order)) {
    c_[0] = r;
}

CycNum CycNum::from_coords(long order, std::vector<Rat> coords) {
    if (static_cast<long>(coords.size()) != cyc_phi(order))
        throw std::invalid_argument("CycNum: coords length must equal phi(order)");
    CycNum r(order);
    r.c_ = std::move(coords);
    return r;
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

void CycNum::require_same_order(const CycNum& o) const {
    if (order_ != o.order_)
        throw std::invalid_argument(
            "cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
            std::to_string(o.order_));
}

/* ------------------------------------------------------------------ */
/*  ring operations                                                    */
/* ------------------------------------------------------------------ */

CycNum CycNum::operator-() const {
    CycNum r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycNum CycNum::operator+(const CycNum& o) const {
    require_same_order(o);
    CycNum r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
    require_same_order(o);
    CycNum r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    require_same_order(o);
    const long phi = static_cast<long>(c_.size());
    if (order_ <= 2) {
        CycNum r(order_);
        r.c_[0] = c_[0] * o.c_[0];
        return r;
    }
    /* convolve, fold exponents mod p, then eliminate zeta^{p-1} */
    const long p = order_;
    std::vector<Rat> tmp(p);
    for (long i = 0; i < phi; ++i) {
        if (c_[i].is_zero()) continue;
        for (long j = 0; j < phi; ++j) {
            if (o.c_[j].is_zero()) continue;
            tmp[(i + j) % p] += c_[i] * o.c_[j];
        }
    }
    CycNum r(order_);
    for (long i = 0; i < phi; ++i) r.c_[i] = tmp[i] - tmp[p - 1];
    return r;
}

CycNum CycNum::scaled(const Rat& s) const {
    CycNum r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

/* Inverse by solving (mult-by-x) y = 1 over Q with exact elimination. */
CycNum CycNum::inv() const {
    if (is_zero()) throw std::invalid_argument("CycNum: inverse of zero");
    const long phi = static_cast<long>(c_.size());
    if (order_ <= 2) {
        CycNum r(order_);
        r.c_[0] = c_[0].inv();
        return r;
    }
    /* column j of M = coordinates of x * zeta^j */
    std::vector<std::vector<Rat>> m(phi, std::vector<Rat>(phi + 1));
    CycNum col = *this;
    const CycNum zeta = cyc_root_of_unity(order_, 1);
    for (long j = 0; j < phi; ++j) {
        for (long i = 0; i < phi; ++i) m[i][j] = col.c_[i];
        if (j + 1 < phi) col = col * zeta;
    }
    m[0][phi] = Rat(1);

    for (long col_i = 0, row = 0; col_i < phi && row < phi; ++col_i) {
        long piv = -1;
        for (long i = row; i < phi; ++i)
            if (!m[i][col_i].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        const Rat d = m[row][col_i];
        for (long k = col_i; k <= phi; ++k) m[row][k] = m[row][k] / d;
        for (long i = 0; i < phi; ++i) {
            if (i == row || m[i][col_i].is_zero()) continue;
            const Rat f = m[i][col_i];
            for (long k = col_i; k <= phi; ++k) m[i][k] = m[i][k] - f * m[row][k];
        }
        ++row;
    }
    CycNum y(order_);
    for (long i = 0; i < phi; ++i) {
        /* after full elimination row i has a single pivot 1 at column i */
        if (m[i][i].is_zero()) {
            if (!m[i][phi].is_zero())
                throw std::logic_error("CycNum: singular multiplication matrix");
            continue;
        }
        y.c_[i] = m[i][phi];
    }
    if (!((*this) * y == CycNum(order_, Rat(1))))
        throw std::logic_error("CycNum: inverse verification failed");
    return y;
}

CycNum CycNum::embedded(long new_order) const {
    if (new_order == order_) return *this;
    const auto r = cyc_is_rational(*this);
    if (!r)
        throw std::invalid_argument("CycNum: only rational values re-embed");
    return CycNum(new_order, *r);
}

std::string CycNum::str() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += c_[i].str();
    }
    return s + "] (order " + std::to_string(order_) + ")";
}

/* ------------------------------------------------------------------ */
/*  roots of unity and helpers                                         */
/* ------------------------------------------------------------------ */

CycNum cyc_root_of_unity(long order, long power) {
    const long phi = cyc_phi(order);
    long k = power % order;
    if (k < 0) k += order;
    if (order == 1) return CycNum(1, Rat(1));
    if (order == 2) return CycNum(2, k == 0 ? Rat(1) : Rat(-1));
    std::vector<Rat> c(phi);
    if (k < phi) {
        c[k] = Rat(1);
    } else {
        /* k == p-1: zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}) */
        for (long i = 0; i < phi; ++i) c[i] = Rat(-1);
    }
    return CycNum::from_coords(order, std::move(c));
}

CycNum cyc_pow(const CycNum& x, long e) {
    if (e == 0) return CycNum(x.order(), Rat(1));
    CycNum base = e < 0 ? x.inv() : x;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    CycNum acc(x.order(), Rat(1));
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::optional<Rat> cyc_is_rational(const CycNum& x) {
    const auto& c = x.coords();
    for (size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return std::nullopt;
    return c[0];
}

}  // namespace vwlab
