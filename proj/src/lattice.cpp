#include "vwlab/lattice.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "vwlab/classnum.hpp"
#include "vwlab/rat.hpp"

namespace vwlab {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

/* E8 Cartan matrix, nodes numbered so that node 2 hangs off node 4 */
std::array<std::array<long, 8>, 8> e8_cartan() {
    std::array<std::array<long, 8>, 8> m{};
    for (int i = 0; i < 8; ++i) m[i][i] = 2;
    const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (const auto& e : edges) {
        m[e[0] - 1][e[1] - 1] = -1;
        m[e[1] - 1][e[0] - 1] = -1;
    }
    return m;
}

using Block = std::vector<std::vector<long>>;

Block u_block() { return {{0, 1}, {1, 0}}; }

Block neg_e8_block() {
    const auto c = e8_cartan();
    Block b(8, std::vector<long>(8));
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) b[i][j] = -c[i][j];
    }
    return b;
}

/* distribution of g^T B g mod `modulus` over all r^rank digit vectors */
std::map<long, mpz_class> block_distribution(const Block& b, long r, long modulus) {
    const int rank = static_cast<int>(b.size());
    std::map<long, mpz_class> dist;
    std::vector<long> g(rank, 0);
    while (true) {
        long q = 0;
        for (int i = 0; i < rank; ++i) {
            if (g[i] == 0) continue;
            for (int j = 0; j < rank; ++j) {
                if (g[j] == 0) continue;
                q += g[i] * b[i][j] * g[j];
            }
        }
        q = ((q % modulus) + modulus) % modulus;
        dist[q] += 1;
        int i = 0;
        while (i < rank && ++g[i] == r) g[i++] = 0;
        if (i == rank) break;
    }
    return dist;
}

std::map<long, mpz_class> convolve(const std::map<long, mpz_class>& a, const std::map<long, mpz_class>& b,
                                   long modulus) {
    std::map<long, mpz_class> out;
    for (const auto& [va, ca] : a) {
        for (const auto& [vb, cb] : b) {
            out[(va + vb) % modulus] += ca * cb;
        }
    }
    return out;
}

mpz_class ipow_mpz(long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

}  // namespace

K3Gram k3_gram() {
    K3Gram g{};
    const Block u = u_block();
    const Block e = neg_e8_block();
    for (int blk = 0; blk < 3; ++blk) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) g[2 * blk + i][2 * blk + j] = u[i][j];
        }
    }
    for (int blk = 0; blk < 2; ++blk) {
        const int off = 6 + 8 * blk;
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) g[off + i][off + j] = e[i][j];
        }
    }
    return g;
}

LatticeChecks k3_lattice_checks() {
    const K3Gram g = k3_gram();
    LatticeChecks out;

    out.even = true;
    for (int i = 0; i < k3_rank; ++i) {
        if (g[i][i] % 2 != 0) out.even = false;
        for (int j = 0; j < k3_rank; ++j) {
            if (g[i][j] != g[j][i]) out.even = false;
        }
    }

    /* determinant by fraction-free elimination */
    {
        std::vector<std::vector<mpz_class>> m(k3_rank, std::vector<mpz_class>(k3_rank));
        for (int i = 0; i < k3_rank; ++i) {
            for (int j = 0; j < k3_rank; ++j) m[i][j] = g[i][j];
        }
        int sign = 1;
        mpz_class prev = 1;
        bool singular = false;
        for (int k = 0; k < k3_rank - 1 && !singular; ++k) {
            if (m[k][k] == 0) {
                int piv = -1;
                for (int i = k + 1; i < k3_rank; ++i) {
                    if (m[i][k] != 0) {
                        piv = i;
                        break;
                    }
                }
                if (piv < 0) {
                    singular = true;
                    break;
                }
                std::swap(m[k], m[piv]);
                sign = -sign;
            }
            for (int i = k + 1; i < k3_rank; ++i) {
                for (int j = k + 1; j < k3_rank; ++j) {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        out.det = singular ? mpz_class(0) : mpz_class(sign * m[k3_rank - 1][k3_rank - 1]);
    }

    /* signature by exact symmetric elimination */
    {
        std::vector<std::vector<Rat>> m(k3_rank, std::vector<Rat>(k3_rank));
        for (int i = 0; i < k3_rank; ++i) {
            for (int j = 0; j < k3_rank; ++j) m[i][j] = Rat(g[i][j]);
        }
        for (int i = 0; i < k3_rank; ++i) {
            if (m[i][i].is_zero()) {
                for (int j = i + 1; j < k3_rank; ++j) {
                    if (m[i][j].is_zero()) continue;
                    for (int l = 0; l < k3_rank; ++l) m[i][l] += m[j][l];
                    for (int k = 0; k < k3_rank; ++k) m[k][i] += m[k][j];
                    if (!m[i][i].is_zero()) break;
                }
            }
            if (m[i][i].is_zero()) continue;
            const Rat p = m[i][i];
            for (int k = i + 1; k < k3_rank; ++k) {
                if (m[k][i].is_zero()) continue;
                const Rat f = m[k][i] / p;
                for (int l = i; l < k3_rank; ++l) m[k][l] -= f * m[i][l];
            }
            for (int l = i + 1; l < k3_rank; ++l) {
                m[i][l] = Rat(0);
                m[l][i] = Rat(0);
            }
            if (m[i][i].sign() > 0) {
                ++out.sig_pos;
            } else {
                ++out.sig_neg;
            }
        }
    }
    return out;
}

/* ------------------------------------------------------------------ */
/*  residue-class censuses                                             */
/* ------------------------------------------------------------------ */

std::map<long, mpz_class> k3_quadratic_distribution(long r, long modulus) {
    if (r < 2 || modulus < 2) throw std::invalid_argument("residue census needs r >= 2 and modulus >= 2");
    static std::mutex mtx;
    static std::map<std::pair<long, long>, std::map<long, mpz_class>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({r, modulus});
    if (it != cache.end()) return it->second;

    const auto du = block_distribution(u_block(), r, modulus);
    const auto de = block_distribution(neg_e8_block(), r, modulus);
    auto d = convolve(du, du, modulus);
    d = convolve(d, du, modulus);
    d = convolve(d, de, modulus);
    d = convolve(d, de, modulus);
    cache[{r, modulus}] = d;
    return d;
}

ClassCensus k3_class_census_bruteforce() {
    const auto d = k3_quadratic_distribution(2, 4);
    ClassCensus c;
    c.n_zero = 1;
    auto at = [&](long v) {
        auto it = d.find(v);
        return it == d.end() ? mpz_class(0) : it->second;
    };
    if (at(1) != 0 || at(3) != 0) {
        throw std::logic_error("even lattice produced an odd residue in the mod-4 census");
    }
    c.n_even = at(0) - 1;
    c.n_odd = at(2);
    return c;
}

ClassCensus k3_class_census_full_enumeration() {
    const K3Gram gram = k3_gram();
    long counts[4] = {0, 0, 0, 0};

    /* Gray-code walk over all 2^22 residue vectors: one coordinate flips
     * per step, and s = g^T Gram g, t = Gram g update in O(rank). */
    int g[k3_rank] = {0};
    long t[k3_rank] = {0};
    long s = 0;
    counts[0] += 1; /* zero vector */
    const unsigned long total = 1UL << k3_rank;
    for (unsigned long i = 1; i < total; ++i) {
        const int b = __builtin_ctzl(i);
        const long d = g[b] ? -1 : 1;
        s += 2 * d * t[b] + gram[b][b];
        for (int j = 0; j < k3_rank; ++j) t[j] += d * gram[b][j];
        g[b] ^= 1;
        counts[((s % 4) + 4) % 4] += 1;
    }
    if (counts[1] != 0 || counts[3] != 0) {
        throw std::logic_error("even lattice produced an odd residue in the mod-4 census");
    }
    ClassCensus c;
    c.n_zero = 1;
    c.n_even = counts[0] - 1;
    c.n_odd = counts[2];
    return c;
}

/* ------------------------------------------------------------------ */
/*  gerbe counts                                                       */
/* ------------------------------------------------------------------ */

GerbeCensus gerbe_census(long rho, long r) {
    if (!is_prime(r)) {
        throw std::invalid_argument("gerbe census needs a prime rank, got " + std::to_string(r));
    }
    if (rho == 21) {
        throw std::invalid_argument("no K3 surface has Picard number 21; allowed 0..20 and 22");
    }
    if (rho < 0 || rho > 22) {
        throw std::invalid_argument("Picard number out of range: " + std::to_string(rho));
    }
    GerbeCensus c;
    c.r = r;
    c.rho = rho;
    c.n_trivial = 1;
    c.n_ess_nontrivial = ipow_mpz(r, static_cast<unsigned long>(rho)) - 1;
    c.n_optimal = ipow_mpz(r, 22) - ipow_mpz(r, static_cast<unsigned long>(rho));
    c.n_zero_class = 1;
    if (r == 2) {
        const mpz_class p22 = ipow_mpz(2, 22);
        const mpz_class p11 = ipow_mpz(2, 11);
        c.n_even = (p22 + p11) / 2 - 1;
        c.n_odd = (p22 - p11) / 2;
    }
    return c;
}

/* ------------------------------------------------------------------ */
/*  Gauss sums                                                         */
/* ------------------------------------------------------------------ */

CycNum gauss_sum_value(long m, long r) {
    if (!is_prime(r)) {
        throw std::invalid_argument("Gauss sum needs a prime rank, got " + std::to_string(r));
    }
    if (m < 1 || m > r - 1) {
        throw std::invalid_argument("Gauss sum twist must satisfy 1 <= m <= r-1");
    }
    if (r == 2) {
        /* e^{pi i g^2/2} = +1 on g^2 = 0 (4), -1 on g^2 = 2 (4) */
        const auto d = k3_quadratic_distribution(2, 4);
        mpz_class v = 0;
        for (const auto& [res, cnt] : d) v += (res == 0) ? cnt : -cnt;
        return CycNum(1, Rat(v));
    }
    /* e^{pi i (r-1) m g^2 / r} = zeta_r^{((r-1)/2) m g^2} */
    const auto d = k3_quadratic_distribution(r, r);
    const long h = ((r - 1) / 2) % r;
    CycNum sum(r);
    for (const auto& [res, cnt] : d) {
        const long e = (h * ((m * res) % r)) % r;
        sum += cyc_root_of_unity(r, e).scaled(Rat(mpz_class(cnt)));
    }
    return sum;
}

bool gauss_sum_check(long m, long r) {
    const CycNum value = gauss_sum_value(m, r);
    mpz_class expected = ipow_mpz(r, 11);
    if (r != 2) {
        const int eps = legendre_epsilon(m, r);
        mpz_class e22;
        mpz_pow_ui(e22.get_mpz_t(), mpz_class(eps).get_mpz_t(), 22);
        expected *= e22;
    }
    return value == CycNum(value.order(), Rat(expected));
}

}  // namespace vwlab
