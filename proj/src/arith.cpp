#include "mvl/arith.hpp"
#include "mvl/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mvl {

namespace {

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> f;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) { n /= p; ++k; }
            f.push_back({p, k});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

i64 pow_mod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % m;
        b = (__int128)b * b % m;
        e >>= 1;
    }
    return r;
}

// smallest primitive root modulo p^k (p odd) or modulo 2, 4
i64 primitive_root(i64 q, i64 phi) {
    auto pf = factorize(phi);
    for (i64 g = 1; g < q; ++g) {
        if (gcd_i64(g, q) != 1) continue;
        bool ok = true;
        for (auto& [p, k] : pf) {
            (void)k;
            if (pow_mod(g, phi / p, q) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

}  // namespace

i64 gcd_i64(i64 a, i64 b) {
    return std::gcd(a, b);
}

i64 euler_phi(i64 c) {
    if (c < 1) throw std::invalid_argument("euler_phi: c must be >= 1");
    i64 r = c;
    for (auto& [p, k] : factorize(c)) {
        (void)k;
        r -= r / p;
    }
    return r;
}

i64 mod_inverse(i64 n, i64 c) {
    if (c < 1) throw std::invalid_argument("mod_inverse: c must be >= 1");
    if (c == 1) return 0;
    i64 a = ((n % c) + c) % c;
    i64 old_r = a, r = c, old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return ((old_s % c) + c) % c;
}

i64 divisor_count(i64 n) {
    i64 t = 1;
    for (auto& [p, k] : factorize(n)) {
        (void)p;
        t *= k + 1;
    }
    return t;
}

cplx kloosterman_direct(i64 m, i64 n, i64 c) {
    if (c < 1) throw std::invalid_argument("kloosterman: c must be >= 1");
    if (c == 1) return {1.0, 0.0};
    CompensatedAccumulator acc;
    for (i64 a = 1; a < c; ++a) {
        if (gcd_i64(a, c) != 1) continue;
        i64 ab = mod_inverse(a, c);
        double phase = double((__int128)a * (m % c) % c + (__int128)ab * (n % c) % c) / double(c);
        acc.add(unit_e(phase));
    }
    return acc.value();
}

cplx kloosterman(i64 m, i64 n, i64 c) {
    if (c < 1) throw std::invalid_argument("kloosterman: c must be >= 1");
    auto f = factorize(c);
    if (f.size() <= 1) return kloosterman_direct(m, n, c);
    // twisted multiplicativity: for c = q r with (q, r) = 1,
    //   S(m, n; q r) = S(m rbar, n rbar; q) S(m qbar, n qbar; r)
    cplx prod(1.0, 0.0);
    for (auto& [p, k] : f) {
        i64 q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        i64 r = c / q;
        i64 rb = mod_inverse(r % q, q);
        prod *= kloosterman_direct((__int128)m * rb % q, (__int128)n * rb % q, q);
    }
    return prod;
}

double weil_bound(i64 m, i64 n, i64 c) {
    i64 g = gcd_i64(gcd_i64(std::abs(m), std::abs(n)), c);
    if (g == 0) g = c;
    return double(divisor_count(c)) * std::sqrt(double(g)) * std::sqrt(double(c));
}

CharacterTable characters(i64 c) {
    if (c < 1) throw std::invalid_argument("characters: c must be >= 1");
    CharacterTable tab;
    tab.modulus = c;
    if (c == 1) {
        tab.values = {{cplx(1, 0)}};
        tab.parity = {0};
        tab.gauss = {cplx(1, 0)};
        tab.primitive = {true};
        tab.principal_index = 0;
        return tab;
    }

    // cyclic decomposition of (Z/cZ)^*: one or two generators per prime power
    struct Factor {
        i64 q;                      // prime power
        std::vector<i64> orders;    // cyclic orders
        std::vector<i64> dlog;      // mixed-radix discrete log per residue (or -1)
    };
    std::vector<Factor> factors;
    for (auto& [p, k] : factorize(c)) {
        i64 q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        Factor fac;
        fac.q = q;
        if (q == 2) {
            fac.orders = {1};
            fac.dlog.assign(q, -1);
            fac.dlog[1] = 0;
        } else if (p == 2 && k >= 3) {
            // (Z/2^k)^* = <-1> x <5>
            i64 m2 = q / 4;
            fac.orders = {2, m2};
            fac.dlog.assign(q, -1);
            i64 v = 1;
            for (i64 e = 0; e < m2; ++e) {
                fac.dlog[v] = 0 * m2 + e;
                fac.dlog[q - v] = 1 * m2 + e;
                v = v * 5 % q;
            }
        } else {
            i64 phi = q / p * (p - 1);
            if (q == 4) phi = 2;
            i64 g = primitive_root(q, phi);
            fac.orders = {phi};
            fac.dlog.assign(q, -1);
            i64 v = 1;
            for (i64 e = 0; e < phi; ++e) {
                fac.dlog[v] = e;
                v = (__int128)v * g % q;
            }
        }
        factors.push_back(std::move(fac));
    }

    // flatten generator list
    std::vector<i64> orders;
    for (auto& f : factors)
        for (i64 o : f.orders) orders.push_back(o);
    int ngen = static_cast<int>(orders.size());
    i64 phi_c = 1;
    for (i64 o : orders) phi_c *= o;

    // per-residue exponent vector
    std::vector<std::vector<i64>> expo(c);
    for (i64 a = 0; a < c; ++a) {
        if (gcd_i64(a, c) != 1) continue;
        std::vector<i64> ev;
        bool ok = true;
        for (auto& f : factors) {
            i64 d = f.dlog[a % f.q];
            if (d < 0) { ok = false; break; }
            if (f.orders.size() == 2) {
                ev.push_back(d / f.orders[1]);
                ev.push_back(d % f.orders[1]);
            } else {
                ev.push_back(d);
            }
        }
        if (ok) expo[a] = std::move(ev);
    }

    // enumerate characters as mixed-radix tuples (deterministic order)
    std::vector<i64> idx(ngen, 0);
    for (i64 j = 0; j < phi_c; ++j) {
        std::vector<cplx> vals(c, cplx(0, 0));
        for (i64 a = 0; a < c; ++a) {
            if (expo[a].empty() && gcd_i64(a, c) != 1) continue;
            if (gcd_i64(a, c) != 1) continue;
            double phase = 0;
            for (int g = 0; g < ngen; ++g)
                phase += double(idx[g]) * double(expo[a][g]) / double(orders[g]);
            vals[a] = unit_e(phase - std::floor(phase));
        }
        bool principal = std::all_of(idx.begin(), idx.end(), [](i64 v) { return v == 0; });
        if (principal) tab.principal_index = static_cast<int>(tab.values.size());
        int par = std::abs(vals[(c - 1) % c] - cplx(1, 0)) < 1e-9 ? 0 : 1;
        tab.parity.push_back(par);
        tab.gauss.push_back(gauss_sum(vals, c));
        tab.values.push_back(std::move(vals));
        // increment mixed-radix counter
        for (int g = ngen - 1; g >= 0; --g) {
            if (++idx[g] < orders[g]) break;
            idx[g] = 0;
        }
    }

    // primitivity: chi is induced by a character mod c/p iff chi(a) = 1 for
    // all a = 1 (mod c/p) with (a, c) = 1
    tab.primitive.resize(tab.count());
    for (int j = 0; j < tab.count(); ++j) {
        bool prim = true;
        for (auto& [p, k] : factorize(c)) {
            (void)k;
            i64 d = c / p;
            bool induced = true;
            for (i64 a = 1 + d; a < c; a += d) {
                if (gcd_i64(a, c) != 1) continue;
                if (std::abs(tab.values[j][a] - cplx(1, 0)) > 1e-9) { induced = false; break; }
            }
            if (induced) { prim = false; break; }
        }
        tab.primitive[j] = prim;
    }
    return tab;
}

cplx gauss_sum(const std::vector<cplx>& chi_values, i64 c) {
    CompensatedAccumulator acc;
    for (i64 a = 0; a < c; ++a)
        acc.add(chi_values[a] * unit_e(double(a) / double(c)));
    return acc.value();
}

cplx divisor_tau(cplx nu, i64 n) {
    if (n < 1) throw std::invalid_argument("divisor_tau: n must be >= 1");
    CompensatedAccumulator acc;
    for (i64 a = 1; a * a <= n; ++a) {
        if (n % a != 0) continue;
        i64 b = n / a;
        acc.add(std::exp(nu * std::log(double(a) / double(b))));
        if (a != b) acc.add(std::exp(nu * std::log(double(b) / double(a))));
    }
    return acc.value();
}

double reciprocity_check(i64 n, i64 c, int sign) {
    if (n < 1 || c < 1) throw std::invalid_argument("reciprocity_check: n, c must be >= 1");
    if (gcd_i64(n, c) != 1) throw std::invalid_argument("reciprocity_check: n, c not coprime");
    double s = sign >= 0 ? 1.0 : -1.0;
    i64 nb = mod_inverse(n, c);  // 0 when c = 1
    i64 cb = mod_inverse(c, n);  // 0 when n = 1
    cplx lhs = unit_e(-s * double(nb) / double(c));
    cplx rhs = unit_e(s * double(cb) / double(n)) * unit_e(-s / (double(c) * double(n)));
    return std::abs(lhs - rhs);
}

}  // namespace mvl
