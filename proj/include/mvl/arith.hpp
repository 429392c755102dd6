#pragma once

// Exact elementary arithmetic: Euler phi, modular inverses, Kloosterman
// sums, Dirichlet character tables with Gauss sums, divisor functions, and
// the reciprocity identity e(-+ nbar/c) = e(+- cbar/n) e(-+ 1/cn).

#include "mvl/numkernel.hpp"

#include <cstdint>
#include <vector>

namespace mvl {

using i64 = std::int64_t;

i64 euler_phi(i64 c);
i64 gcd_i64(i64 a, i64 b);
// inverse of n mod c in [0, c); throws if gcd(n, c) != 1
i64 mod_inverse(i64 n, i64 c);

// number of divisors
i64 divisor_count(i64 n);

// S(m, n; c) = sum_{a mod c, (a,c)=1} e((a m + abar n)/c); exact enumeration
// with CRT factorization into prime powers.
cplx kloosterman(i64 m, i64 n, i64 c);
// direct single-modulus enumeration (CRT cross-check oracle)
cplx kloosterman_direct(i64 m, i64 n, i64 c);

// tau(c) sqrt((m,n,c)) sqrt(c)
double weil_bound(i64 m, i64 n, i64 c);

struct CharacterTable {
    i64 modulus = 1;
    // values[j][a] = chi_j(a) for a in [0, c); 0 on non-units
    std::vector<std::vector<cplx>> values;
    std::vector<int> parity;     // 0 if chi(-1) = 1, 1 if chi(-1) = -1
    std::vector<cplx> gauss;     // tau(chi_j)
    std::vector<bool> primitive; // conductor equals modulus
    int principal_index = 0;

    const std::vector<cplx>& chi(int j) const { return values[j]; }
    int count() const { return static_cast<int>(values.size()); }
};

// Full character table of (Z/cZ)^* via its cyclic decomposition.
CharacterTable characters(i64 c);

// tau(chi) = sum_a chi(a) e(a/c) for a character given as a value array
cplx gauss_sum(const std::vector<cplx>& chi_values, i64 c);

// tau_nu(n) = sum_{ab=n} (a/b)^nu
cplx divisor_tau(cplx nu, i64 n);

// |e(-sign * nbar/c) - e(sign * cbar/n) e(-sign * 1/(c n))| for coprime n, c
double reciprocity_check(i64 n, i64 c, int sign);

}  // namespace mvl
