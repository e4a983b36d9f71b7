#pragma once

// Test-side oracles, independent of the library paths they check.

#include <cstdint>
#include <vector>

#include "hullsmith/field.hpp"
#include "hullsmith/grs.hpp"

namespace oracles {

using hullsmith::Field;
using hullsmith::FieldSpec;

// Polynomial remainder of x^(p^m) - x by the modulus, computed with a local
// square-and-multiply so the irreducibility certificate does not reuse the
// library's polynomial code.
inline bool divides_frobenius_poly(uint32_t p, const std::vector<uint32_t>& modulus) {
    size_t m = modulus.size() - 1;
    auto mul_mod = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p);
        for (size_t d = c.size(); d-- > m;) {
            uint32_t lead = c[d];
            if (!lead) continue;
            c[d] = 0;
            for (size_t i = 0; i < m; ++i) {
                uint64_t sub = uint64_t(lead) * modulus[i] % p;
                c[d - m + i] = uint32_t((c[d - m + i] + p - uint32_t(sub)) % p);
            }
        }
        c.resize(m);
        return c;
    };
    // x^(p^m) mod f via repeated p-th powers
    std::vector<uint32_t> x(m, 0);
    if (m == 1) {
        // degree-1 modulus: x = -c0 is a scalar
        x[0] = (p - modulus[0] % p) % p;
    } else {
        x[1] = 1;
    }
    std::vector<uint32_t> acc = x;
    for (size_t step = 0; step < m; ++step) {
        // acc <- acc^p
        std::vector<uint32_t> r(m, 0);
        r[0] = 1;
        uint32_t e = p;
        std::vector<uint32_t> base = acc;
        while (e) {
            if (e & 1) r = mul_mod(r, base);
            base = mul_mod(base, base);
            e >>= 1;
        }
        acc = r;
    }
    return acc == x; // x^{p^m} = x  iff  f | x^{p^m} - x
}

// Power sum over every element of the field (0 included, with 0^0 = 1).
inline uint32_t full_field_power_sum(const FieldSpec& F, long long e) {
    uint32_t acc = 0;
    for (uint64_t x = 0; x < F.size(); ++x) acc = F.add(acc, F.pow(uint32_t(x), e));
    return acc;
}

// Brute-force minimum distance by direct polynomial evaluation, bypassing
// generator matrices entirely.
inline int grs_min_distance_bruteforce(const hullsmith::GrsCode& c) {
    const FieldSpec& F = *c.field;
    uint64_t total = 1;
    for (int i = 0; i < c.k; ++i) total *= F.size();
    int best = c.length() + 1;
    std::vector<uint32_t> coeff(c.k);
    for (uint64_t msg = 1; msg < total; ++msg) {
        uint64_t t = msg;
        for (int i = 0; i < c.k; ++i) {
            coeff[i] = uint32_t(t % F.size());
            t /= F.size();
        }
        int w = 0;
        for (int l = 0; l < c.n(); ++l) {
            uint32_t val = 0;
            for (int i = 0; i < c.k; ++i)
                val = F.add(val, F.mul(coeff[i], F.pow(c.a[l], c.k1 + i)));
            if (F.mul(c.v[l], val) != 0) ++w;
        }
        if (c.extended && coeff[c.k - 1] != 0) ++w;
        int lower = 0;
        if (w < best && w > 0) best = w;
        (void)lower;
    }
    return best;
}

// Exhaustive smallest t with theta^((q+1) t) = lambda.
inline long norm_root_exponent_bruteforce(const FieldSpec& F, uint32_t lambda) {
    uint64_t q0 = F.subfield_size();
    for (uint64_t t = 0; t + 1 < F.size(); ++t)
        if (F.pow(F.exp(t), (long long)(q0 + 1)) == lambda) return long(t);
    return -1;
}

} // namespace oracles
