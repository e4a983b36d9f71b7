#include "hullsmith/field.hpp"

#include <algorithm>
#include <numeric>

namespace hullsmith {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense polynomials over GF(p), low degree first, used only during
// construction (before the log tables exist).
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    return c;
}

// a mod b, b monic
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
    trim(a);
    while (a.size() >= b.size()) {
        uint32_t lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = uint64_t(lead) * b[i] % p;
            a[shift + i] = uint32_t((a[shift + i] + p - uint32_t(sub)) % p);
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, uint32_t p) {
    size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (size_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            uint64_t t = idx;
            for (size_t i = 0; i < d; ++i) {
                g[i] = uint32_t(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

Poly rep_to_poly(uint64_t rep, uint32_t p) {
    Poly a;
    while (rep) {
        a.push_back(uint32_t(rep % p));
        rep /= p;
    }
    return a;
}

uint64_t poly_to_rep(const Poly& a, uint32_t p) {
    uint64_t rep = 0;
    for (size_t i = a.size(); i-- > 0;) rep = rep * p + a[i];
    return rep;
}

} // namespace

Field FieldSpec::make(uint32_t p, uint32_t degree) {
    require(is_prime(p), errc::non_prime, "characteristic " + std::to_string(p) + " is not prime");
    require(degree >= 1, errc::bad_parameters, "degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < degree; ++i) {
        q *= p;
        require(q <= kMaxFieldSize, errc::degree_too_large,
                "field size p^m exceeds 2^24");
    }

    // Scan monic candidates in low-degree-first lexicographic coefficient
    // order; the constant coefficient varies slowest and is never zero.
    std::vector<uint32_t> c(degree, 0);
    c[0] = 1;
    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    for (;;) {
        Poly f(c.begin(), c.end());
        f.push_back(1);
        if (is_irreducible(f, p)) {
            spec->p_ = p;
            spec->m_ = degree;
            spec->q_ = q;
            spec->modulus_.assign(f.begin(), f.end());
            break;
        }
        // odometer with the last compared digit fastest
        size_t i = degree;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
        require(!(i == size_t(-1) || (i == 0 && c[0] == 0)), errc::internal,
                "no irreducible polynomial found");
        if (c[0] == 0) c[0] = 1; // keep the constant term nonzero
    }
    spec->build_tables();
    return spec;
}

Field FieldSpec::make(uint32_t p, uint32_t degree, const std::vector<uint32_t>& modulus) {
    require(is_prime(p), errc::non_prime, "characteristic " + std::to_string(p) + " is not prime");
    require(modulus.size() == size_t(degree) + 1 && modulus.back() == 1, errc::parse_error,
            "modulus must be monic of the declared degree");
    for (uint32_t ci : modulus) require(ci < p, errc::parse_error, "modulus coefficient out of range");
    uint64_t q = 1;
    for (uint32_t i = 0; i < degree; ++i) {
        q *= p;
        require(q <= kMaxFieldSize, errc::degree_too_large, "field size p^m exceeds 2^24");
    }
    Poly f(modulus.begin(), modulus.end());
    require(is_irreducible(f, p), errc::parse_error, "modulus is not irreducible");
    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->m_ = degree;
    spec->q_ = q;
    spec->modulus_ = modulus;
    spec->build_tables();
    return spec;
}

void FieldSpec::build_tables() {
    // Multiplication by polynomial arithmetic, needed until exp/log exist.
    auto slow_mul = [&](uint64_t a, uint64_t b) -> uint64_t {
        Poly pa = rep_to_poly(a, p_), pb = rep_to_poly(b, p_);
        Poly f(modulus_.begin(), modulus_.end());
        return poly_to_rep(poly_mod(poly_mul(pa, pb, p_), f, p_), p_);
    };
    auto slow_pow = [&](uint64_t x, uint64_t e) -> uint64_t {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, x);
            x = slow_mul(x, x);
            e >>= 1;
        }
        return r;
    };

    // Smallest rep of multiplicative order q-1, certified against the prime
    // factorization of q-1.
    auto factors = prime_factors(q_ - 1);
    generator_ = 0;
    for (uint64_t g = 1; g < q_; ++g) {
        bool ok = true;
        for (uint64_t r : factors)
            if (slow_pow(g, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            generator_ = uint32_t(g);
            break;
        }
    }
    require(generator_ != 0 || q_ == 2, errc::internal, "no primitive element found");
    if (q_ == 2) generator_ = 1;

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    uint64_t x = 1;
    for (uint64_t t = 0; t < q_ - 1; ++t) {
        exp_[t] = uint32_t(x);
        log_[x] = uint32_t(t);
        x = slow_mul(x, generator_);
    }
    require(x == 1, errc::internal, "primitive element order check failed");

    if (q_ <= 512) {
        addt_.assign(q_ * q_, 0);
        for (uint64_t a = 0; a < q_; ++a)
            for (uint64_t b = 0; b < q_; ++b) {
                uint64_t ta = a, tb = b, s = 0, mul = 1;
                while (ta || tb) {
                    s += ((ta % p_) + (tb % p_)) % p_ * mul;
                    mul *= p_;
                    ta /= p_;
                    tb /= p_;
                }
                addt_[a * q_ + b] = uint32_t(s);
            }
    }
}

uint64_t FieldSpec::subfield_size() const {
    require(is_quadratic_tower(), errc::not_quadratic_tower, "field is not a quadratic tower");
    uint64_t q0 = 1;
    for (uint32_t i = 0; i < m_ / 2; ++i) q0 *= p_;
    return q0;
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (!addt_.empty()) return addt_[uint64_t(a) * q_ + b];
    uint64_t s = 0, mul = 1, ta = a, tb = b;
    while (ta || tb) {
        s += ((ta % p_) + (tb % p_)) % p_ * mul;
        mul *= p_;
        ta /= p_;
        tb /= p_;
    }
    return uint32_t(s);
}

uint32_t FieldSpec::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint64_t s = 0, mul = 1, ta = a;
    while (ta) {
        uint64_t d = ta % p_;
        s += (d ? p_ - d : 0) * mul;
        mul *= p_;
        ta /= p_;
    }
    return uint32_t(s);
}

uint32_t FieldSpec::inv(uint32_t a) const {
    require(a != 0, errc::zero_element, "inverse of zero");
    if (a == 1) return 1;
    return exp_[(q_ - 1) - log_[a]];
}

uint32_t FieldSpec::pow(uint32_t x, long long e) const {
    if (x == 0) {
        if (e == 0) return 1; // 0^0 = 1 by convention
        require(e > 0, errc::zero_element, "negative power of zero");
        return 0;
    }
    long long ord = (long long)(q_ - 1);
    long long t = (long long)log_[x] % ord * (e % ord) % ord;
    if (t < 0) t += ord;
    return exp_[t];
}

uint32_t FieldSpec::frob(uint32_t x, uint32_t t) const {
    uint64_t e = 1;
    for (uint32_t i = 0; i < t % m_; ++i) e *= p_;
    return pow(x, (long long)e);
}

uint32_t FieldSpec::conj(uint32_t x) const { return pow(x, (long long)subfield_size()); }

bool FieldSpec::in_subfield(uint32_t x) const { return conj(x) == x; }

uint32_t FieldSpec::norm(uint32_t x) const { return pow(x, (long long)(subfield_size() + 1)); }

uint32_t FieldSpec::dlog(uint32_t x) const {
    require(x != 0, errc::zero_element, "dlog of zero");
    return log_[x];
}

uint32_t FieldSpec::norm_root(uint32_t lambda) const {
    require(lambda != 0, errc::zero_element, "norm root of zero");
    require(in_subfield(lambda), errc::not_in_subfield, "element is not in the subfield");
    uint64_t q0 = subfield_size();
    uint64_t d = q0 + 1;
    uint64_t L = dlog(lambda);
    // L is a multiple of q0+1 exactly because lambda is fixed by x -> x^{q0},
    // so (q0+1)t = L mod (q^2-1) solves to t = L/d mod (q0-1).
    require(L % d == 0, errc::internal, "subfield log not divisible by q+1");
    uint64_t t = q0 > 2 ? (L / d) % (q0 - 1) : 0;
    return exp_[t];
}

uint32_t FieldSpec::tower_alpha() const {
    require(is_quadratic_tower(), errc::not_quadratic_tower, "field is not a quadratic tower");
    return p_; // rep of the adjoined root x
}

std::pair<uint32_t, uint32_t> FieldSpec::split_tower(uint32_t x) const {
    uint32_t alpha = tower_alpha();
    uint32_t denom = sub(alpha, conj(alpha));
    require(denom != 0, errc::internal, "tower basis degenerate");
    uint32_t d = div(sub(x, conj(x)), denom);
    uint32_t c = sub(x, mul(d, alpha));
    return {c, d};
}

Field make_tower_of(uint64_t q) {
    auto [p, e] = prime_power_split(q);
    return FieldSpec::make(p, 2 * e);
}

std::pair<uint32_t, uint32_t> prime_power_split(uint64_t q) {
    require(q >= 2, errc::bad_parameters, "q must be at least 2");
    for (uint64_t p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p == 0) {
            uint32_t e = 0;
            uint64_t t = q;
            while (t % p == 0) {
                t /= p;
                ++e;
            }
            require(t == 1, errc::bad_parameters, std::to_string(q) + " is not a prime power");
            return {uint32_t(p), e};
        }
    }
    fail(errc::bad_parameters, "not a prime power");
}

} // namespace hullsmith
