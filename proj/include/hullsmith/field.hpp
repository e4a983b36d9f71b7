#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hullsmith/errors.hpp"

namespace hullsmith {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// Exact arithmetic in GF(p^m). An element is an integer rep in [0, p^m):
/// rep = sum c_i p^i encodes the polynomial-basis coordinates c_i.
///
/// When m is even the field doubles as the quadratic tower GF(q^2) with
/// q = p^{m/2}; the subfield GF(q) is {x : x^q = x} and is never built as a
/// separate object.
class FieldSpec {
  public:
    /// Deterministic construction: modulus is the first monic irreducible of
    /// the given degree in low-degree-first lexicographic coefficient order
    /// (constant term scanned first, never zero); the primitive element is the
    /// smallest rep of full multiplicative order.
    static Field make(uint32_t p, uint32_t degree);

    /// Rebuilds from an explicit modulus (descriptor loading); the modulus is
    /// re-verified irreducible.
    static Field make(uint32_t p, uint32_t degree, const std::vector<uint32_t>& modulus);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t size() const { return q_; } // p^m
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    uint32_t generator() const { return generator_; }

    bool is_quadratic_tower() const { return m_ % 2 == 0 && m_ > 0; }
    /// q for the tower GF(q^2); requires even m.
    uint64_t subfield_size() const;

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint64_t s = uint64_t(log_[a]) + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    /// x^e with the convention 0^0 = 1; negative e requires x != 0.
    uint32_t pow(uint32_t x, long long e) const;
    /// Frobenius x -> x^{p^t}.
    uint32_t frob(uint32_t x, uint32_t t) const;
    /// Hermitian conjugate x -> x^q on the tower.
    uint32_t conj(uint32_t x) const;
    bool in_subfield(uint32_t x) const;
    /// Norm to the subfield, x -> x^{q+1}.
    uint32_t norm(uint32_t x) const;

    /// Discrete log base the primitive element; table backed.
    uint32_t dlog(uint32_t x) const;
    uint32_t exp(uint64_t t) const { return exp_[t % (q_ - 1)]; }

    /// Smallest-exponent xi = theta^t with xi^{q+1} = lambda, for lambda in
    /// the subfield GF(q)*.
    uint32_t norm_root(uint32_t lambda) const;

    /// The adjoined root alpha (rep p); {1, alpha} is a basis of GF(q^2)
    /// over GF(q) used to split tower constraints.
    uint32_t tower_alpha() const;
    /// x = first + second*alpha with both parts in the subfield.
    std::pair<uint32_t, uint32_t> split_tower(uint32_t x) const;

    bool same_field(const FieldSpec& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

  private:
    FieldSpec() = default;
    void build_tables();

    uint32_t p_ = 0, m_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_; // m+1 coefficients, low degree first, monic
    uint32_t generator_ = 0;
    std::vector<uint32_t> log_;   // index by rep, log_[0] unused
    std::vector<uint32_t> exp_;   // index by exponent in [0, q-1)
    std::vector<uint32_t> addt_;  // q*q add table for small fields, else empty
};

/// Required by make_field's precondition p^degree <= 2^24.
inline constexpr uint64_t kMaxFieldSize = uint64_t(1) << 24;

/// Convenience: the quadratic tower GF(q^2) for a prime power q = p^e.
Field make_tower_of(uint64_t q);

/// Factors q = p^e; fails with bad_parameters if q is not a prime power.
std::pair<uint32_t, uint32_t> prime_power_split(uint64_t q);

} // namespace hullsmith
