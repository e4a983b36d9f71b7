#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hullsmith/matrix.hpp"

namespace hullsmith {

/// Generalized Reed-Solomon code presentation: distinct evaluation points a,
/// nonzero column multipliers v, dimension k, power offset k1 and an optional
/// infinity column carrying the top coefficient.
struct GrsCode {
    Field field;
    std::vector<uint32_t> a;
    std::vector<uint32_t> v;
    int k = 1;
    int k1 = 0;
    bool extended = false;

    int n() const { return int(a.size()); }
    int length() const { return n() + (extended ? 1 : 0); }
    void validate() const;
};

/// A code given only by a full-row-rank generator matrix. mds_structural
/// records that the code is monomially equivalent to a GRS/EGRS code, which
/// keeps the n-k+1 distance certificate valid after coordinate scalings.
struct LinearCode {
    FFMatrix generator;
    bool mds_structural = false;

    int n() const { return int(generator.cols()); }
    int k() const { return int(generator.rows()); }
};

struct HullReport {
    Inner inner;
    int gram_rank = 0;
    int hull_dim = 0;
};

/// g_i = (v_1 a_1^i, ..., v_n a_n^i), infinity coordinate appended for
/// extended codes (1 exactly on the top row i = k1+k-1).
std::vector<uint32_t> grs_row(const GrsCode& c, long i);

/// The Hermitian pair product g_i g_j^dagger.
uint32_t pair_product(const GrsCode& c, long i, long j);

FFMatrix generator_matrix(const GrsCode& c);
LinearCode as_linear(const GrsCode& c);

/// Hull dimension from the Gram rank: dim = k - rank(G op(G)).
HullReport hull(const FFMatrix& G, Inner inner);
HullReport hull(const GrsCode& c, Inner inner);
HullReport hull(const LinearCode& c, Inner inner);

/// Second route: dim(rowspace intersect dual rowspace), used to cross-check
/// the Gram computation.
int hull_dim_by_intersection(const FFMatrix& G, Inner inner);

/// Basis of Hull(C) = C intersect C^perp as rows.
FFMatrix hull_basis(const FFMatrix& G, Inner inner);

LinearCode dual(const LinearCode& c, Inner inner = Inner::euclidean());
LinearCode hermitian_dual(const LinearCode& c);

enum class DistanceMode { exhaustive, minor_certificate, structural };

struct DistanceReport {
    int d = 0;
    DistanceMode mode = DistanceMode::structural;
    bool mds = false;
    std::string certificate;
};

inline constexpr uint64_t kExhaustiveBound = uint64_t(1) << 24;
inline constexpr uint64_t kMinorBound = 1000000;

DistanceReport min_distance(const LinearCode& c, DistanceMode mode);
DistanceReport min_distance(const GrsCode& c, DistanceMode mode);

/// GRS_k(a,v) = GRS_k(alpha a + b, mu v); for extended codes the multiplier
/// is forced to alpha^{1-k} v.
GrsCode affine_reparam(const GrsCode& c, uint32_t alpha, uint32_t b, uint32_t mu);

/// Multiply one coordinate by gamma. The GRS overload keeps the presentation
/// (position must not be the infinity column).
GrsCode scale_coordinate(const GrsCode& c, size_t pos, uint32_t gamma);
LinearCode scale_coordinate(const LinearCode& c, size_t pos, uint32_t gamma);

/// Equal code with k1 folded into the multipliers (v_i <- v_i a_i^{k1}).
GrsCode normalize_k1(const GrsCode& c);

/// Equal code shifted so that 0 is not an evaluation point; smallest shift b
/// in rep order. Requires n < q.
GrsCode shift_away_zero(const GrsCode& c, uint32_t* used_b = nullptr);

/// Deterministic random GRS code for randomized suites.
GrsCode random_grs(const Field& f, int n, int k, std::mt19937& rng);

} // namespace hullsmith
