#pragma once

#include <optional>

#include "hullsmith/grs.hpp"

namespace hullsmith {

/// Result of one propagation-rule application. The computed hull is always
/// re-derived from the output code's own Gram matrix and checked against the
/// predicted value at construction: equality for exact rules, >= for bounds.
struct RuleOutcome {
    std::optional<GrsCode> grs; // presentation, when one survives the rule
    LinearCode code;
    HullReport computed;
    int predicted_hull_lb = 0;
    bool predicted_exact = false;
    std::string rule_tag;
    /// Set when a bound-only case lands strictly below the statement's range
    /// top; recorded for reporting instead of asserting either reading.
    bool flagged_below_statement = false;
};

/// Length +1 via the infinity column: GRS_k(a, xi v, infinity) with
/// xi^{q+1} = lambda^{-1}; Gram rank becomes rank(G G^dagger + S_lambda).
RuleOutcome extend_length_infty(const GrsCode& c, uint32_t lambda);

/// Length +1 via the zero point: GRS_k((0,a), (xi,v)) with xi^{q+1} = lambda;
/// needs n < q^2. A shift is applied silently when 0 is already in use.
RuleOutcome extend_length_zero(const GrsCode& c, uint32_t lambda);

enum class DimDirection { up, down };

/// Dimension +1 by adding the next row g_{k1+k} (up) or g_{k1-1} (down).
/// Classifies which case applies and records the exact value or bound.
RuleOutcome increase_dim(const GrsCode& c, DimDirection dir);

/// Length +1 and dimension +1 at once: GRS_{k+1}(a, xi v, infinity) with
/// xi^{q+1} = lambda^{-1}; the Gram is the bordered matrix with corner
/// g_k g_k^dagger + lambda.
RuleOutcome extend_both(const GrsCode& c, uint32_t lambda);

/// extend_both with lambda = -g_k g_k^dagger, the corner-cancelling choice.
RuleOutcome extend_both_cancelling(const GrsCode& c);

/// Self-orthogonal [n+1, k] EGRS code from an input whose hull is spanned by
/// the first k-1 rows (Gram zero outside the bottom-right corner).
GrsCode self_orthogonal_extension(const GrsCode& c);

/// Re-present an EGRS code of length <= q^2 as a plain GRS code on the same
/// rowspace by moving the infinity point to an unused finite point:
/// with y = 1/(x - c) and g(y) = y^{k-1} f(c + 1/y),
///   v_i f(a_i) = v_i b_i^{1-k} g(b_i)  and  f_{k-1} = g(0).
/// Verified by rowspace equality at construction.
GrsCode egrs_to_grs(const GrsCode& c);

/// Monomially equivalent code with hull dimension exactly target_s, built by
/// repeated single-coordinate scalings, each certified by a Gram rank
/// recomputation. Falls back to two-coordinate moves before giving up.
struct ReduceResult {
    LinearCode code;
    std::optional<GrsCode> grs;
    HullReport final_hull;
    std::vector<std::string> steps;
};
ReduceResult hull_reduce(const LinearCode& c, int target_s, Inner inner);
ReduceResult hull_reduce(const GrsCode& c, int target_s, Inner inner);

/// q x q block view of the q^2 x q^2 full-field Gram matrix together with the
/// fold identities that collapse every entry to a pair product g_s g_t^dagger
/// with 0 <= s,t < q.
class GramBlocks {
  public:
    explicit GramBlocks(const GrsCode& full_field_code);

    uint32_t q() const { return q_; }
    /// A_{i,j}[r][c] = g_{i+r} g_{j+c}^dagger.
    FFMatrix block(uint32_t i, uint32_t j) const;
    /// Canonical (s,t) in [0,q)^2 with qs+t = qx+y modulo q^2-1.
    std::pair<uint32_t, uint32_t> canonical(uint64_t x, uint64_t y) const;
    /// Entrywise check of g_i g_j^dagger = g_{i-q} g_{j+1}^dagger and the
    /// mirrored identity over the stated index ranges.
    bool validate_folds() const;
    uint32_t pair(long i, long j) const;

  private:
    GrsCode code_;
    uint32_t q_ = 0;
};

GramBlocks full_gram_blocks(const GrsCode& c);

/// Lower bound on the reachable hull dimension when growing a self-orthogonal
/// [n, k'] code to dimension k: 2k'-k for k <= q, else
/// max(2k'-k, k+4k'-4q). Negative values are clamped and flagged vacuous.
struct Bound2q {
    int value = 0;
    bool vacuous = false;
};
Bound2q hull_bound_2q(int n, int k, int k_prime, uint32_t q);

/// Rule chains used by the corollaries and the witness pipeline; every step
/// is one verified rule application (plus the silent shifts / EGRS
/// re-presentation needed to stay inside the rules' preconditions).
GrsCode extend_length_chain(const GrsCode& c, int i);
GrsCode increase_dim_chain(const GrsCode& c, int i);
GrsCode extend_both_chain(const GrsCode& c, int i);

} // namespace hullsmith
