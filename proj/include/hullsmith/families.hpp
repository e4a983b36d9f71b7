#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hullsmith/grs.hpp"

namespace hullsmith {

/// The three explicit code families, all of dimension q over GF(q^2):
///   1 full_field: n = q^2, every field element evaluated.
///   2 coset_h:    n = (h-1)(q^2-1)/h for h | q+1, h >= 2.
///   3 coset_2h:   n = (2h-1)(q^2-1)/(2h) for odd q with (q+1)/h odd >= 3.
struct FamilySpec {
    int family = 1;
    uint32_t q = 0;
    uint32_t h = 0; // unused for family 1

    long n() const;
    void validate() const;
    Field tower() const;
    /// Row indices (i, j) whose pair products stay nonzero; empty pattern is
    /// the self-orthogonal part of the first q-1 rows.
    std::vector<std::pair<int, int>> exceptional_pairs() const;
};

/// All-nonzero subfield multipliers u with sum_l u_l a_l^{qi+j} = 0 for every
/// constrained pair (i, j). Constraints are split over the subfield via the
/// basis {1, alpha}; the kernel is then searched for an all-nonzero vector
/// that also keeps the must_be_nonzero pair products nonzero.
std::vector<uint32_t> solve_selforth_multipliers(
    const Field& f, const std::vector<uint32_t>& a,
    const std::vector<std::pair<int, int>>& constraints,
    const std::vector<std::pair<int, int>>& must_be_nonzero);

GrsCode build_full_field(uint32_t q);
GrsCode build_coset_h(uint32_t q, uint32_t h);
GrsCode build_coset_2h(uint32_t q, uint32_t h);
GrsCode build_family(const FamilySpec& spec);

/// Branch lookup for the hull lower bound l at dimension k.
struct HullBound {
    int t = 0;
    long l = 0;
    std::string branch;
    bool ambiguous = false;         // more than one branch matched; largest l wins
    bool beyond_floor_range = false; // family 3 with t above floor(n/2q)
};
HullBound hull_lb_formula(const FamilySpec& spec, int k);

/// Number of nonzero entries in the k-th leading principal Gram submatrix
/// (family 1), or of entries carrying the first exceptional value
/// (families 2-3, the count the rank bound doubles).
long census_nonzero(const FamilySpec& spec, int k);

/// The proof-side census value; exact on the equality branches, an upper
/// bound on the top branch (is_exact reports which).
long expected_census(const FamilySpec& spec, int k, bool* is_exact = nullptr);

struct FamilyCodeResult {
    GrsCode code;
    HullBound bound;
    HullReport hull_report;
    std::string mds_certificate;
};

/// The k-dimensional family code (first k rows) with its verified hull.
FamilyCodeResult build_family_code(const FamilySpec& spec, int k);

/// Hull sweep over 1 <= k <= n/2, one row per k.
struct SweepRow {
    int family;
    uint32_t q, h;
    long n;
    int k, t;
    long l_formula;
    int hull_computed;
    std::string mds_certificate;
};
std::vector<SweepRow> family_sweep(const FamilySpec& spec, int k_max = 0);

} // namespace hullsmith
