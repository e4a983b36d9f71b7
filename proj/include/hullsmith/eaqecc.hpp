#pragma once

#include <map>
#include <string>
#include <vector>

#include "hullsmith/families.hpp"
#include "hullsmith/rules.hpp"

namespace hullsmith {

enum class MdsTag { by_eq1, by_eq3, not_mds };
std::string to_string(MdsTag t);

/// [[n, k, d; c]]_q parameter tuple with its bound verdict.
struct EaqeccParams {
    uint32_t q = 0;
    int n = 0, k = 0, d = 0, c = 0;
    MdsTag mds = MdsTag::not_mds;
    bool degenerate = false; // k = 0 tuples are kept but flagged

    bool operator<(const EaqeccParams& o) const;
    bool same_tuple(const EaqeccParams& o) const {
        return n == o.n && k == o.k && d == o.d && c == o.c;
    }
};

/// k <= c + max(0, n-2d+2); k <= n-d+1; and the third bound when 2d >= n+2.
bool satisfies_bounds(const EaqeccParams& p);
MdsTag classify_mds(uint32_t q, int n, int k, int d, int c);
EaqeccParams make_params(uint32_t q, int n, int k, int d, int c);

/// The Hermitian construction: an [n,k,d] code over GF(q^2) with hull
/// dimension l yields [[n, k-l, d; n-k-l]]_q and [[n, n-k-l, d_perp; k-l]]_q.
/// For an MDS input at least one of the two meets its bound with equality.
std::pair<EaqeccParams, EaqeccParams> hermitian_construction(uint32_t q, int n, int k, int d,
                                                             int d_perp, int hull_dim);

/// The three propagation rules on [[n, n-k-l, k+1; k-l]] inputs.
std::vector<EaqeccParams> rule_longer_length(int n, int k, int l, uint32_t q);
std::vector<EaqeccParams> rule_larger_distance(int n, int k, int l, uint32_t q);
std::vector<EaqeccParams> rule_both(int n, int k, int l, uint32_t q);

/// One enumerated tuple with the provenance that generated it first.
struct TableTuple {
    EaqeccParams p;
    std::vector<int> shapes; // ascending, deduplicated
    int prov_shape = 0;      // shape of the stored provenance below
    int t = 0, k = 0;
    long l = 0;
    int i = 0, s = 0;
    bool witnessable = false;
    bool witnessed = false;
};

/// All six parameter shapes over the family's (t, k, l, i, s) ranges,
/// deduplicated on (n, k, d, c) and sorted.
std::vector<TableTuple> theorem_q22_enumerate(const FamilySpec& spec);

/// Distance-range / entanglement summary rows; c is linear in d on each row.
struct SummaryRow {
    int t = 0;
    std::string branch;
    int d_lo = 0, d_hi = 0;
    long c_lo = 0, c_hi = 0;
};
std::vector<SummaryRow> mds_summary_table(const FamilySpec& spec);

/// Certify tuples by actually building codes: family code, rule chains,
/// hull reduction to the exact target, then the Hermitian construction.
/// Only non-negative i provenances are constructible; negative i (shortening)
/// tuples stay formula-only.
struct WitnessReport {
    size_t total = 0;
    size_t witnessable = 0;
    size_t reproduced = 0;
    std::vector<std::string> failures;
};
WitnessReport witness_tuples(const FamilySpec& spec, std::vector<TableTuple>& tuples);

std::string tuples_to_csv(const FamilySpec& spec, const std::vector<TableTuple>& tuples);

} // namespace hullsmith
