#pragma once

#include <string>
#include <vector>

#include "hullsmith/eaqecc.hpp"

namespace hullsmith::verify {

struct Report {
    std::string name;
    bool pass = true;
    std::vector<std::string> notes; // counterexamples and context on failure

    void check(bool ok, const std::string& note) {
        if (!ok) {
            pass = false;
            notes.push_back(note);
        }
    }
};

/// Full-field code: Gram zero outside the bottom-right corner, hull q-1.
Report lemma_q22(uint32_t q);
/// Coset family patterns, both parities of h are checked empirically.
Report lemma_h1(uint32_t q, uint32_t h);
Report lemma_2h1(uint32_t q, uint32_t h);
/// Randomized cross-checks of the length extensions against the
/// subspace-intersection hull route.
Report prop_grs1(uint32_t q, int trials, uint64_t seed);
/// Dimension increase: case classification and exact-case predictions.
Report prop_3(uint32_t q, int trials, uint64_t seed);
Report prop_4(uint32_t q, int trials, uint64_t seed);
/// Self-orthogonal [q^2+1, q] extension, exact zero Gram.
Report theorem_grs1(uint32_t q);
/// Golden table reproduction: the enumeration must cover every tuple in the
/// reference CSV (rows are range-encoded quadrant templates).
Report tables(const FamilySpec& spec, const std::string& golden_csv_path);

/// Expanded golden tuples from a reference CSV row file.
std::vector<EaqeccParams> load_golden_tuples(const std::string& path, uint32_t q);

} // namespace hullsmith::verify
