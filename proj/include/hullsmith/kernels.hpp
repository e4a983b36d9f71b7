#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hullsmith/field.hpp"

namespace hullsmith::kernels {

/// Serial reference kernels. These are the semantics; the omp versions must
/// agree with them bit for bit (all reductions here are exact, so schedule
/// order never matters).
namespace serial {

/// C = A * B, row major, A is ar x ac, B is ac x bc.
std::vector<uint32_t> matmul(const FieldSpec& F, const uint32_t* A, size_t ar, size_t ac,
                             const uint32_t* B, size_t bc);

/// Gram-style product C[i][j] = sum_l G[i][l] * G[j][l]^conj_pow for the
/// inner products written as transpose / dagger / double dagger.
std::vector<uint32_t> gram(const FieldSpec& F, const uint32_t* G, size_t r, size_t c,
                           uint64_t conj_pow);

/// True iff every k x k minor of the k x n matrix G is nonsingular.
bool all_minors_nonsingular(const FieldSpec& F, const uint32_t* G, size_t k, size_t n);

/// Minimum Hamming weight over the q^k - 1 nonzero codewords of the code
/// generated by G (k x n). Caller enforces the q^k <= 2^24 feasibility bound.
size_t min_weight(const FieldSpec& F, const uint32_t* G, size_t k, size_t n);

} // namespace serial

namespace omp {

std::vector<uint32_t> matmul(const FieldSpec& F, const uint32_t* A, size_t ar, size_t ac,
                             const uint32_t* B, size_t bc);
std::vector<uint32_t> gram(const FieldSpec& F, const uint32_t* G, size_t r, size_t c,
                           uint64_t conj_pow);
bool all_minors_nonsingular(const FieldSpec& F, const uint32_t* G, size_t k, size_t n);
size_t min_weight(const FieldSpec& F, const uint32_t* G, size_t k, size_t n);

} // namespace omp

/// Dispatching entry points used by the library; pick the omp kernels when
/// built with OpenMP and the problem is big enough to pay for the fork.
std::vector<uint32_t> matmul(const FieldSpec& F, const uint32_t* A, size_t ar, size_t ac,
                             const uint32_t* B, size_t bc);
std::vector<uint32_t> gram(const FieldSpec& F, const uint32_t* G, size_t r, size_t c,
                           uint64_t conj_pow);
bool all_minors_nonsingular(const FieldSpec& F, const uint32_t* G, size_t k, size_t n);
size_t min_weight(const FieldSpec& F, const uint32_t* G, size_t k, size_t n);

/// Determinant of a k x k matrix (copy taken), Gaussian elimination.
uint32_t determinant(const FieldSpec& F, std::vector<uint32_t> M, size_t k);

/// Number of k-subsets of n, saturating at cap+1.
uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap);

} // namespace hullsmith::kernels
