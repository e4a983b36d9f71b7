#include "hullsmith/kernels.hpp"

#include <algorithm>

namespace hullsmith::kernels {

namespace {

// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<size_t>& idx, size_t n) {
    size_t k = idx.size();
    size_t i = k;
    while (i-- > 0) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

size_t codeword_weight(const FieldSpec& F, const uint32_t* G, size_t k, size_t n,
                       uint64_t message) {
    uint64_t q = F.size();
    // message digits in base q select the row combination
    size_t w = 0;
    std::vector<uint32_t> digits(k);
    for (size_t r = 0; r < k; ++r) {
        digits[r] = uint32_t(message % q);
        message /= q;
    }
    for (size_t col = 0; col < n; ++col) {
        uint32_t acc = 0;
        for (size_t r = 0; r < k; ++r) {
            if (digits[r] == 0) continue;
            acc = F.add(acc, F.mul(digits[r], G[r * n + col]));
        }
        if (acc != 0) ++w;
    }
    return w;
}

} // namespace

namespace {

// destroys the buffer
uint32_t determinant_inplace(const FieldSpec& F, uint32_t* M, size_t k) {
    uint32_t det = 1;
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && M[piv * k + col] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != col) {
            for (size_t j = col; j < k; ++j) std::swap(M[piv * k + j], M[col * k + j]);
            det = F.neg(det);
        }
        uint32_t p = M[col * k + col];
        det = F.mul(det, p);
        uint32_t pinv = F.inv(p);
        for (size_t r = col + 1; r < k; ++r) {
            uint32_t f = M[r * k + col];
            if (f == 0) continue;
            f = F.mul(f, pinv);
            for (size_t j = col; j < k; ++j)
                M[r * k + j] = F.sub(M[r * k + j], F.mul(f, M[col * k + j]));
        }
    }
    return det;
}

} // namespace

uint32_t determinant(const FieldSpec& F, std::vector<uint32_t> M, size_t k) {
    return determinant_inplace(F, M.data(), k);
}

uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t c = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > cap) return cap + 1;
    }
    return c;
}

namespace serial {

std::vector<uint32_t> matmul(const FieldSpec& F, const uint32_t* A, size_t ar, size_t ac,
                             const uint32_t* B, size_t bc) {
    std::vector<uint32_t> C(ar * bc, 0);
    for (size_t i = 0; i < ar; ++i)
        for (size_t l = 0; l < ac; ++l) {
            uint32_t a = A[i * ac + l];
            if (a == 0) continue;
            for (size_t j = 0; j < bc; ++j)
                C[i * bc + j] = F.add(C[i * bc + j], F.mul(a, B[l * bc + j]));
        }
    return C;
}

std::vector<uint32_t> gram(const FieldSpec& F, const uint32_t* G, size_t r, size_t c,
                           uint64_t conj_pow) {
    std::vector<uint32_t> conj(r * c);
    for (size_t i = 0; i < r * c; ++i) conj[i] = F.pow(G[i], (long long)conj_pow);
    std::vector<uint32_t> C(r * r, 0);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            uint32_t acc = 0;
            for (size_t l = 0; l < c; ++l) acc = F.add(acc, F.mul(G[i * c + l], conj[j * c + l]));
            C[i * r + j] = acc;
        }
    return C;
}

bool all_minors_nonsingular(const FieldSpec& F, const uint32_t* G, size_t k, size_t n) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<uint32_t> minor(k * k);
    do {
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c) minor[r * k + c] = G[r * n + idx[c]];
        if (determinant_inplace(F, minor.data(), k) == 0) return false;
    } while (next_combination(idx, n));
    return true;
}

size_t min_weight(const FieldSpec& F, const uint32_t* G, size_t k, size_t n) {
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) total *= F.size();
    size_t best = n + 1;
    for (uint64_t msg = 1; msg < total; ++msg)
        best = std::min(best, codeword_weight(F, G, k, n, msg));
    return best;
}

} // namespace serial

namespace omp {

std::vector<uint32_t> matmul(const FieldSpec& F, const uint32_t* A, size_t ar, size_t ac,
                             const uint32_t* B, size_t bc) {
#ifndef HULLSMITH_HAVE_OPENMP
    return serial::matmul(F, A, ar, ac, B, bc);
#else
    std::vector<uint32_t> C(ar * bc, 0);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)ar; ++i)
        for (size_t l = 0; l < ac; ++l) {
            uint32_t a = A[i * ac + l];
            if (a == 0) continue;
            for (size_t j = 0; j < bc; ++j)
                C[i * bc + j] = F.add(C[i * bc + j], F.mul(a, B[l * bc + j]));
        }
    return C;
#endif
}

std::vector<uint32_t> gram(const FieldSpec& F, const uint32_t* G, size_t r, size_t c,
                           uint64_t conj_pow) {
#ifndef HULLSMITH_HAVE_OPENMP
    return serial::gram(F, G, r, c, conj_pow);
#else
    std::vector<uint32_t> conj(r * c);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)(r * c); ++i)
        conj[i] = F.pow(G[i], (long long)conj_pow);
    std::vector<uint32_t> C(r * r, 0);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)r; ++i)
        for (size_t j = 0; j < r; ++j) {
            uint32_t acc = 0;
            for (size_t l = 0; l < c; ++l) acc = F.add(acc, F.mul(G[i * c + l], conj[j * c + l]));
            C[i * r + j] = acc;
        }
    return C;
#endif
}

bool all_minors_nonsingular(const FieldSpec& F, const uint32_t* G, size_t k, size_t n) {
#ifndef HULLSMITH_HAVE_OPENMP
    return serial::all_minors_nonsingular(F, G, k, n);
#else
    // Combinations are generated serially in batches; each batch is tested in
    // parallel. The answer is a pure AND so the split cannot change it.
    constexpr size_t kBatch = 8192;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<std::vector<size_t>> batch;
    batch.reserve(kBatch);
    bool more = true;
    while (more) {
        batch.clear();
        do {
            batch.push_back(idx);
            more = next_combination(idx, n);
        } while (more && batch.size() < kBatch);
        bool ok = true;
#pragma omp parallel reduction(&& : ok)
        {
            std::vector<uint32_t> minor(k * k);
#pragma omp for schedule(dynamic, 64)
            for (long long b = 0; b < (long long)batch.size(); ++b) {
                if (!ok) continue;
                for (size_t r = 0; r < k; ++r)
                    for (size_t c = 0; c < k; ++c) minor[r * k + c] = G[r * n + batch[b][c]];
                if (determinant_inplace(F, minor.data(), k) == 0) ok = false;
            }
        }
        if (!ok) return false;
    }
    return true;
#endif
}

size_t min_weight(const FieldSpec& F, const uint32_t* G, size_t k, size_t n) {
#ifndef HULLSMITH_HAVE_OPENMP
    return serial::min_weight(F, G, k, n);
#else
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) total *= F.size();
    size_t best = n + 1;
#pragma omp parallel for schedule(dynamic, 4096) reduction(min : best)
    for (long long msg = 1; msg < (long long)total; ++msg)
        best = std::min(best, codeword_weight(F, G, k, n, (uint64_t)msg));
    return best;
#endif
}

} // namespace omp

std::vector<uint32_t> matmul(const FieldSpec& F, const uint32_t* A, size_t ar, size_t ac,
                             const uint32_t* B, size_t bc) {
    if (ar * ac * bc >= 1u << 15) return omp::matmul(F, A, ar, ac, B, bc);
    return serial::matmul(F, A, ar, ac, B, bc);
}

std::vector<uint32_t> gram(const FieldSpec& F, const uint32_t* G, size_t r, size_t c,
                           uint64_t conj_pow) {
    if (r * r * c >= 1u << 15) return omp::gram(F, G, r, c, conj_pow);
    return serial::gram(F, G, r, c, conj_pow);
}

bool all_minors_nonsingular(const FieldSpec& F, const uint32_t* G, size_t k, size_t n) {
    if (binomial_capped(n, k, 1u << 14) > (1u << 14))
        return omp::all_minors_nonsingular(F, G, k, n);
    return serial::all_minors_nonsingular(F, G, k, n);
}

size_t min_weight(const FieldSpec& F, const uint32_t* G, size_t k, size_t n) {
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) total *= F.size();
    if (total >= 1u << 16) return omp::min_weight(F, G, k, n);
    return serial::min_weight(F, G, k, n);
}

} // namespace hullsmith::kernels
