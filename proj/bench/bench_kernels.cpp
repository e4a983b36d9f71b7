// Wall-clock comparison of the serial reference kernels against the OpenMP
// versions. Build with OpenMP to see the parallel numbers; without it the
// omp entry points fall back to serial and the ratios sit near 1.

#include <chrono>
#include <cstdio>
#include <random>

#include "hullsmith/kernels.hpp"

using namespace hullsmith;

namespace {

double seconds(auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<uint32_t> random_entries(const Field& f, size_t n, std::mt19937& rng) {
    std::vector<uint32_t> v(n);
    for (auto& x : v) x = rng() % f->size();
    return v;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.4fs %10.4fs %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    std::mt19937 rng(1);
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "omp", "speedup");

    {
        Field f = FieldSpec::make(2, 6);
        size_t n = 256;
        auto A = random_entries(f, n * n, rng);
        auto B = random_entries(f, n * n, rng);
        std::vector<uint32_t> r1, r2;
        double s = seconds([&] { r1 = kernels::serial::matmul(*f, A.data(), n, n, B.data(), n); });
        double p = seconds([&] { r2 = kernels::omp::matmul(*f, A.data(), n, n, B.data(), n); });
        if (r1 != r2) std::printf("matmul mismatch!\n");
        row("matmul 256x256 GF(64)", s, p);
    }
    {
        Field f = make_tower_of(11);
        size_t r = 40, c = 80;
        auto G = random_entries(f, r * c, rng);
        std::vector<uint32_t> g1, g2;
        double s = seconds([&] {
            for (int i = 0; i < 200; ++i) g1 = kernels::serial::gram(*f, G.data(), r, c, 11);
        });
        double p = seconds([&] {
            for (int i = 0; i < 200; ++i) g2 = kernels::omp::gram(*f, G.data(), r, c, 11);
        });
        if (g1 != g2) std::printf("gram mismatch!\n");
        row("gram 40x80 GF(121) x200", s, p);
    }
    {
        Field f = make_tower_of(7); // 48 nonzero elements, room for 30 distinct points
        size_t k = 6, n = 30;       // C(30,6) = 593775 minors
        std::vector<uint32_t> G(k * n);
        // Vandermonde rows on distinct points: a genuine MDS instance, so the
        // sweep runs to completion instead of bailing on a singular minor.
        for (size_t r0 = 0; r0 < k; ++r0)
            for (size_t c0 = 0; c0 < n; ++c0)
                G[r0 * n + c0] = f->pow(f->exp(c0), (long long)r0);
        bool b1 = false, b2 = true;
        double s = seconds([&] { b1 = kernels::serial::all_minors_nonsingular(*f, G.data(), k, n); });
        double p = seconds([&] { b2 = kernels::omp::all_minors_nonsingular(*f, G.data(), k, n); });
        if (b1 != b2 || !b1) std::printf("minors mismatch!\n");
        row("minors [30,6] GF(49)", s, p);
    }
    {
        Field f = make_tower_of(3);
        size_t k = 7, n = 9; // 9^7 = 4.78M codewords
        auto G = random_entries(f, k * n, rng);
        size_t w1 = 0, w2 = 0;
        double s = seconds([&] { w1 = kernels::serial::min_weight(*f, G.data(), k, n); });
        double p = seconds([&] { w2 = kernels::omp::min_weight(*f, G.data(), k, n); });
        if (w1 != w2) std::printf("min_weight mismatch!\n");
        row("min_weight [9,7] GF(9)", s, p);
    }
    return 0;
}
