#include "hullsmith/grs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hullsmith/kernels.hpp"

namespace hullsmith {

void GrsCode::validate() const {
    require(field != nullptr, errc::bad_parameters, "code has no field");
    require(!a.empty() && a.size() == v.size(), errc::bad_parameters,
            "evaluation and multiplier vectors must match");
    require(k >= 1 && k <= length(), errc::bad_parameters, "dimension out of range");
    std::set<uint32_t> seen;
    for (uint32_t x : a) {
        require(x < field->size(), errc::bad_parameters, "evaluation point outside field");
        require(seen.insert(x).second, errc::bad_parameters, "evaluation points must be distinct");
    }
    for (uint32_t x : v) require(x != 0, errc::bad_parameters, "multipliers must be nonzero");
    if (k1 != 0)
        for (uint32_t x : a)
            require(x != 0, errc::negative_power_with_zero_point,
                    "nonzero power offset needs nonzero evaluation points");
}

std::vector<uint32_t> grs_row(const GrsCode& c, long i) {
    const FieldSpec& F = *c.field;
    std::vector<uint32_t> row(c.length(), 0);
    for (int l = 0; l < c.n(); ++l) {
        if (i < 0)
            require(c.a[l] != 0, errc::negative_power_with_zero_point,
                    "negative power at the zero point");
        row[l] = F.mul(c.v[l], F.pow(c.a[l], i));
    }
    if (c.extended) row[c.n()] = (i == long(c.k1) + c.k - 1) ? 1 : 0;
    return row;
}

uint32_t pair_product(const GrsCode& c, long i, long j) {
    const FieldSpec& F = *c.field;
    auto gi = grs_row(c, i), gj = grs_row(c, j);
    uint32_t acc = 0;
    for (size_t l = 0; l < gi.size(); ++l) acc = F.add(acc, F.mul(gi[l], F.conj(gj[l])));
    return acc;
}

FFMatrix generator_matrix(const GrsCode& c) {
    c.validate();
    FFMatrix G(c.field, c.k, c.length());
    for (int r = 0; r < c.k; ++r) {
        auto row = grs_row(c, long(c.k1) + r);
        std::copy(row.begin(), row.end(), G.data() + size_t(r) * c.length());
    }
    return G;
}

LinearCode as_linear(const GrsCode& c) { return LinearCode{generator_matrix(c), true}; }

HullReport hull(const FFMatrix& G, Inner inner) {
    int gr = int(rank(gram_matrix(G, inner)));
    return HullReport{inner, gr, int(G.rows()) - gr};
}

HullReport hull(const GrsCode& c, Inner inner) { return hull(generator_matrix(c), inner); }
HullReport hull(const LinearCode& c, Inner inner) { return hull(c.generator, inner); }

int hull_dim_by_intersection(const FFMatrix& G, Inner inner) {
    return int(intersection_dim(G, dual_basis(G, inner)));
}

FFMatrix hull_basis(const FFMatrix& G, Inner inner) {
    // Solutions u of (G op(G)) (u^{p^e})^T = 0 give the hull codewords u G.
    const FieldSpec& F = *G.field();
    uint32_t e = inner.galois_e(F);
    FFMatrix K = right_kernel(gram_matrix(G, inner)); // rows are u^{p^e}
    FFMatrix U = K.frob_entrywise((F.m() - e) % F.m());
    return U.mul(G);
}

LinearCode dual(const LinearCode& c, Inner inner) {
    return LinearCode{dual_basis(c.generator, inner), false};
}

LinearCode hermitian_dual(const LinearCode& c) { return dual(c, Inner::hermitian()); }

namespace {

DistanceReport distance_of_matrix(const FFMatrix& G, bool structural_ok, DistanceMode mode) {
    const FieldSpec& F = *G.field();
    size_t k = G.rows(), n = G.cols();
    DistanceReport rep;
    rep.mode = mode;
    switch (mode) {
        case DistanceMode::exhaustive: {
            uint64_t total = 1;
            bool feasible = true;
            for (size_t i = 0; i < k && feasible; ++i) {
                total *= F.size();
                if (total > kExhaustiveBound) feasible = false;
            }
            require(feasible, errc::mode_infeasible,
                    "exhaustive enumeration infeasible: q^k > 2^24");
            rep.d = int(kernels::min_weight(F, G.data(), k, n));
            rep.mds = rep.d == int(n - k + 1);
            rep.certificate = "exhaustive";
            return rep;
        }
        case DistanceMode::minor_certificate: {
            require(kernels::binomial_capped(n, k, kMinorBound) <= kMinorBound,
                    errc::mode_infeasible, "minor certificate infeasible: C(n,k) > 10^6");
            bool ok = kernels::all_minors_nonsingular(F, G.data(), k, n);
            rep.mds = ok;
            rep.d = ok ? int(n - k + 1) : 0;
            rep.certificate = ok ? "all k x k minors nonsingular" : "singular minor found";
            return rep;
        }
        case DistanceMode::structural: {
            require(structural_ok, errc::unknown_distance,
                    "no structural distance certificate for this code");
            rep.d = int(n - k + 1);
            rep.mds = true;
            rep.certificate = "GRS/EGRS by construction";
            return rep;
        }
    }
    fail(errc::internal, "bad distance mode");
}

} // namespace

DistanceReport min_distance(const LinearCode& c, DistanceMode mode) {
    return distance_of_matrix(c.generator, c.mds_structural, mode);
}

DistanceReport min_distance(const GrsCode& c, DistanceMode mode) {
    return distance_of_matrix(generator_matrix(c), true, mode);
}

GrsCode affine_reparam(const GrsCode& c, uint32_t alpha, uint32_t b, uint32_t mu) {
    require(alpha != 0 && mu != 0, errc::zero_scale, "affine reparametrization needs nonzero scale");
    require(c.k1 == 0, errc::bad_parameters, "affine reparametrization works on k1 = 0 codes");
    const FieldSpec& F = *c.field;
    GrsCode out = c;
    for (int l = 0; l < c.n(); ++l) out.a[l] = F.add(F.mul(alpha, c.a[l]), b);
    uint32_t factor = c.extended ? F.pow(alpha, 1 - (long long)c.k) : mu;
    for (int l = 0; l < c.n(); ++l) out.v[l] = F.mul(factor, c.v[l]);
    return out;
}

GrsCode scale_coordinate(const GrsCode& c, size_t pos, uint32_t gamma) {
    require(pos < size_t(c.n()), errc::bad_position,
            "GRS coordinate scaling must avoid the infinity column");
    require(gamma != 0, errc::zero_scale, "scaling by zero");
    GrsCode out = c;
    out.v[pos] = c.field->mul(c.v[pos], gamma);
    return out;
}

LinearCode scale_coordinate(const LinearCode& c, size_t pos, uint32_t gamma) {
    return LinearCode{c.generator.scale_col(pos, gamma), c.mds_structural};
}

GrsCode normalize_k1(const GrsCode& c) {
    if (c.k1 == 0) return c;
    const FieldSpec& F = *c.field;
    GrsCode out = c;
    for (int l = 0; l < c.n(); ++l) out.v[l] = F.mul(c.v[l], F.pow(c.a[l], c.k1));
    out.k1 = 0;
    return out;
}

GrsCode shift_away_zero(const GrsCode& c, uint32_t* used_b) {
    require(c.k1 == 0, errc::bad_parameters, "shift works on k1 = 0 codes");
    bool has_zero = std::find(c.a.begin(), c.a.end(), 0u) != c.a.end();
    if (!has_zero) {
        if (used_b) *used_b = 0;
        return c;
    }
    const FieldSpec& F = *c.field;
    require(uint64_t(c.n()) < F.size(), errc::field_full, "all field elements already used");
    std::set<uint32_t> pts(c.a.begin(), c.a.end());
    for (uint32_t b = 1; b < F.size(); ++b) {
        // a + b avoids zero iff -b is not an evaluation point
        if (!pts.count(F.neg(b))) {
            if (used_b) *used_b = b;
            return affine_reparam(c, 1, b, 1);
        }
    }
    fail(errc::internal, "no shift found");
}

GrsCode random_grs(const Field& f, int n, int k, std::mt19937& rng) {
    require(n >= 1 && uint64_t(n) <= f->size() && k >= 1 && k <= n, errc::bad_parameters,
            "random code shape out of range");
    std::vector<uint32_t> pool(f->size());
    std::iota(pool.begin(), pool.end(), 0u);
    std::shuffle(pool.begin(), pool.end(), rng);
    GrsCode c;
    c.field = f;
    c.a.assign(pool.begin(), pool.begin() + n);
    c.v.resize(n);
    for (int i = 0; i < n; ++i)
        c.v[i] = uint32_t(1 + rng() % (f->size() - 1));
    c.k = k;
    return c;
}

} // namespace hullsmith
