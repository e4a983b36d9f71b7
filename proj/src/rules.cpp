#include "hullsmith/rules.hpp"

#include <algorithm>
#include <set>

namespace hullsmith {

namespace {

void require_tower(const GrsCode& c) {
    require(c.field->is_quadratic_tower(), errc::not_quadratic_tower,
            "rule needs a quadratic tower field");
}

uint32_t check_lambda(const GrsCode& c, uint32_t lambda) {
    const FieldSpec& F = *c.field;
    require(lambda != 0, errc::lambda_not_in_subfield, "lambda must be a nonzero subfield element");
    require(F.in_subfield(lambda), errc::lambda_not_in_subfield, "lambda is not in the subfield");
    return lambda;
}

RuleOutcome finish(std::optional<GrsCode> grs, LinearCode code, Inner inner, int predicted,
                   bool exact, std::string tag) {
    RuleOutcome out;
    out.computed = hull(code, inner);
    out.grs = std::move(grs);
    out.code = std::move(code);
    out.predicted_hull_lb = predicted;
    out.predicted_exact = exact;
    out.rule_tag = std::move(tag);
    if (exact)
        require(out.computed.hull_dim == predicted, errc::internal,
                out.rule_tag + ": exact hull prediction violated (" +
                    std::to_string(out.computed.hull_dim) + " != " + std::to_string(predicted) + ")");
    else
        require(out.computed.hull_dim >= predicted, errc::internal,
                out.rule_tag + ": hull fell below the predicted bound");
    return out;
}

// Membership data for the row being added by a dimension rule.
struct AddedRow {
    std::vector<uint32_t> g;
    uint32_t self_product; // g g^dagger, always in the subfield
    bool in_dual;          // g in C^perpH
    bool in_hull_perp;     // g in Hull(C)^perpH
};

AddedRow analyze_added_row(const GrsCode& c, long index) {
    const FieldSpec& F = *c.field;
    AddedRow r;
    r.g = grs_row(c, index);
    FFMatrix G = generator_matrix(c);
    auto herm = [&](const uint32_t* row, const std::vector<uint32_t>& x) {
        uint32_t acc = 0;
        for (size_t l = 0; l < x.size(); ++l) acc = F.add(acc, F.mul(row[l], F.conj(x[l])));
        return acc;
    };
    r.self_product = 0;
    for (size_t l = 0; l < r.g.size(); ++l)
        r.self_product = F.add(r.self_product, F.mul(r.g[l], F.conj(r.g[l])));
    r.in_dual = true;
    for (size_t i = 0; i < G.rows(); ++i)
        if (herm(G.data() + i * G.cols(), r.g) != 0) {
            r.in_dual = false;
            break;
        }
    FFMatrix H = hull_basis(G, Inner::hermitian());
    r.in_hull_perp = true;
    for (size_t i = 0; i < H.rows(); ++i)
        if (herm(H.data() + i * H.cols(), r.g) != 0) {
            r.in_hull_perp = false;
            break;
        }
    return r;
}

// rank(G S G^dagger) with S = corner * E_n - g^dagger g; certifies the
// bordered Gram rank when the corner entry is nonzero.
int rank_gsg(const GrsCode& c, const std::vector<uint32_t>& g, uint32_t corner) {
    const FieldSpec& F = *c.field;
    FFMatrix G = generator_matrix(c);
    size_t n = G.cols();
    FFMatrix S(c.field, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            uint32_t x = F.mul(F.conj(g[i]), g[j]);
            S.at(i, j) = (i == j) ? F.sub(corner, x) : F.neg(x);
        }
    return int(rank(G.mul(S).mul(G.dagger())));
}

} // namespace

RuleOutcome extend_length_infty(const GrsCode& c, uint32_t lambda) {
    require_tower(c);
    require(!c.extended, errc::bad_parameters, "code already has the infinity column");
    check_lambda(c, lambda);
    const FieldSpec& F = *c.field;
    GrsCode base = normalize_k1(c);

    uint32_t xi = F.norm_root(F.inv(lambda));
    GrsCode out = base;
    for (auto& vl : out.v) vl = F.mul(xi, vl);
    out.extended = true;

    // Predicted rank: rank(G G^dagger + S_lambda), lambda at the corner.
    FFMatrix gram = gram_matrix(generator_matrix(base), Inner::hermitian());
    gram.at(base.k - 1, base.k - 1) = F.add(gram.at(base.k - 1, base.k - 1), lambda);
    int predicted = base.k - int(rank(gram));
    return finish(out, as_linear(out), Inner::hermitian(), predicted, true, "extend-length");
}

RuleOutcome extend_length_zero(const GrsCode& c, uint32_t lambda) {
    require_tower(c);
    require(!c.extended, errc::bad_parameters, "zero-point extension needs a plain GRS code");
    require(uint64_t(c.n()) < c.field->size(), errc::field_full, "every field element is in use");
    check_lambda(c, lambda);
    const FieldSpec& F = *c.field;
    uint32_t shift_b = 0;
    GrsCode base = shift_away_zero(normalize_k1(c), &shift_b);

    uint32_t xi = F.norm_root(lambda);
    GrsCode out = base;
    out.a.insert(out.a.begin(), 0u);
    out.v.insert(out.v.begin(), xi);

    FFMatrix gram = gram_matrix(generator_matrix(base), Inner::hermitian());
    gram.at(0, 0) = F.add(gram.at(0, 0), lambda);
    int predicted = base.k - int(rank(gram));
    std::string tag = "extend-zero";
    if (shift_b != 0) tag += "(shift b=" + std::to_string(shift_b) + ")";
    return finish(out, as_linear(out), Inner::hermitian(), predicted, true, tag);
}

RuleOutcome increase_dim(const GrsCode& c, DimDirection dir) {
    require_tower(c);
    require(!c.extended, errc::bad_parameters, "dimension rules work on plain GRS codes");
    require(c.k < c.n(), errc::dimension_full, "dimension already equals the length");
    uint32_t shift_b = 0;
    GrsCode base = c;
    long new_index;
    if (dir == DimDirection::up) {
        new_index = long(base.k1) + base.k;
    } else {
        bool has_zero = std::find(base.a.begin(), base.a.end(), 0u) != base.a.end();
        if (has_zero) {
            require(uint64_t(base.n()) < base.field->size(), errc::field_full,
                    "cannot avoid the zero point on a full-field code");
            base = shift_away_zero(normalize_k1(base), &shift_b);
        }
        new_index = long(base.k1) - 1;
    }

    int l = hull(base, Inner::hermitian()).hull_dim;
    AddedRow added = analyze_added_row(base, new_index);

    GrsCode out = base;
    out.k += 1;
    if (dir == DimDirection::down) out.k1 -= 1;

    std::string tag = dir == DimDirection::up ? "increase-dim-up" : "increase-dim-down";
    if (shift_b != 0) tag += "(shift b=" + std::to_string(shift_b) + ")";
    int predicted;
    bool exact;
    if (added.in_dual && added.self_product == 0) {
        tag += "/case1";
        predicted = l + 1;
        exact = true;
    } else if (!added.in_hull_perp) {
        tag += "/case2";
        predicted = l - 1;
        exact = true;
    } else {
        tag += "/case3";
        predicted = std::max(l - 1, 0);
        exact = false;
    }
    RuleOutcome res = finish(out, as_linear(out), Inner::hermitian(), predicted, exact, tag);
    if (res.rule_tag.find("case3") != std::string::npos && res.computed.hull_dim < l)
        res.flagged_below_statement = true;
    if (added.self_product != 0) {
        // Independent certificate: hull = k - rank(G S G^dagger).
        int via_s = base.k - rank_gsg(base, added.g, added.self_product);
        require(via_s == res.computed.hull_dim, errc::internal,
                "case4 rank certificate disagrees with the computed hull");
        res.rule_tag += "+case4";
    }
    return res;
}

RuleOutcome extend_both(const GrsCode& c, uint32_t lambda) {
    require_tower(c);
    require(!c.extended, errc::bad_parameters, "code already has the infinity column");
    require(c.k < c.n(), errc::dimension_full, "dimension already equals the length");
    check_lambda(c, lambda);
    const FieldSpec& F = *c.field;
    GrsCode base = normalize_k1(c);

    int l = hull(base, Inner::hermitian()).hull_dim;
    AddedRow added = analyze_added_row(base, base.k);
    uint32_t corner = F.add(added.self_product, lambda);

    uint32_t xi = F.norm_root(F.inv(lambda));
    GrsCode out = base;
    for (auto& vl : out.v) vl = F.mul(xi, vl);
    out.k += 1;
    out.extended = true;

    std::string tag = "extend-both";
    int predicted;
    bool exact;
    if (corner == 0 && added.in_dual) {
        tag += "/case1";
        predicted = l + 1;
        exact = true;
    } else if (!added.in_hull_perp) {
        tag += "/case2";
        predicted = l - 1;
        exact = true;
    } else if (corner == 0) {
        tag += "/case3";
        predicted = l;
        exact = false;
    } else {
        tag += "/case4";
        predicted = base.k - rank_gsg(base, added.g, corner);
        exact = true;
    }
    RuleOutcome res = finish(out, as_linear(out), Inner::hermitian(), predicted, exact, tag);
    if (corner != 0 && tag.find("case4") == std::string::npos) {
        int via_s = base.k - rank_gsg(base, added.g, corner);
        require(via_s == res.computed.hull_dim, errc::internal,
                "case4 rank certificate disagrees with the computed hull");
        res.rule_tag += "+case4";
    }
    return res;
}

RuleOutcome extend_both_cancelling(const GrsCode& c) {
    require_tower(c);
    GrsCode base = normalize_k1(c);
    const FieldSpec& F = *base.field;
    uint32_t sp = pair_product(base, base.k1 + base.k, base.k1 + base.k);
    require(sp != 0, errc::corner_not_cancellable,
            "g_k g_k^dagger = 0: the corner cannot be cancelled");
    return extend_both(c, F.neg(sp));
}

GrsCode self_orthogonal_extension(const GrsCode& c) {
    require_tower(c);
    require(!c.extended, errc::bad_parameters, "code already has the infinity column");
    const FieldSpec& F = *c.field;
    FFMatrix gram = gram_matrix(generator_matrix(c), Inner::hermitian());
    for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < c.k; ++j) {
            bool corner = (i == c.k - 1 && j == c.k - 1);
            bool ok = corner ? gram.at(i, j) != 0 : gram.at(i, j) == 0;
            require(ok, errc::hull_shape_mismatch,
                    "hull is not spanned by the first k-1 rows");
        }
    uint32_t corner = gram.at(c.k - 1, c.k - 1);
    RuleOutcome out = extend_length_infty(c, F.neg(corner));
    FFMatrix new_gram = gram_matrix(out.code.generator, Inner::hermitian());
    require(new_gram.is_zero(), errc::internal, "extension is not self-orthogonal");
    return *out.grs;
}

GrsCode egrs_to_grs(const GrsCode& c) {
    require(c.extended, errc::bad_parameters, "input is already a plain GRS code");
    const FieldSpec& F = *c.field;
    GrsCode base = normalize_k1(c);
    require(uint64_t(base.length()) <= F.size(), errc::field_full,
            "no unused finite point to re-seat the infinity column");
    std::set<uint32_t> used(base.a.begin(), base.a.end());
    uint32_t cpt = 0;
    while (used.count(cpt)) ++cpt;

    GrsCode out;
    out.field = base.field;
    out.k = base.k;
    out.a.resize(base.n() + 1);
    out.v.resize(base.n() + 1);
    for (int l = 0; l < base.n(); ++l) {
        uint32_t b = F.inv(F.sub(base.a[l], cpt));
        out.a[l] = b;
        out.v[l] = F.mul(base.v[l], F.pow(b, 1 - (long long)base.k));
    }
    out.a[base.n()] = 0;
    out.v[base.n()] = 1;
    require(same_rowspace(generator_matrix(base), generator_matrix(out)), errc::internal,
            "re-presentation changed the rowspace");
    return out;
}

namespace {

// v in rowspace(rr.mat)? Reduce against the rref rows.
bool in_rowspace(const FieldSpec& F, const RrefResult& rr, std::vector<uint32_t> v) {
    for (size_t r = 0; r < rr.pivots.size(); ++r) {
        uint32_t f = v[rr.pivots[r]];
        if (f == 0) continue;
        for (size_t c = 0; c < v.size(); ++c) v[c] = F.sub(v[c], F.mul(f, rr.mat.at(r, c)));
    }
    for (uint32_t x : v)
        if (x) return false;
    return true;
}

// One hull-by-one reduction step; returns the scaled matrix or nothing.
//
// Scaling column j by gamma shifts the Gram by (gamma^{1+p^e} - 1) times the
// rank-one matrix u w^T with u = G_{.j} and w = u^{p^{m-e}}. Such an update
// raises the rank by exactly one iff u is outside the Gram's column space and
// w outside its row space, independent of which gamma (with gamma^{1+p^e}
// different from 1) is used. The scan below therefore tests each coordinate
// once and takes the smallest-dlog admissible scalar, which accepts exactly
// the same (coordinate, scalar) pair as the direct candidate-by-candidate
// search in the stated order. The caller re-verifies the accepted step from
// the full matrix.
std::optional<std::pair<FFMatrix, std::string>> reduce_step(const FFMatrix& G, Inner inner,
                                                            int current_hull,
                                                            std::vector<int>* grs_cols,
                                                            std::vector<uint32_t>* grs_gammas) {
    const FieldSpec& F = *G.field();
    uint64_t Q = F.size();
    uint32_t e = inner.galois_e(F);
    uint64_t conj_pow = 1;
    for (uint32_t i = 0; i < (F.m() - e) % F.m(); ++i) conj_pow *= F.p();
    long long gamma_exp = (long long)conj_pow + 1; // gamma^{1+p^{m-e}} scales the update

    FFMatrix gram0 = gram_matrix(G, inner);
    RrefResult rows = rref(gram0);
    RrefResult cols = rref(gram0.transpose());
    for (size_t j = 0; j < G.cols(); ++j) {
        std::vector<uint32_t> u(G.rows()), w(G.rows());
        bool zero_col = true;
        for (size_t r = 0; r < G.rows(); ++r) {
            u[r] = G.at(r, j);
            w[r] = F.pow(u[r], (long long)conj_pow);
            if (u[r]) zero_col = false;
        }
        if (zero_col) continue;
        if (in_rowspace(F, cols, u) || in_rowspace(F, rows, w)) continue;
        for (uint64_t t = 1; t < Q - 1; ++t) {
            uint32_t gamma = F.exp(t);
            if (F.pow(gamma, gamma_exp) == 1) continue; // update vanishes
            FFMatrix cand = G.scale_col(j, gamma);
            if (grs_cols) grs_cols->push_back(int(j));
            if (grs_gammas) grs_gammas->push_back(gamma);
            return std::make_pair(std::move(cand),
                                  "col " + std::to_string(j) + " *= theta^" + std::to_string(t));
        }
    }
    (void)current_hull;
    // Two-coordinate fallback; the single-coordinate search is expected to
    // succeed, this guards the guarantee rather than implements it.
    for (size_t j1 = 0; j1 + 1 < G.cols(); ++j1)
        for (size_t j2 = j1 + 1; j2 < G.cols(); ++j2)
            for (uint64_t t1 = 1; t1 < Q - 1; ++t1) {
                FFMatrix half = G.scale_col(j1, F.exp(t1));
                for (uint64_t t2 = 1; t2 < Q - 1; ++t2) {
                    FFMatrix cand = half.scale_col(j2, F.exp(t2));
                    if (hull(cand, inner).hull_dim == current_hull - 1) {
                        if (grs_cols) {
                            grs_cols->push_back(int(j1));
                            grs_cols->push_back(int(j2));
                        }
                        if (grs_gammas) {
                            grs_gammas->push_back(F.exp(t1));
                            grs_gammas->push_back(F.exp(t2));
                        }
                        return std::make_pair(std::move(cand), "pair step");
                    }
                }
            }
    return std::nullopt;
}

} // namespace

ReduceResult hull_reduce(const LinearCode& c, int target_s, Inner inner) {
    const FieldSpec& F = *c.generator.field();
    if (inner.kind == Inner::Kind::hermitian)
        require(F.subfield_size() > 2, errc::bad_parameters,
                "hermitian hull reduction needs q > 2");
    if (inner.kind == Inner::Kind::galois)
        require(F.size() > 4, errc::bad_parameters, "galois hull reduction needs q > 4");
    require(target_s >= 0, errc::out_of_range, "negative target");

    ReduceResult res{c, std::nullopt, hull(c, inner), {}};
    require(target_s <= res.final_hull.hull_dim, errc::target_above_current,
            "target exceeds the current hull dimension");
    FFMatrix cur = c.generator;
    int h = res.final_hull.hull_dim;
    while (h > target_s) {
        auto step = reduce_step(cur, inner, h, nullptr, nullptr);
        require(step.has_value(), errc::search_exhausted,
                "no coordinate scaling lowers the hull; guarantee violated");
        cur = std::move(step->first);
        res.steps.push_back(step->second);
        HullReport check = hull(cur, inner);
        require(check.hull_dim == h - 1, errc::internal, "reduction step certificate failed");
        h = check.hull_dim;
    }
    res.code = LinearCode{cur, c.mds_structural};
    res.final_hull = hull(cur, inner);
    return res;
}

ReduceResult hull_reduce(const GrsCode& c, int target_s, Inner inner) {
    GrsCode cur = c;
    const FieldSpec& F = *c.field;
    if (inner.kind == Inner::Kind::hermitian)
        require(F.subfield_size() > 2, errc::bad_parameters,
                "hermitian hull reduction needs q > 2");
    if (inner.kind == Inner::Kind::galois)
        require(F.size() > 4, errc::bad_parameters, "galois hull reduction needs q > 4");
    require(target_s >= 0, errc::out_of_range, "negative target");

    ReduceResult res{as_linear(c), cur, hull(c, inner), {}};
    require(target_s <= res.final_hull.hull_dim, errc::target_above_current,
            "target exceeds the current hull dimension");
    int h = res.final_hull.hull_dim;
    while (h > target_s) {
        std::vector<int> cols;
        std::vector<uint32_t> gammas;
        FFMatrix G = generator_matrix(cur);
        auto step = reduce_step(G, inner, h, &cols, &gammas);
        require(step.has_value(), errc::search_exhausted,
                "no coordinate scaling lowers the hull; guarantee violated");
        bool keeps_presentation = true;
        for (size_t i = 0; i < cols.size(); ++i) {
            if (cols[i] >= cur.n()) {
                keeps_presentation = false;
                break;
            }
        }
        require(keeps_presentation, errc::internal, "scaled the infinity column");
        for (size_t i = 0; i < cols.size(); ++i) cur = scale_coordinate(cur, cols[i], gammas[i]);
        res.steps.push_back(step->second);
        HullReport check = hull(cur, inner);
        require(check.hull_dim == h - 1, errc::internal, "reduction step certificate failed");
        h = check.hull_dim;
    }
    res.grs = cur;
    res.code = as_linear(cur);
    res.final_hull = hull(cur, inner);
    return res;
}

GramBlocks::GramBlocks(const GrsCode& c) : code_(c) {
    const FieldSpec& F = *c.field;
    require(F.is_quadratic_tower(), errc::not_quadratic_tower, "needs a quadratic tower");
    q_ = uint32_t(F.subfield_size());
    require(uint64_t(c.n()) == F.size() && !c.extended, errc::not_full_field,
            "block structure needs the full-field evaluation");
}

FFMatrix GramBlocks::block(uint32_t i, uint32_t j) const {
    FFMatrix B(code_.field, q_, q_);
    for (uint32_t r = 0; r < q_; ++r)
        for (uint32_t c = 0; c < q_; ++c) B.at(r, c) = pair(long(i) + r, long(j) + c);
    return B;
}

uint32_t GramBlocks::pair(long i, long j) const { return pair_product(code_, i, j); }

std::pair<uint32_t, uint32_t> GramBlocks::canonical(uint64_t x, uint64_t y) const {
    uint64_t mod = uint64_t(q_) * q_ - 1;
    if (x == 0 && y == 0) return {0, 0};
    uint64_t e = (uint64_t(q_) * x + y) % mod;
    if (e == 0) return {q_ - 1, q_ - 1};
    return {uint32_t(e / q_), uint32_t(e % q_)};
}

bool GramBlocks::validate_folds() const {
    for (uint32_t i = q_; i < 2 * q_; ++i)
        for (uint32_t j = 0; j + 1 < q_; ++j)
            if (pair(i, j) != pair(long(i) - q_, long(j) + 1)) return false;
    for (uint32_t i = 0; i + 1 < q_; ++i)
        for (uint32_t j = q_; j < 2 * q_; ++j)
            if (pair(i, j) != pair(long(i) + 1, long(j) - q_)) return false;
    return true;
}

GramBlocks full_gram_blocks(const GrsCode& c) { return GramBlocks(c); }

Bound2q hull_bound_2q(int n, int k, int k_prime, uint32_t q) {
    require(q > 2, errc::out_of_range, "needs q > 2");
    require(n > int(q) + 1, errc::out_of_range, "needs n > q + 1");
    require(k_prime <= int(q) - 1, errc::out_of_range, "needs k' <= q - 1");
    require(k >= k_prime && k <= std::min(int(q) + k_prime - 1, n), errc::out_of_range,
            "k outside the bound's range");
    int value;
    if (k <= int(q))
        value = 2 * k_prime - k;
    else
        value = std::max(2 * k_prime - k, k + 4 * k_prime - 4 * int(q));
    Bound2q b;
    b.vacuous = value < 0;
    b.value = std::max(value, 0);
    return b;
}

GrsCode extend_length_chain(const GrsCode& c, int i) {
    GrsCode cur = c;
    const FieldSpec& F = *c.field;
    for (int step = 0; step < i; ++step) {
        if (uint64_t(cur.n()) < F.size()) {
            cur = *extend_length_zero(cur, 1).grs;
        } else {
            require(step == i - 1, errc::range_violation,
                    "length chain exceeds q^2 + 1");
            cur = *extend_length_infty(cur, 1).grs;
        }
    }
    return cur;
}

GrsCode increase_dim_chain(const GrsCode& c, int i) {
    GrsCode cur = c;
    for (int step = 0; step < i; ++step) cur = *increase_dim(cur, DimDirection::up).grs;
    return cur;
}

GrsCode extend_both_chain(const GrsCode& c, int i) {
    GrsCode cur = c;
    for (int step = 0; step < i; ++step) {
        GrsCode ext = *extend_both(cur, 1).grs;
        if (step + 1 < i) ext = egrs_to_grs(ext);
        cur = ext;
    }
    return cur;
}

} // namespace hullsmith
