// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Counterexamples and context are printed beneath each line.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <numeric>
#include <sstream>

#include "hullsmith/kernels.hpp"
#include "hullsmith/verify.hpp"

using namespace hullsmith;

namespace {

struct Criterion {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& note) {
        if (!ok) {
            pass = false;
            notes.push_back(note);
        }
    }
    void note(const std::string& n) { notes.push_back(n); }
};

std::string data_dir() {
    if (const char* d = std::getenv("HULLSMITH_DATA")) return d;
    return "data";
}

constexpr const char* kFamily3Note =
    "family-3 base pattern is unsatisfiable: it forces power sums supported on two "
    "exponents (q^2-1)/2 apart, whose weight vectors have support (q^2-1)/2 or q^2-1, "
    "never (2h-1)(q^2-1)/(2h); the multiplier search therefore exhausts by design";

// ---- 1. full-field Gram pattern -------------------------------------------
Criterion criterion1() {
    Criterion c;
    for (uint32_t q : {3u, 4u, 5u, 7u, 8u}) {
        try {
            GrsCode code = build_full_field(q);
            FFMatrix gram = gram_matrix(generator_matrix(code), Inner::hermitian());
            bool pattern = true;
            for (uint32_t i = 0; i < q; ++i)
                for (uint32_t j = 0; j < q; ++j) {
                    bool corner = i == q - 1 && j == q - 1;
                    if ((gram.at(i, j) != 0) != corner) pattern = false;
                }
            c.check(pattern, "q=" + std::to_string(q) + ": Gram pattern broken");
            int hd = hull(code, Inner::hermitian()).hull_dim;
            c.check(hd == int(q) - 1,
                    "q=" + std::to_string(q) + ": hull " + std::to_string(hd) + " != q-1");
        } catch (const error& e) {
            c.check(false, "q=" + std::to_string(q) + ": " + e.what());
        }
    }
    return c;
}

// ---- 2. self-orthogonal extensions ----------------------------------------
Criterion criterion2() {
    Criterion c;
    for (uint32_t q : {4u, 5u}) {
        try {
            GrsCode so = self_orthogonal_extension(build_full_field(q));
            c.check(so.length() == int(q * q) + 1 && so.k == int(q),
                    "q=" + std::to_string(q) + ": wrong shape");
            c.check(gram_matrix(generator_matrix(so), Inner::hermitian()).is_zero(),
                    "q=" + std::to_string(q) + ": Gram not exactly zero");
        } catch (const error& e) {
            c.check(false, "q=" + std::to_string(q) + ": " + e.what());
        }
    }
    return c;
}

// ---- 3. full-field sweep with census --------------------------------------
Criterion criterion3() {
    Criterion c;
    for (uint32_t q : {4u, 5u}) {
        FamilySpec spec{1, q, 0};
        GrsCode full = build_full_field(q);
        for (int k = 1; k <= int(q * q) / 2; ++k) {
            HullBound b = hull_lb_formula(spec, k);
            GrsCode code = full;
            code.k = k;
            int hd = hull(code, Inner::hermitian()).hull_dim;
            c.check(hd >= b.l, "q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                   ": hull " + std::to_string(hd) + " < l=" + std::to_string(b.l));
            bool exact = false;
            long expected = expected_census(spec, k, &exact);
            long actual = census_nonzero(spec, k);
            if (exact)
                c.check(actual == expected,
                        "q=" + std::to_string(q) + " k=" + std::to_string(k) + ": census " +
                            std::to_string(actual) + " != " + std::to_string(expected));
            else
                c.check(actual <= expected,
                        "q=" + std::to_string(q) + " k=" + std::to_string(k) +
                            ": census above the top-branch bound");
        }
    }
    return c;
}

// ---- 4. coset family sweeps ------------------------------------------------
Criterion criterion4() {
    Criterion c;
    struct Cfg {
        int family;
        uint32_t q, h;
    };
    for (Cfg cfg : {Cfg{2, 5, 3}, Cfg{2, 8, 3}, Cfg{3, 5, 2}, Cfg{3, 9, 2}}) {
        FamilySpec spec{cfg.family, cfg.q, cfg.h};
        std::string tag = "family " + std::to_string(cfg.family) + " (q=" +
                          std::to_string(cfg.q) + ",h=" + std::to_string(cfg.h) + ")";
        try {
            auto rows = family_sweep(spec);
            for (const auto& r : rows)
                c.check(r.hull_computed >= r.l_formula,
                        tag + " k=" + std::to_string(r.k) + ": hull below the formula");
            c.note(tag + ": " + std::to_string(rows.size()) + " dimensions verified");
        } catch (const error& e) {
            if (e.code() == errc::no_all_nonzero_solution && cfg.family == 3)
                c.check(false, tag + ": " + kFamily3Note);
            else
                c.check(false, tag + ": " + e.what());
        }
    }
    return c;
}

// ---- 5. golden tables + witness -------------------------------------------
struct TableState {
    std::vector<TableTuple> t2, t3, t4;
};

Criterion criterion5(TableState& state) {
    Criterion c;
    struct Cfg {
        FamilySpec spec;
        std::string golden;
        std::vector<TableTuple>* out;
        bool witness;
    };
    std::string dir = data_dir() + "/golden/";
    Cfg cfgs[] = {
        {FamilySpec{1, 8, 0}, dir + "table_family1_q8.csv", &state.t2, true},
        {FamilySpec{2, 11, 3}, dir + "table_family2_q11_h3.csv", &state.t3, false},
        {FamilySpec{3, 9, 2}, dir + "table_family3_q9_h2.csv", &state.t4, false},
    };
    for (auto& cfg : cfgs) {
        *cfg.out = theorem_q22_enumerate(cfg.spec);
        auto golden = verify::load_golden_tuples(cfg.golden, cfg.spec.q);
        size_t missing = 0;
        for (const auto& g : golden) {
            bool present = false;
            for (const auto& t : *cfg.out)
                if (t.p.same_tuple(g)) {
                    present = true;
                    break;
                }
            if (!present) {
                ++missing;
                std::ostringstream os;
                os << "q=" << cfg.spec.q << ": reference tuple [[" << g.n << "," << g.k << ","
                   << g.d << ";" << g.c << "]] not generated (outside the stated (i,s) ranges)";
                c.check(false, os.str());
            }
        }
        c.note("q=" + std::to_string(cfg.spec.q) + ": " +
               std::to_string(golden.size() - missing) + "/" + std::to_string(golden.size()) +
               " reference tuples reproduced");
        if (cfg.witness) {
            WitnessReport rep = witness_tuples(cfg.spec, *cfg.out);
            for (const auto& f : rep.failures) c.check(false, f);
            c.check(rep.reproduced == rep.witnessable,
                    "q=" + std::to_string(cfg.spec.q) + ": witness coverage incomplete");
            c.note("q=" + std::to_string(cfg.spec.q) + ": witnessed " +
                   std::to_string(rep.reproduced) + "/" + std::to_string(rep.witnessable) +
                   " constructible tuples");
        }
    }
    // the q=9 witness path needs the family-3 base code, which does not exist
    c.check(false, std::string("q=9 witness path: ") + kFamily3Note);
    return c;
}

// ---- 6. randomized classification exactness --------------------------------
Criterion criterion6() {
    Criterion c;
    std::mt19937 rng(0xACCE6);
    int mismatches = 0, runs = 0;
    for (int t = 0; t < 200; ++t) {
        uint32_t q = t % 2 ? 3 : 4;
        Field f = make_tower_of(q);
        int max_n = int(std::min<uint64_t>(16, f->size() - 1));
        int n = 4 + int(rng() % (max_n - 3));
        int k = 1 + int(rng() % std::min(8, n - 1));
        GrsCode code = random_grs(f, n, k, rng);
        int l = hull(code, Inner::hermitian()).hull_dim;

        auto check_outcome = [&](const RuleOutcome& out, int base_l) {
            ++runs;
            int oracle = hull_dim_by_intersection(out.code.generator, Inner::hermitian());
            if (out.computed.hull_dim != oracle) ++mismatches;
            bool case1 = out.rule_tag.find("case1") != std::string::npos;
            bool case2 = out.rule_tag.find("case2") != std::string::npos;
            if (case1 && oracle != base_l + 1) ++mismatches;
            if (case2 && oracle != base_l - 1) ++mismatches;
        };
        check_outcome(increase_dim(code, DimDirection::up), l);
        if (uint64_t(n) < f->size()) check_outcome(increase_dim(code, DimDirection::down), l);
        check_outcome(extend_both(code, 1), l);
    }
    c.check(mismatches == 0, std::to_string(mismatches) + " mismatches");
    c.note(std::to_string(runs) + " rule applications cross-checked");
    return c;
}

// ---- 7. hull reduction totality --------------------------------------------
Criterion criterion7() {
    Criterion c;
    std::mt19937 rng(0xACCE7);
    int reduced = 0;

    auto randomized_variant = [&](GrsCode code, Inner inner) {
        const FieldSpec& F = *code.field;
        uint64_t q1 = inner.kind == Inner::Kind::hermitian
                          ? F.subfield_size() + 1
                          : [&] {
                                uint64_t pe = 1;
                                for (uint32_t i = 0; i < inner.e; ++i) pe *= F.p();
                                return pe + 1;
                            }();
        uint64_t ord = F.size() - 1;
        uint64_t step = ord / std::gcd(ord, q1); // scalars with gamma^{q1} = 1
        // joint permutation of (a, v)
        std::vector<size_t> perm(code.a.size());
        std::iota(perm.begin(), perm.end(), size_t(0));
        std::shuffle(perm.begin(), perm.end(), rng);
        GrsCode out = code;
        for (size_t i = 0; i < perm.size(); ++i) {
            out.a[i] = code.a[perm[i]];
            out.v[i] = code.v[perm[i]];
        }
        if (step != 0)
            for (auto& vl : out.v)
                if (rng() % 2) vl = F.mul(vl, F.exp(step * (1 + rng() % 7)));
        return out;
    };

    // Hermitian batch: 50 randomized codes over GF(9)/GF(16)/GF(25)
    for (int t = 0; t < 50; ++t) {
        uint32_t q = t % 3 == 0 ? 3 : (t % 3 == 1 ? 4 : 5);
        GrsCode base = build_full_field(q);
        base.k = 2 + int(rng() % (q - 1)); // k <= q keeps hull >= q-1 >= 1
        GrsCode code = randomized_variant(base, Inner::hermitian());
        int l = hull(code, Inner::hermitian()).hull_dim;
        c.check(l >= 1, "hermitian batch: variant lost its hull");
        for (int s = l; s >= 0; --s) {
            try {
                ReduceResult r = hull_reduce(code, s, Inner::hermitian());
                c.check(r.final_hull.hull_dim == s, "hermitian: wrong target reached");
                ++reduced;
            } catch (const error& e) {
                c.check(false, std::string("hermitian: ") + e.what());
            }
        }
    }

    // Galois batch over GF(81): unit-multiplier full-field codes are
    // e-galois self-orthogonal for every e
    Field f81 = FieldSpec::make(3, 4);
    for (uint32_t e : {0u, 1u, 2u, 3u}) {
        Inner inner = Inner::galois(e);
        for (int t = 0; t < 13; ++t) {
            GrsCode base;
            base.field = f81;
            base.a.resize(81);
            for (size_t i = 0; i < 81; ++i) base.a[i] = uint32_t(i);
            base.v.assign(81, 1);
            base.k = 2 + int(t % 2);
            GrsCode code = randomized_variant(base, inner);
            int l = hull(code, inner).hull_dim;
            c.check(l == base.k, "galois batch: variant lost its hull");
            for (int s = l; s >= 0; --s) {
                try {
                    ReduceResult r = hull_reduce(code, s, inner);
                    c.check(r.final_hull.hull_dim == s, "galois: wrong target reached");
                    ++reduced;
                } catch (const error& e) {
                    c.check(false, std::string("galois e=") + std::to_string(inner.e) + ": " + e.what());
                }
            }
        }
    }
    c.note(std::to_string(reduced) + " reductions certified, zero searches exhausted");
    return c;
}

// ---- 8. MDS preservation ----------------------------------------------------
Criterion criterion8() {
    Criterion c;
    std::mt19937 rng(0xACCE8);
    int minors_checked = 0, exhaustive_checked = 0;

    auto check_code = [&](const LinearCode& code, const std::string& tag) {
        uint64_t minors = kernels::binomial_capped(code.n(), code.k(), kMinorBound);
        if (minors <= kMinorBound) {
            auto rep = min_distance(code, DistanceMode::minor_certificate);
            c.check(rep.mds, tag + ": minor certificate failed");
            ++minors_checked;
        }
    };

    for (uint32_t q : {3u, 4u, 5u}) {
        GrsCode full = build_full_field(q);
        for (int k = 1; k <= int(q * q) / 2; ++k) {
            GrsCode code = full;
            code.k = k;
            check_code(as_linear(code), "full-field q=" + std::to_string(q));
        }
        // rule outputs stay MDS
        GrsCode base = full;
        base.k = int(q) - 1;
        check_code(extend_length_infty(base, 1).code, "infinity extension");
        check_code(increase_dim(base, DimDirection::up).code, "dimension increase");
        check_code(extend_both(base, 1).code, "simultaneous extension");
        check_code(hull_reduce(base, 0, Inner::hermitian()).code, "hull reduction");
    }
    GrsCode coset = build_coset_h(5, 3);
    for (int k = 1; k <= 8; ++k) {
        GrsCode code = coset;
        code.k = k;
        check_code(as_linear(code), "coset family k=" + std::to_string(k));
    }

    // exhaustive distance for small codes over GF(9)
    Field f9 = make_tower_of(3);
    for (int t = 0; t < 30; ++t) {
        int n = 4 + int(rng() % 6);           // n <= 9 over GF(9)
        int k = 1 + int(rng() % std::min(5, n - 1));
        GrsCode code = random_grs(f9, n, k, rng);
        auto rep = min_distance(code, DistanceMode::exhaustive);
        c.check(rep.d == n - k + 1, "exhaustive distance off at n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
        ++exhaustive_checked;
        if (k < n) {
            RuleOutcome out = increase_dim(code, DimDirection::up);
            auto rep2 = min_distance(GrsCode(*out.grs), DistanceMode::exhaustive);
            c.check(rep2.d == n - (k + 1) + 1, "rule output lost MDS at n=" + std::to_string(n));
            ++exhaustive_checked;
        }
    }
    c.note(std::to_string(minors_checked) + " minor certificates, " +
           std::to_string(exhaustive_checked) + " exhaustive distances");
    return c;
}

// ---- 9. bound audit ---------------------------------------------------------
Criterion criterion9(TableState& state) {
    Criterion c;
    size_t audited = 0, mds_count = 0;
    for (const auto* tuples : {&state.t2, &state.t3, &state.t4}) {
        for (const TableTuple& t : *tuples) {
            ++audited;
            c.check(satisfies_bounds(t.p), "bound violation in the enumeration");
            if (t.p.mds == MdsTag::by_eq1) {
                ++mds_count;
                c.check(t.p.k == t.p.c + std::max(0, t.p.n - 2 * t.p.d + 2),
                        "loose tuple tagged MDS (eq1)");
            } else if (t.p.mds == MdsTag::by_eq3) {
                ++mds_count;
                long num = long(t.p.n - t.p.d + 1) * (t.p.c + 2 * t.p.d - 2 - t.p.n);
                long den = 3 * t.p.d - 3 - t.p.n;
                c.check(den > 0 && long(t.p.k) * den == num, "loose tuple tagged MDS (eq3)");
            }
        }
    }
    // witness reproduction: q=8 tuples were certified in criterion 5
    for (const TableTuple& t : state.t2)
        if (t.witnessable)
            c.check(t.witnessed, "constructible q=8 tuple left unwitnessed");
    // the full q=11 range is desk scale, so certify it here as well
    WitnessReport rep11 = witness_tuples(FamilySpec{2, 11, 3}, state.t3);
    for (const auto& f : rep11.failures) c.check(false, "q=11: " + f);
    c.check(rep11.reproduced == rep11.witnessable, "q=11 witness coverage incomplete");
    c.note("q=11: witnessed " + std::to_string(rep11.reproduced) + "/" +
           std::to_string(rep11.witnessable) + " constructible tuples");
    c.check(false, std::string("family-3 witness leg: ") + kFamily3Note);
    c.note(std::to_string(audited) + " tuples audited, " + std::to_string(mds_count) +
           " tagged MDS with tight bounds");
    return c;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion result;
        double seconds;
    };
    std::vector<Entry> entries;
    TableState tables;

    auto run = [&](const char* name, double budget_s, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        Criterion res;
        try {
            res = fn();
        } catch (const std::exception& e) {
            res.pass = false;
            res.notes.push_back(std::string("unexpected exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        res.check(secs <= budget_s, "runtime budget exceeded (" + std::to_string(secs) + "s > " +
                                        std::to_string(budget_s) + "s)");
        entries.push_back({name, std::move(res), secs});
    };

    run("1. full-field Gram pattern and hull q-1 (q in 3,4,5,7,8)", 5, [] { return criterion1(); });
    run("2. self-orthogonal [q^2+1, q] extensions (q in 4,5)", 1, [] { return criterion2(); });
    run("3. full-field hull sweep with exceptional-entry census (q in 4,5)", 30,
        [] { return criterion3(); });
    run("4. coset family sweeps at (5,3), (8,3), (5,2), (9,2)", 300, [] { return criterion4(); });
    run("5. reference table reproduction and witness path", 600, [&] { return criterion5(tables); });
    run("6. propagation-rule classification exactness (200 random codes)", 120,
        [] { return criterion6(); });
    run("7. hull reduction totality (hermitian + galois batches)", 300,
        [] { return criterion7(); });
    run("8. MDS preservation (minor certificates + exhaustive distances)", 600,
        [] { return criterion8(); });
    run("9. EAQECC bound audit and witness coverage", 600, [&] { return criterion9(tables); });

    int failures = 0;
    for (const auto& e : entries) {
        std::printf("[%s] %s (%.1fs)\n", e.result.pass ? "PASS" : "FAIL", e.name, e.seconds);
        for (const auto& n : e.result.notes) std::printf("        %s\n", n.c_str());
        if (!e.result.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", int(entries.size()) - failures, entries.size());
    return failures;
}
