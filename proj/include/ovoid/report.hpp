// The full verification sweep: every closed-form claim checked against
// independent enumeration, emitted as machine-readable records. Shared by
// the acceptance suite and the command-line `report` subcommand.
#pragma once

#include "ovoid/charsum.hpp"
#include "ovoid/io.hpp"
#include "ovoid/subfield.hpp"

#include <random>
#include <set>

namespace ovoid {

struct RunOptions {
    int budget_log2 = 24;
    int workers = 1;
    u64 seed = 20240001; // fixed default for reproducible sweeps
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = true;
    json details = json::array();
};

namespace report_detail {

inline LinearCode elliptic_code(FieldPtr f, u32 a) {
    return LinearCode(f, generator_from_points(elliptic_quadric(f, f->elem(a))));
}

inline LinearCode tits_code(FieldPtr f) { return LinearCode(f, generator_from_points(tits_ovoid(f))); }

inline LinearCode prime_subfield_code(const LinearCode& c) {
    auto ctx = SubfieldContext::standard(c.field(), 1);
    return subfield_code_expand(c, ctx);
}

inline bool totals_ok(const WeightDistribution& wd, u64 q, int k) {
    i64 expect = 1;
    for (int i = 0; i < k; ++i) expect *= static_cast<i64>(q);
    return wd.total() == expect && wd.count_at(0) == 1;
}

inline void push_match(CriterionResult& out, json record, bool match) {
    record["match"] = match;
    out.details.push_back(std::move(record));
    out.pass = out.pass && match;
}

// Deterministic permutation from a seeded generator.
inline std::vector<size_t> seeded_permutation(size_t n, u64 seed) {
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    for (size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    return perm;
}

} // namespace report_detail

// Criterion 1: enumerated ovoid-code weight distributions match the
// three-weight closed form for both families.
inline CriterionResult criterion_ovoid_enumerators(const RunOptions& opt) {
    using namespace report_detail;
    CriterionResult out{1, "ovoid-code weight enumerators"};
    std::vector<std::pair<int, int>> fields{{2, 2}, {2, 3}, {3, 2}, {2, 4}};
    for (auto [p, n] : fields) {
        auto f = Field::make(p, n);
        u32 a = least_parameter(*f, QuadraticRootKind::irreducible);
        auto wd = weight_distribution(elliptic_code(f, a), opt.budget_log2, opt.workers);
        auto pd = predict_ovoid_code(static_cast<i64>(f->size()));
        push_match(out,
                   json{{"claim", "ovoid-enumerator"}, {"family", "elliptic"}, {"q", f->size()},
                        {"a", elem_to_json(*f, a)}, {"predicted", rows_to_json(pd.rows)},
                        {"enumerated", weight_distribution_to_json(wd)}},
                   pd.matches(wd) && totals_ok(wd, f->size(), 4));
    }
    auto f8 = Field::make(2, 3);
    auto wd = weight_distribution(tits_code(f8), opt.budget_log2, opt.workers);
    auto pd = predict_ovoid_code(8);
    push_match(out,
               json{{"claim", "ovoid-enumerator"}, {"family", "tits"}, {"q", 8},
                    {"predicted", rows_to_json(pd.rows)}, {"enumerated", weight_distribution_to_json(wd)}},
               pd.matches(wd) && totals_ok(wd, 8, 4));
    return out;
}

// Criterion 2: binary subfield codes of elliptic quadric codes.
inline CriterionResult criterion_binary_elliptic_tables(const RunOptions& opt) {
    using namespace report_detail;
    CriterionResult out{2, "binary elliptic subfield distributions"};
    for (int m = 2; m <= 5; ++m) {
        auto f = Field::make(2, m);
        u32 a = least_parameter(*f, QuadraticRootKind::irreducible);
        auto sub = prime_subfield_code(elliptic_code(f, a));
        auto wd = weight_distribution(sub, opt.budget_log2, opt.workers);
        auto pd = predict_binary_elliptic_subfield(m);
        push_match(out,
                   json{{"claim", "table"}, {"table", "T1"}, {"params", {{"m", m}}},
                        {"predicted", rows_to_json(pd.rows)}, {"enumerated", weight_distribution_to_json(wd)}},
                   pd.matches(wd) && totals_ok(wd, 2, 3 * m + 1));
    }
    return out;
}

// Criterion 3: odd-characteristic subfield codes, split by parameter class.
inline CriterionResult criterion_odd_elliptic_tables(const RunOptions& opt) {
    using namespace report_detail;
    CriterionResult out{3, "odd elliptic subfield distributions"};
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
        auto f = Field::make(p, m);
        u32 a_irr = least_parameter(*f, QuadraticRootKind::irreducible);
        u32 a_red = least_parameter(*f, QuadraticRootKind::reducible_distinct);
        auto wd_irr = weight_distribution(prime_subfield_code(elliptic_code(f, a_irr)), opt.budget_log2, opt.workers);
        auto wd_red = weight_distribution(prime_subfield_code(elliptic_code(f, a_red)), opt.budget_log2, opt.workers);
        auto pd_irr = predict_odd_elliptic_subfield_irreducible(p, m);
        auto pd_red = predict_odd_elliptic_subfield_reducible(p, m);
        push_match(out,
                   json{{"claim", "table"}, {"table", "T2"}, {"params", {{"p", p}, {"m", m}}},
                        {"a", elem_to_json(*f, a_irr)}, {"predicted", rows_to_json(pd_irr.rows)},
                        {"enumerated", weight_distribution_to_json(wd_irr)}},
                   pd_irr.matches(wd_irr) && totals_ok(wd_irr, p, 3 * m + 1));
        push_match(out,
                   json{{"claim", "table"}, {"table", "T3"}, {"params", {{"p", p}, {"m", m}}},
                        {"a", elem_to_json(*f, a_red)}, {"predicted", rows_to_json(pd_red.rows)},
                        {"enumerated", weight_distribution_to_json(wd_red)}},
                   pd_red.matches(wd_red) && totals_ok(wd_red, p, 3 * m + 1));
    }
    return out;
}

// Criterion 4: the a = 1/4 subfield codes, even and odd degree.
inline CriterionResult criterion_quarter_tables(const RunOptions& opt) {
    using namespace report_detail;
    CriterionResult out{4, "quarter-parameter subfield distributions"};
    auto run = [&](int p, int m, const char* table) {
        auto f = Field::make(p, m);
        u32 quarter = f->inv(f->from_int(4).v);
        auto wd = weight_distribution(prime_subfield_code(elliptic_code(f, quarter)), opt.budget_log2, opt.workers);
        auto pd = m % 2 == 0 ? predict_quarter_subfield_even(p, m) : predict_quarter_subfield_odd(p, m);
        push_match(out,
                   json{{"claim", "table"}, {"table", table}, {"params", {{"p", p}, {"m", m}}},
                        {"a", elem_to_json(*f, quarter)}, {"predicted", rows_to_json(pd.rows)},
                        {"enumerated", weight_distribution_to_json(wd)}},
                   pd.matches(wd) && totals_ok(wd, static_cast<u64>(p), 3 * m + 1));
    };
    run(3, 2, "T4");
    run(5, 2, "T4");
    run(3, 3, "T5");
    return out;
}

// Criterion 5: binary subfield codes of Tits ovoid codes.
inline CriterionResult criterion_tits_table(const RunOptions& opt) {
    using namespace report_detail;
    CriterionResult out{5, "Tits subfield distributions"};
    for (int e : {1, 2}) {
        auto f = Field::make(2, 2 * e + 1);
        auto wd = weight_distribution(prime_subfield_code(tits_code(f)), opt.budget_log2, opt.workers);
        auto pd = predict_tits_subfield(e);
        push_match(out,
                   json{{"claim", "table"}, {"table", "T6"}, {"params", {{"e", e}}},
                        {"predicted", rows_to_json(pd.rows)}, {"enumerated", weight_distribution_to_json(wd)}},
                   pd.matches(wd) && totals_ok(wd, 2, 6 * e + 4));
    }
    return out;
}

// Criterion 6: the three worked parameter sets with their duals.
inline CriterionResult criterion_example_parameters(const RunOptions& opt) {
    using namespace report_detail;
    CriterionResult out{6, "worked example parameters"};
    struct Item {
        FieldPtr f;
        u32 a;
        i64 n, k, d, dual_k, dual_d;
        std::string note;
    };
    std::vector<Item> items;
    {
        // stated over "GF(2^3)" with the degree-2 modulus w^2+w+1; realized
        // over GF(4), which matches the [17,7,6] parameters; a = w^3 = 1
        auto f = Field::make(2, 2);
        items.push_back({f, f->pow(f->generator_value(), 3), 17, 7, 6, 10, 4,
                         "modulus w^2+w+1 has degree 2, so the field is read as GF(4)"});
    }
    {
        // GF(8) with w^3+w+1 = 0 and a = w^3; the class of x is such a root
        auto f = Field::make(2, 3);
        items.push_back({f, f->pow(2, 3), 65, 10, 28, 55, 4, ""});
    }
    {
        // GF(9) with w^2+2w+2 = 0 and a = w^3; locate that w in this
        // representation first
        auto f = Field::make(3, 2);
        u32 two = f->from_int(2).v, root = 0;
        bool found = false;
        for (u64 z = 0; z < 9 && !found; ++z) {
            u32 zz = static_cast<u32>(z);
            if (f->add(f->add(f->mul(zz, zz), f->mul(two, zz)), two) == 0) {
                root = zz;
                found = true;
            }
        }
        items.push_back({f, f->pow(root, 3), 82, 7, 51, 75, 4, ""});
    }
    for (auto& it : items) {
        auto sub = prime_subfield_code(elliptic_code(it.f, it.a));
        auto wd = weight_distribution(sub, opt.budget_log2, opt.workers);
        i64 d = wd.min_nonzero_weight();
        auto dd = dual_min_distance_upto(sub, 5);
        bool ok = static_cast<i64>(sub.length()) == it.n && sub.dimension() == it.k && d == it.d &&
                  dual_code(sub).dimension() == it.dual_k && dd.exact && dd.value == it.dual_d;
        json rec{{"claim", "example-parameters"},
                 {"expected", json::array({it.n, it.k, it.d})},
                 {"expected_dual", json::array({it.n, it.dual_k, it.dual_d})},
                 {"length", sub.length()},
                 {"dimension", sub.dimension()},
                 {"min_distance", d},
                 {"dual_dimension", dual_code(sub).dimension()},
                 {"dual_distance", dd.value},
                 {"dual_distance_exact", dd.exact},
                 {"enumerated", weight_distribution_to_json(wd)}};
        if (!it.note.empty()) rec["note"] = it.note;
        push_match(out, std::move(rec), ok);
    }
    return out;
}

// Criterion 7: dual distances of the ternary m = 2 subfield codes across
// the three parameter classes. The two reducible values reproduce
// measurements rather than a closed-form theorem and are tagged so.
inline CriterionResult criterion_dual_distance_contrast(const RunOptions& opt) {
    using namespace report_detail;
    CriterionResult out{7, "dual-distance contrast at p=3, m=2"};
    auto f = Field::make(3, 2);
    struct Case {
        u32 a;
        int expect;
        const char* cls;
        const char* status;
    };
    u32 quarter = f->inv(f->from_int(4).v);
    std::vector<Case> cases{
        {least_parameter(*f, QuadraticRootKind::irreducible), 4, "irreducible", "theorem-backed"},
        {least_parameter(*f, QuadraticRootKind::reducible_distinct), 3, "reducible", "measured"},
        {quarter, 3, "quarter", "measured"}};
    for (auto& cs : cases) {
        auto sub = prime_subfield_code(elliptic_code(f, cs.a));
        auto dd = dual_min_distance_upto(sub, 5);
        (void)opt;
        push_match(out,
                   json{{"claim", "dual-distance"}, {"a_class", cs.cls}, {"a", elem_to_json(*f, cs.a)},
                        {"status", cs.status}, {"expected", cs.expect}, {"measured", dd.value},
                        {"exact", dd.exact}},
                   dd.exact && dd.value == cs.expect);
    }
    return out;
}

// Criterion 8: the cap property is equivalent to the code parameters
// [q^2+1, 4, q^2-q], swept over every parameter value in each field.
inline CriterionResult criterion_geometry_code_equivalence(const RunOptions& opt) {
    using namespace report_detail;
    CriterionResult out{8, "cap/code-parameter equivalence"};
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        auto f = Field::make(p, n);
        i64 q = static_cast<i64>(f->size());
        int caps = 0, noncaps = 0;
        bool all_ok = true;
        json sweep = json::array();
        for (u64 av = 0; av < f->size(); ++av) {
            u32 a = static_cast<u32>(av);
            PointSet s = elliptic_quadric(f, f->elem(a));
            bool cap = is_cap(s, opt.workers).is_cap;
            LinearCode c(f, generator_from_points(s));
            i64 d = c.dimension() > 0 ? min_distance(c, opt.budget_log2, opt.workers) : 0;
            bool params_match = c.dimension() == 4 && d == q * q - q;
            bool ok = cap == params_match && s.size() == static_cast<size_t>(q * q + 1);
            (cap ? caps : noncaps) += 1;
            all_ok = all_ok && ok;
            sweep.push_back(json{{"a", elem_to_json(*f, a)}, {"is_cap", cap}, {"dimension", c.dimension()},
                                 {"min_distance", d}, {"equivalent", ok}});
        }
        push_match(out,
                   json{{"claim", "cap-code-equivalence"}, {"q", q}, {"cases", sweep},
                        {"cap_count", caps}, {"noncap_count", noncaps}},
                   all_ok && caps > 0 && noncaps > 0);
    }
    return out;
}

// Criterion 9: the character-sum lemma suite.
inline CriterionResult criterion_character_lemmas(const RunOptions& opt) {
    CriterionResult out{9, "character-sum identities"};
    using report_detail::push_match;

    for (int p : {3, 5, 7})
        for (int m = 1; m <= 4; ++m) {
            u64 q = 1;
            for (int i = 0; i < m; ++i) q *= static_cast<u64>(p);
            if (q > 2401) continue;
            auto f = Field::make(p, m);
            push_match(out, json{{"lemma", 5}, {"p", p}, {"m", m}}, check_gauss_sum_closed_form(*f));
            auto counts = count_eta_trace_classes(*f);
            auto expect = expected_eta_trace_classes(p, m);
            push_match(out,
                       json{{"lemma", 11}, {"p", p}, {"m", m},
                            {"counts", json::array({counts.square_trace_zero, counts.square_trace_nonzero,
                                                    counts.nonsquare_trace_zero, counts.nonsquare_trace_nonzero})}},
                       counts == expect && counts.total() == static_cast<i64>(q) - 1);
        }

    std::mt19937_64 rng(opt.seed);
    for (int p : {3, 5, 7})
        for (int m = 1; m <= 5; ++m) {
            u64 q = 1;
            for (int i = 0; i < m; ++i) q *= static_cast<u64>(p);
            if (q > 343) continue;
            auto f = Field::make(p, m);
            bool all = true;
            for (int trial = 0; trial < 100; ++trial) {
                u32 a2 = 1 + static_cast<u32>(rng() % (q - 1));
                u32 a1 = static_cast<u32>(rng() % q);
                u32 a0 = static_cast<u32>(rng() % q);
                all = all && check_weil_sum_closed_form(*f, a2, a1, a0);
            }
            push_match(out, json{{"lemma", 6}, {"p", p}, {"m", m}, {"trials", 100}}, all);
        }

    for (int p : {3, 5, 7})
        for (int m = 1; m <= 6; ++m) {
            u64 q = 1;
            for (int i = 0; i < m; ++i) q *= static_cast<u64>(p);
            if (q > 729) continue;
            auto f = Field::make(p, m);
            u32 quarter = f->inv(f->from_int(4).v);
            bool all = true;
            int irr = 0, red = 0;
            for (u64 av = 0; av < q; ++av) {
                if (static_cast<u32>(av) == quarter) continue;
                bool ok = check_discriminant_shift_sign(*f, static_cast<u32>(av));
                all = all && ok;
                (quadratic_root_test(f->elem(static_cast<u32>(av))) == QuadraticRootKind::irreducible ? irr : red) += 1;
            }
            push_match(out, json{{"lemma", "7-8"}, {"p", p}, {"m", m}, {"irreducible", irr}, {"reducible", red}},
                       all && irr > 0 && red > 0);
        }

    for (int p : {3, 5, 7, 11, 13, 17, 19, 23})
        for (int m = 1; m <= 8; ++m) {
            auto [odd_ok, even_ok] = sign_exponent_parities(p, m);
            push_match(out, json{{"lemma", "9-10"}, {"p", p}, {"m", m}}, odd_ok && even_ok);
        }
    return out;
}

// Criterion 10: structural properties of the construction.
inline CriterionResult criterion_structural_properties(const RunOptions& opt) {
    using namespace report_detail;
    CriterionResult out{10, "structural properties"};

    std::vector<std::pair<int, int>> base_fields{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}};

    // trace-oracle image equals the expanded row space wherever the message
    // space fits the exhaustive bound
    for (auto family : {std::string("elliptic"), std::string("tits")}) {
        for (auto [p, n] : base_fields) {
            if (family == "tits" && (p != 2 || n % 2 == 0 || n < 3)) continue;
            auto f = Field::make(p, n);
            double message_bits = 4 * std::log2(static_cast<double>(f->size()));
            if (message_bits > 18) continue;
            LinearCode c = family == "tits" ? tits_code(f)
                                            : elliptic_code(f, least_parameter(*f, QuadraticRootKind::irreducible));
            auto ctx = SubfieldContext::standard(f, 1);
            LinearCode sub = subfield_code_expand(c, ctx);
            u64 total = 1;
            for (int i = 0; i < 4; ++i) total *= f->size();
            std::set<std::vector<u32>> image;
            std::vector<u32> msg(4);
            for (u64 t = 0; t < total; ++t) {
                u64 r = t;
                for (int i = 0; i < 4; ++i) {
                    msg[i] = static_cast<u32>(r % f->size());
                    r /= f->size();
                }
                image.insert(subfield_code_trace_oracle(c, ctx, msg));
            }
            // enumerate the expanded code into a set
            std::set<std::vector<u32>> expanded;
            {
                const Field& sf = *sub.field();
                const Mat& g = sub.reduced_generator();
                u64 count = 1;
                for (int i = 0; i < sub.dimension(); ++i) count *= sf.size();
                std::vector<u32> cw(sub.length());
                for (u64 t = 0; t < count; ++t) {
                    u64 r = t;
                    std::fill(cw.begin(), cw.end(), 0);
                    for (int i = 0; i < sub.dimension(); ++i) {
                        u32 d = static_cast<u32>(r % sf.size());
                        r /= sf.size();
                        if (d)
                            for (size_t j = 0; j < sub.length(); ++j) cw[j] = sf.add(cw[j], sf.mul(d, g.at(i, j)));
                    }
                    expanded.insert(cw);
                }
            }
            push_match(out,
                       json{{"claim", "trace-oracle-set-equality"}, {"family", family}, {"q", f->size()},
                            {"image_size", image.size()}, {"code_size", expanded.size()}},
                       image == expanded);
        }
    }

    // basis and generator independence
    for (auto [p, n] : base_fields) {
        auto f = Field::make(p, n);
        LinearCode c = elliptic_code(f, least_parameter(*f, QuadraticRootKind::irreducible));
        auto std_ctx = SubfieldContext::standard(f, 1);
        bool bases_ok = true, gens_ok = true;
        for (u64 i = 0; i < 20; ++i) {
            SubfieldContext c1(f, 1, random_basis(f, 1, opt.seed + 2 * i));
            SubfieldContext c2(f, 1, random_basis(f, 1, opt.seed + 2 * i + 1));
            bases_ok = bases_ok && verify_basis_independence(c, c1, c2);
            gens_ok = gens_ok && verify_generator_independence(c, std_ctx, opt.seed + i);
        }
        push_match(out, json{{"claim", "basis-independence"}, {"q", f->size()}, {"pairs", 20}}, bases_ok);
        push_match(out, json{{"claim", "generator-independence"}, {"q", f->size()}, {"seeds", 20}}, gens_ok);
    }

    // dual distances never drop under the subfield construction
    {
        std::mt19937_64 rng(opt.seed ^ 0x7e57);
        int checked = 0;
        bool all = true;
        std::vector<std::array<int, 2>> towers{{2, 2}, {2, 3}, {3, 2}, {2, 4}}; // (p, n), expand to prime field
        size_t ti = 0;
        while (checked < 50) {
            auto [p, n] = towers[ti++ % towers.size()];
            auto f = Field::make(p, n);
            size_t k0 = 1 + rng() % 3, len = k0 + 4 + rng() % 12;
            if (len > 20) len = 20;
            Mat g(f, k0, len);
            for (size_t i = 0; i < k0; ++i)
                for (size_t j = 0; j < len; ++j) g.at(i, j) = static_cast<u32>(rng() % f->size());
            LinearCode c(f, g);
            if (c.dimension() == 0 || c.dimension() == static_cast<int>(len)) continue;
            auto d_orig = dual_min_distance_upto(c, 5);
            if (!d_orig.exact) continue;
            auto ctx = SubfieldContext::standard(f, 1);
            auto d_sub = dual_min_distance_upto(subfield_code_expand(c, ctx), 5);
            all = all && (d_sub.exact ? d_sub.value >= d_orig.value : 5 >= d_orig.value);
            ++checked;
        }
        push_match(out, json{{"claim", "dual-distance-monotonicity"}, {"codes", checked}}, all);
    }

    // permutation equivalence transfers through the expansion
    {
        bool all = true;
        int done = 0;
        for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
            auto f = Field::make(p, n);
            LinearCode c = elliptic_code(f, least_parameter(*f, QuadraticRootKind::irreducible));
            auto ctx = SubfieldContext::standard(f, 1);
            LinearCode sub = subfield_code_expand(c, ctx);
            std::vector<u32> ones_big(c.length(), 1), ones_sub(c.length(), 1);
            for (int t = 0; t < 5; ++t) {
                auto perm = seeded_permutation(c.length(), opt.seed + 97 * t + p + n);
                LinearCode lhs = subfield_code_expand(apply_monomial(c, perm, ones_big), ctx);
                LinearCode rhs = apply_monomial(sub, perm, ones_sub);
                all = all && row_space_equal(lhs.generator(), rhs.generator());
                ++done;
            }
        }
        push_match(out, json{{"claim", "permutation-transfer"}, {"permutations", done}}, all);
    }

    // count totals and the Griesmer equality on every constructed ovoid code
    {
        bool totals = true, griesmer = true;
        json codes = json::array();
        auto check_code = [&](const std::string& family, FieldPtr f, LinearCode&& c) {
            i64 q = static_cast<i64>(f->size());
            auto wd = weight_distribution(c, opt.budget_log2, opt.workers);
            totals = totals && totals_ok(wd, f->size(), c.dimension());
            i64 d = wd.min_nonzero_weight();
            bool meets = meets_griesmer(static_cast<i64>(c.length()), c.dimension(), d, q);
            griesmer = griesmer && meets;
            codes.push_back(json{{"family", family}, {"q", q}, {"d", d}, {"meets_griesmer", meets}});
        };
        for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
            auto f = Field::make(p, n);
            check_code("elliptic", f, elliptic_code(f, least_parameter(*f, QuadraticRootKind::irreducible)));
        }
        {
            auto f = Field::make(2, 3);
            check_code("tits", f, tits_code(f));
        }
        push_match(out, json{{"claim", "griesmer-and-totals"}, {"codes", codes}}, totals && griesmer);
    }

    // sphere-packing certificate for every dual parameter set in the sweep
    {
        bool all = true;
        json sets = json::array();
        auto check_set = [&](i64 p, i64 nn, i64 kk) {
            i64 got = sphere_packing_max_d(p, nn, kk);
            all = all && got == 4;
            sets.push_back(json::array({p, nn, kk, got}));
        };
        for (i64 m = 2; m <= 5; ++m) {
            i64 nn = detail::ipow(2, 2 * m) + 1;
            check_set(2, nn, nn - (3 * m + 1));
        }
        for (auto [p, m] : std::vector<std::pair<i64, i64>>{{3, 2}, {3, 3}, {5, 2}}) {
            i64 nn = detail::ipow(p, 2 * m) + 1;
            check_set(p, nn, nn - (3 * m + 1));
        }
        for (i64 e : {1, 2}) {
            i64 nn = detail::ipow(2, 4 * e + 2) + 1;
            check_set(2, nn, nn - (6 * e + 4));
        }
        push_match(out, json{{"claim", "dual-distance-optimality"}, {"sets", sets}}, all);
    }
    return out;
}

inline std::vector<CriterionResult> run_acceptance(const RunOptions& opt) {
    return {criterion_ovoid_enumerators(opt),
            criterion_binary_elliptic_tables(opt),
            criterion_odd_elliptic_tables(opt),
            criterion_quarter_tables(opt),
            criterion_tits_table(opt),
            criterion_example_parameters(opt),
            criterion_dual_distance_contrast(opt),
            criterion_geometry_code_equivalence(opt),
            criterion_character_lemmas(opt),
            criterion_structural_properties(opt)};
}

inline json acceptance_to_json(const std::vector<CriterionResult>& results, const RunOptions& opt) {
    json out;
    out["options"] = json{{"budget_log2", opt.budget_log2}, {"workers", opt.workers}, {"seed", opt.seed}};
    json crit = json::array();
    bool pass = true;
    for (const auto& r : results) {
        crit.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
        pass = pass && r.pass;
    }
    out["criteria"] = std::move(crit);
    out["pass"] = pass;
    return out;
}

} // namespace ovoid
