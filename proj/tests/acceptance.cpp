// Acceptance suite: runs every criterion of the verification sweep and
// prints one pass/fail line each. Exits nonzero if anything failed.
#include "ovoid/report.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

int main() {
    ovoid::RunOptions opt;
    if (const char* env = std::getenv("OVOID_BUDGET_LOG2")) opt.budget_log2 = std::atoi(env);

    int failures = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (auto make : {ovoid::criterion_ovoid_enumerators, ovoid::criterion_binary_elliptic_tables,
                      ovoid::criterion_odd_elliptic_tables, ovoid::criterion_quarter_tables,
                      ovoid::criterion_tits_table, ovoid::criterion_example_parameters,
                      ovoid::criterion_dual_distance_contrast, ovoid::criterion_geometry_code_equivalence,
                      ovoid::criterion_character_lemmas, ovoid::criterion_structural_properties}) {
        auto start = std::chrono::steady_clock::now();
        ovoid::CriterionResult r = make(opt);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::printf("%s criterion %2d: %s (%lld ms)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    static_cast<long long>(ms.count()));
        if (!r.pass) {
            ++failures;
            for (const auto& d : r.details)
                if (d.contains("match") && !d["match"].get<bool>())
                    std::printf("     mismatch: %s\n", d.dump().c_str());
        }
    }
    auto total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::printf("%d of 10 criteria passed in %lld ms\n", 10 - failures, static_cast<long long>(total.count()));
    return failures == 0 ? 0 : 1;
}
