// End-to-end acceptance suite. Every check is exact; one PASS/FAIL line is
// printed per criterion and the process exits nonzero if any criterion fails.

#include "cli_runner.hpp"

#include "takacs/enumerate.hpp"
#include "takacs/exact.hpp"
#include "takacs/forest.hpp"
#include "takacs/involution.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <variant>
#include <vector>

using namespace takacs;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& check) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = check();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                seconds, error.empty() ? "" : " — ", error.c_str());
    if (!ok) {
        ++failures;
    }
}

bool formula_vs_oracle() {
    const std::vector<std::uint64_t> expected{1, 1, 2, 7, 38, 291, 2932, 36961};
    for (int n = 0; n <= 7; ++n) {
        if (count_unrooted_forests(n) != expected[n]) {
            return false;
        }
        if (takacs_count(static_cast<unsigned>(n)) != Natural(expected[n])) {
            return false;
        }
    }
    return true;
}

bool rational_form_agrees() {
    for (unsigned n = 1; n <= 200; ++n) {
        if (takacs_count_eq1(n) != takacs_count(n)) {
            return false;
        }
    }
    return true;
}

bool moon_formula() {
    for (int m = 1; m <= 6; ++m) {
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> roots;
            for (int v = 1; v <= m; ++v) {
                if (mask & (1u << (v - 1))) {
                    roots.push_back(v);
                }
            }
            Natural expected = rooted_forest_count_specified_roots(
                static_cast<unsigned>(m), static_cast<unsigned>(roots.size()));
            if (Natural(count_rooted_forests(m, roots)) != expected) {
                return false;
            }
        }
    }
    return true;
}

bool cayley_cross_check() {
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t total = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> roots;
            for (int v = 1; v <= n; ++v) {
                if (mask & (1u << (v - 1))) {
                    roots.push_back(v);
                }
            }
            total += count_rooted_forests(n, roots);
        }
        if (Natural(total) != cayley_rooted_forest_count(static_cast<unsigned>(n))) {
            return false;
        }
    }
    return true;
}

bool term_stratification() {
    for (int n = 0; n <= 6; ++n) {
        for (int j = 0; 2 * j <= n; ++j) {
            Natural expected = takacs_term(static_cast<unsigned>(n), static_cast<unsigned>(j)).magnitude;
            if (Natural(count_ppr_forests(n, j)) != expected) {
                return false;
            }
        }
    }
    return true;
}

bool involution_suite() {
    for (int n = 0; n <= 6; ++n) {
        VerificationReport report = verify_involution(n);
        if (!report.all_ok()) {
            return false;
        }
        // Orbit structure: non-special forests pair off into two-element
        // orbits of adjacent parity, one merge side and one split side.
        bool orbits_ok = true;
        for_each_ppr_forest(n, std::nullopt, [&](const PPRForest& f) {
            InvolutionAction action = classify(f);
            if (std::holds_alternative<Special>(action)) {
                return;
            }
            PPRForest g = apply(f);
            if (g == f || apply(g) != f) {
                orbits_ok = false;
            }
            bool merged = std::holds_alternative<MergeSite>(action);
            bool partner_split = std::holds_alternative<SplitSite>(classify(g));
            if (merged != partner_split) {
                orbits_ok = false;
            }
        });
        if (!orbits_ok) {
            return false;
        }
    }
    return true;
}

bool bijection_suite() {
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t special = 0;
        bool ok = true;
        for_each_ppr_forest(n, 0, [&](const PPRForest& f) {
            if (!is_special(f)) {
                return;
            }
            ++special;
            if (from_unrooted(to_unrooted(f)) != f) {
                ok = false;
            }
        });
        for_each_unrooted_forest(n, [&](const UnrootedForest& g) {
            if (to_unrooted(from_unrooted(g)) != g) {
                ok = false;
            }
        });
        if (!ok || Natural(special) != takacs_count(static_cast<unsigned>(n))) {
            return false;
        }
    }
    return true;
}

bool scale_smoke_test() {
    auto start = std::chrono::steady_clock::now();
    Natural value = takacs_count(100);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 1.0) {
        return false;
    }
    if (takacs_count_eq1(100) != value) {
        return false;
    }
    auto r = cli::run("count --n 100 --method eq1");
    return r.exit_code == 0 && r.out == value.str() + "\n";
}

bool cli_contract() {
    auto golden = [](const char* name) {
        return cli::slurp(std::filesystem::path(GOLDEN_DIR) / name);
    };
    auto terms = cli::run("terms --n 3 --format csv");
    if (terms.exit_code != 0 || terms.out != golden("terms_n3.csv")) {
        return false;
    }
    auto sequence = cli::run("sequence --max-n 7");
    if (sequence.exit_code != 0 || sequence.out != golden("sequence_maxn7.txt")) {
        return false;
    }
    auto enumerate = cli::run("enumerate --n 2 --kind ppr");
    if (enumerate.exit_code != 0 || enumerate.out != golden("enumerate_n2_ppr.jsonl")) {
        return false;
    }
    if (cli::run("count --n 3").exit_code != 0) {
        return false;
    }
    if (cli::run("apply", R"({"n":1,"parent":[null,null],"pairs":[]})").exit_code != 1) {
        return false;
    }
    if (cli::run("count --n 3 --method nosuch").exit_code != 2) {
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "formula equals brute-force unrooted count for n <= 7", formula_vs_oracle);
    criterion(2, "rational and term forms agree for n = 1..200", rational_form_agrees);
    criterion(3, "specified-roots forest count matches enumeration for m <= 6", moon_formula);
    criterion(4, "rooted-forest totals match (n+1)^(n-1) for n <= 5", cayley_cross_check);
    criterion(5, "per-term magnitudes match enumerated pair-count strata for n <= 6",
              term_stratification);
    criterion(6, "involution is weight-reversing with special fixed points for n <= 6",
              involution_suite);
    criterion(7, "special forests biject with unrooted forests for n <= 6", bijection_suite);
    criterion(8, "count at n = 100 is fast, deterministic, and round-trips via the CLI",
              scale_smoke_test);
    criterion(9, "CLI golden files and exit-code matrix", cli_contract);
    return failures == 0 ? 0 : 1;
}
