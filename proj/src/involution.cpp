#include "takacs/involution.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace takacs {

std::optional<MergeSite> find_merge_site(const PPRForest& f) {
    if (f.pairs.empty()) {
        return std::nullopt;
    }
    int a = -1;
    for (int v = 1; v <= f.n; ++v) {
        if (root_of(f, v) != 0) {
            a = v;
            break;
        }
    }
    if (a < 0) {
        throw std::logic_error("find_merge_site: pairs present but every vertex hangs off 0");
    }
    int u = root_of(f, a);
    for (const auto& [r, s] : f.pairs) {
        if (r == u) {
            return MergeSite{a, u, s};
        }
        if (s == u) {
            return MergeSite{a, u, r};
        }
    }
    throw std::logic_error("find_merge_site: root of a's tree is unpaired");
}

std::optional<SplitSite> find_split_site(const PPRForest& f) {
    int a_prime = -1;
    int v_prime = -1;
    for (int c : children_of(f, 0)) {
        if (!is_inversion_initiating(f, c)) {
            continue;
        }
        for (int d : descendants(f, c)) {
            if (a_prime < 0 || d < a_prime) {
                a_prime = d;
                v_prime = c;
            }
        }
    }
    if (a_prime < 0) {
        return std::nullopt;
    }
    int u_prime = a_prime;
    while (f.parent[u_prime] != v_prime) {
        u_prime = f.parent[u_prime];
    }
    return SplitSite{a_prime, v_prime, u_prime};
}

InvolutionAction classify(const PPRForest& f) {
    auto merge = find_merge_site(f);
    auto split = find_split_site(f);
    if (!merge && !split) {
        return Special{};
    }
    if (merge && split && merge->a == split->a_prime) {
        throw std::logic_error("classify: a and a' coincide; forest is corrupt");
    }
    if (merge && (!split || merge->a < split->a_prime)) {
        return *merge;
    }
    return *split;
}

PPRForest apply(const PPRForest& f) {
    if (auto bad = validate_ppr(f)) {
        throw std::invalid_argument("apply: " + *bad);
    }
    InvolutionAction action = classify(f);
    PPRForest g = f;
    if (const auto* m = std::get_if<MergeSite>(&action)) {
        g.parent[m->v] = 0;
        g.parent[m->u] = m->v;
        std::pair<int, int> gone{std::min(m->u, m->v), std::max(m->u, m->v)};
        std::erase(g.pairs, gone);
    } else if (const auto* s = std::get_if<SplitSite>(&action)) {
        g.parent[s->v_prime] = kRoot;
        g.parent[s->u_prime] = kRoot;
        g.pairs.emplace_back(std::min(s->u_prime, s->v_prime), std::max(s->u_prime, s->v_prime));
        std::sort(g.pairs.begin(), g.pairs.end());
    }
    if (auto bad = validate_ppr(g)) {
        throw std::logic_error("apply: produced an invalid forest: " + *bad);
    }
    return g;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j{{"n", r.n},
                     {"total_ppr", r.total_ppr},
                     {"per_pair_count", r.per_pair_count},
                     {"special_count", r.special_count},
                     {"signed_sum", r.signed_sum.str()},
                     {"involution_ok", r.involution_ok},
                     {"sign_reversal_ok", r.sign_reversal_ok},
                     {"fixed_points_ok", r.fixed_points_ok}};
    if (r.first_counterexample) {
        j["first_counterexample"] = *r.first_counterexample;
    } else {
        j["first_counterexample"] = nullptr;
    }
    return j;
}

VerificationReport verify_involution(int n, int limit) {
    VerificationReport report;
    report.n = n;
    report.per_pair_count.assign(static_cast<size_t>(n / 2) + 1, 0);
    report.involution_ok = true;
    report.sign_reversal_ok = true;
    report.fixed_points_ok = true;
    boost::multiprecision::cpp_int signed_sum = 0;

    auto fail = [&](bool& flag, const PPRForest& f) {
        if (!report.first_counterexample) {
            report.first_counterexample = canonical_encode(f);
        }
        flag = false;
    };

    for_each_ppr_forest(n, std::nullopt, [&](const PPRForest& f) {
        ++report.total_ppr;
        unsigned pc = pair_count(f);
        ++report.per_pair_count[pc];
        signed_sum += weight(f).as_integer();
        bool special = is_special(f);
        if (special) {
            ++report.special_count;
        }

        PPRForest g = apply(f);
        if (apply(g) != f) {
            fail(report.involution_ok, f);
        }
        if ((g == f) != special) {
            fail(report.fixed_points_ok, f);
        }
        if (!special) {
            unsigned gpc = pair_count(g);
            if (gpc != pc + 1 && pc != gpc + 1) {
                fail(report.sign_reversal_ok, f);
            }
            // Merge/split duality: the image's action reverses ours at the
            // same site vertices.
            InvolutionAction there = classify(f);
            InvolutionAction back = classify(g);
            if (const auto* m = std::get_if<MergeSite>(&there)) {
                const auto* s = std::get_if<SplitSite>(&back);
                if (!s || s->a_prime != m->a || s->v_prime != m->v || s->u_prime != m->u) {
                    fail(report.involution_ok, f);
                }
            } else if (const auto* s = std::get_if<SplitSite>(&there)) {
                const auto* m2 = std::get_if<MergeSite>(&back);
                if (!m2 || m2->a != s->a_prime || m2->u != s->u_prime || m2->v != s->v_prime) {
                    fail(report.involution_ok, f);
                }
            } else {
                fail(report.fixed_points_ok, f);
            }
        }
    }, limit);

    report.signed_sum = signed_from(signed_sum);
    // Telescoping: the weights of non-special forests must cancel exactly.
    if (report.signed_sum.as_integer() != report.special_count) {
        report.sign_reversal_ok = false;
        if (!report.first_counterexample) {
            report.first_counterexample = "signed sum does not equal special count";
        }
    }
    return report;
}

}  // namespace takacs
