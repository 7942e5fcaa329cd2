#pragma once

#include "takacs/enumerate.hpp"
#include "takacs/forest.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace takacs {

// a: smallest vertex outside the tree rooted at 0; u: root of a's tree;
// v: root of the partner tree in u's pair.
struct MergeSite {
    int a{0};
    int u{0};
    int v{0};
    bool operator==(const MergeSite&) const = default;
};

// a_prime: smallest descendant of any inversion-initiating child of 0;
// v_prime: the child of 0 above it; u_prime: child of v_prime on the path down.
struct SplitSite {
    int a_prime{0};
    int v_prime{0};
    int u_prime{0};
    bool operator==(const SplitSite&) const = default;
};

struct Special {
    bool operator==(const Special&) const = default;
};

using InvolutionAction = std::variant<Special, MergeSite, SplitSite>;

std::optional<MergeSite> find_merge_site(const PPRForest& f);
std::optional<SplitSite> find_split_site(const PPRForest& f);

// Special when both sites are absent, otherwise the site with the smaller of
// a, a_prime. A tie is impossible: the two searches cover disjoint vertex sets.
InvolutionAction classify(const PPRForest& f);

// The weight-reversing involution: identity on special forests, otherwise a
// merge (pair-count - 1) or split (pair-count + 1) around the chosen site.
PPRForest apply(const PPRForest& f);

struct VerificationReport {
    int n{0};
    std::uint64_t total_ppr{0};
    std::vector<std::uint64_t> per_pair_count;
    std::uint64_t special_count{0};
    SignedCount signed_sum;
    bool involution_ok{false};
    bool sign_reversal_ok{false};
    bool fixed_points_ok{false};
    std::optional<std::string> first_counterexample;

    bool all_ok() const { return involution_ok && sign_reversal_ok && fixed_points_ok; }
};

nlohmann::json to_json(const VerificationReport& r);

// Exhaustively checks apply o apply = id, sign reversal off the fixed points,
// fixed points = special forests, and merge/split duality, over every PPR
// n-forest.
VerificationReport verify_involution(int n, int limit = kDefaultEnumerationLimit);

}  // namespace takacs
