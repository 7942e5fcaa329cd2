#pragma once

#include "takacs/exact.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace takacs {

// Parent marker for roots in parent arrays.
inline constexpr int kRoot = -1;

// Forest of rooted trees on [1, m]; parent[0] is unused and set to kRoot.
struct RootedForest {
    int m{0};
    std::vector<int> parent;  // size m + 1

    bool operator==(const RootedForest&) const = default;
};

// Partially-paired rooted forest on [0, n]: a tree rooted at 0 plus a perfect
// matching (pairs of tree roots) on all remaining roots.
struct PPRForest {
    int n{0};
    std::vector<int> parent;                // size n + 1; parent[0] == kRoot
    std::vector<std::pair<int, int>> pairs; // each (r, s) with r < s, sorted by r

    bool operator==(const PPRForest&) const = default;
};

// Acyclic simple graph on [1, n].
struct UnrootedForest {
    int n{0};
    std::vector<std::pair<int, int>> edges;  // each (u, v) with u < v, sorted

    bool operator==(const UnrootedForest&) const = default;
};

// nullopt when valid, otherwise a description of the first violated invariant.
std::optional<std::string> validate_ppr(const PPRForest& f);
std::optional<std::string> validate_unrooted(const UnrootedForest& g);

unsigned pair_count(const PPRForest& f);

// (-1)^pair_count as a SignedCount of magnitude 1.
SignedCount weight(const PPRForest& f);

// Root of the tree containing v.
int root_of(const PPRForest& f, int v);

// Children of v in ascending label order.
std::vector<int> children_of(const PPRForest& f, int v);

// Proper descendants of v, ascending.
std::vector<int> descendants(const PPRForest& f, int v);

// True iff some descendant of v carries a smaller label.
bool is_inversion_initiating(const PPRForest& f, int v);

// Pair-count 0 and every child of 0 regular; these represent unrooted forests.
bool is_special(const PPRForest& f);

// Drop vertex 0 from a special forest, keeping all parent links among [1, n].
UnrootedForest to_unrooted(const PPRForest& f);

// Root each component at its smallest vertex and attach those roots to 0.
PPRForest from_unrooted(const UnrootedForest& g);

// Deterministic injective text encodings, used as stream/orbit keys.
std::string canonical_encode(const PPRForest& f);
std::string canonical_encode(const RootedForest& f);
std::string canonical_encode(const UnrootedForest& g);

nlohmann::json to_json(const PPRForest& f);
nlohmann::json to_json(const UnrootedForest& g);
PPRForest ppr_from_json(const nlohmann::json& j);
UnrootedForest unrooted_from_json(const nlohmann::json& j);

}  // namespace takacs
