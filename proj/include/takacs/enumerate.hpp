#pragma once

#include "takacs/forest.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace takacs {

// Exhaustive enumeration is capped; the formulas are the only source of truth
// beyond desk scale.
inline constexpr int kDefaultEnumerationLimit = 8;

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Streaming enumerators. Each yields every structure exactly once in a fixed
// lexicographic backtracking order, identical across runs and platforms.

void for_each_unrooted_forest(int n, const std::function<void(const UnrootedForest&)>& visit,
                              int limit = kDefaultEnumerationLimit);

// roots must be a nonempty subset of [1, m].
void for_each_rooted_forest(int m, const std::vector<int>& roots,
                            const std::function<void(const RootedForest&)>& visit,
                            int limit = kDefaultEnumerationLimit);

// All valid PPR forests on [0, n], filtered to pair-count j when given.
void for_each_ppr_forest(int n, std::optional<int> j,
                         const std::function<void(const PPRForest&)>& visit,
                         int limit = kDefaultEnumerationLimit);

std::vector<UnrootedForest> enumerate_unrooted_forests(int n, int limit = kDefaultEnumerationLimit);
std::vector<RootedForest> enumerate_rooted_forests(int m, const std::vector<int>& roots,
                                                   int limit = kDefaultEnumerationLimit);
std::vector<PPRForest> enumerate_ppr_forests(int n, std::optional<int> j = std::nullopt,
                                             int limit = kDefaultEnumerationLimit);

// Counting kernels. threads <= 1 runs the serial reference path; threads > 1
// partitions the top level of the search tree across OpenMP workers. Both
// paths visit the same search tree and must agree exactly.

std::uint64_t count_unrooted_forests(int n, int threads = 1, int limit = kDefaultEnumerationLimit);
std::uint64_t count_rooted_forests(int m, const std::vector<int>& roots, int threads = 1,
                                   int limit = kDefaultEnumerationLimit);
std::uint64_t count_ppr_forests(int n, std::optional<int> j = std::nullopt, int threads = 1,
                                int limit = kDefaultEnumerationLimit);

}  // namespace takacs
