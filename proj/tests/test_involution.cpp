#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "takacs/enumerate.hpp"
#include "takacs/involution.hpp"

#include <variant>

using namespace takacs;

namespace {

PPRForest make_ppr(int n, std::vector<int> parent, std::vector<std::pair<int, int>> pairs = {}) {
    return PPRForest{n, std::move(parent), std::move(pairs)};
}

}  // namespace

TEST_CASE("merge site selection") {
    CHECK(!find_merge_site(make_ppr(2, {kRoot, 0, 0})));
    CHECK(find_merge_site(make_ppr(2, {kRoot, kRoot, kRoot}, {{1, 2}})) == MergeSite{1, 1, 2});
    CHECK(find_merge_site(make_ppr(4, {kRoot, 0, 3, kRoot, kRoot}, {{3, 4}})) ==
          MergeSite{2, 3, 4});
}

TEST_CASE("split site selection") {
    CHECK(!find_split_site(make_ppr(2, {kRoot, 0, 1})));
    CHECK(find_split_site(make_ppr(2, {kRoot, 2, 0})) == SplitSite{1, 2, 1});
    CHECK(find_split_site(make_ppr(4, {kRoot, 3, 1, 0, 0})) == SplitSite{1, 3, 1});
}

TEST_CASE("classification") {
    CHECK(std::holds_alternative<Special>(classify(make_ppr(2, {kRoot, 0, 0}))));
    CHECK(classify(make_ppr(2, {kRoot, 2, 0})) == InvolutionAction{SplitSite{1, 2, 1}});
    CHECK(classify(make_ppr(2, {kRoot, kRoot, kRoot}, {{1, 2}})) ==
          InvolutionAction{MergeSite{1, 1, 2}});
}

TEST_CASE("apply: hand traces at n=2") {
    auto paired = make_ppr(2, {kRoot, kRoot, kRoot}, {{1, 2}});
    auto chain = make_ppr(2, {kRoot, 2, 0});
    CHECK(apply(paired) == chain);
    CHECK(apply(chain) == paired);
    auto special = make_ppr(2, {kRoot, 0, 1});
    CHECK(apply(special) == special);
}

TEST_CASE("apply rejects invalid input") {
    CHECK_THROWS_AS(static_cast<void>(apply(make_ppr(2, {kRoot, kRoot, 0}))),
                    std::invalid_argument);
}

TEST_CASE("exhaustive involution properties up to n=4") {
    for (int n = 0; n <= 4; ++n) {
        for_each_ppr_forest(n, std::nullopt, [&](const PPRForest& f) {
            PPRForest g = apply(f);
            CHECK(!validate_ppr(g));
            CHECK(apply(g) == f);
            CHECK((g == f) == is_special(f));
            if (g != f) {
                int diff = static_cast<int>(pair_count(g)) - static_cast<int>(pair_count(f));
                CHECK((diff == 1 || diff == -1));
                CHECK(weight(g).sign == -weight(f).sign);
            }
        });
    }
}

TEST_CASE("verification report for n=1") {
    auto report = verify_involution(1);
    CHECK(report.total_ppr == 1);
    CHECK(report.special_count == 1);
    CHECK(report.signed_sum == SignedCount(+1, 1));
    CHECK(report.all_ok());
}

TEST_CASE("verification report for n=2") {
    auto report = verify_involution(2);
    CHECK(report.total_ppr == 4);
    CHECK(report.special_count == 2);
    CHECK(report.per_pair_count == std::vector<std::uint64_t>{3, 1});
    CHECK(report.signed_sum == SignedCount(+1, 2));
    CHECK(report.all_ok());
    CHECK(!report.first_counterexample);
}

TEST_CASE("verification report for n=5") {
    auto report = verify_involution(5);
    CHECK(report.total_ppr == 2451);
    CHECK(report.special_count == 291);
    CHECK(report.per_pair_count == std::vector<std::uint64_t>{1296, 1080, 75});
    CHECK(report.signed_sum == SignedCount(+1, 291));
    CHECK(report.all_ok());
}

TEST_CASE("verification refuses n beyond the capacity limit") {
    CHECK_THROWS_AS(static_cast<void>(verify_involution(9)), CapacityError);
}
