#include "takacs/enumerate.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace takacs {

namespace {

constexpr int kUnassigned = -2;

void check_capacity(int n, int limit, const char* what) {
    if (n < 0) {
        throw std::domain_error(std::string(what) + ": negative size");
    }
    if (n > limit) {
        throw CapacityError(std::string(what) + ": size " + std::to_string(n) +
                            " exceeds enumeration limit " + std::to_string(limit));
    }
}

// All candidate edges of the complete graph on [1, n], lexicographic.
std::vector<std::pair<int, int>> all_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return edges;
}

int dsu_find(std::vector<int>& dsu, int x) {
    while (dsu[x] != x) {
        x = dsu[x];
    }
    return x;
}

void visit_forests_from(const std::vector<std::pair<int, int>>& edges, size_t start,
                        std::vector<int>& dsu, UnrootedForest& current,
                        const std::function<void(const UnrootedForest&)>& visit) {
    visit(current);
    for (size_t i = start; i < edges.size(); ++i) {
        int ru = dsu_find(dsu, edges[i].first);
        int rv = dsu_find(dsu, edges[i].second);
        if (ru == rv) {
            continue;
        }
        dsu[ru] = rv;
        current.edges.push_back(edges[i]);
        visit_forests_from(edges, i + 1, dsu, current, visit);
        current.edges.pop_back();
        dsu[ru] = ru;
    }
}

std::uint64_t count_forests_from(const std::vector<std::pair<int, int>>& edges, size_t start,
                                 std::vector<int>& dsu) {
    std::uint64_t total = 1;
    for (size_t i = start; i < edges.size(); ++i) {
        int ru = dsu_find(dsu, edges[i].first);
        int rv = dsu_find(dsu, edges[i].second);
        if (ru == rv) {
            continue;
        }
        dsu[ru] = rv;
        total += count_forests_from(edges, i + 1, dsu);
        dsu[ru] = ru;
    }
    return total;
}

// True iff setting parent[v] = p would close a cycle among assigned links.
bool closes_cycle(const std::vector<int>& parent, int v, int p) {
    int cur = p;
    while (true) {
        if (cur == v) {
            return true;
        }
        int next = parent[cur];
        if (next == kRoot || next == kUnassigned) {
            return false;
        }
        cur = next;
    }
}

// Enumerates parent assignments for the non-root vertices of [lo, hi], in
// increasing vertex order with parent candidates in increasing order.
void visit_parent_arrays(int lo, int hi, const std::vector<int>& nonroots, size_t idx,
                         std::vector<int>& parent, const std::function<void()>& emit) {
    if (idx == nonroots.size()) {
        emit();
        return;
    }
    int v = nonroots[idx];
    for (int p = lo; p <= hi; ++p) {
        if (p == v || closes_cycle(parent, v, p)) {
            continue;
        }
        parent[v] = p;
        visit_parent_arrays(lo, hi, nonroots, idx + 1, parent, emit);
        parent[v] = kUnassigned;
    }
}

std::uint64_t count_parent_arrays(int lo, int hi, const std::vector<int>& nonroots, size_t idx,
                                  std::vector<int>& parent) {
    if (idx == nonroots.size()) {
        return 1;
    }
    std::uint64_t total = 0;
    int v = nonroots[idx];
    for (int p = lo; p <= hi; ++p) {
        if (p == v || closes_cycle(parent, v, p)) {
            continue;
        }
        parent[v] = p;
        total += count_parent_arrays(lo, hi, nonroots, idx + 1, parent);
        parent[v] = kUnassigned;
    }
    return total;
}

std::vector<int> nonroots_of(int lo, int hi, const std::vector<char>& is_root) {
    std::vector<int> nonroots;
    for (int v = lo; v <= hi; ++v) {
        if (!is_root[v]) {
            nonroots.push_back(v);
        }
    }
    return nonroots;
}

void check_roots(int m, const std::vector<int>& roots) {
    if (roots.empty()) {
        throw std::domain_error("rooted forest enumeration: root set is empty");
    }
    for (int r : roots) {
        if (r < 1 || r > m) {
            throw std::domain_error("rooted forest enumeration: root out of range");
        }
    }
}

// All size-k subsets of [1, n] in lexicographic order.
void visit_subsets(int n, int k, int next, std::vector<int>& chosen,
                   const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(chosen.size()) == k) {
        visit(chosen);
        return;
    }
    for (int v = next; v <= n; ++v) {
        chosen.push_back(v);
        visit_subsets(n, k, v + 1, chosen, visit);
        chosen.pop_back();
    }
}

// Perfect matchings of the sorted element list: pair the smallest remaining
// element with each later one in turn.
void visit_matchings(std::vector<int>& elems, std::vector<std::pair<int, int>>& matching,
                     const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
    if (elems.empty()) {
        visit(matching);
        return;
    }
    int first = elems.front();
    for (size_t i = 1; i < elems.size(); ++i) {
        std::vector<int> rest;
        for (size_t k = 1; k < elems.size(); ++k) {
            if (k != i) {
                rest.push_back(elems[k]);
            }
        }
        matching.emplace_back(first, elems[i]);
        visit_matchings(rest, matching, visit);
        matching.pop_back();
    }
}

std::uint64_t count_matchings(int size) {
    std::uint64_t total = 1;
    for (int i = size; i > 1; i -= 2) {
        total *= static_cast<std::uint64_t>(i - 1);
    }
    return (size % 2 == 0) ? total : 0;
}

struct PPRJob {
    std::vector<int> paired;  // the 2j paired vertices
};

std::vector<PPRJob> ppr_jobs(int n, std::optional<int> j) {
    if (j && 2 * *j > n) {
        throw std::domain_error("ppr enumeration: 2j exceeds n");
    }
    std::vector<PPRJob> jobs;
    for (int jj = 0; 2 * jj <= n; ++jj) {
        if (j && *j != jj) {
            continue;
        }
        std::vector<int> chosen;
        visit_subsets(n, 2 * jj, 1, chosen,
                      [&](const std::vector<int>& s) { jobs.push_back({s}); });
    }
    return jobs;
}

std::uint64_t count_ppr_job(int n, const PPRJob& job) {
    std::vector<char> is_root(n + 1, 0);
    is_root[0] = 1;
    for (int r : job.paired) {
        is_root[r] = 1;
    }
    std::vector<int> nonroots = nonroots_of(0, n, is_root);
    std::vector<int> parent(n + 1, kUnassigned);
    parent[0] = kRoot;
    for (int r : job.paired) {
        parent[r] = kRoot;
    }
    return count_matchings(static_cast<int>(job.paired.size())) *
           count_parent_arrays(0, n, nonroots, 0, parent);
}

}  // namespace

void for_each_unrooted_forest(int n, const std::function<void(const UnrootedForest&)>& visit,
                              int limit) {
    check_capacity(n, limit, "unrooted forest enumeration");
    auto edges = all_edges(n);
    std::vector<int> dsu(n + 1);
    for (int i = 0; i <= n; ++i) {
        dsu[i] = i;
    }
    UnrootedForest current;
    current.n = n;
    visit_forests_from(edges, 0, dsu, current, visit);
}

void for_each_rooted_forest(int m, const std::vector<int>& roots,
                            const std::function<void(const RootedForest&)>& visit, int limit) {
    check_capacity(m, limit, "rooted forest enumeration");
    check_roots(m, roots);
    std::vector<char> is_root(m + 1, 0);
    for (int r : roots) {
        is_root[r] = 1;
    }
    RootedForest f;
    f.m = m;
    f.parent.assign(m + 1, kUnassigned);
    f.parent[0] = kRoot;  // index 0 unused
    for (int r : roots) {
        if (is_root[r]) {
            f.parent[r] = kRoot;
        }
    }
    std::vector<int> nonroots = nonroots_of(1, m, is_root);
    visit_parent_arrays(1, m, nonroots, 0, f.parent, [&] { visit(f); });
}

void for_each_ppr_forest(int n, std::optional<int> j,
                         const std::function<void(const PPRForest&)>& visit, int limit) {
    check_capacity(n, limit, "ppr forest enumeration");
    for (const PPRJob& job : ppr_jobs(n, j)) {
        std::vector<char> is_root(n + 1, 0);
        is_root[0] = 1;
        for (int r : job.paired) {
            is_root[r] = 1;
        }
        PPRForest f;
        f.n = n;
        f.parent.assign(n + 1, kUnassigned);
        f.parent[0] = kRoot;
        for (int r : job.paired) {
            f.parent[r] = kRoot;
        }
        std::vector<int> nonroots = nonroots_of(0, n, is_root);
        std::vector<int> elems = job.paired;
        std::vector<std::pair<int, int>> matching;
        if (job.paired.empty()) {
            visit_parent_arrays(0, n, nonroots, 0, f.parent, [&] {
                f.pairs.clear();
                visit(f);
            });
        } else {
            visit_matchings(elems, matching, [&](const std::vector<std::pair<int, int>>& pairs) {
                f.pairs = pairs;
                std::sort(f.pairs.begin(), f.pairs.end());
                visit_parent_arrays(0, n, nonroots, 0, f.parent, [&] { visit(f); });
            });
        }
    }
}

std::vector<UnrootedForest> enumerate_unrooted_forests(int n, int limit) {
    std::vector<UnrootedForest> out;
    for_each_unrooted_forest(n, [&](const UnrootedForest& g) { out.push_back(g); }, limit);
    return out;
}

std::vector<RootedForest> enumerate_rooted_forests(int m, const std::vector<int>& roots,
                                                   int limit) {
    std::vector<RootedForest> out;
    for_each_rooted_forest(m, roots, [&](const RootedForest& f) { out.push_back(f); }, limit);
    return out;
}

std::vector<PPRForest> enumerate_ppr_forests(int n, std::optional<int> j, int limit) {
    std::vector<PPRForest> out;
    for_each_ppr_forest(n, j, [&](const PPRForest& f) { out.push_back(f); }, limit);
    return out;
}

std::uint64_t count_unrooted_forests(int n, int threads, int limit) {
    check_capacity(n, limit, "unrooted forest counting");
    auto edges = all_edges(n);
    std::vector<int> identity(n + 1);
    for (int i = 0; i <= n; ++i) {
        identity[i] = i;
    }
    if (threads <= 1) {
        std::vector<int> dsu = identity;
        return count_forests_from(edges, 0, dsu);
    }
    const int m = static_cast<int>(edges.size());
    std::uint64_t total = 1;  // the edgeless forest
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic) reduction(+ : total)
#endif
    for (int i = 0; i < m; ++i) {
        std::vector<int> dsu = identity;
        dsu[edges[i].first] = edges[i].second;
        total += count_forests_from(edges, i + 1, dsu);
    }
    return total;
}

std::uint64_t count_rooted_forests(int m, const std::vector<int>& roots, int threads, int limit) {
    check_capacity(m, limit, "rooted forest counting");
    check_roots(m, roots);
    std::vector<char> is_root(m + 1, 0);
    for (int r : roots) {
        is_root[r] = 1;
    }
    std::vector<int> nonroots = nonroots_of(1, m, is_root);
    std::vector<int> parent(m + 1, kUnassigned);
    parent[0] = kRoot;
    for (int r : roots) {
        parent[r] = kRoot;
    }
    if (threads <= 1 || nonroots.empty()) {
        return count_parent_arrays(1, m, nonroots, 0, parent);
    }
    const int first = nonroots.front();
    std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic) reduction(+ : total)
#endif
    for (int p = 1; p <= m; ++p) {
        if (p == first) {
            continue;
        }
        std::vector<int> local = parent;
        local[first] = p;
        total += count_parent_arrays(1, m, nonroots, 1, local);
    }
    return total;
}

std::uint64_t count_ppr_forests(int n, std::optional<int> j, int threads, int limit) {
    check_capacity(n, limit, "ppr forest counting");
    std::vector<PPRJob> jobs = ppr_jobs(n, j);
    const int njobs = static_cast<int>(jobs.size());
    std::uint64_t total = 0;
    if (threads <= 1) {
        for (const PPRJob& job : jobs) {
            total += count_ppr_job(n, job);
        }
        return total;
    }
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic) reduction(+ : total)
#endif
    for (int i = 0; i < njobs; ++i) {
        total += count_ppr_job(n, jobs[i]);
    }
    return total;
}

}  // namespace takacs
