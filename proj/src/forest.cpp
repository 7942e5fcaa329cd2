#include "takacs/forest.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace takacs {

std::optional<std::string> validate_ppr(const PPRForest& f) {
    if (f.n < 0) {
        return "negative vertex count";
    }
    const int size = f.n + 1;
    if (static_cast<int>(f.parent.size()) != size) {
        return "parent array size mismatch";
    }
    if (f.parent[0] != kRoot) {
        return "vertex 0 is not a root";
    }
    for (int v = 1; v < size; ++v) {
        if (f.parent[v] != kRoot && (f.parent[v] < 0 || f.parent[v] > f.n)) {
            return "parent out of range";
        }
        if (f.parent[v] == v) {
            return "vertex is its own parent";
        }
    }
    // Acyclicity: walk parent chains with a step budget.
    for (int v = 0; v < size; ++v) {
        int cur = v;
        int steps = 0;
        while (f.parent[cur] != kRoot) {
            cur = f.parent[cur];
            if (++steps > size) {
                return "cycle in parent mapping";
            }
        }
    }
    std::vector<int> pair_membership(size, 0);
    int prev_r = -1;
    for (const auto& [r, s] : f.pairs) {
        if (r < 1 || r > f.n || s < 1 || s > f.n) {
            if (r == 0 || s == 0) {
                return "vertex 0 appears in a pair";
            }
            return "pair member out of range";
        }
        if (r == s) {
            return "pair with equal members";
        }
        if (r > s) {
            return "pair not in canonical order";
        }
        if (r <= prev_r) {
            return "pairs not sorted";
        }
        prev_r = r;
        for (int v : {r, s}) {
            if (f.parent[v] != kRoot) {
                return "paired vertex is not a root";
            }
            if (pair_membership[v]++) {
                return "vertex in more than one pair";
            }
        }
    }
    for (int v = 1; v < size; ++v) {
        if (f.parent[v] == kRoot && !pair_membership[v]) {
            return "unpaired non-zero root";
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate_unrooted(const UnrootedForest& g) {
    if (g.n < 0) {
        return "negative vertex count";
    }
    std::vector<int> dsu(g.n + 1);
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int x) {
        while (dsu[x] != x) {
            x = dsu[x] = dsu[dsu[x]];
        }
        return x;
    };
    std::pair<int, int> prev{-1, -1};
    for (const auto& e : g.edges) {
        const auto [u, v] = e;
        if (u < 1 || u > g.n || v < 1 || v > g.n) {
            return "edge endpoint out of range";
        }
        if (u == v) {
            return "loop edge";
        }
        if (u > v) {
            return "edge not in canonical order";
        }
        if (e <= prev) {
            return "edges not sorted";
        }
        prev = e;
        int ru = find(u), rv = find(v);
        if (ru == rv) {
            return "cycle in edge set";
        }
        dsu[ru] = rv;
    }
    return std::nullopt;
}

unsigned pair_count(const PPRForest& f) {
    return static_cast<unsigned>(f.pairs.size());
}

SignedCount weight(const PPRForest& f) {
    return SignedCount(pair_count(f) % 2 == 0 ? +1 : -1, 1);
}

int root_of(const PPRForest& f, int v) {
    while (f.parent[v] != kRoot) {
        v = f.parent[v];
    }
    return v;
}

std::vector<int> children_of(const PPRForest& f, int v) {
    std::vector<int> out;
    for (int w = 0; w <= f.n; ++w) {
        if (f.parent[w] == v) {
            out.push_back(w);
        }
    }
    return out;
}

std::vector<int> descendants(const PPRForest& f, int v) {
    std::vector<int> out;
    for (int w = 0; w <= f.n; ++w) {
        if (w == v) {
            continue;
        }
        for (int cur = w; f.parent[cur] != kRoot; ) {
            cur = f.parent[cur];
            if (cur == v) {
                out.push_back(w);
                break;
            }
        }
    }
    return out;
}

bool is_inversion_initiating(const PPRForest& f, int v) {
    for (int d : descendants(f, v)) {
        if (d < v) {
            return true;
        }
    }
    return false;
}

bool is_special(const PPRForest& f) {
    if (!f.pairs.empty()) {
        return false;
    }
    for (int c : children_of(f, 0)) {
        if (is_inversion_initiating(f, c)) {
            return false;
        }
    }
    return true;
}

UnrootedForest to_unrooted(const PPRForest& f) {
    if (!is_special(f)) {
        throw std::invalid_argument("to_unrooted: forest is not special");
    }
    UnrootedForest g;
    g.n = f.n;
    for (int v = 1; v <= f.n; ++v) {
        int p = f.parent[v];
        if (p != 0) {
            g.edges.emplace_back(std::min(v, p), std::max(v, p));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

PPRForest from_unrooted(const UnrootedForest& g) {
    if (auto bad = validate_unrooted(g)) {
        throw std::invalid_argument("from_unrooted: " + *bad);
    }
    PPRForest f;
    f.n = g.n;
    f.parent.assign(g.n + 1, kRoot);
    std::vector<std::vector<int>> adj(g.n + 1);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(g.n + 1, false);
    for (int v = 1; v <= g.n; ++v) {
        if (seen[v]) {
            continue;
        }
        // v is the smallest unseen vertex, hence the minimum of its component.
        f.parent[v] = 0;
        seen[v] = true;
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int w : adj[cur]) {
                if (!seen[w]) {
                    seen[w] = true;
                    f.parent[w] = cur;
                    stack.push_back(w);
                }
            }
        }
    }
    return f;
}

namespace {

void append_parents(std::string& out, const std::vector<int>& parent, int from) {
    for (int v = from; v < static_cast<int>(parent.size()); ++v) {
        if (v > from) {
            out += ',';
        }
        out += parent[v] == kRoot ? "R" : std::to_string(parent[v]);
    }
}

}  // namespace

std::string canonical_encode(const PPRForest& f) {
    std::string out = std::to_string(f.n) + "|";
    append_parents(out, f.parent, 0);
    out += '|';
    for (size_t i = 0; i < f.pairs.size(); ++i) {
        if (i) {
            out += ';';
        }
        out += std::to_string(f.pairs[i].first) + "-" + std::to_string(f.pairs[i].second);
    }
    return out;
}

std::string canonical_encode(const RootedForest& f) {
    std::string out = std::to_string(f.m) + "|";
    append_parents(out, f.parent, 1);
    return out;
}

std::string canonical_encode(const UnrootedForest& g) {
    std::string out = std::to_string(g.n) + "|";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i) {
            out += ';';
        }
        out += std::to_string(g.edges[i].first) + "-" + std::to_string(g.edges[i].second);
    }
    return out;
}

nlohmann::json to_json(const PPRForest& f) {
    nlohmann::json parent = nlohmann::json::array();
    for (int p : f.parent) {
        if (p == kRoot) {
            parent.push_back(nullptr);
        } else {
            parent.push_back(p);
        }
    }
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [r, s] : f.pairs) {
        pairs.push_back({r, s});
    }
    return {{"n", f.n}, {"parent", parent}, {"pairs", pairs}};
}

nlohmann::json to_json(const UnrootedForest& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges) {
        edges.push_back({u, v});
    }
    return {{"n", g.n}, {"edges", edges}};
}

PPRForest ppr_from_json(const nlohmann::json& j) {
    PPRForest f;
    f.n = j.at("n").get<int>();
    for (const auto& p : j.at("parent")) {
        f.parent.push_back(p.is_null() ? kRoot : p.get<int>());
    }
    for (const auto& pr : j.at("pairs")) {
        if (!pr.is_array() || pr.size() != 2) {
            throw std::invalid_argument("ppr_from_json: pair is not a two-element array");
        }
        f.pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
    }
    return f;
}

UnrootedForest unrooted_from_json(const nlohmann::json& j) {
    UnrootedForest g;
    g.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("unrooted_from_json: edge is not a two-element array");
        }
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

}  // namespace takacs
