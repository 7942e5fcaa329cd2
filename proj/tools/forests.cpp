// forests: counting, enumeration, and involution verification for labeled
// forests, exposed as a reproducible command-line surface.

#include "takacs/enumerate.hpp"
#include "takacs/exact.hpp"
#include "takacs/forest.hpp"
#include "takacs/involution.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace takacs;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string dot_escape_header(const std::string& name) {
    return "digraph " + name + " {\n  rankdir=TB;\n  node [shape=circle];\n";
}

std::string render_dot(const PPRForest& f) {
    std::string out = dot_escape_header("ppr");
    out += "  0 [shape=doublecircle];\n";
    for (int v = 1; v <= f.n; ++v) {
        if (f.parent[v] != kRoot) {
            out += "  " + std::to_string(f.parent[v]) + " -> " + std::to_string(v) + ";\n";
        }
    }
    int cluster = 0;
    for (const auto& [r, s] : f.pairs) {
        out += "  subgraph cluster_" + std::to_string(cluster++) + " {\n    style=dashed;\n";
        for (int v = 1; v <= f.n; ++v) {
            int root = root_of(f, v);
            if (root == r || root == s) {
                out += "    " + std::to_string(v) + ";\n";
            }
        }
        out += "  }\n";
    }
    out += "}\n";
    return out;
}

std::string render_dot(const UnrootedForest& g) {
    std::string out = "graph unrooted {\n  node [shape=circle];\n";
    for (int v = 1; v <= g.n; ++v) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (const auto& [u, v] : g.edges) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string render_dot(const RootedForest& f) {
    std::string out = dot_escape_header("rooted");
    for (int v = 1; v <= f.m; ++v) {
        out += "  " + std::to_string(v) + ";\n";
        if (f.parent[v] != kRoot) {
            out += "  " + std::to_string(f.parent[v]) + " -> " + std::to_string(v) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

nlohmann::json rooted_to_json(const RootedForest& f) {
    nlohmann::json parent = nlohmann::json::array();
    for (int v = 1; v <= f.m; ++v) {
        if (f.parent[v] == kRoot) {
            parent.push_back(nullptr);
        } else {
            parent.push_back(f.parent[v]);
        }
    }
    return {{"m", f.m}, {"parent", parent}};
}

class DotWriter {
  public:
    DotWriter(std::string dir, std::string prefix)
        : dir_(std::move(dir)), prefix_(std::move(prefix)) {
        std::filesystem::create_directories(dir_);
    }

    void write(const std::string& body) {
        char name[32];
        std::snprintf(name, sizeof(name), "%s_%06zu.dot", prefix_.c_str(), index_++);
        std::ofstream out(std::filesystem::path(dir_) / name);
        out << body;
    }

  private:
    std::string dir_;
    std::string prefix_;
    size_t index_ = 0;
};

int run_count(unsigned n, const std::string& method, int threads, int limit) {
    if (method == "eq1") {
        std::cout << takacs_count_eq1(n).str() << "\n";
    } else if (method == "eq2") {
        std::cout << takacs_count(n).str() << "\n";
    } else {
        std::cout << count_unrooted_forests(static_cast<int>(n), threads, limit) << "\n";
    }
    return kExitOk;
}

int run_terms(unsigned n, const std::string& format) {
    struct Row {
        unsigned j;
        Natural a, b;
        SignedCount term;
        boost::multiprecision::cpp_int partial;
    };
    std::vector<Row> rows;
    boost::multiprecision::cpp_int partial = 0;
    for (unsigned j = 0; 2 * j <= n; ++j) {
        Row row;
        row.j = j;
        row.a = matching_selection_count(n, j);
        row.b = rooted_forest_count_specified_roots(n + 1, 2 * j + 1);
        row.term = takacs_term(n, j);
        partial += row.term.as_integer();
        row.partial = partial;
        rows.push_back(std::move(row));
    }
    if (format == "csv") {
        std::cout << "j,A,B,sign,term,partial_sum\n";
        for (const Row& r : rows) {
            std::cout << r.j << "," << r.a.str() << "," << r.b.str() << ","
                      << (r.term.sign < 0 ? "-" : "+") << "," << r.term.magnitude.str() << ","
                      << r.partial.str() << "\n";
        }
    } else if (format == "json") {
        for (const Row& r : rows) {
            nlohmann::json row{{"j", r.j},
                               {"A", r.a.str()},
                               {"B", r.b.str()},
                               {"sign", r.term.sign < 0 ? "-" : "+"},
                               {"term", r.term.magnitude.str()},
                               {"partial_sum", r.partial.str()}};
            std::cout << row.dump() << "\n";
        }
    } else if (format == "plain") {
        std::cout << "j A B sign term partial_sum\n";
        for (const Row& r : rows) {
            std::cout << r.j << " " << r.a.str() << " " << r.b.str() << " "
                      << (r.term.sign < 0 ? "-" : "+") << " " << r.term.magnitude.str() << " "
                      << r.partial.str() << "\n";
        }
    } else {
        std::cerr << "terms: unsupported format '" << format << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_sequence(unsigned max_n, const std::string& kind) {
    bool first = true;
    auto emit = [&](const Natural& v) {
        if (!first) {
            std::cout << ", ";
        }
        first = false;
        std::cout << v.str();
    };
    if (kind == "rooted") {
        for (unsigned n = 1; n <= max_n; ++n) {
            emit(cayley_rooted_forest_count(n));
        }
        if (first) {
            std::cerr << "sequence: rooted kind starts at n = 1\n";
            return kExitUsage;
        }
    } else if (kind == "unrooted") {
        for (unsigned n = 0; n <= max_n; ++n) {
            emit(takacs_count(n));
        }
    } else {
        std::cerr << "sequence: unsupported kind '" << kind << "'\n";
        return kExitUsage;
    }
    std::cout << "\n";
    return kExitOk;
}

int run_enumerate(int n, const std::string& kind, std::optional<int> j, const std::string& format,
                  const std::string& out_dir, int limit) {
    const bool dot = format == "dot";
    if (!dot && format != "json") {
        std::cerr << "enumerate: unsupported format '" << format << "'\n";
        return kExitUsage;
    }
    if (dot && out_dir.empty()) {
        std::cerr << "enumerate: --format dot requires --out-dir\n";
        return kExitUsage;
    }
    DotWriter writer(out_dir.empty() ? "." : out_dir, kind);
    if (kind == "unrooted") {
        for_each_unrooted_forest(n, [&](const UnrootedForest& g) {
            if (dot) {
                writer.write(render_dot(g));
            } else {
                std::cout << to_json(g).dump() << "\n";
            }
        }, limit);
    } else if (kind == "ppr") {
        for_each_ppr_forest(n, j, [&](const PPRForest& f) {
            if (dot) {
                writer.write(render_dot(f));
            } else {
                std::cout << to_json(f).dump() << "\n";
            }
        }, limit);
    } else if (kind == "rooted") {
        // Every rooted forest on [1, n] appears under exactly one root set.
        std::vector<int> roots;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            roots.clear();
            for (int v = 1; v <= n; ++v) {
                if (mask & (1u << (v - 1))) {
                    roots.push_back(v);
                }
            }
            for_each_rooted_forest(n, roots, [&](const RootedForest& f) {
                if (dot) {
                    writer.write(render_dot(f));
                } else {
                    std::cout << rooted_to_json(f).dump() << "\n";
                }
            }, limit);
        }
    } else {
        std::cerr << "enumerate: unsupported kind '" << kind << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_verify(int max_n, int limit) {
    bool all_ok = true;
    for (int n = 0; n <= max_n; ++n) {
        VerificationReport report = verify_involution(n, limit);
        std::cout << to_json(report).dump() << "\n";
        if (!report.all_ok()) {
            all_ok = false;
        }
        // Cross-checks beyond the involution itself: the survivors really are
        // the unrooted forests, and the formula agrees with the oracle.
        Natural expected = takacs_count(static_cast<unsigned>(n));
        if (Natural(report.special_count) != expected) {
            std::cerr << "verify: special count " << report.special_count
                      << " disagrees with formula " << expected.str() << " at n=" << n << "\n";
            all_ok = false;
        }
        std::uint64_t brute = count_unrooted_forests(n, 1, limit);
        if (Natural(brute) != expected) {
            std::cerr << "verify: brute-force unrooted count " << brute
                      << " disagrees with formula at n=" << n << "\n";
            all_ok = false;
        }
        bool roundtrips_ok = true;
        for_each_unrooted_forest(n, [&](const UnrootedForest& g) {
            PPRForest f = from_unrooted(g);
            if (!is_special(f) || to_unrooted(f) != g) {
                roundtrips_ok = false;
            }
        }, limit);
        for_each_ppr_forest(n, 0, [&](const PPRForest& f) {
            if (is_special(f) && from_unrooted(to_unrooted(f)) != f) {
                roundtrips_ok = false;
            }
        }, limit);
        if (!roundtrips_ok) {
            std::cerr << "verify: unrooted round-trip failed at n=" << n << "\n";
            all_ok = false;
        }
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int run_apply() {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    nlohmann::json parsed;
    PPRForest f;
    try {
        parsed = nlohmann::json::parse(buffer.str());
        f = ppr_from_json(parsed);
    } catch (const std::exception& e) {
        std::cerr << "apply: cannot parse input: " << e.what() << "\n";
        return kExitUsage;
    }
    if (auto bad = validate_ppr(f)) {
        std::cerr << "apply: invalid forest: " << *bad << "\n";
        return kExitCheckFailed;
    }
    InvolutionAction action = classify(f);
    PPRForest g = apply(f);
    std::cout << to_json(g).dump() << "\n";
    if (const auto* m = std::get_if<MergeSite>(&action)) {
        std::cerr << "merge a=" << m->a << " u=" << m->u << " v=" << m->v << "\n";
    } else if (const auto* s = std::get_if<SplitSite>(&action)) {
        std::cerr << "split a'=" << s->a_prime << " v'=" << s->v_prime << " u'=" << s->u_prime
                  << "\n";
    } else {
        std::cerr << "special\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Labeled forest counting and involution verification"};
    app.require_subcommand(1);

    unsigned n = 0;
    unsigned max_n = 0;
    int enum_n = 0;
    std::string method = "eq2";
    std::string kind = "unrooted";
    std::string format = "json";
    std::string terms_format = "plain";
    std::string out_dir;
    int limit = takacs::kDefaultEnumerationLimit;
    int threads = 1;
    std::optional<int> j;
    int j_flag = -1;

    auto* count = app.add_subcommand("count", "Number of forests of unrooted trees on [n]");
    count->add_option("--n", n, "Vertex count")->required();
    count->add_option("--method", method, "eq1 | eq2 | bruteforce")
        ->check(CLI::IsMember({"eq1", "eq2", "bruteforce"}));
    count->add_option("--threads", threads, "Workers for brute-force counting");
    count->add_option("--limit", limit, "Enumeration capacity override");

    auto* terms = app.add_subcommand("terms", "Per-j terms of the alternating sum");
    terms->add_option("--n", n, "Vertex count")->required();
    terms->add_option("--format", terms_format, "json | csv | plain");

    auto* sequence = app.add_subcommand("sequence", "Counts for n = 0..max_n");
    sequence->add_option("--max-n", max_n, "Largest n")->required();
    sequence->add_option("--kind", kind, "unrooted | rooted");

    auto* enumerate = app.add_subcommand("enumerate", "Stream every structure of a family");
    enumerate->add_option("--n", enum_n, "Vertex count")->required();
    enumerate->add_option("--kind", kind, "unrooted | ppr | rooted");
    enumerate->add_option("--j", j_flag, "Restrict PPR forests to this pair-count");
    enumerate->add_option("--format", format, "json | dot");
    enumerate->add_option("--out-dir", out_dir, "Output directory for dot files");
    enumerate->add_option("--limit", limit, "Enumeration capacity override");

    auto* verify = app.add_subcommand("verify", "Exhaustively verify the involution");
    verify->add_option("--max-n", max_n, "Verify for n = 0..max_n")->required();
    verify->add_option("--limit", limit, "Enumeration capacity override");

    app.add_subcommand("apply", "Apply the involution to a PPR forest from stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (j_flag >= 0) {
        j = j_flag;
    }

    try {
        if (count->parsed()) {
            return run_count(n, method, threads, limit);
        }
        if (terms->parsed()) {
            return run_terms(n, terms_format);
        }
        if (sequence->parsed()) {
            return run_sequence(max_n, kind);
        }
        if (enumerate->parsed()) {
            return run_enumerate(enum_n, kind, j, format, out_dir, limit);
        }
        if (verify->parsed()) {
            return run_verify(static_cast<int>(max_n), limit);
        }
        return run_apply();
    } catch (const takacs::CapacityError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
