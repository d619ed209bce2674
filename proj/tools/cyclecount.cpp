// Command-line front end: cycle counts, constrained and by-length variants,
// partition counts, sampling, and oracle cross-checks.

#include "cyclecount/applications.hpp"
#include "cyclecount/engine.hpp"
#include "cyclecount/graph_io.hpp"
#include "cyclecount/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

using namespace cyclecount;
using json = nlohmann::ordered_json;

namespace {

struct Flags {
    std::string file;
    bool json = false;
    bool include_empty = false;
    int tau = 12;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::size_t memo = 0;
    std::string stats_path;
    bool trace_stitch = false;
    std::optional<int> length;
    std::vector<std::int64_t> require, forbid, border;
    int samples = 1;
    std::uint64_t seed = 0;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> edge_indices(const CubicPlanarGraph& h, const std::vector<std::int64_t>& ids) {
    std::vector<int> out;
    for (auto id : ids) {
        int e = h.edge_index(id);
        if (e < 0) throw InputError("unknown edge id " + std::to_string(id));
        out.push_back(e);
    }
    return out;
}

std::vector<std::int64_t> edge_ids(const CubicPlanarGraph& h, const std::vector<int>& edges) {
    std::vector<std::int64_t> out;
    for (int e : edges) out.push_back(h.edge_label(e));
    std::sort(out.begin(), out.end());
    return out;
}

std::string str(const BigInt& x) { return x.str(); }

json by_length_json(const LengthPoly& p) {
    json j = json::object();
    for (auto [l, c] : p.nonzero_terms()) j[std::to_string(l)] = str(c);
    return j;
}

void print_by_length(const LengthPoly& p) {
    for (auto [l, c] : p.nonzero_terms()) std::cout << l << " " << str(c) << "\n";
}

class Runner {
public:
    explicit Runner(const Flags& f) : f_(f), h_(load_graph(f.file)) {
        opts_.tau = f.tau;
        opts_.threads = f.threads;
        opts_.memo_limit = f.memo;
        if (f.trace_stitch) opts_.trace = &std::cerr;
        if (!f.stats_path.empty()) opts_.stats_sink = &stats_;
    }

    ~Runner() {
        if (f_.stats_path.empty()) return;
        std::ofstream out(f_.stats_path);
        out << Engine::stats_csv(stats_);
    }

    int count() {
        auto r = count_cycles(h_, f_.include_empty, opts_);
        emit_total("count", r.total());
        return 0;
    }

    int length() {
        if (!f_.length) {
            auto r = count_by_length(h_, f_.include_empty, opts_);
            if (f_.json)
                std::cout << json{{"by_length", by_length_json(r.counts)}}.dump() << "\n";
            else
                print_by_length(r.counts);
            return 0;
        }
        emit_total("count", count_length(h_, *f_.length, opts_));
        return 0;
    }

    int constrained() {
        auto r = count_constrained(h_, edge_indices(h_, f_.require), edge_indices(h_, f_.forbid), f_.include_empty,
                                   opts_);
        emit_total("count", r.total());
        return 0;
    }

    int partitions() {
        if (f_.border.empty()) {
            emit_total("partitions", count_partitions_sphere(h_, opts_));
            return 0;
        }
        std::vector<int> vs;
        for (auto id : f_.border) {
            int v = h_.vertex_index(id);
            if (v < 0) throw InputError("unknown vertex id " + std::to_string(id));
            vs.push_back(v);
        }
        emit_total("partitions", count_partitions_bordered(h_, border_from_vertices(h_, vs), opts_));
        return 0;
    }

    int sample() {
        if (f_.samples < 0) throw InputError("--n must be nonnegative");
        auto cycles = sample_cycles(h_, f_.samples, f_.seed, opts_);
        if (f_.json) {
            json arr = json::array();
            for (const auto& c : cycles) arr.push_back(edge_ids(h_, c));
            std::cout << json{{"samples", arr}}.dump() << "\n";
            return 0;
        }
        for (const auto& c : cycles) {
            auto ids = edge_ids(h_, c);
            for (std::size_t i = 0; i < ids.size(); ++i) std::cout << (i ? " " : "") << ids[i];
            std::cout << "\n";
        }
        return 0;
    }

    int oracle() {
        CycleFilter cf = filter();
        if (f_.length) cf.length = *f_.length;
        emit_total("count", oracle_count(h_, cf));
        return 0;
    }

    int verify() {
        CycleFilter cf = filter();
        const auto must = cf.must, forbid = cf.forbid;
        BigInt engine_total = (must.empty() && forbid.empty())
                                  ? count_cycles(h_, f_.include_empty, opts_).total()
                                  : count_constrained(h_, must, forbid, f_.include_empty, opts_).total();
        BigInt oracle_total = oracle_count(h_, cf);

        LengthPoly engine_len = count_by_length(h_, f_.include_empty, opts_).counts;
        CycleFilter plain;
        plain.include_empty = f_.include_empty;
        auto oracle_len = oracle_count_by_length(h_, plain);
        bool len_ok = true;
        for (auto [l, c] : engine_len.nonzero_terms())
            if (!oracle_len.count(static_cast<int>(l)) || oracle_len[static_cast<int>(l)] != c) len_ok = false;
        for (const auto& [l, c] : oracle_len)
            if (engine_len.coeff(static_cast<std::size_t>(l)) != c) len_ok = false;

        const bool ok = engine_total == oracle_total && len_ok;
        if (f_.json) {
            std::cout << json{{"engine", str(engine_total)},
                              {"oracle", str(oracle_total)},
                              {"by_length_match", len_ok},
                              {"ok", ok}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "engine " << engine_total << "\noracle " << oracle_total << "\nby-length "
                      << (len_ok ? "match" : "MISMATCH") << "\n"
                      << (ok ? "ok" : "MISMATCH") << "\n";
        }
        return ok ? 0 : 1;
    }

    int separator_stats() {
        std::vector<LevelStat> rows;
        EngineOptions o = opts_;
        o.threads = 1;
        o.stats_sink = &rows;
        count_cycles(h_, false, o);
        if (!f_.stats_path.empty()) stats_ = rows;
        // Rows arrive children first; list them level by level instead.
        std::stable_sort(rows.begin(), rows.end(),
                         [](const LevelStat& a, const LevelStat& b) { return a.depth < b.depth; });
        std::cout << "n,separator_length,balance\n";
        for (const auto& r : rows)
            if (!r.base_case && !r.cached)
                std::cout << r.g_vertices << "," << r.separator_length << "," << std::max(r.side_b, r.side_c)
                          << "\n";
        return 0;
    }

private:
    CycleFilter filter() const {
        CycleFilter cf;
        cf.must = edge_indices(h_, f_.require);
        cf.forbid = edge_indices(h_, f_.forbid);
        cf.include_empty = f_.include_empty;
        for (int e : cf.must)
            if (std::find(cf.forbid.begin(), cf.forbid.end(), e) != cf.forbid.end())
                throw GraphError("constraint", h_.edge_label(e), "edge is both required and forbidden");
        return cf;
    }

    void emit_total(const char* key, const BigInt& v) const {
        if (f_.json)
            std::cout << json{{key, str(v)}}.dump() << "\n";
        else
            std::cout << v << "\n";
    }

    const Flags& f_;
    CubicPlanarGraph h_;
    EngineOptions opts_;
    std::vector<LevelStat> stats_;
};

void common_flags(CLI::App* sub, Flags& f) {
    sub->add_option("file", f.file, "graph file (text or JSON)")->required();
    sub->add_flag("--json", f.json, "structured output");
    sub->add_option("--tau", f.tau, "brute-force threshold on dual vertices")->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--memo", f.memo, "cache up to this many solved subproblems (0 = off)");
    sub->add_option("--stats", f.stats_path, "write per-subproblem statistics as CSV");
    sub->add_flag("--trace-stitch", f.trace_stitch, "log contraction steps to stderr");
}

void filter_flags(CLI::App* sub, Flags& f) {
    sub->add_flag("--include-empty", f.include_empty, "count the empty cycle");
    sub->add_option("--require", f.require, "edge ids every cycle must use")->delimiter(',');
    sub->add_option("--forbid", f.forbid, "edge ids no cycle may use")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simple-cycle counts on cubic plane graphs"};
    app.require_subcommand(1);
    Flags f;

    auto* count = app.add_subcommand("count", "number of simple cycles");
    common_flags(count, f);
    count->add_flag("--include-empty", f.include_empty, "count the empty cycle");

    auto* length = app.add_subcommand("length", "cycles with exactly --l edges, or all lengths");
    common_flags(length, f);
    length->add_flag("--include-empty", f.include_empty, "count the empty cycle");
    length->add_option("--l", f.length, "cycle length")->check(CLI::NonNegativeNumber);

    auto* constrained = app.add_subcommand("constrained", "cycles through --require avoiding --forbid");
    common_flags(constrained, f);
    filter_flags(constrained, f);

    auto* partitions = app.add_subcommand("partitions", "connected two-part face partitions");
    common_flags(partitions, f);
    partitions->add_option("--border", f.border, "border vertex ids in clockwise order")->delimiter(',');

    auto* sample = app.add_subcommand("sample", "uniform random cycles");
    common_flags(sample, f);
    sample->add_option("--n", f.samples, "number of samples");
    sample->add_option("--seed", f.seed, "random seed");

    auto* oracle = app.add_subcommand("oracle", "count by exhaustive search");
    common_flags(oracle, f);
    filter_flags(oracle, f);
    oracle->add_option("--l", f.length, "cycle length")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "compare the engine with exhaustive search");
    common_flags(verify, f);
    filter_flags(verify, f);

    auto* sepstats = app.add_subcommand("separator-stats", "separator size and balance per subproblem");
    common_flags(sepstats, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Runner run(f);
        if (*count) return run.count();
        if (*length) return run.length();
        if (*constrained) return run.constrained();
        if (*partitions) return run.partitions();
        if (*sample) return run.sample();
        if (*oracle) return run.oracle();
        if (*verify) return run.verify();
        if (*sepstats) return run.separator_stats();
    } catch (const GraphError& e) {
        std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
