#pragma once

#include "cyclecount/boundary.hpp"
#include "cyclecount/poly.hpp"
#include "cyclecount/separator.hpp"
#include "cyclecount/subproblem.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace cyclecount {

// One row per subproblem the engine visited.
struct LevelStat {
    int depth = 0;
    int h_vertices = 0;
    int g_vertices = 0;
    bool base_case = false;
    int separator_length = 0;
    int side_b = 0;
    int side_c = 0;
    std::int64_t compatible_pairs = 0;
    std::int64_t valid_interleavings = 0;
    bool cached = false;
};

struct EngineOptions {
    // Subproblems whose dual has at most tau vertices (H faces) are
    // enumerated directly.
    int tau = 12;
    // Worker threads for the top-level labelling loop.
    int threads = 1;
    // Cache up to this many solved subproblems, keyed by their exact
    // encoding. 0 disables the cache.
    std::size_t memo_limit = 0;
    // Log every contraction step here when set.
    std::ostream* trace = nullptr;
    // Every LevelStat row is also appended here when set.
    std::vector<LevelStat>* stats_sink = nullptr;
};

class Engine {
public:
    explicit Engine(EngineOptions opts = {});
    ~Engine();

    // Length generating polynomial of the cycles of p.h (including the empty
    // one when it qualifies) that conform to p.s and honour must/forbid.
    LengthPoly count(const Subproblem& p);

    std::vector<LevelStat> stats() const;
    static std::string stats_csv(const std::vector<LevelStat>& rows);

private:
    struct Table;
    const Table& labelling_table(int k);
    LengthPoly solve(const Subproblem& p, int depth);
    LengthPoly split_and_solve(const Subproblem& p, int depth, LevelStat& stat);
    SeparatorCycle separator_for(const CubicPlanarGraph& h);
    void record(const LevelStat& s);

    EngineOptions opts_;
    mutable std::mutex mu_;
    std::vector<LevelStat> stats_;
    std::vector<std::unique_ptr<Table>> tables_;
    std::unordered_map<std::string, LengthPoly> memo_;
    static constexpr std::size_t kSeparatorCacheLimit = 1 << 16;
    std::unordered_map<std::string, SeparatorCycle> separators_;
};

// Direct enumeration of the simple cycles of p.h with the same filters.
LengthPoly brute_force_base(const Subproblem& p);

struct CountResult {
    bool by_length = false;
    bool includes_empty = false;
    LengthPoly counts;
    BigInt total() const { return counts.total(); }
};

// Number of cycles of h (weights all zero), optionally counting the empty one.
CountResult count_cycles(const CubicPlanarGraph& h, bool include_empty, const EngineOptions& opts = {},
                         std::vector<LevelStat>* stats = nullptr);

}  // namespace cyclecount
