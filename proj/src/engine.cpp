#include "cyclecount/engine.hpp"

#include "cyclecount/separator.hpp"
#include "cyclecount/stitch.hpp"

#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace cyclecount {

struct Engine::Table {
    int k = 0;
    std::vector<Labelling> labellings;
    // Compatible nonzero pairs (indices into labellings) with their support.
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::uint64_t> pair_support;
};

Engine::Engine(EngineOptions opts) : opts_(opts) {}
Engine::~Engine() = default;

const Engine::Table& Engine::labelling_table(int k) {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(tables_.size()) <= k) tables_.resize(k + 1);
    if (!tables_[k]) {
        if (k > 63) throw std::runtime_error("separator longer than 63 edges");
        auto t = std::make_unique<Table>();
        t->k = k;
        t->labellings = enumerate_labellings(k);
        std::map<std::uint64_t, std::vector<int>> by_support;
        for (int i = 0; i < static_cast<int>(t->labellings.size()); ++i)
            if (!t->labellings[i].is_zero()) by_support[t->labellings[i].support_mask()].push_back(i);
        for (const auto& [mask, group] : by_support)
            for (int a : group)
                for (int b : group)
                    if (compatibility_check(t->labellings[a], t->labellings[b])) {
                        t->pairs.push_back({a, b});
                        t->pair_support.push_back(mask);
                    }
        tables_[k] = std::move(t);
    }
    return *tables_[k];
}

void Engine::record(const LevelStat& s) {
    std::lock_guard<std::mutex> lock(mu_);
    stats_.push_back(s);
    if (opts_.stats_sink) opts_.stats_sink->push_back(s);
}

std::vector<LevelStat> Engine::stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_;
}

std::string Engine::stats_csv(const std::vector<LevelStat>& rows) {
    std::ostringstream os;
    os << "depth,h_vertices,g_vertices,base_case,separator_length,side_b,side_c,compatible_pairs,"
          "valid_interleavings,cached\n";
    for (const auto& r : rows)
        os << r.depth << "," << r.h_vertices << "," << r.g_vertices << "," << (r.base_case ? 1 : 0) << ","
           << r.separator_length << "," << r.side_b << "," << r.side_c << "," << r.compatible_pairs << ","
           << r.valid_interleavings << "," << (r.cached ? 1 : 0) << "\n";
    return os.str();
}

LengthPoly Engine::count(const Subproblem& p) { return solve(p, 0); }

namespace {

void put(std::string& key, int x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); }

std::string encode(const CubicPlanarGraph& h) {
    std::string key;
    put(key, h.num_vertices());
    for (int v = 0; v < h.num_vertices(); ++v)
        for (int e : h.rotation(v)) put(key, e);
    for (int e = 0; e < h.num_edges(); ++e) {
        put(key, h.ends(e)[0]);
        put(key, h.ends(e)[1]);
    }
    return key;
}

std::string encode(const Subproblem& p) {
    std::string key = encode(p.h);
    for (int e = 0; e < p.h.num_edges(); ++e)
        put(key, p.attrs.weight[e] * 4 + (p.attrs.must[e] ? 2 : 0) + (p.attrs.forbid[e] ? 1 : 0));
    for (const Arc& a : p.s) {
        put(key, a.edge);
        put(key, a.tail);
        put(key, a.head);
    }
    return key;
}

}  // namespace

LengthPoly Engine::solve(const Subproblem& p, int depth) {
    for (const Arc& a : p.s)
        if (p.attrs.forbid[a.edge]) return {};

    LevelStat stat;
    stat.depth = depth;
    stat.h_vertices = p.h.num_vertices();
    stat.g_vertices = p.h.num_faces();
    if (p.h.num_faces() <= opts_.tau) {
        stat.base_case = true;
        record(stat);
        return brute_force_base(p);
    }

    std::string key;
    if (opts_.memo_limit > 0) {
        key = encode(p);
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            stat.cached = true;
            stats_.push_back(stat);
            if (opts_.stats_sink) opts_.stats_sink->push_back(stat);
            return it->second;
        }
    }
    LengthPoly result = split_and_solve(p, depth, stat);
    record(stat);
    if (opts_.memo_limit > 0) {
        std::lock_guard<std::mutex> lock(mu_);
        if (memo_.size() < opts_.memo_limit) memo_.emplace(std::move(key), result);
    }
    return result;
}

SeparatorCycle Engine::separator_for(const CubicPlanarGraph& h) {
    // The same graph comes back with different S and must/forbid sets.
    std::string key = encode(h);
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = separators_.find(key); it != separators_.end()) return it->second;
    }
    SeparatorCycle sep = find_cycle_separator(h);
    std::lock_guard<std::mutex> lock(mu_);
    if (separators_.size() < kSeparatorCacheLimit) separators_.emplace(std::move(key), sep);
    return sep;
}

LengthPoly Engine::split_and_solve(const Subproblem& p, int depth, LevelStat& stat) {

    const SeparatorCycle sep = separator_for(p.h);
    const auto discs = split_discs(p.h, sep);
    const auto bnd = boundary_edges(p.h, sep);
    const DiscSides sides = disc_sides(p.h, sep);
    const int k = sep.length();
    stat.separator_length = k;
    stat.side_b = static_cast<int>(sep.side_b.size());
    stat.side_c = static_cast<int>(sep.side_c.size());
    if (opts_.trace)
        *opts_.trace << "depth " << depth << ": |V(G)| = " << p.h.num_faces() << ", separator length " << k
                     << ", sides " << stat.side_b << "/" << stat.side_c << "\n";

    std::vector<int> slot_of_edge(p.h.num_edges(), -1);
    for (int i = 0; i < k; ++i) slot_of_edge[bnd[i].edge] = i;
    auto edge_disc = [&](int e) {  // 0, 1, or 2 for separator edges
        if (slot_of_edge[e] >= 0) return 2;
        return sep.vertex_region[p.h.ends(e)[0]];
    };
    auto restrict_to = [&](const ArcSequence& arcs, const DiscGraph& d) {
        ArcSequence out;
        for (Arc a : arcs) {
            int where = edge_disc(a.edge);
            if (where == 2) {
                int pos = slot_of_edge[a.edge];
                if (sep.vertex_region[a.tail] != d.which) a.tail = d.dangling(pos);
                if (sep.vertex_region[a.head] != d.which) a.head = d.dangling(pos);
                out.push_back(a);
            } else if (where == d.which) {
                out.push_back(a);
            }
        }
        return out;
    };
    const DiscGraph* disc[2] = {&discs.first, &discs.second};
    auto evaluate = [&](const StitchResult& r) -> LengthPoly {
        if (const auto* v = std::get_if<LengthPoly>(&r)) return *v;
        const auto& red = std::get<StitchReduced>(r);
        return red.correction + solve(red.sub, depth + 1);
    };

    LengthPoly result;

    // Both labellings zero: the cycle stays inside one disc.
    {
        const Labelling zero{std::vector<int>(k, -1)};
        bool in_disc[3] = {false, false, false};
        for (const Arc& a : p.s) in_disc[edge_disc(a.edge)] = true;
        bool must_in[3] = {false, false, false};
        for (int e = 0; e < p.h.num_edges(); ++e)
            if (p.attrs.must[e]) must_in[edge_disc(e)] = true;
        auto one_disc = [&](int which) {
            return evaluate(stitch_disc(p.h, *disc[which], zero, zero, restrict_to(p.s, *disc[which]), p.attrs,
                                        opts_.trace));
        };
        if (!p.s.empty()) {
            if (!in_disc[2] && !(in_disc[0] && in_disc[1])) {
                int which = in_disc[0] ? 0 : 1;
                if (!must_in[1 - which]) result += one_disc(which);
            }
        } else if (must_in[0] || must_in[1] || must_in[2]) {
            if (!must_in[1])
                result += one_disc(0);
            else if (!must_in[0])
                result += one_disc(1);
        } else {
            result += one_disc(0);
            result += one_disc(1);
            result -= LengthPoly::monomial(0);
        }
    }

    std::uint64_t required = 0, forbidden = 0;
    for (int i = 0; i < k; ++i) {
        int e = bnd[i].edge;
        if (p.attrs.must[e]) required |= std::uint64_t{1} << i;
        if (p.attrs.forbid[e]) forbidden |= std::uint64_t{1} << i;
    }
    for (const Arc& a : p.s)
        if (slot_of_edge[a.edge] >= 0) required |= std::uint64_t{1} << slot_of_edge[a.edge];

    const Table& table = labelling_table(k);
    std::vector<int> tasks;
    for (int i = 0; i < static_cast<int>(table.pairs.size()); ++i) {
        std::uint64_t m = table.pair_support[i];
        if ((m & required) == required && (m & forbidden) == 0) tasks.push_back(i);
    }
    stat.compatible_pairs = static_cast<std::int64_t>(tasks.size());

    std::atomic<std::int64_t> n_valid{0};
    auto run_pair = [&](int task) -> LengthPoly {
        const Labelling& l1 = table.labellings[table.pairs[task].first];
        const Labelling& l2 = table.labellings[table.pairs[task].second];
        const ArcSequence t = build_T(l1, l2, bnd);
        int support_weight = 0;
        for (int i = 0; i < k; ++i)
            if (l1.partner[i] >= 0) support_weight += p.attrs.weight[bnd[i].edge];
        std::map<ArcSequence, LengthPoly> memo[2];
        auto side_count = [&](int which, const ArcSequence& sd) {
            auto it = memo[which].find(sd);
            if (it != memo[which].end()) return it->second;
            const Labelling& self = which == 0 ? l1 : l2;
            const Labelling& other = which == 0 ? l2 : l1;
            LengthPoly v = evaluate(stitch_disc(p.h, *disc[which], self, other, sd, p.attrs, opts_.trace));
            memo[which].emplace(sd, v);
            return v;
        };
        LengthPoly acc;
        for (const Interleaving& in : enumerate_interleavings(p.s, t, &sides)) {
            ++n_valid;
            LengthPoly c1 = side_count(0, restrict_to(in.arcs, *disc[0]));
            if (c1.is_zero()) continue;
            LengthPoly c2 = side_count(1, restrict_to(in.arcs, *disc[1]));
            if (c2.is_zero()) continue;
            acc += (c1 * c2).shifted_down(support_weight);
        }
        return acc;
    };

    const int nthreads = (depth == 0 && !opts_.trace) ? std::max(1, opts_.threads) : 1;
    if (nthreads == 1) {
        for (int task : tasks) result += run_pair(task);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<LengthPoly> partial(nthreads);
        std::vector<std::exception_ptr> errors(nthreads);
        std::vector<std::thread> workers;
        for (int w = 0; w < nthreads; ++w)
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < tasks.size(); i = next++) partial[w] += run_pair(tasks[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& th : workers) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& part : partial) result += part;
    }
    stat.valid_interleavings = n_valid;
    return result;
}

namespace {

struct BaseSearch {
    explicit BaseSearch(const Subproblem& sp) : p(sp) {}

    const Subproblem& p;
    int must_total = 0;
    int start = -1;
    // With an anchor every cycle must contain it, so the walk starts on it
    // and only closes back at its tail. Anchoring on the first arc of S also
    // fixes the direction, so the other arcs of S must come up in order.
    bool anchored = false;
    std::vector<int> s_index;
    int next_s = 0;
    int must_seen = 0;
    int weight = 0;
    int first_edge = -1;
    std::vector<char> on_path;
    LengthPoly result;

    bool enter(int e, int v, int w) {
        if (!s_index.empty() && s_index[e] >= 0) {
            if (s_index[e] != next_s || p.s[next_s].tail != v || p.s[next_s].head != w) return false;
            ++next_s;
        }
        must_seen += p.attrs.must[e] ? 1 : 0;
        weight += p.attrs.weight[e];
        return true;
    }

    void leave(int e) {
        if (!s_index.empty() && s_index[e] >= 0) --next_s;
        must_seen -= p.attrs.must[e] ? 1 : 0;
        weight -= p.attrs.weight[e];
    }

    void extend(int v, int came_by) {
        const CubicPlanarGraph& h = p.h;
        for (int e : h.rotation(v)) {
            if (p.attrs.forbid[e] || e == came_by) continue;
            int w = h.other_end(e, v);
            if (w == start) {
                if ((anchored || first_edge < e) && enter(e, v, w)) {
                    if (must_seen == must_total && next_s == static_cast<int>(p.s.size()))
                        result += LengthPoly::monomial(static_cast<std::size_t>(weight));
                    leave(e);
                }
            } else if ((anchored || w > start) && !on_path[w] && enter(e, v, w)) {
                on_path[w] = 1;
                extend(w, e);
                on_path[w] = 0;
                leave(e);
            }
        }
    }

    void walk_from(int v, int e) {
        int w = p.h.other_end(e, v);
        if (!enter(e, v, w)) return;
        first_edge = e;
        on_path[v] = 1;
        on_path[w] = 1;
        extend(w, e);
        on_path[w] = 0;
        on_path[v] = 0;
        leave(e);
    }
};

}  // namespace

LengthPoly brute_force_base(const Subproblem& p) {
    const CubicPlanarGraph& h = p.h;
    BaseSearch b{p};
    b.on_path.assign(h.num_vertices(), 0);
    for (int e = 0; e < h.num_edges(); ++e) b.must_total += p.attrs.must[e] ? 1 : 0;
    if (p.s.empty() && b.must_total == 0) b.result += LengthPoly::monomial(0);

    if (!p.s.empty()) {
        b.s_index.assign(h.num_edges(), -1);
        for (int i = 0; i < static_cast<int>(p.s.size()); ++i) {
            const Arc& a = p.s[i];
            // A repeated edge or an arc that is not an edge of h never conforms.
            if (a.edge < 0 || a.edge >= h.num_edges() || b.s_index[a.edge] >= 0) return {};
            auto [x, y] = h.ends(a.edge);
            if (!((a.tail == x && a.head == y) || (a.tail == y && a.head == x))) return {};
            b.s_index[a.edge] = i;
        }
        if (p.attrs.forbid[p.s[0].edge]) return {};
        b.anchored = true;
        b.start = p.s[0].tail;
        b.walk_from(p.s[0].tail, p.s[0].edge);
        return b.result;
    }
    for (int e = 0; e < h.num_edges(); ++e)
        if (p.attrs.must[e]) {
            if (p.attrs.forbid[e]) return b.result;
            b.anchored = true;
            b.start = h.ends(e)[0];
            b.walk_from(b.start, e);
            return b.result;
        }
    for (b.start = 0; b.start < h.num_vertices(); ++b.start)
        for (int e : h.rotation(b.start))
            if (!p.attrs.forbid[e] && h.other_end(e, b.start) > b.start) b.walk_from(b.start, e);
    return b.result;
}

CountResult count_cycles(const CubicPlanarGraph& h, bool include_empty, const EngineOptions& opts,
                         std::vector<LevelStat>* stats) {
    Engine engine(opts);
    Subproblem p{h, EdgeAttrs::plain(h.num_edges(), 0), {}};
    CountResult r;
    r.counts = engine.count(p);
    if (!include_empty) r.counts -= LengthPoly::monomial(0);
    r.includes_empty = include_empty;
    if (stats) *stats = engine.stats();
    return r;
}

}  // namespace cyclecount
