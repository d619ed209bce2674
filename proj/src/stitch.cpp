#include "cyclecount/stitch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cyclecount {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(what);
}

}  // namespace

const char* op_name(DiscState::Op op) {
    switch (op) {
        case DiscState::Op::SingleEdge: return "single-edge";
        case DiscState::Op::ParallelEdge: return "parallel-edge";
        case DiscState::Op::EdgePair: return "edge-pair";
        case DiscState::Op::DegreeTwoApex: return "degree-two-apex";
    }
    return "?";
}

DiscState DiscState::from_disc(const CubicPlanarGraph& h, const DiscGraph& d, const Labelling& self,
                               const Labelling& other, const ArcSequence& s, const EdgeAttrs& attrs) {
    const int k = static_cast<int>(d.boundary.size());
    require(self.size() == k && other.size() == k, "from_disc: labelling size differs from boundary");
    require(d.dangling_base == h.num_vertices(), "from_disc: dangling ids must follow the H vertices");
    DiscState st;
    st.rot_.assign(h.num_vertices(), {-1, -1, -1});
    st.alive_.assign(h.num_vertices(), 0);
    for (int v : d.interior) {
        st.rot_[v] = h.rotation(v);
        st.alive_[v] = 1;
    }
    st.edges_.assign(h.num_edges(), Edge{});
    auto fill = [&](int e, int u, int v) {
        auto& ed = st.edges_[e];
        ed = {u, v, attrs.weight[e], attrs.must[e] != 0, attrs.forbid[e] != 0, true};
    };
    for (int e : d.interior_edges) fill(e, h.ends(e)[0], h.ends(e)[1]);
    for (int i = 0; i < k; ++i) {
        fill(d.boundary[i].edge, d.inner_end(i), st.dangling_of(i));
        st.slot_edge_.push_back(d.boundary[i].edge);
        st.boundary_.push_back(i);
    }
    st.self_ = self.partner;
    st.other_ = other.partner;
    st.s_ = s;
    return st;
}

int DiscState::interior_count() const { return static_cast<int>(std::count(alive_.begin(), alive_.end(), 1)); }

int DiscState::inner_end(int slot) const {
    const Edge& e = edges_[slot_edge_[slot]];
    return e.u == dangling_of(slot) ? e.v : e.u;
}

bool DiscState::labels_zero() const {
    return std::all_of(boundary_.begin(), boundary_.end(), [&](int s) { return other_[s] < 0 && self_[s] < 0; });
}

int DiscState::find_arc(int edge) const {
    for (int i = 0; i < static_cast<int>(s_.size()); ++i)
        if (s_[i].edge == edge) return i;
    return -1;
}

int DiscState::new_edge(int u, int v, int weight, bool must, bool forbid) {
    edges_.push_back({u, v, weight, must, forbid, true});
    return static_cast<int>(edges_.size()) - 1;
}

void DiscState::replace_in_rotation(int v, int from, int to) {
    for (int& x : rot_[v])
        if (x == from) {
            x = to;
            return;
        }
    throw std::logic_error("replace_in_rotation: edge not at vertex");
}

void DiscState::remove_slot(int slot) {
    boundary_.erase(std::find(boundary_.begin(), boundary_.end(), slot));
    self_[slot] = -1;
    other_[slot] = -1;
}

bool DiscState::must_outside(std::initializer_list<int> allowed) const {
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
        if (edges_[e].alive && edges_[e].must && std::find(allowed.begin(), allowed.end(), e) == allowed.end())
            return true;
    return false;
}

DiscState::Step DiscState::next_step() const {
    require(!boundary_.empty(), "next_step: boundary is empty");
    int best = -1;
    for (int s : boundary_)
        if (other_[s] < 0 && (best < 0 || slot_edge_[s] < slot_edge_[best])) best = s;
    if (best >= 0) {
        int f = inner_end(best);
        int e = slot_edge_[best];
        int ga = -1, gb = -1;
        for (int x : rot_[f])
            if (x != e) (ga < 0 ? ga : gb) = other_end(x, f);
        if (ga == gb && !is_dangling(ga)) return {Op::ParallelEdge, best};
        return {Op::SingleEdge, best};
    }
    const int n = static_cast<int>(boundary_.size());
    int bs = -1, bt = -1, key = -1;
    for (int i = 0; i < n; ++i) {
        int s = boundary_[i], t = boundary_[(i + 1) % n];
        if (other_[s] != t) continue;
        int k = std::min(slot_edge_[s], slot_edge_[t]);
        if (bs < 0 || k < key) {
            bs = s;
            bt = t;
            key = k;
        }
    }
    require(bs >= 0, "next_step: no adjacent paired slots");
    if (inner_end(bs) == inner_end(bt)) return {Op::DegreeTwoApex, bs, bt};
    return {Op::EdgePair, bs, bt};
}

std::optional<LengthPoly> DiscState::single_edge_contract(int slot) {
    require(other_[slot] < 0 && self_[slot] < 0, "single-edge: slot is labelled");
    const int e = slot_edge_[slot];
    const int f = inner_end(slot);
    require(!is_dangling(f), "single-edge: edge has no interior end");
    const auto r = rot_[f];
    int pos = r[0] == e ? 0 : (r[1] == e ? 1 : 2);
    const int a = r[(pos + 1) % 3], b = r[(pos + 2) % 3];
    const int g1 = other_end(a, f), g2 = other_end(b, f);
    require(g1 != g2, "single-edge: apex has degree two, use parallel-edge");
    require(!(is_dangling(g1) && is_dangling(g2)), "single-edge: disc is a single triangle");

    if (find_arc(e) >= 0 || edges_[e].must) return LengthPoly{};
    const Edge& ea = edges_[a];
    const Edge& eb = edges_[b];
    const bool must = ea.must || eb.must, forbid = ea.forbid || eb.forbid;
    if (must && forbid) return LengthPoly{};
    const int m = static_cast<int>(edges_.size());

    ArcSequence ns = s_;
    int p = find_arc(a), q = find_arc(b);
    if (p >= 0 && q >= 0) {
        const int n = static_cast<int>(ns.size());
        int first = -1, second = -1;
        if ((p + 1) % n == q && ns[p].head == f && ns[q].tail == f) {
            first = p;
            second = q;
        } else if ((q + 1) % n == p && ns[q].head == f && ns[p].tail == f) {
            first = q;
            second = p;
        }
        if (first < 0) return LengthPoly{};
        Arc merged{m, ns[first].tail, ns[second].head};
        ns[first] = merged;
        ns.erase(ns.begin() + second);
    } else if (p >= 0 || q >= 0) {
        int i = p >= 0 ? p : q;
        int far = p >= 0 ? g2 : g1;
        Arc& x = ns[i];
        x.edge = m;
        if (x.tail == f) x.tail = far;
        if (x.head == f) x.head = far;
    }

    const int wa = ea.weight, wb = eb.weight;
    edges_[e].alive = edges_[a].alive = edges_[b].alive = false;
    alive_[f] = 0;
    new_edge(g1, g2, wa + wb, must, forbid);
    if (is_dangling(g1))
        slot_edge_[g1 - num_interior_ids()] = m;
    else
        replace_in_rotation(g1, a, m);
    if (is_dangling(g2))
        slot_edge_[g2 - num_interior_ids()] = m;
    else
        replace_in_rotation(g2, b, m);
    remove_slot(slot);
    s_ = std::move(ns);
    return std::nullopt;
}

std::optional<LengthPoly> DiscState::parallel_edge_contract(int slot) {
    require(other_[slot] < 0 && self_[slot] < 0, "parallel-edge: slot is labelled");
    const int e = slot_edge_[slot];
    const int fa = inner_end(slot);
    int a = -1, b = -1;
    for (int x : rot_[fa])
        if (x != e) (a < 0 ? a : b) = x;
    const int fb = other_end(a, fa);
    require(fb == other_end(b, fa) && !is_dangling(fb), "parallel-edge: no bigon behind the slot");
    int c = -1;
    for (int x : rot_[fb])
        if (x != a && x != b) c = x;
    const int g = other_end(c, fb);
    require(!is_dangling(g), "parallel-edge: disc is a single bigon");

    const bool zero = labels_zero();
    if (find_arc(e) >= 0 || find_arc(c) >= 0) return LengthPoly{};
    if (find_arc(a) >= 0 || find_arc(b) >= 0) {
        if (!zero) return LengthPoly{};
        for (const Arc& x : s_)
            if (x.edge != a && x.edge != b) return LengthPoly{};
        std::vector<Arc> trav{{a, fa, fb}, {b, fb, fa}};
        if (!conforms(trav, s_) || must_outside({a, b}) || edges_[a].forbid || edges_[b].forbid) return LengthPoly{};
        return LengthPoly::monomial(edges_[a].weight + edges_[b].weight);
    }
    if (zero && s_.empty() && !must_outside({a, b}) && !edges_[a].forbid && !edges_[b].forbid)
        correction_ += LengthPoly::monomial(edges_[a].weight + edges_[b].weight);
    if (edges_[a].must || edges_[b].must) return LengthPoly{};
    const bool must = edges_[e].must || edges_[c].must, forbid = edges_[e].forbid || edges_[c].forbid;
    if (must && forbid) return LengthPoly{};

    const int wc = edges_[c].weight;
    edges_[e].alive = edges_[a].alive = edges_[b].alive = edges_[c].alive = false;
    alive_[fa] = alive_[fb] = 0;
    int m = new_edge(g, dangling_of(slot), wc, must, forbid);
    replace_in_rotation(g, c, m);
    slot_edge_[slot] = m;
    return std::nullopt;
}

std::optional<LengthPoly> DiscState::degree_two_apex(int slot, int slot2) const {
    const int e = slot_edge_[slot], e2 = slot_edge_[slot2];
    const int f = inner_end(slot);
    require(f == inner_end(slot2) && other_[slot] == slot2, "degree-two-apex: slots do not share a triangle");
    bool ok = self_[slot] == slot2 && boundary_.size() == 2 && !must_outside({e, e2}) && !edges_[e].forbid &&
              !edges_[e2].forbid;
    if (ok) {
        std::vector<Arc> trav{{e, dangling_of(slot), f}, {e2, f, dangling_of(slot2)},
                              {-1, dangling_of(slot2), dangling_of(slot)}};
        ok = conforms(trav, s_);
    }
    if (!ok) return LengthPoly{};
    return LengthPoly::monomial(edges_[e].weight + edges_[e2].weight);
}

std::optional<LengthPoly> DiscState::edge_pair_contract(int slot, int slot2) {
    require(other_[slot] == slot2, "edge-pair: slots are not paired");
    const int e = slot_edge_[slot], e2 = slot_edge_[slot2];
    const int f1 = inner_end(slot), f2 = inner_end(slot2);
    require(f1 != f2, "edge-pair: slots share a triangle");
    const bool must = edges_[e].must || edges_[e2].must, forbid = edges_[e].forbid || edges_[e2].forbid;
    if (must && forbid) return LengthPoly{};
    const int m = static_cast<int>(edges_.size());
    const int d1 = dangling_of(slot), d2 = dangling_of(slot2);

    ArcSequence ns = s_;
    int p = find_arc(e), q = find_arc(e2);
    if (p >= 0 && q >= 0) {
        const int n = static_cast<int>(ns.size());
        auto chains = [&](int x, int y) {
            int hx = ns[x].head, ty = ns[y].tail;
            return (x + 1) % n == y && (hx == d1 || hx == d2) && (ty == d1 || ty == d2) && hx != ty;
        };
        int first = -1, second = -1;
        if (chains(p, q)) {
            first = p;
            second = q;
        } else if (chains(q, p)) {
            first = q;
            second = p;
        }
        if (first < 0) return LengthPoly{};
        ns[first] = Arc{m, ns[first].tail, ns[second].head};
        ns.erase(ns.begin() + second);
    } else if (p >= 0 || q >= 0) {
        int i = p >= 0 ? p : q;
        int dang = p >= 0 ? d1 : d2;
        int far = p >= 0 ? f2 : f1;
        Arc& x = ns[i];
        x.edge = m;
        if (x.tail == dang) x.tail = far;
        if (x.head == dang) x.head = far;
    }

    if (self_[slot] != slot2) {
        int x = self_[slot], y = self_[slot2];
        require(x >= 0 && y >= 0, "edge-pair: labellings are not compatible");
        self_[x] = y;
        self_[y] = x;
    }
    const int w = edges_[e].weight + edges_[e2].weight;
    edges_[e].alive = edges_[e2].alive = false;
    new_edge(f1, f2, w, must, forbid);
    replace_in_rotation(f1, e, m);
    replace_in_rotation(f2, e2, m);
    remove_slot(slot);
    remove_slot(slot2);
    s_ = std::move(ns);
    return std::nullopt;
}

std::optional<LengthPoly> DiscState::apply(const Step& st) {
    switch (st.op) {
        case Op::SingleEdge: return single_edge_contract(st.slot);
        case Op::ParallelEdge: return parallel_edge_contract(st.slot);
        case Op::EdgePair: return edge_pair_contract(st.slot, st.slot2);
        case Op::DegreeTwoApex: return degree_two_apex(st.slot, st.slot2);
    }
    return std::nullopt;
}

Subproblem DiscState::to_subproblem() const {
    require(boundary_.empty(), "to_subproblem: boundary not closed");
    std::vector<int> vmap(rot_.size(), -1), emap(edges_.size(), -1);
    int nv = 0, ne = 0;
    for (int v = 0; v < num_interior_ids(); ++v)
        if (alive_[v]) vmap[v] = nv++;
    Subproblem sub;
    std::vector<std::array<int, 2>> ends;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        if (!edges_[e].alive) continue;
        const Edge& ed = edges_[e];
        require(!is_dangling(ed.u) && !is_dangling(ed.v), "to_subproblem: dangling edge survived");
        emap[e] = ne++;
        ends.push_back({vmap[ed.u], vmap[ed.v]});
        sub.attrs.weight.push_back(ed.weight);
        sub.attrs.must.push_back(ed.must);
        sub.attrs.forbid.push_back(ed.forbid);
    }
    std::vector<std::array<int, 3>> rot;
    for (int v = 0; v < num_interior_ids(); ++v)
        if (alive_[v]) rot.push_back({emap[rot_[v][0]], emap[rot_[v][1]], emap[rot_[v][2]]});
    for (const Arc& a : s_) {
        require(emap[a.edge] >= 0 && !is_dangling(a.tail) && !is_dangling(a.head), "to_subproblem: arc left behind");
        sub.s.push_back({emap[a.edge], vmap[a.tail], vmap[a.head]});
    }
    sub.h = CubicPlanarGraph::from_rotation(std::move(ends), std::move(rot));
    return sub;
}

LengthPoly psaw_count(const DiscState& d) {
    const auto& edges = d.edges();
    std::vector<int> live;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].alive) live.push_back(e);
    const int nid = d.num_interior_ids();
    std::map<int, int> slot_of_dangling;
    for (int s : d.boundary()) slot_of_dangling[d.dangling_of(s)] = s;
    std::map<int, int> deg;
    std::vector<char> used(edges.size(), 0);
    LengthPoly total;

    auto evaluate = [&]() {
        for (auto [v, k] : deg)
            if (v < nid && k == 1) return;
        std::vector<int> p;
        int weight = 0;
        for (int e : live)
            if (used[e]) {
                p.push_back(e);
                weight += edges[e].weight;
            }
        // Used slots must be exactly the labelled ones.
        for (int s : d.boundary()) {
            bool u = deg.count(d.dangling_of(s)) && deg[d.dangling_of(s)] == 1;
            if (u != (d.self_partner(s) >= 0) || u != (d.other_partner(s) >= 0)) return;
        }
        if (p.empty()) {
            if (d.s().empty()) total += LengthPoly::monomial(0);
            return;
        }
        std::map<int, std::vector<int>> inc;
        for (int e : p) {
            inc[edges[e].u].push_back(e);
            inc[edges[e].v].push_back(e);
        }
        // Labelling of P.
        for (int s : d.boundary()) {
            if (d.self_partner(s) < 0) continue;
            int v = d.dangling_of(s);
            int e = inc[v][0];
            int steps = 0;
            while (true) {
                v = edges[e].u == v ? edges[e].v : edges[e].u;
                if (v >= nid) break;
                const auto& es = inc[v];
                e = es[0] == e ? es[1] : es[0];
                if (++steps > static_cast<int>(p.size())) return;
            }
            if (slot_of_dangling.at(v) != d.self_partner(s)) return;
        }
        // Walk P plus the far-side pairing.
        std::vector<Arc> trav;
        int e0 = p[0];
        int v = edges[e0].u;
        int e = e0;
        int real = 0;
        while (true) {
            int w = edges[e].u == v ? edges[e].v : edges[e].u;
            trav.push_back({e, v, w});
            ++real;
            v = w;
            if (v >= nid) {
                int s = slot_of_dangling.at(v);
                int t = d.other_partner(s);
                if (t < 0) return;
                trav.push_back({-1, v, d.dangling_of(t)});
                v = d.dangling_of(t);
                e = inc[v][0];
            } else {
                const auto& es = inc[v];
                e = es[0] == e ? es[1] : es[0];
            }
            if (e == e0 && v == edges[e0].u) break;
            if (real > static_cast<int>(p.size())) return;
        }
        if (real != static_cast<int>(p.size())) return;
        if (!conforms(trav, d.s())) return;
        total += LengthPoly::monomial(weight);
    };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == live.size()) {
            for (int e : live)
                if (edges[e].must && !used[e]) return;
            evaluate();
            return;
        }
        int e = live[i];
        rec(i + 1);
        if (edges[e].forbid) return;
        int u = edges[e].u, v = edges[e].v;
        int cap_u = u < nid ? 2 : 1, cap_v = v < nid ? 2 : 1;
        if (deg[u] >= cap_u || deg[v] >= cap_v) return;
        ++deg[u];
        ++deg[v];
        used[e] = 1;
        rec(i + 1);
        used[e] = 0;
        if (--deg[u] == 0) deg.erase(u);
        if (--deg[v] == 0) deg.erase(v);
    };
    rec(0);
    return total;
}

StitchResult stitch_disc(const CubicPlanarGraph& h, const DiscGraph& d, const Labelling& self,
                         const Labelling& other, const ArcSequence& s, const EdgeAttrs& attrs, std::ostream* trace) {
    DiscState st = DiscState::from_disc(h, d, self, other, s, attrs);
    while (!st.boundary().empty()) {
        if (st.interior_count() <= 2) {
            LengthPoly v = psaw_count(st);
            if (trace) *trace << "  stitch: small disc, direct count " << v.to_string() << "\n";
            return st.correction() + v;
        }
        auto step = st.next_step();
        if (trace)
            *trace << "  stitch: " << op_name(step.op) << " on edge " << st.slot_edge(step.slot)
                   << (step.slot2 >= 0 ? " and edge " + std::to_string(st.slot_edge(step.slot2)) : std::string())
                   << ", boundary " << st.boundary().size() << ", interior " << st.interior_count() << "\n";
        if (auto done = st.apply(step)) {
            if (trace) *trace << "  stitch: stops with " << done->to_string() << "\n";
            return st.correction() + *done;
        }
    }
    return StitchReduced{st.to_subproblem(), st.correction()};
}

}  // namespace cyclecount
