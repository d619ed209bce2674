#include "cyclecount/boundary.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace cyclecount {

bool Labelling::is_zero() const {
    return std::all_of(partner.begin(), partner.end(), [](int p) { return p < 0; });
}

std::uint64_t Labelling::support_mask() const {
    std::uint64_t m = 0;
    for (int i = 0; i < size(); ++i)
        if (partner[i] >= 0) m |= std::uint64_t{1} << i;
    return m;
}

namespace {

void fill_labellings(int lo, int hi, std::vector<int>& partner, const std::function<void()>& emit) {
    // Fill positions [lo, hi); position lo is either unlabelled or paired
    // with some j, splitting the rest into an inside and an outside range.
    if (lo >= hi) {
        emit();
        return;
    }
    partner[lo] = -1;
    fill_labellings(lo + 1, hi, partner, emit);
    for (int j = lo + 1; j < hi; ++j) {
        partner[lo] = j;
        partner[j] = lo;
        fill_labellings(lo + 1, j, partner, [&] { fill_labellings(j + 1, hi, partner, emit); });
        partner[j] = -1;
    }
    partner[lo] = -1;
}

}  // namespace

std::vector<Labelling> enumerate_labellings(int m) {
    if (m < 0) throw std::invalid_argument("labelling size must be nonnegative");
    std::vector<Labelling> out;
    std::vector<int> partner(m, -1);
    fill_labellings(0, m, partner, [&] { out.push_back({partner}); });
    return out;
}

bool is_valid_labelling(const Labelling& l) {
    const int m = l.size();
    for (int i = 0; i < m; ++i) {
        int j = l.partner[i];
        if (j < 0) continue;
        if (j >= m || j == i || l.partner[j] != i) return false;
    }
    for (int a = 0; a < m; ++a) {
        int b = l.partner[a];
        if (b <= a) continue;
        for (int c = a + 1; c < b; ++c) {
            int d = l.partner[c];
            if (d >= 0 && (d < a || d > b)) return false;
        }
    }
    return true;
}

bool compatibility_check(const Labelling& l1, const Labelling& l2) {
    if (l1.size() != l2.size()) return false;
    const int m = l1.size();
    for (int i = 0; i < m; ++i)
        if ((l1.partner[i] < 0) != (l2.partner[i] < 0)) return false;
    int e = -1;
    for (int i = 0; i < m && e < 0; ++i)
        if (l1.partner[i] >= 0) e = i;
    if (e < 0) return true;
    std::vector<char> in_m(m, 0);
    in_m[e] = 1;
    while (!in_m[l1.partner[e]]) {
        int e2 = l1.partner[e];
        e = l2.partner[e2];
        in_m[e2] = 1;
        in_m[e] = 1;
    }
    for (int i = 0; i < m; ++i)
        if ((l1.partner[i] >= 0) != static_cast<bool>(in_m[i])) return false;
    return true;
}

ArcSequence build_T(const Labelling& l1, const Labelling& l2, const std::vector<BoundaryEdge>& boundary) {
    ArcSequence t;
    int start = -1;
    for (int i = 0; i < l1.size() && start < 0; ++i)
        if (l1.partner[i] >= 0) start = i;
    if (start < 0) return t;
    int cur = start;
    do {
        const auto& in = boundary[cur];
        t.push_back({in.edge, in.end2, in.end1});
        int out = l1.partner[cur];
        const auto& ex = boundary[out];
        t.push_back({ex.edge, ex.end1, ex.end2});
        cur = l2.partner[out];
        if (cur < 0 || t.size() > 2 * boundary.size()) throw std::logic_error("build_T: labellings not compatible");
    } while (cur != start);
    return canonical_form(t);
}

ArcSequence reversed(const ArcSequence& s) {
    ArcSequence r;
    for (auto it = s.rbegin(); it != s.rend(); ++it) r.push_back(it->reversed());
    return r;
}

ArcSequence canonical_form(const ArcSequence& s) {
    if (s.empty()) return s;
    ArcSequence best;
    for (const ArcSequence& base : {s, reversed(s)}) {
        for (std::size_t r = 0; r < base.size(); ++r) {
            ArcSequence cand(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
            cand.insert(cand.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

bool equivalent(const ArcSequence& a, const ArcSequence& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

bool conforms(const std::vector<Arc>& traversal, const ArcSequence& s) {
    if (s.empty()) return true;
    const int n = static_cast<int>(traversal.size());
    std::vector<int> pos;
    int direction = 0;  // +1 along the traversal, -1 against it
    for (const Arc& a : s) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (traversal[i].edge == a.edge) {
                p = i;
                break;
            }
        if (p < 0) return false;
        int d;
        if (traversal[p].tail == a.tail && traversal[p].head == a.head)
            d = 1;
        else if (traversal[p].tail == a.head && traversal[p].head == a.tail)
            d = -1;
        else
            return false;
        if (direction != 0 && d != direction) return false;
        direction = d;
        pos.push_back(p);
    }
    const int k = static_cast<int>(pos.size());
    if (k == 1) return true;
    int wraps = 0;
    for (int i = 0; i < k; ++i) {
        int a = pos[i], b = pos[(i + 1) % k];
        if (a == b) return false;
        if ((direction > 0 && b < a) || (direction < 0 && b > a)) ++wraps;
    }
    return wraps == 1;
}

bool conforms(const CubicPlanarGraph& h, const std::vector<int>& cycle_edges, const ArcSequence& s) {
    std::vector<Dart> walk;
    if (!cycle_traversal(h, cycle_edges, &walk)) throw std::invalid_argument("conforms: edge set is not a cycle");
    std::vector<Arc> trav;
    for (Dart d : walk) trav.push_back({d.edge, h.tail(d), h.head(d)});
    return conforms(trav, s);
}

std::vector<Interleaving> enumerate_interleavings(const ArcSequence& s, const ArcSequence& t,
                                                  const DiscSides* valid_only) {
    std::vector<Interleaving> out;
    if (s.empty() || t.empty()) {
        const ArcSequence& only = s.empty() ? t : s;
        Interleaving in{only, std::vector<std::uint8_t>(only.size(), s.empty() ? 2 : 1)};
        if (!valid_only || is_valid_interleaving(in, s, t, *valid_only)) out.push_back(std::move(in));
        return out;
    }
    std::set<int> t_edges;
    for (const Arc& a : t) t_edges.insert(a.edge);
    std::vector<char> s_shared(s.size());
    std::set<int> shared_edges;
    for (std::size_t i = 0; i < s.size(); ++i) {
        s_shared[i] = t_edges.count(s[i].edge) ? 1 : 0;
        if (s_shared[i]) shared_edges.insert(s[i].edge);
    }

    // Disc of each S-only arc, or -1 if it crosses or sits on the separator.
    std::vector<int> s_disc(s.size(), -1);
    if (valid_only) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s_shared[i]) continue;
            const Arc& a = s[i];
            int side = valid_only->vertex_side[a.tail];
            if (valid_only->separator_edge[a.edge] || valid_only->vertex_side[a.head] != side) return out;
            s_disc[i] = side;
        }
    }

    std::set<ArcSequence> seen;
    Interleaving cur;
    const std::size_t sn = s.size();
    for (const ArcSequence& tdir : {t, reversed(t)}) {
        const std::size_t tn = tdir.size();
        for (std::size_t r = 0; r < tn; ++r) {
            ArcSequence trot(tdir.begin() + static_cast<std::ptrdiff_t>(r), tdir.end());
            trot.insert(trot.end(), tdir.begin(), tdir.begin() + static_cast<std::ptrdiff_t>(r));
            std::size_t j0 = 0;
            cur.arcs.assign(1, s[0]);
            cur.origin.assign(1, 1);
            if (s_shared[0]) {
                // The shared first arc pins the rotation of T.
                if (trot[0] != s[0]) continue;
                cur.origin[0] = 3;
                j0 = 1;
            }
            // With pruning, an S-only arc may only follow a T arc that enters
            // its disc; before the first T arc that is the last arc of T.
            int gap_disc = valid_only ? valid_only->vertex_side[trot[tn - 1].head] : -1;
            if (valid_only) {
                if (j0 == 1)
                    gap_disc = valid_only->vertex_side[s[0].head];
                else if (s_disc[0] != gap_disc)
                    continue;
            }
            std::function<void(std::size_t, std::size_t)> merge = [&](std::size_t i, std::size_t j) {
                if (i == sn && j == tn) {
                    if (valid_only && !is_valid_interleaving(cur, s, t, *valid_only)) return;
                    if (seen.insert(cur.arcs).second) out.push_back(cur);
                    return;
                }
                const int saved_gap = gap_disc;
                if (i < sn) {
                    if (!s_shared[i] && valid_only && s_disc[i] != gap_disc) {
                        // Cannot go here; a T arc has to come first.
                    } else if (!s_shared[i]) {
                        cur.arcs.push_back(s[i]);
                        cur.origin.push_back(1);
                        merge(i + 1, j);
                        cur.arcs.pop_back();
                        cur.origin.pop_back();
                    } else if (j < tn && trot[j] == s[i]) {
                        cur.arcs.push_back(s[i]);
                        cur.origin.push_back(3);
                        if (valid_only) gap_disc = valid_only->vertex_side[s[i].head];
                        merge(i + 1, j + 1);
                        gap_disc = saved_gap;
                        cur.arcs.pop_back();
                        cur.origin.pop_back();
                    }
                }
                if (j < tn && !shared_edges.count(trot[j].edge)) {
                    cur.arcs.push_back(trot[j]);
                    cur.origin.push_back(2);
                    if (valid_only) gap_disc = valid_only->vertex_side[trot[j].head];
                    merge(i, j + 1);
                    gap_disc = saved_gap;
                    cur.arcs.pop_back();
                    cur.origin.pop_back();
                }
            };
            merge(1, j0);
        }
    }
    return out;
}

bool is_valid_interleaving(const Interleaving& in, const ArcSequence& s, const ArcSequence& t,
                           const DiscSides& sides) {
    std::set<int> t_edges;
    for (const Arc& a : t) t_edges.insert(a.edge);

    ArcSequence s_on_sep;
    std::set<int> sep_edges_of_s;
    for (const Arc& a : s)
        if (sides.separator_edge[a.edge]) {
            if (!t_edges.count(a.edge)) return false;
            s_on_sep.push_back(a);
            sep_edges_of_s.insert(a.edge);
        }
    if (!s_on_sep.empty()) {
        ArcSequence t_sub;
        for (const Arc& a : t)
            if (sep_edges_of_s.count(a.edge)) t_sub.push_back(a);
        if (!equivalent(s_on_sep, t_sub)) return false;
    }

    const auto& arcs = in.arcs;
    const int n = static_cast<int>(arcs.size());
    std::vector<int> tpos;
    for (int i = 0; i < n; ++i)
        if (t_edges.count(arcs[i].edge)) tpos.push_back(i);
    if (tpos.empty()) return false;
    auto side = [&](int v) { return sides.vertex_side[v]; };
    const int k = static_cast<int>(tpos.size());
    for (int a = 0; a < k; ++a) {
        int p = tpos[a], q = tpos[(a + 1) % k];
        const Arc& t1 = arcs[p];
        const Arc& t2 = arcs[q];
        int inside = side(t1.head);
        if (side(t2.tail) != inside || side(t1.tail) == inside || side(t2.head) == inside) return false;
        for (int i = (p + 1) % n; i != q; i = (i + 1) % n) {
            const Arc& x = arcs[i];
            if (sides.separator_edge[x.edge] || side(x.tail) != inside || side(x.head) != inside) return false;
        }
    }
    return true;
}

}  // namespace cyclecount
