#include "eslab/graph.hpp"

#include <algorithm>
#include <queue>

namespace eslab {

OrthoGraph OrthoGraph::of(const EventStructure& es) {
    OrthoGraph g;
    g.vertices = es.ids();
    const std::size_t n = g.vertices.size();
    g.adj.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (es.orthogonal(a, b)) {
                g.adj[a].set(b);
                g.adj[b].set(a);
            }
    return g;
}

OrthoGraph OrthoGraph::from_edges(std::vector<std::string> vertices,
                                  const std::vector<IdPair>& edges) {
    OrthoGraph g;
    std::sort(vertices.begin(), vertices.end());
    g.vertices = std::move(vertices);
    const std::size_t n = g.vertices.size();
    g.adj.assign(n, Bits(n));
    for (const auto& [a, b] : edges) {
        std::size_t ai = g.index(a), bi = g.index(b);
        if (ai == bi)
            throw Error(errc::syntax_error, "self loop on '" + a + "'");
        g.adj[ai].set(bi);
        g.adj[bi].set(ai);
    }
    return g;
}

std::size_t OrthoGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += row.count();
    return twice / 2;
}

std::size_t OrthoGraph::index(std::string_view v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
        throw Error(errc::unknown_event, "no vertex '" + std::string(v) + "'");
    return static_cast<std::size_t>(it - vertices.begin());
}

namespace {

struct CliqueSearch {
    const OrthoGraph& g;
    std::size_t stop_at;
    std::vector<std::size_t> best, current;

    void expand(Bits candidates) {
        if (best.size() >= stop_at) return;
        if (candidates.none()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (current.size() + candidates.count() <= best.size()) return;
        for (std::size_t v = candidates.find_first(); v != Bits::npos;
             v = candidates.find_next(v)) {
            if (current.size() + candidates.count() <= best.size()) return;
            current.push_back(v);
            expand(candidates & g.adj[v]);
            current.pop_back();
            candidates.reset(v);
            if (best.size() >= stop_at) return;
        }
    }
};

} // namespace

std::vector<std::size_t> max_clique(const OrthoGraph& g, std::size_t stop_at) {
    CliqueSearch s{g, stop_at, {}, {}};
    Bits all(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) all.set(v);
    s.expand(all);
    return s.best;
}

std::size_t clique_number(const OrthoGraph& g, std::size_t stop_at) {
    return max_clique(g, stop_at).size();
}

std::size_t degree(const EventStructure& es, std::size_t stop_at) {
    return clique_number(OrthoGraph::of(es), stop_at);
}

ExceedsCapError::ExceedsCapError(std::size_t chromatic_, std::size_t cap,
                                 Coloring best_)
    : Error(errc::exceeds_cap,
            "chromatic number " + std::to_string(chromatic_) +
                " exceeds cap " + std::to_string(cap)),
      chromatic(chromatic_), best(std::move(best_)) {}

namespace {

struct DsaturState {
    const OrthoGraph& g;
    std::vector<std::size_t> colors; // npos = uncolored
    std::vector<Bits> neighbor_colors;
    std::size_t colored = 0;

    explicit DsaturState(const OrthoGraph& g_)
        : g(g_), colors(g_.vertex_count(), Bits::npos),
          neighbor_colors(g_.vertex_count(), Bits(g_.vertex_count() + 1)) {}

    std::size_t pick() const {
        std::size_t best = Bits::npos, best_sat = 0;
        for (std::size_t v = 0; v < colors.size(); ++v) {
            if (colors[v] != Bits::npos) continue;
            std::size_t sat = neighbor_colors[v].count();
            if (best == Bits::npos || sat > best_sat) {
                best = v;
                best_sat = sat;
            }
        }
        return best;
    }

    void assign(std::size_t v, std::size_t c) {
        colors[v] = c;
        ++colored;
        g.adj[v].for_each(
            [&](std::size_t w) { neighbor_colors[w].set(c); });
    }
    void unassign(std::size_t v) {
        std::size_t c = colors[v];
        colors[v] = Bits::npos;
        --colored;
        g.adj[v].for_each([&](std::size_t w) {
            bool still = false;
            g.adj[w].for_each([&](std::size_t u) {
                if (colors[u] == c) still = true;
            });
            if (!still) neighbor_colors[w].reset(c);
        });
    }
};

Coloring dsatur_greedy(const OrthoGraph& g) {
    DsaturState s(g);
    Coloring out;
    out.assignment.assign(g.vertex_count(), 0);
    std::size_t used = 0;
    while (s.colored < g.vertex_count()) {
        std::size_t v = s.pick();
        std::size_t c = 0;
        while (s.neighbor_colors[v].test(c)) ++c;
        s.assign(v, c);
        used = std::max(used, c + 1);
    }
    out.assignment = s.colors;
    out.num_colors = g.vertex_count() ? used : 0;
    return out;
}

struct ChromaticSearch {
    const OrthoGraph& g;
    DsaturState state;
    std::size_t best_k;
    std::vector<std::size_t> best_assignment;

    ChromaticSearch(const OrthoGraph& g_, Coloring initial)
        : g(g_), state(g_), best_k(initial.num_colors),
          best_assignment(std::move(initial.assignment)) {}

    void run(std::size_t lower_bound) {
        dfs(0, lower_bound);
    }

    void dfs(std::size_t used, std::size_t lower_bound) {
        if (best_k <= lower_bound) return;
        if (state.colored == g.vertex_count()) {
            if (used < best_k) {
                best_k = used;
                best_assignment = state.colors;
            }
            return;
        }
        std::size_t v = state.pick();
        std::size_t limit = std::min(used + 1, best_k - 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (state.neighbor_colors[v].test(c)) continue;
            state.assign(v, c);
            dfs(std::max(used, c + 1), lower_bound);
            state.unassign(v);
            if (best_k <= lower_bound) return;
        }
    }
};

} // namespace

std::pair<std::size_t, Coloring> chromatic_exact(const OrthoGraph& g,
                                                 std::size_t cap,
                                                 ChromaticOptions options) {
    const std::size_t n = g.vertex_count();
    if (n > options.size_limit)
        throw Error(errc::size_limit_exceeded,
                    std::to_string(n) + " vertices exceed the exact limit " +
                        std::to_string(options.size_limit));
    if (n == 0) return {0, Coloring{}};

    auto clique = max_clique(g);
    Coloring ub = dsatur_greedy(g);
    ChromaticSearch search(g, ub);
    if (ub.num_colors > clique.size()) {
        // Pre-color a maximum clique: a symmetry break that keeps optimality.
        for (std::size_t i = 0; i < clique.size(); ++i)
            search.state.assign(clique[i], i);
        search.dfs(clique.size(), clique.size());
    }
    Coloring result{search.best_assignment, search.best_k};
    if (search.best_k > cap)
        throw ExceedsCapError(search.best_k, cap, result);
    return {search.best_k, result};
}

Coloring greedy_color(const OrthoGraph& g,
                      const std::vector<std::size_t>& order) {
    const std::size_t n = g.vertex_count();
    if (order.size() != n)
        throw Error(errc::bad_order, "order has wrong length");
    std::vector<char> seen(n, 0);
    for (std::size_t v : order) {
        if (v >= n || seen[v])
            throw Error(errc::bad_order, "order is not a permutation");
        seen[v] = 1;
    }
    Coloring out;
    out.assignment.assign(n, Bits::npos);
    for (std::size_t v : order) {
        Bits used(n + 1);
        g.adj[v].for_each([&](std::size_t w) {
            if (out.assignment[w] != Bits::npos) used.set(out.assignment[w]);
        });
        std::size_t c = 0;
        while (used.test(c)) ++c;
        out.assignment[v] = c;
        out.num_colors = std::max(out.num_colors, c + 1);
    }
    return out;
}

namespace {

// Canonical cycle form: rotate to the least vertex, then pick the direction
// whose second vertex is smaller.
std::vector<std::size_t> canonical_cycle(std::vector<std::size_t> c) {
    auto least = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), least, c.end());
    if (c.size() > 2 && c[1] > c.back())
        std::reverse(c.begin() + 1, c.end());
    return c;
}

} // namespace

std::vector<std::vector<std::string>>
straight_cycles(const EventStructure& es, std::size_t min_len,
                std::size_t max_len) {
    const std::size_t n = es.size();
    OrthoGraph g = OrthoGraph::of(es);
    std::vector<Bits> comparable(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v) {
        comparable[v] = es.up_strict(v) | es.down_strict(v);
        comparable[v].set(v);
    }

    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> path;

    auto dfs = [&](auto&& self, std::size_t start, Bits allowed) -> void {
        std::size_t last = path.back();
        if (path.size() >= min_len && path.size() <= max_len &&
            g.adjacent(last, start) && path[1] < path.back()) {
            found.push_back(path);
        }
        if (path.size() >= max_len) return;
        Bits next = allowed & g.adj[last];
        next.for_each([&](std::size_t v) {
            path.push_back(v);
            Bits a = allowed;
            a.and_not(comparable[v]);
            self(self, start, a);
            path.pop_back();
        });
    };

    for (std::size_t s = 0; s < n; ++s) {
        path.assign(1, s);
        Bits allowed(n);
        for (std::size_t v = s + 1; v < n; ++v) allowed.set(v);
        allowed.and_not(comparable[s]);
        dfs(dfs, s, allowed);
    }

    for (auto& c : found) c = canonical_cycle(c);
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<std::vector<std::string>> out;
    out.reserve(found.size());
    for (const auto& c : found) {
        std::vector<std::string> ids;
        ids.reserve(c.size());
        for (std::size_t v : c) ids.push_back(es.id(v));
        out.push_back(std::move(ids));
    }
    return out;
}

namespace {

// A chordless cycle of length >= 4, when one exists: for a vertex v with
// non-adjacent neighbours u,w, any shortest u-w path avoiding N[v] closes a
// hole through v.
std::vector<std::size_t> find_hole(const OrthoGraph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
        auto nv = g.adj[v].to_vector();
        for (std::size_t i = 0; i < nv.size(); ++i) {
            for (std::size_t j = i + 1; j < nv.size(); ++j) {
                std::size_t u = nv[i], w = nv[j];
                if (g.adjacent(u, w)) continue;
                Bits blocked = g.adj[v];
                blocked.set(v);
                blocked.reset(u);
                blocked.reset(w);
                std::vector<std::size_t> parent(n, Bits::npos);
                std::queue<std::size_t> q;
                q.push(u);
                parent[u] = u;
                while (!q.empty() && parent[w] == Bits::npos) {
                    std::size_t x = q.front();
                    q.pop();
                    g.adj[x].for_each([&](std::size_t y) {
                        if (blocked.test(y) || parent[y] != Bits::npos)
                            return;
                        parent[y] = x;
                        q.push(y);
                    });
                }
                if (parent[w] == Bits::npos) continue;
                std::vector<std::size_t> cycle{v};
                for (std::size_t x = w; x != u; x = parent[x])
                    cycle.push_back(x);
                cycle.push_back(u);
                return canonical_cycle(cycle);
            }
        }
    }
    return {};
}

} // namespace

ChordalResult chordal_elimination(const OrthoGraph& g) {
    const std::size_t n = g.vertex_count();
    // Lex-BFS, O(n^2): labels are descending visit-number lists.
    std::vector<std::vector<std::size_t>> label(n);
    std::vector<char> visited(n, 0);
    std::vector<std::size_t> sigma;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pick = Bits::npos;
        for (std::size_t v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (pick == Bits::npos || label[v] > label[pick]) pick = v;
        }
        visited[pick] = 1;
        sigma.push_back(pick);
        g.adj[pick].for_each([&](std::size_t w) {
            if (!visited[w]) label[w].push_back(n - k);
        });
    }

    // The reverse of a Lex-BFS order is a perfect elimination ordering, so
    // along the visit order itself every vertex's earlier neighbours form a
    // clique; greedy coloring straight down that order is then optimal.
    ChordalResult result;
    result.peo = sigma;
    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[result.peo[p]] = p;
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t v = result.peo[p];
        auto earlier = g.adj[v].to_vector();
        std::erase_if(earlier, [&](std::size_t w) { return pos[w] >= p; });
        for (std::size_t i = 0; i < earlier.size(); ++i)
            for (std::size_t j = i + 1; j < earlier.size(); ++j)
                if (!g.adjacent(earlier[i], earlier[j])) {
                    result.chordal = false;
                    result.peo.clear();
                    result.witness_cycle = find_hole(g);
                    return result;
                }
    }
    result.chordal = true;
    return result;
}

OrthoGraph induced_graph(const EventStructure& es,
                         const std::vector<std::size_t>& subset) {
    OrthoGraph g;
    std::vector<std::size_t> keep = subset;
    std::sort(keep.begin(), keep.end());
    for (std::size_t i : keep) g.vertices.push_back(es.id(i));
    g.adj.assign(keep.size(), Bits(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (es.orthogonal(keep[a], keep[b])) {
                g.adj[a].set(b);
                g.adj[b].set(a);
            }
    return g;
}

ChordalResult chordal_elimination(const EventStructure& es,
                                  const std::vector<std::size_t>& antichain) {
    for (std::size_t i = 0; i < antichain.size(); ++i)
        for (std::size_t j = i + 1; j < antichain.size(); ++j)
            if (es.comparable(antichain[i], antichain[j]))
                throw Error(errc::not_an_antichain,
                            "'" + es.id(antichain[i]) + "' and '" +
                                es.id(antichain[j]) + "' are comparable");
    return chordal_elimination(induced_graph(es, antichain));
}

} // namespace eslab
