#include "eslab/theory.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "eslab/domain.hpp"
#include "eslab/graph.hpp"
#include "eslab/labelling.hpp"

namespace eslab {

namespace {

using Status = TheoryCheck::Status;

TheoryCheck ok(std::string name, std::size_t checked) {
    return {std::move(name), Status::ok, checked, ""};
}
TheoryCheck fail(std::string name, std::size_t checked, std::string detail) {
    return {std::move(name), Status::fail, checked, std::move(detail)};
}
TheoryCheck skip(std::string name, std::string why) {
    return {std::move(name), Status::skipped, 0, std::move(why)};
}

std::string pair_detail(const EventStructure& es, std::size_t a,
                        std::size_t b) {
    return "(" + es.id(a) + "," + es.id(b) + ")";
}

} // namespace

TheoryCheck check_trichotomy(const EventStructure& es) {
    std::size_t checked = 0;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = 0; b < es.size(); ++b) {
            ++checked;
            int cases = (a == b) + es.less(a, b) + es.less(b, a) +
                        es.concurrent(a, b) + es.in_conflict(a, b);
            if (cases != 1)
                return fail("trichotomy", checked, pair_detail(es, a, b));
        }
    return ok("trichotomy", checked);
}

TheoryCheck check_heredity_idempotent(const EventStructure& es) {
    // Re-close the closed relation and compare.
    std::vector<IdPair> all;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            if (es.in_conflict(a, b)) all.emplace_back(es.id(a), es.id(b));
    EventStructure re = EventStructure::build(es.ids(), es.cover_pairs(), all);
    std::size_t checked = 0;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = 0; b < es.size(); ++b) {
            ++checked;
            if (es.in_conflict(a, b) != re.in_conflict(a, b))
                return fail("heredity_idempotent", checked,
                            pair_detail(es, a, b));
        }
    return ok("heredity_idempotent", checked);
}

TheoryCheck check_coherence_law(const EventStructure& es) {
    std::size_t checked = 0;
    for (std::size_t x = 0; x < es.size(); ++x)
        for (std::size_t y = 0; y < es.size(); ++y) {
            if (!es.concurrent(x, y)) continue;
            for (std::size_t z = 0; z < es.size(); ++z) {
                if (!es.leq(z, x)) continue;
                ++checked;
                if (!es.concurrent(z, y) && !es.leq(z, y))
                    return fail("coherence_law", checked,
                                "(" + es.id(x) + "," + es.id(y) + "," +
                                    es.id(z) + ")");
            }
        }
    return ok("coherence_law", checked);
}

TheoryCheck check_ortho_inheritance(const EventStructure& es) {
    std::size_t checked = 0;
    for (std::size_t x = 0; x < es.size(); ++x)
        for (std::size_t y = 0; y < es.size(); ++y) {
            if (!es.orthogonal(x, y)) continue;
            for (std::size_t z = 0; z < es.size(); ++z) {
                if (!es.leq(z, x)) continue;
                ++checked;
                if (!es.orthogonal(z, y) && !es.leq(z, y))
                    return fail("orthogonality_inheritance", checked,
                                "(" + es.id(x) + "," + es.id(y) + "," +
                                    es.id(z) + ")");
            }
        }
    return ok("orthogonality_inheritance", checked);
}

TheoryCheck check_conflict_decomposition(const EventStructure& es,
                                         const TheoryOptions& opt) {
    if (es.size() > opt.decomposition_cap)
        return skip("conflict_decomposition", "structure too large");
    std::size_t checked = 0;
    for (std::size_t x = 0; x < es.size(); ++x)
        for (std::size_t y = x + 1; y < es.size(); ++y) {
            if (!es.in_conflict(x, y)) continue;
            ++checked;
            bool found = false;
            for (std::size_t a = 0; a < es.size() && !found; ++a) {
                if (!es.leq(a, x)) continue;
                for (std::size_t b = 0; b < es.size() && !found; ++b)
                    if (es.leq(b, y) && es.minimal_conflict(a, b))
                        found = true;
            }
            if (!found)
                return fail("conflict_decomposition", checked,
                            pair_detail(es, x, y));
        }
    return ok("conflict_decomposition", checked);
}

TheoryCheck check_twins_orthogonal(const EventStructure& es) {
    std::size_t checked = 0;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            if (!es.twins(a, b)) continue;
            ++checked;
            if (!es.orthogonal(a, b))
                return fail("twins_orthogonal", checked,
                            pair_detail(es, a, b));
        }
    return ok("twins_orthogonal", checked);
}

TheoryCheck check_lift_bottom_graph(const EventStructure& es) {
    EventStructure lifted = es.lift_bottom();
    std::size_t checked = 0;
    std::vector<std::size_t> into(es.size());
    for (std::size_t i = 0; i < es.size(); ++i)
        into[i] = lifted.index(es.id(i));
    Bits image(lifted.size());
    for (std::size_t i : into) image.set(i);
    std::size_t bottom = Bits::npos;
    for (std::size_t v = 0; v < lifted.size(); ++v)
        if (!image.test(v)) bottom = v;
    for (std::size_t a = 0; a < es.size(); ++a) {
        ++checked;
        if (lifted.orthogonal(into[a], bottom))
            return fail("lift_bottom_graph", checked,
                        "bottom is not isolated at " + es.id(a));
        for (std::size_t b = a + 1; b < es.size(); ++b)
            if (es.orthogonal(a, b) != lifted.orthogonal(into[a], into[b]))
                return fail("lift_bottom_graph", checked,
                            pair_detail(es, a, b));
    }
    return ok("lift_bottom_graph", checked);
}

TheoryCheck check_star_degree(const EventStructure& es) {
    std::size_t d = degree(es);
    if (d == 0) return ok("star_degree", 0);
    std::size_t checked = 0;
    for (std::size_t x = 0; x < es.size(); ++x) {
        ++checked;
        std::size_t ds = degree(es.star(x), d + 1);
        if (ds >= d)
            return fail("star_degree", checked,
                        "star(" + es.id(x) + ") has degree " +
                            std::to_string(ds));
    }
    return ok("star_degree", checked);
}

TheoryCheck check_shared_face(const EventStructure& es,
                              const TheoryOptions& opt) {
    if (es.size() > opt.shared_face_cap)
        return skip("shared_face_comparable", "structure too large");
    if (degree(es, 4) > 3)
        return skip("shared_face_comparable", "degree exceeds 3");
    OrthoGraph g = OrthoGraph::of(es);
    const std::size_t n = g.vertex_count();
    std::vector<std::array<std::size_t, 3>> triangles;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (std::size_t c = b + 1; c < n; ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c))
                    triangles.push_back({a, b, c});
        }
    std::size_t checked = 0;
    for (std::size_t i = 0; i < triangles.size(); ++i)
        for (std::size_t j = i + 1; j < triangles.size(); ++j) {
            std::vector<std::size_t> shared;
            for (std::size_t v : triangles[i])
                for (std::size_t w : triangles[j])
                    if (v == w) shared.push_back(v);
            if (shared.size() != 2) continue;
            ++checked;
            std::size_t x0 = Bits::npos, x3 = Bits::npos;
            for (std::size_t v : triangles[i])
                if (std::find(shared.begin(), shared.end(), v) ==
                    shared.end())
                    x0 = v;
            for (std::size_t v : triangles[j])
                if (std::find(shared.begin(), shared.end(), v) ==
                    shared.end())
                    x3 = v;
            if (!es.comparable(x0, x3))
                return fail("shared_face_comparable", checked,
                            pair_detail(es, x0, x3));
        }
    return ok("shared_face_comparable", checked);
}

TheoryCheck check_no_long_straight_cycles(const EventStructure& es,
                                          const TheoryOptions& opt) {
    if (es.size() > opt.cycle_cap)
        return skip("no_long_straight_cycles", "structure too large");
    if (degree(es, 4) > 3)
        return skip("no_long_straight_cycles", "degree exceeds 3");
    if (es.size() < 4) return ok("no_long_straight_cycles", 0);
    auto cycles = straight_cycles(es, 4, es.size());
    if (!cycles.empty()) {
        std::string d;
        for (const auto& v : cycles.front()) d += v + " ";
        return fail("no_long_straight_cycles", 1, d);
    }
    return ok("no_long_straight_cycles", 1);
}

std::vector<std::vector<std::size_t>>
maximal_antichains(const EventStructure& es, std::size_t budget) {
    const std::size_t n = es.size();
    std::vector<Bits> inc(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && !es.comparable(a, b)) inc[a].set(b);

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> r;
    auto bk = [&](auto&& self, Bits p, Bits x) -> void {
        if (out.size() >= budget)
            throw Error(errc::size_limit_exceeded,
                        "antichain enumeration budget exhausted");
        if (p.none() && x.none()) {
            out.push_back(r);
            return;
        }
        Bits both = p | x;
        std::size_t pivot = both.find_first();
        std::size_t best = 0;
        for (std::size_t u = both.find_first(); u != Bits::npos;
             u = both.find_next(u)) {
            std::size_t eat = (p & inc[u]).count();
            if (eat > best) {
                best = eat;
                pivot = u;
            }
        }
        Bits cand = p;
        cand.and_not(inc[pivot]);
        for (std::size_t v = cand.find_first(); v != Bits::npos;
             v = cand.find_next(v)) {
            r.push_back(v);
            self(self, p & inc[v], x & inc[v]);
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    };
    Bits p(n), x(n);
    for (std::size_t v = 0; v < n; ++v) p.set(v);
    if (n > 0) bk(bk, p, x);
    return out;
}

TheoryCheck check_antichains_three_colorable(const EventStructure& es,
                                             const TheoryOptions& opt) {
    if (degree(es, 4) > 3)
        return skip("antichains_three_colorable", "degree exceeds 3");
    auto antichains = maximal_antichains(es, opt.antichain_budget);
    std::size_t checked = 0;
    for (const auto& a : antichains) {
        ++checked;
        auto res = chordal_elimination(es, a);
        if (!res.chordal)
            return fail("antichains_three_colorable", checked,
                        "antichain induces a non-chordal graph");
        OrthoGraph g = induced_graph(es, a);
        Coloring c = greedy_color(g, res.peo);
        if (c.num_colors > 3)
            return fail("antichains_three_colorable", checked,
                        "PEO greedy needed " + std::to_string(c.num_colors) +
                            " colors");
    }
    return ok("antichains_three_colorable", checked);
}

TheoryCheck check_degree_equivalence(const EventStructure& es,
                                     const TheoryOptions& opt) {
    if (es.size() > opt.degree_equivalence_cap)
        return skip("degree_equivalence", "structure too large");
    DomainPoset d;
    try {
        d = configurations(es, opt.max_configs);
    } catch (const Error& e) {
        return skip("degree_equivalence", e.what());
    }
    std::size_t checked = 1;
    std::size_t branching = branching_degree(d);
    std::size_t clique = degree(es);
    if (branching != clique)
        return fail("degree_equivalence", checked,
                    "branching " + std::to_string(branching) + " vs clique " +
                        std::to_string(clique));
    if (es.size() > opt.correspondence_cap)
        return ok("degree_equivalence", checked);

    // Covers -> clique: the events added by the upper covers of any
    // configuration are pairwise orthogonal.
    for (std::size_t c = 0; c < d.configs.size(); ++c) {
        const auto& ups = d.upper_of[c];
        for (std::size_t i = 0; i < ups.size(); ++i)
            for (std::size_t j = i + 1; j < ups.size(); ++j) {
                ++checked;
                std::size_t x = d.hasse[ups[i]].event;
                std::size_t y = d.hasse[ups[j]].event;
                if (!es.orthogonal(x, y))
                    return fail("degree_equivalence", checked,
                                "covers of a configuration are not "
                                "orthogonal: " +
                                    pair_detail(es, x, y));
            }
    }
    // Clique -> covers: every clique is the cover set of some configuration.
    const std::size_t n = es.size();
    std::vector<std::vector<std::size_t>> cliques{{}};
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t m = cliques.size();
        for (std::size_t k = 0; k < m; ++k) {
            bool fits = true;
            for (std::size_t u : cliques[k])
                if (!es.orthogonal(u, v)) fits = false;
            if (fits) {
                auto ext = cliques[k];
                ext.push_back(v);
                cliques.push_back(std::move(ext));
            }
        }
    }
    for (const auto& k : cliques) {
        if (k.empty()) continue;
        ++checked;
        bool witnessed = false;
        for (std::size_t c = 0; c < d.configs.size() && !witnessed; ++c) {
            bool all = true;
            for (std::size_t x : k) {
                if (d.configs[c].test(x) ||
                    !es.down_strict(x).subset_of(d.configs[c]) ||
                    es.conflict_row(x).intersects(d.configs[c])) {
                    all = false;
                    break;
                }
            }
            witnessed = all;
        }
        if (!witnessed) {
            std::string detail = "clique {";
            for (std::size_t x : k) detail += es.id(x) + " ";
            return fail("degree_equivalence", checked, detail + "}");
        }
    }
    return ok("degree_equivalence", checked);
}

TheoryCheck check_chopped_lattice_law(const EventStructure& es,
                                      const TheoryOptions& opt) {
    DomainPoset d;
    try {
        d = configurations(es, opt.max_configs);
    } catch (const Error& e) {
        return skip("chopped_lattice", e.what());
    }
    auto report = check_chopped_lattice(d);
    if (!report.ok()) {
        std::string detail =
            report.missing_intersections.empty()
                ? "distributivity failure"
                : "intersection escapes the domain";
        return fail("chopped_lattice", report.triples_checked, detail);
    }
    return ok("chopped_lattice", report.triples_checked);
}

TheoryCheck check_perspective_equivalence(const EventStructure& es,
                                          const TheoryOptions& opt) {
    DomainPoset d;
    try {
        d = configurations(es, opt.max_configs);
    } catch (const Error& e) {
        return skip("perspective_equivalence", e.what());
    }
    std::size_t checked = 0;
    auto agree = [&](const Labelling& lab) {
        ++checked;
        bool domain_ok = check_perspective_labelling(d, es, lab).ok();
        bool verifier_ok = verify_labelling(es, lab).empty();
        return domain_ok == verifier_ok;
    };
    Labelling good = label_exact(es);
    if (!agree(good))
        return fail("perspective_equivalence", checked,
                    "valid labelling disagrees");
    Labelling constant;
    constant.letters.assign(es.size(), 0);
    constant.alphabet_size = es.size() ? 1 : 0;
    constant.strategy = "constant";
    if (!agree(constant))
        return fail("perspective_equivalence", checked,
                    "constant labelling disagrees");
    return ok("perspective_equivalence", checked);
}

TheoryCheck check_twinsthree(const EventStructure& es) {
    if (degree(es, 4) > 3) return skip("twinsthree", "degree exceeds 3");
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < es.size(); ++v)
        groups[es.lower_covers(v)].push_back(v);
    std::size_t checked = 0;
    for (const auto& [covers, g] : groups) {
        (void)covers;
        if (g.size() < 3) continue;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                for (std::size_t k = 0; k < g.size(); ++k) {
                    if (i == j || j == k || i == k) continue;
                    ++checked;
                    std::array<std::size_t, 3> y{g[i], g[j], g[k]};
                    if (!es.o_set_bits(g[i], y).none())
                        return fail("twinsthree", checked,
                                    "O is non-empty at " + es.id(g[i]));
                }
    }
    return ok("twinsthree", checked);
}

TheoryCheck check_twins_osets(const EventStructure& es) {
    if (degree(es, 4) > 3) return skip("twins_osets", "degree exceeds 3");
    std::size_t checked = 0;
    for (std::size_t x = 0; x < es.size(); ++x)
        for (std::size_t y = 0; y < es.size(); ++y) {
            if (y == x || !es.twins(x, y)) continue;
            ++checked;
            std::array<std::size_t, 2> pair{x, y};
            Bits ox = es.o_set_bits(x, pair);
            Bits oy = es.o_set_bits(y, pair);
            if (!ox.subset_of(oy) && !oy.subset_of(ox))
                return fail("twins_osets", checked,
                            "incomparable O-sets at " + pair_detail(es, x, y));
            Bits inter = ox & oy;
            auto members = inter.to_vector();
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (!es.comparable(members[i], members[j]))
                        return fail("twins_osets", checked,
                                    "intersection is not a chain at " +
                                        pair_detail(es, x, y));
        }
    return ok("twins_osets", checked);
}

TheoryCheck check_o_inclusion(const EventStructure& es) {
    if (degree(es, 4) > 3) return skip("o_inclusion", "degree exceeds 3");
    std::vector<std::pair<std::size_t, std::size_t>> twin_pairs;
    for (std::size_t x = 0; x < es.size(); ++x)
        for (std::size_t y = 0; y < es.size(); ++y)
            if (x != y && es.twins(x, y)) twin_pairs.emplace_back(x, y);
    std::size_t checked = 0;
    for (auto [x, y] : twin_pairs) {
        std::array<std::size_t, 2> xy{x, y};
        Bits oxy = es.o_set_bits(x, xy) & es.o_set_bits(y, xy);
        for (auto [z, w] : twin_pairs) {
            if (z == x || z == y || w == x || w == y) continue;
            if (!oxy.test(z)) continue;
            if (es.leq(w, x)) continue;
            ++checked;
            std::array<std::size_t, 2> wz{w, z};
            Bits oz = es.o_set_bits(z, wz);
            Bits ow = es.o_set_bits(w, wz);
            bool strict_superset = ow.subset_of(oz) && !(oz == ow);
            if (!strict_superset)
                return fail("o_inclusion", checked,
                            "O_z does not strictly contain O_w at (" +
                                es.id(z) + "," + es.id(w) + ")");
        }
    }
    return ok("o_inclusion", checked);
}

namespace {

struct TreeSets {
    EventStructure lifted;
    std::vector<std::size_t> tree; // lifted indices of the original events
    std::vector<std::size_t> pos;  // position in the order, npos outside
    std::vector<std::size_t> pi;
    std::vector<Bits> o, c, l;     // per lifted index, over lifted universe
};

// Builds O / C / L for the original events seen as a tree of the lifted
// structure; empty optional when the structure is not a degree-<=3 forest.
bool tree_sets(const EventStructure& es, TreeSets& out, std::string& why) {
    for (std::size_t v = 0; v < es.size(); ++v)
        if (es.lower_covers(v).size() > 1) {
            why = "not a forest";
            return false;
        }
    if (degree(es, 4) > 3) {
        why = "degree exceeds 3";
        return false;
    }
    out.lifted = es.lift_bottom();
    const EventStructure& L = out.lifted;
    for (std::size_t i = 0; i < es.size(); ++i)
        out.tree.push_back(L.index(es.id(i)));
    LinearOrder order = choose_tree_order(L, out.tree);
    out.pos.assign(L.size(), Bits::npos);
    for (std::size_t p = 0; p < order.sequence.size(); ++p)
        out.pos[order.sequence[p]] = p;
    out.pi.assign(L.size(), Bits::npos);
    out.o.assign(L.size(), Bits(L.size()));
    out.c.assign(L.size(), Bits(L.size()));
    out.l.assign(L.size(), Bits(L.size()));
    for (std::size_t x : out.tree) {
        out.pi[x] = L.lower_covers(x)[0];
        for (std::size_t y : out.tree) {
            if (out.pos[y] >= out.pos[x] || !L.orthogonal(x, y)) continue;
            out.o[x].set(y);
            if (L.leq(out.pi[x], y))
                out.c[x].set(y);
            else
                out.l[x].set(y);
        }
    }
    return true;
}

} // namespace

TheoryCheck check_l_and_o(const EventStructure& es) {
    TreeSets ts;
    std::string why;
    if (!tree_sets(es, ts, why)) return skip("l_and_o", why);
    const EventStructure& L = ts.lifted;
    std::size_t checked = 0;
    for (std::size_t x : ts.tree)
        for (std::size_t y : ts.tree) {
            if (x == y || !L.twins(x, y)) continue;
            ++checked;
            std::array<std::size_t, 2> pair{x, y};
            Bits oxy = L.o_set_bits(x, pair);
            if (!ts.l[x].subset_of(oxy))
                return fail("l_and_o", checked,
                            "L(x) escapes O at " + L.id(x));
            for (std::size_t z = ts.l[x].find_first(); z != Bits::npos;
                 z = ts.l[x].find_next(z)) {
                for (std::size_t z2 = oxy.find_first(); z2 != Bits::npos;
                     z2 = oxy.find_next(z2))
                    if (L.leq(z2, z) && !ts.l[x].test(z2))
                        return fail("l_and_o", checked,
                                    "L(x) is not a lower set at " + L.id(x));
            }
        }
    return ok("l_and_o", checked);
}

TheoryCheck check_l_empty(const EventStructure& es) {
    TreeSets ts;
    std::string why;
    if (!tree_sets(es, ts, why)) return skip("l_empty", why);
    const EventStructure& L = ts.lifted;
    std::size_t checked = 0;
    for (std::size_t x : ts.tree)
        for (std::size_t y : ts.tree) {
            if (x == y || !L.twins(x, y)) continue;
            for (std::size_t z : ts.tree) {
                if (z == x || z == y || !L.twins(x, z) || !L.twins(y, z))
                    continue;
                ++checked;
                if (ts.l[x].any())
                    return fail("l_empty", checked,
                                "L(x) is non-empty at " + L.id(x));
                std::array<std::size_t, 2> pair{x, y};
                Bits inter = L.o_set_bits(x, pair) & L.o_set_bits(y, pair);
                // z is the minimum of the intersection
                if (!inter.test(z))
                    return fail("l_empty", checked,
                                "z escapes the intersection at " + L.id(x));
                for (std::size_t w = inter.find_first(); w != Bits::npos;
                     w = inter.find_next(w))
                    if (w != z && !L.less(z, w))
                        return fail("l_empty", checked,
                                    "z is not minimal at " + L.id(x));
                Bits allowed(L.size());
                allowed.set(y);
                allowed.set(z);
                if (!ts.c[x].subset_of(allowed))
                    return fail("l_empty", checked,
                                "C(x) escapes {y,z} at " + L.id(x));
            }
        }
    return ok("l_empty", checked);
}

TheoryCheck check_at_most_three(const EventStructure& es) {
    TreeSets ts;
    std::string why;
    if (!tree_sets(es, ts, why)) return skip("at_most_three", why);
    const EventStructure& L = ts.lifted;
    std::size_t checked = 0;
    for (std::size_t x : ts.tree) {
        ++checked;
        if (ts.c[x].count() > 2)
            return fail("at_most_three", checked, "|C(x)| > 2 at " + L.id(x));
        for (std::size_t y = ts.c[x].find_first(); y != Bits::npos;
             y = ts.c[x].find_next(y))
            if (!L.twins(x, y))
                return fail("at_most_three", checked,
                            "C member is not a twin at " + L.id(x));
    }
    return ok("at_most_three", checked);
}

std::vector<TheoryCheck> run_theory_suite(const EventStructure& es,
                                          const TheoryOptions& opt) {
    return {
        check_trichotomy(es),
        check_heredity_idempotent(es),
        check_coherence_law(es),
        check_ortho_inheritance(es),
        check_conflict_decomposition(es, opt),
        check_twins_orthogonal(es),
        check_lift_bottom_graph(es),
        check_star_degree(es),
        check_shared_face(es, opt),
        check_no_long_straight_cycles(es, opt),
        check_antichains_three_colorable(es, opt),
        check_degree_equivalence(es, opt),
        check_chopped_lattice_law(es, opt),
        check_perspective_equivalence(es, opt),
        check_twinsthree(es),
        check_twins_osets(es),
        check_o_inclusion(es),
        check_l_and_o(es),
        check_l_empty(es),
        check_at_most_three(es),
    };
}

} // namespace eslab
