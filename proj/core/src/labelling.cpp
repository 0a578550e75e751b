#include "eslab/labelling.hpp"

#include <algorithm>
#include <map>

namespace eslab {

namespace {

std::size_t used_letters(const std::vector<std::size_t>& letters) {
    std::size_t top = 0;
    for (auto l : letters)
        if (l != Labelling::unset) top = std::max(top, l + 1);
    return top;
}

// Every strategy self-verifies before returning; a violation here means the
// strategy itself is broken.
Labelling finish(const EventStructure& es, std::vector<std::size_t> letters,
                 std::string strategy) {
    Labelling lab{std::move(letters), 0, std::move(strategy)};
    lab.alphabet_size = used_letters(lab.letters);
    auto violations = verify_labelling(es, lab);
    if (!violations.empty())
        throw Error(errc::theorem_violation,
                    "strategy '" + lab.strategy +
                        "' produced an invalid labelling at (" +
                        violations.front().first + "," +
                        violations.front().second + ")");
    return lab;
}

} // namespace

std::vector<IdPair> verify_labelling(const EventStructure& es,
                                     const Labelling& lab) {
    if (lab.letters.size() != es.size() || !lab.total())
        throw Error(errc::unlabelled_event,
                    "labelling does not cover every event");
    std::vector<IdPair> out;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            if (lab.letters[a] == lab.letters[b] && es.orthogonal(a, b))
                out.emplace_back(es.id(a), es.id(b));
    return out;
}

Labelling label_exact(const EventStructure& es, std::size_t cap,
                      ChromaticOptions options) {
    OrthoGraph g = OrthoGraph::of(es);
    auto [k, coloring] = chromatic_exact(g, cap, options);
    (void)k;
    return finish(es, coloring.assignment, "exact");
}

Labelling label_dilworth(const EventStructure& es) {
    auto chains = es.chain_cover();
    std::vector<std::size_t> letters(es.size(), Labelling::unset);
    for (std::size_t c = 0; c < chains.size(); ++c)
        for (std::size_t v : chains[c]) letters[v] = c;
    Labelling lab = finish(es, std::move(letters), "dilworth");
    lab.alphabet_size = chains.size(); // = width, even when some chain is
                                       // shadowed by renumbering
    return lab;
}

Labelling label_greedy(const EventStructure& es) {
    OrthoGraph g = OrthoGraph::of(es);
    std::vector<std::size_t> order(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Coloring c = greedy_color(g, order);
    return finish(es, c.assignment, "greedy");
}

Labelling label_stratified(const EventStructure& es) {
    std::vector<std::size_t> h(es.size());
    for (std::size_t v = 0; v < es.size(); ++v) h[v] = es.height_of(v);
    return label_stratified(es, h);
}

Labelling label_stratified(const EventStructure& es,
                           const std::vector<std::size_t>& stratifier) {
    const std::size_t n_events = es.size();
    if (stratifier.size() != n_events)
        throw Error(errc::not_stratifying,
                    "stratifying function must cover every event");
    if (n_events == 0) return finish(es, {}, "stratified");

    std::map<std::size_t, std::vector<std::size_t>> levels;
    for (std::size_t v = 0; v < n_events; ++v)
        levels[stratifier[v]].push_back(v);
    for (const auto& [value, members] : levels) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (es.comparable(members[i], members[j]))
                    throw Error(errc::not_stratifying,
                                "level " + std::to_string(value) +
                                    " contains the comparable pair (" +
                                    es.id(members[i]) + "," +
                                    es.id(members[j]) + ")");
    }

    // Skew = max level gap across an orthogonal pair; 0 when there is none.
    std::size_t skew = 0;
    for (auto [a, b] : es.orthogonal_pairs()) {
        std::size_t ha = stratifier[a], hb = stratifier[b];
        skew = std::max(skew, ha > hb ? ha - hb : hb - ha);
    }
    const std::size_t n = skew + 1;

    std::vector<std::size_t> letters(n_events, Labelling::unset);
    for (const auto& [value, members] : levels) {
        auto chordal = chordal_elimination(es, members);
        if (!chordal.chordal)
            throw Error(errc::level_needs_more_than_three_colors,
                        "level " + std::to_string(value) +
                            " induces a non-chordal graph");
        OrthoGraph g = induced_graph(es, members);
        Coloring c = greedy_color(g, chordal.peo);
        if (c.num_colors > 3)
            throw Error(errc::level_needs_more_than_three_colors,
                        "level " + std::to_string(value) + " needs " +
                            std::to_string(c.num_colors) + " colors");
        for (std::size_t i = 0; i < members.size(); ++i)
            letters[members[i]] = c.assignment[i] * n + (value % n);
    }
    return finish(es, std::move(letters), "stratified");
}

namespace {

struct TreeShape {
    Bits members;                  // tree as a bitset
    std::vector<std::size_t> pi;   // unique lower cover, by event index
    std::vector<std::size_t> height; // |{y in T : y < x}|
};

TreeShape validate_tree(const EventStructure& es,
                        const std::vector<std::size_t>& tree) {
    TreeShape shape;
    shape.members = Bits(es.size());
    for (std::size_t x : tree) shape.members.set(x);
    shape.pi.assign(es.size(), Bits::npos);
    shape.height.assign(es.size(), 0);

    std::size_t shared_root_cover = Bits::npos;
    for (std::size_t x : tree) {
        const auto& lc = es.lower_covers(x);
        if (lc.size() != 1)
            throw Error(errc::not_a_tree,
                        "'" + es.id(x) + "' has " + std::to_string(lc.size()) +
                            " lower covers");
        shape.pi[x] = lc[0];
        shape.height[x] = (es.down_strict(x) & shape.members).count();
        if (!shape.members.test(lc[0])) { // minimal in T
            if (shared_root_cover == Bits::npos)
                shared_root_cover = lc[0];
            else if (shared_root_cover != lc[0])
                throw Error(errc::not_a_tree,
                            "minimal members do not share a lower cover");
        }
    }
    // Convexity: anything strictly between two members is a member.
    for (std::size_t z : tree) {
        Bits below = es.down_strict(z);
        below.and_not(shape.members);
        below.for_each([&](std::size_t y) {
            if (es.down_strict(y).intersects(shape.members))
                throw Error(errc::not_a_tree,
                            "'" + es.id(y) + "' breaks convexity");
        });
    }
    return shape;
}

} // namespace

LinearOrder choose_tree_order(const EventStructure& lifted,
                              const std::vector<std::size_t>& tree) {
    TreeShape shape = validate_tree(lifted, tree);

    std::vector<std::size_t> seq = tree;
    std::sort(seq.begin(), seq.end());
    std::stable_sort(seq.begin(), seq.end(),
                     [&](std::size_t a, std::size_t b) {
                         return shape.height[a] < shape.height[b];
                     });
    std::vector<std::size_t> pos(lifted.size(), Bits::npos);
    for (std::size_t p = 0; p < seq.size(); ++p) pos[seq[p]] = p;

    // Proper pairs of twins: exactly two tree members over one lower cover.
    std::map<std::size_t, std::vector<std::size_t>> siblings;
    for (std::size_t x : seq) siblings[shape.pi[x]].push_back(x);
    for (const auto& [parent, kids] : siblings) {
        (void)parent;
        if (kids.size() != 2) continue;
        std::size_t x = std::min(kids[0], kids[1]);
        std::size_t y = std::max(kids[0], kids[1]);
        std::array<std::size_t, 2> pair{x, y};
        Bits ox = lifted.o_set_bits(x, pair);
        Bits oy = lifted.o_set_bits(y, pair);
        if (ox == oy) continue; // unconstrained; id order stands
        std::size_t first, second;
        if (oy.subset_of(ox)) {
            first = x;
            second = y;
        } else if (ox.subset_of(oy)) {
            first = y;
            second = x;
        } else {
            throw Error(errc::incomparable_twin_o_sets,
                        "O-sets of the twins (" + lifted.id(x) + "," +
                            lifted.id(y) + ") are incomparable");
        }
        if (pos[first] > pos[second]) {
            std::swap(seq[pos[first]], seq[pos[second]]);
            std::swap(pos[first], pos[second]);
        }
    }
    return LinearOrder{std::move(seq)};
}

std::vector<std::size_t> tree_label(const EventStructure& lifted,
                                    const std::vector<std::size_t>& tree,
                                    const LinearOrder& order) {
    TreeShape shape = validate_tree(lifted, tree);
    std::vector<std::size_t> pos(lifted.size(), Bits::npos);
    for (std::size_t p = 0; p < order.sequence.size(); ++p)
        pos[order.sequence[p]] = p;

    std::vector<std::size_t> letters(lifted.size(), Labelling::unset);
    auto violation = [&](std::size_t x, const std::string& what) {
        return Error(errc::theorem_violation,
                     what + " at '" + lifted.id(x) + "'");
    };

    for (std::size_t x : order.sequence) {
        std::size_t parent = shape.pi[x];
        std::vector<std::size_t> o_of_x, c_of_x, l_of_x;
        for (std::size_t y : order.sequence) {
            if (pos[y] >= pos[x]) break;
            if (!lifted.orthogonal(x, y)) continue;
            o_of_x.push_back(y);
            if (lifted.leq(parent, y))
                c_of_x.push_back(y);
            else
                l_of_x.push_back(y);
        }

        std::size_t letter;
        if (c_of_x.empty()) {
            if (shape.height[x] == 0) {
                letter = 0;
            } else {
                // The unique lower cover is a tree member below x.
                letter = letters[parent];
            }
        } else if (l_of_x.empty()) {
            if (c_of_x.size() > 2)
                throw violation(x, "|C(x)| > 2");
            Bits used(4);
            for (std::size_t y : c_of_x) used.set(letters[y]);
            if (c_of_x.size() == 2 && used.count() != 2)
                throw violation(x, "C(x) pair shares a letter");
            letter = 0;
            while (used.test(letter)) ++letter;
            if (letter > 2) throw violation(x, "no letter left for C(x)");
        } else {
            if (c_of_x.size() != 1)
                throw violation(x, "case-4 C(x) is not a singleton");
            std::size_t y = c_of_x[0];
            std::vector<std::size_t> minimal;
            for (std::size_t z : l_of_x) {
                bool is_min = true;
                for (std::size_t w : l_of_x)
                    if (w != z && lifted.less(w, z)) is_min = false;
                if (is_min) minimal.push_back(z);
            }
            if (minimal.size() != 1)
                throw violation(x, "L(x) has no unique minimum");
            std::size_t z0 = minimal[0];
            if (letters[y] == letters[z0])
                throw violation(x, "case-4 letters of y and z0 collide");
            letter = 3 - letters[y] - letters[z0];
        }
        letters[x] = letter;
    }
    return letters;
}

Labelling label_forest(const EventStructure& es) {
    for (std::size_t x = 0; x < es.size(); ++x)
        if (es.lower_covers(x).size() > 1)
            throw Error(errc::not_a_forest,
                        "event '" + es.id(x) + "' has " +
                            std::to_string(es.lower_covers(x).size()) +
                            " lower covers");
    if (degree(es, 4) > 3)
        throw Error(errc::degree_exceeds_three,
                    "the orthogonality graph has a 4-clique");

    if (es.size() == 0) return finish(es, {}, "forest");

    EventStructure lifted = es.lift_bottom();
    std::vector<std::size_t> tree;
    for (std::size_t i = 0; i < es.size(); ++i)
        tree.push_back(lifted.index(es.id(i)));
    LinearOrder order = choose_tree_order(lifted, tree);
    std::vector<std::size_t> lifted_letters = tree_label(lifted, tree, order);

    std::vector<std::size_t> letters(es.size());
    for (std::size_t i = 0; i < es.size(); ++i)
        letters[i] = lifted_letters[lifted.index(es.id(i))];
    return finish(es, std::move(letters), "forest");
}

OrthoGraph quotient_graph(const EventStructure& es,
                          const std::vector<std::size_t>& class_of,
                          std::size_t num_classes) {
    OrthoGraph g;
    g.vertices.resize(num_classes);
    for (std::size_t c = 0; c < num_classes; ++c)
        g.vertices[c] = "class" + std::to_string(c);
    g.adj.assign(num_classes, Bits(num_classes));
    for (auto [a, b] : es.orthogonal_pairs()) {
        std::size_t ca = class_of[a], cb = class_of[b];
        if (ca != cb) {
            g.adj[ca].set(cb);
            g.adj[cb].set(ca);
        }
    }
    return g;
}

Labelling label_quotient(
    const EventStructure& es, const std::vector<std::size_t>& class_of,
    std::size_t num_classes,
    const std::function<std::vector<std::size_t>(
        const EventStructure&, const std::vector<std::size_t>&)>&
        class_labeller,
    const Coloring& quotient_colors) {
    if (class_of.size() != es.size())
        throw Error(errc::bad_quotient_coloring,
                    "partition does not cover every event");
    OrthoGraph q = quotient_graph(es, class_of, num_classes);
    if (quotient_colors.assignment.size() != num_classes)
        throw Error(errc::bad_quotient_coloring,
                    "coloring does not cover every class");
    for (std::size_t c = 0; c < num_classes; ++c) {
        if (quotient_colors.assignment[c] >= quotient_colors.num_colors)
            throw Error(errc::bad_quotient_coloring,
                        "class color out of range");
        for (std::size_t d2 = c + 1; d2 < num_classes; ++d2)
            if (q.adjacent(c, d2) && quotient_colors.assignment[c] ==
                                         quotient_colors.assignment[d2])
                throw Error(errc::bad_quotient_coloring,
                            "adjacent classes " + std::to_string(c) + " and " +
                                std::to_string(d2) + " share a color");
    }

    std::vector<std::vector<std::size_t>> members(num_classes);
    for (std::size_t v = 0; v < es.size(); ++v)
        members[class_of[v]].push_back(v);

    std::vector<std::size_t> letters(es.size(), Labelling::unset);
    for (std::size_t c = 0; c < num_classes; ++c) {
        auto internal = class_labeller(es, members[c]);
        if (internal.size() != members[c].size())
            throw Error(errc::class_not_three_labellable,
                        "class labeller returned the wrong arity");
        for (std::size_t i = 0; i < members[c].size(); ++i) {
            if (internal[i] >= 3)
                throw Error(errc::class_not_three_labellable,
                            "class " + std::to_string(c) +
                                " needs more than 3 letters");
            for (std::size_t j = i + 1; j < members[c].size(); ++j)
                if (internal[i] == internal[j] &&
                    es.orthogonal(members[c][i], members[c][j]))
                    throw Error(errc::class_not_three_labellable,
                                "class " + std::to_string(c) +
                                    " labelling is not nice");
            letters[members[c][i]] =
                quotient_colors.assignment[c] * 3 + internal[i];
        }
    }
    return finish(es, std::move(letters), "quotient");
}

namespace {

struct SimpleShape {
    EventStructure lifted;
    std::size_t bottom = 0;
    std::vector<std::size_t> cover_count;
    std::vector<std::size_t> rho;   // for one-cover events
    std::vector<std::size_t> order; // height-compatible, all lifted events
};

void check_simple(const EventStructure& es) {
    if (degree(es, 4) > 3)
        throw Error(errc::not_simple, "degree exceeds 3");
    for (auto [p, c] : es.cover_pairs())
        if (es.height_of(es.index(c)) != es.height_of(es.index(p)) + 1)
            throw Error(errc::not_simple,
                        "not graded: cover " + p + " -> " + c +
                            " skips a height");
    OrthoGraph g = OrthoGraph::of(es);
    const std::size_t n = g.vertex_count();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
                if (!es.minimal_conflict(a, b) &&
                    !es.minimal_conflict(a, c) &&
                    !es.minimal_conflict(b, c))
                    throw Error(errc::not_simple,
                                "3-clique {" + es.id(a) + "," + es.id(b) +
                                    "," + es.id(c) +
                                    "} has no minimal conflict");
            }
        }
}

} // namespace

Labelling label_simple(const EventStructure& es) {
    check_simple(es);
    if (es.size() == 0) return finish(es, {}, "simple");

    SimpleShape shape;
    shape.lifted = es.lift_bottom();
    const EventStructure& L = shape.lifted;
    const std::size_t n = L.size();
    shape.bottom = Bits::npos;
    shape.cover_count.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        shape.cover_count[v] = L.lower_covers(v).size();
        if (shape.cover_count[v] == 0) {
            if (shape.bottom != Bits::npos)
                throw Error(errc::theorem_violation,
                            "lifting left two minimal events");
            shape.bottom = v;
        }
        if (shape.cover_count[v] >= 3)
            throw Error(errc::theorem_violation,
                        "simple structure with a three-cover event '" +
                            L.id(v) + "'");
    }

    auto violation = [&](const std::string& what) {
        return Error(errc::theorem_violation, what);
    };

    // Height-compatible linear order on the lifted events.
    shape.order.resize(n);
    for (std::size_t v = 0; v < n; ++v) shape.order[v] = v;
    std::stable_sort(shape.order.begin(), shape.order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return L.height_of(a) < L.height_of(b);
                     });
    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[shape.order[p]] = p;

    // Two-cover events: greedy along the order needs at most 3 letters.
    // Every earlier orthogonal event must lie in C(x) (all its lower covers
    // are lower covers of x), and C(x) holds at most two candidates.
    std::vector<std::size_t> two_letters(n, Labelling::unset);
    for (std::size_t x : shape.order) {
        if (shape.cover_count[x] != 2) continue;
        std::vector<std::size_t> earlier;
        for (std::size_t y = 0; y < n; ++y) {
            if (pos[y] >= pos[x] || !L.orthogonal(x, y)) continue;
            for (std::size_t yc : L.lower_covers(y)) {
                const auto& xc = L.lower_covers(x);
                if (std::find(xc.begin(), xc.end(), yc) == xc.end())
                    throw violation("O(x) escapes C(x) for two-cover '" +
                                    L.id(x) + "'");
            }
            if (shape.cover_count[y] == 2) earlier.push_back(y);
        }
        if (earlier.size() > 2)
            throw violation("two-cover '" + L.id(x) +
                            "' sees more than 2 earlier neighbours");
        Bits used(4);
        for (std::size_t y : earlier) used.set(two_letters[y]);
        std::size_t c = 0;
        while (used.test(c)) ++c;
        if (c > 2)
            throw violation("two-cover events need a fourth letter");
        two_letters[x] = c;
    }

    // rho(x): greatest non-one-cover event below a one-cover event; its
    // preimage classes are the trees of the quotient.
    shape.rho.assign(n, Bits::npos);
    for (std::size_t x : shape.order) {
        if (shape.cover_count[x] != 1) continue;
        std::size_t p = L.lower_covers(x)[0];
        shape.rho[x] = shape.cover_count[p] == 1 ? shape.rho[p] : p;
    }

    std::map<std::size_t, std::vector<std::size_t>> trees; // by rho
    for (std::size_t v = 0; v < n; ++v)
        if (shape.cover_count[v] == 1) trees[shape.rho[v]].push_back(v);

    // Class ids: 0 = bottom, 1 = two-cover events, 2.. = trees ordered by
    // the position of their root.
    std::vector<std::size_t> roots;
    for (const auto& [root, members] : trees) {
        (void)members;
        roots.push_back(root);
    }
    std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
        return pos[a] < pos[b];
    });
    const std::size_t num_classes = 2 + roots.size();
    std::vector<std::size_t> class_of(n, 0);
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t t = 0; t < roots.size(); ++t)
        class_of_root[roots[t]] = 2 + t;
    for (std::size_t v = 0; v < n; ++v) {
        if (shape.cover_count[v] == 2)
            class_of[v] = 1;
        else if (shape.cover_count[v] == 1)
            class_of[v] = class_of_root.at(shape.rho[v]);
    }

    OrthoGraph q = quotient_graph(L, class_of, num_classes);
    if (q.adj[0].any())
        throw violation("the lifted bottom is not isolated in the quotient");

    // Tree classes take colors {0,1,2} greedily along the root order; the
    // injective map f into C(rho(x)) bounds the earlier neighbours by 2.
    Coloring qcolors;
    qcolors.assignment.assign(num_classes, Bits::npos);
    for (std::size_t t = 0; t < roots.size(); ++t) {
        std::size_t cls = 2 + t;
        std::vector<std::size_t> earlier;
        for (std::size_t s = 0; s < t; ++s)
            if (q.adjacent(cls, 2 + s)) earlier.push_back(2 + s);

        std::size_t rx = roots[t];
        std::vector<std::size_t> f_values;
        for (std::size_t cls_y : earlier) {
            std::size_t ry = roots[cls_y - 2];
            // Lexicographically least orthogonal witness pair y' in [y],
            // x' in [x].
            std::size_t wy = Bits::npos;
            for (std::size_t y2 : trees.at(ry)) {
                for (std::size_t x2 : trees.at(rx))
                    if (L.orthogonal(y2, x2)) {
                        wy = y2;
                        break;
                    }
                if (wy != Bits::npos) break;
            }
            if (wy == Bits::npos)
                throw violation("adjacent classes without a witness pair");
            if (!L.orthogonal(wy, rx))
                throw violation("witness is not orthogonal to rho(x)");
            // Walk the chain from rho(y) up to y' for the least element
            // not below rho(x).
            std::vector<std::size_t> chain{wy};
            for (std::size_t z = wy; z != ry;) {
                z = L.lower_covers(z)[0];
                chain.push_back(z);
            }
            std::reverse(chain.begin(), chain.end());
            std::size_t f = Bits::npos;
            for (std::size_t z : chain)
                if (!L.leq(z, rx)) {
                    f = z;
                    break;
                }
            if (f == Bits::npos)
                throw violation("no chain element escapes rho(x)");
            if (!L.orthogonal(f, rx))
                throw violation("f value is not orthogonal to rho(x)");
            for (std::size_t fc : L.lower_covers(f)) {
                const auto& rc = L.lower_covers(rx);
                if (!(std::find(rc.begin(), rc.end(), fc) != rc.end()))
                    throw violation("f value escapes C(rho(x))");
            }
            f_values.push_back(f);
        }
        std::sort(f_values.begin(), f_values.end());
        if (std::adjacent_find(f_values.begin(), f_values.end()) !=
            f_values.end())
            throw violation("f is not injective");
        if (f_values.size() > 2)
            throw violation("|f(O([x]))| > 2");
        if (earlier.size() > 2)
            throw violation("tree class sees more than 2 earlier classes");

        Bits used(4);
        for (std::size_t cls_y : earlier) used.set(qcolors.assignment[cls_y]);
        std::size_t c = 0;
        while (used.test(c)) ++c;
        if (c > 2) throw violation("tree classes need a fourth color");
        qcolors.assignment[cls] = c;
    }
    {
        // Two-cover class: least color its neighbours leave free.
        Bits used(num_classes + 1);
        for (std::size_t c2 = 0; c2 < num_classes; ++c2)
            if (q.adjacent(1, c2) && qcolors.assignment[c2] != Bits::npos)
                used.set(qcolors.assignment[c2]);
        std::size_t c = 0;
        while (used.test(c)) ++c;
        if (c > 3) throw violation("quotient needs a fifth color");
        qcolors.assignment[1] = c;
        qcolors.assignment[0] = 0; // isolated bottom
    }
    qcolors.num_colors = 0;
    for (std::size_t c2 = 0; c2 < num_classes; ++c2)
        qcolors.num_colors =
            std::max(qcolors.num_colors, qcolors.assignment[c2] + 1);
    if (qcolors.num_colors > 4)
        throw violation("quotient coloring exceeded 4 colors");

    auto class_labeller = [&](const EventStructure& inner,
                              const std::vector<std::size_t>& members)
        -> std::vector<std::size_t> {
        (void)inner;
        if (members.size() == 1 && members[0] == shape.bottom) return {0};
        if (!members.empty() && shape.cover_count[members[0]] == 2) {
            std::vector<std::size_t> out;
            for (std::size_t v : members) out.push_back(two_letters[v]);
            return out;
        }
        LinearOrder order = choose_tree_order(L, members);
        auto letters = tree_label(L, members, order);
        std::vector<std::size_t> out;
        for (std::size_t v : members) out.push_back(letters[v]);
        return out;
    };

    Labelling on_lifted =
        label_quotient(L, class_of, num_classes, class_labeller, qcolors);

    std::vector<std::size_t> letters(es.size());
    for (std::size_t i = 0; i < es.size(); ++i)
        letters[i] = on_lifted.letters[L.index(es.id(i))];
    Labelling lab = finish(es, std::move(letters), "simple");
    if (lab.alphabet_size > 12)
        throw violation("simple labelling exceeded 12 letters");
    return lab;
}

} // namespace eslab
