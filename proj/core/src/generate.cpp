#include "eslab/generate.hpp"

#include <algorithm>
#include <cmath>

namespace eslab {

namespace {

std::uint64_t scramble(std::uint64_t x) {
    SplitMix64 s{x};
    return s.next();
}

std::string padded_id(std::size_t i, std::size_t n) {
    std::size_t digits = 1;
    for (std::size_t v = n > 0 ? n - 1 : 0; v >= 10; v /= 10) ++digits;
    std::string num = std::to_string(i);
    return "e" + std::string(digits - num.size(), '0') + num;
}

// Incrementally grown structure. Orthogonality between already placed events
// never changes when another event is appended (new conflicts only touch the
// rows of the new event and of events below its generators' partners, none of
// which sit under an old event), so checking cliques through each new event
// is enough to bound the final degree.
struct Growth {
    std::size_t n;
    std::vector<Bits> down, up, conf, orth;
    std::vector<std::vector<std::size_t>> parents;
    std::vector<IdPair> generators_out; // by padded id, filled at the end
    std::vector<std::vector<std::size_t>> gen_pairs;

    explicit Growth(std::size_t n_) : n(n_) {}

    std::size_t placed() const { return parents.size(); }

    bool incomparable(std::size_t a, std::size_t b) const {
        return !down[a].test(b) && !down[b].test(a);
    }
    bool minimal_conflict(std::size_t a, std::size_t b) const {
        return conf[a].test(b) && !down[a].intersects(conf[b]) &&
               !down[b].intersects(conf[a]);
    }

    // Largest clique through the candidate neighbourhood, capped.
    std::size_t clique_through(const Bits& neighbours,
                               std::size_t stop_at) const {
        std::size_t best = 0;
        std::vector<std::size_t> stack;
        auto expand = [&](auto&& self, Bits cand) -> void {
            if (best >= stop_at) return;
            best = std::max(best, stack.size());
            for (std::size_t v = cand.find_first(); v != Bits::npos;
                 v = cand.find_next(v)) {
                if (stack.size() + cand.count() <= best) return;
                stack.push_back(v);
                self(self, cand & orth[v]);
                stack.pop_back();
                cand.reset(v);
                if (best >= stop_at) return;
            }
        };
        expand(expand, neighbours);
        return best;
    }

    // Appends an event with the given lower covers and conflict generators.
    void commit(const std::vector<std::size_t>& covers,
                const std::vector<std::size_t>& gens) {
        std::size_t c = placed();
        parents.push_back(covers);
        gen_pairs.push_back(gens);
        down.emplace_back(n);
        up.emplace_back(n);
        conf.emplace_back(n);
        orth.emplace_back(n);
        for (std::size_t p : covers) {
            down[c] |= down[p];
            down[c].set(p);
            conf[c] |= conf[p];
        }
        down[c].for_each([&](std::size_t a) { up[a].set(c); });
        conf[c].for_each([&](std::size_t x) { conf[x].set(c); });
        for (std::size_t j : gens) {
            Bits targets = up[j];
            targets.set(j);
            conf[c] |= targets;
            targets.for_each([&](std::size_t z) { conf[z].set(c); });
        }
        for (std::size_t y = 0; y < c; ++y) {
            bool edge = incomparable(c, y) &&
                        (!conf[c].test(y) || minimal_conflict(c, y));
            if (edge) {
                orth[c].set(y);
                orth[y].set(c);
            }
        }
    }

    void rollback() {
        std::size_t c = placed() - 1;
        orth[c].for_each([&](std::size_t y) { orth[y].reset(c); });
        down[c].for_each([&](std::size_t a) { up[a].reset(c); });
        conf[c].for_each([&](std::size_t x) { conf[x].reset(c); });
        parents.pop_back();
        gen_pairs.pop_back();
        down.pop_back();
        up.pop_back();
        conf.pop_back();
        orth.pop_back();
    }

    // The combined history of the covers must be conflict-free, otherwise
    // some later configuration would contain a conflict.
    bool covers_compatible(const std::vector<std::size_t>& covers) const {
        for (std::size_t i = 0; i < covers.size(); ++i)
            for (std::size_t j = i + 1; j < covers.size(); ++j) {
                std::size_t a = covers[i], b = covers[j];
                if (!incomparable(a, b)) return false;
                Bits ca = down[a];
                ca.set(a);
                Bits cb = down[b];
                cb.set(b);
                for (std::size_t x = ca.find_first(); x != Bits::npos;
                     x = ca.find_next(x))
                    if (conf[x].intersects(cb)) return false;
            }
        return true;
    }

    EventStructure finish() const {
        std::vector<std::string> events;
        std::vector<IdPair> covers, gens;
        for (std::size_t i = 0; i < placed(); ++i) {
            events.push_back(padded_id(i, n));
            for (std::size_t p : parents[i])
                covers.emplace_back(padded_id(p, n), padded_id(i, n));
            for (std::size_t j : gen_pairs[i])
                gens.emplace_back(padded_id(i, n), padded_id(j, n));
        }
        return EventStructure::build(events, covers, gens);
    }
};

struct GrowPolicy {
    bool forest = false;
    bool graded = false; // parents from the previous layer only
};

EventStructure grow(const GenParams& p, std::uint64_t kind_tag,
                    const GrowPolicy& policy) {
    if (p.degree_cap < 1)
        throw Error(errc::generation_failed, "degree cap must be positive");
    if (p.num_events == 0) return EventStructure{};

    std::uint64_t state = p.seed;
    state = scramble(state + kind_tag);
    state = scramble(state + p.num_events);
    state = scramble(state + p.degree_cap);
    state = scramble(state +
                     static_cast<std::uint64_t>(p.conflict_density * 1000));
    SplitMix64 rng{state};

    const std::size_t n = p.num_events;
    const std::size_t cap =
        policy.graded ? std::min<std::size_t>(p.degree_cap, 3) : p.degree_cap;
    Growth g(n);

    // Layer bookkeeping: graded growth draws parents from prev_layer only;
    // free growth just counts its roots.
    std::vector<std::size_t> prev_layer, cur_layer;
    std::size_t roots_target =
        1 + rng.below(std::min<std::size_t>(std::min<std::size_t>(cap, 3), n));
    std::size_t cur_width_target = roots_target;

    while (g.placed() < n) {
        std::size_t i = g.placed();
        if (policy.graded && cur_layer.size() >= cur_width_target) {
            prev_layer = cur_layer;
            cur_layer.clear();
            cur_width_target = 1 + rng.below(3);
        }

        bool placed_ok = false;
        for (int attempt = 0; attempt < 80 && !placed_ok; ++attempt) {
            std::vector<std::size_t> covers;
            if (policy.graded) {
                if (!prev_layer.empty()) {
                    covers.push_back(prev_layer[rng.below(prev_layer.size())]);
                    if (prev_layer.size() > 1 && rng.unit() < 0.45) {
                        std::size_t other =
                            prev_layer[rng.below(prev_layer.size())];
                        if (other != covers[0]) covers.push_back(other);
                    }
                }
            } else if (i >= roots_target) {
                covers.push_back(rng.below(i));
                if (!policy.forest && rng.unit() < 0.3) {
                    std::size_t other = rng.below(i);
                    if (other != covers[0]) covers.push_back(other);
                }
            }
            if (!g.covers_compatible(covers)) continue;

            std::vector<std::size_t> gens;
            for (std::size_t j = 0; j < i; ++j) {
                // j is comparable with the new event iff it lies below some
                // cover (nothing sits above a fresh maximal event).
                bool below = false;
                for (std::size_t pc : covers)
                    if (pc == j || g.down[pc].test(j)) below = true;
                if (below) continue;
                if (rng.unit() < p.conflict_density) gens.push_back(j);
            }

            g.commit(covers, gens);
            bool ok = g.clique_through(g.orth[i], cap) <= cap - 1;
            if (ok && policy.graded) {
                // no pairwise-concurrent triple through the new event
                auto conc = [&](std::size_t a, std::size_t b) {
                    return g.incomparable(a, b) && !g.conf[a].test(b);
                };
                std::vector<std::size_t> cn;
                for (std::size_t y = 0; y < i; ++y)
                    if (conc(i, y)) cn.push_back(y);
                for (std::size_t a = 0; a < cn.size() && ok; ++a)
                    for (std::size_t b = a + 1; b < cn.size() && ok; ++b)
                        if (conc(cn[a], cn[b])) ok = false;
            }
            if (!ok) {
                g.rollback();
                continue;
            }
            placed_ok = true;
        }
        if (!placed_ok) {
            // Chain extension above the most recent event (a maximal one)
            // with no fresh conflicts: every clique through the new event
            // maps to a clique through its cover, so the cap still holds,
            // and it cannot close a concurrent triple that was not already
            // there.
            std::vector<std::size_t> covers;
            if (i > 0) covers.push_back(i - 1);
            g.commit(covers, {});
            if (policy.graded) {
                prev_layer = {i};
                cur_layer.clear();
                cur_width_target = 1 + rng.below(3);
                continue;
            }
        }
        if (policy.graded) cur_layer.push_back(i);
    }
    return g.finish();
}

} // namespace

EventStructure gen_random(const GenParams& p) {
    return grow(p, 0xA11CE, GrowPolicy{false, false});
}

EventStructure gen_forest(const GenParams& p) {
    return grow(p, 0xF03E57, GrowPolicy{true, false});
}

EventStructure gen_simple(const GenParams& p) {
    return grow(p, 0x51713E, GrowPolicy{false, true});
}

EventStructure generate(const GenParams& p) {
    switch (p.kind) {
    case GenKind::random: return gen_random(p);
    case GenKind::forest: return gen_forest(p);
    case GenKind::simple: return gen_simple(p);
    }
    throw Error(errc::generation_failed, "unknown generator kind");
}

EventStructure fixture(const std::string& name) {
    auto build = [](std::vector<std::string> ev, std::vector<IdPair> cov,
                    std::vector<IdPair> conf) {
        return EventStructure::build(ev, cov, conf);
    };
    if (name == "EMPTY") return EventStructure{};
    if (name == "SINGLE") return build({"a"}, {}, {});
    if (name == "CHAIN3") return build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {});
    if (name == "ANTI3") return build({"x", "y", "z"}, {}, {});
    if (name == "CONF2") return build({"a", "b"}, {}, {{"a", "b"}});
    if (name == "FORK") return build({"r", "x", "y"}, {{"r", "x"}, {"r", "y"}}, {});
    if (name == "TWIN2")
        return build({"p", "u", "v"}, {{"p", "u"}, {"p", "v"}}, {{"u", "v"}});
    if (name == "S")
        return build({"1", "2", "3", "4", "5", "6", "7", "8", "9"},
                     {{"1", "3"},
                      {"1", "4"},
                      {"2", "4"},
                      {"2", "5"},
                      {"3", "6"},
                      {"3", "7"},
                      {"5", "8"},
                      {"5", "9"}},
                     {{"6", "7"}, {"8", "9"}, {"3", "5"}});
    throw Error(errc::unknown_fixture, "no fixture named '" + name + "'");
}

} // namespace eslab
