#include "eslab/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace eslab {

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::Equal: return "Equal";
    case Relation::Below: return "Below";
    case Relation::Above: return "Above";
    case Relation::Concurrent: return "Concurrent";
    case Relation::Conflict: return "Conflict";
    }
    return "?";
}

bool valid_event_id(std::string_view id) {
    if (id.empty()) return false;
    auto plain = [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
               (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    };
    if (std::all_of(id.begin(), id.end(), plain)) return true;
    // "⊥", "⊥0", "⊥1", ... (introduced by lift_bottom)
    static constexpr std::string_view bot = "\xE2\x8A\xA5";
    if (id.substr(0, bot.size()) != bot) return false;
    std::string_view rest = id.substr(bot.size());
    return std::all_of(rest.begin(), rest.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<std::size_t> EventStructure::find(std::string_view id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t EventStructure::index(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw Error(errc::unknown_event, "no event '" + std::string(id) + "'");
}

EventStructure
EventStructure::build(const std::vector<std::string>& events,
                      const std::vector<IdPair>& covers,
                      const std::vector<IdPair>& conflict_generators) {
    EventStructure es;
    for (const auto& id : events) {
        if (!valid_event_id(id))
            throw Error(errc::syntax_error, "malformed event id '" + id + "'");
    }
    es.ids_ = events;
    std::sort(es.ids_.begin(), es.ids_.end());
    for (std::size_t i = 0; i + 1 < es.ids_.size(); ++i) {
        if (es.ids_[i] == es.ids_[i + 1])
            throw Error(errc::duplicate_event,
                        "event '" + es.ids_[i] + "' declared twice");
    }

    const std::size_t n = es.ids_.size();
    auto at = [&](const std::string& id) { return es.index(id); };

    std::vector<std::vector<std::size_t>> children(n), parents(n);
    for (const auto& [p, c] : covers) {
        std::size_t pi = at(p), ci = at(c);
        if (pi == ci)
            throw Error(errc::cycle_in_covers, "self cover on '" + p + "'");
        children[pi].push_back(ci);
        parents[ci].push_back(pi);
    }

    // Kahn topological order; leftover vertices mean a cycle.
    std::vector<std::size_t> indeg(n, 0), topo;
    for (std::size_t i = 0; i < n; ++i) indeg[i] = parents[i].size();
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) topo.push_back(i);
    for (std::size_t k = 0; k < topo.size(); ++k) {
        for (std::size_t c : children[topo[k]])
            if (--indeg[c] == 0) topo.push_back(c);
    }
    if (topo.size() != n)
        throw Error(errc::cycle_in_covers, "cover relation has a cycle");

    es.down_.assign(n, Bits(n));
    for (std::size_t v : topo) {
        for (std::size_t p : parents[v]) {
            es.down_[v] |= es.down_[p];
            es.down_[v].set(p);
        }
    }
    es.up_.assign(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v)
        es.down_[v].for_each([&](std::size_t u) { es.up_[u].set(v); });

    // Covers must be exactly the Hasse edges of the closure they generate.
    for (const auto& [p, c] : covers) {
        std::size_t pi = at(p), ci = at(c);
        if (es.up_[pi].intersects(es.down_[ci]))
            throw Error(errc::redundant_cover_edge,
                        "cover " + p + " -> " + c +
                            " is implied by the other covers");
    }
    {
        std::map<std::pair<std::size_t, std::size_t>, int> seen;
        for (const auto& [p, c] : covers) {
            if (++seen[{at(p), at(c)}] > 1)
                throw Error(errc::redundant_cover_edge,
                            "cover " + p + " -> " + c + " declared twice");
        }
    }

    es.conf_.assign(n, Bits(n));
    for (const auto& [a, b] : conflict_generators) {
        std::size_t ai = at(a), bi = at(b);
        // Hereditary closure of a generator: everything above a conflicts
        // everything above b.
        Bits ua = es.up_[ai];
        ua.set(ai);
        Bits ub = es.up_[bi];
        ub.set(bi);
        ua.for_each([&](std::size_t x) { es.conf_[x] |= ub; });
        ub.for_each([&](std::size_t y) { es.conf_[y] |= ua; });
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (es.conf_[i].test(i) || es.conf_[i].intersects(es.up_[i]) ||
            es.conf_[i].intersects(es.down_[i]))
            throw Error(errc::conflict_between_comparable,
                        "closed conflict meets the order at '" + es.ids_[i] +
                            "'");
    }

    es.lower_covers_.assign(n, {});
    es.upper_covers_.assign(n, {});
    for (const auto& [p, c] : covers) {
        es.lower_covers_[at(c)].push_back(at(p));
        es.upper_covers_[at(p)].push_back(at(c));
    }
    for (auto& v : es.lower_covers_) std::sort(v.begin(), v.end());
    for (auto& v : es.upper_covers_) std::sort(v.begin(), v.end());

    es.height_.assign(n, 0);
    for (std::size_t v : topo) {
        std::size_t h = 0;
        for (std::size_t p : es.lower_covers_[v])
            h = std::max(h, es.height_[p] + 1);
        es.height_[v] = h;
    }
    return es;
}

bool EventStructure::minimal_conflict(std::size_t a, std::size_t b) const {
    return in_conflict(a, b) && !down_[a].intersects(conf_[b]) &&
           !down_[b].intersects(conf_[a]);
}

Relation EventStructure::relation(std::size_t a, std::size_t b) const {
    if (a == b) return Relation::Equal;
    if (less(a, b)) return Relation::Below;
    if (less(b, a)) return Relation::Above;
    if (in_conflict(a, b)) return Relation::Conflict;
    return Relation::Concurrent;
}

std::size_t EventStructure::height() const {
    std::size_t h = 0;
    for (std::size_t v = 0; v < size(); ++v) h = std::max(h, height_[v]);
    return h;
}

std::vector<std::vector<std::size_t>> EventStructure::chain_cover() const {
    const std::size_t n = size();
    // Kuhn's augmenting paths on the comparability bipartite graph; a
    // matching edge u->v chains u directly before v.
    std::vector<std::size_t> match_right(n, Bits::npos), next(n, Bits::npos);
    std::vector<char> visited(n);
    auto try_augment = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t v = 0; v < n; ++v) {
            if (!less(u, v) || visited[v]) continue;
            visited[v] = 1;
            if (match_right[v] == Bits::npos ||
                self(self, match_right[v])) {
                match_right[v] = u;
                next[u] = v;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        try_augment(try_augment, u);
    }

    std::vector<char> is_head(n, 1);
    for (std::size_t v = 0; v < n; ++v)
        if (match_right[v] != Bits::npos) is_head[v] = 0;
    std::vector<std::vector<std::size_t>> chains;
    for (std::size_t v = 0; v < n; ++v) {
        if (!is_head[v]) continue;
        std::vector<std::size_t> chain;
        for (std::size_t u = v; u != Bits::npos; u = next[u])
            chain.push_back(u);
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::size_t EventStructure::width() const { return chain_cover().size(); }

bool EventStructure::twins(std::size_t a, std::size_t b) const {
    return a != b && lower_covers_[a] == lower_covers_[b];
}

Bits EventStructure::o_set_bits(std::size_t x,
                                std::span<const std::size_t> y_set) const {
    if (std::find(y_set.begin(), y_set.end(), x) == y_set.end())
        throw Error(errc::x_not_in_y,
                    "'" + ids_[x] + "' is not a member of Y");
    Bits out(size());
    for (std::size_t z = 0; z < size(); ++z) {
        if (!orthogonal(x, z)) continue;
        bool dominated = false;
        for (std::size_t y : y_set) {
            if (leq(y, z)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.set(z);
    }
    return out;
}

std::vector<std::size_t>
EventStructure::o_set(std::size_t x,
                      std::span<const std::size_t> y_set) const {
    return o_set_bits(x, y_set).to_vector();
}

EventStructure EventStructure::induced(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> events;
    events.reserve(keep.size());
    for (std::size_t i : keep) events.push_back(ids_[i]);

    std::vector<IdPair> covers;
    for (std::size_t a : keep) {
        for (std::size_t b : keep) {
            if (!less(a, b)) continue;
            bool hasse = true;
            for (std::size_t m : keep) {
                if (less(a, m) && less(m, b)) {
                    hasse = false;
                    break;
                }
            }
            if (hasse) covers.emplace_back(ids_[a], ids_[b]);
        }
    }
    // The restriction of a closed conflict is closed, so the full restricted
    // relation works as its own generator set.
    std::vector<IdPair> conflicts;
    for (std::size_t a : keep)
        for (std::size_t b : keep)
            if (a < b && in_conflict(a, b))
                conflicts.emplace_back(ids_[a], ids_[b]);
    return build(events, covers, conflicts);
}

EventStructure EventStructure::star(std::size_t x) const {
    std::vector<std::size_t> keep;
    for (std::size_t y = 0; y < size(); ++y)
        if (orthogonal(x, y)) keep.push_back(y);
    return induced(keep);
}

EventStructure EventStructure::lift_bottom() const {
    std::string bot = "\xE2\x8A\xA5";
    if (find(bot)) {
        for (int k = 0;; ++k) {
            std::string candidate = bot + std::to_string(k);
            if (!find(candidate)) {
                bot = candidate;
                break;
            }
        }
    }
    std::vector<std::string> events = ids_;
    events.push_back(bot);
    std::vector<IdPair> covers = cover_pairs();
    for (std::size_t i = 0; i < size(); ++i)
        if (lower_covers_[i].empty()) covers.emplace_back(bot, ids_[i]);
    return build(events, covers, minimal_conflict_pairs());
}

std::vector<IdPair> EventStructure::cover_pairs() const {
    std::vector<IdPair> out;
    for (std::size_t p = 0; p < size(); ++p)
        for (std::size_t c : upper_covers_[p])
            out.emplace_back(ids_[p], ids_[c]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IdPair> EventStructure::minimal_conflict_pairs() const {
    std::vector<IdPair> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = a + 1; b < size(); ++b)
            if (minimal_conflict(a, b)) out.emplace_back(ids_[a], ids_[b]);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
EventStructure::orthogonal_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = a + 1; b < size(); ++b)
            if (orthogonal(a, b)) out.emplace_back(a, b);
    return out;
}

Relation EventStructure::relation(std::string_view x,
                                  std::string_view y) const {
    return relation(index(x), index(y));
}
bool EventStructure::minimal_conflict(std::string_view x,
                                      std::string_view y) const {
    return minimal_conflict(index(x), index(y));
}
bool EventStructure::orthogonal(std::string_view x, std::string_view y) const {
    return orthogonal(index(x), index(y));
}
bool EventStructure::twins(std::string_view x, std::string_view y) const {
    return twins(index(x), index(y));
}
std::vector<std::string> EventStructure::lower_covers(std::string_view x) const {
    std::vector<std::string> out;
    for (std::size_t p : lower_covers_[index(x)]) out.push_back(ids_[p]);
    return out;
}
std::size_t EventStructure::height_of(std::string_view x) const {
    return height_[index(x)];
}
std::vector<std::string>
EventStructure::o_set(std::string_view x,
                      const std::vector<std::string>& y_set) const {
    std::vector<std::size_t> ys;
    ys.reserve(y_set.size());
    for (const auto& y : y_set) ys.push_back(index(y));
    std::vector<std::string> out;
    for (std::size_t z : o_set(index(x), ys)) out.push_back(ids_[z]);
    return out;
}
EventStructure EventStructure::star(std::string_view x) const {
    return star(index(x));
}

} // namespace eslab
