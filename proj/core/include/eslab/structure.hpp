#ifndef ESLAB_STRUCTURE_HPP
#define ESLAB_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eslab/bits.hpp"
#include "eslab/error.hpp"

namespace eslab {

// How a specific ordered pair of events relates; exactly one case holds.
enum class Relation { Equal, Below, Above, Concurrent, Conflict };

const char* relation_name(Relation r);

// Token of [A-Za-z0-9_.-]+, or the lifted bottom "⊥" (optionally suffixed
// with digits when a plain "⊥" is already taken).
bool valid_event_id(std::string_view id);

using IdPair = std::pair<std::string, std::string>;

// A finite coherent event structure: a poset of events given by its Hasse
// diagram together with a hereditarily closed binary conflict relation
// disjoint from comparability. Immutable once built; every accessor is a
// pure function, so concurrent readers are safe.
//
// Events are kept sorted by id, and the index order doubles as the global
// lexicographic tie-break: every set-valued result comes back in ascending
// index = lexicographic id order.
class EventStructure {
public:
    // Validates and closes the input:
    //  - covers must be a Hasse diagram (acyclic, no transitively implied
    //    or duplicated edge),
    //  - conflict is the upward hereditary closure of the generators and
    //    must stay disjoint from comparability (in particular, generator
    //    endpoints may not share an upper bound).
    static EventStructure build(const std::vector<std::string>& events,
                                const std::vector<IdPair>& covers,
                                const std::vector<IdPair>& conflict_generators);

    EventStructure() = default; // the EMPTY structure

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(std::size_t i) const { return ids_[i]; }

    std::optional<std::size_t> find(std::string_view id) const;
    std::size_t index(std::string_view id) const; // throws UnknownEvent

    // Order and derived relations, by index.
    bool leq(std::size_t a, std::size_t b) const {
        return a == b || up_[a].test(b);
    }
    bool less(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool comparable(std::size_t a, std::size_t b) const {
        return leq(a, b) || leq(b, a);
    }
    bool in_conflict(std::size_t a, std::size_t b) const {
        return conf_[a].test(b);
    }
    // x ⌢͡ y: some configuration contains both (equivalently: not in conflict).
    bool weakly_concurrent(std::size_t a, std::size_t b) const {
        return !in_conflict(a, b);
    }
    bool concurrent(std::size_t a, std::size_t b) const {
        return a != b && !comparable(a, b) && !in_conflict(a, b);
    }
    bool minimal_conflict(std::size_t a, std::size_t b) const;
    bool orthogonal(std::size_t a, std::size_t b) const {
        return concurrent(a, b) || minimal_conflict(a, b);
    }
    Relation relation(std::size_t a, std::size_t b) const;

    const Bits& up_strict(std::size_t i) const { return up_[i]; }
    const Bits& down_strict(std::size_t i) const { return down_[i]; }
    const Bits& conflict_row(std::size_t i) const { return conf_[i]; }

    const std::vector<std::size_t>& lower_covers(std::size_t i) const {
        return lower_covers_[i];
    }
    const std::vector<std::size_t>& upper_covers(std::size_t i) const {
        return upper_covers_[i];
    }

    // Longest chain strictly below the event / in the whole structure.
    std::size_t height_of(std::size_t i) const { return height_[i]; }
    std::size_t height() const;

    // Size of a maximum antichain, via a minimum chain cover (Dilworth).
    std::size_t width() const;
    // Minimum chain cover backing width(); chains are maximal lists ordered
    // bottom-up, the cover is listed by ascending least element.
    std::vector<std::vector<std::size_t>> chain_cover() const;

    bool twins(std::size_t a, std::size_t b) const;

    // O^Y_x = {z : z ⊥ x and no y in Y satisfies y ≤ z}; requires x in Y.
    std::vector<std::size_t> o_set(std::size_t x,
                                   std::span<const std::size_t> y_set) const;
    Bits o_set_bits(std::size_t x, std::span<const std::size_t> y_set) const;

    // New minimum below every former minimal event; the orthogonality graph
    // gains exactly one isolated vertex.
    EventStructure lift_bottom() const;
    // Substructure induced by the orthogonality neighbourhood of x.
    EventStructure star(std::size_t x) const;
    // Substructure induced by an arbitrary subset (restricted order re-reduced
    // to its Hasse diagram, restricted conflict re-closed).
    EventStructure induced(const std::vector<std::size_t>& keep) const;

    std::vector<IdPair> cover_pairs() const;
    // The ≤-minimal pairs of the closed conflict relation; they generate it.
    std::vector<IdPair> minimal_conflict_pairs() const;
    std::vector<std::pair<std::size_t, std::size_t>> orthogonal_pairs() const;

    // Id-based front doors (each throws UnknownEvent on a bad id).
    Relation relation(std::string_view x, std::string_view y) const;
    bool minimal_conflict(std::string_view x, std::string_view y) const;
    bool orthogonal(std::string_view x, std::string_view y) const;
    bool twins(std::string_view x, std::string_view y) const;
    std::vector<std::string> lower_covers(std::string_view x) const;
    std::size_t height_of(std::string_view x) const;
    std::vector<std::string>
    o_set(std::string_view x, const std::vector<std::string>& y_set) const;
    EventStructure star(std::string_view x) const;

private:
    std::vector<std::string> ids_;
    std::vector<Bits> up_;   // strict: up_[i] = {j : i < j}
    std::vector<Bits> down_; // strict: down_[i] = {j : j < i}
    std::vector<Bits> conf_;
    std::vector<std::vector<std::size_t>> lower_covers_;
    std::vector<std::vector<std::size_t>> upper_covers_;
    std::vector<std::size_t> height_;
};

} // namespace eslab

#endif
