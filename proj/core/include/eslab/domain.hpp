#ifndef ESLAB_DOMAIN_HPP
#define ESLAB_DOMAIN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "eslab/bits.hpp"
#include "eslab/labelling.hpp"
#include "eslab/structure.hpp"

namespace eslab {

// The domain D(E): every conflict-free lower set of events, ordered by
// inclusion. Configurations are enumerated breadth-first by size and
// lexicographically within one size, so indices are canonical; index 0 is
// always the empty configuration.
struct DomainPoset {
    struct HasseEdge {
        std::size_t lower, upper;
        std::size_t event; // the single event the upper cover adds
    };

    std::vector<Bits> configs;
    std::vector<HasseEdge> hasse;                      // sorted (lower, event)
    std::vector<std::vector<std::size_t>> upper_of;    // edge indices by lower
    std::vector<std::vector<std::size_t>> lower_of;    // edge indices by upper

    std::size_t find(const Bits& config) const;        // npos when absent
    std::string config_name(const EventStructure& es, std::size_t i) const;
};

inline constexpr std::size_t default_max_configs = 100000;

// Throws DomainTooLarge once more than max_configs configurations exist
// (the message carries the count reached).
DomainPoset configurations(const EventStructure& es,
                           std::size_t max_configs = default_max_configs);

// Maximum number of upper covers over all configurations.
std::size_t branching_degree(const DomainPoset& d);

// Labels every Hasse edge with the letter of its added event and checks the
// two trace conditions: (i) edges out of one configuration carry pairwise
// distinct labels, (ii) perspective edges (I0 ≺ I1, J0 ≺ J1 with
// I0 = I1 ∩ J0 and J1 = I1 ∪ J0) carry equal labels.
struct PerspectiveReport {
    struct SourceClash {
        std::size_t config;
        std::size_t event_a, event_b;
    };
    struct EdgeClash {
        std::size_t edge_a, edge_b; // indices into hasse
    };
    std::vector<SourceClash> source_clashes;
    std::vector<EdgeClash> perspective_clashes;
    bool ok() const {
        return source_clashes.empty() && perspective_clashes.empty();
    }
};

PerspectiveReport check_perspective_labelling(const DomainPoset& d,
                                              const EventStructure& es,
                                              const Labelling& lab);

// Closure under binary intersection, and the distributive law
// Z ∩ (X ∪ Y) = (Z ∩ X) ∪ (Z ∩ Y) for every X,Y whose union is a
// configuration. The triple scan is exhaustive within `triple_budget` checks
// and deterministically stride-sampled over Z beyond it.
struct ChoppedReport {
    std::vector<std::pair<std::size_t, std::size_t>> missing_intersections;
    std::vector<std::array<std::size_t, 3>> distributivity_failures;
    std::size_t triples_checked = 0;
    bool sampled = false;
    bool ok() const {
        return missing_intersections.empty() &&
               distributivity_failures.empty();
    }
};

ChoppedReport check_chopped_lattice(const DomainPoset& d,
                                    std::size_t triple_budget = 5000000);

} // namespace eslab

#endif
