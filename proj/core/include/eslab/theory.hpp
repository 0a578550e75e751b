#ifndef ESLAB_THEORY_HPP
#define ESLAB_THEORY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "eslab/structure.hpp"

namespace eslab {

// One lemma or invariant, checked literally on a concrete structure.
struct TheoryCheck {
    enum class Status { ok, fail, skipped };
    std::string name;
    Status status = Status::ok;
    std::size_t checked = 0; // how many tuples/instances the check visited
    std::string detail;      // witness on failure, reason on skip
    bool ok() const { return status != Status::fail; }
};

struct TheoryOptions {
    std::size_t decomposition_cap = 40;   // events, conflict decomposition
    std::size_t shared_face_cap = 20;     // events, two-clique face lemma
    std::size_t cycle_cap = 40;           // events, straight-cycle search
    std::size_t degree_equivalence_cap = 14;
    std::size_t correspondence_cap = 10;  // clique <-> covers, both ways
    std::size_t max_configs = 100000;
    std::size_t antichain_budget = 100000;
};

// Order axioms and derived-relation laws (any structure).
TheoryCheck check_trichotomy(const EventStructure& es);
TheoryCheck check_heredity_idempotent(const EventStructure& es);
TheoryCheck check_coherence_law(const EventStructure& es);
TheoryCheck check_ortho_inheritance(const EventStructure& es);
TheoryCheck check_conflict_decomposition(const EventStructure& es,
                                         const TheoryOptions& = {});
TheoryCheck check_twins_orthogonal(const EventStructure& es);
TheoryCheck check_lift_bottom_graph(const EventStructure& es);
TheoryCheck check_star_degree(const EventStructure& es);

// Degree-3 geometry (skipped when the degree exceeds 3).
TheoryCheck check_shared_face(const EventStructure& es,
                              const TheoryOptions& = {});
TheoryCheck check_no_long_straight_cycles(const EventStructure& es,
                                          const TheoryOptions& = {});
TheoryCheck check_antichains_three_colorable(const EventStructure& es,
                                             const TheoryOptions& = {});

// Domain-side checks.
TheoryCheck check_degree_equivalence(const EventStructure& es,
                                     const TheoryOptions& = {});
TheoryCheck check_chopped_lattice_law(const EventStructure& es,
                                      const TheoryOptions& = {});
TheoryCheck check_perspective_equivalence(const EventStructure& es,
                                          const TheoryOptions& = {});

// Twin lemmas (degree <= 3).
TheoryCheck check_twinsthree(const EventStructure& es);
TheoryCheck check_twins_osets(const EventStructure& es);
TheoryCheck check_o_inclusion(const EventStructure& es);

// Tree lemmas: lift the structure, order the original events as a tree and
// check C/L against the twin machinery (skipped unless a forest of
// degree <= 3).
TheoryCheck check_l_and_o(const EventStructure& es);
TheoryCheck check_l_empty(const EventStructure& es);
TheoryCheck check_at_most_three(const EventStructure& es);

// Every maximal antichain of the structure, via pivoted Bron-Kerbosch on the
// incomparability relation.
std::vector<std::vector<std::size_t>>
maximal_antichains(const EventStructure& es, std::size_t budget = 100000);

// The whole suite in a fixed order.
std::vector<TheoryCheck> run_theory_suite(const EventStructure& es,
                                          const TheoryOptions& = {});

} // namespace eslab

#endif
