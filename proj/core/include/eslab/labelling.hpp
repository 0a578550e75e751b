#ifndef ESLAB_LABELLING_HPP
#define ESLAB_LABELLING_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "eslab/graph.hpp"
#include "eslab/structure.hpp"

namespace eslab {

// Letters are indices into an ordered alphabet {a0, a1, ...}. A labelling is
// nice when orthogonal events always receive distinct letters.
struct Labelling {
    static constexpr std::size_t unset = ~std::size_t(0);

    std::vector<std::size_t> letters; // by event index
    std::size_t alphabet_size = 0;
    std::string strategy;

    bool total() const {
        for (auto l : letters)
            if (l == unset) return false;
        return true;
    }
};

// Violating orthogonal pairs (lexicographic); empty iff the labelling is nice.
// Throws UnlabelledEvent on a partial labelling.
std::vector<IdPair> verify_labelling(const EventStructure& es,
                                     const Labelling& lab);

// Optimal labelling through the exact chromatic solver.
Labelling label_exact(const EventStructure& es,
                      std::size_t cap = ~std::size_t(0),
                      ChromaticOptions options = {});

// One letter per chain of a minimum chain cover; alphabet = width exactly.
Labelling label_dilworth(const EventStructure& es);

// Greedy coloring of G(E) along the lexicographic vertex order.
Labelling label_greedy(const EventStructure& es);

// Letters (level color, level mod n) with n = skew+1: each level of the
// stratifying function is an antichain, colored with at most 3 colors along
// a perfect elimination ordering. Default stratifier is the height.
Labelling label_stratified(const EventStructure& es);
Labelling label_stratified(const EventStructure& es,
                           const std::vector<std::size_t>& stratifier);

// Total order on a tree of events compatible with HEIGHT (lower height
// first) and TWINS (for a proper pair of twins with strictly comparable
// O-sets, the larger O-set comes first); remaining ties by id.
struct LinearOrder {
    std::vector<std::size_t> sequence; // event indices of the lifted structure
};

// `tree` must satisfy the tree conditions inside `lifted`: every member has
// exactly one lower cover, the set is convex, and its minimal members share
// their lower cover. Throws NotATree / IncomparableTwinOSets.
LinearOrder choose_tree_order(const EventStructure& lifted,
                              const std::vector<std::size_t>& tree);

// The inductive 3-letter tree labelling along a compatible linear order.
// Returns letters for tree members (Labelling::unset elsewhere); every claim
// the induction relies on is asserted and raises TheoremViolation if broken.
std::vector<std::size_t> tree_label(const EventStructure& lifted,
                                    const std::vector<std::size_t>& tree,
                                    const LinearOrder& order);

// 3-letter labelling of a forest of degree <= 3 (lift with a fresh bottom,
// order the original events as a tree, label by induction, verify).
Labelling label_forest(const EventStructure& es);

// Pair labelling (class-internal letter, class color), flattened as
// color*3 + letter. Each class must be labelled with < 4 letters by the
// callback; quotient_colors must properly color the quotient graph.
Labelling label_quotient(
    const EventStructure& es, const std::vector<std::size_t>& class_of,
    std::size_t num_classes,
    const std::function<std::vector<std::size_t>(
        const EventStructure&, const std::vector<std::size_t>&)>&
        class_labeller,
    const Coloring& quotient_colors);

// The 12-letter labelling of simple structures (graded, degree <= 3, every
// 3-clique contains a minimal conflict): lift, color the two-cover events
// with 3 letters, label each tree class of one-cover events with 3 letters,
// color the class quotient with 4 colors and compose. Every proof-step bound
// is re-checked at runtime (TheoremViolation on failure).
Labelling label_simple(const EventStructure& es);

// Orthogonality graph on the classes of a partition: classes are adjacent
// when some cross pair is orthogonal.
OrthoGraph quotient_graph(const EventStructure& es,
                          const std::vector<std::size_t>& class_of,
                          std::size_t num_classes);

} // namespace eslab

#endif
