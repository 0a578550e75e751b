#ifndef ESLAB_GRAPH_HPP
#define ESLAB_GRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "eslab/bits.hpp"
#include "eslab/structure.hpp"

namespace eslab {

// Undirected graph on the events; in G(E) the edges are exactly the
// orthogonal pairs. Vertices are kept in lexicographic id order.
struct OrthoGraph {
    std::vector<std::string> vertices;
    std::vector<Bits> adj;

    static OrthoGraph of(const EventStructure& es);
    // Synthetic graphs (tests, quotients): vertices are sorted first.
    static OrthoGraph from_edges(std::vector<std::string> vertices,
                                 const std::vector<IdPair>& edges);

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const;
    bool adjacent(std::size_t a, std::size_t b) const {
        return adj[a].test(b);
    }
    std::size_t index(std::string_view v) const; // throws UnknownEvent
};

struct Coloring {
    std::vector<std::size_t> assignment; // vertex index -> color index
    std::size_t num_colors = 0;
};

// Lexicographically least maximum clique, by exhaustive branch and bound.
// `stop_at` short-circuits the search once a clique of that size is found.
std::vector<std::size_t> max_clique(const OrthoGraph& g,
                                    std::size_t stop_at = Bits::npos);
std::size_t clique_number(const OrthoGraph& g,
                          std::size_t stop_at = Bits::npos);

// Degree of the event structure = clique number of its graph.
std::size_t degree(const EventStructure& es,
                   std::size_t stop_at = Bits::npos);

struct ChromaticOptions {
    std::size_t size_limit = 64;
};

// Exact chromatic number with a witness coloring. Deterministic: DSATUR
// vertex selection with lexicographic tie-break, maximum-clique lower bound,
// full backtracking. Throws SizeLimitExceeded above the vertex limit and
// ExceedsCap (carrying the best coloring found) when the optimum is > cap.
std::pair<std::size_t, Coloring>
chromatic_exact(const OrthoGraph& g, std::size_t cap,
                ChromaticOptions options = {});

class ExceedsCapError : public Error {
public:
    ExceedsCapError(std::size_t chromatic, std::size_t cap, Coloring best);
    std::size_t chromatic;
    Coloring best;
};

// Greedy coloring along an arbitrary vertex permutation; along a perfect
// elimination ordering of a chordal graph it is optimal.
Coloring greedy_color(const OrthoGraph& g,
                      const std::vector<std::size_t>& order);

// All cycles x0 ⊥ x1 ⊥ ... ⊥ x0 whose vertices are pairwise incomparable,
// with length (vertex count) in [min_len, max_len]. Each cycle is reported
// once, as the id sequence starting at its least vertex in the direction
// with the smaller successor; the list is sorted by (length, sequence).
std::vector<std::vector<std::string>>
straight_cycles(const EventStructure& es, std::size_t min_len,
                std::size_t max_len);

struct ChordalResult {
    bool chordal = false;
    std::vector<std::size_t> peo;           // when chordal
    std::vector<std::size_t> witness_cycle; // a chordless >=4 cycle otherwise
};

// Lex-BFS + perfect-elimination verification.
ChordalResult chordal_elimination(const OrthoGraph& g);

// Restriction of G(E) to a set of pairwise incomparable events; throws
// NotAnAntichain when the set is not one.
OrthoGraph induced_graph(const EventStructure& es,
                         const std::vector<std::size_t>& subset);
ChordalResult chordal_elimination(const EventStructure& es,
                                  const std::vector<std::size_t>& antichain);

} // namespace eslab

#endif
