#ifndef ESLAB_IO_HPP
#define ESLAB_IO_HPP

#include <string>
#include <vector>

#include "eslab/domain.hpp"
#include "eslab/labelling.hpp"
#include "eslab/structure.hpp"

namespace eslab {

// .es text format: one directive per line, tokens whitespace-separated,
// '#' starts a comment.
//   event <id>
//   cover <parent> <child>
//   conflict <a> <b>
struct ParsedEs {
    std::vector<std::string> events;
    std::vector<IdPair> covers;
    std::vector<IdPair> conflict_generators;
};

ParsedEs parse_es(const std::string& text);
EventStructure read_es(const std::string& text); // parse + build

// Canonical form: events sorted, then covers, then the minimal conflicts of
// the closed relation as the generator set; parse ∘ serialize = id.
std::string serialize_es(const EventStructure& es);

// .labels text format: lines `label <event-id> <letter-index>`.
std::vector<std::pair<std::string, std::size_t>>
parse_labels(const std::string& text);
// Resolves parsed lines against a structure; missing events stay unset.
Labelling bind_labels(const EventStructure& es,
                      const std::vector<std::pair<std::string, std::size_t>>&
                          lines);
std::string serialize_labels(const EventStructure& es, const Labelling& lab);

// DOT export of G(E) in the figure style: Hasse edges dotted, minimal
// conflicts bold, maximal concurrent pairs solid (a concurrent pair is
// maximal when neither side can move up and stay orthogonal); non-maximal
// concurrent pairs are omitted.
std::string export_dot_graph(const EventStructure& es);

// DOT export of the domain: configurations as nodes, Hasse edges labelled
// with the added event (or its letter when a labelling is supplied).
std::string export_dot_domain(const DomainPoset& d, const EventStructure& es);
std::string export_dot_domain(const DomainPoset& d, const EventStructure& es,
                              const Labelling& lab);

} // namespace eslab

#endif
