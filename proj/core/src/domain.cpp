#include "eslab/domain.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace eslab {

std::size_t DomainPoset::find(const Bits& config) const {
    for (std::size_t i = 0; i < configs.size(); ++i)
        if (configs[i] == config) return i;
    return Bits::npos;
}

std::string DomainPoset::config_name(const EventStructure& es,
                                     std::size_t i) const {
    std::string out = "{";
    bool first = true;
    configs[i].for_each([&](std::size_t e) {
        if (!first) out += ",";
        out += es.id(e);
        first = false;
    });
    out += "}";
    return out;
}

DomainPoset configurations(const EventStructure& es,
                           std::size_t max_configs) {
    const std::size_t n = es.size();
    DomainPoset d;
    std::unordered_map<Bits, std::size_t, Bits::Hash> index;

    std::vector<Bits> level{Bits(n)};
    d.configs.push_back(level[0]);
    index.emplace(level[0], 0);

    struct PendingEdge {
        Bits upper;
        std::size_t lower, event;
    };

    while (!level.empty()) {
        std::vector<PendingEdge> pending;
        std::unordered_map<Bits, std::size_t, Bits::Hash> next_seen;
        std::vector<Bits> next;
        for (const Bits& cfg : level) {
            std::size_t lower = index.at(cfg);
            for (std::size_t x = 0; x < n; ++x) {
                if (cfg.test(x)) continue;
                if (!es.down_strict(x).subset_of(cfg)) continue;
                if (es.conflict_row(x).intersects(cfg)) continue;
                Bits up = cfg;
                up.set(x);
                if (!next_seen.contains(up)) {
                    next_seen.emplace(up, next.size());
                    next.push_back(up);
                }
                pending.push_back({up, lower, x});
            }
        }
        std::sort(next.begin(), next.end(), Bits::set_less);
        if (d.configs.size() + next.size() > max_configs)
            throw Error(errc::domain_too_large,
                        "at least " +
                            std::to_string(d.configs.size() + next.size()) +
                            " configurations (cap " +
                            std::to_string(max_configs) + ")");
        for (const Bits& cfg : next) {
            index.emplace(cfg, d.configs.size());
            d.configs.push_back(cfg);
        }
        for (const auto& e : pending)
            d.hasse.push_back({e.lower, index.at(e.upper), e.event});
        level = std::move(next);
    }

    std::sort(d.hasse.begin(), d.hasse.end(),
              [](const auto& a, const auto& b) {
                  return std::pair(a.lower, a.event) <
                         std::pair(b.lower, b.event);
              });
    d.upper_of.assign(d.configs.size(), {});
    d.lower_of.assign(d.configs.size(), {});
    for (std::size_t e = 0; e < d.hasse.size(); ++e) {
        d.upper_of[d.hasse[e].lower].push_back(e);
        d.lower_of[d.hasse[e].upper].push_back(e);
    }
    return d;
}

std::size_t branching_degree(const DomainPoset& d) {
    std::size_t best = 0;
    for (const auto& ups : d.upper_of) best = std::max(best, ups.size());
    return best;
}

PerspectiveReport check_perspective_labelling(const DomainPoset& d,
                                              const EventStructure& es,
                                              const Labelling& lab) {
    if (lab.letters.size() != es.size() || !lab.total())
        throw Error(errc::unlabelled_event,
                    "labelling does not cover every event");

    PerspectiveReport report;
    for (std::size_t c = 0; c < d.configs.size(); ++c) {
        const auto& out = d.upper_of[c];
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                std::size_t xa = d.hasse[out[i]].event;
                std::size_t xb = d.hasse[out[j]].event;
                if (lab.letters[xa] == lab.letters[xb])
                    report.source_clashes.push_back({c, xa, xb});
            }
    }

    const std::size_t m = d.hasse.size();
    for (std::size_t e1 = 0; e1 < m; ++e1) {
        const Bits& i0 = d.configs[d.hasse[e1].lower];
        const Bits& i1 = d.configs[d.hasse[e1].upper];
        for (std::size_t e2 = 0; e2 < m; ++e2) {
            if (e1 == e2) continue;
            const Bits& j0 = d.configs[d.hasse[e2].lower];
            if (!i0.subset_of(j0)) continue;
            const Bits& j1 = d.configs[d.hasse[e2].upper];
            if ((i1 | j0) != j1) continue;
            if ((i1 & j0) != i0) continue;
            if (lab.letters[d.hasse[e1].event] !=
                lab.letters[d.hasse[e2].event])
                report.perspective_clashes.push_back({e1, e2});
        }
    }
    return report;
}

ChoppedReport check_chopped_lattice(const DomainPoset& d,
                                    std::size_t triple_budget) {
    ChoppedReport report;
    const std::size_t m = d.configs.size();
    std::unordered_map<Bits, std::size_t, Bits::Hash> index;
    for (std::size_t i = 0; i < m; ++i) index.emplace(d.configs[i], i);

    std::vector<std::pair<std::size_t, std::size_t>> join_pairs;
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            Bits inter = d.configs[x] & d.configs[y];
            if (!index.contains(inter))
                report.missing_intersections.emplace_back(x, y);
            Bits uni = d.configs[x] | d.configs[y];
            if (index.contains(uni)) join_pairs.emplace_back(x, y);
        }
    }

    std::size_t stride = 1;
    if (m && !join_pairs.empty()) {
        std::size_t total = join_pairs.size() * m;
        if (total > triple_budget) {
            stride = (total + triple_budget - 1) / triple_budget;
            report.sampled = true;
        }
    }
    for (const auto& [x, y] : join_pairs) {
        Bits uni = d.configs[x] | d.configs[y];
        for (std::size_t z = 0; z < m; z += stride) {
            ++report.triples_checked;
            Bits lhs = d.configs[z] & uni;
            Bits rhs = (d.configs[z] & d.configs[x]) |
                       (d.configs[z] & d.configs[y]);
            if (lhs != rhs)
                report.distributivity_failures.push_back({x, y, z});
        }
    }
    return report;
}

} // namespace eslab
