#include "eslab/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eslab {

namespace {

struct Token {
    std::string text;
    int col; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r' && line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), int(start) + 1});
    }
    return out;
}

} // namespace

ParsedEs parse_es(const std::string& text) {
    ParsedEs parsed;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::set<std::string> declared;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens[0];
        auto expect_id = [&](std::size_t k) -> const std::string& {
            if (k >= tokens.size())
                throw ParseError(lineno, head.col,
                                 "'" + head.text + "' needs more arguments");
            if (!valid_event_id(tokens[k].text))
                throw ParseError(lineno, tokens[k].col,
                                 "malformed event id '" + tokens[k].text +
                                     "'");
            return tokens[k].text;
        };
        auto expect_arity = [&](std::size_t arity) {
            if (tokens.size() != arity + 1)
                throw ParseError(lineno, head.col,
                                 "'" + head.text + "' takes " +
                                     std::to_string(arity) + " arguments");
        };
        if (head.text == "event") {
            expect_arity(1);
            const std::string& id = expect_id(1);
            if (!declared.insert(id).second)
                throw Error(errc::duplicate_event,
                            "line " + std::to_string(lineno) + ": event '" +
                                id + "' declared twice");
            parsed.events.push_back(id);
        } else if (head.text == "cover") {
            expect_arity(2);
            const std::string& a = expect_id(1);
            const std::string& b = expect_id(2);
            parsed.covers.emplace_back(a, b);
        } else if (head.text == "conflict") {
            expect_arity(2);
            const std::string& a = expect_id(1);
            const std::string& b = expect_id(2);
            if (a == b)
                throw ParseError(lineno, tokens[2].col,
                                 "conflict needs two distinct events");
            parsed.conflict_generators.emplace_back(a, b);
        } else {
            throw ParseError(lineno, head.col,
                             "unknown directive '" + head.text + "'");
        }
    }
    for (const auto& [a, b] : parsed.covers) {
        for (const auto& id : {a, b})
            if (!declared.contains(id))
                throw Error(errc::unknown_event,
                            "cover uses undeclared event '" + id + "'");
    }
    for (const auto& [a, b] : parsed.conflict_generators) {
        for (const auto& id : {a, b})
            if (!declared.contains(id))
                throw Error(errc::unknown_event,
                            "conflict uses undeclared event '" + id + "'");
    }
    return parsed;
}

EventStructure read_es(const std::string& text) {
    ParsedEs p = parse_es(text);
    return EventStructure::build(p.events, p.covers, p.conflict_generators);
}

std::string serialize_es(const EventStructure& es) {
    std::string out;
    for (const auto& id : es.ids()) out += "event " + id + "\n";
    for (const auto& [p, c] : es.cover_pairs())
        out += "cover " + p + " " + c + "\n";
    for (const auto& [a, b] : es.minimal_conflict_pairs())
        out += "conflict " + a + " " + b + "\n";
    return out;
}

std::vector<std::pair<std::string, std::size_t>>
parse_labels(const std::string& text) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0].text != "label" || tokens.size() != 3)
            throw ParseError(lineno, tokens[0].col,
                             "expected 'label <event> <letter>'");
        if (!valid_event_id(tokens[1].text))
            throw ParseError(lineno, tokens[1].col,
                             "malformed event id '" + tokens[1].text + "'");
        if (!seen.insert(tokens[1].text).second)
            throw Error(errc::duplicate_event,
                        "line " + std::to_string(lineno) + ": event '" +
                            tokens[1].text + "' labelled twice");
        const std::string& digits = tokens[2].text;
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError(lineno, tokens[2].col,
                             "letter index must be a decimal number");
        out.emplace_back(tokens[1].text, std::stoull(digits));
    }
    return out;
}

Labelling bind_labels(
    const EventStructure& es,
    const std::vector<std::pair<std::string, std::size_t>>& lines) {
    Labelling lab;
    lab.letters.assign(es.size(), Labelling::unset);
    lab.strategy = "file";
    for (const auto& [id, letter] : lines) {
        lab.letters[es.index(id)] = letter;
        lab.alphabet_size = std::max(lab.alphabet_size, letter + 1);
    }
    return lab;
}

std::string serialize_labels(const EventStructure& es, const Labelling& lab) {
    if (lab.letters.size() != es.size() || !lab.total())
        throw Error(errc::unlabelled_event,
                    "labelling does not cover every event");
    std::string out;
    for (std::size_t i = 0; i < es.size(); ++i)
        out += "label " + es.id(i) + " " + std::to_string(lab.letters[i]) +
               "\n";
    return out;
}

namespace {

bool maximal_concurrent(const EventStructure& es, std::size_t x,
                        std::size_t y) {
    if (!es.concurrent(x, y)) return false;
    for (std::size_t z = 0; z < es.size(); ++z) {
        if (es.less(x, z) && es.orthogonal(z, y)) return false;
        if (es.less(y, z) && es.orthogonal(x, z)) return false;
    }
    return true;
}

} // namespace

std::string export_dot_graph(const EventStructure& es) {
    std::string out = "graph events {\n";
    for (const auto& id : es.ids()) out += "  \"" + id + "\";\n";
    for (const auto& [p, c] : es.cover_pairs())
        out += "  \"" + p + "\" -- \"" + c + "\" [style=dotted];\n";
    for (const auto& [a, b] : es.minimal_conflict_pairs())
        out += "  \"" + a + "\" -- \"" + b + "\" [style=bold];\n";
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            if (maximal_concurrent(es, a, b))
                out += "  \"" + es.id(a) + "\" -- \"" + es.id(b) + "\";\n";
    out += "}\n";
    return out;
}

namespace {

std::string dot_domain(const DomainPoset& d, const EventStructure& es,
                       const Labelling* lab) {
    if (lab && (lab->letters.size() != es.size() || !lab->total()))
        throw Error(errc::unlabelled_event,
                    "labelling does not cover every event");
    std::string out = "digraph domain {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < d.configs.size(); ++i)
        out += "  c" + std::to_string(i) + " [label=\"" +
               d.config_name(es, i) + "\"];\n";
    for (const auto& e : d.hasse) {
        std::string tag = lab ? std::to_string(lab->letters[e.event])
                              : es.id(e.event);
        out += "  c" + std::to_string(e.lower) + " -> c" +
               std::to_string(e.upper) + " [label=\"" + tag + "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace

std::string export_dot_domain(const DomainPoset& d, const EventStructure& es) {
    return dot_domain(d, es, nullptr);
}

std::string export_dot_domain(const DomainPoset& d, const EventStructure& es,
                              const Labelling& lab) {
    return dot_domain(d, es, &lab);
}

} // namespace eslab
