#ifndef ESLAB_ERROR_HPP
#define ESLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace eslab {

enum class errc {
    cycle_in_covers,
    redundant_cover_edge,
    conflict_between_comparable,
    duplicate_event,
    unknown_event,
    x_not_in_y,
    size_limit_exceeded,
    exceeds_cap,
    not_an_antichain,
    bad_order,
    domain_too_large,
    unlabelled_event,
    not_stratifying,
    level_needs_more_than_three_colors,
    not_a_tree,
    incomparable_twin_o_sets,
    not_a_forest,
    degree_exceeds_three,
    theorem_violation,
    class_not_three_labellable,
    bad_quotient_coloring,
    generation_failed,
    unknown_fixture,
    syntax_error,
    not_simple,
};

// Stable CamelCase name, e.g. "NotAForest"; used verbatim in diagnostics.
const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message);
    errc code() const { return code_; }

private:
    errc code_;
};

class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& message);
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace eslab

#endif
