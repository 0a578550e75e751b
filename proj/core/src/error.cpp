#include "eslab/error.hpp"

namespace eslab {

const char* errc_name(errc code) {
    switch (code) {
    case errc::cycle_in_covers: return "CycleInCovers";
    case errc::redundant_cover_edge: return "RedundantCoverEdge";
    case errc::conflict_between_comparable: return "ConflictBetweenComparable";
    case errc::duplicate_event: return "DuplicateEvent";
    case errc::unknown_event: return "UnknownEvent";
    case errc::x_not_in_y: return "XNotInY";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::exceeds_cap: return "ExceedsCap";
    case errc::not_an_antichain: return "NotAnAntichain";
    case errc::bad_order: return "BadOrder";
    case errc::domain_too_large: return "DomainTooLarge";
    case errc::unlabelled_event: return "UnlabelledEvent";
    case errc::not_stratifying: return "NotStratifying";
    case errc::level_needs_more_than_three_colors:
        return "LevelNeedsMoreThanThreeColors";
    case errc::not_a_tree: return "NotATree";
    case errc::incomparable_twin_o_sets: return "IncomparableTwinOSets";
    case errc::not_a_forest: return "NotAForest";
    case errc::degree_exceeds_three: return "DegreeExceedsThree";
    case errc::theorem_violation: return "TheoremViolation";
    case errc::class_not_three_labellable: return "ClassNotThreeLabellable";
    case errc::bad_quotient_coloring: return "BadQuotientColoring";
    case errc::generation_failed: return "GenerationFailed";
    case errc::unknown_fixture: return "UnknownFixture";
    case errc::syntax_error: return "SyntaxError";
    case errc::not_simple: return "NotSimple";
    }
    return "UnknownError";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(int line, int col, const std::string& message)
    : Error(errc::syntax_error,
            "line " + std::to_string(line) + ", col " + std::to_string(col) +
                ": " + message),
      line_(line), col_(col) {}

} // namespace eslab
