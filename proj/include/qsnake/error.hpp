#pragma once

#include <stdexcept>
#include <string>

namespace qsnake {

enum class errc {
    out_of_range,
    invalid_lattice_point,
    not_in_root_lattice,
    overflow,
    move_not_applicable,
    shape_mismatch,
    not_a_snake,
    not_prime_position,
    not_prime,
    snake_too_short,
    assignment_failed,
    too_large,
    bad_params,
    family_mismatch,
    bad_r,
    not_dominant,
    division_not_exact,
    not_a_character,
    precondition_failed,
    not_applicable,
    parse_error,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::out_of_range: return "OutOfRange";
        case errc::invalid_lattice_point: return "InvalidLatticePoint";
        case errc::not_in_root_lattice: return "NotInRootLattice";
        case errc::overflow: return "Overflow";
        case errc::move_not_applicable: return "MoveNotApplicable";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::not_a_snake: return "NotASnake";
        case errc::not_prime_position: return "NotPrimePosition";
        case errc::not_prime: return "NotPrime";
        case errc::snake_too_short: return "SnakeTooShort";
        case errc::assignment_failed: return "AssignmentFailed";
        case errc::too_large: return "TooLarge";
        case errc::bad_params: return "BadParams";
        case errc::family_mismatch: return "FamilyMismatch";
        case errc::bad_r: return "BadR";
        case errc::not_dominant: return "NotDominant";
        case errc::division_not_exact: return "DivisionNotExact";
        case errc::not_a_character: return "NotACharacter";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::not_applicable: return "NotApplicable";
        case errc::parse_error: return "ParseError";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

} // namespace qsnake
