#pragma once

#include <string>

#include "qsnake/parse.hpp"

inline qsnake::YMonomial parse_ym(const std::string& s) { return qsnake::parse_monomial(s); }

inline qsnake::Snake make_snake(const qsnake::Algebra& alg, const std::string& s) {
    return qsnake::validate_snake(alg, qsnake::parse_point_list(s));
}
