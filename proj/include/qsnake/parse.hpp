#pragma once

#include <string>

#include "qsnake/snake.hpp"

namespace qsnake {

// "A2", "B3"
Algebra parse_algebra(const std::string& s);

// "(1,0),(2,5),(1,10)" with optional whitespace; "" for the empty snake
std::vector<Lp> parse_point_list(const std::string& s);

// "Y[1,0]*Y[2,3]^-1" products; "1" for the identity
YMonomial parse_monomial(const std::string& s);

} // namespace qsnake
