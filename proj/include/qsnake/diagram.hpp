#pragma once

#include <string>

#include "qsnake/snake.hpp"

namespace qsnake {

enum class DiagramFormat { Ascii, Tikz };

// Grid rendering in the embedding plane. Snake points are drawn as '#',
// first-chain neighbours as '^' (triangles in TikZ), second-chain neighbours
// as 'o' (diamonds). Paths, when given, are drawn as '+' vertices.
std::string diagram(const Algebra& alg, const Snake& s, bool with_neighbours,
                    const std::vector<Path>& paths, DiagramFormat format);

} // namespace qsnake
