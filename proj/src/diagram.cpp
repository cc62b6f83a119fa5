#include "qsnake/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qsnake {

namespace {

struct Marks {
    std::map<std::pair<int, int>, char> ascii; // (x, y) -> glyph
    std::vector<std::pair<PlanePoint, std::string>> tikz; // point, shape
};

void mark(Marks& m, int x, int y, char glyph, const std::string& shape) {
    auto key = std::pair(x, y);
    if (!m.ascii.count(key)) {
        m.ascii[key] = glyph;
        m.tikz.push_back({{x, y}, shape});
    }
}

} // namespace

std::string diagram(const Algebra& alg, const Snake& s, bool with_neighbours,
                    const std::vector<Path>& paths, DiagramFormat format) {
    const int n = alg.rank();
    const int xmax = alg.is_type_a() ? n + 1 : 4 * n - 2;

    Marks marks;
    int ymin = 0, ymax = 0;
    bool have_y = false;
    auto stretch = [&](int y) {
        if (!have_y) { ymin = ymax = y; have_y = true; }
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };

    for (const auto& path : paths)
        for (const auto& pt : path.points) {
            stretch(pt.y.base);
            mark(marks, pt.x, pt.y.base, '+', "circle,draw");
        }
    if (with_neighbours && s.size() >= 2) {
        const auto nbrs = neighbour_snakes(alg, s);
        for (const auto& p : nbrs.x.points) {
            const auto pp = iota(alg, p);
            stretch(pp.y);
            mark(marks, pp.x, pp.y, '^', "regular polygon,regular polygon sides=3,draw");
        }
        for (const auto& p : nbrs.y.points) {
            const auto pp = iota(alg, p);
            stretch(pp.y);
            mark(marks, pp.x, pp.y, 'o', "diamond,draw");
        }
    }
    for (const auto& p : s.points) {
        const auto pp = iota(alg, p);
        stretch(pp.y);
        mark(marks, pp.x, pp.y, '#', "circle,fill");
    }
    if (!have_y) { ymin = 0; ymax = 0; }

    std::ostringstream out;
    if (format == DiagramFormat::Ascii) {
        for (int y = ymin; y <= ymax; ++y) {
            out << (y < 10 && y > -1 ? " " : "") << y << " |";
            for (int x = 0; x <= xmax; ++x) {
                auto it = marks.ascii.find({x, y});
                out << (it == marks.ascii.end() ? '.' : it->second);
            }
            out << "\n";
        }
        out << "    ";
        for (int x = 0; x <= xmax; ++x) out << (x % 10);
        out << "\n";
        return out.str();
    }

    out << "\\documentclass[tikz]{standalone}\n"
        << "\\usetikzlibrary{shapes.geometric}\n"
        << "\\begin{document}\n"
        << "\\begin{tikzpicture}[scale=.5,yscale=-1]\n"
        << "\\draw[help lines] (0," << ymin << ") grid (" << xmax << "," << ymax << ");\n";
    for (const auto& [pp, shape] : marks.tikz)
        out << "\\node[" << shape << ",inner sep=1.5pt] at (" << pp.x << "," << pp.y << ") {};\n";
    out << "\\end{tikzpicture}\n\\end{document}\n";
    return out.str();
}

} // namespace qsnake
