#include "qsnake/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace qsnake {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(errc::parse_error, std::string("expected '") + c + "' in \"" + s + "\"");
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail(errc::parse_error, "expected an integer in \"" + s + "\"");
        return std::atoi(s.substr(start, pos - start).c_str());
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
};

} // namespace

Algebra parse_algebra(const std::string& s) {
    Cursor c{s};
    c.skip_ws();
    if (c.pos >= s.size()) fail(errc::parse_error, "empty algebra name");
    const char kind = s[c.pos++];
    AlgebraKind k;
    if (kind == 'A' || kind == 'a') k = AlgebraKind::TypeA;
    else if (kind == 'B' || kind == 'b') k = AlgebraKind::TypeB;
    else fail(errc::parse_error, "algebra must be A<rank> or B<rank>");
    const int rank = c.integer();
    if (!c.done()) fail(errc::parse_error, "trailing characters in algebra name");
    return Algebra(k, rank);
}

std::vector<Lp> parse_point_list(const std::string& s) {
    Cursor c{s};
    std::vector<Lp> pts;
    if (c.done()) return pts;
    while (true) {
        c.expect('(');
        Lp p;
        p.i = c.integer();
        c.expect(',');
        p.k = c.integer();
        c.expect(')');
        pts.push_back(p);
        if (c.done()) return pts;
        c.expect(',');
    }
}

YMonomial parse_monomial(const std::string& s) {
    Cursor c{s};
    YMonomial m;
    if (c.done()) fail(errc::parse_error, "empty monomial");
    c.skip_ws();
    if (s[c.pos] == '1') {
        ++c.pos;
        if (!c.done()) fail(errc::parse_error, "trailing characters after 1");
        return m;
    }
    while (true) {
        c.skip_ws();
        if (c.pos >= s.size() || (s[c.pos] != 'Y' && s[c.pos] != 'y'))
            fail(errc::parse_error, "expected Y[i,k] in \"" + s + "\"");
        ++c.pos;
        c.expect('[');
        Lp p;
        p.i = c.integer();
        c.expect(',');
        p.k = c.integer();
        c.expect(']');
        int e = 1;
        if (c.eat('^')) e = c.integer();
        m.mul_y(p, e);
        if (c.done()) return m;
        c.expect('*');
    }
}

} // namespace qsnake
