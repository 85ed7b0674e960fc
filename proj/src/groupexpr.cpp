#include "homops/groupexpr.hpp"

#include <cctype>
#include <sstream>

namespace homops::expr {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    Int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError(start, "expected a number");
        return Int(s.substr(start, pos - start));
    }
};

// term := '0' | 'Z' | 'Z/n' | 'Z^r'
void parse_term(Cursor& c, std::size_t& free_rank, std::vector<Int>& orders) {
    c.skip_ws();
    if (c.pos >= c.s.size()) throw ParseError(c.pos, "expected a group term");
    char ch = c.s[c.pos];
    if (ch == '0') {
        ++c.pos;
        return;
    }
    if (ch != 'Z') throw ParseError(c.pos, "expected '0' or 'Z'");
    ++c.pos;
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        Int n = c.number();
        if (n < 2) throw ValueError("Z/" + n.str() + " is not a valid cyclic group (need n >= 2)");
        orders.push_back(n);
        return;
    }
    if (c.pos < c.s.size() && c.s[c.pos] == '^') {
        ++c.pos;
        free_rank += static_cast<std::size_t>(c.number());
        return;
    }
    free_rank += 1;
}

}  // namespace

FgAbGroup parse_group(const std::string& text) {
    Cursor c{text};
    std::size_t free_rank = 0;
    std::vector<Int> orders;
    if (c.done()) throw ParseError(0, "empty group expression");
    parse_term(c, free_rank, orders);
    while (!c.done()) {
        if (c.peek() != '+') throw ParseError(c.pos, "expected '+' between group terms");
        ++c.pos;
        parse_term(c, free_rank, orders);
    }
    return FgAbGroup::from_orders(free_rank, orders);
}

std::string render_group(const FgAbGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (g.free_rank() == 1) {
        sep();
        os << "Z";
    } else if (g.free_rank() > 1) {
        sep();
        os << "Z^" << g.free_rank();
    }
    for (const Int& d : g.invariant_factors()) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

}  // namespace homops::expr
