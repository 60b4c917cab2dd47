#include "tangle.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cuknot::testsupport {

namespace {

Port offset_port(Port p, int by) { return p.open() ? p : Port{p.node + by, p.slot}; }

Tangle merge(const Tangle& a, const Tangle& b) {
    Tangle out;
    out.conn = a.conn;
    const int off = static_cast<int>(a.conn.size());
    for (const auto& node : b.conn) {
        std::array<Port, 4> shifted;
        for (int s = 0; s < 4; ++s) shifted[s] = offset_port(node[s], off);
        out.conn.push_back(shifted);
    }
    return out;
}

void join(Tangle& t, Port a, Port b) {
    if (a.open() || b.open()) throw std::logic_error("tangle join on open port");
    t.conn[a.node][a.slot] = b;
    t.conn[b.node][b.slot] = a;
}

}  // namespace

Tangle crossing(CrossKind kind) {
    Tangle t;
    t.conn.push_back({Port{}, Port{}, Port{}, Port{}});
    if (kind == CrossKind::UnderNE) {
        // ports ccw: 0=NE, 1=NW, 2=SW, 3=SE
        t.ne = {0, 0};
        t.nw = {0, 1};
        t.sw = {0, 2};
        t.se = {0, 3};
    } else {
        // ports ccw: 0=NW, 1=SW, 2=SE, 3=NE
        t.nw = {0, 0};
        t.sw = {0, 1};
        t.se = {0, 2};
        t.ne = {0, 3};
    }
    return t;
}

Tangle hcat(const Tangle& left, const Tangle& right) {
    Tangle out = merge(left, right);
    const int off = static_cast<int>(left.conn.size());
    join(out, left.ne, offset_port(right.nw, off));
    join(out, left.se, offset_port(right.sw, off));
    out.nw = left.nw;
    out.sw = left.sw;
    out.ne = offset_port(right.ne, off);
    out.se = offset_port(right.se, off);
    return out;
}

Tangle vcat(const Tangle& top, const Tangle& bottom) {
    Tangle out = merge(top, bottom);
    const int off = static_cast<int>(top.conn.size());
    join(out, top.sw, offset_port(bottom.nw, off));
    join(out, top.se, offset_port(bottom.ne, off));
    out.nw = top.nw;
    out.ne = top.ne;
    out.sw = offset_port(bottom.sw, off);
    out.se = offset_port(bottom.se, off);
    return out;
}

Tangle htwists(int k) {
    if (k == 0) throw std::invalid_argument("htwists: k must be nonzero");
    const CrossKind kind = k > 0 ? CrossKind::UnderNE : CrossKind::UnderNW;
    Tangle t = crossing(kind);
    for (int i = 1; i < std::abs(k); ++i) t = hcat(t, crossing(kind));
    return t;
}

Tangle vtwists(int k) {
    if (k == 0) throw std::invalid_argument("vtwists: k must be nonzero");
    const CrossKind kind = k > 0 ? CrossKind::UnderNE : CrossKind::UnderNW;
    Tangle t = crossing(kind);
    for (int i = 1; i < std::abs(k); ++i) t = vcat(t, crossing(kind));
    return t;
}

namespace {

std::string to_pd(Tangle t) {
    const int n = static_cast<int>(t.conn.size());
    for (const auto& node : t.conn)
        for (const auto& p : node)
            if (p.open()) throw std::logic_error("to_pd: tangle has open ports");

    // walk the strand, numbering edges as traversed; the walk fixes the
    // orientation, so the under diagonal of each node is entered exactly
    // once and that port starts its quadruple
    std::map<std::pair<int, int>, int> edge_at;
    std::vector<int> under_in(n, -1);
    int node = 0, enter = 0, next_edge = 1, steps = 0;
    do {
        if (enter % 2 == 0) {
            if (under_in[node] >= 0) throw std::logic_error("to_pd: under diagonal entered twice");
            under_in[node] = enter;
        }
        const int exit = (enter + 2) % 4;
        const Port far = t.conn[node][exit];
        edge_at[{node, exit}] = next_edge;
        edge_at[{far.node, far.slot}] = next_edge;
        ++next_edge;
        node = far.node;
        enter = far.slot;
        ++steps;
    } while (!(node == 0 && enter == 0) && steps <= 2 * n);
    if (steps != 2 * n) throw std::runtime_error("to_pd: closure is a link, not a knot");

    std::ostringstream out;
    for (int c = 0; c < n; ++c) {
        if (under_in[c] < 0) throw std::logic_error("to_pd: node never entered as under");
        out << (c ? "," : "") << 'X';
        out << '(';
        for (int s = 0; s < 4; ++s) {
            const int slot = (under_in[c] + s) % 4;
            out << (s ? "," : "") << edge_at.at({c, slot});
        }
        out << ')';
    }
    return out.str();
}

}  // namespace

std::string close_numerator(const Tangle& t) {
    Tangle c = t;
    join(c, c.nw, c.ne);
    join(c, c.sw, c.se);
    return to_pd(std::move(c));
}

std::string close_denominator(const Tangle& t) {
    Tangle c = t;
    join(c, c.nw, c.sw);
    join(c, c.ne, c.se);
    return to_pd(std::move(c));
}

std::string pretzel_pd(int q1, int q2, int q3) {
    return close_numerator(hcat(hcat(vtwists(q1), vtwists(q2)), vtwists(q3)));
}

std::string twist_knot_pd(int n) {
    return close_denominator(vcat(htwists(2), vtwists(n)));
}

}  // namespace cuknot::testsupport
