#include "cuknot/planar_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace cuknot {

PlanarDiagram PlanarDiagram::from_crossings(std::vector<std::array<int, 4>> quads,
                                            std::string name) {
    if (quads.empty()) throw validation_error("diagram has no crossings");
    PlanarDiagram d;
    d.crossings_.reserve(quads.size());
    for (const auto& q : quads) d.crossings_.push_back(Crossing{q, 0});
    d.edge_count_ = 2 * static_cast<int>(quads.size());
    d.name_ = std::move(name);
    d.validate_edges();
    d.trace_strand();
    d.trace_faces();
    d.extract_arcs();
    return d;
}

void PlanarDiagram::validate_edges() {
    std::vector<int> count(edge_count_ + 1, 0);
    for (const auto& c : crossings_)
        for (int e : c.quad) {
            if (e < 1 || e > edge_count_)
                throw validation_error("edge identifier " + std::to_string(e) +
                                       " outside 1.." + std::to_string(edge_count_));
            ++count[e];
        }
    for (int e = 1; e <= edge_count_; ++e)
        if (count[e] != 2)
            throw validation_error("edge " + std::to_string(e) + " appears " +
                                   std::to_string(count[e]) + " times, expected 2");
}

void PlanarDiagram::trace_strand() {
    const int n = crossing_count();
    // the two darts carrying each edge
    std::vector<std::array<Dart, 2>> ends(edge_count_ + 1, {-1, -1});
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            int e = crossings_[c].quad[s];
            if (ends[e][0] < 0)
                ends[e][0] = 4 * c + s;
            else
                ends[e][1] = 4 * c + s;
        }
    auto other_end = [&](Dart d) {
        int e = edge_at(d);
        return ends[e][0] == d ? ends[e][1] : ends[e][0];
    };

    edge_tail_.assign(edge_count_ + 1, -1);
    edge_head_.assign(edge_count_ + 1, -1);
    std::vector<std::array<int, 2>> entries(n, {-1, -1});  // slots entered, in visit order

    // walk the strand starting where edge quad[0][0] enters crossing 0
    Dart arrive = 0;  // (crossing 0, slot 0)
    int steps = 0;
    do {
        int c = dart_crossing(arrive), s = dart_slot(arrive);
        if (entries[c][0] < 0)
            entries[c][0] = s;
        else if (entries[c][1] < 0)
            entries[c][1] = s;
        else
            throw validation_error("strand passes a crossing more than twice");
        Dart exit = 4 * c + (s + 2) % 4;
        int e = edge_at(exit);
        if (edge_tail_[e] >= 0)
            throw validation_error("diagram is not a single closed strand");
        edge_tail_[e] = exit;
        Dart next = other_end(exit);
        edge_head_[e] = next;
        arrive = next;
        ++steps;
    } while (arrive != 0 && steps <= edge_count_);

    if (steps != edge_count_)
        throw validation_error("diagram is disconnected: strand closes after " +
                               std::to_string(steps) + " of " + std::to_string(edge_count_) +
                               " edges");

    // PD convention: each crossing is entered once at slot 0 (under) and
    // once at slot 1 or 3 (over); the over entry slot fixes the sign
    for (int c = 0; c < n; ++c) {
        auto [s0, s1] = entries[c];
        int under = std::min(s0, s1), over = std::max(s0, s1);
        if (under != 0 || (over != 1 && over != 3))
            throw validation_error("crossing " + std::to_string(c) +
                                   " violates the PD orientation convention");
        crossings_[c].sign = (over == 3) ? 1 : -1;
    }
}

void PlanarDiagram::trace_faces() {
    const int n = crossing_count();
    const int darts = 4 * n;
    std::vector<std::array<Dart, 2>> ends(edge_count_ + 1, {-1, -1});
    for (Dart d = 0; d < darts; ++d) {
        int e = edge_at(d);
        if (ends[e][0] < 0)
            ends[e][0] = d;
        else
            ends[e][1] = d;
    }
    opposite_.resize(darts);
    for (Dart d = 0; d < darts; ++d) {
        int e = edge_at(d);
        opposite_[d] = ends[e][0] == d ? ends[e][1] : ends[e][0];
    }
    auto next_dart = [&](Dart d) {
        // clockwise successor at the far endpoint
        Dart far = opposite_[d];
        return 4 * dart_crossing(far) + (dart_slot(far) + 3) % 4;
    };

    face_of_dart_.assign(darts, -1);
    faces_.clear();
    for (Dart d0 = 0; d0 < darts; ++d0) {
        if (face_of_dart_[d0] >= 0) continue;
        Face f;
        int id = static_cast<int>(faces_.size());
        Dart d = d0;
        do {
            face_of_dart_[d] = id;
            f.corners.push_back(d);
            d = next_dart(d);
        } while (d != d0);
        faces_.push_back(std::move(f));
    }

    // Euler check certifies the code describes a sphere embedding
    const int f = static_cast<int>(faces_.size());
    if (n - edge_count_ + f != 2)
        throw validation_error("Euler formula violated (V=" + std::to_string(n) +
                               ", E=" + std::to_string(edge_count_) + ", F=" + std::to_string(f) +
                               "): not a realizable planar code");
}

void PlanarDiagram::extract_arcs() {
    // over-arcs: the over edges at each crossing join into one strand
    std::vector<int> parent(edge_count_ + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : crossings_) parent[find(c.quad[1])] = find(c.quad[3]);

    std::map<int, std::vector<int>> groups;
    for (int e = 1; e <= edge_count_; ++e) groups[find(e)].push_back(e);

    arcs_.clear();
    arc_of_edge_.assign(edge_count_ + 1, -1);
    for (auto& [root, edges] : groups) {
        std::sort(edges.begin(), edges.end());
        arcs_.push_back(OverArc{edges});
    }
    std::sort(arcs_.begin(), arcs_.end(),
              [](const OverArc& a, const OverArc& b) { return a.edges.front() < b.edges.front(); });
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        for (int e : arcs_[i].edges) arc_of_edge_[e] = static_cast<int>(i);

    if (arcs_.size() != crossings_.size())
        throw validation_error("over-arc count does not match crossing count");
}

int PlanarDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
}

PlanarDiagram PlanarDiagram::renamed(std::string name) const {
    PlanarDiagram d = *this;
    d.name_ = std::move(name);
    return d;
}

namespace {

struct Tokenizer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer at offset " + std::to_string(pos));
        int value = 0;
        auto [p, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc())
            throw parse_error("integer out of range at offset " + std::to_string(start));
        return value;
    }
};

}  // namespace

PlanarDiagram parse_pd(std::string_view text, std::string name) {
    Tokenizer tok{text};
    tok.skip_ws();

    bool wrapped = false;
    if (text.substr(tok.pos, 3) == "PD[") {
        tok.pos += 3;
        wrapped = true;
    }

    std::vector<std::array<int, 4>> quads;
    while (!tok.done()) {
        if (wrapped && tok.peek() == ']') {
            ++tok.pos;
            wrapped = false;
            if (!tok.done()) throw parse_error("trailing text after PD[...]");
            break;
        }
        if (!tok.consume('X')) throw parse_error("expected crossing term X(...) at offset " +
                                                 std::to_string(tok.pos));
        char close;
        if (tok.consume('('))
            close = ')';
        else if (tok.consume('['))
            close = ']';
        else
            throw parse_error("expected ( or [ after X");
        std::array<int, 4> q{};
        for (int i = 0; i < 4; ++i) {
            q[i] = tok.integer();
            if (i < 3 && !tok.consume(',')) throw parse_error("expected , in crossing term");
        }
        if (!tok.consume(close)) throw parse_error("unterminated crossing term");
        quads.push_back(q);
        tok.consume(',');  // terms separated by commas and/or whitespace
    }
    if (wrapped) throw parse_error("unterminated PD[...] wrapper");
    if (quads.empty()) throw parse_error("no crossing terms found");
    return PlanarDiagram::from_crossings(std::move(quads), std::move(name));
}

std::string serialize_pd(const PlanarDiagram& d) {
    std::ostringstream out;
    bool first = true;
    for (const auto& c : d.crossings()) {
        if (!first) out << ',';
        first = false;
        out << "X(" << c.quad[0] << ',' << c.quad[1] << ',' << c.quad[2] << ',' << c.quad[3]
            << ')';
    }
    return out.str();
}

PlanarDiagram mirror(const PlanarDiagram& d) {
    // swap strand roles: rotate each quadruple so the incoming over edge
    // becomes slot 0; cyclic order (hence the plane graph) is preserved
    std::vector<std::array<int, 4>> quads;
    quads.reserve(d.crossings().size());
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& q = d.crossings()[c].quad;
        int over_in = -1;
        for (int s : {1, 3})
            if (d.edge_head(q[s]) == 4 * c + s) over_in = s;
        if (over_in < 0) throw std::logic_error("mirror: no incoming over edge");
        quads.push_back({q[over_in], q[(over_in + 1) % 4], q[(over_in + 2) % 4],
                         q[(over_in + 3) % 4]});
    }
    return PlanarDiagram::from_crossings(std::move(quads), d.name());
}

PlanarDiagram connected_sum(const PlanarDiagram& d1, std::size_t arc1, const PlanarDiagram& d2,
                            std::size_t arc2) {
    if (arc1 >= d1.over_arcs().size() || arc2 >= d2.over_arcs().size())
        throw std::invalid_argument("connected_sum: arc index out of range");
    const int offset = d1.edge_count();

    std::vector<std::array<int, 4>> quads;
    for (const auto& c : d1.crossings()) quads.push_back(c.quad);
    for (const auto& c : d2.crossings()) {
        std::array<int, 4> q = c.quad;
        for (int& e : q) e += offset;
        quads.push_back(q);
    }

    // splice at the first edge of each chosen arc: swap the edges' head
    // occurrences so each strand flows into the other diagram
    const int e1 = d1.over_arcs()[arc1].edges.front();
    const int e2 = d2.over_arcs()[arc2].edges.front();
    const Dart h1 = d1.edge_head(e1);
    const Dart h2 = d2.edge_head(e2);
    quads[dart_crossing(h1)][dart_slot(h1)] = e2 + offset;
    quads[d1.crossing_count() + dart_crossing(h2)][dart_slot(h2)] = e1;

    std::string name = d1.name().empty() || d2.name().empty()
                           ? std::string{}
                           : d1.name() + " # " + d2.name();
    return PlanarDiagram::from_crossings(std::move(quads), std::move(name));
}

Handedness opposite(Handedness h) {
    return h == Handedness::Left ? Handedness::Right : Handedness::Left;
}

PlanarDiagram torus_knot(int p, Handedness hand) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("torus_knot: p must be an odd integer >= 3");

    // twist column of p crossings, closed by one arc on each side; edges
    // are numbered along the strand, which passes the column twice
    auto E = [p](int k) { return (k - 1) % (2 * p) + 1; };
    std::vector<std::array<int, 4>> quads;
    for (int i = 0; i < p; ++i) {
        if (i % 2 == 0)
            quads.push_back({E(p + 1 + i), E(i + 1), E(p + 2 + i), E(i + 2)});
        else
            quads.push_back({E(i + 1), E(p + 1 + i), E(i + 2), E(p + 2 + i)});
    }
    PlanarDiagram left = PlanarDiagram::from_crossings(
        std::move(quads), "(" + std::to_string(p) + ",2)-torus");
    if (left.writhe() != -p) throw std::logic_error("torus_knot: generator lost its chirality");
    return hand == Handedness::Left ? left : mirror(left).renamed(left.name() + " mirror");
}

PlanarDiagram r1_twist(const PlanarDiagram& d, int edge, int sign) {
    if (edge < 1 || edge > d.edge_count())
        throw std::invalid_argument("r1_twist: no such edge " + std::to_string(edge));
    if (sign != 1 && sign != -1) throw std::invalid_argument("r1_twist: sign must be +1 or -1");

    const int g = d.edge_count() + 1;  // kink loop
    const int f = d.edge_count() + 2;  // second half of the split edge

    std::vector<std::array<int, 4>> quads;
    for (const auto& c : d.crossings()) quads.push_back(c.quad);
    const Dart head = d.edge_head(edge);
    quads[dart_crossing(head)][dart_slot(head)] = f;
    if (sign > 0)
        quads.push_back({edge, f, g, g});
    else
        quads.push_back({edge, g, g, f});

    PlanarDiagram out = PlanarDiagram::from_crossings(std::move(quads), d.name());
    if (out.crossings().back().sign != sign) throw std::logic_error("r1_twist: wrong kink sign");
    return out;
}

}  // namespace cuknot
