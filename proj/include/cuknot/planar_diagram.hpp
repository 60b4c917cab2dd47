#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cuknot/errors.hpp"

namespace cuknot {

// A dart is one of the four edge-ends at a crossing: 4 * crossing + slot.
using Dart = int;

inline int dart_crossing(Dart d) { return d / 4; }
inline int dart_slot(Dart d) { return d % 4; }

// One PD quadruple (e0,e1,e2,e3): e0 is the incoming under-strand edge,
// the rest follow counterclockwise, so e2 is the outgoing under edge and
// e1, e3 carry the over strand. `sign` is derived from the strand
// orientation (+1 when the over strand enters at slot 3).
struct Crossing {
    std::array<int, 4> quad{};
    int sign = 0;

    bool operator==(const Crossing& other) const { return quad == other.quad; }
};

// A face of the underlying 4-valent plane graph, listed as the cyclic
// sequence of darts whose left side it forms; dart (c,s) stands for the
// corner between slots s and s+1 of crossing c.
struct Face {
    std::vector<Dart> corners;
};

// Maximal over-strand: the unit that carries one Fox color.
struct OverArc {
    std::vector<int> edges;  // ascending
};

// Validated combinatorial knot diagram. Immutable after construction;
// faces, arcs, orientation and crossing signs are derived eagerly.
class PlanarDiagram {
public:
    static PlanarDiagram from_crossings(std::vector<std::array<int, 4>> quads,
                                        std::string name = "");

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return edge_count_; }
    const std::string& name() const { return name_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<OverArc>& over_arcs() const { return arcs_; }

    int arc_of_edge(int edge) const { return arc_of_edge_[edge]; }

    // Face index at the corner between slots `slot` and `slot`+1.
    int corner_face(int crossing, int slot) const { return face_of_dart_[4 * crossing + slot]; }
    int face_of_dart(Dart d) const { return face_of_dart_[d]; }

    // Edge-end (c,slot) where the oriented edge starts / terminates.
    Dart edge_tail(int edge) const { return edge_tail_[edge]; }
    Dart edge_head(int edge) const { return edge_head_[edge]; }
    int edge_at(Dart d) const { return crossings_[dart_crossing(d)].quad[dart_slot(d)]; }

    // The other end of the edge occupying dart d.
    Dart opposite(Dart d) const { return opposite_[d]; }

    int writhe() const;

    PlanarDiagram renamed(std::string name) const;

    // Structural equality: identical quadruples in identical order.
    bool operator==(const PlanarDiagram& other) const { return crossings_ == other.crossings_; }

private:
    PlanarDiagram() = default;
    void validate_edges();
    void trace_strand();
    void trace_faces();
    void extract_arcs();

    std::vector<Crossing> crossings_;
    int edge_count_ = 0;
    std::string name_;

    std::vector<Face> faces_;
    std::vector<OverArc> arcs_;
    std::vector<int> arc_of_edge_;   // 1-based by edge id
    std::vector<int> face_of_dart_;  // by dart id
    std::vector<Dart> opposite_;     // by dart id
    std::vector<Dart> edge_tail_;    // 1-based
    std::vector<Dart> edge_head_;    // 1-based
};

// Parse PD notation: comma/whitespace separated X(a,b,c,d) or X[a,b,c,d]
// terms, optionally wrapped in PD[...]. Throws parse_error on malformed
// text and validation_error on structurally invalid diagrams.
PlanarDiagram parse_pd(std::string_view text, std::string name = "");

// Canonical inverse of parse_pd: X(a,b,c,d) terms joined by commas.
std::string serialize_pd(const PlanarDiagram& d);

// Mirror image: over and under strands swap at every crossing; the
// underlying plane graph is unchanged.
PlanarDiagram mirror(const PlanarDiagram& d);

// Splice the two diagrams into their connected sum at the first edge of
// each chosen over-arc.
PlanarDiagram connected_sum(const PlanarDiagram& d1, std::size_t arc1,
                            const PlanarDiagram& d2, std::size_t arc2);

enum class Handedness { Left, Right };

Handedness opposite(Handedness h);

// The (p,2)-torus knot as a 2-strand twist region closed by two arcs,
// so one checkerboard shading has exactly two white regions. Left is
// the variant whose crossings all have derived sign -1.
PlanarDiagram torus_knot(int p, Handedness hand);

// Reidemeister-I kink on the given edge; `sign` (+1/-1) is the derived
// sign of the new crossing.
PlanarDiagram r1_twist(const PlanarDiagram& d, int edge, int sign);

}  // namespace cuknot
