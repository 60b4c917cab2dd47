#pragma once

#include <cstdint>
#include <vector>

#include "cuknot/coloring.hpp"
#include "cuknot/goeritz.hpp"
#include "cuknot/planar_diagram.hpp"

namespace cuknot {

// Labels of the white regions R1..Rn induced by a Fox coloring, with the
// infinite region fixed at 0. Entries are the integer lift 0..p-1 and
// satisfy G v = 0 (mod p).
struct ColoringVector {
    int64_t p = 0;
    std::vector<int64_t> entries;
};

struct CuValue {
    int64_t value = 0;  // in 0..p-1
};

// Region labels propagated from R0 := 0 by v(R') = color(arc) - v(R)
// across each edge, restricted to the white regions. Throws logic_error
// if two propagation paths disagree (a non-coloring input).
ColoringVector dehn_vector(const PlanarDiagram& d, const Shading& s, const FoxColoring& col,
                           int r0_face = -1);

// Colored untying invariant of one coloring: cu = v^T G v / p (mod p).
// The integer v^T G v is asserted divisible by p. Trivial colorings are
// rejected with not_colorable_error.
CuValue cu_of_coloring(const PlanarDiagram& d, const Shading& s, const FoxColoring& col,
                       int r0_face = -1);

// cu over every nontrivial coloring class, ascending; empty when the
// knot is not p-colorable.
std::vector<int64_t> cu_set(const PlanarDiagram& d, int64_t p);

// Independent cross-check: enumerates the nonzero vectors of the GF(p)
// nullspace of G up to sign, bypassing Fox colorings entirely, and
// evaluates the same quadratic form. Must equal cu_set.
std::vector<int64_t> oracle_cu_set(const PlanarDiagram& d, int64_t p);

// Negate a cu set: the cu set of the mirror diagram.
std::vector<int64_t> mirrored_cu_set(const std::vector<int64_t>& values, int64_t p);

struct ClassifyEntry {
    FoxColoring canonical;
    int64_t cu = 0;
    // index k in 1..p with cu = cu of the k-fold sum of left-handed
    // (p,2)-torus knots carrying the diagonal coloring, i.e. -k mod p
    int64_t representative_k = 0;
};

// Per-knot surgery-class report. cu separates classes only up to the
// factor-2 ambiguity left open by the 2p upper bound.
struct ClassifyReport {
    int64_t p = 0;
    int64_t determinant = 0;
    bool colorable = false;
    std::vector<ClassifyEntry> classes;
    std::vector<int64_t> cu_values;  // ascending cu set
    IntMatrix goeritz;
};

ClassifyReport classify(const PlanarDiagram& d, int64_t p);

}  // namespace cuknot
