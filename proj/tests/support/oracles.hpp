#pragma once

#include <cstdint>
#include <vector>

#include "cuknot/exact_linalg.hpp"
#include "cuknot/planar_diagram.hpp"

// Independent verification routes for the main pipeline. These stay
// deliberately naive: cofactor expansion instead of Bareiss, exhaustive
// labelings instead of nullspace enumeration.
namespace cuknot::testsupport {

// Recursive cofactor expansion; fine for n <= 7.
int64_t det_cofactor(const IntMatrix& m);

// Number of arc labelings (trivial included) satisfying the crossing
// condition, found by trying all p^arcs of them.
int64_t brute_force_coloring_count(const PlanarDiagram& d, int64_t p);

// Over/under passes alternate along the strand.
bool is_alternating(const PlanarDiagram& d);

// No crossing has the same face at two opposite corners.
bool is_reduced(const PlanarDiagram& d);

// Exists a permutation P with P A P^T = B. Brute force, n <= 8.
bool permutation_congruent(const IntMatrix& a, const IntMatrix& b);

}  // namespace cuknot::testsupport
