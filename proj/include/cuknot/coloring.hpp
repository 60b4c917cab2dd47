#pragma once

#include <cstdint>
#include <vector>

#include "cuknot/exact_linalg.hpp"
#include "cuknot/planar_diagram.hpp"

namespace cuknot {

// Arc labels in Z_p satisfying under1 + under2 = 2*over at each crossing.
struct FoxColoring {
    int64_t p = 0;
    std::vector<int64_t> labels;  // by arc index, reduced mod p

    bool nontrivial() const;
    bool operator==(const FoxColoring& other) const = default;
};

// Orbit of a coloring under the inner automorphisms of the dihedral
// group, which act on labels by l -> e*l + c with e = +-1, c in Z_p.
// The canonical representative has the lowest-numbered arc labeled 0 and
// the first nonzero label in 1..(p-1)/2.
struct ColoringClass {
    FoxColoring canonical;
};

// One row 2*over - under_in - under_out per crossing, columns indexed by
// over-arcs; its GF(p) nullspace is the space of colorings.
IntMatrix coloring_matrix(const PlanarDiagram& d);

// True when the coloring satisfies the crossing condition everywhere.
bool is_valid_coloring(const PlanarDiagram& d, const FoxColoring& col);

// All colorings of d mod p, constants included.
std::vector<FoxColoring> all_colorings(const PlanarDiagram& d, int64_t p);

// Nontrivial colorings partitioned under l -> e*l + c, sorted by
// canonical representative.
std::vector<ColoringClass> coloring_classes(const PlanarDiagram& d, int64_t p);

// Determinant test, cross-checked against the class enumeration; a
// disagreement between the two is an internal error.
bool is_colorable(const PlanarDiagram& d, int64_t p);

// Representative of the class with labels(base_arc) = 0; ties between
// the two orbit transformations achieving this break toward e = +1.
FoxColoring based_representative(const ColoringClass& cl, std::size_t base_arc);

// Coloring of connected_sum(d1, arc1, d2, arc2) restricting to c1 and c2
// after both are based to 0 on the spliced arcs.
FoxColoring sum_coloring(const PlanarDiagram& d1, std::size_t arc1, const FoxColoring& c1,
                         const PlanarDiagram& d2, std::size_t arc2, const FoxColoring& c2,
                         const PlanarDiagram& sum);

}  // namespace cuknot
