#pragma once

#include <cstdint>
#include <vector>

#include "cuknot/exact_linalg.hpp"
#include "cuknot/planar_diagram.hpp"

namespace cuknot {

enum class FaceColor { Black, White };

enum class ShadingVariant { Primary, Complement };

// Checkerboard 2-coloring of the faces. The infinite region R0 is a
// distinguished white face; the remaining white faces are numbered
// R1..Rn in face order.
struct Shading {
    std::vector<FaceColor> color;  // by face index
    int infinite_region = -1;      // face index of R0
    std::vector<int> white_order;  // face indices of R1..Rn

    bool is_white(int face) const { return color[face] == FaceColor::White; }
    std::size_t white_count() const { return white_order.size() + 1; }
};

// Proper 2-coloring of the faces. Primary paints the face left of edge 1
// white; Complement swaps the colors. R0 defaults to the first white
// face in face order.
Shading shade(const PlanarDiagram& d, ShadingVariant variant);

// Incidence number of a crossing: +1 or -1 by which pair of opposite
// corners is shaded, relative to the over strand. The global sign is
// fixed once by calibration against G((7,2)-torus, Left) = (-7).
int incidence(const PlanarDiagram& d, const Shading& s, int crossing);

// Pre-Goeritz matrix over all white faces (R0 first, then R1..Rn) and
// the Goeritz matrix G obtained by deleting R0's row and column.
struct GoeritzData {
    IntMatrix pre;                 // (n+1) x (n+1), zero row/column sums
    std::vector<int> white_faces;  // face index per pre row; [0] is R0
    IntMatrix g;                   // n x n, R0 deleted
};

GoeritzData pre_goeritz(const PlanarDiagram& d, const Shading& s);

// Goeritz matrix for an alternative infinite region (any white face).
IntMatrix goeritz(const GoeritzData& gd, int r0_face);

// |det G|; independent of shading variant, infinite region and mirror.
int64_t knot_determinant(const PlanarDiagram& d);

}  // namespace cuknot
