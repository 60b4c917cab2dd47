#include "cuknot/goeritz.hpp"

#include <cstdlib>

namespace cuknot {

namespace {

// Global incidence sign, calibrated so that the left-handed (7,2)-torus
// knot yields the 1x1 Goeritz matrix (-7).
constexpr int kIncidenceSign = 1;

}  // namespace

Shading shade(const PlanarDiagram& d, ShadingVariant variant) {
    const auto& faces = d.faces();
    const int nf = static_cast<int>(faces.size());

    std::vector<int> color(nf, -1);
    // the face left of edge 1 seeds the coloring
    const int seed = d.face_of_dart(d.edge_tail(1));
    color[seed] = (variant == ShadingVariant::Primary) ? 1 : 0;  // 1 = white

    std::vector<int> queue{seed};
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (Dart dart : faces[f].corners) {
            int g = d.face_of_dart(d.opposite(dart));
            if (color[g] < 0) {
                color[g] = 1 - color[f];
                queue.push_back(g);
            } else if (color[g] == color[f]) {
                throw std::logic_error("shade: faces admit no proper 2-coloring");
            }
        }
    }
    for (int f = 0; f < nf; ++f)
        if (color[f] < 0) throw std::logic_error("shade: face graph is disconnected");

    Shading s;
    s.color.resize(nf);
    for (int f = 0; f < nf; ++f)
        s.color[f] = color[f] ? FaceColor::White : FaceColor::Black;
    for (int f = 0; f < nf; ++f) {
        if (s.color[f] != FaceColor::White) continue;
        if (s.infinite_region < 0)
            s.infinite_region = f;
        else
            s.white_order.push_back(f);
    }
    if (s.infinite_region < 0) throw std::logic_error("shade: no white face");
    return s;
}

int incidence(const PlanarDiagram& d, const Shading& s, int crossing) {
    // corner k sits between slots k and k+1; opposite corners share a
    // color, so the corner between the incoming under edge and the
    // first over slot decides the local type
    const bool corner0_black = s.color[d.corner_face(crossing, 0)] == FaceColor::Black;
    const bool corner1_black = s.color[d.corner_face(crossing, 1)] == FaceColor::Black;
    if (corner0_black == corner1_black)
        throw std::logic_error("incidence: shading is not checkerboard at crossing");
    return corner0_black ? kIncidenceSign : -kIncidenceSign;
}

GoeritzData pre_goeritz(const PlanarDiagram& d, const Shading& s) {
    std::vector<int> whites;
    whites.push_back(s.infinite_region);
    whites.insert(whites.end(), s.white_order.begin(), s.white_order.end());

    std::vector<int> index_of_face(d.faces().size(), -1);
    for (std::size_t i = 0; i < whites.size(); ++i) index_of_face[whites[i]] = static_cast<int>(i);

    const std::size_t m = whites.size();
    IntMatrix pre(m, m);
    for (int c = 0; c < d.crossing_count(); ++c) {
        // the two white corners at a crossing are opposite
        int slot = s.color[d.corner_face(c, 0)] == FaceColor::White ? 0 : 1;
        int fa = d.corner_face(c, slot);
        int fb = d.corner_face(c, slot + 2);
        int i = index_of_face[fa], j = index_of_face[fb];
        if (i < 0 || j < 0) throw std::logic_error("pre_goeritz: white corner not indexed");
        if (i == j) continue;  // self-incident crossings contribute nothing
        int64_t iota = incidence(d, s, c);
        pre.at(i, j) = checked_add(pre.at(i, j), iota);
        pre.at(j, i) = checked_add(pre.at(j, i), iota);
    }
    for (std::size_t i = 0; i < m; ++i) {
        int64_t row = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) row = checked_add(row, pre.at(i, j));
        pre.at(i, i) = checked_sub(0, row);
    }

    GoeritzData gd;
    gd.pre = std::move(pre);
    gd.white_faces = std::move(whites);
    gd.g = goeritz(gd, gd.white_faces[0]);
    return gd;
}

IntMatrix goeritz(const GoeritzData& gd, int r0_face) {
    std::size_t drop = gd.white_faces.size();
    for (std::size_t i = 0; i < gd.white_faces.size(); ++i)
        if (gd.white_faces[i] == r0_face) drop = i;
    if (drop == gd.white_faces.size())
        throw std::invalid_argument("goeritz: infinite region must be a white face");

    const std::size_t m = gd.white_faces.size();
    IntMatrix g(m - 1, m - 1);
    for (std::size_t i = 0, gi = 0; i < m; ++i) {
        if (i == drop) continue;
        for (std::size_t j = 0, gj = 0; j < m; ++j) {
            if (j == drop) continue;
            g.at(gi, gj) = gd.pre.at(i, j);
            ++gj;
        }
        ++gi;
    }
    return g;
}

int64_t knot_determinant(const PlanarDiagram& d) {
    GoeritzData gd = pre_goeritz(d, shade(d, ShadingVariant::Primary));
    return std::llabs(det_exact(gd.g));
}

}  // namespace cuknot
