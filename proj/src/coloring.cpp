#include "cuknot/coloring.hpp"

#include <algorithm>
#include <set>

#include "cuknot/goeritz.hpp"

namespace cuknot {

bool FoxColoring::nontrivial() const {
    for (int64_t l : labels)
        if (l != labels.front()) return true;
    return false;
}

IntMatrix coloring_matrix(const PlanarDiagram& d) {
    const int n = d.crossing_count();
    IntMatrix m(n, n);
    for (int c = 0; c < n; ++c) {
        const auto& q = d.crossings()[c].quad;
        const int over = d.arc_of_edge(q[1]);
        const int under_in = d.arc_of_edge(q[0]);
        const int under_out = d.arc_of_edge(q[2]);
        m.at(c, over) = checked_add(m.at(c, over), 2);
        m.at(c, under_in) = checked_sub(m.at(c, under_in), 1);
        m.at(c, under_out) = checked_sub(m.at(c, under_out), 1);
    }
    return m;
}

bool is_valid_coloring(const PlanarDiagram& d, const FoxColoring& col) {
    if (col.labels.size() != d.over_arcs().size()) return false;
    for (const auto& c : d.crossings()) {
        int64_t over = col.labels[d.arc_of_edge(c.quad[1])];
        int64_t u1 = col.labels[d.arc_of_edge(c.quad[0])];
        int64_t u2 = col.labels[d.arc_of_edge(c.quad[2])];
        if (mod_p(2 * over - u1 - u2, col.p) != 0) return false;
    }
    return true;
}

std::vector<FoxColoring> all_colorings(const PlanarDiagram& d, int64_t p) {
    const auto basis = nullspace_modp(coloring_matrix(d), p);
    const std::size_t dim = basis.size();
    const std::size_t arcs = d.over_arcs().size();

    std::vector<FoxColoring> out;
    std::vector<int64_t> coeff(dim, 0);
    while (true) {
        FoxColoring col{p, std::vector<int64_t>(arcs, 0)};
        for (std::size_t b = 0; b < dim; ++b) {
            if (coeff[b] == 0) continue;
            for (std::size_t a = 0; a < arcs; ++a)
                col.labels[a] = mod_p(col.labels[a] + coeff[b] * basis[b].entries[a], p);
        }
        out.push_back(std::move(col));

        std::size_t k = 0;
        while (k < dim && ++coeff[k] == p) coeff[k++] = 0;
        if (k == dim) break;
    }
    return out;
}

namespace {

FoxColoring orbit_canonical(const FoxColoring& col) {
    const int64_t p = col.p;
    FoxColoring best = col;
    bool have = false;
    for (int64_t eps : {1, -1}) {
        for (int64_t c = 0; c < p; ++c) {
            FoxColoring cand{p, col.labels};
            for (int64_t& l : cand.labels) l = mod_p(eps * l + c, p);
            if (!have || cand.labels < best.labels) {
                best = std::move(cand);
                have = true;
            }
        }
    }
    return best;
}

}  // namespace

std::vector<ColoringClass> coloring_classes(const PlanarDiagram& d, int64_t p) {
    std::set<std::vector<int64_t>> seen;
    std::vector<ColoringClass> classes;
    for (const FoxColoring& col : all_colorings(d, p)) {
        if (!col.nontrivial()) continue;
        FoxColoring canon = orbit_canonical(col);
        if (seen.insert(canon.labels).second) classes.push_back(ColoringClass{std::move(canon)});
    }
    std::sort(classes.begin(), classes.end(), [](const ColoringClass& a, const ColoringClass& b) {
        return a.canonical.labels < b.canonical.labels;
    });
    return classes;
}

bool is_colorable(const PlanarDiagram& d, int64_t p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("is_colorable: p must be an odd prime");
    const bool by_det = knot_determinant(d) % p == 0;
    const bool by_classes = !coloring_classes(d, p).empty();
    if (by_det != by_classes)
        throw std::logic_error("is_colorable: determinant test disagrees with enumeration");
    return by_det;
}

FoxColoring based_representative(const ColoringClass& cl, std::size_t base_arc) {
    const FoxColoring& c = cl.canonical;
    if (base_arc >= c.labels.size())
        throw std::invalid_argument("based_representative: arc index out of range");
    FoxColoring out{c.p, c.labels};
    const int64_t shift = c.labels[base_arc];  // eps = +1, c = -labels(base)
    for (int64_t& l : out.labels) l = mod_p(l - shift, c.p);
    return out;
}

FoxColoring sum_coloring(const PlanarDiagram& d1, std::size_t arc1, const FoxColoring& c1,
                         const PlanarDiagram& d2, std::size_t arc2, const FoxColoring& c2,
                         const PlanarDiagram& sum) {
    if (c1.p != c2.p) throw std::invalid_argument("sum_coloring: moduli differ");
    const FoxColoring b1 = based_representative(ColoringClass{c1}, arc1);
    const FoxColoring b2 = based_representative(ColoringClass{c2}, arc2);

    const int offset = d1.edge_count();
    FoxColoring out{c1.p, std::vector<int64_t>(sum.over_arcs().size(), -1)};
    for (std::size_t a = 0; a < sum.over_arcs().size(); ++a) {
        for (int e : sum.over_arcs()[a].edges) {
            int64_t label = e <= offset ? b1.labels[d1.arc_of_edge(e)]
                                        : b2.labels[d2.arc_of_edge(e - offset)];
            if (out.labels[a] >= 0 && out.labels[a] != label)
                throw std::logic_error("sum_coloring: factors disagree on a spliced arc");
            out.labels[a] = label;
        }
    }
    if (!is_valid_coloring(sum, out))
        throw std::logic_error("sum_coloring: result violates the crossing condition");
    return out;
}

}  // namespace cuknot
