#include "cuknot/cu_invariant.hpp"

#include <set>

namespace cuknot {

ColoringVector dehn_vector(const PlanarDiagram& d, const Shading& s, const FoxColoring& col,
                           int r0_face) {
    if (!is_valid_coloring(d, col))
        throw std::invalid_argument("dehn_vector: not a coloring of this diagram");
    if (r0_face < 0) r0_face = s.infinite_region;
    if (!s.is_white(r0_face))
        throw std::invalid_argument("dehn_vector: infinite region must be white");

    const int64_t p = col.p;
    const auto& faces = d.faces();
    std::vector<int64_t> v(faces.size(), -1);
    v[r0_face] = 0;

    std::vector<int> queue{r0_face};
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (Dart dart : faces[f].corners) {
            int g = d.face_of_dart(d.opposite(dart));
            int64_t lambda = col.labels[d.arc_of_edge(d.edge_at(dart))];
            int64_t want = mod_p(lambda - v[f], p);
            if (v[g] < 0) {
                v[g] = want;
                queue.push_back(g);
            } else if (v[g] != want) {
                throw std::logic_error("dehn_vector: propagation paths disagree");
            }
        }
    }

    // restrict to the white regions other than r0, in numbering order
    ColoringVector out{p, {}};
    for (int f : s.white_order)
        if (f != r0_face) out.entries.push_back(v[f]);
    if (r0_face != s.infinite_region) out.entries.insert(out.entries.begin(), v[s.infinite_region]);

    GoeritzData gd = pre_goeritz(d, s);
    IntMatrix g = goeritz(gd, r0_face);
    for (int64_t r : mul_modp(g, out.entries, p))
        if (r != 0) throw std::logic_error("dehn_vector: G v != 0 mod p");
    return out;
}

CuValue cu_of_coloring(const PlanarDiagram& d, const Shading& s, const FoxColoring& col,
                       int r0_face) {
    if (!col.nontrivial())
        throw not_colorable_error("cu is defined only for nontrivial colorings");
    if (r0_face < 0) r0_face = s.infinite_region;

    const ColoringVector v = dehn_vector(d, s, col, r0_face);
    GoeritzData gd = pre_goeritz(d, s);
    IntMatrix g = goeritz(gd, r0_face);

    const int64_t form = quadratic_form(g, v.entries);
    if (mod_p(form, v.p) != 0) throw std::logic_error("cu: v^T G v is not divisible by p");
    return CuValue{mod_p(form / v.p, v.p)};
}

std::vector<int64_t> cu_set(const PlanarDiagram& d, int64_t p) {
    const Shading s = shade(d, ShadingVariant::Primary);
    std::set<int64_t> values;
    for (const ColoringClass& cl : coloring_classes(d, p))
        values.insert(cu_of_coloring(d, s, cl.canonical).value);
    return {values.begin(), values.end()};
}

std::vector<int64_t> oracle_cu_set(const PlanarDiagram& d, int64_t p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("oracle_cu_set: p must be an odd prime");
    const Shading s = shade(d, ShadingVariant::Primary);
    const GoeritzData gd = pre_goeritz(d, s);
    const IntMatrix& g = gd.g;
    const auto basis = nullspace_modp(g, p);
    const std::size_t dim = basis.size();
    const std::size_t n = g.rows();

    std::set<int64_t> values;
    std::vector<int64_t> coeff(dim, 0);
    while (true) {
        std::size_t k = 0;
        while (k < dim && ++coeff[k] == p) coeff[k++] = 0;
        if (k == dim) break;

        std::vector<int64_t> v(n, 0);
        for (std::size_t b = 0; b < dim; ++b) {
            if (coeff[b] == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                v[i] = mod_p(v[i] + coeff[b] * basis[b].entries[i], p);
        }
        // v and -v give the same class; the quadratic form does not care
        int64_t form = quadratic_form(g, v);
        if (mod_p(form, p) != 0) throw std::logic_error("oracle: v^T G v not divisible by p");
        values.insert(mod_p(form / p, p));
    }
    return {values.begin(), values.end()};
}

std::vector<int64_t> mirrored_cu_set(const std::vector<int64_t>& values, int64_t p) {
    std::set<int64_t> out;
    for (int64_t v : values) out.insert(mod_p(-v, p));
    return {out.begin(), out.end()};
}

ClassifyReport classify(const PlanarDiagram& d, int64_t p) {
    ClassifyReport r;
    r.p = p;
    r.determinant = knot_determinant(d);
    const Shading s = shade(d, ShadingVariant::Primary);
    r.goeritz = pre_goeritz(d, s).g;

    std::set<int64_t> values;
    for (const ColoringClass& cl : coloring_classes(d, p)) {
        ClassifyEntry e;
        e.canonical = cl.canonical;
        e.cu = cu_of_coloring(d, s, cl.canonical).value;
        e.representative_k = e.cu == 0 ? p : p - e.cu;  // -k = cu mod p
        values.insert(e.cu);
        r.classes.push_back(std::move(e));
    }
    r.cu_values.assign(values.begin(), values.end());
    r.colorable = is_colorable(d, p);
    if (r.colorable != !r.classes.empty())
        throw std::logic_error("classify: colorability flag inconsistent with classes");
    return r;
}

}  // namespace cuknot
