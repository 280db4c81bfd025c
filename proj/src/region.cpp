#include <hyperform/error.hpp>
#include <hyperform/lp.hpp>
#include <hyperform/region.hpp>

#include <algorithm>
#include <random>

namespace hyperform {

std::vector<LinearFunctional> Region::inward() const {
    std::vector<LinearFunctional> out;
    for (int j = 0; j < arrangement.size(); ++j) out.push_back(arrangement[j] * Rational(signs[j]));
    return out;
}

Region Region::reversed() const {
    Region r = *this;
    r.orientation = -r.orientation;
    return r;
}

Region region_from_point(const Arrangement& arr, const Point& p, int orientation) {
    if (static_cast<int>(p.size()) != arr.dim())
        fail(ErrorKind::dimension, "region point has " + std::to_string(p.size()) + " coordinates, expected " +
                                       std::to_string(arr.dim()));
    if (orientation != 1 && orientation != -1) fail(ErrorKind::validation, "orientation must be 1 or -1");
    SignVector s;
    for (int j = 0; j < arr.size(); ++j) {
        int v = sign(arr[j](p));
        if (v == 0) fail(ErrorKind::degenerate_input, "region point lies on hyperplane " + std::to_string(j + 1));
        s.push_back(v);
    }
    return {arr, s, p, orientation};
}

OrientedFace top_face(const Region& r) {
    OrientedFace f;
    f.flat = affine_flat(r.arrangement, {});
    f.basis = f.flat.direction;
    f.coefficient = r.orientation;
    return f;
}

std::optional<Point> face_interior_point(const Region& region, const Flat& flat) {
    if (!flat.basepoint) return std::nullopt;
    const Point& b = *flat.basepoint;
    int k = static_cast<int>(flat.direction.size());
    std::vector<LinearFunctional> cons;
    for (int j = 0; j < region.arrangement.size(); ++j) {
        if (std::binary_search(flat.closure.begin(), flat.closure.end(), j)) continue;
        LinearFunctional f = region.arrangement[j] * Rational(region.signs[j]);
        Vector g;
        for (const auto& d : flat.direction) g.push_back(dot(f.gradient(), d));
        cons.emplace_back(f(b), g);
    }
    if (k == 0) {
        for (const auto& c : cons)
            if (c.constant() <= 0) return std::nullopt;
        return b;
    }
    auto t = strict_interior_point(cons, k);
    if (!t) return std::nullopt;
    Point x = b;
    for (int m = 0; m < k; ++m)
        for (std::size_t c = 0; c < x.size(); ++c) x[c] += (*t)[m] * flat.direction[m][c];
    return x;
}

namespace {

int det_sign_in(const std::vector<Vector>& frame, const std::vector<Vector>& basis) {
    std::size_t k = basis.size();
    if (frame.size() != k) fail(ErrorKind::internal, "frame and basis sizes differ");
    if (k == 0) return 1;
    ExactMatrix m(k, k);
    for (std::size_t c = 0; c < k; ++c) {
        auto co = coordinates_in(basis, frame[c]);
        if (!co) fail(ErrorKind::internal, "frame vector outside the face direction");
        for (std::size_t r = 0; r < k; ++r) m(r, c) = (*co)[r];
    }
    int s = sign(determinant(m));
    if (s == 0) fail(ErrorKind::internal, "degenerate orientation frame");
    return s;
}

std::vector<Vector> rechoose(const std::vector<Vector>& basis, std::uint64_t seed, const IndexSet& key) {
    std::size_t k = basis.size();
    if (k == 0) return basis;
    std::uint64_t h = seed;
    for (int i : key) h = h * 1000003u + static_cast<std::uint64_t>(i + 1);
    std::mt19937_64 rng(h);
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        ExactMatrix m(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) m(r, c) = d(rng);
        if (determinant(m) == 0) continue;
        std::vector<Vector> out(k, Vector(basis[0].size(), Rational(0)));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t x = 0; x < basis[0].size(); ++x) out[r][x] += m(r, c) * basis[c][x];
        return out;
    }
}

}  // namespace

std::optional<OrientedFace> partial_boundary(const Region& region, const OrientedFace& face, int i,
                                             const BoundaryOptions& options) {
    const Arrangement& arr = region.arrangement;
    if (i < 0 || i >= arr.size()) fail(ErrorKind::validation, "hyperplane index out of range");
    if (std::binary_search(face.flat.closure.begin(), face.flat.closure.end(), i))
        fail(ErrorKind::invalid_hyperplane, "hyperplane " + std::to_string(i + 1) + " contains the face");
    IndexSet gens = face.generators;
    gens.push_back(i);
    IndexSet sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    Flat g = affine_flat(arr, sorted);
    if (!g.basepoint) return std::nullopt;
    if (static_cast<int>(g.direction.size()) != face.dim() - 1) fail(ErrorKind::internal, "boundary flat has wrong dimension");
    if (!face_interior_point(region, g)) return std::nullopt;

    Vector normal = arr[i].gradient();
    for (auto& v : normal) v *= region.signs[i];
    Vector outward;
    for (const auto& b : face.basis) {
        int s = sign(dot(normal, b));
        if (s == 0) continue;
        outward = b;
        for (auto& v : outward) v *= -s;
        break;
    }
    if (outward.empty()) fail(ErrorKind::internal, "no outward direction in the face");

    OrientedFace out;
    out.generators = gens;
    out.flat = g;
    out.basis = options.basis_seed ? rechoose(g.direction, *options.basis_seed, sorted) : g.direction;
    std::vector<Vector> frame{outward};
    frame.insert(frame.end(), out.basis.begin(), out.basis.end());
    out.coefficient = face.coefficient * det_sign_in(frame, face.basis);
    return out;
}

int iterated_boundary(const Region& region, const IndexSet& indices, const BoundaryOptions& options) {
    const Arrangement& arr = region.arrangement;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 0 || indices[k] >= arr.size()) fail(ErrorKind::validation, "hyperplane index out of range");
        if (k && indices[k] <= indices[k - 1]) fail(ErrorKind::validation, "index set must be strictly increasing");
    }
    Flat target = affine_flat(arr, indices);
    if (!target.basepoint || target.codim != static_cast<int>(indices.size()))
        fail(ErrorKind::precondition, "hyperplanes " + format_index_set(indices) +
                                          " are dependent or do not meet in the chart");
    OrientedFace face = top_face(region);
    if (options.basis_seed) face.basis = rechoose(face.basis, *options.basis_seed, {});
    face.coefficient = region.orientation * det_sign_in(face.basis, top_face(region).basis);
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
        auto next = partial_boundary(region, face, *it, options);
        if (!next) return 0;
        face = std::move(*next);
    }
    // express relative to the canonical basis of the final flat
    return face.coefficient * det_sign_in(face.basis, target.direction);
}

IndexSet facets(const Region& region) {
    IndexSet out;
    for (int j = 0; j < region.arrangement.size(); ++j)
        if (face_interior_point(region, affine_flat(region.arrangement, {j}))) out.push_back(j);
    return out;
}

std::vector<Vertex> vertices(const Region& region) {
    const Arrangement& arr = region.arrangement;
    int n = arr.dim();
    IndexSet fs = facets(region);
    auto inward = region.inward();
    std::vector<Vertex> out;
    std::vector<bool> mask(fs.size(), false);
    if (static_cast<int>(fs.size()) < n) return out;
    std::fill(mask.begin(), mask.begin() + n, true);
    do {
        IndexSet s;
        for (std::size_t k = 0; k < fs.size(); ++k)
            if (mask[k]) s.push_back(fs[k]);
        Flat f = affine_flat(arr, s);
        if (!f.basepoint || f.codim != n) continue;
        const Point& v = *f.basepoint;
        bool feasible = std::all_of(inward.begin(), inward.end(), [&](const LinearFunctional& h) { return h(v) >= 0; });
        if (!feasible) continue;
        if (std::any_of(out.begin(), out.end(), [&](const Vertex& w) { return w.point == v; })) continue;
        Vertex vx{v, {}};
        for (int j : fs)
            if (arr[j](v) == 0) vx.facets.push_back(j);
        out.push_back(std::move(vx));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(out.begin(), out.end(), [](const Vertex& a, const Vertex& b) { return a.facets < b.facets; });
    return out;
}

int vertex_sign_shortcut(const Region& region, const IndexSet& indices) {
    const Arrangement& arr = region.arrangement;
    int n = arr.dim();
    if (static_cast<int>(indices.size()) != n) fail(ErrorKind::precondition, "a vertex needs exactly n hyperplanes");
    Flat f = affine_flat(arr, indices);
    if (!f.basepoint || f.codim != n)
        fail(ErrorKind::precondition, "hyperplanes " + format_index_set(indices) + " do not meet in a point");
    const Point& v = *f.basepoint;
    for (const auto& h : region.inward())
        if (h(v) < 0) fail(ErrorKind::precondition, "point " + format_index_set(indices) + " is not in the region");
    IndexSet at;
    for (int j : facets(region))
        if (arr[j](v) == 0) at.push_back(j);
    if (at != indices)
        fail(ErrorKind::precondition, "vertex " + format_index_set(indices) + " is not simple: facets " + format_index_set(at) +
                                          " meet there");
    ExactMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = arr[indices[r]].gradient()[c] * region.signs[indices[r]];
    int s = sign(determinant(m));
    int base = (n * (n + 1) / 2) % 2 == 0 ? 1 : -1;
    return base * s * region.orientation;
}

CutResult cut_region(const Region& region, const LinearFunctional& h, const std::string& name) {
    auto inward = region.inward();
    auto plus = inward, minus = inward;
    plus.push_back(h);
    minus.push_back(-h);
    int n = region.arrangement.dim();
    auto wp = strict_interior_point(plus, n), wm = strict_interior_point(minus, n);
    if (!wp || !wm) fail(ErrorKind::no_cut, "the cutting hyperplane misses the region's interior");
    Arrangement ext = region.arrangement.extended(h, name);
    SignVector sp = region.signs, sm = region.signs;
    sp.push_back(1);
    sm.push_back(-1);
    return {Region{ext, sp, *wp, region.orientation}, Region{ext, sm, *wm, region.orientation}, ext};
}

std::optional<std::pair<Restriction, Region>> facet_region(const Region& region, int i) {
    auto face = partial_boundary(region, top_face(region), i);
    if (!face) return std::nullopt;
    auto x = face_interior_point(region, face->flat);
    if (!x) fail(ErrorKind::internal, "facet without interior point");
    Restriction r = restriction(region.arrangement, i);
    int orientation = face->coefficient * det_sign_in(face->basis, r.basis);
    Region out = region_from_point(r.arrangement, r.to_chart(*x), orientation);
    return std::make_pair(std::move(r), std::move(out));
}

}  // namespace hyperform
