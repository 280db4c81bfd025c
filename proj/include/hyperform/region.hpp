#pragma once

#include <hyperform/arrangement.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hyperform {

/// Closure of an open cell of a real arrangement, with an orientation
/// relative to dz_1 ^ ... ^ dz_n.
struct Region {
    Arrangement arrangement;
    SignVector signs;
    Point witness;
    int orientation = 1;

    /// Functionals s_j f_j, nonnegative on the region.
    std::vector<LinearFunctional> inward() const;
    Region reversed() const;
};

/// Throws degenerate_input when p lies on a hyperplane.
Region region_from_point(const Arrangement& arr, const Point& p, int orientation = 1);

/// A face of a region: the region intersected with an affine flat, carrying
/// an ordered basis of the flat's direction space and a coefficient.
struct OrientedFace {
    IndexSet generators;          // hyperplanes cut in the order applied
    Flat flat;                    // affine flat with closure
    std::vector<Vector> basis;    // spans flat.direction
    int coefficient = 1;

    int dim() const { return static_cast<int>(basis.size()); }
};

OrientedFace top_face(const Region& r);

/// Options for boundary computations. A seed re-chooses every intermediate
/// basis at random, which must not change any final coefficient.
struct BoundaryOptions {
    std::optional<std::uint64_t> basis_seed;
};

/// Boundary of `face` along H_i with the outward-normal-first orientation,
/// or nullopt when the region meets the new flat in lower dimension.
std::optional<OrientedFace> partial_boundary(const Region& region, const OrientedFace& face, int i,
                                             const BoundaryOptions& options = {});

/// Composes partial boundaries along I, largest index first. The result is
/// the coefficient of the face relative to the canonical basis of H_I (for
/// |I| = n, of the point).
int iterated_boundary(const Region& region, const IndexSet& indices, const BoundaryOptions& options = {});

/// Hyperplanes meeting the region in a face of codimension one.
IndexSet facets(const Region& region);

struct Vertex {
    Point point;
    IndexSet facets;  // facets containing it
};

/// Vertices by brute force over independent n-subsets of facets.
std::vector<Vertex> vertices(const Region& region);

/// (-1)^(n(n+1)/2) sign det(s_i grad f_i, i in I) times the orientation, on a
/// simple vertex cut out by exactly the facets I.
int vertex_sign_shortcut(const Region& region, const IndexSet& indices);

struct CutResult {
    Region positive;  // h >= 0 side
    Region negative;
    Arrangement arrangement;  // with h appended last
};

CutResult cut_region(const Region& region, const LinearFunctional& h, const std::string& name = {});

/// The facet of `region` along H_i as a region of the restricted
/// arrangement, with its induced orientation; nullopt when H_i is not a facet.
std::optional<std::pair<Restriction, Region>> facet_region(const Region& region, int i);

/// A point strictly inside the face relative to every hyperplane not
/// containing its flat, or nullopt when the face is lower dimensional.
std::optional<Point> face_interior_point(const Region& region, const Flat& flat);

}  // namespace hyperform
