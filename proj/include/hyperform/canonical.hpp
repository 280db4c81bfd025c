#pragma once

#include <hyperform/orlik_solomon.hpp>
#include <hyperform/region.hpp>

namespace hyperform {

/// sum over nbc n-sets I of (iterated boundary along I) w_I.
OSElement canonical_form_nbc(const OrlikSolomon& os, const Region& region, const BoundaryOptions& options = {});

/// -(w_{L1} ^ w_{L2} + ... + w_{Lm} ^ w_{L1}) for sides listed counterclockwise,
/// normalized.
OSElement canonical_form_polygon(const OrlikSolomon& os, const Region& region, const std::vector<int>& ccw_sides);

/// Vertex sum of (-1)^(n(n+1)/2) sign det w_I over simple vertices, normalized.
OSElement canonical_form_simple_polytope(const OrlikSolomon& os, const Region& region);

/// Numerator of a top form over the product of all hyperplane functionals,
/// homogenized to degree N - n - 1 with x0 prepended.
MultiPoly adjoint_polynomial(const Arrangement& arr, const RationalForm& form);

/// Hyperplanes of a then b in the product space, functionals lifted.
Arrangement product_arrangement(const Arrangement& a, const Arrangement& b);

struct ProductResult {
    Arrangement arrangement;
    OSElement element;
};

/// (-1)^(pq) x ^ y on the product arrangement, normalized.
ProductResult product_form(const Arrangement& a, const OSElement& x, const Arrangement& b, const OSElement& y);

}  // namespace hyperform
