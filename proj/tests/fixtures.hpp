#pragma once

#include <hyperform/arrangement.hpp>
#include <hyperform/error.hpp>
#include <hyperform/lp.hpp>

#include <random>

namespace fixtures {

using namespace hyperform;

inline Rational q(const char* s) { return parse_rational(s); }
inline LinearFunctional lf(Rational c, Vector g) { return {std::move(c), std::move(g)}; }

// Five planes of the square pyramid with apex at the origin and base z = -1.
// Every functional is positive at (0,0,-1/2).
inline Arrangement pyramid() {
    return Arrangement(3, {lf(0, {1, 0, -1}), lf(0, {0, 1, -1}), lf(0, {-1, 0, -1}), lf(0, {0, -1, -1}), lf(1, {0, 0, 1})},
                       Infinity::generic(), {}, {"x", "y", "z"});
}
inline Point pyramid_point() { return {0, 0, q("-1/2")}; }

// x >= 0, y >= 0, 1 - x - y >= 0
inline Arrangement unit_triangle() {
    return Arrangement(2, {lf(0, {1, 0}), lf(0, {0, 1}), lf(1, {-1, -1})}, Infinity::generic(), {}, {"x", "y"});
}

// [0,1]^n with hyperplanes z1, 1-z1, z2, 1-z2, ...
inline Arrangement cube(int n) {
    std::vector<LinearFunctional> hs;
    for (int i = 0; i < n; ++i) {
        Vector g(n, Rational(0));
        g[i] = 1;
        hs.push_back(lf(0, g));
        g[i] = -1;
        hs.push_back(lf(1, g));
    }
    return Arrangement(n, hs);
}
inline Point cube_point(int n) { return Point(n, q("1/2")); }

// 0 <= z1 <= z2 <= ... <= zn <= 1 with hyperplanes z1, z2-z1, ..., 1-zn.
inline Arrangement ordered_simplex(int n) {
    std::vector<LinearFunctional> hs;
    for (int i = 0; i <= n; ++i) {
        Vector g(n, Rational(0));
        if (i < n) g[i] = 1;
        if (i > 0) g[i - 1] = -1;
        hs.push_back(lf(i == n ? 1 : 0, g));
    }
    return Arrangement(n, hs);
}
inline Point ordered_simplex_point(int n) {
    Point p;
    for (int i = 1; i <= n; ++i) p.push_back(Rational(i, n + 1));
    return p;
}

// Coordinate quadrant z_i >= 0.
inline Arrangement quadrant(int n) {
    std::vector<LinearFunctional> hs;
    for (int i = 0; i < n; ++i) {
        Vector g(n, Rational(0));
        g[i] = 1;
        hs.push_back(lf(0, g));
    }
    return Arrangement(n, hs);
}

// L1: y = 1 + 17x/10, L2: x = 0, L3: y = 1 - x, L4: y = 0. The triangle is
// bounded by L2, L3, L4 on the right of the y axis.
inline Arrangement four_lines() {
    return Arrangement(2, {lf(1, {q("17/10"), -1}), lf(0, {1, 0}), lf(1, {-1, -1}), lf(0, {0, 1})}, Infinity::generic(), {},
                       {"x", "y"});
}
inline Point four_lines_point() { return {q("1/4"), q("1/4")}; }

// y = 0, y = 1 - x (the dashed line, index 1), y = 1 + 17x/10, y = 1/2 - x/4, x = 0.
inline Arrangement five_lines() {
    return Arrangement(2, {lf(0, {0, 1}), lf(1, {-1, -1}), lf(1, {q("17/10"), -1}), lf(q("1/2"), {q("-1/4"), -1}), lf(0, {1, 0})},
                       Infinity::generic(), {}, {"x", "y"});
}

// d affine hyperplanes in general position with the standard infinity generic.
inline Arrangement random_generic(std::mt19937& rng, int n, int d) {
    std::uniform_int_distribution<int> coef(-6, 6);
    for (;;) {
        std::vector<LinearFunctional> hs;
        for (int i = 0; i < d; ++i) {
            Vector g(n);
            for (auto& v : g) v = coef(rng);
            hs.push_back(lf(coef(rng), g));
        }
        std::vector<Vector> vecs;
        for (const auto& h : hs) vecs.push_back(h.homogeneous());
        Vector inf(n + 1, Rational(0));
        inf[0] = 1;
        vecs.push_back(inf);
        // every (n+1)-subset of the d+1 homogeneous vectors must be independent
        bool ok = true;
        std::vector<bool> mask(vecs.size(), false);
        int k = std::min<int>(n + 1, static_cast<int>(vecs.size()));
        std::fill(mask.end() - k, mask.end(), true);
        do {
            std::vector<Vector> rows;
            for (std::size_t i = 0; i < vecs.size(); ++i)
                if (mask[i]) rows.push_back(vecs[i]);
            if (rank(rows, n + 1) != rows.size()) ok = false;
        } while (ok && std::next_permutation(mask.begin(), mask.end()));
        if (ok) return Arrangement(n, hs);
    }
}

// Random bounded polytope: integer normals with constant 1 (so the origin is
// interior), retried until bounded. Facets that turn out redundant are kept;
// they are part of the arrangement but not of the boundary.
inline Arrangement random_polytope(std::mt19937& rng, int n, int facets) {
    std::uniform_int_distribution<int> coef(-4, 4);
    for (;;) {
        std::vector<LinearFunctional> hs;
        bool distinct = true;
        for (int i = 0; i < facets && distinct; ++i) {
            Vector g(n);
            for (auto& v : g) v = coef(rng);
            if (is_zero(g)) {
                distinct = false;
                break;
            }
            LinearFunctional h = lf(1, g);
            for (const auto& o : hs)
                if (o.same_hyperplane(h)) distinct = false;
            hs.push_back(h);
        }
        if (!distinct) continue;
        std::vector<LinearFunctional> nonneg = hs;
        if (!is_bounded(nonneg, n)) continue;
        return Arrangement(n, hs);
    }
}

}  // namespace fixtures
