#pragma once

#include <hyperform/arrangement.hpp>
#include <hyperform/matrix.hpp>

#include <map>
#include <string>
#include <vector>

namespace hyperform {

/// Simplex of a Delta-complex. faces[j] is the index, among simplices one
/// dimension lower, of the face opposite vertex j. Vertices have no faces.
struct Simplex {
    std::string name;
    std::vector<int> faces;
};

class DeltaComplex {
public:
    DeltaComplex() = default;
    /// Validates that every face index exists and has the right arity.
    explicit DeltaComplex(std::vector<std::vector<Simplex>> cells);

    /// Top dimension; -1 for the empty complex.
    int dim() const { return static_cast<int>(cells_.size()) - 1; }
    const std::vector<Simplex>& cells(int k) const;
    std::size_t count(int k) const { return cells(k).size(); }

    /// Matrix of the boundary C_k -> C_{k-1}, k >= 1; rows index (k-1)-cells.
    ExactMatrix boundary(int k) const;

    long euler_characteristic() const;

private:
    std::vector<std::vector<Simplex>> cells_;
};

struct HomologyResult {
    std::vector<long> reduced;  // reduced Betti numbers over Q, degrees 0..dim
    long euler_characteristic = 0;
};

/// Exact ranks of the augmented chain complex.
HomologyResult reduced_homology(const DeltaComplex& c);

/// One connected component of a multiple intersection Y_I.
struct Stratum {
    std::string name;
    /// For each J = I minus one index, the stratum of Y_J containing this one.
    std::map<IndexSet, std::string> faces;
};

/// Irreducible components and the connected components of their multiple
/// intersections. Index sets are 0-based and sorted; absent or empty entries
/// mean an empty intersection. Singletons default to the component itself.
struct StrataInput {
    std::vector<std::string> components;
    std::map<IndexSet, std::vector<Stratum>> strata;
};

/// One k-simplex per connected component of each (k+1)-fold intersection,
/// vertices ordered by component index.
DeltaComplex dual_complex(const StrataInput& input);

/// Every intersection of at most max_size components is nonempty and
/// connected; used for normal crossing configurations of hyperplanes.
StrataInput complete_strata(std::vector<std::string> components, int max_size);

/// sum (r_P - 1) - (k - 1) for a connected curve with k components.
long curve_rank(const std::vector<int>& branches, int components);

/// cr(C) + |S| - 1; |S| = 0 is reported as the absolute case.
long curve_rank_relative(long cr, int points);

/// (d-1)(d-2)/2 - sum delta_P.
long genus_plane_curve(int degree, const std::vector<int>& deltas);

struct PlaneCurveComponent {
    int degree = 1;
    std::vector<int> deltas;
};

/// Sum of the component genera of a union resolved componentwise.
long genus_plane_curve_union(const std::vector<PlaneCurveComponent>& components);

/// binom(d-1, n).
Integer genus_smooth_hypersurface(int n, int degree);

/// binom(d-1, n) for a normal crossing divisor of total degree d in P^n.
Integer logforms_dim_ncd(int n, int degree);

}  // namespace hyperform
