#pragma once

#include <hyperform/linear.hpp>
#include <hyperform/matrix.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperform {

using IndexSet = std::vector<int>;  // sorted, 0-based
using SignVector = std::vector<int>;

enum class InfinityKind { generic, projective_closure, explicit_plane };

/// How the affine chart sits in projective space.
///
/// generic: the flats and Moebius function are those of the homogenized
/// hyperplanes alone; the plane at infinity is assumed generic and is not a
/// member. projective_closure: the standard plane at infinity is a member.
/// explicit_plane: the user-named H0 = {f0 = 0} is a member, and generators
/// become dlog(f_i / f0).
struct Infinity {
    InfinityKind kind = InfinityKind::generic;
    std::optional<LinearFunctional> f0;

    static Infinity generic() { return {}; }
    static Infinity projective_closure() { return {InfinityKind::projective_closure, std::nullopt}; }
    static Infinity explicit_plane(LinearFunctional f0) { return {InfinityKind::explicit_plane, std::move(f0)}; }
};

class Arrangement {
public:
    Arrangement(int dim, std::vector<LinearFunctional> hyperplanes, Infinity infinity = {},
                std::vector<std::string> names = {}, std::vector<std::string> variables = {});

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(hyperplanes_.size()); }
    const LinearFunctional& operator[](int i) const { return hyperplanes_.at(i); }
    const std::vector<LinearFunctional>& hyperplanes() const { return hyperplanes_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::string>& variables() const { return variables_; }
    const Infinity& infinity() const { return infinity_; }
    bool has_infinity_member() const { return infinity_.kind != InfinityKind::generic; }

    /// Homogeneous vector of the hyperplane removed from projective space to
    /// get the chart in which "intersecting" is tested: f0 in explicit mode,
    /// x0 otherwise.
    Vector chart_infinity() const;

    /// Homogeneous vectors of the projective arrangement: every hyperplane,
    /// then the infinity member when there is one (index size()).
    std::vector<Vector> projective_vectors() const;

    /// The hyperplanes of s meet in the chart.
    bool intersecting(const IndexSet& s) const;
    /// The homogeneous vectors of s are linearly independent.
    bool independent(const IndexSet& s) const;

    Arrangement deletion(int i) const;
    /// new hyperplane k is old hyperplane order[k].
    Arrangement permuted(const std::vector<int>& order) const;
    /// Appends a hyperplane at the end.
    Arrangement extended(const LinearFunctional& h, const std::string& name = {}) const;

private:
    int dim_;
    std::vector<LinearFunctional> hyperplanes_;
    Infinity infinity_;
    std::vector<std::string> names_;
    std::vector<std::string> variables_;
};

/// The arrangement induced on H_i, in the chart that solves for the pivot
/// variable of H_i (its first nonzero gradient entry) and keeps the other
/// variables in order.
struct Restriction {
    Arrangement arrangement;
    std::vector<int> index_map;  // old index -> trace index, -1 for i itself and dropped traces
    int pivot = 0;
    Point origin;                // chart point 0 in ambient coordinates
    std::vector<Vector> basis;   // ambient images of the chart unit vectors

    Point to_ambient(const Point& w) const;
    Point to_chart(const Point& z) const;
};

Restriction restriction(const Arrangement& arr, int i);

/// A flat of the projective arrangement. `closure` lists every member
/// containing it (size() stands for the infinity member).
struct Flat {
    IndexSet closure;
    int codim = 0;                 // projective codimension; dim + 1 means empty
    std::optional<Point> basepoint;  // affine part, when the flat meets the chart
    std::vector<Vector> direction;   // reduced echelon basis of the affine direction

    friend bool operator==(const Flat&, const Flat&) = default;
};

/// Affine flat cut out by the given hyperplanes (no infinity member), with
/// its closure over all hyperplanes. Empty affine part when they do not meet.
Flat affine_flat(const Arrangement& arr, const IndexSet& indices);

struct FlatPoset {
    std::vector<Flat> flats;        // sorted by codim, then closure
    std::vector<long long> moebius; // mu(0, F)
    bool essential = false;

    /// F <= G in reverse inclusion order.
    static bool below(const Flat& f, const Flat& g);
};

FlatPoset build_flat_poset(const Arrangement& arr);

/// (-1)^(n-1) mu(0, 1) when essential, else 0.
long long combinatorial_rank(const FlatPoset& poset, int dim);
long long combinatorial_rank(const Arrangement& arr);

std::vector<IndexSet> circuits(const Arrangement& arr);
std::vector<IndexSet> broken_circuits(const Arrangement& arr);
std::vector<IndexSet> nbc_sets(const Arrangement& arr, int k);

struct Cell {
    SignVector signs;
    Point witness;
    bool bounded = false;
};

/// Every full-dimensional open cell of the real arrangement, ordered by sign
/// vector with + before -.
std::vector<Cell> regions(const Arrangement& arr);

/// Checks that the plane at infinity is generic: every flat of codim r <= n
/// meets it in codim r + 1. Throws a precondition error naming the flat.
void require_generic_infinity(const Arrangement& arr);

std::vector<Cell> bounded_regions(const Arrangement& arr);

/// "{1,2,3}" with 1-based indices; the infinity member prints as 0.
std::string format_index_set(const IndexSet& s, int infinity_index = -1);

}  // namespace hyperform
