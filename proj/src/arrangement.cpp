#include <hyperform/arrangement.hpp>
#include <hyperform/error.hpp>
#include <hyperform/lp.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hyperform {

namespace {

std::size_t rank_of(const std::vector<Vector>& rows, std::size_t cols) { return rows.empty() ? 0 : rank(rows, cols); }

std::vector<Vector> pick(const std::vector<Vector>& v, const IndexSet& s) {
    std::vector<Vector> out;
    for (int i : s) out.push_back(v.at(i));
    return out;
}

// Calls f on every k-subset of {0..n-1} in lexicographic order; f returns
// false to stop.
void for_each_combination(int n, int k, const std::function<bool(const IndexSet&)>& f) {
    if (k < 0 || k > n) return;
    IndexSet c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        if (!f(c)) return;
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Vector standard_infinity(int dim) {
    Vector v(dim + 1, Rational(0));
    v[0] = 1;
    return v;
}

struct AffinePart {
    Point basepoint;
    std::vector<Vector> direction;
};

// Points z with c + g.z = 0 for every homogeneous row (c, g), as an echelon
// basepoint (free variables zero) plus a reduced echelon direction basis.
std::optional<AffinePart> affine_part(const std::vector<Vector>& rows, int n) {
    AffinePart a{Point(n, Rational(0)), {}};
    std::vector<Vector> grads;
    if (!rows.empty()) {
        std::vector<Vector> aug;
        for (const auto& r : rows) {
            Vector row(r.begin() + 1, r.end());
            grads.push_back(row);
            row.push_back(-r[0]);
            aug.push_back(row);
        }
        RrefResult rr = rref(ExactMatrix::from_rows(aug, n + 1));
        for (std::size_t k = 0; k < rr.rank; ++k) {
            if (rr.pivots[k] == static_cast<std::size_t>(n)) return std::nullopt;
            a.basepoint[rr.pivots[k]] = rr.matrix(k, n);
        }
    }
    std::vector<Vector> ker;
    if (grads.empty()) {
        for (int k = 0; k < n; ++k) {
            Vector e(n, Rational(0));
            e[k] = 1;
            ker.push_back(e);
        }
    } else {
        ker = kernel_basis(ExactMatrix::from_rows(grads, n));
    }
    if (!ker.empty()) {
        RrefResult rr = rref(ExactMatrix::from_rows(ker, n));
        for (std::size_t k = 0; k < rr.rank; ++k) a.direction.push_back(rr.matrix.row(k));
    }
    return a;
}

}  // namespace

Arrangement::Arrangement(int dim, std::vector<LinearFunctional> hyperplanes, Infinity infinity,
                         std::vector<std::string> names, std::vector<std::string> variables)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), infinity_(std::move(infinity)), names_(std::move(names)),
      variables_(std::move(variables)) {
    if (dim_ < 0) fail(ErrorKind::validation, "ambient dimension must be nonnegative");
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        const auto& h = hyperplanes_[i];
        if (h.num_vars() != dim_)
            fail(ErrorKind::dimension, "hyperplane " + std::to_string(i + 1) + " has " + std::to_string(h.num_vars()) +
                                           " coefficients, expected " + std::to_string(dim_));
        if (h.has_zero_gradient())
            fail(ErrorKind::validation, "hyperplane " + std::to_string(i + 1) + " has zero gradient");
        for (std::size_t j = 0; j < i; ++j)
            if (h.same_hyperplane(hyperplanes_[j]))
                fail(ErrorKind::validation, "hyperplanes " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                                " define the same zero locus");
    }
    if (infinity_.kind == InfinityKind::explicit_plane) {
        if (!infinity_.f0) fail(ErrorKind::validation, "explicit infinity needs a functional");
        if (infinity_.f0->num_vars() != dim_) fail(ErrorKind::dimension, "infinity functional has wrong dimension");
        if (infinity_.f0->has_zero_gradient())
            fail(ErrorKind::validation, "explicit infinity has zero gradient; use projective-closure");
        for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
            if (infinity_.f0->same_hyperplane(hyperplanes_[i]))
                fail(ErrorKind::validation, "explicit infinity coincides with hyperplane " + std::to_string(i + 1));
    } else {
        infinity_.f0.reset();
    }
    if (names_.empty())
        for (std::size_t i = 0; i < hyperplanes_.size(); ++i) names_.push_back("H" + std::to_string(i + 1));
    if (names_.size() != hyperplanes_.size()) fail(ErrorKind::validation, "one name per hyperplane required");
    if (variables_.empty())
        for (int i = 0; i < dim_; ++i) variables_.push_back("z" + std::to_string(i + 1));
    if (static_cast<int>(variables_.size()) != dim_) fail(ErrorKind::validation, "one variable name per dimension required");
}

Vector Arrangement::chart_infinity() const {
    if (infinity_.kind == InfinityKind::explicit_plane) return infinity_.f0->homogeneous();
    return standard_infinity(dim_);
}

std::vector<Vector> Arrangement::projective_vectors() const {
    std::vector<Vector> v;
    for (const auto& h : hyperplanes_) v.push_back(h.homogeneous());
    if (infinity_.kind == InfinityKind::projective_closure) v.push_back(standard_infinity(dim_));
    if (infinity_.kind == InfinityKind::explicit_plane) v.push_back(infinity_.f0->homogeneous());
    return v;
}

bool Arrangement::intersecting(const IndexSet& s) const {
    std::vector<Vector> rows;
    for (int i : s) rows.push_back(hyperplanes_.at(i).homogeneous());
    std::size_t r = rank_of(rows, dim_ + 1);
    rows.push_back(chart_infinity());
    return rank_of(rows, dim_ + 1) == r + 1;
}

bool Arrangement::independent(const IndexSet& s) const {
    std::vector<Vector> rows;
    for (int i : s) rows.push_back(hyperplanes_.at(i).homogeneous());
    return rank_of(rows, dim_ + 1) == s.size();
}

Arrangement Arrangement::deletion(int i) const {
    if (i < 0 || i >= size()) fail(ErrorKind::validation, "hyperplane index out of range");
    auto hs = hyperplanes_;
    auto ns = names_;
    hs.erase(hs.begin() + i);
    ns.erase(ns.begin() + i);
    return Arrangement(dim_, std::move(hs), infinity_, std::move(ns), variables_);
}

Arrangement Arrangement::permuted(const std::vector<int>& order) const {
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    bool ok = check.size() == hyperplanes_.size();
    for (int k = 0; ok && k < static_cast<int>(check.size()); ++k) ok = check[k] == k;
    if (!ok) fail(ErrorKind::validation, "order must be a permutation of the hyperplane indices");
    std::vector<LinearFunctional> hs;
    std::vector<std::string> ns;
    for (int k : order) {
        hs.push_back(hyperplanes_[k]);
        ns.push_back(names_[k]);
    }
    return Arrangement(dim_, std::move(hs), infinity_, std::move(ns), variables_);
}

Arrangement Arrangement::extended(const LinearFunctional& h, const std::string& name) const {
    auto hs = hyperplanes_;
    auto ns = names_;
    hs.push_back(h);
    ns.push_back(name.empty() ? "H" + std::to_string(hs.size()) : name);
    return Arrangement(dim_, std::move(hs), infinity_, std::move(ns), variables_);
}

Point Restriction::to_ambient(const Point& w) const {
    Point z = origin;
    for (std::size_t m = 0; m < basis.size(); ++m)
        for (std::size_t k = 0; k < z.size(); ++k) z[k] += w.at(m) * basis[m][k];
    return z;
}

Point Restriction::to_chart(const Point& z) const {
    Point w;
    for (std::size_t k = 0; k < z.size(); ++k)
        if (static_cast<int>(k) != pivot) w.push_back(z[k]);
    return w;
}

namespace {

LinearFunctional restrict_functional(const LinearFunctional& f, const Point& origin, const std::vector<Vector>& basis) {
    Vector g;
    for (const auto& b : basis) g.push_back(dot(f.gradient(), b));
    return {f(origin), g};
}

}  // namespace

Restriction restriction(const Arrangement& arr, int i) {
    if (i < 0 || i >= arr.size()) fail(ErrorKind::validation, "hyperplane index out of range");
    const LinearFunctional& h = arr[i];
    int n = arr.dim();
    Restriction r{Arrangement(n - 1, {}), std::vector<int>(arr.size(), -1), 0, {}, {}};
    while (h.gradient()[r.pivot] == 0) ++r.pivot;
    r.origin.assign(n, Rational(0));
    r.origin[r.pivot] = -h.constant() / h.gradient()[r.pivot];
    r.basis = kernel_basis(ExactMatrix::from_rows({h.gradient()}, n));

    Vector hi = h.homogeneous(), f0 = arr.chart_infinity();
    std::vector<LinearFunctional> traces;
    std::vector<std::string> names;
    for (int j = 0; j < arr.size(); ++j) {
        if (j == i) continue;
        if (rank({hi, arr[j].homogeneous(), f0}, n + 1) < 3) continue;  // empty in the chart
        LinearFunctional t = restrict_functional(arr[j], r.origin, r.basis);
        if (t.has_zero_gradient())
            fail(ErrorKind::precondition, "trace of hyperplane " + std::to_string(j + 1) + " on hyperplane " +
                                              std::to_string(i + 1) + " lies at the standard infinity of the chart");
        int found = -1;
        for (std::size_t k = 0; k < traces.size(); ++k)
            if (traces[k].same_hyperplane(t)) found = static_cast<int>(k);
        if (found < 0) {
            found = static_cast<int>(traces.size());
            traces.push_back(t);
            names.push_back(arr.names()[j]);
        }
        r.index_map[j] = found;
    }

    Infinity inf = arr.infinity();
    if (inf.kind == InfinityKind::explicit_plane) {
        LinearFunctional t = restrict_functional(*inf.f0, r.origin, r.basis);
        inf = t.has_zero_gradient() ? Infinity::projective_closure() : Infinity::explicit_plane(t);
    }
    std::vector<std::string> vars;
    for (int k = 0; k < n; ++k)
        if (k != r.pivot) vars.push_back(arr.variables()[k]);
    r.arrangement = Arrangement(n - 1, std::move(traces), inf, std::move(names), std::move(vars));
    return r;
}

Flat affine_flat(const Arrangement& arr, const IndexSet& indices) {
    int n = arr.dim();
    Flat f;
    std::vector<Vector> hom;
    for (int i : indices) hom.push_back(arr[i].homogeneous());
    f.codim = static_cast<int>(rank_of(hom, n + 1));
    for (int j = 0; j < arr.size(); ++j) {
        auto rows = hom;
        rows.push_back(arr[j].homogeneous());
        if (rank_of(rows, n + 1) == static_cast<std::size_t>(f.codim)) f.closure.push_back(j);
    }
    if (auto a = affine_part(hom, n)) {
        f.basepoint = std::move(a->basepoint);
        f.direction = std::move(a->direction);
    }
    return f;
}

bool FlatPoset::below(const Flat& f, const Flat& g) { return is_subset(f.closure, g.closure); }

FlatPoset build_flat_poset(const Arrangement& arr) {
    int n = arr.dim();
    auto vecs = arr.projective_vectors();
    int m = static_cast<int>(vecs.size());

    auto closure_of = [&](const IndexSet& gens) {
        auto rows = pick(vecs, gens);
        std::size_t r = rank_of(rows, n + 1);
        IndexSet c;
        for (int j = 0; j < m; ++j) {
            if (std::binary_search(gens.begin(), gens.end(), j)) {
                c.push_back(j);
                continue;
            }
            auto more = rows;
            more.push_back(vecs[j]);
            if (rank_of(more, n + 1) == r) c.push_back(j);
        }
        return std::make_pair(c, static_cast<int>(r));
    };

    std::map<IndexSet, int> seen;  // closure -> codim
    std::vector<IndexSet> frontier{IndexSet{}};
    seen[{}] = 0;
    while (!frontier.empty()) {
        std::vector<IndexSet> next;
        for (const auto& x : frontier)
            for (int j = 0; j < m; ++j) {
                if (std::binary_search(x.begin(), x.end(), j)) continue;
                IndexSet gens = x;
                gens.insert(std::upper_bound(gens.begin(), gens.end(), j), j);
                auto [c, r] = closure_of(gens);
                if (seen.emplace(c, r).second) next.push_back(c);
            }
        frontier = std::move(next);
    }

    FlatPoset p;
    for (const auto& [c, r] : seen) {
        Flat f;
        f.closure = c;
        f.codim = r;
        if (r <= n) {
            auto rows = pick(vecs, c);
            rows.push_back(standard_infinity(n));
            if (rank_of(rows, n + 1) == static_cast<std::size_t>(r + 1)) {
                rows.pop_back();
                if (auto a = affine_part(rows, n)) {
                    f.basepoint = std::move(a->basepoint);
                    f.direction = std::move(a->direction);
                }
            }
        }
        p.flats.push_back(std::move(f));
    }
    std::stable_sort(p.flats.begin(), p.flats.end(), [](const Flat& a, const Flat& b) {
        if (a.codim != b.codim) return a.codim < b.codim;
        return a.closure < b.closure;
    });
    p.moebius.resize(p.flats.size());
    for (std::size_t k = 0; k < p.flats.size(); ++k) {
        if (k == 0) {
            p.moebius[k] = 1;
            continue;
        }
        long long s = 0;
        for (std::size_t l = 0; l < k; ++l)
            if (FlatPoset::below(p.flats[l], p.flats[k])) s += p.moebius[l];
        p.moebius[k] = -s;
    }
    p.essential = !p.flats.empty() && p.flats.back().codim == n + 1;
    return p;
}

long long combinatorial_rank(const FlatPoset& poset, int dim) {
    if (!poset.essential) return 0;
    long long mu = poset.moebius.back();
    return (dim - 1) % 2 == 0 ? mu : -mu;
}

long long combinatorial_rank(const Arrangement& arr) { return combinatorial_rank(build_flat_poset(arr), arr.dim()); }

std::vector<IndexSet> circuits(const Arrangement& arr) {
    std::vector<IndexSet> found;
    for (int k = 3; k <= arr.dim() + 1; ++k) {
        std::vector<IndexSet> now;
        for_each_combination(arr.size(), k, [&](const IndexSet& s) {
            for (const auto& c : found)
                if (is_subset(c, s)) return true;
            if (!arr.independent(s) && arr.intersecting(s)) now.push_back(s);
            return true;
        });
        found.insert(found.end(), now.begin(), now.end());
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<IndexSet> broken_circuits(const Arrangement& arr) {
    std::vector<IndexSet> out;
    for (auto c : circuits(arr)) {
        c.erase(c.begin());
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IndexSet> nbc_sets(const Arrangement& arr, int k) {
    if (k < 0 || k > arr.dim()) fail(ErrorKind::validation, "nbc degree must lie in [0, n]");
    auto broken = broken_circuits(arr);
    std::vector<IndexSet> out;
    for_each_combination(arr.size(), k, [&](const IndexSet& s) {
        for (const auto& b : broken)
            if (is_subset(b, s)) return true;
        if (arr.independent(s) && arr.intersecting(s)) out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Cell> regions(const Arrangement& arr) {
    int n = arr.dim();
    struct Partial {
        SignVector signs;
        std::vector<LinearFunctional> constraints;
        Point witness;
    };
    std::vector<Partial> cells{{{}, {}, Point(n, Rational(0))}};
    for (int j = 0; j < arr.size(); ++j) {
        std::vector<Partial> next;
        for (const auto& c : cells)
            for (int s : {1, -1}) {
                Partial p = c;
                p.signs.push_back(s);
                p.constraints.push_back(arr[j] * Rational(s));
                auto w = strict_interior_point(p.constraints, n);
                if (!w) continue;
                p.witness = *w;
                next.push_back(std::move(p));
            }
        cells = std::move(next);
    }
    std::vector<Cell> out;
    for (auto& c : cells) {
        bool b = is_bounded(c.constraints, n);
        out.push_back({std::move(c.signs), std::move(c.witness), b});
    }
    std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return a.signs > b.signs; });
    return out;
}

void require_generic_infinity(const Arrangement& arr) {
    if (arr.infinity().kind != InfinityKind::generic)
        fail(ErrorKind::precondition, "bounded-region counting requires generic infinity mode");
    int n = arr.dim();
    auto vecs = arr.projective_vectors();
    FlatPoset p = build_flat_poset(arr);
    for (const auto& f : p.flats) {
        if (f.codim == 0 || f.codim > n) continue;
        auto rows = pick(vecs, f.closure);
        rows.push_back(standard_infinity(n));
        if (rank_of(rows, n + 1) != static_cast<std::size_t>(f.codim + 1))
            fail(ErrorKind::precondition, "infinity is not generic: flat " + format_index_set(f.closure) + " of codim " +
                                              std::to_string(f.codim) + " meets it in codim " +
                                              std::to_string(rank_of(rows, n + 1)));
    }
}

std::vector<Cell> bounded_regions(const Arrangement& arr) {
    require_generic_infinity(arr);
    std::vector<Cell> out;
    for (auto& c : regions(arr))
        if (c.bounded) out.push_back(std::move(c));
    return out;
}

std::string format_index_set(const IndexSet& s, int infinity_index) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ",";
        out += s[k] == infinity_index ? "0" : std::to_string(s[k] + 1);
    }
    return out + "}";
}

}  // namespace hyperform
