#include <hyperform/canonical.hpp>
#include <hyperform/checks.hpp>
#include <hyperform/error.hpp>
#include <hyperform/lp.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace hyperform {

namespace {

// Thrown by a check body to mark the invariant as not applicable.
struct Skip {
    std::string reason;
};

class Runner {
public:
    explicit Runner(std::string suite) : suite_(std::move(suite)) {}

    void run(const std::string& invariant, const std::function<std::string()>& body) {
        CheckOutcome o{suite_, invariant, CheckStatus::passed, {}};
        try {
            o.detail = body();
        } catch (const Skip& s) {
            o.status = CheckStatus::skipped;
            o.detail = s.reason;
        } catch (const Error& e) {
            // outside the operation's domain: the invariant does not apply
            o.status = exit_status(e.kind()) == 2 ? CheckStatus::skipped : CheckStatus::failed;
            o.detail = std::string(kind_name(e.kind())) + ": " + e.what();
        }
        report_.outcomes.push_back(std::move(o));
    }

    static void expect(bool cond, const std::string& what) {
        if (!cond) throw Error(ErrorKind::internal, what);
    }

    CheckReport& report() { return report_; }

private:
    std::string suite_;
    CheckReport report_;
};

void append(CheckReport& into, CheckReport&& from) {
    for (auto& o : from.outcomes) into.outcomes.push_back(std::move(o));
}

Arrangement closure_of(const Arrangement& arr) {
    return Arrangement(arr.dim(), arr.hyperplanes(), Infinity::projective_closure(), arr.names(), arr.variables());
}

// Region for region-based invariants: the given one, else the first bounded cell.
std::optional<Region> pick_region(const Arrangement& arr, const std::optional<Region>& region) {
    if (region) return region;
    if (arr.dim() == 0 || arr.size() == 0) return std::nullopt;
    auto cells = regions(arr);
    if (cells.empty()) return std::nullopt;
    auto it = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.bounded; });
    const Cell& c = it == cells.end() ? cells.front() : *it;
    return region_from_point(arr, c.witness);
}

bool region_bounded(const Region& r) { return is_bounded(r.inward(), r.arrangement.dim()); }

// --- suites -----------------------------------------------------------------

CheckReport algebra_suite(const Arrangement& arr) {
    Runner r("algebra");
    ExactMatrix m = ExactMatrix::from_rows(arr.projective_vectors(), arr.dim() + 1);
    r.run("rref idempotence", [&] {
        RrefResult once = rref(m);
        Runner::expect(rref(once.matrix).matrix == once.matrix, "rref(rref(m)) differs from rref(m)");
        Runner::expect(rank(m.transpose()) == once.rank, "row and column rank differ");
        return "rank " + std::to_string(once.rank);
    });
    r.run("cancellation invariance", [&] {
        int n = arr.dim();
        if (n < 1 || arr.size() < 2) throw Skip{"needs two hyperplanes"};
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> pick(0, arr.size() - 1), coord(-9, 9);
        int tested = 0;
        for (int t = 0; t < 10; ++t) {
            IndexSet s;
            for (int k = 0; k < std::min(n, 2); ++k) s.push_back(pick(rng));
            OSElement x = OSElement::monomial(s);
            if (x.is_zero()) continue;
            RationalForm f = to_rational_form(arr, x);
            RationalForm c = f.cancelled();
            Runner::expect(c.equals(f), "cancel(f) differs from f");
            Runner::expect(f.equals(f) && c.equals(f) && f.equals(c), "equality is not symmetric");
            for (int p = 0; p < 20; ++p) {
                Point pt(n);
                for (auto& v : pt) v = Rational(coord(rng), 7);
                bool pole = false;
                for (const auto& fac : f.denominator()) pole = pole || fac.functional(pt) == 0;
                for (const auto& fac : c.denominator()) pole = pole || fac.functional(pt) == 0;
                if (pole) continue;
                Runner::expect(f.evaluate(pt) == c.evaluate(pt), "evaluation disagrees with equality");
            }
            ++tested;
        }
        return std::to_string(tested) + " forms";
    });
    return std::move(r.report());
}

CheckReport arrangement_suite(const Arrangement& arr) {
    Runner r("arrangement");
    FlatPoset poset = build_flat_poset(arr);
    int n = arr.dim();
    r.run("moebius recursion", [&] {
        for (std::size_t f = 1; f < poset.flats.size(); ++f) {
            long long sum = 0;
            for (std::size_t g = 0; g < poset.flats.size(); ++g)
                if (FlatPoset::below(poset.flats[g], poset.flats[f])) sum += poset.moebius[g];
            Runner::expect(sum == 0, "sum of mu below " + format_index_set(poset.flats[f].closure, arr.size()) + " is " +
                                         std::to_string(sum));
        }
        return std::to_string(poset.flats.size()) + " flats";
    });
    r.run("nbc sets are independent and intersecting", [&] {
        std::size_t total = 0;
        for (int k = 0; k <= n; ++k)
            for (const auto& s : nbc_sets(arr, k)) {
                Runner::expect(arr.independent(s) && arr.intersecting(s), "nbc set " + format_index_set(s) + " is degenerate");
                Flat f = affine_flat(arr, s);
                Runner::expect(f.codim == k, "nbc set " + format_index_set(s) + " has the wrong codimension");
                ++total;
            }
        return std::to_string(total) + " sets";
    });
    r.run("nbc count equals the Moebius rank", [&] {
        // the affine complement is the complement of the arrangement plus its infinity member
        Arrangement proj = arr.has_infinity_member() ? arr : closure_of(arr);
        long long cr = combinatorial_rank(proj);
        std::size_t nbc = nbc_sets(arr, n).size();
        Runner::expect(cr == static_cast<long long>(nbc),
                       "|nbc| = " + std::to_string(nbc) + " but the Moebius rank is " + std::to_string(cr));
        return "rank " + std::to_string(cr);
    });
    r.run("Zaslavsky counts", [&] {
        if (arr.infinity().kind == InfinityKind::explicit_plane) throw Skip{"real cells are taken in the standard chart"};
        if (n == 0) throw Skip{"zero-dimensional"};
        Arrangement affine = arr.has_infinity_member()
                                 ? Arrangement(n, arr.hyperplanes(), Infinity::generic(), arr.names(), arr.variables())
                                 : arr;
        FlatPoset p = build_flat_poset(affine);
        long long all = 0, bounded = 0;
        for (std::size_t i = 0; i < p.flats.size(); ++i) {
            if (!p.flats[i].basepoint) continue;
            all += std::llabs(p.moebius[i]);
            bounded += p.moebius[i];
        }
        auto cells = regions(affine);
        long long b = std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.bounded; });
        Runner::expect(static_cast<long long>(cells.size()) == all,
                       std::to_string(cells.size()) + " regions but Zaslavsky gives " + std::to_string(all));
        Runner::expect(b == std::llabs(bounded), std::to_string(b) + " bounded regions but Zaslavsky gives " +
                                                     std::to_string(std::llabs(bounded)));
        return std::to_string(cells.size()) + " regions, " + std::to_string(b) + " bounded";
    });
    r.run("bounded regions equal the rank", [&] {
        if (arr.infinity().kind != InfinityKind::generic) throw Skip{"needs generic infinity"};
        try {
            require_generic_infinity(arr);
        } catch (const Error& e) {
            throw Skip{e.what()};
        }
        std::size_t b = bounded_regions(arr).size();
        long long cr = combinatorial_rank(arr);
        Runner::expect(static_cast<long long>(b) == cr,
                       std::to_string(b) + " bounded regions but the rank is " + std::to_string(cr));
        return std::to_string(b) + " regions";
    });
    r.run("flats are order insensitive", [&] {
        std::vector<int> order(arr.size());
        std::iota(order.rbegin(), order.rend(), 0);
        FlatPoset q = build_flat_poset(arr.permuted(order));
        Runner::expect(q.flats.size() == poset.flats.size(), "flat count changes under reordering");
        std::vector<long long> a = poset.moebius, b = q.moebius;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        Runner::expect(a == b, "Moebius values change under reordering");
        return std::string("reversed order");
    });
    return std::move(r.report());
}

CheckReport boundary_suite(const Arrangement& arr, const std::optional<Region>& region) {
    Runner r("boundary");
    std::optional<Region> reg = pick_region(arr, region);
    auto need = [&]() -> const Region& {
        if (!reg) throw Skip{"no region"};
        return *reg;
    };
    int n = arr.dim();
    r.run("antisymmetry", [&] {
        const Region& g = need();
        if (n < 2) throw Skip{"needs dimension 2"};
        OrientedFace top = top_face(g);
        int pairs = 0;
        IndexSet fs = facets(g);
        for (std::size_t a = 0; a < fs.size(); ++a)
            for (std::size_t b = a + 1; b < fs.size(); ++b) {
                int i = fs[a], j = fs[b];
                auto fi = partial_boundary(g, top, i);
                auto fj = partial_boundary(g, top, j);
                if (!fi || !fj) continue;
                std::optional<OrientedFace> ij, ji;
                try {
                    ij = partial_boundary(g, *fi, j);
                    ji = partial_boundary(g, *fj, i);
                } catch (const Error&) {
                    continue;  // parallel or coincident traces
                }
                if (!ij || !ji) {
                    Runner::expect(!ij && !ji, "only one of the two routes to " + format_index_set({i, j}) + " is a face");
                    continue;
                }
                Runner::expect(ij->flat == ji->flat, "routes to " + format_index_set({i, j}) + " reach different flats");
                // compare in a common basis
                std::vector<Vector> basis = ij->basis;
                int s1 = ij->coefficient, s2 = ji->coefficient;
                if (!basis.empty()) {
                    ExactMatrix change(basis.size(), basis.size());
                    for (std::size_t c = 0; c < basis.size(); ++c) {
                        auto co = coordinates_in(basis, ji->basis[c]);
                        Runner::expect(co.has_value(), "bases span different spaces");
                        for (std::size_t k = 0; k < basis.size(); ++k) change(k, c) = (*co)[k];
                    }
                    s2 *= sign(determinant(change));
                }
                Runner::expect(s1 == -s2, "boundaries along " + format_index_set({i, j}) + " are not antisymmetric");
                ++pairs;
            }
        return std::to_string(pairs) + " ridges";
    });
    r.run("iterated boundaries are signs", [&] {
        const Region& g = need();
        int count = 0;
        for (const auto& s : nbc_sets(arr, n)) {
            if (!affine_flat(arr, s).basepoint) continue;
            int v = iterated_boundary(g, s);
            Runner::expect(v >= -1 && v <= 1, "boundary along " + format_index_set(s) + " is " + std::to_string(v));
            Runner::expect(iterated_boundary(g.reversed(), s) == -v, "orientation reversal fails at " + format_index_set(s));
            for (std::uint64_t seed : {3u, 11u})
                Runner::expect(iterated_boundary(g, s, {seed}) == v, "basis choice changes the boundary at " + format_index_set(s));
            ++count;
        }
        return std::to_string(count) + " index sets";
    });
    r.run("vertex shortcut", [&] {
        const Region& g = need();
        if (!region_bounded(g)) throw Skip{"region is unbounded"};
        int simple = 0;
        for (const auto& v : vertices(g)) {
            if (static_cast<int>(v.facets.size()) != n) continue;
            Runner::expect(vertex_sign_shortcut(g, v.facets) == iterated_boundary(g, v.facets),
                           "shortcut disagrees at vertex " + format_index_set(v.facets));
            ++simple;
        }
        return std::to_string(simple) + " simple vertices";
    });
    return std::move(r.report());
}

CheckReport os_suite(const Arrangement& arr, const std::optional<Region>& region) {
    Runner r("os_forms");
    OrlikSolomon os(arr);
    int n = arr.dim();
    r.run("normalization rank and idempotence", [&] {
        for (int k = 0; k <= n; ++k)
            for (const auto& rel : os.relations(k)) {
                OSElement x = os.normalize(rel);
                Runner::expect(x.is_zero(), "a degree-" + std::to_string(k) + " relation does not normalize to zero");
            }
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> pick(0, std::max(0, arr.size() - 1));
        for (int t = 0; t < 10 && arr.size() > 0; ++t) {
            IndexSet s;
            for (int k = 0; k < n; ++k) s.push_back(pick(rng));
            OSElement x = os.normalize(OSElement::monomial(s));
            Runner::expect(os.normalize(x) == x && os.is_normal(x), "normalization is not idempotent");
        }
        return std::string("degrees 0..") + std::to_string(n);
    });
    r.run("relation soundness", [&] {
        std::size_t count = 0;
        for (int k = 1; k <= n; ++k)
            for (const auto& rel : os.relations(k)) {
                Runner::expect(to_rational_form(arr, rel).is_zero(), "a degree-" + std::to_string(k) + " relation is a nonzero form");
                ++count;
            }
        return std::to_string(count) + " relations";
    });
    r.run("Szenes duality", [&] {
        auto sets = os.nbc(n);
        for (const auto& j : sets)
            for (const auto& [s, v] : corner_residues(os, OSElement::monomial(j)))
                Runner::expect(v == (s == j ? 1 : 0), "Res_" + format_index_set(s) + " of w_" + format_index_set(j) + " is " + to_string(v));
        return std::to_string(sets.size()) + " nbc sets";
    });
    r.run("algebra map", [&] {
        if (arr.size() == 0 || n < 2) throw Skip{"needs dimension 2"};
        std::mt19937 rng(9);
        std::uniform_int_distribution<int> pick(0, arr.size() - 1);
        for (int t = 0; t < 20; ++t) {
            OSElement x = OSElement::monomial({pick(rng)});
            IndexSet ys;
            for (int k = 1; k < n; ++k) ys.push_back(pick(rng));
            OSElement y = OSElement::monomial(ys);
            Runner::expect(to_rational_form(arr, wedge(x, y)).equals(wedge(to_rational_form(arr, x), to_rational_form(arr, y))),
                           "wedge does not commute with conversion");
        }
        return std::string("20 pairs");
    });

    std::optional<Region> reg = pick_region(arr, region);
    auto need = [&]() -> const Region& {
        if (!reg) throw Skip{"no region"};
        if (arr.infinity().kind == InfinityKind::explicit_plane && !region_bounded(*reg)) throw Skip{"region is unbounded"};
        return *reg;
    };
    r.run("orientation", [&] {
        const Region& g = need();
        Runner::expect(canonical_form_nbc(os, g.reversed()) == -canonical_form_nbc(os, g), "reversal does not negate");
        return std::string("negated");
    });
    r.run("recursion", [&] {
        const Region& g = need();
        if (n < 1) throw Skip{"zero-dimensional"};
        OSElement w = canonical_form_nbc(os, g);
        int count = 0;
        for (int i = 0; i < arr.size(); ++i) {
            ResidueResult res = residue(os, w, i);
            auto fr = facet_region(g, i);
            if (!fr) {
                Runner::expect(res.element.is_zero(), "residue along non-facet H" + std::to_string(i + 1) + " is nonzero");
                continue;
            }
            Runner::expect(res.element == canonical_form_nbc(OrlikSolomon(fr->first.arrangement), fr->second),
                           "residue along H" + std::to_string(i + 1) + " is not the facet's form");
            ++count;
        }
        return std::to_string(count) + " facets";
    });
    r.run("triangulation", [&] {
        const Region& g = need();
        if (n < 1) throw Skip{"zero-dimensional"};
        if (!region_bounded(g)) throw Skip{"region is unbounded"};
        if (arr.infinity().kind != InfinityKind::generic) throw Skip{"needs generic infinity"};
        Vector grad(n, Rational(0));
        grad[0] = 1;
        if (n > 1) grad[1] = Rational(1, 3);
        LinearFunctional h(-dot(grad, g.witness), grad);
        CutResult cut = cut_region(g, h, "cut");
        OrlikSolomon oc(cut.arrangement);
        RationalForm sum = to_rational_form(cut.arrangement, canonical_form_nbc(oc, cut.positive)) +
                           to_rational_form(cut.arrangement, canonical_form_nbc(oc, cut.negative));
        Runner::expect(sum.equals(to_rational_form(arr, canonical_form_nbc(os, g))), "pieces do not sum to the whole");
        Runner::expect(!sum.cancelled().has_factor(h), "the cut factor survives");
        return std::string("one cut through the witness");
    });
    r.run("order independence", [&] {
        const Region& g = need();
        RationalForm whole = to_rational_form(arr, canonical_form_nbc(os, g));
        std::vector<int> order(arr.size());
        std::iota(order.rbegin(), order.rend(), 0);
        Arrangement rev = arr.permuted(order);
        RationalForm again = to_rational_form(rev, canonical_form_nbc(OrlikSolomon(rev), region_from_point(rev, g.witness, g.orientation)));
        Runner::expect(again == whole, "reversed order changes the rational form");
        return std::string("reversed order");
    });
    r.run("adjoint degree", [&] {
        const Region& g = need();
        if (!region_bounded(g)) throw Skip{"region is unbounded"};
        RationalForm f = to_rational_form(arr, canonical_form_nbc(os, g)).cancelled();
        if (static_cast<int>(f.denominator().size()) != arr.size()) throw Skip{"not every hyperplane is a pole"};
        MultiPoly adj = adjoint_polynomial(arr, f);
        int target = arr.size() - n - 1;
        Runner::expect(adj.is_zero() || (adj.is_homogeneous() && adj.degree() == target), "adjoint has the wrong degree");
        return "degree " + std::to_string(target);
    });
    return std::move(r.report());
}

CheckReport arrangement_strata_suite(const Arrangement& arr) {
    Runner r("strata");
    r.run("normal crossing dual complex", [&] {
        int n = arr.dim();
        std::vector<Vector> vecs = arr.projective_vectors();
        if (!arr.has_infinity_member()) vecs.push_back(arr.chart_infinity());
        int d = static_cast<int>(vecs.size());
        if (n < 1) throw Skip{"zero-dimensional"};
        // every n+1 members independent
        std::vector<bool> mask(d, false);
        int k = std::min(n + 1, d);
        std::fill(mask.end() - k, mask.end(), true);
        do {
            std::vector<Vector> rows;
            for (int i = 0; i < d; ++i)
                if (mask[i]) rows.push_back(vecs[i]);
            if (rank(rows, n + 1) != rows.size()) throw Skip{"not in general position with infinity"};
        } while (std::next_permutation(mask.begin(), mask.end()));
        std::vector<std::string> names(d);
        for (int i = 0; i < d; ++i) names[i] = i < arr.size() ? arr.names()[i] : "H0";
        HomologyResult h = reduced_homology(dual_complex(complete_strata(names, n)));
        Integer expected = logforms_dim_ncd(n, d);
        Runner::expect(h.reduced.size() >= static_cast<std::size_t>(n) && Integer(static_cast<long>(h.reduced[n - 1])) == expected,
                       "dual complex homology differs from binom(d-1, n)");
        Arrangement proj = arr.has_infinity_member() ? arr : closure_of(arr);
        Runner::expect(Integer(static_cast<long>(combinatorial_rank(proj))) == expected, "Moebius rank differs from binom(d-1, n)");
        return "rank " + expected.get_str();
    });
    return std::move(r.report());
}

CheckReport strata_suite(const StrataInput& strata) {
    Runner r("strata");
    DeltaComplex c;
    r.run("dual complex", [&] {
        c = dual_complex(strata);
        return std::to_string(c.dim() + 1) + " dimensions";
    });
    r.run("boundary squares to zero", [&] {
        for (int k = 2; k <= c.dim(); ++k) {
            ExactMatrix dd = c.boundary(k - 1) * c.boundary(k);
            for (std::size_t i = 0; i < dd.rows(); ++i)
                for (std::size_t j = 0; j < dd.cols(); ++j) Runner::expect(dd(i, j) == 0, "d^2 != 0 in degree " + std::to_string(k));
        }
        return std::string("ok");
    });
    r.run("Euler characteristic", [&] {
        HomologyResult h = reduced_homology(c);
        long alt = 0;
        for (std::size_t k = 0; k < h.reduced.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * h.reduced[k];
        Runner::expect(c.dim() < 0 || alt == h.euler_characteristic - 1, "alternating sum differs from chi - 1");
        return "chi " + std::to_string(h.euler_characteristic);
    });
    return std::move(r.report());
}

void require_suite(const std::string& suite) {
    const auto& all = check_suites();
    if (suite != "all" && std::find(all.begin(), all.end(), suite) == all.end())
        fail(ErrorKind::validation, "unknown suite '" + suite + "'");
}

}  // namespace

bool CheckReport::ok() const { return first_failure() == nullptr; }

const CheckOutcome* CheckReport::first_failure() const {
    for (const auto& o : outcomes)
        if (o.status == CheckStatus::failed) return &o;
    return nullptr;
}

std::string CheckReport::to_string() const {
    std::string out;
    for (const auto& o : outcomes) {
        const char* tag = o.status == CheckStatus::passed ? "PASS" : o.status == CheckStatus::failed ? "FAIL" : "SKIP";
        out += std::string(tag) + " " + o.suite + "/" + o.invariant;
        if (!o.detail.empty()) out += ": " + o.detail;
        out += "\n";
    }
    return out;
}

const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> names{"algebra", "arrangement", "boundary", "os_forms", "strata"};
    return names;
}

CheckReport run_checks(const Arrangement& arr, const std::optional<Region>& region, const std::string& suite) {
    require_suite(suite);
    CheckReport out;
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    if (want("algebra")) append(out, algebra_suite(arr));
    if (want("arrangement")) append(out, arrangement_suite(arr));
    if (want("boundary")) append(out, boundary_suite(arr, region));
    if (want("os_forms")) append(out, os_suite(arr, region));
    if (want("strata")) append(out, arrangement_strata_suite(arr));
    return out;
}

CheckReport run_checks(const StrataInput& strata, const std::string& suite) {
    require_suite(suite);
    if (suite != "all" && suite != "strata") fail(ErrorKind::validation, "strata input only supports the strata suite");
    return strata_suite(strata);
}

}  // namespace hyperform
