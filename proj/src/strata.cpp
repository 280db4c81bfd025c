#include <hyperform/strata.hpp>
#include <hyperform/error.hpp>

#include <algorithm>

namespace hyperform {

namespace {

IndexSet without(const IndexSet& s, std::size_t j) {
    IndexSet t;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != j) t.push_back(s[i]);
    return t;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < k) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void require_positive(int v, const char* what) {
    if (v < 1) fail(ErrorKind::validation, std::string(what) + " must be at least 1");
}

}  // namespace

DeltaComplex::DeltaComplex(std::vector<std::vector<Simplex>> cells) : cells_(std::move(cells)) {
    while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
    for (std::size_t k = 0; k < cells_.size(); ++k)
        for (const auto& s : cells_[k]) {
            if (s.faces.size() != (k == 0 ? 0 : k + 1))
                fail(ErrorKind::validation, "simplex " + s.name + " of dimension " + std::to_string(k) + " has " +
                                                std::to_string(s.faces.size()) + " faces");
            for (int f : s.faces)
                if (f < 0 || static_cast<std::size_t>(f) >= cells_[k - 1].size())
                    fail(ErrorKind::validation, "simplex " + s.name + " references a missing face");
        }
    for (int k = 2; k <= dim(); ++k) {
        ExactMatrix dd = boundary(k - 1) * boundary(k);
        for (std::size_t r = 0; r < dd.rows(); ++r)
            for (std::size_t c = 0; c < dd.cols(); ++c)
                if (dd(r, c) != 0)
                    fail(ErrorKind::validation, "boundary of boundary is nonzero at simplex " + cells_[k][c].name);
    }
}

const std::vector<Simplex>& DeltaComplex::cells(int k) const {
    static const std::vector<Simplex> none;
    return k < 0 || k > dim() ? none : cells_[k];
}

ExactMatrix DeltaComplex::boundary(int k) const {
    ExactMatrix m(count(k - 1), count(k));
    const auto& ks = cells(k);
    for (std::size_t c = 0; c < ks.size(); ++c)
        for (std::size_t j = 0; j < ks[c].faces.size(); ++j) m(ks[c].faces[j], c) += (j % 2 == 0 ? 1 : -1);
    return m;
}

long DeltaComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dim(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
    return chi;
}

HomologyResult reduced_homology(const DeltaComplex& c) {
    HomologyResult out;
    out.euler_characteristic = c.euler_characteristic();
    int d = c.dim();
    // rank of d_k : C_k -> C_{k-1}; d_0 is the augmentation
    std::vector<long> rk(d + 2, 0);
    if (d >= 0) rk[0] = c.count(0) > 0 ? 1 : 0;
    for (int k = 1; k <= d; ++k) rk[k] = static_cast<long>(rank(c.boundary(k)));
    for (int k = 0; k <= d; ++k) out.reduced.push_back(static_cast<long>(c.count(k)) - rk[k] - rk[k + 1]);
    long alt = 0;
    for (int k = 0; k <= d; ++k) alt += (k % 2 == 0 ? 1 : -1) * out.reduced[k];
    if (d >= 0 && alt != out.euler_characteristic - 1)
        fail(ErrorKind::internal, "reduced Euler characteristic does not match the homology");
    return out;
}

DeltaComplex dual_complex(const StrataInput& input) {
    int m = static_cast<int>(input.components.size());
    // resolved strata: per index set, names in order
    std::map<IndexSet, std::vector<Stratum>> strata = input.strata;
    for (const auto& [s, list] : strata) {
        if (s.empty() || !std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(ErrorKind::validation, "stratum key " + format_index_set(s) + " is not a sorted set");
        for (int i : s)
            if (i < 0 || i >= m) fail(ErrorKind::validation, "stratum key " + format_index_set(s) + " names a missing component");
    }
    for (int i = 0; i < m; ++i) {
        auto& list = strata[{i}];
        if (list.empty()) list.push_back({input.components[i], {}});
        if (list.size() != 1) fail(ErrorKind::validation, "component " + input.components[i] + " must be irreducible");
    }
    auto lookup = [&](const IndexSet& s, const std::string& name, const std::string& owner) -> int {
        auto it = strata.find(s);
        if (it != strata.end())
            for (std::size_t j = 0; j < it->second.size(); ++j)
                if (it->second[j].name == name) return static_cast<int>(j);
        fail(ErrorKind::validation, "stratum " + owner + " lies in unknown stratum " + name + " of " + format_index_set(s));
    };
    // position of every stratum within its dimension
    std::map<IndexSet, int> offset;
    std::vector<std::vector<Simplex>> cells;
    for (const auto& [s, list] : strata) {
        std::size_t k = s.size() - 1;
        if (cells.size() <= k) cells.resize(k + 1);
        offset[s] = static_cast<int>(cells[k].size());
        for (const auto& st : list) cells[k].push_back({st.name, {}});
    }
    for (const auto& [s, list] : strata) {
        if (s.size() == 1) continue;
        std::size_t k = s.size() - 1;
        for (std::size_t a = 0; a < list.size(); ++a) {
            const Stratum& st = list[a];
            if (st.faces.size() != s.size())
                fail(ErrorKind::validation, "stratum " + st.name + " needs exactly " + std::to_string(s.size()) + " faces");
            Simplex& cell = cells[k][offset[s] + a];
            for (std::size_t j = 0; j < s.size(); ++j) {
                IndexSet t = without(s, j);
                auto it = st.faces.find(t);
                if (it == st.faces.end())
                    fail(ErrorKind::validation, "stratum " + st.name + " has no face on " + format_index_set(t));
                cell.faces.push_back(offset[t] + lookup(t, it->second, st.name));
            }
            // the two routes to every codimension-2 face must agree
            for (std::size_t j = 0; j < s.size(); ++j)
                for (std::size_t l = j + 1; l < s.size() && s.size() > 2; ++l) {
                    IndexSet tj = without(s, j), tl = without(s, l), u = without(tj, l - 1);
                    const auto& fj = strata[tj][lookup(tj, st.faces.at(tj), st.name)];
                    const auto& fl = strata[tl][lookup(tl, st.faces.at(tl), st.name)];
                    auto name_in = [&](const Stratum& f) {
                        if (u.size() == 1) return input.components[u[0]];
                        auto it = f.faces.find(u);
                        return it == f.faces.end() ? std::string() : it->second;
                    };
                    if (name_in(fj) != name_in(fl))
                        fail(ErrorKind::validation, "stratum " + st.name + " lies in two different strata of " + format_index_set(u));
                }
        }
    }
    return DeltaComplex(std::move(cells));
}

StrataInput complete_strata(std::vector<std::string> components, int max_size) {
    StrataInput in;
    in.components = std::move(components);
    int m = static_cast<int>(in.components.size());
    auto name_of = [&](const IndexSet& s) {
        if (s.size() == 1) return in.components[s[0]];
        return "Y" + format_index_set(s);
    };
    for (int size = 2; size <= std::min(max_size, m); ++size) {
        IndexSet s(size);
        std::vector<bool> pick(m, false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            s.clear();
            for (int i = 0; i < m; ++i)
                if (pick[i]) s.push_back(i);
            Stratum st{name_of(s), {}};
            for (std::size_t j = 0; j < s.size(); ++j) st.faces[without(s, j)] = name_of(without(s, j));
            in.strata[s].push_back(st);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return in;
}

long curve_rank(const std::vector<int>& branches, int components) {
    require_positive(components, "component count");
    long total = 0;
    for (int r : branches) {
        require_positive(r, "branch number");
        total += r - 1;
    }
    return total - (components - 1);
}

long curve_rank_relative(long cr, int points) {
    if (points < 0) fail(ErrorKind::validation, "point count must be nonnegative");
    if (points == 0) fail(ErrorKind::absolute_case, "no marked points: the relative rank is the absolute cr(C)");
    return cr + points - 1;
}

long genus_plane_curve(int degree, const std::vector<int>& deltas) {
    require_positive(degree, "degree");
    long g = static_cast<long>(degree - 1) * (degree - 2) / 2;
    for (int d : deltas) {
        if (d < 0) fail(ErrorKind::validation, "delta invariants must be nonnegative");
        g -= d;
    }
    if (g < 0) fail(ErrorKind::inconsistent_input, "delta invariants exceed the arithmetic genus " +
                                                       std::to_string((degree - 1) * (degree - 2) / 2));
    return g;
}

long genus_plane_curve_union(const std::vector<PlaneCurveComponent>& components) {
    long g = 0;
    for (const auto& c : components) g += genus_plane_curve(c.degree, c.deltas);
    return g;
}

Integer genus_smooth_hypersurface(int n, int degree) {
    require_positive(n, "dimension");
    require_positive(degree, "degree");
    return binomial(degree - 1, n);
}

Integer logforms_dim_ncd(int n, int degree) {
    require_positive(n, "dimension");
    require_positive(degree, "degree");
    return binomial(degree - 1, n);
}

}  // namespace hyperform
