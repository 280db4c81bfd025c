#include <hyperform/error.hpp>
#include <hyperform/orlik_solomon.hpp>

#include <algorithm>
#include <functional>
#include <mutex>

namespace hyperform {

OSElement OSElement::monomial(const IndexSet& indices, const Rational& c) {
    OSElement e(static_cast<int>(indices.size()));
    int s = shuffle_sign(indices, {});
    if (s == 0 || c == 0) return e;
    IndexSet sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    e.terms_.emplace(std::move(sorted), c * s);
    return e;
}

Rational OSElement::coefficient(const IndexSet& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

void OSElement::add(const IndexSet& sorted, const Rational& c) {
    if (static_cast<int>(sorted.size()) != degree_) fail(ErrorKind::dimension, "monomial of the wrong degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(sorted, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

OSElement OSElement::operator-() const {
    OSElement r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
}

OSElement& OSElement::operator+=(const OSElement& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    if (o.degree_ != degree_) fail(ErrorKind::dimension, "adding elements of different degree");
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

OSElement& OSElement::operator-=(const OSElement& o) { return *this += -o; }

OSElement& OSElement::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [s, v] : terms_) v *= c;
    return *this;
}

OSElement wedge(const OSElement& a, const OSElement& b) {
    OSElement r(a.degree() + b.degree());
    for (const auto& [s, c] : a.terms())
        for (const auto& [t, d] : b.terms()) {
            int sg = shuffle_sign(s, t);
            if (sg == 0) continue;
            IndexSet u = s;
            u.insert(u.end(), t.begin(), t.end());
            std::sort(u.begin(), u.end());
            r.add(u, c * d * sg);
        }
    return r;
}

OSElement os_boundary(const IndexSet& s) {
    OSElement r(s.empty() ? 0 : static_cast<int>(s.size()) - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
        IndexSet t = s;
        t.erase(t.begin() + j);
        r += OSElement::monomial(t, j % 2 == 0 ? 1 : -1);
    }
    return r;
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const IndexSet&)>& f) {
    if (k < 0 || k > n) return;
    IndexSet c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        f(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

// Normal form of degree k: every non-nbc monomial as a combination of nbc
// monomials.
struct OrlikSolomon::Table {
    std::map<IndexSet, int> nbc_column;
    std::map<IndexSet, std::vector<std::pair<int, Rational>>> reduce;
};

struct OrlikSolomon::Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const Table>> tables;
};

OrlikSolomon::OrlikSolomon(Arrangement arr)
    : arr_(std::move(arr)), circuits_(hyperform::circuits(arr_)), cache_(std::make_shared<Cache>()) {
    for (int k = 0; k <= arr_.dim(); ++k) nbc_.push_back(nbc_sets(arr_, k));
}

const std::vector<IndexSet>& OrlikSolomon::nbc(int k) const {
    if (k < 0 || k > arr_.dim()) fail(ErrorKind::validation, "degree must lie in [0, n]");
    return nbc_[k];
}

std::vector<OSElement> OrlikSolomon::relations(int k) const {
    std::vector<OSElement> out;
    int n = arr_.size();
    for_each_subset(n, k, [&](const IndexSet& u) {
        if (!arr_.intersecting(u)) out.push_back(OSElement::monomial(u));
    });
    // dependent intersecting S with |S| <= k + 1, smallest first
    for (int m = 3; m <= k + 1; ++m)
        for_each_subset(n, m, [&](const IndexSet& s) {
            if (arr_.independent(s) || !arr_.intersecting(s)) return;
            OSElement ds = os_boundary(s);
            for_each_subset(n, k + 1 - m, [&](const IndexSet& t) {
                if (std::find_first_of(t.begin(), t.end(), s.begin(), s.end()) != t.end()) return;
                OSElement r = wedge(OSElement::monomial(t), ds);
                if (!r.is_zero()) out.push_back(std::move(r));
            });
        });
    return out;
}

const OrlikSolomon::Table& OrlikSolomon::table(int k) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->tables.find(k);
    if (it != cache_->tables.end()) return *it->second;

    auto t = std::make_shared<Table>();
    const auto& basis = nbc(k);
    std::vector<IndexSet> columns;  // non-nbc first, then nbc
    std::map<IndexSet, int> col;
    for_each_subset(arr_.size(), k, [&](const IndexSet& s) {
        if (!std::binary_search(basis.begin(), basis.end(), s)) columns.push_back(s);
    });
    std::size_t non_nbc = columns.size();
    for (const auto& s : basis) columns.push_back(s);
    for (std::size_t c = 0; c < columns.size(); ++c) col[columns[c]] = static_cast<int>(c);
    for (std::size_t c = non_nbc; c < columns.size(); ++c) t->nbc_column[columns[c]] = static_cast<int>(c - non_nbc);

    // Sparse incremental elimination; rows keyed by pivot column.
    using Row = std::map<int, Rational>;
    std::map<int, Row> echelon;
    auto reduce_row = [&](Row row) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto e = echelon.find(lead->first);
            if (e == echelon.end()) break;
            Rational f = lead->second;
            for (const auto& [c, v] : e->second) {
                Rational& x = row[c];
                x -= f * v;
                if (x == 0) row.erase(c);
            }
        }
        return row;
    };
    for (const auto& rel : relations(k)) {
        if (echelon.size() == non_nbc) break;
        Row row;
        for (const auto& [s, c] : rel.terms()) row[col.at(s)] = c;
        row = reduce_row(std::move(row));
        if (row.empty()) continue;
        int p = row.begin()->first;
        if (static_cast<std::size_t>(p) >= non_nbc)
            fail(ErrorKind::internal, "nbc monomials of degree " + std::to_string(k) + " are dependent modulo relations");
        Rational inv = 1 / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        echelon.emplace(p, std::move(row));
    }
    if (echelon.size() != non_nbc)
        fail(ErrorKind::internal, "relation rank " + std::to_string(echelon.size()) + " differs from the " +
                                      std::to_string(non_nbc) + " non-nbc monomials in degree " + std::to_string(k));
    // back-substitute so each row involves only its pivot and nbc columns
    for (auto it2 = echelon.rbegin(); it2 != echelon.rend(); ++it2) {
        Row& row = it2->second;
        for (;;) {
            auto other = std::find_if(std::next(row.begin()), row.end(), [&](const auto& cv) {
                return static_cast<std::size_t>(cv.first) < non_nbc;
            });
            if (other == row.end()) break;
            int c = other->first;
            Rational f = other->second;
            for (const auto& [cc, v] : echelon.at(c)) {
                Rational& x = row[cc];
                x -= f * v;
                if (x == 0) row.erase(cc);
            }
        }
        auto& red = t->reduce[columns[it2->first]];
        for (const auto& [c, v] : row)
            if (c != it2->first) red.emplace_back(c - static_cast<int>(non_nbc), -v);
    }
    auto [pos, _] = cache_->tables.emplace(k, std::move(t));
    return *pos->second;
}

OSElement OrlikSolomon::normalize(const OSElement& x) const {
    int k = x.degree();
    if (k > arr_.dim()) return OSElement(k);
    for (const auto& [s, c] : x.terms())
        for (int i : s)
            if (i < 0 || i >= arr_.size()) fail(ErrorKind::validation, "monomial index out of range");
    const Table& t = table(k);
    const auto& basis = nbc(k);
    OSElement r(k);
    for (const auto& [s, c] : x.terms()) {
        auto n = t.nbc_column.find(s);
        if (n != t.nbc_column.end()) {
            r.add(s, c);
            continue;
        }
        for (const auto& [j, v] : t.reduce.at(s)) r.add(basis[j], c * v);
    }
    return r;
}

bool OrlikSolomon::is_normal(const OSElement& x) const {
    if (x.degree() > arr_.dim()) return x.is_zero();
    const auto& basis = nbc(x.degree());
    return std::all_of(x.terms().begin(), x.terms().end(),
                       [&](const auto& t) { return std::binary_search(basis.begin(), basis.end(), t.first); });
}

OSElement residue_monomials(const OSElement& x, int i, const std::vector<int>& index_map) {
    OSElement r(std::max(0, x.degree() - 1));
    for (const auto& [s, c] : x.terms()) {
        auto pos = std::find(s.begin(), s.end(), i);
        if (pos == s.end()) continue;
        int k = static_cast<int>(s.size());
        int p = static_cast<int>(pos - s.begin()) + 1;
        IndexSet image;
        bool vanishes = false;
        for (int j : s) {
            if (j == i) continue;
            int m = index_map.at(j);
            if (m < 0) vanishes = true;
            image.push_back(m);
        }
        if (vanishes) continue;
        r += OSElement::monomial(image, (k - p) % 2 == 0 ? c : Rational(-c));
    }
    return r;
}

ResidueResult residue(const OrlikSolomon& os, const OSElement& x, int i) {
    Restriction r = restriction(os.arrangement(), i);
    OSElement raw = residue_monomials(x, i, r.index_map);
    OrlikSolomon sub(r.arrangement);
    OSElement e = sub.normalize(raw);
    return {std::move(r), std::move(e)};
}

Rational iterated_residue(const Arrangement& arr, const OSElement& x, const IndexSet& indices) {
    if (static_cast<int>(indices.size()) != x.degree())
        fail(ErrorKind::dimension, "iterated residue needs as many hyperplanes as the degree");
    Arrangement current = arr;
    OSElement e = x;
    std::vector<int> where(arr.size());  // original index -> current index
    for (int j = 0; j < arr.size(); ++j) where[j] = j;
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
        int i = where.at(*it);
        if (i < 0) return 0;
        if (e.is_zero()) return 0;
        Restriction r = restriction(current, i);
        e = residue_monomials(e, i, r.index_map);
        for (auto& w : where) w = w < 0 ? -1 : r.index_map[w];
        current = r.arrangement;
    }
    return e.coefficient({});
}

std::vector<std::pair<IndexSet, Rational>> corner_residues(const OrlikSolomon& os, const OSElement& x) {
    int n = os.arrangement().dim();
    std::vector<std::pair<IndexSet, Rational>> out;
    for (const auto& s : os.nbc(n))
        out.emplace_back(s, x.degree() == n && !x.is_zero() ? iterated_residue(os.arrangement(), x, s) : Rational(0));
    return out;
}

RationalForm generator_form(const Arrangement& arr, int i) {
    RationalForm w = RationalForm::dlog(arr[i]);
    if (arr.infinity().kind == InfinityKind::explicit_plane) w -= RationalForm::dlog(*arr.infinity().f0);
    return w;
}

RationalForm to_rational_form(const Arrangement& arr, const OSElement& x) {
    int n = arr.dim();
    if (x.degree() > n) fail(ErrorKind::dimension, "element degree exceeds the dimension");
    std::vector<RationalForm> gens;
    for (int i = 0; i < arr.size(); ++i) gens.push_back(generator_form(arr, i));
    RationalForm sum(n, x.degree());
    for (const auto& [s, c] : x.terms()) {
        RationalForm term = RationalForm::scalar(n, MultiPoly::constant(n, c));
        for (int i : s) term = wedge(term, gens.at(i));
        sum += term;
    }
    return sum.cancelled();
}

}  // namespace hyperform
