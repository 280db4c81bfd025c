#pragma once

#include <hyperform/arrangement.hpp>
#include <hyperform/rational_form.hpp>

#include <map>
#include <memory>
#include <vector>

namespace hyperform {

/// Rational combination of wedge monomials w_{i1} ^ ... ^ w_{ik}, i1 < ... < ik.
class OSElement {
public:
    using Terms = std::map<IndexSet, Rational>;

    explicit OSElement(int degree = 0) : degree_(degree) {}

    /// Monomial in any index order; sorted with the permutation sign, zero
    /// when an index repeats.
    static OSElement monomial(const IndexSet& indices, const Rational& c = 1);
    static OSElement one() { return monomial({}); }

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const IndexSet& s) const;

    /// Adds c to the coefficient of a sorted index set.
    void add(const IndexSet& sorted, const Rational& c);

    OSElement operator-() const;
    OSElement& operator+=(const OSElement& o);
    OSElement& operator-=(const OSElement& o);
    OSElement& operator*=(const Rational& c);
    friend OSElement operator+(OSElement a, const OSElement& b) { return a += b; }
    friend OSElement operator-(OSElement a, const OSElement& b) { return a -= b; }
    friend OSElement operator*(OSElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const OSElement&, const OSElement&) = default;

private:
    int degree_;
    Terms terms_;
};

OSElement wedge(const OSElement& a, const OSElement& b);

/// Alternating boundary sum_j (-1)^j e_{S - s_j}.
OSElement os_boundary(const IndexSet& s);

/// The Orlik-Solomon algebra of an arrangement with its nbc basis. Normal
/// form tables are built per degree on first use and shared between copies.
class OrlikSolomon {
public:
    explicit OrlikSolomon(Arrangement arr);

    const Arrangement& arrangement() const { return arr_; }
    const std::vector<IndexSet>& circuits() const { return circuits_; }
    const std::vector<IndexSet>& nbc(int k) const;

    /// Degree-k relations: non-intersecting monomials and e_T ^ d(e_S) for
    /// dependent intersecting S.
    std::vector<OSElement> relations(int k) const;

    /// The unique combination of nbc monomials congruent to x.
    OSElement normalize(const OSElement& x) const;
    bool is_normal(const OSElement& x) const;

private:
    struct Table;
    struct Cache;
    const Table& table(int k) const;

    Arrangement arr_;
    std::vector<IndexSet> circuits_;
    std::vector<std::vector<IndexSet>> nbc_;
    std::shared_ptr<Cache> cache_;
};

/// Residue along H_i by the trailing-factor rule, without normalizing.
/// index_map sends old indices to trace indices (-1 when the trace vanishes).
OSElement residue_monomials(const OSElement& x, int i, const std::vector<int>& index_map);

struct ResidueResult {
    Restriction restriction;
    OSElement element;  // nbc-normal on the restricted arrangement
};

ResidueResult residue(const OrlikSolomon& os, const OSElement& x, int i);

/// Res_I applied largest index first; x must have degree |I|.
Rational iterated_residue(const Arrangement& arr, const OSElement& x, const IndexSet& indices);

/// Iterated residues at every nbc n-set, in nbc order.
std::vector<std::pair<IndexSet, Rational>> corner_residues(const OrlikSolomon& os, const OSElement& x);

/// The 1-form attached to H_i: dlog f_i, or dlog(f_i / f0) with explicit infinity.
RationalForm generator_form(const Arrangement& arr, int i);

/// Expands every monomial as a wedge of generator forms, sums, and cancels
/// spurious factors.
RationalForm to_rational_form(const Arrangement& arr, const OSElement& x);

}  // namespace hyperform
