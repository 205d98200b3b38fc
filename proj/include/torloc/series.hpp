#pragma once

#include "torloc/rational_function.hpp"

namespace torloc {

// Power series in the local parameters t_i = x^{e_i^*} - 1 at the torus
// identity, truncated at a fixed total order.  No terms above the order are
// ever stored, so arithmetic is closed under the truncation.
class TruncatedSeries {
public:
    TruncatedSeries(int nvars, int order) : nvars_(nvars), order_(order) {}

    static TruncatedSeries constant(int nvars, int order, const Rat& c) {
        TruncatedSeries s(nvars, order);
        if (c != 0 && order >= 0) s.terms_[Exps(nvars, 0)] = c;
        return s;
    }

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Rat>& terms() const { return terms_; }

    void add_term(const Exps& e, const Rat& c) {
        if (c == 0 || total_degree(e) > order_) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rat& c) const;

    // lowest total degree with a nonzero term, or -1 if the series vanishes
    int lowest_degree() const;
    Polynomial homogeneous_part(int d) const;

private:
    int nvars_;
    int order_;
    std::map<Exps, Rat> terms_;
};

// Truncated expansion of the character x^u = prod_i (1 + t_i)^{u_i} in the
// local parameters at 1_T (geometric series for negative exponents).
TruncatedSeries char_series(const Vec& u, int order);

// A sum of terms x^w / prod_u (1 - x^u)^{mult}; the shape of cone Hilbert
// series.  Term order never affects the value.
struct LaurentGF {
    struct Term {
        Vec w;                  // numerator character
        std::map<Vec, int> den; // exponent vector -> multiplicity, each nonzero
    };
    int nvars = 0;
    std::vector<Term> terms;

    void add_term(const Vec& w, const std::vector<Vec>& den_factors);
    LaurentGF operator+(const LaurentGF& o) const;
    LaurentGF operator*(const LaurentGF& o) const;
};

// Principal part at 1_T: the quotient of the lowest nonvanishing homogeneous
// forms when the function is written over a common denominator, expanded to
// total order K.  Returns the form as a rational function in the cotangent
// coordinates (identified with the M-coordinates) plus its degree.
// Throws ZeroFunctionError for a term-free input and OrderBudgetExceededError
// when the numerator series vanishes identically up to order K.
std::pair<RationalFunctionLF, int> principal_part(const LaurentGF& gf, int order_budget);

// Retry policy: starts at K = nvars + max numerator character degree + 4 and
// doubles on OrderBudgetExceeded, capped at 64.
std::pair<RationalFunctionLF, int> principal_part_auto(const LaurentGF& gf);

// Exact equality of two Laurent generating functions as rational functions:
// the common-denominator numerator of the difference is a finite Laurent
// polynomial and must vanish identically.
bool gf_equal_exact(const LaurentGF& a, const LaurentGF& b);

}  // namespace torloc
