#pragma once

#include <map>

#include "torloc/numeric.hpp"

namespace torloc {

// Exponent tuple of a monomial; nonnegative entries, length = variable count.
using Exps = std::vector<int>;

inline int total_degree(const Exps& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Multivariate polynomial over Q.  Terms are kept in a map with no zero
// coefficients, so representation is canonical.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rat& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[Exps(nvars, 0)] = c;
        return p;
    }

    static Polynomial variable(int nvars, int i, const Rat& c = Rat(1)) {
        Polynomial p(nvars);
        if (c != 0) {
            Exps e(nvars, 0);
            e[i] = 1;
            p.terms_[e] = c;
        }
        return p;
    }

    static Polynomial monomial(int nvars, const Exps& e, const Rat& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    // linear form with the given integer coordinates
    static Polynomial linear(const Vec& coeffs) {
        Polynomial p(static_cast<int>(coeffs.size()));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            Exps e(coeffs.size(), 0);
            e[i] = 1;
            p.terms_[e] = Rat(coeffs[i]);
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Rat>& terms() const { return terms_; }

    int degree() const {  // max total degree, -1 for the zero polynomial
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    bool is_homogeneous(int d) const {
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& [e, c] : terms_)
            if (c.get_den() != 1) return false;
        return true;
    }

    void add_term(const Exps& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rat& c) const;

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rat eval(const std::vector<Rat>& point) const;

    // degree-d graded piece
    Polynomial homogeneous_part(int d) const;

    // substitute variable i by the linear form images[i] (in out_nvars variables)
    Polynomial substitute_linear(const std::vector<Vec>& images, int out_nvars) const;

    // gcd of coefficient numerators over lcm of denominators, signed so that the
    // lexicographically largest monomial has positive coefficient; 0 for the
    // zero polynomial.  p == content * primitive_part.
    Rat content() const;
    Polynomial primitive_part() const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_;
    std::map<Exps, Rat> terms_;
};

// Default variable names a, b, c, ... used for M-coordinates.
std::vector<std::string> default_var_names(int nvars);

// Primitive sign-normalized integer linear form: gcd of coefficients is 1 and
// the first nonzero coefficient is positive.  Comparable, so denominator
// multisets are canonical.
struct LinearForm {
    Vec coeffs;

    bool operator<(const LinearForm& o) const { return coeffs < o.coeffs; }
    bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }

    Polynomial to_polynomial() const { return Polynomial::linear(coeffs); }
    Rat eval(const std::vector<Rat>& point) const { return dot_q(coeffs, point); }
    std::string to_string(const std::vector<std::string>& var_names = {}) const;
};

// Factorization u = sign * scale * form with form primitive normalized,
// scale > 0.  Errors on the zero vector.
struct NormalizedForm {
    LinearForm form;
    Int scale;
    int sign;
};
NormalizedForm normalize_form(const Vec& u);

// Exact division p / l; throws NotDivisibleError when the division has a
// remainder, which certifies a failed divisibility claim.
Polynomial divide_by_linear_form_exact(const Polynomial& p, const LinearForm& l);

}  // namespace torloc
