#pragma once

#include "torloc/polynomial.hpp"

namespace torloc {

// Homogeneous-friendly rational function whose denominator is a multiset of
// primitive linear forms: scalar * num / prod(form^mult).  Kept reduced by
// trial division, with numerator content folded into the scalar, so equal
// values have equal representations.
class RationalFunctionLF {
public:
    RationalFunctionLF() : nvars_(0), scalar_(0), num_(0) {}
    explicit RationalFunctionLF(int nvars)
        : nvars_(nvars), scalar_(0), num_(nvars) {}

    static RationalFunctionLF from_polynomial(const Polynomial& p);
    static RationalFunctionLF constant(int nvars, const Rat& c) {
        return from_polynomial(Polynomial::constant(nvars, c));
    }
    // scalar * num / prod factors (factors given as raw integer vectors;
    // scales and signs are absorbed into the scalar)
    static RationalFunctionLF quotient(const Rat& scalar, const Polynomial& num,
                                       const std::vector<Vec>& denominator_factors);

    int nvars() const { return nvars_; }
    bool is_zero() const { return scalar_ == 0; }
    const Rat& scalar() const { return scalar_; }
    const Polynomial& num() const { return num_; }
    const std::map<LinearForm, int>& den() const { return den_; }

    // deg(num) - sum of denominator multiplicities (for homogeneous values)
    int degree() const;
    bool is_homogeneous() const { return num_.is_homogeneous(num_.degree()); }

    RationalFunctionLF operator+(const RationalFunctionLF& o) const;
    RationalFunctionLF operator-(const RationalFunctionLF& o) const;
    RationalFunctionLF operator-() const;
    RationalFunctionLF operator*(const RationalFunctionLF& o) const;
    RationalFunctionLF mul_poly(const Polynomial& p) const;
    RationalFunctionLF scaled(const Rat& c) const;

    // structural equality of the reduced canonical form; coincides with value
    // equality because reduced representations are unique
    bool operator==(const RationalFunctionLF& o) const {
        return nvars_ == o.nvars_ && scalar_ == o.scalar_ && num_ == o.num_ && den_ == o.den_;
    }

    Rat eval(const std::vector<Rat>& point) const;  // throws PoleAtPointError

    // clears every denominator factor by exact division; throws
    // NotPolynomialError if any factor fails
    Polynomial to_polynomial() const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    void normalize();

    int nvars_;
    Rat scalar_;
    Polynomial num_;
    std::map<LinearForm, int> den_;
};

// Sum over a common denominator in one pass; same value as folding with
// operator+ but with far less intermediate swell.
RationalFunctionLF rf_sum(const std::vector<RationalFunctionLF>& terms, int nvars);

// Equality by evaluation at `trials` deterministic pseudo-random rational
// points avoiding the denominator hyperplanes of both sides (the documented
// equality-test procedure; the seed makes runs reproducible).
bool rf_equal_eval(const RationalFunctionLF& x, const RationalFunctionLF& y, Rng& rng,
                   int trials = 5);

// A point avoiding all denominator hyperplanes of the given functions.
std::vector<Rat> rf_nonpole_point(const std::vector<const RationalFunctionLF*>& fns, int nvars,
                                  Rng& rng);

}  // namespace torloc
