#include "torloc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace torloc {

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_internal(nvars_ == o.nvars_, "polynomial add: variable count mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_internal(nvars_ == o.nvars_, "polynomial sub: variable count mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_internal(nvars_ == o.nvars_, "polynomial mul: variable count mismatch");
    Polynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exps e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
    return r;
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
    check_internal(static_cast<int>(point.size()) == nvars_, "polynomial eval: point size");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) r.terms_[e] = c;
    return r;
}

Polynomial Polynomial::substitute_linear(const std::vector<Vec>& images, int out_nvars) const {
    check_internal(static_cast<int>(images.size()) == nvars_, "substitute_linear: image count");
    // cache powers of each image as needed
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i)
        powers[i].push_back(Polynomial::constant(out_nvars, Rat(1)));
    Polynomial r(out_nvars);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(out_nvars, c);
        for (int i = 0; i < nvars_; ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i])
                powers[i].push_back(powers[i].back() * Polynomial::linear(images[i]));
            if (e[i] > 0) term = term * powers[i][e[i]];
        }
        r = r + term;
    }
    return r;
}

Rat Polynomial::content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (terms_.rbegin()->second < 0) content = -content;
    return content;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(Rat(1) / content());
}

std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) {
        if (nvars <= 26) {
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        } else {
            names.push_back("x" + std::to_string(i));
        }
    }
    return names;
}

namespace {

void print_monomial(std::ostream& os, const Exps& e, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << names[i];
        if (e[i] > 1) os << "^" << e[i];
    }
}

}  // namespace

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = var_names.empty() ? default_var_names(nvars_) : var_names;
    // print highest monomials first: degree, then reverse-lex on exponents
    std::vector<std::pair<Exps, Rat>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        Rat coef = c;
        if (first) {
            if (coef < 0) {
                os << "-";
                coef = -coef;
            }
        } else {
            os << (coef < 0 ? "-" : "+");
            if (coef < 0) coef = -coef;
        }
        first = false;
        bool has_vars = total_degree(e) > 0;
        if (!has_vars || coef != 1) os << coef;
        print_monomial(os, e, names);
    }
    return os.str();
}

std::string LinearForm::to_string(const std::vector<std::string>& var_names) const {
    return to_polynomial().to_string(var_names);
}

NormalizedForm normalize_form(const Vec& u) {
    require(!is_zero_vec(u), "normalize_form: zero vector");
    Int g = 0;
    for (const Int& x : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    int sign = 1;
    for (const Int& x : u) {
        if (x == 0) continue;
        if (x < 0) sign = -1;
        break;
    }
    NormalizedForm out;
    out.scale = g;
    out.sign = sign;
    out.form.coeffs.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out.form.coeffs[i] = u[i] / (sign * g);
    return out;
}

Polynomial divide_by_linear_form_exact(const Polynomial& p, const LinearForm& l) {
    require(!is_zero_vec(l.coeffs), "divide_by_linear_form_exact: zero form");
    const int n = p.nvars();
    check_internal(static_cast<int>(l.coeffs.size()) == p.nvars(),
                   "divide_by_linear_form_exact: variable count mismatch");
    if (p.is_zero()) return p;

    // Write l = a*x_pivot + B and p = sum_k c_k * x_pivot^k with c_k free of
    // the pivot variable.  Matching pivot powers in (a*x_pivot + B) * q gives
    // the backward recurrence q_{k-1} = (c_k - B*q_k) / a and the remainder
    // condition c_0 = B*q_0.
    int pivot = 0;
    while (l.coeffs[pivot] == 0) ++pivot;
    Rat lead(l.coeffs[pivot]);
    Vec b_coeffs = l.coeffs;
    b_coeffs[pivot] = 0;
    Polynomial b = Polynomial::linear(b_coeffs);

    std::map<int, Polynomial> slices;  // pivot exponent -> coefficient slice
    int top = 0;
    for (const auto& [e, c] : p.terms()) {
        Exps rest = e;
        int k = rest[pivot];
        rest[pivot] = 0;
        top = std::max(top, k);
        auto [it, inserted] = slices.emplace(k, Polynomial(n));
        it->second.add_term(rest, c);
    }
    if (top == 0) throw NotDivisibleError("polynomial is not divisible by the form");

    Polynomial quot(n);
    Polynomial carry(n);  // q_k while deriving q_{k-1}
    for (int k = top; k >= 1; --k) {
        Polynomial ck = slices.count(k) ? slices[k] : Polynomial(n);
        Polynomial qk = (ck - b * carry).scaled(Rat(1) / lead);
        for (const auto& [e, c] : qk.terms()) {
            Exps qe = e;
            qe[pivot] = k - 1;
            quot.add_term(qe, c);
        }
        carry = qk;
    }
    Polynomial c0 = slices.count(0) ? slices[0] : Polynomial(n);
    if (!(c0 - b * carry).is_zero())
        throw NotDivisibleError("polynomial is not divisible by the form");
    return quot;
}

}  // namespace torloc
