#include "torloc/rational_function.hpp"

#include <sstream>

namespace torloc {

RationalFunctionLF RationalFunctionLF::from_polynomial(const Polynomial& p) {
    RationalFunctionLF r(p.nvars());
    r.num_ = p;
    r.scalar_ = 1;
    r.normalize();
    return r;
}

RationalFunctionLF RationalFunctionLF::quotient(const Rat& scalar, const Polynomial& num,
                                                const std::vector<Vec>& denominator_factors) {
    RationalFunctionLF r(num.nvars());
    r.scalar_ = scalar;
    r.num_ = num;
    for (const Vec& u : denominator_factors) {
        NormalizedForm nf = normalize_form(u);
        r.scalar_ /= Rat(nf.sign * nf.scale);
        r.den_[nf.form] += 1;
    }
    r.normalize();
    return r;
}

void RationalFunctionLF::normalize() {
    if (scalar_ == 0 || num_.is_zero()) {
        scalar_ = 0;
        num_ = Polynomial(nvars_);
        den_.clear();
        return;
    }
    // Reduce by trial division against each denominator factor.  Linear forms
    // are irreducible, so one pass per factor is exhaustive.
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            try {
                num_ = divide_by_linear_form_exact(num_, it->first);
                it->second -= 1;
            } catch (const NotDivisibleError&) {
                break;
            }
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    Rat c = num_.content();
    scalar_ *= c;
    num_ = num_.scaled(Rat(1) / c);
}

int RationalFunctionLF::degree() const {
    int mults = 0;
    for (const auto& [f, m] : den_) mults += m;
    return num_.degree() - mults;
}

RationalFunctionLF RationalFunctionLF::operator+(const RationalFunctionLF& o) const {
    return rf_sum({*this, o}, nvars_);
}

RationalFunctionLF RationalFunctionLF::operator-(const RationalFunctionLF& o) const {
    return rf_sum({*this, -o}, nvars_);
}

RationalFunctionLF RationalFunctionLF::operator-() const {
    RationalFunctionLF r = *this;
    r.scalar_ = -r.scalar_;
    return r;
}

RationalFunctionLF RationalFunctionLF::operator*(const RationalFunctionLF& o) const {
    check_internal(nvars_ == o.nvars_, "rf mul: variable count mismatch");
    if (is_zero() || o.is_zero()) return RationalFunctionLF(nvars_);
    RationalFunctionLF r(nvars_);
    r.scalar_ = scalar_ * o.scalar_;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (const auto& [f, m] : o.den_) r.den_[f] += m;
    r.normalize();
    return r;
}

RationalFunctionLF RationalFunctionLF::mul_poly(const Polynomial& p) const {
    check_internal(nvars_ == p.nvars(), "rf mul_poly: variable count mismatch");
    if (is_zero() || p.is_zero()) return RationalFunctionLF(nvars_);
    RationalFunctionLF r = *this;
    r.num_ = r.num_ * p;
    r.normalize();
    return r;
}

RationalFunctionLF RationalFunctionLF::scaled(const Rat& c) const {
    RationalFunctionLF r = *this;
    r.scalar_ *= c;
    if (r.scalar_ == 0) r = RationalFunctionLF(nvars_);
    return r;
}

Rat RationalFunctionLF::eval(const std::vector<Rat>& point) const {
    if (is_zero()) return Rat(0);
    Rat value = scalar_ * num_.eval(point);
    for (const auto& [f, m] : den_) {
        Rat fv = f.eval(point);
        if (fv == 0) throw PoleAtPointError("denominator factor vanishes at the point");
        for (int k = 0; k < m; ++k) value /= fv;
    }
    return value;
}

Polynomial RationalFunctionLF::to_polynomial() const {
    if (is_zero()) return Polynomial(nvars_);
    Polynomial p = num_;
    for (const auto& [f, m] : den_)
        for (int k = 0; k < m; ++k) {
            try {
                p = divide_by_linear_form_exact(p, f);
            } catch (const NotDivisibleError&) {
                throw NotPolynomialError("rational function is not a polynomial");
            }
        }
    return p.scaled(scalar_);
}

std::string RationalFunctionLF::to_string(const std::vector<std::string>& var_names) const {
    if (is_zero()) return "0";
    std::vector<std::string> names = var_names.empty() ? default_var_names(nvars_) : var_names;
    Polynomial scaled_num = num_.scaled(scalar_);
    std::ostringstream os;
    if (scaled_num.is_integral() || den_.empty()) {
        std::string ns = scaled_num.to_string(names);
        if (!den_.empty() && scaled_num.terms().size() > 1)
            os << "(" << ns << ")";
        else
            os << ns;
    } else {
        // keep exact rationals visible: print (p/q)*(primitive numerator)
        os << "(" << scalar_ << ")";
        if (!num_.terms().empty() &&
            !(num_.terms().size() == 1 && total_degree(num_.terms().begin()->first) == 0))
            os << "*(" << num_.to_string(names) << ")";
    }
    if (den_.empty()) return os.str();
    os << "/";
    // bare tokens for single-variable factors, parens otherwise; bare
    // neighbors are separated by a space ("1/(a b)", "2/((a-b)(a+b))")
    std::vector<std::pair<std::string, bool>> tokens;  // text, is_bare
    for (const auto& [f, m] : den_) {
        int nz = 0;
        for (const Int& c : f.coeffs)
            if (c != 0) ++nz;
        bool bare = nz == 1;
        std::string text = bare ? f.to_string(names) : "(" + f.to_string(names) + ")";
        if (m > 1) text += "^" + std::to_string(m);
        tokens.emplace_back(text, bare);
    }
    if (tokens.size() == 1) {
        os << tokens[0].first;
    } else {
        os << "(";
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i && tokens[i - 1].second && tokens[i].second) os << " ";
            os << tokens[i].first;
        }
        os << ")";
    }
    return os.str();
}

RationalFunctionLF rf_sum(const std::vector<RationalFunctionLF>& terms, int nvars) {
    std::map<LinearForm, int> common;
    for (const RationalFunctionLF& t : terms) {
        if (t.is_zero()) continue;
        check_internal(t.nvars() == nvars, "rf_sum: variable count mismatch");
        for (const auto& [f, m] : t.den()) {
            auto it = common.find(f);
            if (it == common.end())
                common[f] = m;
            else
                it->second = std::max(it->second, m);
        }
    }
    Polynomial acc(nvars);
    for (const RationalFunctionLF& t : terms) {
        if (t.is_zero()) continue;
        Polynomial part = t.num().scaled(t.scalar());
        for (const auto& [f, m] : common) {
            auto it = t.den().find(f);
            int missing = m - (it == t.den().end() ? 0 : it->second);
            for (int k = 0; k < missing; ++k) part = part * f.to_polynomial();
        }
        acc = acc + part;
    }
    std::vector<Vec> factors;
    for (const auto& [f, m] : common)
        for (int k = 0; k < m; ++k) factors.push_back(f.coeffs);
    return RationalFunctionLF::quotient(Rat(1), acc, factors);
}

std::vector<Rat> rf_nonpole_point(const std::vector<const RationalFunctionLF*>& fns, int nvars,
                                  Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rat> point;
        point.reserve(nvars);
        for (int i = 0; i < nvars; ++i) point.push_back(rng.rat(12, 5));
        bool ok = true;
        for (const RationalFunctionLF* f : fns) {
            for (const auto& [form, m] : f->den())
                if (form.eval(point) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return point;
    }
    throw InternalError("rf_nonpole_point: could not avoid poles");
}

bool rf_equal_eval(const RationalFunctionLF& x, const RationalFunctionLF& y, Rng& rng,
                   int trials) {
    check_internal(x.nvars() == y.nvars(), "rf_equal_eval: variable count mismatch");
    for (int t = 0; t < trials; ++t) {
        std::vector<Rat> point = rf_nonpole_point({&x, &y}, x.nvars(), rng);
        if (x.eval(point) != y.eval(point)) return false;
    }
    return true;
}

}  // namespace torloc
