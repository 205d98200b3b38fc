#include "torloc/series.hpp"

namespace torloc {

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_internal(nvars_ == o.nvars_, "series add: variable count mismatch");
    TruncatedSeries r(nvars_, std::min(order_, o.order_));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_internal(nvars_ == o.nvars_, "series sub: variable count mismatch");
    TruncatedSeries r(nvars_, std::min(order_, o.order_));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_internal(nvars_ == o.nvars_, "series mul: variable count mismatch");
    TruncatedSeries r(nvars_, std::min(order_, o.order_));
    for (const auto& [e1, c1] : terms_) {
        int d1 = total_degree(e1);
        for (const auto& [e2, c2] : o.terms_) {
            if (d1 + total_degree(e2) > r.order()) continue;
            Exps e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& c) const {
    TruncatedSeries r(nvars_, order_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
    return r;
}

int TruncatedSeries::lowest_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int td = total_degree(e);
        if (d == -1 || td < d) d = td;
    }
    return d;
}

Polynomial TruncatedSeries::homogeneous_part(int d) const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) p.add_term(e, c);
    return p;
}

TruncatedSeries char_series(const Vec& u, int order) {
    require(order >= 0, "char_series: negative order");
    const int n = static_cast<int>(u.size());
    TruncatedSeries acc = TruncatedSeries::constant(n, order, Rat(1));
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        TruncatedSeries factor(n, order);
        if (u[i] > 0) {
            // (1 + t_i)^m, finite binomial truncated at the order
            Int m = u[i];
            Rat coef = 1;
            for (int k = 0; k <= order; ++k) {
                if (k > 0) {
                    if (Int(k) > m) break;
                    coef *= Rat(m - (k - 1)) / Rat(k);
                }
                Exps e(n, 0);
                e[i] = k;
                factor.add_term(e, coef);
            }
        } else {
            // (1 + t_i)^{-m} = sum_k binom(m-1+k, k) (-t_i)^k
            Int m = -u[i];
            Rat coef = 1;
            for (int k = 0; k <= order; ++k) {
                if (k > 0) coef *= -Rat(m + (k - 1)) / Rat(k);
                Exps e(n, 0);
                e[i] = k;
                factor.add_term(e, coef);
            }
        }
        acc = acc * factor;
    }
    return acc;
}

void LaurentGF::add_term(const Vec& w, const std::vector<Vec>& den_factors) {
    Term t;
    t.w = w;
    for (const Vec& u : den_factors) {
        require(!is_zero_vec(u), "LaurentGF: zero denominator exponent");
        t.den[u] += 1;
    }
    terms.push_back(std::move(t));
}

LaurentGF LaurentGF::operator+(const LaurentGF& o) const {
    check_internal(nvars == o.nvars, "gf add: variable count mismatch");
    LaurentGF r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
}

LaurentGF LaurentGF::operator*(const LaurentGF& o) const {
    check_internal(nvars == o.nvars, "gf mul: variable count mismatch");
    LaurentGF r;
    r.nvars = nvars;
    for (const Term& a : terms)
        for (const Term& b : o.terms) {
            Term t;
            t.w = vec_add(a.w, b.w);
            t.den = a.den;
            for (const auto& [u, m] : b.den) t.den[u] += m;
            r.terms.push_back(std::move(t));
        }
    return r;
}

namespace {

// union multiset of all denominator exponents (max multiplicity per vector)
std::map<Vec, int> common_denominator(const LaurentGF& gf) {
    std::map<Vec, int> common;
    for (const LaurentGF::Term& t : gf.terms)
        for (const auto& [u, m] : t.den) {
            auto it = common.find(u);
            if (it == common.end())
                common[u] = m;
            else
                it->second = std::max(it->second, m);
        }
    return common;
}

}  // namespace

std::pair<RationalFunctionLF, int> principal_part(const LaurentGF& gf, int order_budget) {
    if (gf.terms.empty()) throw ZeroFunctionError("principal_part: zero function");
    const int n = gf.nvars;
    const int K = order_budget;

    std::map<Vec, int> common = common_denominator(gf);

    // numerator over the common denominator, as a truncated series
    TruncatedSeries numerator(n, K);
    for (const LaurentGF::Term& t : gf.terms) {
        TruncatedSeries part = char_series(t.w, K);
        for (const auto& [u, m] : common) {
            auto it = t.den.find(u);
            int missing = m - (it == t.den.end() ? 0 : it->second);
            if (missing == 0) continue;
            TruncatedSeries one = TruncatedSeries::constant(n, K, Rat(1));
            TruncatedSeries factor = one - char_series(u, K);
            for (int k = 0; k < missing; ++k) part = part * factor;
        }
        numerator = numerator + part;
    }

    int low = numerator.lowest_degree();
    if (low < 0)
        throw OrderBudgetExceededError("principal_part: numerator vanishes to the order budget");
    Polynomial num_form = numerator.homogeneous_part(low);

    // denominator leading form: each (1 - x^u) contributes -u
    Rat scalar = 1;
    std::vector<Vec> den_forms;
    int den_degree = 0;
    for (const auto& [u, m] : common)
        for (int k = 0; k < m; ++k) {
            scalar /= Rat(-1);
            den_forms.push_back(u);
            ++den_degree;
        }
    RationalFunctionLF result = RationalFunctionLF::quotient(scalar, num_form, den_forms);
    return {result, low - den_degree};
}

std::pair<RationalFunctionLF, int> principal_part_auto(const LaurentGF& gf) {
    if (gf.terms.empty()) throw ZeroFunctionError("principal_part: zero function");
    int max_char = 0;
    for (const LaurentGF::Term& t : gf.terms) {
        int d = 0;
        for (const Int& x : t.w) d += static_cast<int>(Int(abs(x)).get_ui());
        max_char = std::max(max_char, d);
    }
    int budget = gf.nvars + max_char + 4;
    while (true) {
        try {
            return principal_part(gf, std::min(budget, 64));
        } catch (const OrderBudgetExceededError&) {
            if (budget >= 64) throw;
            budget *= 2;
        }
    }
}

bool gf_equal_exact(const LaurentGF& a, const LaurentGF& b) {
    check_internal(a.nvars == b.nvars, "gf_equal_exact: variable count mismatch");
    LaurentGF diff = a;
    for (const LaurentGF::Term& t : b.terms) diff.terms.push_back(t);
    std::size_t asize = a.terms.size();

    std::map<Vec, int> common = common_denominator(diff);
    // exact Laurent-polynomial numerator: sum_t sign * x^{w_t} * prod missing (1 - x^u)
    std::map<Vec, Rat> acc;
    auto add = [&acc](const Vec& e, const Rat& c) {
        auto it = acc.find(e);
        if (it == acc.end()) {
            if (c != 0) acc.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) acc.erase(it);
        }
    };
    for (std::size_t ti = 0; ti < diff.terms.size(); ++ti) {
        const LaurentGF::Term& t = diff.terms[ti];
        Rat sign = ti < asize ? 1 : -1;
        std::map<Vec, Rat> part;
        part[t.w] = sign;
        for (const auto& [u, m] : common) {
            auto it = t.den.find(u);
            int missing = m - (it == t.den.end() ? 0 : it->second);
            for (int k = 0; k < missing; ++k) {
                std::map<Vec, Rat> next;
                for (const auto& [e, c] : part) {
                    next[e] += c;
                    next[vec_add(e, u)] -= c;
                }
                for (auto it2 = next.begin(); it2 != next.end();)
                    it2 = it2->second == 0 ? next.erase(it2) : std::next(it2);
                part = std::move(next);
            }
        }
        for (const auto& [e, c] : part) add(e, c);
    }
    return acc.empty();
}

}  // namespace torloc
