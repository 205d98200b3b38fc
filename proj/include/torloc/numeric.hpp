#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torloc {

using Int = mpz_class;
using Rat = mpq_class;

// A lattice vector in Z^n (row of a matrix, point of N or M).
using Vec = std::vector<Int>;

// Error categories map onto the CLI exit codes: validation -> 2,
// math incompatibility -> 3, internal invariant breach -> 4.
enum class ErrorKind { Validation, MathIncompat, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& w) : Error(ErrorKind::MathIncompat, w) {}
};
struct PoleAtPointError : Error {
    explicit PoleAtPointError(const std::string& w) : Error(ErrorKind::MathIncompat, w) {}
};
struct NotPolynomialError : Error {
    explicit NotPolynomialError(const std::string& w) : Error(ErrorKind::MathIncompat, w) {}
};
struct OrderBudgetExceededError : Error {
    explicit OrderBudgetExceededError(const std::string& w) : Error(ErrorKind::MathIncompat, w) {}
};
struct ZeroFunctionError : Error {
    explicit ZeroFunctionError(const std::string& w) : Error(ErrorKind::MathIncompat, w) {}
};
struct NotAFanError : Error {
    explicit NotAFanError(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct IncompatibleFiltrationsError : Error {
    explicit IncompatibleFiltrationsError(const std::string& w) : Error(ErrorKind::MathIncompat, w) {}
};
struct RankTooLargeError : Error {
    explicit RankTooLargeError(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error(ErrorKind::Internal, w) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ValidationError(what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

// Deterministic pseudo-random stream (splitmix64).  The standard
// distributions are not portable across library implementations, so all
// randomized tests and the documented equality-test seed go through this.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        if (hi <= lo) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // small rational with numerator in [-bound, bound] and denominator in [1, dbound]
    Rat rat(long bound, long dbound) {
        Rat r(range(-bound, bound), range(1, dbound));
        r.canonicalize();
        return r;
    }

private:
    std::uint64_t state_;
};

// Default seed for rational-function equality testing; TORLOC_SEED and the
// --seed flag override it in the CLI.
constexpr std::uint64_t kDefaultSeed = 0x7052c10cULL;

inline Vec vec_of(std::initializer_list<long> xs) {
    Vec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

inline bool is_zero_vec(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec vec_scale(const Int& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot_q(const Vec& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Int norm2(const Vec& a) { return dot(a, a); }

std::string vec_to_string(const Vec& v);

}  // namespace torloc
