#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace semicurve {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct range_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct divisibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Truncation order N too small to certify the requested answer.
struct truncation_error : std::runtime_error {
    truncation_error(const std::string& msg, long long suggested)
        : std::runtime_error(msg), suggested_order(suggested) {}
    long long suggested_order;
};

// Exact coefficient fields for the ring model.

struct RationalField {
    using Elem = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_pair(const Int& num, const Int& den) const {
        if (den == 0) throw input_error("rational with zero denominator");
        return Rational(num, den);
    }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw input_error("division by zero");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
};

struct PrimeField {
    long long p = 10007;
    using Elem = long long;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem reduce(Int x) const {
        Int m = x % p;
        if (m < 0) m += p;
        return static_cast<long long>(m);
    }
    Elem from_pair(const Int& num, const Int& den) const {
        return mul(reduce(num), inv(reduce(den)));
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<__int128>(a) * b % p);
    }
    Elem neg(Elem a) const { return (p - a) % p; }
    Elem inv(Elem a) const {
        if (a == 0) throw input_error("division by zero in F_p");
        // extended Euclid
        long long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p;
        return t;
    }
    bool is_zero(Elem a) const { return a == 0; }
};

}  // namespace semicurve
