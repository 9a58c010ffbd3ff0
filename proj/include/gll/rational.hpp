#ifndef GLL_RATIONAL_HPP
#define GLL_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gll {

/// Exact rational on int64, always normalized with den > 0.  Parameter
/// samplers build constrained exponent tuples with these so balance
/// equations hold exactly before any conversion to double.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_zero() const { return num == 0; }

    Rat reciprocal() const {
        if (num == 0) throw std::invalid_argument("Rat: reciprocal of zero");
        return Rat(den, num);
    }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(Rat a, Rat b) { return a * b.reciprocal(); }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Rat a, Rat b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rat a, Rat b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator>=(Rat a, Rat b) { return b <= a; }
};

/// Lorentz index from its reciprocal: Rat(0) means the index is infinite.
inline double index_from_reciprocal(Rat inv) {
    if (inv.is_zero()) return std::numeric_limits<double>::infinity();
    return inv.reciprocal().to_double();
}

}  // namespace gll

#endif
