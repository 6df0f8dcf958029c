#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace gleafkit {

// Exact rational arithmetic everywhere; no floating point in core modules.
// Arbitrary-precision integers: gluing probability tables compounds
// denominators multiplicatively, which overflows 64-bit backing already at
// five variables.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

Rat parse_rat(const std::string& s);
std::string format_rat(const Rat& r);

/// Nonnegative rational extended with +infinity; closed under + and min.
struct ExtRat {
    bool is_inf = false;
    Rat value{0};

    ExtRat() = default;
    ExtRat(Rat v) : value(v) {
        if (v < Rat(0)) throw std::domain_error("ExtRat: negative value");
    }
    ExtRat(long long v) : ExtRat(Rat(v)) {}

    static ExtRat infinity() {
        ExtRat e;
        e.is_inf = true;
        return e;
    }

    bool finite() const { return !is_inf; }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.is_inf || b.is_inf) return infinity();
        return ExtRat(a.value + b.value);
    }
    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.is_inf != b.is_inf) return false;
        return a.is_inf || a.value == b.value;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.is_inf) return false;
        if (b.is_inf) return true;
        return a.value < b.value;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

ExtRat parse_extrat(const std::string& s);
std::string format_extrat(const ExtRat& e);

}  // namespace gleafkit
