#include "gleafkit/rational.hpp"

namespace gleafkit {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

std::string format_rat(const Rat& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

ExtRat parse_extrat(const std::string& s) {
    if (s == "inf") return ExtRat::infinity();
    return ExtRat(parse_rat(s));
}

std::string format_extrat(const ExtRat& e) {
    if (e.is_inf) return "inf";
    return format_rat(e.value);
}

}  // namespace gleafkit
