#include "regseq/rational.hpp"

#include <stdexcept>

namespace regseq {

Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpz_class num(std::string(s), 10);
            return Rational(num);
        }
        mpz_class num(std::string(s.substr(0, slash)), 10);
        mpz_class den(std::string(s.substr(slash + 1)), 10);
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
    }
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

}  // namespace regseq
