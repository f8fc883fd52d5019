#include "carnot/rational.hpp"

#include <ostream>

namespace carnot {

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    }
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(num, den);  // already coprime, ctor canonicalizes cheaply
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace carnot
