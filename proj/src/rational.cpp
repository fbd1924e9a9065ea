#include "covlat/rational.hpp"

#include <cctype>

namespace covlat {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() <= 0) throw ParseError("zero denominator: " + s);
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_from_decimal(const std::string& s) {
    std::string t = s;
    bool negative = false;
    size_t pos = 0;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
        negative = (t[pos] == '-');
        ++pos;
    }
    std::string digits;
    size_t frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < t.size(); ++pos) {
        char c = t[pos];
        if (c == '.') {
            if (seen_dot) throw ParseError("bad decimal literal: " + s);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac_len;
            seen_digit = true;
        } else {
            throw ParseError("bad decimal literal: " + s);
        }
    }
    if (!seen_digit) throw ParseError("bad decimal literal: " + s);
    Integer num(digits.empty() ? "0" : digits);
    if (negative) num = -num;
    Integer den = integer_pow(10, static_cast<unsigned>(frac_len));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    r.canonicalize();
    return r;
}

Integer integer_pow(const Integer& base, unsigned exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer floor_rat(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_rat(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer round_rat(const Rational& r) {
    return floor_rat(r + Rational(1, 2));
}

}  // namespace covlat
