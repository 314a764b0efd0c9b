#include "slc/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace slc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits))
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    return mpz_class(std::string(text.front() == '+' ? text.substr(1) : text), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), whole);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        mpz_class den(std::string(den_text), 10);
        if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(whole) + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    }

    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part)))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        std::string digits = std::string(int_part) + std::string(frac_part);
        mpz_class num(digits.empty() ? std::string("0") : digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        if (negative) num = -num;
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    }

    return Rational(mpq_class(parse_integer(text, whole)));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal_str() const {
    mpz_class den = value_.get_den();
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", to_double());
        return buf;
    }
    const unsigned places = std::max(1u, std::max(twos, fives));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    mpz_class scaled = ::abs(value_.get_num()) * scale / value_.get_den();
    std::string digits = scaled.get_str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = (sign() < 0 ? "-" : "") + digits.substr(0, digits.size() - places) + "." +
                      digits.substr(digits.size() - places);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::pair<std::string, std::string> over_common_denominator(const Rational& a, const Rational& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
    auto render = [&](const Rational& r) {
        const mpz_class num = r.raw().get_num() * (l / r.raw().get_den());
        return l == 1 ? num.get_str() : num.get_str() + "/" + l.get_str();
    };
    return {render(a), render(b)};
}

}  // namespace slc
