#include "escalier/rational.hpp"

#include <cctype>

#include "escalier/error.hpp"

namespace escalier {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(errc::parse_error, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(errc::parse_error, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den))
            throw Error(errc::parse_error, "invalid rational literal: " + std::string(text));
        mpz_class p{std::string(num)};
        mpz_class q{std::string(den)};
        if (q == 0) throw Error(errc::parse_error, "zero denominator in: " + std::string(text));
        return Rational(mpq_class(p) / mpq_class(q));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '+' || whole.front() == '-')) whole.remove_prefix(1);
        if (whole.empty() && frac.empty())
            throw Error(errc::parse_error, "invalid decimal literal: " + std::string(text));
        auto digits_only = [](std::string_view s) {
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        if (!digits_only(whole) || !digits_only(frac))
            throw Error(errc::parse_error, "invalid decimal literal: " + std::string(text));
        mpz_class p = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
        mpz_class scale = 1;
        for (char c : frac) {
            p = p * 10 + (c - '0');
            scale *= 10;
        }
        if (negative) p = -p;
        return Rational(mpq_class(p) / mpq_class(scale));
    }
    if (!is_integer_literal(text))
        throw Error(errc::parse_error, "invalid rational literal: " + std::string(text));
    return Rational(mpq_class(mpz_class(std::string(text))));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::pow(int k) const {
    Rational out(1);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
}

}  // namespace escalier
