#include "jcd/rational.hpp"

#include <cctype>

namespace jcd {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw precondition_error("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw precondition_error("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    if (v_.get_den() == 0)
        throw precondition_error("rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw precondition_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw precondition_error("rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::parse(std::string_view text) {
    // Grammar: ['-'] digits ['/' digits]. Anything else is rejected, including
    // leading '+', internal whitespace and empty digit runs.
    auto fail = [&]() -> Rational {
        throw parse_error("invalid rational literal: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    if (i == num_begin)
        return fail();
    mpz_class num(std::string(text.substr(num_begin, i - num_begin)), 10);
    mpz_class den(1);
    if (i < text.size()) {
        if (text[i] != '/')
            return fail();
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == den_begin || i != text.size())
            return fail();
        den = mpz_class(std::string(text.substr(den_begin)), 10);
        if (den == 0)
            throw parse_error("invalid rational literal (zero denominator): '" +
                              std::string(text) + "'");
    }
    if (negative)
        num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

std::string to_string(const Rational& r) { return r.to_string(); }

} // namespace jcd
