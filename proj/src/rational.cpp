#include "hyperpot/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "hyperpot/error.hpp"

namespace hyperpot {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// mantissa[.fraction][e exp] -> exact rational
Rat parse_decimal(const std::string& text) {
    std::string s = text;
    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = (s[pos] == '-');
        ++pos;
    }
    std::string intpart, fracpart;
    long exponent = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) intpart += s[pos++];
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) fracpart += s[pos++];
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        std::string expstr;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) expstr += s[pos++];
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) expstr += s[pos++];
        if (expstr.empty() || expstr == "+" || expstr == "-")
            raise("bad-number", "malformed exponent in '" + text + "'");
        exponent = std::strtol(expstr.c_str(), nullptr, 10);
    }
    if (pos != s.size() || (intpart.empty() && fracpart.empty()))
        raise("bad-number", "cannot parse rational from '" + text + "'");

    Int numerator(intpart.empty() ? std::string("0") : intpart);
    for (char c : fracpart) {
        numerator *= 10;
        numerator += (c - '0');
    }
    long shift = exponent - static_cast<long>(fracpart.size());
    Int den(1);
    if (shift >= 0) {
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        numerator *= scale;
    } else {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    }
    if (negative) numerator = -numerator;
    Rat result(numerator, den);
    result.canonicalize();
    return result;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) raise("bad-number", "empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        std::string nbody = (!num.empty() && (num[0] == '+' || num[0] == '-')) ? num.substr(1) : num;
        if (!all_digits(nbody) || !all_digits(den))
            raise("bad-number", "cannot parse rational from '" + text + "'");
        Int numerator(num), denominator(den);
        if (denominator == 0) raise("bad-number", "zero denominator in '" + text + "'");
        Rat result(numerator, denominator);
        result.canonicalize();
        return result;
    }
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        return parse_decimal(s);

    std::string body = (s[0] == '+' || s[0] == '-') ? s.substr(1) : s;
    if (!all_digits(body)) raise("bad-number", "cannot parse rational from '" + text + "'");
    return Rat(Int(s));
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

double rat_to_double(const Rat& value) { return value.get_d(); }

Rat rat_from_double(double value) { return Rat(value); }

std::vector<Rat> rat_vector_from_doubles(const std::vector<double>& xs) {
    std::vector<Rat> out;
    out.reserve(xs.size());
    for (double x : xs) out.emplace_back(x);
    return out;
}

std::vector<double> doubles_from_rat_vector(const std::vector<Rat>& xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (const Rat& x : xs) out.push_back(x.get_d());
    return out;
}

int sign_of(const Int& value) { return sgn(value); }

} // namespace hyperpot
