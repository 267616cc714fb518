#include "cheeger_lab/rational.hpp"

#include "cheeger_lab/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <sstream>

namespace cheeger_lab {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Int pow10(long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty number");

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        s.erase(s.begin());
    }
    if (s.empty()) throw ParseError("bare sign is not a number: '" + text + "'");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction: '" + text + "'");
        Int d(den);
        if (d == 0) throw ParseError("zero denominator: '" + text + "'");
        Rat r(Int(num), d);
        return neg ? -r : r;
    }

    // decimal with optional exponent
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string e = s.substr(epos + 1);
        s = s.substr(0, epos);
        try {
            exp10 = std::stol(e);
        } catch (...) {
            throw ParseError("malformed exponent: '" + text + "'");
        }
    }
    std::string intpart = s, fracpart;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        intpart = s.substr(0, dot);
        fracpart = s.substr(dot + 1);
    }
    if (intpart.empty()) intpart = "0";
    if (!all_digits(intpart) || (!fracpart.empty() && !all_digits(fracpart)))
        throw ParseError("malformed number: '" + text + "'");
    Int num = Int(intpart) * pow10(static_cast<long>(fracpart.size()));
    if (!fracpart.empty()) num += Int(fracpart);
    Rat r(num, pow10(static_cast<long>(fracpart.size())));
    if (exp10 > 0) r *= Rat(pow10(exp10));
    if (exp10 < 0) r /= Rat(pow10(-exp10));
    return neg ? -r : r;
}

std::string to_fraction_string(const Rat& r) {
    std::ostringstream os;
    if (denominator(r) == 1)
        os << numerator(r);
    else
        os << numerator(r) << "/" << denominator(r);
    return os.str();
}

std::string to_decimal_string(const Rat& r, int significant_digits) {
    using BF = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;
    BF v = BF(numerator(r)) / BF(denominator(r));
    std::ostringstream os;
    os.precision(significant_digits);
    os << v;
    return os.str();
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace cheeger_lab
