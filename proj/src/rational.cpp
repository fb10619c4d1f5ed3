#include "partq/rational.hpp"

#include "partq/errors.hpp"

#include <cctype>
#include <sstream>

namespace partq {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) {
            throw ParseError("not a rational: '" + text + "'");
        }
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
        throw ParseError("not a rational: '" + text + "'");
    }
    BigInt d(den);
    if (d == 0) {
        throw ParseError("zero denominator in '" + text + "'");
    }
    return Rational(BigInt(num), d);
}

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

std::string to_string(const BigInt& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace partq
