#include "qtlift/rational.hpp"

#include <cctype>

#include "qtlift/errors.hpp"

namespace qtlift {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
    mpz_class p(strip_plus(num), 10);
    mpz_class q(strip_plus(den), 10);
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

} // namespace qtlift
