#include "tlcp/rational.hpp"

#include <cctype>

#include "tlcp/errors.hpp"

namespace tlcp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }

    std::string_view num = rest;
    std::string_view den = "1";
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = rest.substr(0, slash);
        den = rest.substr(slash + 1);
    }

    if (!all_digits(num) || !all_digits(den)) {
        if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
            text.find('E') != std::string_view::npos) {
            throw ParseError("not a rational: '" + std::string(text) +
                             "' (decimal and floating-point notation is not accepted; write p/q)");
        }
        throw ParseError("not a rational: '" + std::string(text) + "' (expected p or p/q)");
    }

    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("not a rational: '" + std::string(text) + "' (zero denominator)");
    if (negative) n = -n;
    return Rational(n, d);
}

std::string to_string(const Rational& r) {
    return r.str();
}

bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

} // namespace tlcp
