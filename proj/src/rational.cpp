#include "bnalg/rational.hpp"

#include "bnalg/errors.hpp"

namespace bnalg {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    auto digits = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(num) || !digits(den) || den.front() == '-' || den.front() == '+') {
        throw InvalidInput("malformed rational '" + s + "'");
    }
    Integer p(std::string(num.front() == '+' ? num.substr(1) : num));
    Integer q{std::string(den)};
    if (q == 0) throw InvalidInput("zero denominator in '" + s + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace bnalg
