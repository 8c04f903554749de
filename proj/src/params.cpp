#include "alphamod/params.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace alphamod {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_reciprocal_exponent(std::string_view text) {
    const std::string t = lower(trim(text));
    if (t == "inf" || t == "infinity" || t == "oo") return Rational(0);
    const Rational value = Rational::parse(t);
    if (value <= Rational(0)) throw ParameterError("exponent must be positive, got '" + t + "'");
    return Rational(1) / value;
}

ExactSpace parse_space(std::string_view spec) {
    ExactSpace space{Rational(1, 2), Rational(1, 2), Rational(0), Rational(0), 1};
    std::string_view rest = spec;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParameterError("expected key=value in space spec, got '" + std::string(item) + "'");
        const std::string key = lower(trim(item.substr(0, eq)));
        const std::string_view value = trim(item.substr(eq + 1));
        if (key == "p") {
            space.rp = parse_reciprocal_exponent(value);
        } else if (key == "q") {
            space.rq = parse_reciprocal_exponent(value);
        } else if (key == "rp") {
            space.rp = Rational::parse(value);
        } else if (key == "rq") {
            space.rq = Rational::parse(value);
        } else if (key == "s") {
            space.s = Rational::parse(value);
        } else if (key == "alpha" || key == "a") {
            space.alpha = Rational::parse(value);
        } else if (key == "n") {
            const Rational n = Rational::parse(value);
            if (n.den() != 1 || n.num() < 1 || n.num() > 64)
                throw ParameterError("dimension n must be a positive integer");
            space.n = static_cast<int>(n.num());
        } else {
            throw ParameterError("unknown space key '" + key + "'");
        }
    }
    space.validate();
    return space;
}

std::string format_exponent(const Rational& reciprocal) {
    if (reciprocal == Rational(0)) return "inf";
    return (Rational(1) / reciprocal).str();
}

std::string format_space(const ExactSpace& space) {
    std::ostringstream os;
    os << "p=" << format_exponent(space.rp) << ",q=" << format_exponent(space.rq) << ",s=" << space.s
       << ",alpha=" << space.alpha << ",n=" << space.n;
    return os.str();
}

}  // namespace alphamod
