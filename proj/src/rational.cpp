#include "kgeo/rational.hpp"

#include <cctype>

namespace kgeo {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string s = text;
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    std::string intpart, fracpart, denpart;
    bool seen_dot = false, seen_slash = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot || seen_slash) return std::nullopt;
            seen_dot = true;
        } else if (c == '/') {
            if (seen_slash || seen_dot) return std::nullopt;
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (seen_slash)
                denpart += c;
            else if (seen_dot)
                fracpart += c;
            else
                intpart += c;
        } else {
            return std::nullopt;
        }
    }
    if (intpart.empty() && fracpart.empty()) return std::nullopt;
    Rational r;
    if (seen_slash) {
        if (denpart.empty() || denpart == "0") return std::nullopt;
        r = Rational(Int(intpart), Int(denpart));
    } else {
        Int num(intpart.empty() ? "0" : intpart);
        Int den(1);
        for (char c : fracpart) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        r = Rational(num, den);
    }
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace kgeo
