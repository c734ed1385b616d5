#include "qhl/gint.hpp"

#include <cctype>

namespace qhl {

namespace {

// signed decimal integer; empty digits after a sign mean an implicit 1,
// so "i", "+i", "-i" parse as expected
bool read_term(const std::string& s, std::size_t& pos, bigint& value, bool& imaginary) {
    std::size_t p = pos;
    int sign = 1;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        if (s[p] == '-') sign = -1;
        ++p;
    }
    std::string digits;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) digits += s[p++];
    bool has_i = p < s.size() && (s[p] == 'i' || s[p] == 'I');
    if (has_i) ++p;
    if (digits.empty() && !has_i) return false;
    value = digits.empty() ? bigint(1) : bigint(digits);
    value *= sign;
    imaginary = has_i;
    pos = p;
    return true;
}

}  // namespace

GaussianInt parse_gint(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("parse_gint: empty input");

    GaussianInt out{bigint(0), bigint(0)};
    std::size_t pos = 0;
    bool seen_re = false, seen_im = false;
    while (pos < t.size()) {
        bigint v;
        bool im;
        if (!read_term(t, pos, v, im))
            throw std::invalid_argument("parse_gint: cannot parse '" + s + "'");
        if (im) {
            if (seen_im) throw std::invalid_argument("parse_gint: repeated imaginary part in '" + s + "'");
            out.im = v;
            seen_im = true;
        } else {
            if (seen_re) throw std::invalid_argument("parse_gint: repeated real part in '" + s + "'");
            out.re = v;
            seen_re = true;
        }
    }
    return out;
}

}  // namespace qhl
