#include "core/rational.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace entro {

Rat parse_rat(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin)
        throw ParseError("invalid rational '" + text + "': expected digits", i);
    Int num(text.substr(num_begin, i - num_begin));
    Int den = 1;
    if (i < n && text[i] == '/') {
        ++i;
        std::size_t den_begin = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin)
            throw ParseError("invalid rational '" + text + "': expected denominator digits", i);
        den = Int(text.substr(den_begin, i - den_begin));
        if (den == 0)
            throw ParseError("invalid rational '" + text + "': zero denominator", den_begin);
    }
    if (i != n)
        throw ParseError("invalid rational '" + text + "': trailing characters", i);
    if (negative) num = -num;
    return Rat(num, den);  // cpp_rational normalizes to lowest terms
}

std::string rat_str(const Rat& value) {
    return value.str();
}

int rat_sign(const Rat& value) {
    if (value > 0) return 1;
    if (value < 0) return -1;
    return 0;
}

double rat_double(const Rat& value) {
    return value.convert_to<double>();
}

}  // namespace entro
