#include "mhuff/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace mhuff {

std::string to_string(const Integer& value) { return value.str(); }

Integer parse_integer(std::string_view text) {
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
    if (pos == text.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    for (std::size_t k = pos; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        }
    }
    Integer value(std::string(text.substr(pos)));
    return text[0] == '-' ? Integer(-value) : value;
}

Integer exact_divide(const Integer& numerator, const Integer& denominator, std::string_view what) {
    if (denominator == 0) {
        throw std::logic_error(std::string(what) + ": division by zero");
    }
    Integer quotient;
    Integer remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw std::logic_error(std::string(what) + ": " + numerator.str() + " is not divisible by " +
                               denominator.str());
    }
    return quotient;
}

}  // namespace mhuff
