#include "hhs/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hhs {

namespace {

bool allDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational rationalFromString(std::string_view text) {
    std::string_view numPart = text;
    std::string_view denPart;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        numPart = text.substr(0, slash);
        denPart = text.substr(slash + 1);
    }
    std::string_view numDigits = numPart;
    if (!numDigits.empty() && numDigits.front() == '-') numDigits.remove_prefix(1);
    if (!allDigits(numDigits)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    BigInt num(std::string(numPart), 10);
    BigInt den = 1;
    if (!denPart.empty() || text.find('/') != std::string_view::npos) {
        if (!allDigits(denPart)) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        den = BigInt(std::string(denPart), 10);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
    }
    return rational(num, den);
}

std::string rationalToString(const Rational& q) {
    std::string out = q.get_num().get_str();
    if (q.get_den() != 1) {
        out += '/';
        out += q.get_den().get_str();
    }
    return out;
}

}  // namespace hhs
