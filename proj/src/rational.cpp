#include "seaweed/rational.hpp"

#include "seaweed/error.hpp"

namespace seaweed {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw Error(ErrorCode::Parse, "invalid rational '" + text + "'");
    }
    if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace seaweed
