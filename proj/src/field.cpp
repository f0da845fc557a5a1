#include "eil/field.hpp"

#include <charconv>

#include "eil/errors.hpp"

namespace eil {

Field Field::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31)) throw InvalidInput("field: characteristic out of range");
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) throw InvalidInput("field: " + std::to_string(p) + " is not prime");
    }
    return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view text) {
    if (text == "gf2") return gf2();
    if (text == "rat" || text == "q") return rationals();
    if (text.starts_with("gfp:")) {
        std::int64_t p = 0;
        const auto digits = text.substr(4);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw InvalidInput("field: cannot parse characteristic in '" + std::string(text) + "'");
        }
        return prime(p);
    }
    throw InvalidInput("field: expected gf2, gfp:<p> or rat, got '" + std::string(text) + "'");
}

std::string Field::name() const {
    if (kind_ == Kind::Rational) return "rat";
    if (p_ == 2) return "gf2";
    return "gfp:" + std::to_string(p_);
}

} // namespace eil
