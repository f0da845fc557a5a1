#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace eil {

/// Coefficient field for homology: GF(p) or the rationals.
class Field {
public:
    enum class Kind { Prime, Rational };

    static Field gf2() { return Field(Kind::Prime, 2); }
    /// Throws InvalidInput unless p is a prime below 2^31.
    static Field prime(std::int64_t p);
    static Field rationals() { return Field(Kind::Rational, 0); }
    /// "gf2", "gfp:<p>" or "rat".
    static Field parse(std::string_view text);

    Kind kind() const { return kind_; }
    /// 0 for the rationals.
    std::int64_t characteristic() const { return p_; }
    bool is_gf2() const { return kind_ == Kind::Prime && p_ == 2; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

} // namespace eil
