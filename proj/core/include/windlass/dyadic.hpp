#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace windlass {

// Exact rational mantissa / 2^exponent, kept normalized (exponent == 0 or
// mantissa odd) so that equality is structural.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(std::int64_t mantissa, int exponent);
    static Dyadic integer(std::int64_t v) { return Dyadic(v, 0); }

    std::int64_t mantissa() const { return m_; }
    int exponent() const { return e_; }
    // floor of the value.
    std::int64_t floor() const;
    std::string to_string() const;

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
    std::int64_t m_ = 0;
    int e_ = 0;
};

inline const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace windlass
