#include "windlass/dyadic.hpp"

#include <stdexcept>

namespace windlass {

Dyadic::Dyadic(std::int64_t mantissa, int exponent) : m_(mantissa), e_(exponent) {
    if (exponent < 0) throw std::invalid_argument("negative dyadic exponent");
    if (exponent > 62) throw std::overflow_error("dyadic exponent exceeds 62");
    while (e_ > 0 && (m_ % 2) == 0) {
        m_ /= 2;
        --e_;
    }
    if (m_ == 0) e_ = 0;
}

std::int64_t Dyadic::floor() const {
    if (e_ == 0) return m_;
    // Arithmetic shift rounds toward negative infinity.
    return m_ >> e_;
}

std::string Dyadic::to_string() const {
    if (e_ == 0) return std::to_string(m_);
    return std::to_string(m_) + "/" + std::to_string(std::int64_t{1} << e_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    __extension__ using wide = __int128;
    int e = a.e_ > b.e_ ? a.e_ : b.e_;
    wide x = static_cast<wide>(a.m_) * (static_cast<wide>(1) << (e - a.e_));
    wide y = static_cast<wide>(b.m_) * (static_cast<wide>(1) << (e - b.e_));
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace windlass
