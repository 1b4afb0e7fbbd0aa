#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace absaf {

/// Exact non-negative fraction with small terms, always in lowest terms.
/// Representation scores are ratios of set sizes, so 64-bit cross products never overflow.
class Ratio {
public:
    constexpr Ratio() = default;
    Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den <= 0) throw std::invalid_argument("Ratio: denominator must be positive");
        auto g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static Ratio one() { return Ratio(1, 1); }
    static Ratio zero() { return Ratio(0, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    mpq_class to_mpq() const { return mpq_class(mpz_class(num_), mpz_class(den_)); }
    std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

    bool is_one() const { return num_ == den_; }

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace absaf
