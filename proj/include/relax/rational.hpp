#pragma once

#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "relax/errors.hpp"

namespace relax {

/// Exact ratio a/b with 0 < a < b and gcd(a,b) = 1. All threshold tests are
/// done in integer arithmetic; no floating point is involved anywhere.
class Gamma {
public:
    Gamma() = default;

    /// Reduces a/b to lowest terms; throws InvalidGamma unless 0 < a/b < 1.
    static Gamma of(std::int64_t a, std::int64_t b) {
        if (a <= 0 || b <= 0 || a >= b)
            throw InvalidGamma("gamma must satisfy 0 < a/b < 1, got " + std::to_string(a) + "/" + std::to_string(b));
        auto const g = std::gcd(a, b);
        Gamma r;
        r.num_ = static_cast<std::uint64_t>(a / g);
        r.den_ = static_cast<std::uint64_t>(b / g);
        return r;
    }

    /// Accepts only "A/B" with decimal integers; decimals like "0.5" are rejected.
    static Gamma parse(std::string_view text) {
        auto const slash = text.find('/');
        if (slash == std::string_view::npos)
            throw InvalidGamma("gamma must be an exact fraction A/B, got '" + std::string(text) + "'");
        auto read = [&](std::string_view part) {
            std::int64_t value = 0;
            auto const* end = part.data() + part.size();
            auto [ptr, ec] = std::from_chars(part.data(), end, value);
            if (part.empty() || ec != std::errc{} || ptr != end)
                throw InvalidGamma("malformed gamma '" + std::string(text) + "'");
            return value;
        };
        return of(read(text.substr(0, slash)), read(text.substr(slash + 1)));
    }

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }

    /// ⌈γ·x⌉ for x >= 0.
    std::uint64_t ceil_times(std::uint64_t x) const { return (num_ * x + den_ - 1) / den_; }

    /// ⌊γ·x⌋ for x >= 0.
    std::uint64_t floor_times(std::uint64_t x) const { return num_ * x / den_; }

    /// deg >= γ·(size - 1), i.e. b·deg >= a·(size-1).
    bool satisfied_by(std::uint64_t degree, std::uint64_t size) const {
        return size == 0 || den_ * degree >= num_ * (size - 1);
    }

    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(Gamma const&, Gamma const&) = default;

private:
    std::uint64_t num_ = 1;
    std::uint64_t den_ = 2;
};

} // namespace relax
