#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace autonomy {

// A value in {0, 1, 2, ...} ∪ {∞}: degrees of autonomy and controller strengths.
class DegreeValue {
public:
    constexpr DegreeValue() = default;
    constexpr explicit DegreeValue(int v) : value_(v) {}
    static constexpr DegreeValue infinity() {
        DegreeValue d;
        d.infinite_ = true;
        return d;
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_finite() const noexcept { return !infinite_; }
    // Only meaningful when finite.
    constexpr int value() const noexcept { return value_; }

    // "infinity" or the decimal value.
    std::string to_string() const;
    // Inverse of to_string; throws ValidationError on anything else.
    static DegreeValue parse(const std::string& text);

    friend constexpr bool operator==(DegreeValue a, DegreeValue b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(DegreeValue a, DegreeValue b) noexcept {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

private:
    int value_ = 0;
    bool infinite_ = false;
};

}  // namespace autonomy
