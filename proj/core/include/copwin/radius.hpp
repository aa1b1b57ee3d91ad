#pragma once

#include <compare>
#include <optional>
#include <string>

#include "copwin/errors.hpp"

namespace copwin {

/// A non-negative hop radius, or the distinguished unbounded value.
/// Unbounded compares greater than every finite radius.
class Radius {
public:
    constexpr Radius(int value) : value_(value) {
        if (value < 0) throw ParamError("radius must be non-negative");
    }

    static constexpr Radius unbounded() { return Radius(Unbounded{}); }

    constexpr bool is_unbounded() const { return value_ < 0; }

    /// Finite value; only valid when !is_unbounded().
    constexpr int value() const {
        if (is_unbounded()) throw ParamError("radius is unbounded");
        return value_;
    }

    /// True when a finite hop count d fits within this radius.
    constexpr bool admits(int d) const { return is_unbounded() || d <= value_; }

    friend constexpr bool operator==(Radius a, Radius b) { return a.value_ == b.value_; }
    friend constexpr bool operator<(Radius a, Radius b) {
        if (a.is_unbounded()) return false;
        if (b.is_unbounded()) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(Radius a, Radius b) { return a == b || a < b; }
    friend constexpr bool operator>(Radius a, Radius b) { return b < a; }
    friend constexpr bool operator>=(Radius a, Radius b) { return b <= a; }

    std::string to_string() const { return is_unbounded() ? "inf" : std::to_string(value_); }

    /// Accepts a decimal integer or the literal "inf".
    static Radius parse(const std::string& text);

private:
    struct Unbounded {};
    constexpr explicit Radius(Unbounded) : value_(-1) {}

    int value_;
};

inline Radius Radius::parse(const std::string& text) {
    if (text == "inf") return Radius::unbounded();
    try {
        size_t pos = 0;
        int v = std::stoi(text, &pos);
        if (pos != text.size() || v < 0) throw ParamError("bad radius: " + text);
        return Radius(v);
    } catch (const std::logic_error&) {
        throw ParamError("bad radius: " + text);
    }
}

}  // namespace copwin
