#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace dimalg {

/// Integers extended by two infinities, the value domain for degrees and
/// dimension values.
///
/// Total order: -inf < n < +inf for every finite n.
///
/// Addition convention: (+inf) + (-inf) = +inf in both argument orders.
/// This keeps add() commutative and associative on the whole domain and is
/// the convention every closed-form formula in this library is stated in.
/// There is deliberately no second addition: callers that need the opposite
/// convention (-inf dominant) negate, add, and negate back.
class ExtInt {
public:
    constexpr ExtInt() noexcept : state_(State::Finite), v_(0) {}
    // Implicit: finite literals participate directly in formulas.
    constexpr ExtInt(std::int64_t v) noexcept : state_(State::Finite), v_(v) {}
    constexpr ExtInt(int v) noexcept : state_(State::Finite), v_(v) {}

    static constexpr ExtInt plus_inf() noexcept { return ExtInt(State::PlusInf); }
    static constexpr ExtInt minus_inf() noexcept { return ExtInt(State::MinusInf); }

    constexpr bool is_finite() const noexcept { return state_ == State::Finite; }
    constexpr bool is_plus_inf() const noexcept { return state_ == State::PlusInf; }
    constexpr bool is_minus_inf() const noexcept { return state_ == State::MinusInf; }

    /// The finite value; throws std::logic_error on an infinity.
    constexpr std::int64_t finite() const {
        if (!is_finite())
            throw std::logic_error("ExtInt::finite() called on an infinity");
        return v_;
    }

    friend constexpr bool operator==(ExtInt a, ExtInt b) noexcept {
        return a.state_ == b.state_ && (a.state_ != State::Finite || a.v_ == b.v_);
    }
    friend constexpr bool operator!=(ExtInt a, ExtInt b) noexcept { return !(a == b); }

    friend constexpr bool operator<(ExtInt a, ExtInt b) noexcept {
        if (a.state_ == b.state_)
            return a.state_ == State::Finite && a.v_ < b.v_;
        if (a.state_ == State::MinusInf) return true;
        if (b.state_ == State::MinusInf) return false;
        return b.state_ == State::PlusInf;
    }
    friend constexpr bool operator<=(ExtInt a, ExtInt b) noexcept { return !(b < a); }
    friend constexpr bool operator>(ExtInt a, ExtInt b) noexcept { return b < a; }
    friend constexpr bool operator>=(ExtInt a, ExtInt b) noexcept { return !(a < b); }

private:
    enum class State : std::uint8_t { MinusInf, Finite, PlusInf };
    constexpr explicit ExtInt(State s) noexcept : state_(s), v_(0) {}

    State state_;
    std::int64_t v_;

    friend constexpr ExtInt add(ExtInt, ExtInt) noexcept;
    friend constexpr ExtInt neg(ExtInt) noexcept;
    friend struct ExtIntHash;
};

/// Sum under the (+inf) + (-inf) = +inf convention.
constexpr ExtInt add(ExtInt a, ExtInt b) noexcept {
    if (a.is_plus_inf() || b.is_plus_inf()) return ExtInt::plus_inf();
    if (a.is_minus_inf() || b.is_minus_inf()) return ExtInt::minus_inf();
    return ExtInt(a.v_ + b.v_);
}

/// Negation; swaps the infinities. Note neg(add(a, b)) differs from
/// add(neg(a), neg(b)) exactly when {a, b} = {+inf, -inf}.
constexpr ExtInt neg(ExtInt a) noexcept {
    if (a.is_plus_inf()) return ExtInt::minus_inf();
    if (a.is_minus_inf()) return ExtInt::plus_inf();
    return ExtInt(-a.v_);
}

constexpr ExtInt operator+(ExtInt a, ExtInt b) noexcept { return add(a, b); }
constexpr ExtInt operator-(ExtInt a) noexcept { return neg(a); }

constexpr ExtInt min(ExtInt a, ExtInt b) noexcept { return b < a ? b : a; }
constexpr ExtInt max(ExtInt a, ExtInt b) noexcept { return a < b ? b : a; }
constexpr bool leq(ExtInt a, ExtInt b) noexcept { return a <= b; }

/// "inf" / "-inf" / decimal digits.
std::string to_string(ExtInt v);
std::ostream& operator<<(std::ostream& os, ExtInt v);

/// Parses to_string() output plus the tolerant forms "+inf", "Inf", "INF",
/// "infinity" (case-insensitive); throws std::invalid_argument otherwise.
ExtInt parse_extint(const std::string& text);

struct ExtIntHash {
    std::size_t operator()(ExtInt v) const noexcept {
        std::size_t tag = static_cast<std::size_t>(v.state_);
        return std::hash<std::int64_t>{}(v.is_finite() ? v.finite() : 0) * 31 + tag;
    }
};

} // namespace dimalg
