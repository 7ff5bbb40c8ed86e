#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace locdesc {

// Error with a machine-readable reason code. The CLI maps codes to exit
// codes; everything else treats them as ordinary exceptions.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Multiplicative sign, the value group of every pairing in this library.
class Sign {
public:
    constexpr Sign() = default;
    explicit constexpr Sign(int v) : neg_(v < 0) {
        if (v != 1 && v != -1) throw Error("validation", "sign must be +1 or -1");
    }
    static constexpr Sign plus() { return Sign(); }
    static constexpr Sign minus() {
        Sign s;
        s.neg_ = true;
        return s;
    }
    // (-1)^e
    static constexpr Sign pow_minus_one(long long e) { return (e % 2) ? minus() : plus(); }

    constexpr int value() const { return neg_ ? -1 : 1; }
    constexpr bool is_minus() const { return neg_; }

    friend constexpr Sign operator*(Sign a, Sign b) {
        Sign s;
        s.neg_ = a.neg_ != b.neg_;
        return s;
    }
    Sign& operator*=(Sign o) {
        neg_ = neg_ != o.neg_;
        return *this;
    }
    // s^e
    constexpr Sign pow(long long e) const { return (neg_ && (e % 2)) ? minus() : plus(); }

    friend constexpr bool operator==(Sign a, Sign b) { return a.neg_ == b.neg_; }
    friend constexpr bool operator!=(Sign a, Sign b) { return a.neg_ != b.neg_; }

private:
    bool neg_ = false;
};

inline std::string to_string(Sign s) { return s.is_minus() ? "-1" : "+1"; }

}  // namespace locdesc
