#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqvar {

// Natural numbers extended by a top element INF.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t n) : n_(n) {}

    static constexpr ExtNat inf() {
        ExtNat x;
        x.inf_ = true;
        return x;
    }

    constexpr bool is_inf() const { return inf_; }
    constexpr bool is_zero() const { return !inf_ && n_ == 0; }

    std::uint64_t value() const {
        if (inf_) throw std::logic_error("ExtNat: value() of INF");
        return n_;
    }

    constexpr bool operator==(const ExtNat& o) const {
        return inf_ == o.inf_ && (inf_ || n_ == o.n_);
    }
    constexpr std::strong_ordering operator<=>(const ExtNat& o) const {
        if (inf_ || o.inf_) return int(inf_) <=> int(o.inf_);
        return n_ <=> o.n_;
    }

    constexpr ExtNat& operator+=(const ExtNat& o) {
        if (o.inf_) inf_ = true;
        if (!inf_) n_ += o.n_;
        return *this;
    }
    friend constexpr ExtNat operator+(ExtNat a, const ExtNat& b) { return a += b; }

    // Saturating at zero; INF - finite = INF.  INF - INF is not defined.
    ExtNat minus(const ExtNat& o) const {
        if (o.inf_) {
            if (inf_) throw std::logic_error("ExtNat: INF - INF");
            return 0;
        }
        if (inf_) return *this;
        return n_ > o.n_ ? ExtNat(n_ - o.n_) : ExtNat(0);
    }

    std::string str() const { return inf_ ? "inf" : std::to_string(n_); }

private:
    std::uint64_t n_ = 0;
    bool inf_ = false;
};

inline constexpr ExtNat INF = ExtNat::inf();

inline ExtNat min(const ExtNat& a, const ExtNat& b) { return a < b ? a : b; }

// Parses a decimal natural or "inf".
ExtNat parse_extnat(const std::string& s);

} // namespace eqvar
