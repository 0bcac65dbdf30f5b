#ifndef RIGIDITY_FP61_HPP
#define RIGIDITY_FP61_HPP

#include <cstdint>
#include <iosfwd>
#include <ostream>

namespace rigidity {

// Element of the prime field Z_p with p = 2^61 - 1 (Mersenne).
// Stored value is always in [0, p).
class Fp61 {
public:
    static constexpr uint64_t P = (uint64_t(1) << 61) - 1;

    constexpr Fp61() : v_(0) {}
    constexpr explicit Fp61(uint64_t v) : v_(v % P) {}

    static Fp61 from_int(long long x) {
        long long r = x % static_cast<long long>(P);
        if (r < 0) r += static_cast<long long>(P);
        return Fp61(static_cast<uint64_t>(r));
    }

    uint64_t value() const { return v_; }

    friend Fp61 operator+(Fp61 a, Fp61 b) {
        uint64_t r = a.v_ + b.v_;
        if (r >= P) r -= P;
        return from_raw(r);
    }
    friend Fp61 operator-(Fp61 a, Fp61 b) {
        uint64_t r = a.v_ + P - b.v_;
        if (r >= P) r -= P;
        return from_raw(r);
    }
    friend Fp61 operator-(Fp61 a) { return from_raw(a.v_ == 0 ? 0 : P - a.v_); }
    friend Fp61 operator*(Fp61 a, Fp61 b) {
        unsigned __int128 x = static_cast<unsigned __int128>(a.v_) * b.v_;
        uint64_t lo = static_cast<uint64_t>(x & P);
        uint64_t hi = static_cast<uint64_t>(x >> 61);
        uint64_t r = lo + hi;
        r = (r & P) + (r >> 61);
        if (r >= P) r -= P;
        return from_raw(r);
    }
    friend Fp61 operator/(Fp61 a, Fp61 b) { return a * b.inverse(); }

    Fp61& operator+=(Fp61 o) { return *this = *this + o; }
    Fp61& operator-=(Fp61 o) { return *this = *this - o; }
    Fp61& operator*=(Fp61 o) { return *this = *this * o; }
    Fp61& operator/=(Fp61 o) { return *this = *this / o; }

    friend bool operator==(Fp61 a, Fp61 b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp61 a, Fp61 b) { return a.v_ != b.v_; }

    Fp61 pow(uint64_t e) const {
        Fp61 base = *this, acc(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Fermat inverse; undefined for zero.
    Fp61 inverse() const { return pow(P - 2); }

    friend std::ostream& operator<<(std::ostream& os, Fp61 a) { return os << a.v_; }

private:
    static constexpr Fp61 from_raw(uint64_t v) {
        Fp61 r;
        r.v_ = v;
        return r;
    }
    uint64_t v_;
};

} // namespace rigidity

#endif
