#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace picard {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("GaussianInt: 64-bit addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("GaussianInt: 64-bit subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("GaussianInt: 64-bit multiplication overflow");
    return r;
}

} // namespace detail

/// Exact Gaussian integer a + bi with overflow-checked 64-bit components.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t re_, std::int64_t im_ = 0) : re(re_), im(im_) {}

    GaussianInt conj() const { return {re, detail::checked_sub(0, im)}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return (re == 0) != (im == 0) && (re == 1 || re == -1 || im == 1 || im == -1); }

    friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {detail::checked_add(a.re, b.re), detail::checked_add(a.im, b.im)};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {detail::checked_sub(a.re, b.re), detail::checked_sub(a.im, b.im)};
    }
    friend GaussianInt operator-(const GaussianInt& a) {
        return {detail::checked_sub(0, a.re), detail::checked_sub(0, a.im)};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        using detail::checked_add;
        using detail::checked_mul;
        using detail::checked_sub;
        return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
                checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& a) {
        os << a.re;
        if (a.im >= 0) os << "+" << a.im << "i";
        else os << a.im << "i";
        return os;
    }
};

inline GaussianInt gmul(const GaussianInt& a, const GaussianInt& b) { return a * b; }

inline std::int64_t norm_sq(const GaussianInt& a) {
    return detail::checked_add(detail::checked_mul(a.re, a.re), detail::checked_mul(a.im, a.im));
}

/// If b exactly divides a in Z[i], returns true and stores the quotient.
inline bool exact_divide(const GaussianInt& a, const GaussianInt& b, GaussianInt& quot) {
    if (b.is_zero()) return false;
    const GaussianInt num = a * b.conj();
    const std::int64_t d = norm_sq(b);
    if (num.re % d != 0 || num.im % d != 0) return false;
    quot = {num.re / d, num.im / d};
    return true;
}

/// Row-major 3x3 matrix over Z[i].
struct ExactMatrix3 {
    std::array<GaussianInt, 9> e{};

    GaussianInt& at(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }
    const GaussianInt& at(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }

    static ExactMatrix3 identity() {
        ExactMatrix3 m;
        m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = GaussianInt{1};
        return m;
    }

    ExactMatrix3 adjoint() const {
        ExactMatrix3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m.at(r, c) = at(c, r).conj();
        return m;
    }

    friend bool operator==(const ExactMatrix3&, const ExactMatrix3&) = default;

    friend ExactMatrix3 operator*(const ExactMatrix3& a, const ExactMatrix3& b) {
        ExactMatrix3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                GaussianInt s;
                for (int k = 0; k < 3; ++k) s = s + a.at(r, k) * b.at(k, c);
                m.at(r, c) = s;
            }
        return m;
    }

    friend ExactMatrix3 operator*(const GaussianInt& s, const ExactMatrix3& a) {
        ExactMatrix3 m;
        for (int k = 0; k < 9; ++k) m.e[static_cast<std::size_t>(k)] = s * a.e[static_cast<std::size_t>(k)];
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int r = 0; r < 3; ++r) {
            os << "[" << at(r, 0) << ", " << at(r, 1) << ", " << at(r, 2) << "]";
            if (r < 2) os << ", ";
        }
        os << "]";
        return os.str();
    }
};

inline GaussianInt det3(const ExactMatrix3& a) {
    return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
           a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
           a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

/// The Hermitian form of the hyperquadric in homogeneous coordinates:
/// C = [[0,0,i],[0,1,0],[-i,0,0]].  Note C^2 = I.
inline const ExactMatrix3& form_c() {
    static const ExactMatrix3 c = [] {
        ExactMatrix3 m;
        m.at(0, 2) = GaussianInt{0, 1};
        m.at(1, 1) = GaussianInt{1};
        m.at(2, 0) = GaussianInt{0, -1};
        return m;
    }();
    return c;
}

inline bool is_c_unitary(const ExactMatrix3& a) {
    return a.adjoint() * form_c() * a == form_c();
}

/// Inverse of a C-unitary matrix: A^{-1} = C A* C (no division needed).
inline ExactMatrix3 c_inverse(const ExactMatrix3& a) {
    return form_c() * a.adjoint() * form_c();
}

} // namespace picard
