#pragma once

// Vectors over the prime fields F_2 and F_3 with a canonical dense integer
// encoding: a vector is the big-endian base-p number of its coordinates,
// coordinate 0 being the most significant digit. Card codes throughout the
// library are exactly these encodings.

#include <span>
#include <vector>

#include "cardgeom/errors.hpp"

namespace cardgeom {

struct FpVector {
    int p = 2;               // prime modulus
    int n = 0;               // dimension
    std::vector<int> coords; // each in [0, p)

    bool operator==(const FpVector&) const = default;
};

inline long space_size(int p, int n) {
    long s = 1;
    for (int i = 0; i < n; ++i) s *= p;
    return s;
}

inline FpVector zero_vector(int p, int n) {
    return FpVector{p, n, std::vector<int>(static_cast<size_t>(n), 0)};
}

inline long encode(const FpVector& v) {
    long code = 0;
    for (int c : v.coords) {
        if (c < 0 || c >= v.p) fail(errc::invalid_code, "coordinate out of range");
        code = code * v.p + c;
    }
    return code;
}

inline FpVector decode(int p, int n, long code) {
    if (code < 0 || code >= space_size(p, n))
        fail(errc::invalid_code, "code out of range for F_" + std::to_string(p) +
                                     "^" + std::to_string(n));
    FpVector v = zero_vector(p, n);
    for (int i = n - 1; i >= 0; --i) {
        v.coords[static_cast<size_t>(i)] = static_cast<int>(code % p);
        code /= p;
    }
    return v;
}

/// Coordinatewise sum mod p. The empty sum is the zero vector of the given
/// space; for p=2 this is bitwise XOR of the codes.
inline FpVector group_sum(std::span<const FpVector> vs, int p = 2, int n = 0) {
    if (vs.empty()) return zero_vector(p, n);
    FpVector acc = zero_vector(vs[0].p, vs[0].n);
    for (const FpVector& v : vs) {
        if (v.p != acc.p || v.n != acc.n)
            fail(errc::mixed_spaces, "group_sum over vectors from different spaces");
        for (int i = 0; i < acc.n; ++i) {
            auto k = static_cast<size_t>(i);
            acc.coords[k] = (acc.coords[k] + v.coords[k]) % acc.p;
        }
    }
    return acc;
}

inline FpVector group_sum(const std::vector<FpVector>& vs, int p = 2, int n = 0) {
    return group_sum(std::span<const FpVector>(vs), p, n);
}

inline FpVector negate(const FpVector& v) {
    FpVector r = v;
    for (int& c : r.coords) c = (v.p - c) % v.p;
    return r;
}

// Digitwise helpers on raw codes; hot paths use these instead of FpVector.

/// Code of a+b in F_p^n.
inline long code_add(int p, int n, long a, long b) {
    if (p == 2) return a ^ b;
    long out = 0, shift = 1;
    for (int i = 0; i < n; ++i) {
        out += ((a / shift % p + b / shift % p) % p) * shift;
        shift *= p;
    }
    return out;
}

/// Code of -(a+b) in F_p^n; for p=3 this is the third point on the line
/// through a and b.
inline long code_neg_sum(int p, int n, long a, long b) {
    if (p == 2) return a ^ b;
    long out = 0, shift = 1;
    for (int i = 0; i < n; ++i) {
        int s = static_cast<int>(a / shift % p + b / shift % p);
        out += ((2 * p - s) % p) * shift;
        shift *= p;
    }
    return out;
}

} // namespace cardgeom
