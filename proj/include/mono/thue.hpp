#pragma once

#include "mono/order.hpp"

namespace mono {

// A representation F(x, y) = +-1 found inside the search box.
struct ThueHit {
    long x, y;
    int value;  // +1 or -1

    bool operator==(const ThueHit& o) const = default;
    bool operator<(const ThueHit& o) const
    {
        return x != o.x ? x < o.x : (y != o.y ? y < o.y : value < o.value);
    }
};

// Scan |x|, |y| <= bound for F(x, y) = +-1. Hits are automatically coprime
// (gcd^deg divides 1). Results sorted lexicographically.
//
// The serial version is the reference; the parallel version uses OpenMP and
// must produce identical results. Both take an int128 fast path when the
// coefficient/bound budget allows and fall back to exact big integers.
std::vector<ThueHit> thue_scan_serial(const BinaryForm& F, long bound);
std::vector<ThueHit> thue_scan_parallel(const BinaryForm& F, long bound);
std::vector<ThueHit> thue_scan(const BinaryForm& F, long bound, int jobs = 0);

}  // namespace mono
