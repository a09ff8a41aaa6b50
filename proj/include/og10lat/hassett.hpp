#pragma once

#include <optional>
#include <vector>

#include "og10lat/errors.hpp"

namespace og10lat::hassett {

/// d > 6 and d = 0 or 2 (mod 6).
bool admissible(long d);

struct Star2Result {
    bool holds = false;
    std::optional<long> witness; // least n in [0, d) with d | 2n^2 + 2n + 2
};

/// (**): d divides 2n^2 + 2n + 2 for some integer n. The expression mod d
/// is periodic in n mod d, so a full residue scan decides it.
Star2Result star2(long d);

/// (**'): every prime p = 2 (mod 3) appears with an even exponent in the
/// factorization of d/2.
bool star2prime(long d);

/// d = 3x - y^2 for a cycle of self-intersection x and hyperplane degree y.
long discriminant_from_cycle(long x, long y);

/// y is not divisible by 3 (i.e. y = +-1 mod 3).
bool torsor_trivializable(long y);

struct HassettReport {
    long d = 0;
    bool admissible = false;
    int mod6 = 0;
    bool star2 = false;
    std::optional<long> witness_n;
    bool star2prime = false;
    bool lsv = false; // admissible and d = 2 (mod 6)
};

HassettReport report(long d);
std::vector<HassettReport> enumerate_admissible(long max_d);

} // namespace og10lat::hassett
