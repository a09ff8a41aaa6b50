#include "og10lat/hassett.hpp"

namespace og10lat::hassett {

namespace {

int mod6(long d) {
    return static_cast<int>(((d % 6) + 6) % 6);
}

} // namespace

bool admissible(long d) {
    int m = mod6(d);
    return d > 6 && (m == 0 || m == 2);
}

Star2Result star2(long d) {
    if (d <= 0)
        throw precondition_error("(**) requires d >= 1");
    for (long n = 0; n < d; ++n) {
        long r = ((2 * n % d) * (n % d) + 2 * n + 2) % d;
        if (r == 0)
            return Star2Result{true, n};
    }
    return Star2Result{false, std::nullopt};
}

bool star2prime(long d) {
    if (d <= 0 || d % 2 != 0)
        throw precondition_error("(**') requires a positive even d");
    long m = d / 2;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (p % 3 == 2 && e % 2 != 0)
            return false;
    }
    if (m > 1 && m % 3 == 2) // remaining prime factor with exponent 1
        return false;
    return true;
}

long discriminant_from_cycle(long x, long y) {
    return 3 * x - y * y;
}

bool torsor_trivializable(long y) {
    return ((y % 3) + 3) % 3 != 0;
}

HassettReport report(long d) {
    if (d <= 0)
        throw precondition_error("report requires d >= 1");
    HassettReport r;
    r.d = d;
    r.admissible = admissible(d);
    r.mod6 = mod6(d);
    Star2Result s2 = star2(d);
    r.star2 = s2.holds;
    r.witness_n = s2.witness;
    r.star2prime = (d % 2 == 0) ? star2prime(d) : false;
    r.lsv = r.admissible && r.mod6 == 2;
    return r;
}

std::vector<HassettReport> enumerate_admissible(long max_d) {
    if (max_d < 8)
        throw precondition_error("enumerate requires max_d >= 8");
    std::vector<HassettReport> out;
    for (long d = 8; d <= max_d; ++d)
        if (admissible(d))
            out.push_back(report(d));
    return out;
}

} // namespace og10lat::hassett
