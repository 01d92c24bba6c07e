#pragma once

#include "qosp/scalars.hpp"

namespace qosp {

/// Integer data attached to a primitive l-th root of unity q:
///   L        smallest even multiple of l,
///   l_prime  multiplicative order of q' = -q,
///   N        4l, the cyclotomic index of the working field Q(zeta_N).
struct RootData {
    int l = 0;
    int l_prime = 0;
    int L = 0;
    int N = 0;
    bool twice_odd = false;  // l = 2 * odd

    friend bool operator==(const RootData&, const RootData&) = default;
};

/// Closed-form root data for l >= 3, cross-checked against the brute-force
/// multiplicative order of -q in Q(zeta_4l).
RootData compute_root_data(int l);

/// The sign epsilon(m): +1 if m = 0,1 mod 4, -1 otherwise.
/// Satisfies (-1)^m epsilon(m) epsilon(m+1) = 1.
int epsilon(long m);

/// Brute-force multiplicative order of a nonzero scalar (test oracle and
/// cross-check): smallest k >= 1 with x^k = 1.
int multiplicative_order(const Scalar& x, int bound);

}  // namespace qosp
