#include "qosp/rootdata.hpp"

namespace qosp {

int epsilon(long m) {
    if (m < 0) usage_error("epsilon requires m >= 0");
    const long r = m % 4;
    return (r == 0 || r == 1) ? 1 : -1;
}

int multiplicative_order(const Scalar& x, int bound) {
    if (x.is_zero()) usage_error("multiplicative order of zero");
    const Scalar one = x.field()->one();
    Scalar p = x;
    for (int k = 1; k <= bound; ++k) {
        if (p == one) return k;
        p = p * x;
    }
    usage_error("multiplicative order exceeds bound " + std::to_string(bound));
}

RootData compute_root_data(int l) {
    if (l < 3) usage_error("root data requires l >= 3");
    RootData rd;
    rd.l = l;
    rd.L = (l % 2 == 0) ? l : 2 * l;
    rd.twice_odd = (l % 2 == 0) && ((l / 2) % 2 == 1);
    rd.l_prime = rd.twice_odd ? l / 2 : rd.L;
    rd.N = 4 * l;

    // cross-check against the order of -q in Q(zeta_4l)
    auto field = ScalarField::make_root(l);
    const int order = multiplicative_order(field->q_prime(), 2 * rd.L + 1);
    if (order != rd.l_prime)
        arith_error("l' mismatch: closed form " + std::to_string(rd.l_prime) +
                    " vs computed order " + std::to_string(order));
    // q^L = 1
    if (field->q_power(rd.L) != field->one()) arith_error("q^L != 1");
    return rd;
}

}  // namespace qosp
