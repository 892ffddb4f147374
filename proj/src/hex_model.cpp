#include "coopnet/hex_model.hpp"
#include "coopnet/asymptotics.hpp"
#include "coopnet/errors.hpp"

#include <cmath>
#include <string>

namespace coopnet {

double hex_d(double lambda_b) {
    if (!(lambda_b > 0.0))
        throw param_error("BS density must be positive");
    return std::sqrt(2.0 / (3.0 * std::sqrt(3.0) * lambda_b));
}

double hex_pk(int K, int L, double lambda_b, double alpha) {
    if (K < 1 || K > 6)
        throw param_error("cell-edge model covers 1 to 6 cooperating BSs, got " +
                          std::to_string(K));
    if (L < 1)
        throw param_error("L must be positive");
    if (!(alpha > 2.0))
        throw domain_error("path-loss exponent must exceed 2");
    const double d = hex_d(lambda_b);
    // three nearest lattice BSs are equidistant at d, the next three at 2d
    if (K <= 3)
        return double(K) * double(L) * std::pow(d, -alpha);
    return 3.0 * double(L) * std::pow(d, -alpha) +
           double(K - 3) * double(L) * std::pow(2.0 * d, -alpha);
}

double cell_edge_eta(int K, int L, double lambda_b, double lambda, double alpha) {
    return eta_asym(hex_pk(K, L, lambda_b, alpha), K, L, alpha, lambda);
}

} // namespace coopnet
