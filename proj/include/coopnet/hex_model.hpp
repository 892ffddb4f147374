#pragma once

namespace coopnet {

// center-to-nearest-BS distance for a cell-edge mobile on a hexagonal lattice
// with BS density lambda_b
double hex_d(double lambda_b);

// cooperative received power seen by a cell-edge mobile from its K nearest
// lattice BSs, each with L antennas; valid for K in [1, 6]
double hex_pk(int K, int L, double lambda_b, double alpha);

// asymptotic spectral efficiency of that mobile
double cell_edge_eta(int K, int L, double lambda_b, double lambda, double alpha);

} // namespace coopnet
