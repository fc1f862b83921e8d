#pragma once

#include <Eigen/Dense>

#include <vector>

namespace dct3mg {

// Grid frequencies x_j = (j-1) pi / m, j = 1..m (0-indexed here).
std::vector<double> frequency_grid(int m);

// Orthogonal eigenvector basis: Q(i,j) = sqrt((2 - [j==0]) / m) * cos(j (i + 1/2) pi / m).
// Column 0 is the normalized all-ones vector. Cached per size.
const Eigen::MatrixXd& dct3_matrix(int m);

Eigen::VectorXd dct3_apply(int m, const Eigen::VectorXd& v);
Eigen::VectorXd dct3_apply_transpose(int m, const Eigen::VectorXd& v);

// Kronecker action: Q_{m1} V Q_{m2}^T on a matrix V.
Eigen::MatrixXd tensor_apply(int m1, int m2, const Eigen::MatrixXd& V);
Eigen::MatrixXd tensor_apply_transpose(int m1, int m2, const Eigen::MatrixXd& V);

} // namespace dct3mg
