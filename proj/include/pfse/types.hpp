#pragma once

#include <complex>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace pfse {

using Complex = std::complex<double>;
using VecC = Eigen::VectorXcd;
using VecR = Eigen::VectorXd;
using MatC = Eigen::MatrixXcd;
using MatR = Eigen::MatrixXd;
using SpMatC = Eigen::SparseMatrix<Complex>;
using SpMatR = Eigen::SparseMatrix<double>;

}  // namespace pfse
