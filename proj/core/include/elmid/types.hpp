#pragma once

#include <Eigen/Dense>

namespace elmid {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

}  // namespace elmid
