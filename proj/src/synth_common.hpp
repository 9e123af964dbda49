#pragma once

#include <cmath>
#include <vector>

#include "mcg/circuit.hpp"
#include "mcg/su2.hpp"

namespace mcg {

// Rz Rx Rz sequence equal to an SU(2) matrix, including sign.
inline std::vector<Gate> exact_su2(int q, const Mat2<double>& u) {
  Vec3<double> e = zxz_angles<double>(u);
  double a = e[0];
  Mat2<double> w = rz_matrix(e[0]) * rx_matrix(e[1]) * rz_matrix(e[2]);
  const Mat2<double>& target = u;
  if ((w - target).norm() > (w + target).norm()) a += 2 * M_PI;
  std::vector<Gate> out;
  const double eps = 1e-12;
  if (std::abs(e[2]) > eps) out.push_back(rz(q, e[2]));
  if (std::abs(e[1]) > eps) out.push_back(rx(q, e[1]));
  if (std::abs(a) > eps) out.push_back(rz(q, a));
  return out;
}

}  // namespace mcg
