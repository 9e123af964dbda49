#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mcg {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar>
struct AxisAngleT {
  Vec3<Scalar> axis = Vec3<Scalar>::UnitZ();
  Scalar angle = 0;
};

template <typename Scalar>
struct U2SpecT {
  AxisAngleT<Scalar> su2;
  Scalar phase = 0;
};

using AxisAngle = AxisAngleT<double>;
using U2Spec = U2SpecT<double>;

struct DegeneratePair : std::domain_error {
  using std::domain_error::domain_error;
};

template <typename Scalar>
void require_unit(const Vec3<Scalar>& v, const char* who) {
  if (std::abs(v.norm() - Scalar(1)) > Scalar(1e-9)) throw std::invalid_argument(std::string(who) + ": non-unit vector");
}

// Rodrigues rotation of v about axis.
template <typename Scalar>
Vec3<Scalar> rot3(const Vec3<Scalar>& axis, Scalar angle, const Vec3<Scalar>& v) {
  require_unit(axis, "rot3");
  require_unit(v, "rot3");
  const Scalar c = std::cos(angle), s = std::sin(angle);
  Vec3<Scalar> r = v * c + axis.cross(v) * s + axis * axis.dot(v) * (Scalar(1) - c);
  return r.normalized();
}

// exp(-i angle/2 axis.sigma)
template <typename Scalar>
Mat2<Scalar> rot_matrix(const Vec3<Scalar>& axis, Scalar angle) {
  using C = std::complex<Scalar>;
  const Scalar c = std::cos(angle / 2), s = std::sin(angle / 2);
  const C i(0, 1);
  Mat2<Scalar> m;
  m << C(c) - i * s * axis.z(), -i * s * C(axis.x(), -axis.y()),
      -i * s * C(axis.x(), axis.y()), C(c) + i * s * axis.z();
  return m;
}

template <typename Scalar>
Mat2<Scalar> rot_matrix(const AxisAngleT<Scalar>& a) {
  return rot_matrix(a.axis, a.angle);
}

// Pi_u = i R_u(pi) = u.sigma
template <typename Scalar>
Mat2<Scalar> pi_matrix(const Vec3<Scalar>& u) {
  return std::complex<Scalar>(0, 1) * rot_matrix(u, Scalar(M_PI));
}

template <typename Scalar>
Mat2<Scalar> rx_matrix(Scalar a) {
  return rot_matrix<Scalar>(Vec3<Scalar>::UnitX(), a);
}

template <typename Scalar>
Mat2<Scalar> rz_matrix(Scalar a) {
  return rot_matrix<Scalar>(Vec3<Scalar>::UnitZ(), a);
}

template <typename Scalar>
Vec3<Scalar> perpendicular(const Vec3<Scalar>& v) {
  Vec3<Scalar> c = v.cross(Vec3<Scalar>::UnitZ());
  if (c.norm() > Scalar(1e-6)) return c.normalized();
  return Vec3<Scalar>::UnitX();
}

// Pi_{v2} Pi_{v1} = R_v(angle)
template <typename Scalar>
std::pair<Vec3<Scalar>, Vec3<Scalar>> pi_pair(const AxisAngleT<Scalar>& target) {
  Vec3<Scalar> v1 = perpendicular(target.axis);
  return {v1, rot3(target.axis, target.angle / 2, v1)};
}

template <typename Scalar>
std::pair<Vec3<Scalar>, Vec3<Scalar>> pi_pair(const AxisAngleT<Scalar>& target, const Vec3<Scalar>& v1) {
  return {v1, rot3(target.axis, target.angle / 2, v1)};
}

// (Pi_{v2} Pi_{v1})^2 = R_v(angle)
template <typename Scalar>
std::pair<Vec3<Scalar>, Vec3<Scalar>> pi_quad_axes(const AxisAngleT<Scalar>& target) {
  Vec3<Scalar> v1 = perpendicular(target.axis);
  return {v1, rot3(target.axis, target.angle / 4, v1)};
}

template <typename Scalar>
std::pair<Vec3<Scalar>, Vec3<Scalar>> pi_quad_axes(const AxisAngleT<Scalar>& target, const Vec3<Scalar>& v1) {
  return {v1, rot3(target.axis, target.angle / 4, v1)};
}

// Axis m with rot3(m, pi, v1) = v2.
template <typename Scalar>
Vec3<Scalar> midpoint_axis(const Vec3<Scalar>& v1, const Vec3<Scalar>& v2) {
  require_unit(v1, "midpoint_axis");
  require_unit(v2, "midpoint_axis");
  Vec3<Scalar> s = v1 + v2;
  if (s.norm() < Scalar(1e-9)) throw DegeneratePair("midpoint_axis: antipodal pair");
  return s.normalized();
}

struct RotStep {
  char axis;  // 'x' or 'z'
  double angle;
};

// Each list is in time order.
struct AGates {
  std::vector<RotStep> a1, a2, a3, a4;
  double theta1 = 0, theta2 = 0, theta3 = 0;
};

// U = e^{i phi} Rz(a) Rx(b) Rz(c); returns (a, b, c).
template <typename Scalar>
Vec3<Scalar> zxz_angles(const Mat2<Scalar>& u) {
  using C = std::complex<Scalar>;
  Mat2<Scalar> w = u / std::sqrt(u.determinant());
  const Scalar eps = Scalar(1e-12);
  Scalar b = 2 * std::atan2(std::abs(w(1, 0)), std::abs(w(0, 0)));
  Scalar sum = std::abs(w(1, 1)) > eps ? 2 * std::arg(w(1, 1)) : Scalar(0);
  Scalar diff = std::abs(w(1, 0)) > eps ? 2 * std::arg(C(0, 1) * w(1, 0)) : Scalar(0);
  return {(sum + diff) / 2, b, (sum - diff) / 2};
}

template <typename Scalar>
Mat2<Scalar> steps_matrix(const std::vector<RotStep>& steps) {
  Mat2<Scalar> m = Mat2<Scalar>::Identity();
  for (const auto& st : steps)
    m = (st.axis == 'x' ? rx_matrix<Scalar>(Scalar(st.angle)) : rz_matrix<Scalar>(Scalar(st.angle))) * m;
  return m;
}

// A4^dag Rx(angle) A4 = R_v(angle); A2 = Rx(-angle/4), A3 = Rx(angle/4), A1 = A4^dag A3.
template <typename Scalar>
AGates a_gates(const AxisAngleT<Scalar>& target) {
  const Vec3<Scalar> xh = Vec3<Scalar>::UnitX();
  Vec3<Scalar> vm;
  if ((target.axis + xh).norm() < Scalar(1e-9))
    vm = Vec3<Scalar>::UnitZ();
  else
    vm = midpoint_axis<Scalar>(target.axis.normalized(), xh);
  // Rx(t3) Rz(t2) Rx(t1) = H (Rz(t3) Rx(t2) Rz(t1)) H
  Mat2<Scalar> had;
  had << 1, 1, 1, -1;
  had /= std::sqrt(Scalar(2));
  Vec3<Scalar> e = zxz_angles<Scalar>(had * pi_matrix<Scalar>(vm) * had);
  AGates g;
  g.theta3 = e[0];
  g.theta2 = e[1];
  g.theta1 = e[2];
  const double lam = target.angle;
  g.a2 = {{'x', -lam / 4}};
  g.a3 = {{'x', lam / 4}};
  g.a4 = {{'x', g.theta1}, {'z', g.theta2}};
  g.a1 = {{'x', lam / 4}};
  for (auto it = g.a4.rbegin(); it != g.a4.rend(); ++it) g.a1.push_back({it->axis, -it->angle});
  return g;
}

}  // namespace mcg
