#pragma once

// Truncated unitary duals of T^d and SU(2), and evaluation of the irreducible
// representation matrices.
//
// SU(2) representations are labelled by ell in {0, 1/2, 1, ...}; ell is stored
// exactly as the integer 2*ell. Matrix rows/columns are ordered by the weight
// index m = -ell, -ell+1, ..., ell (position p <-> m = p - ell).

#include <Eigen/Dense>

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghyp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input files (CSV, JSON specs, expressions).
class ParseError : public Error {
public:
  using Error::Error;
};

enum class GroupKind { Torus, SU2 };

struct GroupId {
  GroupKind kind = GroupKind::SU2;
  int torus_dim = 0;  // only meaningful for Torus

  static GroupId torus(int d);
  static GroupId su2() { return GroupId{GroupKind::SU2, 0}; }

  bool is_torus() const { return kind == GroupKind::Torus; }
  bool is_su2() const { return kind == GroupKind::SU2; }
  // Dimension of the group as a manifold (d for T^d, 3 for SU(2)).
  int manifold_dim() const { return is_torus() ? torus_dim : 3; }
  // "su2" or "torus:d".
  std::string name() const;
  static GroupId parse(const std::string& text);

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

class DualIndex {
public:
  static DualIndex torus(std::vector<int> n);
  static DualIndex su2_twice(int two_ell);

  const GroupId& group() const { return group_; }
  const std::vector<int>& frequencies() const { return n_; }
  int two_ell() const { return two_ell_; }
  double ell() const { return 0.5 * two_ell_; }
  bool integer_ell() const { return two_ell_ % 2 == 0; }

  // d_xi
  int dim() const { return group_.is_torus() ? 1 : two_ell_ + 1; }
  // 4 * nu, an exact integer for both groups; orders the dual by eigenvalue.
  std::int64_t nu_times4() const;
  double nu() const { return 0.25 * static_cast<double>(nu_times4()); }
  // <xi> = sqrt(1 + nu)
  double eigenvalue() const;
  // <xi>^p computed as (1 + nu)^(p/2), exact when p is even.
  double eigenvalue_pow(double p) const;

  // "3/2", "1" for SU(2); "2" or "1:-2" for tori.
  std::string label() const;
  static DualIndex parse(const GroupId& group, const std::string& label);

  friend bool operator==(const DualIndex& a, const DualIndex& b);
  // Sorted by eigenvalue, then lexicographically by index.
  friend std::strong_ordering operator<=>(const DualIndex& a, const DualIndex& b);

private:
  GroupId group_;
  std::vector<int> n_;
  int two_ell_ = 0;
};

// A point of G. Torus: angles in [0, 2pi)^d. SU(2): z-y-z Euler angles
// (phi, theta, psi) in [0, 2pi) x [0, pi] x [0, 4pi).
struct GroupPoint {
  GroupId group;
  std::vector<double> coords;

  static GroupPoint identity(const GroupId& group);
  static GroupPoint euler(double phi, double theta, double psi);
  static GroupPoint torus(std::vector<double> angles);

  void validate() const;
};

// Group law in coordinates: returns x*y, reduced into the coordinate ranges.
GroupPoint multiply(const GroupPoint& x, const GroupPoint& y);

// The defining 2x2 SU(2) matrix of a point, basis (e_{+1/2}, e_{-1/2}).
Eigen::Matrix2cd su2_matrix(const GroupPoint& x);
GroupPoint su2_point(const Eigen::Matrix2cd& u);

// All xi with <xi> <= cutoff, sorted. Deterministic.
std::vector<DualIndex> enumerate_dual(const GroupId& group, double cutoff);

// Eigenvalue cutoff admitting exactly the SU(2) labels ell <= ell_max.
double su2_cutoff_for_ell(double ell_max);

int rep_dim(const DualIndex& xi);
double eigenvalue(const DualIndex& xi);

// Wigner small-d matrix d^ell_{m'm}(beta) in the standard z-y-z convention,
// by the explicit factorial sum for ell <= 15 and exp(-i beta J_y) above,
// rows m' and columns m both ascending from -ell.
Eigen::MatrixXd wigner_small_d(int two_ell, double beta);

// xi(x). SU(2): t^ell_{mn}(phi,theta,psi) = e^{-i m phi} d^ell_{nm}(theta) e^{-i n psi}.
Matrix rep_eval(const DualIndex& xi, const GroupPoint& x);

}  // namespace ghyp
