#include "ghyp/dual.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ghyp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

// Relative slack on the cutoff test so that su2_cutoff_for_ell(l) admits l.
constexpr double kCutoffSlack = 1e-12;

double wrap(double a, double period) {
  double r = std::fmod(a, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

constexpr int kFactorialTable = 31;  // 0! .. 30!, i.e. ell <= 15

const std::array<double, kFactorialTable>& factorials() {
  static const auto table = [] {
    std::array<double, kFactorialTable> f{};
    f[0] = 1.0;
    for (int i = 1; i < kFactorialTable; ++i) f[i] = f[i - 1] * i;
    return f;
  }();
  return table;
}

}  // namespace

GroupId GroupId::torus(int d) {
  if (d < 1) throw Error("torus dimension must be >= 1, got " + std::to_string(d));
  return GroupId{GroupKind::Torus, d};
}

std::string GroupId::name() const {
  return is_torus() ? "torus:" + std::to_string(torus_dim) : "su2";
}

GroupId GroupId::parse(const std::string& text) {
  if (text == "su2" || text == "SU2") return su2();
  if (text.rfind("torus:", 0) == 0) {
    const std::string rest = text.substr(6);
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == rest.size() && used > 0) return torus(d);
  }
  if (text == "torus") return torus(1);
  throw Error("unknown group '" + text + "' (expected \"su2\" or \"torus:d\")");
}

DualIndex DualIndex::torus(std::vector<int> n) {
  DualIndex xi;
  xi.group_ = GroupId::torus(static_cast<int>(n.size()));
  xi.n_ = std::move(n);
  return xi;
}

DualIndex DualIndex::su2_twice(int two_ell) {
  if (two_ell < 0) throw Error("SU(2) label 2*ell must be >= 0");
  DualIndex xi;
  xi.group_ = GroupId::su2();
  xi.two_ell_ = two_ell;
  return xi;
}

std::int64_t DualIndex::nu_times4() const {
  if (group_.is_torus()) {
    std::int64_t s = 0;
    for (int v : n_) s += static_cast<std::int64_t>(v) * v;
    return 4 * s;
  }
  // 4 ell (ell + 1) = (2 ell)(2 ell + 2)
  return static_cast<std::int64_t>(two_ell_) * (two_ell_ + 2);
}

double DualIndex::eigenvalue() const { return std::sqrt(1.0 + nu()); }

double DualIndex::eigenvalue_pow(double p) const { return std::pow(1.0 + nu(), 0.5 * p); }

std::string DualIndex::label() const {
  if (group_.is_su2()) {
    if (two_ell_ % 2 == 0) return std::to_string(two_ell_ / 2);
    return std::to_string(two_ell_) + "/2";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < n_.size(); ++i) {
    if (i) os << ':';
    os << n_[i];
  }
  return os.str();
}

DualIndex DualIndex::parse(const GroupId& group, const std::string& label) {
  auto bad = [&] { return Error("cannot parse dual index '" + label + "' for group " + group.name()); };
  if (group.is_su2()) {
    const auto slash = label.find('/');
    try {
      if (slash != std::string::npos) {
        std::size_t u1 = 0, u2 = 0;
        const int num = std::stoi(label.substr(0, slash), &u1);
        const std::string den_text = label.substr(slash + 1);
        const int den = std::stoi(den_text, &u2);
        if (u1 != slash || u2 != den_text.size() || den != 2 || num < 0) throw bad();
        return su2_twice(num);
      }
      std::size_t used = 0;
      const double ell = std::stod(label, &used);
      const double twice = 2.0 * ell;
      if (used != label.size() || twice < 0 || std::abs(twice - std::round(twice)) > 1e-12) throw bad();
      return su2_twice(static_cast<int>(std::lround(twice)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw bad();
    }
  }
  std::vector<int> n;
  std::stringstream ss(label);
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      n.push_back(std::stoi(part, &used));
      if (used != part.size()) throw bad();
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw bad();
    }
  }
  if (static_cast<int>(n.size()) != group.torus_dim) throw bad();
  return torus(std::move(n));
}

bool operator==(const DualIndex& a, const DualIndex& b) {
  return a.group_ == b.group_ && a.n_ == b.n_ && a.two_ell_ == b.two_ell_;
}

std::strong_ordering operator<=>(const DualIndex& a, const DualIndex& b) {
  if (auto c = a.nu_times4() <=> b.nu_times4(); c != 0) return c;
  if (auto c = a.two_ell_ <=> b.two_ell_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.n_.begin(), a.n_.end(), b.n_.begin(), b.n_.end());
}

GroupPoint GroupPoint::identity(const GroupId& group) {
  if (group.is_su2()) return euler(0.0, 0.0, 0.0);
  return torus(std::vector<double>(static_cast<std::size_t>(group.torus_dim), 0.0));
}

GroupPoint GroupPoint::euler(double phi, double theta, double psi) {
  return GroupPoint{GroupId::su2(), {phi, theta, psi}};
}

GroupPoint GroupPoint::torus(std::vector<double> angles) {
  const int d = static_cast<int>(angles.size());
  return GroupPoint{GroupId::torus(d), std::move(angles)};
}

void GroupPoint::validate() const {
  auto fail = [](const std::string& what) { throw Error("group point out of range: " + what); };
  if (group.is_torus()) {
    if (static_cast<int>(coords.size()) != group.torus_dim) fail("wrong number of torus angles");
    for (double a : coords)
      if (!(a >= 0.0 && a < kTwoPi)) fail("torus angle " + std::to_string(a) + " not in [0, 2pi)");
    return;
  }
  if (coords.size() != 3) fail("SU(2) points need three Euler angles");
  if (!(coords[0] >= 0.0 && coords[0] < kTwoPi)) fail("phi not in [0, 2pi)");
  if (!(coords[1] >= 0.0 && coords[1] <= std::numbers::pi)) fail("theta not in [0, pi]");
  if (!(coords[2] >= 0.0 && coords[2] < kFourPi)) fail("psi not in [0, 4pi)");
}

Eigen::Matrix2cd su2_matrix(const GroupPoint& x) {
  const double phi = x.coords.at(0), theta = x.coords.at(1), psi = x.coords.at(2);
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u(0, 0) = std::exp(-i * (0.5 * (phi + psi))) * c;
  u(0, 1) = -std::exp(-i * (0.5 * (phi - psi))) * s;
  u(1, 0) = std::exp(i * (0.5 * (phi - psi))) * s;
  u(1, 1) = std::exp(i * (0.5 * (phi + psi))) * c;
  return u;
}

GroupPoint su2_point(const Eigen::Matrix2cd& u) {
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  const double theta = 2.0 * std::atan2(s, c);
  // u00 = e^{-i(phi+psi)/2} c, u10 = e^{i(phi-psi)/2} s
  double alpha = std::arg(u(0, 0));
  double beta = std::arg(u(1, 0));
  constexpr double kDegenerate = 1e-14;
  if (s < kDegenerate) beta = alpha;        // only phi + psi is determined; take phi = 0
  else if (c < kDegenerate) alpha = beta;   // only phi - psi is determined; take phi = 0
  double phi = beta - alpha;
  double psi = -alpha - beta;
  // (phi + 2pi, psi) and (phi, psi + 2pi) name the same element.
  const double turns = std::floor(phi / kTwoPi);
  phi -= turns * kTwoPi;
  psi += turns * kTwoPi;
  return GroupPoint::euler(wrap(phi, kTwoPi), std::clamp(theta, 0.0, std::numbers::pi), wrap(psi, kFourPi));
}

GroupPoint multiply(const GroupPoint& x, const GroupPoint& y) {
  if (!(x.group == y.group)) throw Error("cannot multiply points of different groups");
  if (x.group.is_torus()) {
    std::vector<double> z(x.coords.size());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = wrap(x.coords[k] + y.coords[k], kTwoPi);
    return GroupPoint::torus(std::move(z));
  }
  return su2_point(su2_matrix(x) * su2_matrix(y));
}

std::vector<DualIndex> enumerate_dual(const GroupId& group, double cutoff) {
  std::vector<DualIndex> out;
  if (!(cutoff >= 1.0)) return out;
  const double max_one_plus_nu = cutoff * cutoff * (1.0 + kCutoffSlack);
  auto admitted = [&](const DualIndex& xi) { return 1.0 + xi.nu() <= max_one_plus_nu; };

  if (group.is_su2()) {
    for (int two_ell = 0;; ++two_ell) {
      auto xi = DualIndex::su2_twice(two_ell);
      if (!admitted(xi)) break;
      out.push_back(std::move(xi));
    }
    return out;
  }

  const int d = group.torus_dim;
  const int L = static_cast<int>(std::floor(std::sqrt(std::max(0.0, max_one_plus_nu - 1.0))));
  std::vector<int> n(static_cast<std::size_t>(d), -L);
  while (true) {
    auto xi = DualIndex::torus(n);
    if (admitted(xi)) out.push_back(std::move(xi));
    int k = d - 1;
    while (k >= 0 && n[static_cast<std::size_t>(k)] == L) {
      n[static_cast<std::size_t>(k)] = -L;
      --k;
    }
    if (k < 0) break;
    ++n[static_cast<std::size_t>(k)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

double su2_cutoff_for_ell(double ell_max) { return std::sqrt(1.0 + ell_max * (ell_max + 1.0)); }

int rep_dim(const DualIndex& xi) { return xi.dim(); }

double eigenvalue(const DualIndex& xi) { return xi.eigenvalue(); }

namespace {

// d(beta) = exp(-beta A) with A = i J_y, real antisymmetric in the ascending
// weight basis. Used above the factorial table, where the alternating sum
// loses digits to cancellation.
Eigen::MatrixXd wigner_by_exponential(int J, double beta) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(J + 1, J + 1);
  for (int col = 0; col < J; ++col) {
    const double M = 2 * col - J;  // 2 m
    const double v = 0.25 * std::sqrt((J - M) * (J + M + 2));
    a(col + 1, col) = v;
    a(col, col + 1) = -v;
  }
  return (-beta * a).exp();
}

}  // namespace

Eigen::MatrixXd wigner_small_d(int two_ell, double beta) {
  const int J = two_ell;
  if (J < 0) throw Error("wigner_small_d: negative ell");
  if (J >= kFactorialTable) return wigner_by_exponential(J, beta);
  const int n = J + 1;
  Eigen::MatrixXd d(n, n);
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const auto& fact = factorials();

  // Half-integer quantities are carried doubled: j+m' = (J+M')/2 etc.
  for (int row = 0; row < n; ++row) {
    const int Mp = 2 * row - J;  // 2 m'
    for (int col = 0; col < n; ++col) {
      const int M = 2 * col - J;  // 2 m
      const int jpmp = (J + Mp) / 2, jmmp = (J - Mp) / 2;
      const int jpm = (J + M) / 2, jmm = (J - M) / 2;
      const int mmp = (M - Mp) / 2;  // m - m'
      const int kmin = std::max(0, mmp);
      const int kmax = std::min(jpm, jmmp);
      double sum = 0.0;
      for (int k = kmin; k <= kmax; ++k) {
        const int cos_pow = J + mmp - 2 * k;
        const int sin_pow = 2 * k - mmp;
        const double sign = ((k - mmp) % 2 == 0) ? 1.0 : -1.0;
        const double coeff = std::sqrt(fact[jpmp] * fact[jmmp] * fact[jpm] * fact[jmm]) /
                             (fact[jpm - k] * fact[k] * fact[jmmp - k] * fact[k - mmp]);
        sum += sign * coeff * std::pow(c, cos_pow) * std::pow(s, sin_pow);
      }
      d(row, col) = sum;
    }
  }
  return d;
}

Matrix rep_eval(const DualIndex& xi, const GroupPoint& x) {
  if (!(xi.group() == x.group)) throw Error("representation and point belong to different groups");
  x.validate();
  const Complex i(0.0, 1.0);
  if (xi.group().is_torus()) {
    double phase = 0.0;
    for (std::size_t k = 0; k < x.coords.size(); ++k) phase += xi.frequencies()[k] * x.coords[k];
    Matrix r(1, 1);
    r(0, 0) = std::exp(i * phase);
    return r;
  }
  const int n = xi.dim();
  const double ell = xi.ell();
  const Eigen::MatrixXd d = wigner_small_d(xi.two_ell(), x.coords[1]);
  Matrix t(n, n);
  for (int p = 0; p < n; ++p) {
    const Complex left = std::exp(-i * ((p - ell) * x.coords[0]));
    for (int q = 0; q < n; ++q) {
      const Complex right = std::exp(-i * ((q - ell) * x.coords[2]));
      t(p, q) = left * d(q, p) * right;
    }
  }
  return t;
}

}  // namespace ghyp
