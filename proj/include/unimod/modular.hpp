#pragma once

// The modular group acting on the upper half-plane, floating-point theta
// evaluation with rigorous truncation bounds, and numeric checks of the
// transformation laws.
//
// Tail bound: for 0 < s < y,
//   sum_{m>N} r_m e^{-pi m y} <= e^{-pi (N+1)(y-s)} theta_L(is)
// and theta_L(is) <= prod_k S(s d_k) where d_k is the Cholesky diagonal and
// S(a) = sum_x e^{-pi a x^2} (a shifted sum is never larger, all Fourier
// coefficients being positive). The same product bounds sums over a shifted
// lattice L + w/2, which gives the shadow tail.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "unimod/enumeration.hpp"
#include "unimod/error.hpp"
#include "unimod/lattice.hpp"

namespace unimod {

using cplx = std::complex<double>;

class GroupElement {
 public:
  GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : a_(a), b_(b), c_(c), d_(d) {
    if (static_cast<__int128>(a) * d - static_cast<__int128>(b) * c != 1)
      throw Error(ErrorKind::Precondition, "matrix does not have determinant 1");
    if (c_ < 0 || (c_ == 0 && d_ < 0)) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
  }

  static GroupElement S() { return {0, -1, 1, 0}; }
  static GroupElement T() { return {1, 1, 0, 1}; }
  static GroupElement identity() { return {1, 0, 0, 1}; }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
            x.c_ * y.b_ + x.d_ * y.d_};
  }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  std::string to_string() const {
    return "(" + std::to_string(a_) + " " + std::to_string(b_) + "; " + std::to_string(c_) + " " +
           std::to_string(d_) + ")";
  }

 private:
  std::int64_t a_, b_, c_, d_;
};

enum class CosetClass { GammaPlus, CosetT, CosetTS };

inline std::string to_string(CosetClass c) {
  switch (c) {
    case CosetClass::GammaPlus: return "GammaPlus";
    case CosetClass::CosetT: return "CosetT";
    case CosetClass::CosetTS: return "CosetTS";
  }
  return "?";
}

/// Right coset of the subgroup generated by S and T^2, read off from the
/// reduction mod 2 (elements of that subgroup are = 1 or S mod 2).
inline CosetClass classify(const GroupElement& g) {
  const int key = static_cast<int>((g.a() & 1) << 3 | (g.b() & 1) << 2 | (g.c() & 1) << 1 | (g.d() & 1));
  switch (key) {
    case 0b1001:  // 1
    case 0b0110:  // S
      return CosetClass::GammaPlus;
    case 0b1101:  // T
    case 0b0111:  // ST
      return CosetClass::CosetT;
    default:  // TS = (1 1; 1 0) and (1 0; 1 1)
      return CosetClass::CosetTS;
  }
}

struct HalfPlanePoint {
  double x = 0;
  double y = 1;

  HalfPlanePoint() = default;
  HalfPlanePoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y_ > 0) || !std::isfinite(x_) || !std::isfinite(y_))
      throw Error(ErrorKind::Precondition, "point must lie in the upper half-plane");
  }
  explicit HalfPlanePoint(cplx z) : HalfPlanePoint(z.real(), z.imag()) {}
  cplx z() const { return {x, y}; }
};

inline HalfPlanePoint apply(const GroupElement& g, const HalfPlanePoint& t) {
  const cplx z = t.z();
  const cplx w = (static_cast<double>(g.a()) * z + static_cast<double>(g.b())) /
                 (static_cast<double>(g.c()) * z + static_cast<double>(g.d()));
  // Im g(t) = Im t / |ct+d|^2 exactly; use it to avoid cancellation.
  const cplx den = static_cast<double>(g.c()) * z + static_cast<double>(g.d());
  return HalfPlanePoint(w.real(), t.y / std::norm(den));
}

/// n-th power of the principal square root.
inline cplx half_power(cplx z, int n) {
  const cplx r = std::sqrt(z);
  cplx p = 1;
  for (int i = 0; i < n; ++i) p *= r;
  return p;
}

struct EvalResult {
  cplx value;
  double tail_bound = 0;
  std::int64_t terms = 0;  // truncation used (norm for theta, quarter-exponent for shadows)
};

inline constexpr double kMinEvalY = 0.2;

namespace modular_detail {

// S(a) = sum_{x in Z} e^{-pi a x^2}, rounded up.
inline double gauss_sum(double a) {
  const double pi = std::numbers::pi;
  double s = 1;
  std::int64_t x = 1;
  for (; x < 10000000; ++x) {
    const double term = std::exp(-pi * a * static_cast<double>(x * x));
    s += 2 * term;
    if (term < 1e-19 * s) break;
  }
  const double k1 = static_cast<double>(x + 1);
  const double rest = std::exp(-pi * a * k1 * k1) / (1 - std::exp(-pi * a * k1));
  return (s + 2 * rest) * (1 + 1e-12);
}

}  // namespace modular_detail

/// Floating-point evaluation of theta_L and the shadow series, caching the
/// exact norm counts it needs.
class ThetaEvaluator {
 public:
  explicit ThetaEvaluator(Lattice l, EnumOptions opts = {}) : l_(std::move(l)), opts_(opts) {
    if (l_.rank() > 0) {
      const EnumPlan plan(l_, opts_.reduce);
      for (const auto& d : plan.cholesky_diagonal()) {
        // round down, a smaller d only enlarges the bound
        d_.push_back(static_cast<double>(d) * (1 - 1e-12));
      }
    }
  }

  const Lattice& lattice() const noexcept { return l_; }
  int rank() const noexcept { return static_cast<int>(l_.rank()); }

  /// Bound on sum over the tail (m > N) of c_m e^{-pi m y / scale}, scale 1 for
  /// theta and 4 for the shadow (quarter-exponents).
  double tail_bound(double y, std::int64_t n_trunc, double scale) const {
    if (l_.rank() == 0) return 0;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 1; j < 64; ++j) {
      const double s = y * j / 64.0;
      double prod = 1;
      for (double d : d_) prod *= modular_detail::gauss_sum(s * d);
      const double b = std::exp(-std::numbers::pi * static_cast<double>(n_trunc + 1) * (y - s) / scale) * prod;
      best = std::min(best, b);
    }
    return best * (1 + 1e-9);
  }

  /// Smallest truncation whose tail bound is <= tol.
  std::int64_t truncation_for(double y, double tol, double scale) const {
    if (l_.rank() == 0) return 0;
    std::int64_t lo = 0;
    std::int64_t hi = 1;
    while (tail_bound(y, hi, scale) > tol) {
      hi *= 2;
      if (hi > kMaxTruncation)
        throw Error(ErrorKind::Precision, "tolerance " + std::to_string(tol) + " unreachable at y = " +
                                              std::to_string(y));
    }
    while (lo < hi) {
      const std::int64_t mid = (lo + hi) / 2;
      if (tail_bound(y, mid, scale) <= tol)
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  }

  EvalResult theta(const HalfPlanePoint& t, double tol) { return eval(t, tol, false, false); }
  /// sum_v (-1)^{|v|^2} e^{pi i |v|^2 t}
  EvalResult theta_signed(const HalfPlanePoint& t, double tol) { return eval(t, tol, false, true); }
  /// sum over v in L + w/2 of e^{pi i |v|^2 t}
  EvalResult shadow(const HalfPlanePoint& t, double tol) { return eval(t, tol, true, false); }

  static constexpr std::int64_t kMaxTruncation = 1 << 14;

 private:
  EvalResult eval(const HalfPlanePoint& t, double tol, bool shadow, bool signed_terms) {
    if (t.y < kMinEvalY)
      throw Error(ErrorKind::Precondition, "evaluation needs Im t >= 0.2, got " + std::to_string(t.y));
    if (!(tol > 0)) throw Error(ErrorKind::Precondition, "tolerance must be positive");
    const double scale = shadow ? 4.0 : 1.0;
    const std::int64_t n = truncation_for(t.y, tol, scale);
    const std::vector<std::uint64_t>& counts = shadow ? coset_counts(n) : norm_counts(n);
    // terms are summed from the top so the small ones are added first
    cplx acc = 0;
    for (std::int64_t m = n; m >= 0; --m) {
      if (!counts[m]) continue;
      cplx term = static_cast<double>(counts[m]) * std::exp(cplx(0, std::numbers::pi * m / scale) * t.z());
      if (signed_terms && (m & 1)) term = -term;
      acc += term;
    }
    EvalResult r{acc, l_.rank() == 0 ? 0.0 : tail_bound(t.y, n, scale), n};
    return r;
  }

  const std::vector<std::uint64_t>& norm_counts(std::int64_t n) {
    if (l_.rank() == 0) {
      norm_.assign(static_cast<std::size_t>(n) + 1, 0);
      norm_[0] = 1;
      return norm_;
    }
    if (static_cast<std::int64_t>(norm_.size()) <= n) {
      check_feasible(n, 1.0);
      norm_ = norm_histogram(l_, n, opts_).counts;
    }
    return norm_;
  }

  const std::vector<std::uint64_t>& coset_counts(std::int64_t n) {
    if (l_.rank() == 0) {
      coset_.assign(static_cast<std::size_t>(n) + 1, 0);
      coset_[0] = 1;
      return coset_;
    }
    if (static_cast<std::int64_t>(coset_.size()) <= n) {
      check_feasible(n, 4.0);
      coset_ = coset_histogram(l_, characteristic_coset(l_), n, opts_).counts;
    }
    return coset_;
  }

  // Refuses searches whose expected size (ball volume over covolume) is beyond desk scale.
  void check_feasible(std::int64_t n, double scale) const {
    const double k = static_cast<double>(l_.rank());
    const double r2 = static_cast<double>(n) / scale;
    const double logv = k / 2 * std::log(std::numbers::pi * r2) - std::lgamma(k / 2 + 1);
    if (logv > std::log(4e9))
      throw Error(ErrorKind::Precision, "evaluation would enumerate about e^" + std::to_string(logv) + " vectors");
  }

  Lattice l_;
  EnumOptions opts_;
  std::vector<double> d_;
  std::vector<std::uint64_t> norm_;
  std::vector<std::uint64_t> coset_;
};

/// theta_Z(t) by direct summation, valid for any y > 0.
inline EvalResult eval_theta_z(const HalfPlanePoint& t) {
  const double pi = std::numbers::pi;
  const auto k = static_cast<std::int64_t>(std::ceil(std::sqrt(45.0 / (pi * t.y)))) + 1;
  if (k > 100000000) throw Error(ErrorKind::Precision, "Im t too small for direct theta_Z summation");
  cplx acc = 0;
  for (std::int64_t x = k; x >= 1; --x) acc += 2.0 * std::exp(cplx(0, pi * static_cast<double>(x * x)) * t.z());
  acc += 1.0;
  const double k1 = static_cast<double>(k + 1);
  const double tail = 2 * std::exp(-pi * t.y * k1 * k1) / (1 - std::exp(-pi * t.y * k1));
  return {acc, tail, k};
}

enum class Relation { T2Invariance, PoissonS, GeneralG, TShift, ShadowTS, ShadowShift };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::T2Invariance: return "t2-invariance";
    case Relation::PoissonS: return "poisson-s";
    case Relation::GeneralG: return "general-g";
    case Relation::TShift: return "t-shift";
    case Relation::ShadowTS: return "shadow-ts";
    case Relation::ShadowShift: return "shadow-shift";
  }
  return "?";
}

inline Relation parse_relation(const std::string& s) {
  for (Relation r : {Relation::T2Invariance, Relation::PoissonS, Relation::GeneralG, Relation::TShift,
                     Relation::ShadowTS, Relation::ShadowShift})
    if (to_string(r) == s) return r;
  throw Error(ErrorKind::UnknownId, "unknown relation '" + s + "'");
}

inline const std::vector<HalfPlanePoint>& default_points() {
  static const std::vector<HalfPlanePoint> pts = {
      {0.0, 1.0}, {0.0, 2.0}, {0.2, 1.0}, {-1.0 / 3.0, 2.0}, {0.7, 0.9}};
  return pts;
}

inline constexpr double kDefaultTol = 1e-8;

inline GroupElement default_general_g() { return GroupElement::S() * GroupElement(1, 2, 0, 1) * GroupElement::S(); }

struct EpsilonReport {
  int k = 0;  // epsilon = e^{2 pi i k / 8}
  cplx ratio0;
  cplx ratio1;
  double distance = 0;  // worst distance to the snapped root
};

inline constexpr double kEpsilonSnap = 1e-6;

namespace modular_detail {

inline cplx epsilon_ratio(const GroupElement& g, const HalfPlanePoint& t, int n) {
  const HalfPlanePoint gt = apply(g, t);
  const cplx num = eval_theta_z(gt).value;
  const cplx den = eval_theta_z(t).value;
  const cplx ctd = static_cast<double>(g.c()) * t.z() + static_cast<double>(g.d());
  cplx r = 1;
  const cplx one = num / (std::sqrt(ctd) * den);
  for (int i = 0; i < n; ++i) r *= one;
  return r;
}

inline int snap_eighth(cplx r, double& dist) {
  const double ang = std::arg(r);
  int k = static_cast<int>(std::lround(ang / (std::numbers::pi / 4)));
  k = ((k % 8) + 8) % 8;
  dist = std::abs(r - std::polar(1.0, k * std::numbers::pi / 4));
  return k;
}

}  // namespace modular_detail

/// epsilon_n(c,d) for g in Gamma_+, read off from theta_Z^n at two base points.
inline EpsilonReport epsilon_extract_report(const GroupElement& g, int n) {
  if (classify(g) != CosetClass::GammaPlus)
    throw Error(ErrorKind::Precondition, "epsilon is defined for elements of Gamma_+ only, got " + g.to_string());
  if (n < 1) throw Error(ErrorKind::Precondition, "n must be >= 1");
  const HalfPlanePoint t0(0.2, 1.0);
  const HalfPlanePoint t1(-1.0 / 3.0, 2.0);
  EpsilonReport rep;
  rep.ratio0 = modular_detail::epsilon_ratio(g, t0, n);
  rep.ratio1 = modular_detail::epsilon_ratio(g, t1, n);
  double d0 = 0;
  double d1 = 0;
  const int k0 = modular_detail::snap_eighth(rep.ratio0, d0);
  const int k1 = modular_detail::snap_eighth(rep.ratio1, d1);
  rep.distance = std::max(d0, d1);
  if (rep.distance > kEpsilonSnap)
    throw Error(ErrorKind::Extraction, "ratio for " + g.to_string() + " is " + std::to_string(rep.distance) +
                                           " away from an eighth root of unity");
  if (k0 != k1)
    throw Error(ErrorKind::Extraction, "base points disagree for " + g.to_string() + ": k = " +
                                           std::to_string(k0) + " vs " + std::to_string(k1));
  rep.k = k0;
  if (n > 1) {
    const int base = epsilon_extract_report(g, 1).k;
    if ((base * n) % 8 != rep.k)
      throw Error(ErrorKind::Extraction, "epsilon_n != epsilon_1^n for " + g.to_string());
  }
  return rep;
}

inline int epsilon_extract(const GroupElement& g, int n) { return epsilon_extract_report(g, n).k; }

inline cplx eighth_root(int k) { return std::polar(1.0, k * std::numbers::pi / 4); }

struct RelationReport {
  Relation relation = Relation::T2Invariance;
  HalfPlanePoint point;
  cplx lhs;
  cplx rhs;
  double residual = 0;
  double tail = 0;  // combined truncation bound, scaled by the factors applied
  double tol = 0;
  bool pass = false;
  std::optional<int> epsilon_k;
};

/// Checks one transformation law at t. Pass iff |lhs - rhs| <= tol + tail.
inline RelationReport check_relation(ThetaEvaluator& ev, Relation rel, const HalfPlanePoint& t,
                                     double tol = kDefaultTol,
                                     std::optional<GroupElement> g = std::nullopt) {
  const int n = ev.rank();
  const cplx z = t.z();
  const double side_tol = tol / 4;
  RelationReport rep;
  rep.relation = rel;
  rep.point = t;
  rep.tol = tol;

  // value and tail of factor * f(point)
  auto side = [&](cplx factor, const HalfPlanePoint& p, int which) {
    const double af = std::max(std::abs(factor), 1e-300);
    EvalResult e = which == 0 ? ev.theta(p, side_tol / std::max(af, 1.0))
                   : which == 1 ? ev.shadow(p, side_tol / std::max(af, 1.0))
                                : ev.theta_signed(p, side_tol / std::max(af, 1.0));
    rep.tail += std::abs(factor) * e.tail_bound;
    return factor * e.value;
  };
  auto check_domain = [](const HalfPlanePoint& p) {
    if (p.y < kMinEvalY)
      throw Error(ErrorKind::Precondition, "transformed point has Im = " + std::to_string(p.y) + " < 0.2");
    return p;
  };

  switch (rel) {
    case Relation::T2Invariance: {
      const HalfPlanePoint t2 = check_domain(HalfPlanePoint(t.x + 2, t.y));
      rep.lhs = side(1.0, check_domain(t), 0);
      rep.rhs = side(1.0, t2, 0);
      break;
    }
    case Relation::PoissonS: {
      const HalfPlanePoint st = check_domain(apply(GroupElement::S(), t));
      check_domain(t);
      rep.lhs = side(half_power(z / cplx(0, 1), n), t, 0);
      rep.rhs = side(1.0, st, 0);
      break;
    }
    case Relation::GeneralG: {
      const GroupElement h = g.value_or(default_general_g());
      const HalfPlanePoint gt = check_domain(apply(h, t));
      check_domain(t);
      const int k = epsilon_extract(h, n == 0 ? 1 : n);
      rep.epsilon_k = n == 0 ? 0 : k;
      const cplx ctd = static_cast<double>(h.c()) * z + static_cast<double>(h.d());
      rep.lhs = side(1.0, gt, 0);
      rep.rhs = side(eighth_root(*rep.epsilon_k) * half_power(ctd, n), t, 0);
      break;
    }
    case Relation::TShift: {
      const HalfPlanePoint t1 = check_domain(HalfPlanePoint(t.x + 1, t.y));
      rep.lhs = side(1.0, t1, 0);
      rep.rhs = side(1.0, check_domain(t), 2);
      break;
    }
    case Relation::ShadowTS: {
      const HalfPlanePoint tst = check_domain(apply(GroupElement::T() * GroupElement::S(), t));
      check_domain(t);
      rep.lhs = side(1.0, tst, 0);
      rep.rhs = side(half_power(z / cplx(0, 1), n), t, 1);
      break;
    }
    case Relation::ShadowShift: {
      const HalfPlanePoint t1 = check_domain(HalfPlanePoint(t.x + 1, t.y));
      check_domain(t);
      rep.lhs = side(1.0, t1, 1);
      rep.rhs = side(std::polar(1.0, std::numbers::pi * n / 4), t, 1);
      break;
    }
  }
  rep.residual = std::abs(rep.lhs - rep.rhs);
  rep.pass = rep.residual <= tol + rep.tail;
  return rep;
}

inline RelationReport check_relation(const Lattice& l, Relation rel, const HalfPlanePoint& t,
                                     double tol = kDefaultTol, std::optional<GroupElement> g = std::nullopt) {
  ThetaEvaluator ev(l);
  return check_relation(ev, rel, t, tol, g);
}

}  // namespace unimod
