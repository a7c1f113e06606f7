#pragma once

// Exact enumeration of lattice vectors below a norm bound.
//
// The kernel is Fincke-Pohst depth-first search over coordinates from last to
// first, carried out entirely in integers. With D_k the leading principal
// minors of the Gram matrix and N_jk = mu_jk * D_k (integers), the k-th
// Cholesky term of the norm is T_k^2 / (D_k D_{k-1}) where
// T_k = D_k x_k + sum_{j>k} N_jk x_j. The scaled partial norm
// V_k = D_{k-1} * sum_{j>=k} (terms) is an integer (it is D_{k-1} times a
// Schur-complement form), and satisfies V_k = (T_k^2 + D_{k-1} V_{k+1}) / D_k.
// The pruning test "partial norm <= B" becomes T_k^2 <= D_{k-1} (D_k B - V_{k+1}),
// so every bound is an exact integer square root.
//
// Characteristic-coset enumeration is the same search restricted to
// coordinates congruent to a fixed residue mod 2 (x in w + 2L iff x = w mod 2
// coordinatewise).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "unimod/error.hpp"
#include "unimod/exact_linalg.hpp"
#include "unimod/lattice.hpp"

namespace unimod {

enum class KernelWidth { Auto, Int64, Int128, Big };

struct EnumOptions {
  unsigned threads = 1;
  bool reduce = true;  // LLL-reduce the Gram matrix before searching
  KernelWidth width = KernelWidth::Auto;
};

namespace detail {

using i128 = __int128;

inline i128 to_i128(const BigInt& v) {
  const BigInt a = abs(v);
  if (a != 0 && msb(a) >= 126) throw Error(ErrorKind::Precondition, "value exceeds 128-bit range");
  const BigInt mask = (BigInt(1) << 64) - 1;
  const auto lo = static_cast<unsigned __int128>((a & mask).convert_to<std::uint64_t>());
  const auto hi = static_cast<unsigned __int128>((a >> 64).convert_to<std::uint64_t>());
  const i128 r = static_cast<i128>((hi << 64) | lo);
  return v < 0 ? -r : r;
}

template <class Int>
Int from_big(const BigInt& v) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return v;
  } else if constexpr (std::is_same_v<Int, i128>) {
    return to_i128(v);
  } else {
    return to_int64(v);
  }
}

template <class Int>
std::int64_t to_i64(const Int& v) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return to_int64(v);
  } else {
    return static_cast<std::int64_t>(v);
  }
}

template <class Int>
Int isqrt(const Int& w) {
  if (w <= 0) return Int(0);
  if constexpr (std::is_same_v<Int, BigInt>) {
    return boost::multiprecision::sqrt(w);
  } else {
    Int r;
    if constexpr (std::is_same_v<Int, std::int64_t>)
      r = static_cast<Int>(std::sqrt(static_cast<double>(w)));
    else
      r = static_cast<Int>(std::sqrt(static_cast<long double>(w)));
    while (r > 0 && r * r > w) --r;
    while ((r + 1) * (r + 1) <= w) ++r;
    return r;
  }
}

template <class Int>
Int floor_div_pos(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && a < 0) --q;
  return q;
}

template <class Int>
Int ceil_div_pos(const Int& a, const Int& b) {
  return -floor_div_pos<Int>(-a, b);
}

}  // namespace detail

/// Precomputed search data for one lattice: optional LLL transform and the
/// integer triangular data of the (reduced) Gram matrix.
class EnumPlan {
 public:
  explicit EnumPlan(const Lattice& l, bool reduce = true) : n_(l.rank()) {
    if (n_ == 0) return;
    if (reduce) {
      LllResult r = lll_reduce_gram(l.gram());
      gram_ = std::move(r.gram);
      u_ = std::move(r.transform);
      identity_ = (u_ == IntMatrix::identity(n_));
      if (!identity_) uinv_ = unimodular_inverse(u_);
    } else {
      gram_ = l.gram();
      u_ = IntMatrix::identity(n_);
      identity_ = true;
    }
    const CholeskyData ch = cholesky_rational(gram_);
    minors_.assign(n_ + 1, BigInt(1));
    Rational acc = 1;
    for (std::size_t k = 0; k < n_; ++k) {
      acc *= ch.d[k];
      if (!is_integer(acc)) throw Error(ErrorKind::Precondition, "leading minor is not an integer");
      minors_[k + 1] = numerator(acc);
    }
    scaled_mu_ = IntMatrix(n_, n_);
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t j = k + 1; j < n_; ++j) {
        const Rational v = ch.mu(j, k) * Rational(minors_[k + 1]);
        if (!is_integer(v)) throw Error(ErrorKind::Precondition, "scaled Cholesky entry is not an integer");
        scaled_mu_(k, j) = numerator(v);
      }
    const RatMatrix ginv = inverse_rational(gram_);
    inv_diag_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) inv_diag_[k] = ginv(k, k);
    row0_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) row0_[j] = to_int64(gram_(0, j));
    cholesky_d_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) cholesky_d_[k] = ch.d[k];
  }

  std::size_t rank() const noexcept { return n_; }
  const IntMatrix& reduced_gram() const noexcept { return gram_; }
  const IntMatrix& transform() const noexcept { return u_; }
  const std::vector<BigInt>& minors() const noexcept { return minors_; }
  const IntMatrix& scaled_mu() const noexcept { return scaled_mu_; }
  const std::vector<std::int64_t>& row0() const noexcept { return row0_; }
  const std::vector<Rational>& cholesky_diagonal() const noexcept { return cholesky_d_; }

  /// Maps coordinates in the reduced basis back to the lattice's own basis.
  LatticeVector to_original(const std::vector<std::int64_t>& y) const {
    if (identity_) return LatticeVector{y};
    return apply_columns(u_, y);
  }

  /// Residues mod 2 of w expressed in the reduced basis.
  std::vector<std::int8_t> reduced_parity(const LatticeVector& w) const {
    std::vector<std::int8_t> r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (identity_) {
        r[i] = static_cast<std::int8_t>(w.coords[i] & 1);
        continue;
      }
      BigInt s = 0;
      for (std::size_t j = 0; j < n_; ++j) s += uinv_(i, j) * w.coords[j];
      r[i] = is_odd(s) ? 1 : 0;
    }
    return r;
  }

  /// Narrowest integer type whose range covers every intermediate of a
  /// search with this bound.
  KernelWidth width_for(std::int64_t bound) const {
    if (n_ == 0) return KernelWidth::Int64;
    const BigInt b = bound;
    std::vector<BigInt> xmax(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational r = inv_diag_[j] * Rational(b);
      xmax[j] = detail::isqrt<BigInt>(numerator(r) / denominator(r)) + 2;
    }
    BigInt worst = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      const BigInt w = minors_[k] * minors_[k + 1] * b;
      BigInt p = 0;
      for (std::size_t j = k + 1; j < n_; ++j) p += abs(scaled_mu_(k, j)) * xmax[j];
      worst = std::max(worst, BigInt(2 * w + 1));
      worst = std::max(worst, BigInt(p + minors_[k + 1] * (xmax[k] + 2) + detail::isqrt<BigInt>(w) + 1));
    }
    BigInt leaf = 0;
    for (std::size_t j = 0; j < n_; ++j) leaf += abs(BigInt(row0_[j])) * xmax[j];
    if (leaf > (BigInt(1) << 40) || b > (BigInt(1) << 40))
      throw Error(ErrorKind::Precondition, "enumeration bound too large");
    if (worst < (BigInt(1) << 62)) return KernelWidth::Int64;
    if (worst < (BigInt(1) << 125)) return KernelWidth::Int128;
    return KernelWidth::Big;
  }

 private:
  std::size_t n_;
  IntMatrix gram_;
  IntMatrix u_;
  IntMatrix uinv_;
  bool identity_ = true;
  std::vector<BigInt> minors_;  // minors_[0] = 1, minors_[k+1] = det of leading (k+1)-block
  IntMatrix scaled_mu_;         // (k, j) for j > k
  std::vector<Rational> inv_diag_;
  std::vector<std::int64_t> row0_;
  std::vector<Rational> cholesky_d_;
};

namespace detail {

// Visitor protocol: vis(y, norm, multiplicity) with y in reduced coordinates.
// In symmetric mode only one of each +-pair is produced, with multiplicity 2.
//
// Centers P_k = sum_{j>k} N_jk x_j are kept as suffix sums C[k][j] that are
// refreshed only from the highest coordinate changed since the last visit.
template <class Int, class Visitor>
class Search {
 public:
  Search(const EnumPlan& plan, std::int64_t bound, const std::vector<std::int8_t>* parity, bool symmetric,
         Visitor& vis)
      : n_(static_cast<int>(plan.rank())), bound_(bound), symmetric_(symmetric), vis_(vis) {
    D_.resize(n_ + 1);
    for (int k = 0; k <= n_; ++k) D_[k] = from_big<Int>(plan.minors()[k]);
    N_.assign(n_, std::vector<Int>(n_ + 1, Int(0)));
    for (int k = 0; k < n_; ++k)
      for (int j = k + 1; j < n_; ++j) N_[k][j] = from_big<Int>(plan.scaled_mu()(k, j));
    C_.assign(n_, std::vector<Int>(n_ + 1, Int(0)));
    row0_ = plan.row0();
    row0_.push_back(0);
    lin_.assign(n_ + 1, 0);
    hi_.assign(n_, n_ - 1);
    parity_.assign(n_, -1);
    if (parity) parity_ = *parity;
    x_.assign(n_, 0);
    V_.assign(n_ + 1, Int(0));
  }

  // Candidate values of the top coordinate.
  std::vector<std::int64_t> top_values() {
    std::vector<std::int64_t> out;
    if (n_ <= 1) {
      out.push_back(0);  // a single task covering the whole search
      return out;
    }
    std::int64_t lo, hi, step;
    if (!range(n_ - 1, Int(0), !symmetric_, lo, hi, step)) return out;
    for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }

  void run_task(std::int64_t top) {
    if (n_ == 0) {
      if (bound_ >= 0) vis_(x_, 0, 1);
      return;
    }
    if (n_ == 1) {
      leaf(!symmetric_);
      return;
    }
    const int k = n_ - 1;
    const Int T = D_[k + 1] * Int(top);
    V_[k] = (T * T + D_[k] * V_[k + 1]) / D_[k + 1];
    x_[k] = top;
    descend(k - 1, !symmetric_ || top != 0);
  }

 private:
  bool range(int k, const Int& P, bool fixed, std::int64_t& lo, std::int64_t& hi, std::int64_t& step) const {
    const Int W = D_[k] * (D_[k + 1] * Int(bound_) - V_[k + 1]);
    if (W < 0) return false;
    const Int s = isqrt<Int>(W);
    const Int& dk = D_[k + 1];
    lo = to_i64<Int>(ceil_div_pos<Int>(-s - P, dk));
    hi = to_i64<Int>(floor_div_pos<Int>(s - P, dk));
    if (!fixed) lo = std::max<std::int64_t>(lo, 0);
    step = 1;
    if (parity_[k] >= 0) {
      if (((lo - parity_[k]) & 1) != 0) ++lo;
      step = 2;
    }
    return lo <= hi;
  }

  // Brings C[k][k+1] (and lin_ when k = 0) up to date.
  const Int& center(int k) {
    if (k > 0) hi_[k - 1] = std::max(hi_[k - 1], hi_[k]);
    auto& c = C_[k];
    const auto& nk = N_[k];
    for (int j = hi_[k]; j > k; --j) c[j] = c[j + 1] + nk[j] * Int(x_[j]);
    if (k == 0)
      for (int j = hi_[0]; j > 0; --j) lin_[j] = lin_[j + 1] + row0_[j] * x_[j];
    hi_[k] = k + 1;
    return c[k + 1];
  }

  void descend(int k, bool fixed) {
    if (k == 0) {
      leaf(fixed);
      return;
    }
    const Int P = center(k);
    std::int64_t lo, hi, step;
    if (!range(k, P, fixed, lo, hi, step)) return;
    for (std::int64_t v = lo; v <= hi; v += step) {
      const Int T = D_[k + 1] * Int(v) + P;
      V_[k] = (T * T + D_[k] * V_[k + 1]) / D_[k + 1];
      x_[k] = v;
      descend(k - 1, fixed || v != 0);
    }
    x_[k] = 0;
  }

  void leaf(bool fixed) {
    const Int P = center(0);
    std::int64_t lo, hi, step;
    if (!range(0, P, fixed, lo, hi, step)) return;
    const std::int64_t lin = lin_[1];
    const Int T = D_[1] * Int(lo) + P;
    std::int64_t norm = to_i64<Int>((T * T + V_[1]) / D_[1]);
    const std::int64_t g00 = row0_[0];
    for (std::int64_t v = lo; v <= hi; v += step) {
      x_[0] = v;
      vis_(x_, norm, (symmetric_ && (fixed || v != 0)) ? 2 : 1);
      norm += g00 * (2 * v * step + step * step) + 2 * lin * step;
    }
    x_[0] = 0;
  }

  int n_;
  std::int64_t bound_;
  bool symmetric_;
  Visitor& vis_;
  std::vector<Int> D_;
  std::vector<std::vector<Int>> N_;
  std::vector<std::vector<Int>> C_;
  std::vector<std::int64_t> row0_;
  std::vector<std::int64_t> lin_;
  std::vector<int> hi_;
  std::vector<std::int8_t> parity_;
  std::vector<std::int64_t> x_;
  std::vector<Int> V_;
};

template <class Int, class Visitor>
std::vector<Visitor> run_width(const EnumPlan& plan, std::int64_t bound, const std::vector<std::int8_t>* parity,
                               bool symmetric, unsigned threads, const Visitor& proto) {
  std::vector<std::int64_t> tops;
  {
    Visitor scratch = proto;
    Search<Int, Visitor> probe(plan, bound, parity, symmetric, scratch);
    tops = probe.top_values();
  }
  std::vector<Visitor> out(tops.size(), proto);
  auto work = [&](std::size_t i) {
    Search<Int, Visitor> s(plan, bound, parity, symmetric, out[i]);
    s.run_task(tops[i]);
  };
  if (threads <= 1 || tops.size() <= 1) {
    for (std::size_t i = 0; i < tops.size(); ++i) work(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(tops.size()));
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tops.size(); i = next++) work(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

/// Runs the search and returns one visitor per top-level task, in task order.
template <class Visitor>
std::vector<Visitor> run_search(const EnumPlan& plan, std::int64_t bound, const std::vector<std::int8_t>* parity,
                                bool symmetric, const EnumOptions& opts, const Visitor& proto) {
  if (bound < 0) return {};
  KernelWidth w = plan.width_for(bound);
  if (opts.width != KernelWidth::Auto) {
    if (static_cast<int>(opts.width) < static_cast<int>(w))
      throw Error(ErrorKind::Precondition, "requested kernel width is too narrow for this search");
    w = opts.width;
  }
  switch (w) {
    case KernelWidth::Int64:
      return run_width<std::int64_t>(plan, bound, parity, symmetric, opts.threads, proto);
    case KernelWidth::Int128:
      return run_width<i128>(plan, bound, parity, symmetric, opts.threads, proto);
    default:
      return run_width<BigInt>(plan, bound, parity, symmetric, opts.threads, proto);
  }
}

struct CollectVisitor {
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> hits;
  void operator()(const std::vector<std::int64_t>& y, std::int64_t norm, int) { hits.emplace_back(norm, y); }
};

struct HistogramVisitor {
  std::vector<std::uint64_t> counts;
  void operator()(const std::vector<std::int64_t>&, std::int64_t norm, int mult) {
    counts[static_cast<std::size_t>(norm)] += static_cast<std::uint64_t>(mult);
  }
};

inline std::vector<LatticeVector> collect_sorted(const EnumPlan& plan, std::vector<CollectVisitor>&& parts) {
  std::vector<std::pair<std::int64_t, LatticeVector>> all;
  for (auto& p : parts)
    for (auto& h : p.hits) all.emplace_back(h.first, plan.to_original(h.second));
  std::sort(all.begin(), all.end());
  std::vector<LatticeVector> out;
  out.reserve(all.size());
  for (auto& a : all) out.push_back(std::move(a.second));
  return out;
}

}  // namespace detail

/// All v with |v|^2 <= bound (including 0), sorted by norm then coordinates.
inline std::vector<LatticeVector> enumerate_short(const Lattice& l, std::int64_t bound, const EnumOptions& opts = {}) {
  if (bound < 0) return {};
  const EnumPlan plan(l, opts.reduce);
  return detail::collect_sorted(plan, detail::run_search(plan, bound, nullptr, false, opts, detail::CollectVisitor{}));
}

/// All x in w + 2L with |x|^2 <= bound, sorted by norm then coordinates.
inline std::vector<LatticeVector> enumerate_coset(const Lattice& l, const CharCoset& c, std::int64_t bound,
                                                  const EnumOptions& opts = {}) {
  if (bound < 0) return {};
  if (c.w.size() != l.rank()) throw Error(ErrorKind::Dimension, "coset representative has the wrong rank");
  const EnumPlan plan(l, opts.reduce);
  const auto parity = plan.reduced_parity(c.w);
  return detail::collect_sorted(plan, detail::run_search(plan, bound, &parity, false, opts, detail::CollectVisitor{}));
}

struct NormHistogram {
  std::int64_t max_norm = 0;
  std::vector<std::uint64_t> counts;  // counts[m] = #{v : |v|^2 = m}

  std::uint64_t operator[](std::size_t m) const { return counts.at(m); }
};

namespace detail {
inline NormHistogram histogram_impl(const EnumPlan& plan, std::int64_t max_norm,
                                    const std::vector<std::int8_t>* parity, const EnumOptions& opts) {
  if (max_norm < 0) throw Error(ErrorKind::Precondition, "histogram bound must be >= 0");
  HistogramVisitor proto;
  proto.counts.assign(static_cast<std::size_t>(max_norm) + 1, 0);
  NormHistogram h{max_norm, proto.counts};
  for (const auto& part : run_search(plan, max_norm, parity, true, opts, proto))
    for (std::size_t m = 0; m < h.counts.size(); ++m) h.counts[m] += part.counts[m];
  return h;
}
}  // namespace detail

inline NormHistogram norm_histogram(const Lattice& l, std::int64_t max_norm, const EnumOptions& opts = {}) {
  const EnumPlan plan(l, opts.reduce);
  return detail::histogram_impl(plan, max_norm, nullptr, opts);
}

/// counts[m] = #{x in w + 2L : |x|^2 = m} for m <= max_norm.
inline NormHistogram coset_histogram(const Lattice& l, const CharCoset& c, std::int64_t max_norm,
                                     const EnumOptions& opts = {}) {
  const EnumPlan plan(l, opts.reduce);
  const auto parity = plan.reduced_parity(c.w);
  return detail::histogram_impl(plan, max_norm, &parity, opts);
}

struct CharMinReport {
  std::int64_t min_norm = 0;
  BigInt count_at_min = 0;
  std::vector<LatticeVector> witnesses;  // up to 10, canonical order
};

namespace detail {
struct MinCharVisitor {
  static constexpr std::size_t kWitnesses = 10;
  const EnumPlan* plan = nullptr;
  std::int64_t min_norm = -1;
  std::uint64_t count = 0;
  std::vector<LatticeVector> best;  // sorted, at most kWitnesses

  void offer(LatticeVector v) {
    auto it = std::lower_bound(best.begin(), best.end(), v);
    if (it != best.end() && *it == v) return;
    if (best.size() == kWitnesses && it == best.end()) return;
    best.insert(it, std::move(v));
    if (best.size() > kWitnesses) best.pop_back();
  }

  void operator()(const std::vector<std::int64_t>& y, std::int64_t norm, int mult) {
    if (min_norm >= 0 && norm > min_norm) return;
    if (norm < min_norm || min_norm < 0) {
      min_norm = norm;
      count = 0;
      best.clear();
    }
    count += static_cast<std::uint64_t>(mult);
    LatticeVector x = plan->to_original(y);
    if (mult == 2) offer(-x);
    offer(std::move(x));
  }
};
}  // namespace detail

/// Shortest characteristic vectors. Norms are n mod 8 for unimodular
/// lattices, so the bound steps through n mod 8, n mod 8 + 8, ...
inline CharMinReport min_characteristic(const Lattice& l, const EnumOptions& opts = {}) {
  const CharCoset coset = characteristic_coset(l);
  const std::int64_t n = static_cast<std::int64_t>(l.rank());
  if (n == 0) return CharMinReport{0, 1, {LatticeVector{}}};
  const EnumPlan plan(l, opts.reduce);
  const auto parity = plan.reduced_parity(coset.w);
  detail::MinCharVisitor proto;
  proto.plan = &plan;
  for (std::int64_t bound = n % 8; bound <= n + 8; bound += 8) {
    auto parts = detail::run_search(plan, bound, &parity, true, opts, proto);
    detail::MinCharVisitor merged = proto;
    for (auto& p : parts) {
      if (p.min_norm < 0) continue;
      if (merged.min_norm < 0 || p.min_norm < merged.min_norm) {
        merged.min_norm = p.min_norm;
        merged.count = 0;
        merged.best.clear();
      }
      if (p.min_norm == merged.min_norm) {
        merged.count += p.count;
        for (auto& v : p.best) merged.offer(v);
      }
    }
    if (merged.min_norm >= 0) return CharMinReport{merged.min_norm, BigInt(merged.count), std::move(merged.best)};
  }
  throw Error(ErrorKind::Precondition, "no characteristic vector of norm <= n + 8 (lattice is not unimodular?)");
}

struct RootSystemReport {
  struct Component {
    char kind = 'A';
    int rank = 0;
    int multiplicity = 0;
    friend auto operator<=>(const Component&, const Component&) = default;
  };
  std::vector<Component> components;  // canonical order: E, D, A; larger rank first
  std::uint64_t total_roots = 0;
  std::size_t rank_of_span = 0;

  std::string label() const {
    if (components.empty()) return "empty";
    std::string s;
    for (const auto& c : components) {
      s += std::string(1, c.kind) + std::to_string(c.rank);
      if (c.multiplicity > 1) s += "^" + std::to_string(c.multiplicity);
    }
    return s;
  }
};

inline std::uint64_t ade_root_count(char kind, int k) {
  const auto kk = static_cast<std::uint64_t>(k);
  switch (kind) {
    case 'A': return kk * (kk + 1);
    case 'D': return 2 * kk * (kk - 1);
    case 'E': return k == 6 ? 72 : k == 7 ? 126 : 240;
  }
  return 0;
}

/// Canonical ordering of root-system components (E before D before A, larger rank first).
inline void canonicalize_components(std::vector<RootSystemReport::Component>& comps) {
  auto key = [](const RootSystemReport::Component& c) {
    const int kind_rank = c.kind == 'E' ? 0 : c.kind == 'D' ? 1 : 2;
    return std::make_pair(kind_rank, -c.rank);
  };
  std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::vector<RootSystemReport::Component> merged;
  for (const auto& c : comps) {
    if (!merged.empty() && merged.back().kind == c.kind && merged.back().rank == c.rank)
      merged.back().multiplicity += c.multiplicity;
    else
      merged.push_back(c);
  }
  comps = std::move(merged);
}

/// Parses labels such as "A7^2D5", "A1^22", "E8" or "empty"/"O23" (no roots).
inline std::vector<RootSystemReport::Component> parse_root_label(const std::string& label) {
  std::vector<RootSystemReport::Component> out;
  if (label == "empty" || label == "O23" || label.empty()) return out;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
    if (start == pos) throw Error(ErrorKind::Parse, "bad root system label '" + label + "'");
    return std::stoi(label.substr(start, pos - start));
  };
  while (i < label.size()) {
    const char kind = label[i];
    if (kind != 'A' && kind != 'D' && kind != 'E') throw Error(ErrorKind::Parse, "bad root system label '" + label + "'");
    ++i;
    const int rank = read_int(i);
    int mult = 1;
    if (i < label.size() && label[i] == '^') {
      ++i;
      mult = read_int(i);
    }
    out.push_back({kind, rank, mult});
  }
  canonicalize_components(out);
  return out;
}

/// Root system of the norm-2 vectors: components of the graph on roots
/// modulo +- (edges where the pairing is nonzero), classified by rank and size.
inline RootSystemReport identify_roots(const Lattice& l, const EnumOptions& opts = {}) {
  std::vector<LatticeVector> reps;
  for (auto& v : enumerate_short(l, 2, opts)) {
    if (l.norm(v) != 2) continue;
    auto it = std::find_if(v.coords.begin(), v.coords.end(), [](std::int64_t c) { return c != 0; });
    if (*it > 0) reps.push_back(std::move(v));
  }
  const std::size_t m = reps.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (l.inner(reps[i], reps[j]) != 0) parent[find(i)] = find(j);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);

  RootSystemReport rep;
  rep.total_roots = 2 * m;
  RatMatrix all(m, l.rank());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) all(i, j) = reps[i].coords[j];
  rep.rank_of_span = m ? rank_rational(all) : 0;

  for (const auto& [root, members] : groups) {
    RatMatrix mat(members.size(), l.rank());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < l.rank(); ++j) mat(i, j) = reps[members[i]].coords[j];
    const int rank = static_cast<int>(rank_rational(mat));
    const std::uint64_t count = 2 * members.size();
    char kind = 0;
    if (count == ade_root_count('A', rank)) kind = 'A';
    else if (rank >= 4 && count == ade_root_count('D', rank)) kind = 'D';
    else if (rank >= 6 && rank <= 8 && count == ade_root_count('E', rank)) kind = 'E';
    if (!kind)
      throw Error(ErrorKind::Classification, "root component of rank " + std::to_string(rank) + " with " +
                                                 std::to_string(count) + " roots is not of ADE type");
    rep.components.push_back({kind, rank, 1});
  }
  canonicalize_components(rep.components);
  return rep;
}

}  // namespace unimod
