#pragma once

// Truncated power series in q^{1/4} with exact integer coefficients.
// Exponents are stored as quarter counts: key 4m is q^m.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "unimod/error.hpp"
#include "unimod/exact_linalg.hpp"

namespace unimod {

class QSeries {
 public:
  explicit QSeries(std::int64_t truncation = 0) : trunc_(truncation) {
    if (truncation < 0) throw Error(ErrorKind::Precondition, "negative truncation");
  }

  static QSeries one(std::int64_t truncation) {
    QSeries s(truncation);
    s.set(0, 1);
    return s;
  }

  /// Largest quarter-exponent whose coefficient is known.
  std::int64_t truncation() const noexcept { return trunc_; }
  const std::map<std::int64_t, BigInt>& terms() const noexcept { return c_; }

  BigInt coefficient(std::int64_t quarter) const {
    if (quarter < 0) throw Error(ErrorKind::Precondition, "negative exponent");
    if (quarter > trunc_)
      throw Error(ErrorKind::Precondition, "coefficient at q^{" + std::to_string(quarter) +
                                               "/4} is beyond the truncation " + std::to_string(trunc_));
    auto it = c_.find(quarter);
    return it == c_.end() ? BigInt(0) : it->second;
  }

  void set(std::int64_t quarter, const BigInt& v) {
    if (quarter < 0 || quarter > trunc_)
      throw Error(ErrorKind::Precondition, "exponent " + std::to_string(quarter) + " outside [0, truncation]");
    if (v == 0)
      c_.erase(quarter);
    else
      c_[quarter] = v;
  }

  void add_to(std::int64_t quarter, const BigInt& v) {
    if (quarter > trunc_) return;
    set(quarter, coefficient(quarter) + v);
  }

  /// Same coefficients through quarter-exponent m (both series must reach m).
  bool agrees_through(const QSeries& o, std::int64_t m) const {
    if (m > trunc_ || m > o.trunc_) throw Error(ErrorKind::Precondition, "comparison beyond truncation");
    return std::equal(c_.begin(), c_.upper_bound(m), o.c_.begin(), o.c_.upper_bound(m));
  }

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.trunc_ == b.trunc_ && a.c_ == b.c_; }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (const auto& [e, v] : a.c_) r.add_to(e, v);
    for (const auto& [e, v] : b.c_) r.add_to(e, v);
    return r;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc_, b.trunc_));
    std::map<std::int64_t, BigInt> acc;
    for (const auto& [ea, va] : a.c_) {
      if (ea > r.trunc_) break;
      for (const auto& [eb, vb] : b.c_) {
        if (ea + eb > r.trunc_) break;
        acc[ea + eb] += va * vb;
      }
    }
    for (auto& [e, v] : acc)
      if (v != 0) r.c_.emplace(e, std::move(v));
    return r;
  }

  QSeries scaled(const BigInt& k) const {
    QSeries r(trunc_);
    if (k == 0) return r;
    for (const auto& [e, v] : c_) r.c_.emplace(e, v * k);
    return r;
  }

  QSeries truncated(std::int64_t m) const {
    QSeries r(std::min(m, trunc_));
    for (const auto& [e, v] : c_)
      if (e <= r.trunc_) r.c_.emplace(e, v);
    return r;
  }

  /// "c * q^{p/4}" terms in ascending order followed by the error term.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
      if (first)
        os << (v < 0 ? "-" : "");
      else
        os << (v < 0 ? " - " : " + ");
      os << abs(v) << " * q^{" << e << "/4}";
      first = false;
    }
    if (first) os << "0";
    os << " + O(q^{" << trunc_ + 1 << "/4})";
    return os.str();
  }

  /// One "<quarter_exponent> <coefficient>" line per nonzero term.
  std::string dump() const {
    std::ostringstream os;
    for (const auto& [e, v] : c_) os << e << " " << v << "\n";
    return os.str();
  }

 private:
  std::int64_t trunc_;
  std::map<std::int64_t, BigInt> c_;
};

inline QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries add(const QSeries& a, const QSeries& b) { return a + b; }
inline QSeries scale(const QSeries& a, const BigInt& k) { return a.scaled(k); }

}  // namespace unimod
