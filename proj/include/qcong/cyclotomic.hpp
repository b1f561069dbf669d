#pragma once

#include <qcong/detail/zpoly.hpp>
#include <qcong/rat_func.hpp>

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qcong {

/// Thread-safe table of cyclotomic polynomials.
///
/// With a cache directory, each entry is also persisted lazily as
/// `phi_<n>.txt` holding one line: `n c0 c1 ... c_deg` (constant term first).
/// Files are written to a temporary name and renamed into place.
class CycloCache {
 public:
  CycloCache() = default;
  explicit CycloCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  CycloCache(const CycloCache&) = delete;
  CycloCache& operator=(const CycloCache&) = delete;

  // References stay valid for the lifetime of the cache.
  const LaurentPoly& phi(long n);
  const detail::ZPoly& phi_dense(long n);

  std::size_t size() const;

 private:
  struct Entry {
    detail::ZPoly dense;
    LaurentPoly poly;
  };
  const Entry& entry(long n);
  std::optional<detail::ZPoly> load(long n) const;
  void store(long n, const detail::ZPoly& coeffs) const;

  mutable std::mutex mutex_;
  std::map<long, Entry> table_;
  std::optional<std::filesystem::path> dir_;
};

CycloCache& default_cache();

LaurentPoly phi(long n, CycloCache& cache = default_cache());

// (1 - q^m)/(1 - q) for every integer m.
LaurentPoly qint_poly(long m);

std::vector<long> divisors(long n);
long euler_phi(long n);

// Phi_n-adic valuation, possibly capped or infinite (for zero).
struct Valuation {
  enum class Kind { Finite, AtLeast, Infinite };
  Kind kind = Kind::Finite;
  long value = 0;

  static Valuation finite(long v) { return {Kind::Finite, v}; }
  static Valuation at_least(long v) { return {Kind::AtLeast, v}; }
  static Valuation infinite() { return {Kind::Infinite, 0}; }

  // Whether the valuation is known to be >= e.
  bool reaches(long e) const { return kind == Kind::Infinite || value >= e; }
  std::string str() const;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

// Number of times Phi_n divides x (x != 0); n >= 1.
long val_phi(const LaurentPoly& x, long n, CycloCache& cache = default_cache());
// v(num) - v(den); infinite for zero.
Valuation val_phi(const RatFunc& x, long n, CycloCache& cache = default_cache());

struct QIntSquareDetail {
  bool holds = false;
  bool den_coprime = true;
  std::vector<std::pair<long, Valuation>> per_divisor;  // divisors d > 1 of n
};

QIntSquareDetail qint_square_detail(const RatFunc& x, long n, CycloCache& cache = default_cache());
bool val_qint_square(const RatFunc& x, long n, CycloCache& cache = default_cache());

}  // namespace qcong
