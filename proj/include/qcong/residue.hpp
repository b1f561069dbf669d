#pragma once

#include <qcong/cyclotomic.hpp>

#include <memory>
#include <string>

namespace qcong {

// Element of Q[q]/Phi_n(q)^e, kept as its reduced representative.
class Residue {
 public:
  Residue(long n, long e, const LaurentPoly& rep, CycloCache& cache = default_cache());

  long n() const { return n_; }
  long e() const { return e_; }
  const LaurentPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  // Unit iff nonzero modulo Phi_n.
  bool is_unit() const;

  Residue operator-() const;
  Residue& operator+=(const Residue& y);
  Residue& operator-=(const Residue& y);
  Residue& operator*=(const Residue& y);
  friend Residue operator+(Residue x, const Residue& y) { return x += y; }
  friend Residue operator-(Residue x, const Residue& y) { return x -= y; }
  friend Residue operator*(Residue x, const Residue& y) { return x *= y; }
  friend bool operator==(const Residue& x, const Residue& y) {
    return x.n_ == y.n_ && x.e_ == y.e_ && x.rep_ == y.rep_;
  }

  std::string str() const;

 private:
  friend Residue res_inv(const Residue& x);
  Residue(long n, long e, std::shared_ptr<const LaurentPoly> mod, LaurentPoly rep)
      : n_(n), e_(e), mod_(std::move(mod)), rep_(std::move(rep)) {}
  void check_compatible(const Residue& y) const;

  long n_;
  long e_;
  std::shared_ptr<const LaurentPoly> mod_;  // Phi_n^e
  LaurentPoly rep_;
};

// Image of x in Q[q]/Phi_n^e; throws NonUnitError if Phi_n divides den(x).
Residue res_from_rf(const RatFunc& x, long n, long e, CycloCache& cache = default_cache());

// Inverse by extended gcd against Phi_n^e; throws NonUnitError.
Residue res_inv(const Residue& x);

}  // namespace qcong
