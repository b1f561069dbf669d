#include <qcong/catalog.hpp>
#include <qcong/errors.hpp>

#include <functional>

namespace qcong {

namespace {

// Exponents are powers of q; the series base is q^b.
class AndrewsEval {
 public:
  explicit AndrewsEval(const AndrewsInstance& in) : in_(in), b_(in.base_exp) {
    if (in.m < 1) throw InvalidParams("Andrews instance: m >= 1");
    if (in.N < 0) throw InvalidParams("Andrews instance: N >= 0");
    if (static_cast<long>(in.b.size()) != in.m || static_cast<long>(in.c.size()) != in.m)
      throw InvalidParams("Andrews instance: b and c must have m entries");
    if (b_ < 1) throw InvalidParams("Andrews instance: base exponent >= 1");
  }

  RatFunc left() const {
    const long m = in_.m, N = in_.N, a = in_.a;
    std::vector<long> num_args{a}, den_args{b_};
    long x = m * a + b_ * (m + N);
    for (long i = 0; i < m; ++i) {
      num_args.push_back(in_.b[i]);
      num_args.push_back(in_.c[i]);
      den_args.push_back(a + b_ - in_.b[i]);
      den_args.push_back(a + b_ - in_.c[i]);
      x -= in_.b[i] + in_.c[i];
    }
    num_args.push_back(-b_ * N);
    den_args.push_back(a + b_ * (N + 1));
    const LaurentPoly one_minus_a = LaurentPoly::binomial(a);
    if (one_minus_a.is_zero()) throw DegenerateInstance("Andrews instance: a = 1 makes (1 - a) vanish");
    RatFunc sum;
    for (long k = 0; k <= N; ++k) {
      LaurentPoly num = LaurentPoly::binomial(a + 2 * b_ * k).shifted(x * k);
      LaurentPoly den = one_minus_a;
      for (long e : den_args) den *= poch(e, k, true);
      for (long e : num_args) num *= poch(e, k, false);
      sum += RatFunc(num, den);
    }
    return sum;
  }

  RatFunc right() const {
    const long m = in_.m, N = in_.N, a = in_.a;
    const auto& bs = in_.b;
    const auto& cs = in_.c;
    const long bm = bs[m - 1], cm = cs[m - 1];
    const RatFunc prefactor(poch(a + b_, N, false) * poch(a + b_ - bm - cm, N, false),
                            poch(a + b_ - bm, N, true) * poch(a + b_ - cm, N, true));
    if (m == 1) return prefactor;

    RatFunc total;
    std::vector<long> l(m - 1, 0);
    std::function<void(long, long)> rec = [&](long j, long used) {
      if (j == m - 1) {
        total += summand(l);
        return;
      }
      for (long v = 0; used + v <= N; ++v) {
        l[j] = v;
        rec(j + 1, used + v);
      }
    };
    rec(0, 0);
    return prefactor * total;
  }

 private:
  // (q^e; q^b)_k; a vanishing denominator factor is degenerate.
  LaurentPoly poch(long e, long k, bool denominator) const {
    LaurentPoly out(1);
    for (long j = 0; j < k; ++j) {
      const long ex = e + j * b_;
      if (ex == 0) {
        if (denominator) throw DegenerateInstance("Andrews instance: a denominator factor vanishes");
        return {};
      }
      out = out.times_binomial(ex);
    }
    return out;
  }

  RatFunc summand(const std::vector<long>& l) const {
    const long m = in_.m, N = in_.N, a = in_.a;
    const auto& bs = in_.b;
    const auto& cs = in_.c;
    LaurentPoly num(1), den(1);
    long L = 0;
    long power = 0;
    for (long j = 1; j <= m - 1; ++j) {
      const long lj = l[j - 1];
      L += lj;
      num *= poch(a + b_ - bs[j - 1] - cs[j - 1], lj, false);
      den *= poch(b_, lj, true);
      num *= poch(bs[j], L, false) * poch(cs[j], L, false);
      den *= poch(a + b_ - bs[j - 1], L, true) * poch(a + b_ - cs[j - 1], L, true);
      if (j <= m - 2) power += (a + b_ - bs[j] - cs[j]) * L;
    }
    num *= poch(-b_ * N, L, false);
    den *= poch(bs[m - 1] + cs[m - 1] - b_ * N - a, L, true);
    power += b_ * L;
    if (num.is_zero()) return {};
    return RatFunc(num.shifted(power), den);
  }

  const AndrewsInstance& in_;
  long b_;
};

}  // namespace

RatFunc andrews_side(const AndrewsInstance& inst, AndrewsSide side) {
  AndrewsEval eval(inst);
  return side == AndrewsSide::Left ? eval.left() : eval.right();
}

}  // namespace qcong
