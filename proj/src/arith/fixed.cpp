#include "pmzv/arith/fixed.hpp"

#include <algorithm>

namespace pmzv {

namespace {

long sat_add(long a, long b) {
  if (a >= Padic::kExact || b >= Padic::kExact) {
    return Padic::kExact;
  }
  return std::min(a + b, Padic::kExact);
}

// Lower bound on the valuation of every entry.
long valuation_bound(const FixedVector& f) { return std::min(f.min_valuation(), f.precision); }

}  // namespace

FixedVector FixedVector::from_padic(const std::vector<Padic>& values, long p) {
  FixedVector f;
  f.p = p;
  f.x.assign(values.size(), Integer(0));
  long vmin = Padic::kExact;
  for (const Padic& v : values) {
    f.precision = std::min(f.precision, v.absolute_precision());
    if (!v.is_zero()) {
      vmin = std::min(vmin, v.valuation());
    }
  }
  if (vmin >= Padic::kExact) {
    return f;
  }
  f.scale = std::max(0L, -vmin);
  long e = f.precision + f.scale;
  if (e <= 0) {
    return f;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Padic& v = values[i];
    if (v.is_zero()) {
      continue;
    }
    long shift = v.valuation() + f.scale;
    if (shift >= e) {
      continue;
    }
    f.x[i] = v.unit() * prime_power(p, shift);
  }
  f.reduce();
  return f;
}

std::vector<Padic> FixedVector::to_padic() const {
  std::vector<Padic> out;
  out.reserve(x.size());
  for (const Integer& xi : x) {
    if (exact_zero()) {
      out.push_back(Padic::zero(p));
    } else {
      out.push_back(Padic::from_parts(p, -scale, xi, precision + scale));
    }
  }
  return out;
}

long FixedVector::min_valuation() const {
  long v = Padic::kExact;
  for (const Integer& xi : x) {
    if (xi != 0) {
      v = std::min(v, p_valuation(xi, p) - scale);
    }
  }
  return v;
}

void FixedVector::reduce() {
  if (exact_zero()) {
    return;
  }
  long e = precision + scale;
  if (e <= 0) {
    for (Integer& xi : x) {
      xi = 0;
    }
    return;
  }
  const Integer& m = prime_power(p, e);
  for (Integer& xi : x) {
    mpz_mod(xi.get_mpz_t(), xi.get_mpz_t(), m.get_mpz_t());
  }
}

FixedVector fixed_mobius(const FixedVector& a) {
  FixedVector r;
  r.p = a.p;
  r.scale = a.scale;
  r.precision = a.precision;
  std::size_t M = a.x.empty() ? 0 : a.x.size() - 1;
  r.x.assign(M + 1, Integer(0));
  Integer s;
  Integer t;
  for (std::size_t k = M; k >= 1; --k) {
    mpz_add(r.x[0].get_mpz_t(), r.x[0].get_mpz_t(), a.x[k].get_mpz_t());
    // multiply by -z/(1-z): r[n] <- -(r[0] + ... + r[n-1])
    s = 0;
    for (std::size_t n = 0; n <= M; ++n) {
      mpz_swap(t.get_mpz_t(), r.x[n].get_mpz_t());
      mpz_neg(r.x[n].get_mpz_t(), s.get_mpz_t());
      mpz_add(s.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
    }
    if (k % 8 == 0) {
      r.reduce();
    }
  }
  r.reduce();
  return r;
}

FixedVector fixed_mul(const FixedVector& a, const FixedVector& b, std::size_t order) {
  FixedVector r;
  r.p = a.p;
  r.scale = a.scale + b.scale;
  r.precision = std::min(sat_add(a.precision, valuation_bound(b)), sat_add(b.precision, valuation_bound(a)));
  r.x.assign(order + 1, Integer(0));
  for (std::size_t i = 0; i < a.x.size() && i <= order; ++i) {
    if (a.x[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.x.size() && i + j <= order; ++j) {
      mpz_addmul(r.x[i + j].get_mpz_t(), a.x[i].get_mpz_t(), b.x[j].get_mpz_t());
    }
  }
  r.reduce();
  return r;
}

FixedVector fixed_convolve_at(const FixedVector& a, const FixedVector& b, const std::vector<std::size_t>& targets,
                              std::size_t size) {
  FixedVector r;
  r.p = a.p;
  r.scale = a.scale + b.scale;
  r.precision = std::min(sat_add(a.precision, valuation_bound(b)), sat_add(b.precision, valuation_bound(a)));
  r.x.assign(size, Integer(0));
  for (std::size_t t : targets) {
    Integer& acc = r.x[t];
    for (std::size_t i = 0; i <= t && i < a.x.size(); ++i) {
      std::size_t j = t - i;
      if (j >= b.x.size() || a.x[i] == 0) {
        continue;
      }
      mpz_addmul(acc.get_mpz_t(), a.x[i].get_mpz_t(), b.x[j].get_mpz_t());
    }
  }
  r.reduce();
  return r;
}

}  // namespace pmzv
