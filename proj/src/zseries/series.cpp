#include "pmzv/zseries/series.hpp"

#include "pmzv/arith/fixed.hpp"

namespace pmzv {

std::vector<Padic> cauchy_product(const PadicField& field, const std::vector<Padic>& a, const std::vector<Padic>& b,
                                  std::size_t order) {
  FixedVector fa = FixedVector::from_padic(a, field.p);
  FixedVector fb = FixedVector::from_padic(b, field.p);
  return fixed_mul(fa, fb, order).to_padic();
}

std::vector<Padic> mobius_transform(const PadicField& field, const std::vector<Padic>& a) {
  std::vector<Padic> head = a;
  if (!head.empty()) {
    head[0] = Padic::zero(field.p);
  }
  return fixed_mobius(FixedVector::from_padic(head, field.p)).to_padic();
}

}  // namespace pmzv
