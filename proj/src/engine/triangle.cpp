#include "pmzv/engine/triangle.hpp"

#include "pmzv/arith/fixed.hpp"

namespace pmzv {

const char* to_string(SignConvention s) { return s == SignConvention::mahler ? "mahler" : "literal"; }

SignConvention parse_sign_convention(const std::string& text) {
  if (text == "mahler") {
    return SignConvention::mahler;
  }
  if (text == "literal") {
    return SignConvention::literal;
  }
  throw std::invalid_argument("unknown sign convention '" + text + "' (expected mahler or literal)");
}

Rational restricted_composition_sum(long b, long l, long p) {
  if (b < 0 || l < 0) {
    return 0;
  }
  RationalField q;
  auto s = series_power_over_factorial(li1p_series(q, static_cast<std::size_t>(l), p), b);
  return s[static_cast<std::size_t>(l)];
}

std::vector<Padic> convolve_at(const PadicField& field, const std::vector<Padic>& a, const std::vector<Padic>& b,
                               const std::vector<std::size_t>& targets, std::size_t size) {
  auto fa = FixedVector::from_padic(a, field.p);
  auto fb = FixedVector::from_padic(b, field.p);
  auto out = fixed_convolve_at(fa, fb, targets, size).to_padic();
  out.resize(size, field.zero());
  return out;
}

}  // namespace pmzv
