#include "bcmetric/constants.hpp"

#include <algorithm>

namespace bcmetric {

LemmaConstants lemma_constants(const BcParams& ambient, const CollapsedSpace& space) {
  const double b = ambient.b();
  const double c = ambient.c();
  const double f = space.f_max();
  const double kl = space.k_l();
  const double b2 = b * b;
  constexpr double m = 1.0;
  constexpr double n = 0.0;

  const double fiber_add = b2 * f + b * c + c;
  return LemmaConstants{
      .ratio = kl,
      .fiber = QiParams(b2, fiber_add),
      .fiber_metric_case = QiParams(b2, (b2 + b) * f + b * c + c),
      .upper_far = QiParams(b2 * kl, kl * fiber_add),
      .upper_near = QiParams(b2 * kl, kl * (3.0 * b2 * f + b * c + c)),
      .upper_all = QiParams(b2 * kl + 1.0, fiber_add),
      .upper_all_derived = QiParams(2.0 * b2 * b2 * kl + 1.0,
                                    kl * ((b2 + b) * f + (b2 * b + b2 + b + 1.0) * c)),
      .lower = QiParams(b2 * b, 2.0 * (b * m * f + n) + (c * (2.0 * b + 1.0) + 1.0) / b2),
  };
}

QiParams theorem2_constants(const BcParams& ambient, const CollapsedSpace& space) {
  const double b = ambient.b();
  const double c = ambient.c();
  const double k = b * b * b * std::max(space.k_l(), 1.0) + 1.0;
  return QiParams(k, k * (3.0 * b * b * space.f_max() + b * c + c));
}

QiParams theorem2_constants_literal(const BcParams& ambient, const CollapsedSpace& space) {
  const double b = ambient.b();
  const double c = ambient.c();
  const double k = b * b * b * space.curve_lipschitz() + 1.0;
  return QiParams(k, k * (3.0 * b * b * space.f_max() + b * c + c));
}

}  // namespace bcmetric
