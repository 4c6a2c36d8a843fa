#pragma once

namespace bcmetric {

/// Constants of the relaxed triangle inequality d(x,z) <= b(d(x,y) + d(y,z)) + c.
/// Construction enforces b >= 1 and c >= 0.
class BcParams {
 public:
  BcParams(double b, double c);

  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] double c() const noexcept { return c_; }

  friend bool operator==(const BcParams&, const BcParams&) = default;

 private:
  double b_;
  double c_;
};

/// Quasi-isometry constants: rho/K - C <= rho'(f x, f y) <= K rho + C.
/// Construction enforces K >= 1 and C >= 0.
class QiParams {
 public:
  QiParams(double k, double c);

  [[nodiscard]] double k() const noexcept { return k_; }
  [[nodiscard]] double c() const noexcept { return c_; }

  friend bool operator==(const QiParams&, const QiParams&) = default;

 private:
  double k_;
  double c_;
};

}  // namespace bcmetric
