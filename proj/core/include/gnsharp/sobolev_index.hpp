#pragma once

namespace gnsharp {

/// The pair (n, s) with n >= 1 and s > n/2 strictly.  Every constant and
/// inequality in the library is gated on this condition; the constructor
/// rejects anything else.
class SobolevIndex {
  public:
    SobolevIndex(int dimension, double order);

    int n() const { return n_; }
    double s() const { return s_; }

    /// The interpolation exponent n/(2s), always in (0, 1).
    double n_over_2s() const { return static_cast<double>(n_) / (2.0 * s_); }

    /// 2s - n, always positive.
    double gap() const { return 2.0 * s_ - static_cast<double>(n_); }

  private:
    int n_;
    double s_;
};

}  // namespace gnsharp
