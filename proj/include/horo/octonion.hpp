#pragma once
// Exact octonion arithmetic over Q(i, sqrt2): the e-basis multiplication
// table, the norm q, the isotropic z-basis with its expected product table,
// a mismatch report plus typo-repair search for that table, the map
// z wedge z' -> Im(zz') with its kernel dimension, and the symplectic
// tensor quadratic form.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace horo {

struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(num, den) = 1

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d);
  bool is_zero() const { return num == 0; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator+(const Rational&, const Rational&);
Rational operator-(const Rational&, const Rational&);
Rational operator*(const Rational&, const Rational&);
Rational operator/(const Rational&, const Rational&);
Rational operator-(const Rational&);
std::string to_string(const Rational&);

// a + b*i + c*sqrt2 + d*i*sqrt2, all coordinates rational.
struct Scalar {
  Rational a, b, c, d;

  Scalar() = default;
  Scalar(long long n) : a(n) {}
  Scalar(Rational ra, Rational rb = {}, Rational rc = {}, Rational rd = {})
      : a(ra), b(rb), c(rc), d(rd) {}
  static Scalar i() { return Scalar{0, 1, 0, 0}; }
  static Scalar sqrt2() { return Scalar{0, 0, 1, 0}; }
  static Scalar inv_sqrt2() { return Scalar{Rational(0), Rational(0), Rational(1, 2), Rational(0)}; }
  bool is_zero() const;
  friend bool operator==(const Scalar&, const Scalar&) = default;
};

Scalar operator+(const Scalar&, const Scalar&);
Scalar operator-(const Scalar&, const Scalar&);
Scalar operator*(const Scalar&, const Scalar&);
Scalar operator-(const Scalar&);
std::string to_string(const Scalar&);

// coords over the basis (1, e_1, ..., e_7).
struct Octonion {
  std::array<Scalar, 8> coords{};

  static Octonion zero() { return {}; }
  static Octonion unit();
  static Octonion e(int k);  // 1 <= k <= 7
  bool is_imaginary() const { return coords[0].is_zero(); }
  friend bool operator==(const Octonion&, const Octonion&) = default;
};

Octonion operator+(const Octonion&, const Octonion&);
Octonion operator-(const Octonion&, const Octonion&);
Octonion operator-(const Octonion&);
Octonion scale(const Scalar&, const Octonion&);
Octonion mul(const Octonion&, const Octonion&);
Octonion conjugate(const Octonion&);
Octonion imaginary_part(const Octonion&);
Scalar norm_q(const Octonion&);
std::string to_string(const Octonion&);

// z-basis order: z_0, z_1, z_2, z_3, z_{-1}, z_{-2}, z_{-3}.
extern const std::array<const char*, 7> z_names;

// The z-vectors exactly as printed (z_3 = e_4 - i e_6, z_{-3} = e_4 + i e_6).
std::array<Octonion, 7> z_basis();

// Expected z-product: constant + sum z_coeff[k] * z_k, entries from the
// printed 7x7 table.
struct ZEntry {
  int constant = 0;
  std::array<int, 7> z_coeff{};
};
const std::array<std::array<ZEntry, 7>, 7>& z_expected_table();

struct ZCheck {
  int row = 0, col = 0;  // indices into z_names
  bool match = false;
  Octonion expected, computed;
};
struct ZTableReport {
  std::vector<ZCheck> checks;  // all 49, row-major
  int mismatched = 0;
};

ZTableReport verify_z_table(const std::array<Octonion, 7>& basis);
ZTableReport verify_z_table();  // printed basis

// Search over replacements z_3 = e_a + s i e_b, z_{-3} = e_a - s i e_b
// (a != b, s = +-1) for the variant with fewest table mismatches.
struct ZRepair {
  int first = 0, second = 0, sign = 0;
  int mismatches = 0;
};
ZRepair repair_z3_search();
std::array<Octonion, 7> repaired_z_basis();  // printed basis with the search winner

// Im(zz') for imaginary z, z'; throws std::invalid_argument otherwise.
Octonion wedge_to_im(const Octonion&, const Octonion&);

// dim ker of the induced linear map on the 21-dimensional second exterior
// power of the imaginary octonions.
int wedge_kernel_dimension();

// Vectors in C^{2n} with coordinates (x_1..x_n, x_{-1}..x_{-n});
// <x, y> = sum_{k>0} (x_k y_{-k} - x_{-k} y_k).
Scalar symplectic_form(const std::vector<Scalar>& x, const std::vector<Scalar>& y);

// q(x1 (x) f1 + x2 (x) f2) = <x1, x2> for the rank-2 symplectic tensor.
Scalar symplectic_tensor_form(const std::vector<Scalar>& x1,
                              const std::vector<Scalar>& x2);

}  // namespace horo
