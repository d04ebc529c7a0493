#include "horo/octonion.hpp"

namespace horo {

namespace {

using i128 = __int128;

long long checked_ll(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

Rational make_rational(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 x = n < 0 ? -n : n, y = d;
  while (y) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  const i128 g = x == 0 ? 1 : x;
  Rational r;
  r.num = checked_ll(n / g);
  r.den = checked_ll(d / g);
  return r;
}

}  // namespace

Rational::Rational(long long n, long long d) { *this = make_rational(n, d); }

Rational operator+(const Rational& x, const Rational& y) {
  return make_rational(i128(x.num) * y.den + i128(y.num) * x.den,
                       i128(x.den) * y.den);
}
Rational operator-(const Rational& x, const Rational& y) {
  return make_rational(i128(x.num) * y.den - i128(y.num) * x.den,
                       i128(x.den) * y.den);
}
Rational operator*(const Rational& x, const Rational& y) {
  return make_rational(i128(x.num) * y.num, i128(x.den) * y.den);
}
Rational operator/(const Rational& x, const Rational& y) {
  if (y.num == 0) throw std::domain_error("division by zero rational");
  return make_rational(i128(x.num) * y.den, i128(x.den) * y.num);
}
Rational operator-(const Rational& x) { return Rational(-x.num, x.den); }

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool Scalar::is_zero() const {
  return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return Scalar{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}
Scalar operator-(const Scalar& x, const Scalar& y) {
  return Scalar{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}
Scalar operator-(const Scalar& x) { return Scalar{-x.a, -x.b, -x.c, -x.d}; }

Scalar operator*(const Scalar& x, const Scalar& y) {
  const Rational two(2);
  Scalar out;
  out.a = x.a * y.a - x.b * y.b + two * (x.c * y.c - x.d * y.d);
  out.b = x.a * y.b + x.b * y.a + two * (x.c * y.d + x.d * y.c);
  out.c = x.a * y.c + x.c * y.a - x.b * y.d - x.d * y.b;
  out.d = x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b;
  return out;
}

std::string to_string(const Scalar& s) {
  struct Part {
    const Rational* r;
    const char* sym;
  };
  const Part parts[] = {{&s.a, ""}, {&s.b, "i"}, {&s.c, "sqrt2"}, {&s.d, "i*sqrt2"}};
  std::string out;
  for (const auto& [r, sym] : parts) {
    if (r->is_zero()) continue;
    std::string term = to_string(*r);
    if (*sym) {
      if (term == "1")
        term = sym;
      else if (term == "-1")
        term = std::string("-") + sym;
      else
        term += std::string("*") + sym;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

Octonion Octonion::unit() {
  Octonion x;
  x.coords[0] = Scalar(1);
  return x;
}

Octonion Octonion::e(int k) {
  if (k < 1 || k > 7) throw std::out_of_range("octonion basis index");
  Octonion x;
  x.coords[k] = Scalar(1);
  return x;
}

Octonion operator+(const Octonion& x, const Octonion& y) {
  Octonion out;
  for (int k = 0; k < 8; ++k) out.coords[k] = x.coords[k] + y.coords[k];
  return out;
}
Octonion operator-(const Octonion& x, const Octonion& y) {
  Octonion out;
  for (int k = 0; k < 8; ++k) out.coords[k] = x.coords[k] - y.coords[k];
  return out;
}
Octonion operator-(const Octonion& x) {
  Octonion out;
  for (int k = 0; k < 8; ++k) out.coords[k] = -x.coords[k];
  return out;
}
Octonion scale(const Scalar& s, const Octonion& x) {
  Octonion out;
  for (int k = 0; k < 8; ++k) out.coords[k] = s * x.coords[k];
  return out;
}

namespace {

// e_i * e_j as signed basis index (diagonal handled separately):
// tab[i-1][j-1] = +-k means +-e_k.
constexpr int kETable[7][7] = {
    {0, 4, 7, -2, 6, -5, -3},
    {-4, 0, 5, 1, -3, 7, -6},
    {-7, -5, 0, 6, 2, -4, 1},
    {2, -1, -6, 0, 7, 3, -5},
    {-6, 3, -2, -7, 0, 1, 4},
    {5, -7, 4, -3, -1, 0, 2},
    {3, 6, -1, 5, -4, -2, 0},
};

// (basis index, sign) of the product of basis elements p, q in 0..7.
std::pair<int, int> basis_product(int p, int q) {
  if (p == 0) return {q, 1};
  if (q == 0) return {p, 1};
  if (p == q) return {0, -1};
  const int t = kETable[p - 1][q - 1];
  return {t < 0 ? -t : t, t < 0 ? -1 : 1};
}

}  // namespace

Octonion mul(const Octonion& x, const Octonion& y) {
  Octonion out;
  for (int p = 0; p < 8; ++p) {
    if (x.coords[p].is_zero()) continue;
    for (int q = 0; q < 8; ++q) {
      if (y.coords[q].is_zero()) continue;
      const auto [k, sign] = basis_product(p, q);
      Scalar term = x.coords[p] * y.coords[q];
      if (sign < 0) term = -term;
      out.coords[k] = out.coords[k] + term;
    }
  }
  return out;
}

Octonion conjugate(const Octonion& x) {
  Octonion out = -x;
  out.coords[0] = x.coords[0];
  return out;
}

Octonion imaginary_part(const Octonion& x) {
  Octonion out = x;
  out.coords[0] = Scalar();
  return out;
}

Scalar norm_q(const Octonion& x) {
  Scalar out;
  for (int k = 0; k < 8; ++k) out = out + x.coords[k] * x.coords[k];
  return out;
}

std::string to_string(const Octonion& x) {
  std::string out;
  for (int k = 0; k < 8; ++k) {
    if (x.coords[k].is_zero()) continue;
    std::string coeff = to_string(x.coords[k]);
    std::string term;
    if (k == 0) {
      term = coeff;
    } else {
      const std::string sym = "e" + std::to_string(k);
      if (coeff == "1")
        term = sym;
      else if (coeff == "-1")
        term = "-" + sym;
      else if (coeff.find(' ') != std::string::npos)
        term = "(" + coeff + ")*" + sym;
      else
        term = coeff + "*" + sym;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

const std::array<const char*, 7> z_names = {"z0",  "z1",  "z2", "z3",
                                            "z-1", "z-2", "z-3"};

namespace {

Octonion half_sum(int a, int b, int sign_b) {
  // (e_a + sign_b * i e_b) / sqrt2
  Octonion x;
  x.coords[a] = Scalar::inv_sqrt2();
  x.coords[b] = sign_b < 0 ? -(Scalar::inv_sqrt2() * Scalar::i())
                           : Scalar::inv_sqrt2() * Scalar::i();
  return x;
}

Octonion plain_sum(int a, int b, int sign_b) {
  // e_a + sign_b * i e_b
  Octonion x;
  x.coords[a] = Scalar(1);
  x.coords[b] = sign_b < 0 ? -Scalar::i() : Scalar::i();
  return x;
}

std::array<Octonion, 7> z_basis_with(const Octonion& z3, const Octonion& zm3) {
  std::array<Octonion, 7> z;
  z[0] = scale(Scalar::i(), Octonion::e(7));
  z[1] = half_sum(1, 3, +1);
  z[2] = half_sum(2, 6, +1);
  z[3] = z3;
  z[4] = half_sum(1, 3, -1);
  z[5] = half_sum(2, 6, -1);
  z[6] = zm3;
  return z;
}

}  // namespace

std::array<Octonion, 7> z_basis() {
  return z_basis_with(plain_sum(4, 6, -1), plain_sum(4, 6, +1));
}

const std::array<std::array<ZEntry, 7>, 7>& z_expected_table() {
  auto e = [](int constant, int k = -1, int coeff = 0) {
    ZEntry z;
    z.constant = constant;
    if (k >= 0) z.z_coeff[k] = coeff;
    return z;
  };
  // rows and columns in z_names order
  static const std::array<std::array<ZEntry, 7>, 7> table = {{
      {e(1), e(0, 1, 1), e(0, 2, 1), e(0, 3, -1), e(0, 4, -1), e(0, 5, -1), e(0, 6, 1)},
      {e(0, 1, -1), e(0), e(0, 3, 1), e(0), e(-1, 0, -1), e(0), e(0, 5, -2)},
      {e(0, 2, -1), e(0, 3, -1), e(0), e(0), e(0), e(-1, 0, -1), e(0, 4, 2)},
      {e(0, 3, 1), e(0), e(0), e(0), e(0, 2, 2), e(0, 1, -2), e(-2, 0, 2)},
      {e(0, 4, 1), e(-1, 0, 1), e(0), e(0, 2, -2), e(0), e(0, 6, 1), e(0)},
      {e(0, 5, 1), e(0), e(-1, 0, 1), e(0, 1, 2), e(0, 6, -1), e(0), e(0)},
      {e(0, 6, -1), e(0, 5, 2), e(0, 4, -2), e(-2, 0, -2), e(0), e(0), e(0)},
  }};
  return table;
}

ZTableReport verify_z_table(const std::array<Octonion, 7>& basis) {
  const auto& table = z_expected_table();
  ZTableReport report;
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 7; ++c) {
      const ZEntry& entry = table[r][c];
      Octonion expected = scale(Scalar(entry.constant), Octonion::unit());
      for (int k = 0; k < 7; ++k)
        if (entry.z_coeff[k])
          expected = expected + scale(Scalar(entry.z_coeff[k]), basis[k]);
      ZCheck check;
      check.row = r;
      check.col = c;
      check.expected = expected;
      check.computed = mul(basis[r], basis[c]);
      check.match = check.expected == check.computed;
      if (!check.match) ++report.mismatched;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

ZTableReport verify_z_table() { return verify_z_table(z_basis()); }

ZRepair repair_z3_search() {
  ZRepair best;
  best.mismatches = -1;
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; b <= 7; ++b) {
      if (a == b) continue;
      for (int s : {1, -1}) {
        const auto basis = z_basis_with(plain_sum(a, b, s), plain_sum(a, b, -s));
        const int m = verify_z_table(basis).mismatched;
        if (best.mismatches < 0 || m < best.mismatches) {
          best = ZRepair{a, b, s, m};
        }
      }
    }
  }
  return best;
}

std::array<Octonion, 7> repaired_z_basis() {
  const ZRepair r = repair_z3_search();
  return z_basis_with(plain_sum(r.first, r.second, r.sign),
                      plain_sum(r.first, r.second, -r.sign));
}

Octonion wedge_to_im(const Octonion& z, const Octonion& zp) {
  if (!z.is_imaginary() || !zp.is_imaginary())
    throw std::invalid_argument("wedge_to_im requires imaginary octonions");
  return imaginary_part(mul(z, zp));
}

namespace {

// Exact rank of a matrix over Q(i, sqrt2) by Gaussian elimination; the
// field coordinates stay rational throughout.
int scalar_matrix_rank(std::vector<std::vector<Scalar>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    // scale pivot row so later elimination is a single multiply-subtract;
    // inverse in Q(i,sqrt2) via two conjugations: 1/(x) = conj_i(x) *
    // conj_sqrt2(x) * conj_i(conj_sqrt2(x)) / N with N rational.
    const Scalar p = m[rank][c];
    const Scalar ci{p.a, -p.b, p.c, -p.d};
    const Scalar cs{p.a, p.b, -p.c, -p.d};
    const Scalar cb{p.a, -p.b, -p.c, p.d};
    const Scalar prod = ci * cs * cb;
    const Scalar nrm = p * prod;  // rational by construction
    if (!nrm.b.is_zero() || !nrm.c.is_zero() || !nrm.d.is_zero() || nrm.a.is_zero())
      throw std::logic_error("field norm must be a nonzero rational");
    const Scalar inv = Scalar{Rational(1) / nrm.a} * prod;
    for (int cc = c; cc < cols; ++cc) m[rank][cc] = inv * m[rank][cc];
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Scalar f = m[r][c];
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = m[r][cc] - f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int wedge_kernel_dimension() {
  std::vector<std::vector<Scalar>> m;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      const Octonion im = wedge_to_im(Octonion::e(i), Octonion::e(j));
      std::vector<Scalar> row(7);
      for (int k = 1; k <= 7; ++k) row[k - 1] = im.coords[k];
      m.push_back(std::move(row));
    }
  }
  const int dim_wedge = static_cast<int>(m.size());
  return dim_wedge - scalar_matrix_rank(std::move(m));
}

Scalar symplectic_form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("symplectic_form: need equal even dimensions");
  const size_t n = x.size() / 2;
  Scalar out;
  for (size_t k = 0; k < n; ++k)
    out = out + x[k] * y[n + k] - x[n + k] * y[k];
  return out;
}

Scalar symplectic_tensor_form(const std::vector<Scalar>& x1,
                              const std::vector<Scalar>& x2) {
  return symplectic_form(x1, x2);
}

}  // namespace horo
