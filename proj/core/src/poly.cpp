#include "salemforge/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "salemforge/error.hpp"
#include "salemforge/rootloc.hpp"

namespace salemforge {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPolynomial::leading() const {
  if (is_zero()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

const Integer& IntPolynomial::constant_term() const {
  static const Integer zero(0);
  return is_zero() ? zero : coeffs_.front();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  *this = *this * other;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

IntPolynomial linear(long root) { return IntPolynomial{-root, 1}; }

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  const auto& c = p.coefficients();
  std::vector<Integer> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial shift_up(const IntPolynomial& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<Integer> out(k);
  out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
  return IntPolynomial(std::move(out));
}

std::size_t valuation_at_zero(const IntPolynomial& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "valuation of zero polynomial");
  std::size_t k = 0;
  while (p.coefficients()[k] == 0) ++k;
  return k;
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial divide_scalar(const IntPolynomial& p, const Integer& s) {
  if (s == 0) fail(ErrorCode::DivisionByZero, "scalar division by zero");
  std::vector<Integer> out = p.coefficients();
  for (auto& c : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
      fail(ErrorCode::InexactDivision, "scalar does not divide coefficient");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.leading() < 0) c = -c;
  if (c == 1) return p;
  return divide_scalar(p, c);
}

std::optional<std::pair<IntPolynomial, IntPolynomial>> divmod_integral(const IntPolynomial& a,
                                                                       const IntPolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return std::make_pair(IntPolynomial{}, a);
  std::vector<Integer> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const Integer& lb = bc.back();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1));
  Integer t;
  for (int i = a.degree(); i >= db; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(i - db);
    quot[shift] = t;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpz_submul(rem[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  return std::make_pair(IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem)));
}

IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto qr = divmod_integral(a, b);
  if (!qr || !qr->second.is_zero()) fail(ErrorCode::InexactDivision, "divisor does not divide exactly");
  return std::move(qr->first);
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& p) {
  if (p.is_zero()) return true;
  if (divisor.degree() > p.degree()) return false;
  auto qr = divmod_integral(p, divisor);
  return qr && qr->second.is_zero();
}

IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const Integer& lb = bc.back();
  const Integer mult = abs(lb);
  const int sign_lb = sgn(lb);
  int deg = a.degree();
  Integer top;
  while (deg >= db) {
    if (r[static_cast<std::size_t>(deg)] == 0) {
      --deg;
      continue;
    }
    // r <- |lb| r - sign(lb) top z^(deg-db) b; the leading term cancels.
    top = r[static_cast<std::size_t>(deg)];
    if (sign_lb < 0) top = -top;
    for (int i = 0; i < deg; ++i) r[static_cast<std::size_t>(i)] *= mult;
    const std::size_t shift = static_cast<std::size_t>(deg - db);
    for (std::size_t j = 0; j + 1 < bc.size(); ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
    }
    r[static_cast<std::size_t>(deg)] = 0;
    --deg;
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)));
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = primitive_part(signed_pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

std::pair<std::size_t, IntPolynomial> divide_out(const IntPolynomial& p, const IntPolynomial& factor) {
  if (factor.degree() < 1) fail(ErrorCode::InvalidArgument, "divide_out needs a nonconstant factor");
  std::size_t m = 0;
  IntPolynomial rest = p;
  if (rest.is_zero()) fail(ErrorCode::ZeroPolynomial, "divide_out of zero polynomial");
  while (true) {
    auto qr = divmod_integral(rest, factor);
    if (!qr || !qr->second.is_zero()) break;
    rest = std::move(qr->first);
    ++m;
  }
  return {m, rest};
}

Integer evaluate(const IntPolynomial& p, const Integer& x) {
  Integer acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += Rational(*it);
  }
  return acc;
}

int sign_at(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) return 0;
  // Homogenized Horner: sum c_i n^i d^(deg-i) with d > 0 has the sign of p(n/d).
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  const auto& c = p.coefficients();
  Integer acc = c.back();
  Integer dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dpow *= den;
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), c[static_cast<std::size_t>(i)].get_mpz_t(), dpow.get_mpz_t());
  }
  return sgn(acc);
}

IntPolynomial star(const IntPolynomial& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "star of zero polynomial");
  std::vector<Integer> v(a.coefficients().rbegin(), a.coefficients().rend());
  return IntPolynomial(std::move(v));
}

bool is_reciprocal(const IntPolynomial& p) { return !p.is_zero() && star(p) == p; }

bool is_antireciprocal(const IntPolynomial& p) { return !p.is_zero() && star(p) == -p; }

IntPolynomial arith(const IntPolynomial& a, const IntPolynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::DivExact: return div_exact(a, b);
    case ArithOp::Gcd: return gcd(a, b);
    case ArithOp::Content: {
      Integer g = content(a);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), content(b).get_mpz_t());
      return IntPolynomial::constant(g);
    }
  }
  fail(ErrorCode::Internal, "unknown arithmetic op");
}

// ---------------------------------------------------------------------------

long euler_phi(long n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "euler_phi needs n >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPolynomial& cyclotomic(long n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<long, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // z^n - 1 divided by Phi_d for every proper divisor d.
  IntPolynomial p = IntPolynomial::z_power(static_cast<std::size_t>(n)) - IntPolynomial{1};
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) p = div_exact(p, cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

namespace {

// Every n with phi(n) <= bound; phi(n) >= sqrt(n/2) caps the search at 2 bound^2.
std::vector<long> indices_with_phi_at_most(long bound) {
  std::vector<long> out;
  const long limit = 2 * bound * bound + 2;
  for (long n = 1; n <= limit; ++n) {
    if (euler_phi(n) <= bound) out.push_back(n);
  }
  return out;
}

}  // namespace

CyclotomicSplit strip_cyclotomic(const IntPolynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "strip_cyclotomic of zero polynomial");
  CyclotomicSplit split{f, IntPolynomial{1}, {}};
  if (f.degree() < 1) return split;
  for (long n : indices_with_phi_at_most(f.degree())) {
    const IntPolynomial& phi = cyclotomic(n);
    if (phi.degree() > split.core.degree()) continue;
    while (split.core.degree() >= phi.degree()) {
      auto qr = divmod_integral(split.core, phi);
      if (!qr || !qr->second.is_zero()) break;
      split.core = std::move(qr->first);
      split.cofactor *= phi;
      split.factors.push_back(n);
    }
  }
  return split;
}

std::string to_string(PolyKind kind) {
  switch (kind) {
    case PolyKind::Cyclotomic: return "CYCLOTOMIC";
    case PolyKind::SalemPoly: return "SALEM_POLY";
    case PolyKind::RecipQuadPisot: return "RECIP_QUAD_PISOT";
    case PolyKind::PisotPoly: return "PISOT_POLY";
    case PolyKind::Other: return "OTHER";
  }
  return "OTHER";
}

PolyClassification classify_poly(const IntPolynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "classify_poly of zero polynomial");
  IntPolynomial prim = primitive_part(f);
  if (!prim.is_monic()) fail(ErrorCode::NotMonic, "primitive part is not monic");

  PolyClassification out;
  out.z_power = valuation_at_zero(prim);
  IntPolynomial unshifted(std::vector<Integer>(prim.coefficients().begin() + static_cast<long>(out.z_power),
                                               prim.coefficients().end()));
  CyclotomicSplit split = strip_cyclotomic(unshifted);
  out.core = split.core;
  out.cofactor = split.cofactor;
  const int d = out.core.degree();
  out.trace = d >= 1 ? Integer(-out.core.coefficient(static_cast<std::size_t>(d - 1))) : Integer(0);

  if (d == 0) {
    out.kind = PolyKind::Cyclotomic;
    return out;
  }
  const RootCensus census = disc_root_count(out.core);
  const bool reciprocal = is_reciprocal(out.core);
  const bool negative_at_one = evaluate(out.core, Integer(1)) < 0;

  if (reciprocal && d == 2 && census.real_gt_1 == 1 && negative_at_one) {
    out.kind = PolyKind::RecipQuadPisot;
  } else if (reciprocal && d >= 4 && d % 2 == 0 && census.outside_disc == 1 && census.inside_disc == 1 &&
             census.real_gt_1 == 1 && negative_at_one) {
    out.kind = PolyKind::SalemPoly;
  } else if (!reciprocal && census.outside_disc == 1 && census.on_circle == 0 && census.real_gt_1 == 1) {
    out.kind = PolyKind::PisotPoly;
  } else {
    out.kind = PolyKind::Other;
  }
  if (out.kind != PolyKind::Other) out.salem_or_pisot_factor = out.core;
  return out;
}

bool is_pisot_polynomial(const IntPolynomial& a) {
  if (a.is_zero() || !primitive_part(a).is_monic() || a.leading() != 1) return false;
  const PolyClassification c = classify_poly(a);
  return c.kind == PolyKind::PisotPoly && c.cofactor.is_one();
}

}  // namespace salemforge
