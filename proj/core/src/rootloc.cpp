#include "salemforge/rootloc.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "salemforge/error.hpp"

namespace salemforge {

namespace {

// Divides by the positive content, keeping the sign pattern intact.
IntPolynomial remove_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  return c == 1 ? p : divide_scalar(p, c);
}

int sign_at_pos_inf(const IntPolynomial& p) { return sgn(p.leading()); }

int sign_at_neg_inf(const IntPolynomial& p) {
  const int s = sgn(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

template <typename SignFn>
int count_variations(const std::vector<IntPolynomial>& seq, SignFn&& sign_of) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign_of(q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

IntPolynomial strip_z(const IntPolynomial& f) {
  const std::size_t m = valuation_at_zero(f);
  if (m == 0) return f;
  return IntPolynomial(std::vector<Integer>(f.coefficients().begin() + static_cast<long>(m), f.coefficients().end()));
}

int cmp_abs_helper(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

Rational largest_pow2_at_most(const Rational& x) {
  // x > 0
  long k = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2)) + 1;
  Rational w = pow2(k);
  while (w > x) w /= 2;
  return w;
}

}  // namespace

double IsolatingInterval::midpoint() const {
  Rational m = (lo + hi) / 2;
  return m.get_d();
}

Rational pow2(long k) {
  Rational r = 1;
  if (k >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  r.canonicalize();
  return r;
}

std::vector<IntPolynomial> signed_remainder_sequence(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<IntPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(remove_content(p));
  if (q.is_zero()) return seq;
  seq.push_back(remove_content(q));
  while (true) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    IntPolynomial r = -signed_pseudo_remainder(a, b);
    if (r.is_zero()) break;
    seq.push_back(remove_content(r));
  }
  return seq;
}

SturmChain::SturmChain(const IntPolynomial& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "Sturm chain of zero polynomial");
  IntPolynomial s = squarefree_part(p);
  chain_ = signed_remainder_sequence(s, derivative(s));
}

int SturmChain::variations_at(const Rational& x) const {
  return count_variations(chain_, [&](const IntPolynomial& q) { return sign_at(q, x); });
}

int SturmChain::variations_at_pos_inf() const { return count_variations(chain_, sign_at_pos_inf); }

int SturmChain::variations_at_neg_inf() const { return count_variations(chain_, sign_at_neg_inf); }

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) fail(ErrorCode::InvalidArgument, "Sturm count needs lo < hi");
  return variations_at(lo) - variations_at(hi);
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "square-free decomposition of zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> out;
  IntPolynomial f = primitive_part(p);
  if (f.degree() < 1) return out;
  const IntPolynomial df = derivative(f);
  const IntPolynomial a0 = gcd(f, df);
  IntPolynomial b = div_exact(f, a0);
  IntPolynomial c = div_exact(df, a0);
  IntPolynomial d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    IntPolynomial a = gcd(b, d);
    b = div_exact(b, a);
    c = d.is_zero() ? IntPolynomial{} : div_exact(d, a);
    d = c - derivative(b);
    if (a.degree() > 0) out.emplace_back(std::move(a), i);
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "square-free part of zero polynomial");
  IntPolynomial f = primitive_part(p);
  if (f.degree() < 1) return f;
  return primitive_part(div_exact(f, gcd(f, derivative(f))));
}

int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  return SturmChain(p).count(lo, hi);
}

int real_root_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    total += mult * SturmChain(factor).count(lo, hi);
  }
  return total;
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  // Cauchy: |root| < 1 + max |a_i / a_n| <= 1 + ceil(max|a_i| / |a_n|).
  Integer mx = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer a = abs(p.coefficients()[static_cast<std::size_t>(i)]);
    if (a > mx) mx = a;
  }
  Integer lead = abs(p.leading());
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), mx.get_mpz_t(), lead.get_mpz_t());
  q += 1;
  long bits = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
  Rational b = pow2(bits);
  return b;
}

std::vector<IsolatingInterval> isolate_real_roots_in(const IntPolynomial& p, const Rational& lo,
                                                     const Rational& hi, const Rational& width) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "isolate_real_roots of zero polynomial");
  if (!(width > 0)) fail(ErrorCode::InvalidArgument, "isolation width must be positive");
  if (!(lo < hi)) fail(ErrorCode::InvalidArgument, "isolation needs lo < hi");
  std::vector<IsolatingInterval> out;
  if (p.degree() < 1) return out;

  const auto factors = squarefree_decomposition(p);
  IntPolynomial sqfree{1};
  for (const auto& fm : factors) sqfree *= fm.first;
  const SturmChain chain(sqfree);
  std::vector<SturmChain> factor_chains;
  factor_chains.reserve(factors.size());
  for (const auto& fm : factors) factor_chains.emplace_back(fm.first);

  std::function<void(const Rational&, const Rational&, int)> split = [&](const Rational& a, const Rational& b,
                                                                          int count) {
    if (count == 0) return;
    if (count == 1 && b - a <= width) {
      IsolatingInterval iv{a, b, 0, sign_at(sqfree, b) == 0};
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factor_chains[i].count(a, b) == 1) {
          iv.multiplicity = factors[i].second;
          break;
        }
      }
      out.push_back(std::move(iv));
      return;
    }
    const Rational mid = (a + b) / 2;
    const int left = chain.count(a, mid);
    split(a, mid, left);
    split(mid, b, count - left);
  };

  split(lo, hi, chain.count(lo, hi));
  return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPolynomial& p, const Rational& width) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "isolate_real_roots of zero polynomial");
  const Rational b = root_bound(p);
  return isolate_real_roots_in(p, -b, b, width);
}

IsolatingInterval refine_root(const IntPolynomial& f, const IsolatingInterval& iv, const Rational& width) {
  if (iv.multiplicity != 1) fail(ErrorCode::NotSimple, "refine_root needs a simple root");
  if (!(width > 0)) fail(ErrorCode::InvalidArgument, "refinement width must be positive");
  if (iv.width() <= width) return iv;

  auto collapse = [&](const Rational& root, const Rational& left) {
    Rational w = largest_pow2_at_most(std::min(width, Rational(root - left)));
    return IsolatingInterval{root - w, root, 1, true};
  };

  Rational lo = iv.lo;
  Rational hi = iv.hi;
  const int sh = sign_at(f, hi);
  if (sh == 0) return collapse(hi, lo);
  int sl = sign_at(f, lo);
  if (sl == 0) {
    // lo is a root that lies outside (lo, hi]; move lo inward by Sturm counts.
    const SturmChain chain(f);
    while (sl == 0) {
      const Rational mid = (lo + hi) / 2;
      if (chain.count(mid, hi) == 1) {
        lo = mid;
        sl = sign_at(f, lo);
      } else {
        hi = mid;
        if (sign_at(f, hi) == 0) return collapse(hi, lo);
      }
    }
  }
  if (sl == sh) fail(ErrorCode::NotSimple, "interval does not bracket a simple root");
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    const int sm = sign_at(f, mid);
    if (sm == 0) return collapse(mid, lo);
    if (sm == sl) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return IsolatingInterval{lo, hi, 1, false};
}

IntPolynomial chebyshev_reduce(const IntPolynomial& g) {
  if (g.is_zero() || g.degree() % 2 != 0 || !is_reciprocal(g))
    fail(ErrorCode::InvalidArgument, "chebyshev_reduce needs a reciprocal polynomial of even degree");
  const std::size_t m = static_cast<std::size_t>(g.degree() / 2);
  const auto& c = g.coefficients();
  // V_0 = 2, V_1 = u, V_{j+1} = u V_j - V_{j-1}, with V_j(z + 1/z) = z^j + z^-j.
  const IntPolynomial u{0, 1};
  IntPolynomial prev{2};
  IntPolynomial cur = u;
  IntPolynomial out = IntPolynomial::constant(c[m]);
  for (std::size_t j = 1; j <= m; ++j) {
    out += cur * c[m + j];
    IntPolynomial next = u * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

int circle_root_count(const IntPolynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "circle_root_count of zero polynomial");
  if (f.degree() < 1) return 0;
  const IntPolynomial f0 = strip_z(f);
  if (f0.degree() < 1) return 0;
  // Circle roots are fixed by z -> 1/conj(z), so they all live in gcd(f, f*)
  // with their full multiplicity.
  const IntPolynomial g = gcd(f0, star(f0));
  auto [a, g1] = divide_out(g, linear(1));
  auto [b, h] = divide_out(g1, linear(-1));
  int count = static_cast<int>(a + b);
  if (h.degree() < 1) return count;
  if (!is_reciprocal(h)) h = -h;
  const IntPolynomial big_h = chebyshev_reduce(h);
  count += 2 * real_root_count(big_h, Rational(-2), Rational(2));
  return count;
}

int inside_count_argument(const IntPolynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "inside_count_argument of zero polynomial");
  const std::size_t m = valuation_at_zero(f);
  const IntPolynomial p = strip_z(f);
  const int n = p.degree();
  if (n < 1) return static_cast<int>(m);

  // G(s) = (1 - s)^n p((1 + s)/(1 - s)); |z| < 1 <-> Re s < 0.
  std::vector<IntPolynomial> plus_pow{IntPolynomial{1}}, minus_pow{IntPolynomial{1}};
  for (int k = 1; k <= n; ++k) {
    plus_pow.push_back(plus_pow.back() * IntPolynomial{1, 1});
    minus_pow.push_back(minus_pow.back() * IntPolynomial{1, -1});
  }
  IntPolynomial big_g;
  for (int k = 0; k <= n; ++k) {
    const Integer& ck = p.coefficients()[static_cast<std::size_t>(k)];
    if (ck == 0) continue;
    big_g += plus_pow[static_cast<std::size_t>(k)] * minus_pow[static_cast<std::size_t>(n - k)] * ck;
  }
  if (big_g.degree() != n) fail(ErrorCode::DegenerateCensus, "root at z = -1 on the unit circle");
  bool padded = false;
  if (n % 2 == 0) {
    big_g *= IntPolynomial{1, 1};
    padded = true;
  }
  // G(i w) = R(w) + i I(w).
  const auto& gc = big_g.coefficients();
  std::vector<Integer> re(gc.size()), im(gc.size());
  for (std::size_t k = 0; k < gc.size(); ++k) {
    const int phase = static_cast<int>(k % 4);
    const Integer& v = gc[k];
    switch (phase) {
      case 0: re[k] = v; break;
      case 1: im[k] = v; break;
      case 2: re[k] = -v; break;
      case 3: im[k] = -v; break;
    }
  }
  const IntPolynomial real_part(std::move(re)), imag_part(std::move(im));
  if (!gcd(real_part, imag_part).is_one() && gcd(real_part, imag_part).degree() > 0) {
    if (real_root_count(gcd(real_part, imag_part), -root_bound(imag_part), root_bound(imag_part)) > 0)
      fail(ErrorCode::DegenerateCensus, "root on the unit circle");
  }
  // Odd degree: the argument change is pi times the Cauchy index of R/I.
  const auto seq = signed_remainder_sequence(imag_part, real_part);
  const int index = count_variations(seq, sign_at_neg_inf) - count_variations(seq, sign_at_pos_inf);
  const int deg = big_g.degree();
  if ((deg + index) % 2 != 0) fail(ErrorCode::Internal, "parity mismatch in argument count");
  int left = (deg + index) / 2;
  if (padded) left -= 1;
  return left + static_cast<int>(m);
}

int inside_count_schur_cohn(const IntPolynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "inside_count_schur_cohn of zero polynomial");
  // inside(f) = offset + sign * inside(p) is maintained along the recursion.
  int offset = 0;
  int sign = 1;
  IntPolynomial p = f;
  while (true) {
    const std::size_t m = valuation_at_zero(p);
    if (m > 0) {
      offset += sign * static_cast<int>(m);
      p = strip_z(p);
    }
    const int n = p.degree();
    if (n == 0) return offset;
    const Integer& a0 = p.coefficients().front();
    const Integer& an = p.leading();
    const int cmp = cmp_abs_helper(a0, an);
    IntPolynomial t = p * a0 - star(p) * an;
    if (cmp == 0) {
      if (t.is_zero()) {
        // p = +-p*: off-circle roots pair up as z, 1/conj(z).
        if (n % 2 != 0) fail(ErrorCode::DegenerateCensus, "self-reciprocal factor with a circle root");
        return offset + sign * (n / 2);
      }
      return offset + sign * inside_count_argument(p);
    }
    t = remove_content(t);
    if (cmp < 0) {
      // |a0| < |an|: t has the zeros of p* inside, and p* has the outside zeros of p.
      offset += sign * n;
      sign = -sign;
    }
    p = std::move(t);
  }
}

RootCensus disc_root_count(const IntPolynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "disc_root_count of zero polynomial");
  RootCensus census;
  const int degree = f.degree();
  if (degree < 1) return census;
  const int zeros = static_cast<int>(valuation_at_zero(f));
  const IntPolynomial f0 = strip_z(f);

  int inside = zeros;
  int on = 0;
  if (f0.degree() >= 1) {
    const IntPolynomial g = gcd(f0, star(f0));
    const IntPolynomial r = div_exact(primitive_part(f0), g);
    on = circle_root_count(g);
    const int off_pairs = g.degree() - on;
    if (off_pairs % 2 != 0) fail(ErrorCode::Internal, "odd number of reciprocal off-circle roots");
    inside += off_pairs / 2;
    if (r.degree() >= 1) inside += inside_count_schur_cohn(r);
  }
  census.on_circle = on;
  census.inside_disc = inside;
  census.outside_disc = degree - inside - on;
  if (census.outside_disc < 0) fail(ErrorCode::Internal, "negative outside count");

  const Rational bound = root_bound(f);
  census.real_gt_1 = real_root_count(f, Rational(1), bound);
  const auto [mult_one, unused] = divide_out(f, linear(1));
  census.real_in_01 = real_root_count(f, Rational(0), Rational(1)) - static_cast<int>(mult_one);
  return census;
}

std::string render_decimal(const Rational& x, int digits, bool round_up) {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled_num = x.get_num() * scale;
  Integer q;
  if (round_up) {
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
  }
  const bool negative = q < 0;
  Integer mag = abs(q);
  std::string s = mag.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  return negative ? "-" + s : s;
}

}  // namespace salemforge
