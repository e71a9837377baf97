#include "imprim/field.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>

namespace imprim {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidCharacteristic: return "InvalidCharacteristic";
    case Errc::InvalidExtension: return "InvalidExtension";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::BadE3: return "BadE3";
    case Errc::BadH: return "BadH";
    case Errc::BadE1Consistency: return "BadE1Consistency";
    case Errc::BadE2NC: return "BadE2NC";
    case Errc::BadCharForBeta: return "BadCharForBeta";
    case Errc::BadExponentOrder: return "BadExponentOrder";
    case Errc::NotATorusElement: return "NotATorusElement";
    case Errc::NotEnumerable: return "NotEnumerable";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

const FieldCtx& shared_field(long long p, int k) {
  static std::deque<FieldCtx> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& c : cache)
    if (c.characteristic() == p && c.extension_degree() == k) return c;
  cache.push_back(FieldCtx::make(p, k));
  return cache.back();
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

long long mod_pos(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

// Univariate polynomials over F_p as coefficient vectors (low degree first).
using UPoly = std::vector<long long>;

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly upoly_mod(UPoly a, const UPoly& m, long long p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int da = static_cast<int>(a.size()) - 1;
    long long c = a[da];  // m is monic
    for (int i = 0; i <= dm; ++i)
      a[da - dm + i] = mod_pos(a[da - dm + i] - c * m[i], p);
    trim(a);
  }
  return a;
}

bool divides(const UPoly& d, UPoly f, long long p) {
  return upoly_mod(std::move(f), d, p).empty();
}

bool upoly_irreducible(const UPoly& m, long long p) {
  const int k = static_cast<int>(m.size()) - 1;
  if (k == 1) return true;
  // Trial division by all monic polynomials of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
      UPoly g(d + 1, 0);
      long long tt = t;
      for (int i = 0; i < d; ++i) { g[i] = tt % p; tt /= p; }
      g[d] = 1;
      if (divides(g, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

FieldCtx FieldCtx::make(long long p, int k) {
  if (p == 0) {
    if (k != 1) fail(Errc::InvalidExtension, "characteristic 0 admits extension degree 1 only");
    FieldCtx c;
    c.p_ = 0;
    c.k_ = 1;
    c.modulus_ = {0, 1};
    return c;
  }
  if (!is_prime(p)) fail(Errc::InvalidCharacteristic, std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxExtDegree) fail(Errc::InvalidExtension, "extension degree out of range");
  FieldCtx c;
  c.p_ = p;
  c.k_ = k;
  if (k == 1) {
    c.modulus_ = {0, 1};
    return c;
  }
  // First monic irreducible of degree k, coefficient tuples (c0,...,c_{k-1})
  // scanned in lexicographic order with c0 most significant.
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long t = 0; t < count; ++t) {
    UPoly m(k + 1, 0);
    long long tt = t;
    for (int i = k - 1; i >= 0; --i) { m[i] = tt % p; tt /= p; }
    m[k] = 1;
    if (upoly_irreducible(m, p)) {
      c.modulus_ = std::move(m);
      return c;
    }
  }
  fail(Errc::Internal, "no irreducible modulus found");
}

long long FieldCtx::order() const {
  if (p_ == 0) fail(Errc::NotEnumerable, "characteristic 0 field is infinite");
  long long q = 1;
  for (int i = 0; i < k_; ++i) q *= p_;
  return q;
}

FieldElem FieldCtx::zero() const {
  FieldElem x;
  x.ctx_ = this;
  if (p_ == 0) x.v_[1] = 1;
  return x;
}

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(long long n) const {
  FieldElem x;
  x.ctx_ = this;
  if (p_ == 0) {
    x.v_[0] = n;
    x.v_[1] = 1;
  } else {
    x.v_[0] = mod_pos(n, p_);
  }
  return x;
}

FieldElem FieldCtx::from_rational(long long num, long long den) const {
  FieldElem x;
  x.ctx_ = this;
  if (p_ == 0) {
    x.v_[0] = num;
    x.v_[1] = den;
    x.reduce_rational();
    return x;
  }
  if (mod_pos(den, p_) == 0) fail(Errc::DivisionByZero, "denominator divisible by p");
  return from_int(num) * from_int(den).inv();
}

FieldElem FieldCtx::from_coeffs(const std::vector<long long>& c) const {
  if (p_ == 0) fail(Errc::InvalidExtension, "coefficient vectors need positive characteristic");
  if (static_cast<int>(c.size()) > k_) fail(Errc::InvalidIndex, "too many coefficients");
  FieldElem x;
  x.ctx_ = this;
  for (size_t i = 0; i < c.size(); ++i) x.v_[i] = mod_pos(c[i], p_);
  return x;
}

FieldElem FieldCtx::from_index(long long i) const {
  const long long q = order();
  if (i < 0 || i >= q) fail(Errc::InvalidIndex, "field index out of range");
  FieldElem x;
  x.ctx_ = this;
  for (int j = 0; j < k_; ++j) { x.v_[j] = i % p_; i /= p_; }
  return x;
}

long long FieldCtx::index_of(const FieldElem& x) const {
  long long i = 0;
  for (int j = k_ - 1; j >= 0; --j) i = i * p_ + x.v_[j];
  return i;
}

std::string FieldCtx::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(modulus_.size()) - 1; i >= 0; --i) {
    long long c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      if (c != 1) os << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

void FieldElem::reduce_rational() {
  long long& n = v_[0];
  long long& d = v_[1];
  if (d == 0) fail(Errc::DivisionByZero, "zero denominator");
  if (n == 0) { d = 1; return; }
  long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
  n /= g;
  d /= g;
  if (d < 0) { n = -n; d = -d; }
}

bool FieldElem::is_zero() const {
  if (ctx_->characteristic() == 0) return v_[0] == 0;
  for (int i = 0; i < ctx_->extension_degree(); ++i)
    if (v_[i] != 0) return false;
  return true;
}

bool FieldElem::is_one() const { return *this == ctx_->one(); }

FieldElem FieldElem::operator+(const FieldElem& o) const {
  FieldElem r = *this;
  const long long p = ctx_->characteristic();
  if (p == 0) {
    r.v_[0] = v_[0] * o.v_[1] + o.v_[0] * v_[1];
    r.v_[1] = v_[1] * o.v_[1];
    r.reduce_rational();
    return r;
  }
  for (int i = 0; i < ctx_->extension_degree(); ++i) r.v_[i] = mod_pos(v_[i] + o.v_[i], p);
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  const long long p = ctx_->characteristic();
  if (p == 0) {
    r.v_[0] = -v_[0];
    return r;
  }
  for (int i = 0; i < ctx_->extension_degree(); ++i) r.v_[i] = mod_pos(-v_[i], p);
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  FieldElem r = ctx_->zero();
  const long long p = ctx_->characteristic();
  if (p == 0) {
    r.v_[0] = v_[0] * o.v_[0];
    r.v_[1] = v_[1] * o.v_[1];
    r.reduce_rational();
    return r;
  }
  const int k = ctx_->extension_degree();
  std::array<long long, 2 * kMaxExtDegree> prod{};
  for (int i = 0; i < k; ++i) {
    if (v_[i] == 0) continue;
    for (int j = 0; j < k; ++j) prod[i + j] = mod_pos(prod[i + j] + v_[i] * o.v_[j], p);
  }
  // Reduce by the monic modulus.
  const auto& m = ctx_->modulus();
  for (int d = 2 * k - 2; d >= k; --d) {
    long long c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i) prod[d - k + i] = mod_pos(prod[d - k + i] - c * m[i], p);
  }
  for (int i = 0; i < k; ++i) r.v_[i] = prod[i];
  return r;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  const long long p = ctx_->characteristic();
  if (p == 0) {
    FieldElem r = *this;
    std::swap(r.v_[0], r.v_[1]);
    r.reduce_rational();
    return r;
  }
  // a^(q-2) = a^(-1) in F_q*.
  return pow(ctx_->order() - 2);
}

FieldElem FieldElem::pow(long long n) const {
  if (n < 0) {
    if (is_zero()) fail(Errc::DivisionByZero, "negative power of zero");
    return inv().pow(-n);
  }
  FieldElem base = *this;
  FieldElem r = ctx_->one();  // 0^0 = 1 by convention
  if (ctx_->characteristic() > 0 && !is_zero() && ctx_->order() > 2) n %= ctx_->order() - 1;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  const long long p = ctx_->characteristic();
  if (p == 0) return v_[0] == o.v_[0] && v_[1] == o.v_[1];
  for (int i = 0; i < ctx_->extension_degree(); ++i)
    if (v_[i] != o.v_[i]) return false;
  return true;
}

bool FieldElem::operator<(const FieldElem& o) const {
  const long long p = ctx_->characteristic();
  if (p == 0) return v_[0] * o.v_[1] < o.v_[0] * v_[1];
  return ctx_->index_of(*this) < ctx_->index_of(o);
}

std::string FieldElem::to_string() const {
  const long long p = ctx_->characteristic();
  std::ostringstream os;
  if (p == 0) {
    os << v_[0];
    if (v_[1] != 1) os << "/" << v_[1];
    return os.str();
  }
  if (ctx_->extension_degree() == 1) {
    os << v_[0];
    return os.str();
  }
  bool first = true;
  for (int i = 0; i < ctx_->extension_degree(); ++i) {
    if (v_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || v_[i] != 1) os << v_[i];
    if (i >= 1) {
      if (v_[i] != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

long long witt_coefficient_int(long long p, long long i) {
  if (!is_prime(p)) fail(Errc::InvalidCharacteristic, "witt coefficients need a prime p");
  if (i < 1 || i > p - 1) fail(Errc::InvalidIndex, "witt coefficient index out of 1..p-1");
  // binomial(p, i) in exact integers, then divide by p before reducing.
  long long binom = 1;
  for (long long j = 1; j <= i; ++j) binom = binom * (p - j + 1) / j;
  return binom / p;
}

FieldElem witt_coefficient(const FieldCtx& ctx, long long i) {
  return ctx.from_int(witt_coefficient_int(ctx.characteristic(), i));
}

}  // namespace imprim
