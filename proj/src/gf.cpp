#include "repvar2/gf.hpp"

#include <algorithm>

namespace repvar2 {

namespace {

constexpr uint32_t kMaxOrder = 1u << 16;
constexpr uint32_t kTableLimit = 256;

// Polynomials over F_p as coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

// f mod g, g monic.
Poly pmod(Poly f, const Poly& g, int p) {
  trim(f);
  while (pdeg(f) >= pdeg(g)) {
    int shift = pdeg(f) - pdeg(g);
    int c = f.back();
    for (int i = 0; i <= pdeg(g); ++i) {
      int& fi = f[i + shift];
      fi = (fi - c * g[i]) % p;
      if (fi < 0) fi += p;
    }
    trim(f);
  }
  return f;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

bool divides(const Poly& g, const Poly& f, int p) { return pmod(f, g, p).empty(); }

// Enumerates monic polynomials of degree d in lexicographic order of the
// low-degree-first coefficient tuple.
bool next_monic(Poly& g, int p) {
  for (int i = static_cast<int>(g.size()) - 2; i >= 0; --i) {
    if (++g[i] < p) return true;
    g[i] = 0;
  }
  return false;
}

bool is_irreducible(const Poly& f, int p) {
  int k = pdeg(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  for (int d = 1; 2 * d <= k; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    do {
      if (divides(g, f, p)) return false;
    } while (next_monic(g, p));
  }
  return true;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> smallest_irreducible(int p, int k) {
  if (k == 1) return {0, 1};  // placeholder x, arithmetic is mod p
  // Scan monic degree-k candidates; the non-leading coefficients run in
  // lexicographic order with the constant term most significant.
  std::vector<int> low(k, 0);
  for (;;) {
    Poly f = low;
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    int i = k - 1;
    while (i >= 0 && ++low[i] == p) low[i--] = 0;
    if (i < 0) break;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldSpec::FieldSpec(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw NotPrimeError(p);
  if (k < 1) throw TooLargeError("extension degree must be >= 1");
  uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<uint64_t>(p);
    if (q > kMaxOrder) throw TooLargeError("field order exceeds 2^16");
  }
  q_ = static_cast<uint32_t>(q);
  modulus_ = smallest_irreducible(p, k);
  if (k > 1 && !is_irreducible(modulus_, p))
    throw std::logic_error("modulus failed irreducibility recheck");
  if (q_ <= kTableLimit) build_tables();
}

FieldSpec FieldSpec::of_order(uint32_t q) {
  if (q < 2) throw NotPrimeError(q);
  uint32_t p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  int k = 0;
  uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw NotPrimeError(q);
  return FieldSpec(static_cast<int>(p), k);
}

FieldElement FieldSpec::element(uint32_t idx) const {
  if (idx >= q_) throw IndexOutOfRangeError("element index " + std::to_string(idx));
  return FieldElement(*this, idx);
}

std::vector<int> FieldSpec::coeffs_of(uint32_t idx) const {
  std::vector<int> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = static_cast<int>(idx % p_);
    idx /= p_;
  }
  return c;
}

uint32_t FieldSpec::index_of(const std::vector<int>& coeffs) const {
  uint32_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] % p_ : 0;
    if (c < 0) c += p_;
    idx = idx * p_ + static_cast<uint32_t>(c);
  }
  return idx;
}

FieldElement FieldSpec::from_coeffs(const std::vector<int>& coeffs) const {
  if (coeffs.size() > static_cast<size_t>(k_))
    throw IndexOutOfRangeError("coefficient list longer than extension degree");
  return FieldElement(*this, index_of(coeffs));
}

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> all;
  all.reserve(q_);
  for (uint32_t i = 0; i < q_; ++i) all.emplace_back(*this, i);
  return all;
}

uint32_t FieldSpec::add_idx(uint32_t a, uint32_t b) const {
  if (has_tables()) return add_table_[a * q_ + b];
  auto ca = coeffs_of(a), cb = coeffs_of(b);
  for (int i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return index_of(ca);
}

uint32_t FieldSpec::sub_idx(uint32_t a, uint32_t b) const {
  if (has_tables()) return sub_table_[a * q_ + b];
  auto ca = coeffs_of(a), cb = coeffs_of(b);
  for (int i = 0; i < k_; ++i) ca[i] = ((ca[i] - cb[i]) % p_ + p_) % p_;
  return index_of(ca);
}

uint32_t FieldSpec::neg_idx(uint32_t a) const {
  if (has_tables()) return neg_table_[a];
  auto ca = coeffs_of(a);
  for (int i = 0; i < k_; ++i) ca[i] = (p_ - ca[i]) % p_;
  return index_of(ca);
}

uint32_t FieldSpec::mul_slow(uint32_t a, uint32_t b) const {
  if (k_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  Poly pa = coeffs_of(a), pb = coeffs_of(b);
  trim(pa);
  trim(pb);
  Poly r = pmod(pmul(pa, pb, p_), modulus_, p_);
  return index_of(r);
}

uint32_t FieldSpec::mul_idx(uint32_t a, uint32_t b) const {
  if (has_tables()) return mul_table_[a * q_ + b];
  return mul_slow(a, b);
}

uint32_t FieldSpec::pow_idx(uint32_t a, uint64_t e) const {
  uint32_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul_idx(r, base);
    base = mul_idx(base, base);
    e >>= 1;
  }
  return r;
}

uint32_t FieldSpec::inv_idx(uint32_t a) const {
  if (a == 0) throw DivisionByZeroError();
  if (has_tables()) return inv_table_[a];
  return pow_idx(a, q_ - 2);  // Fermat
}

uint32_t FieldSpec::frobenius_idx(uint32_t a) const {
  return pow_idx(a, static_cast<uint64_t>(p_));
}

bool FieldSpec::same_field(const FieldSpec& o) const {
  return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
}

void FieldSpec::build_tables() {
  add_table_.resize(static_cast<size_t>(q_) * q_);
  sub_table_.resize(static_cast<size_t>(q_) * q_);
  mul_table_.clear();  // keep has_tables() false while filling
  std::vector<uint16_t> mul(static_cast<size_t>(q_) * q_);
  neg_table_.resize(q_);
  inv_table_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a) {
    neg_table_[a] = static_cast<uint16_t>(neg_idx(a));
    for (uint32_t b = 0; b < q_; ++b) {
      add_table_[a * q_ + b] = static_cast<uint16_t>(add_idx(a, b));
      sub_table_[a * q_ + b] = static_cast<uint16_t>(sub_idx(a, b));
      uint32_t m = mul_slow(a, b);
      mul[a * q_ + b] = static_cast<uint16_t>(m);
      if (m == 1) inv_table_[a] = static_cast<uint16_t>(b);
    }
  }
  mul_table_ = std::move(mul);
}

std::vector<int> FieldElement::coeffs() const { return spec_->coeffs_of(idx_); }

namespace {
const FieldSpec& common_spec(const FieldElement& a, const FieldElement& b) {
  if (!a.spec().same_field(b.spec())) throw FieldMismatchError();
  return a.spec();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const FieldSpec& f = common_spec(*this, o);
  return FieldElement(f, f.add_idx(idx_, o.idx_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const FieldSpec& f = common_spec(*this, o);
  return FieldElement(f, f.sub_idx(idx_, o.idx_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FieldSpec& f = common_spec(*this, o);
  return FieldElement(f, f.mul_idx(idx_, o.idx_));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(*spec_, spec_->neg_idx(idx_));
}

FieldElement FieldElement::inv() const {
  return FieldElement(*spec_, spec_->inv_idx(idx_));
}

FieldElement FieldElement::pow(uint64_t e) const {
  return FieldElement(*spec_, spec_->pow_idx(idx_, e));
}

FieldElement FieldElement::frobenius() const {
  return FieldElement(*spec_, spec_->frobenius_idx(idx_));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return idx_ == o.idx_ && spec_->same_field(o.spec());
}

std::string FieldElement::str() const {
  auto c = coeffs();
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace repvar2
