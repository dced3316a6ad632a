#include "affine_hall/field.hpp"

#include "affine_hall/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ah {

bool is_prime_power(int q, int* p, int* e) {
  if (q < 2) return false;
  int r = q, f = 0;
  for (int d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      f = d;
      break;
    }
  }
  if (f == 0) f = r;
  int k = 0;
  while (r % f == 0) {
    r /= f;
    ++k;
  }
  if (r != 1) return false;
  if (p) *p = f;
  if (e) *e = k;
  return true;
}

namespace {

// Polynomials over Z/p as digit vectors, lowest first.
std::vector<int> digits(int n, int p, int len) {
  std::vector<int> d(len);
  for (int i = 0; i < len; ++i) {
    d[i] = n % p;
    n /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int n = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) n = n * p + d[i];
  return n;
}

// Reduce a product of two digit vectors modulo the monic modulus of degree e.
std::vector<int> mulmod_p(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& m,
                          int p) {
  const int e = static_cast<int>(m.size()) - 1;
  std::vector<int> r(2 * e, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int k = 2 * e - 1; k >= e; --k) {
    int c = r[k];
    if (!c) continue;
    for (int t = 0; t <= e; ++t) r[k - e + t] = ((r[k - e + t] - c * m[t]) % p + p) % p;
  }
  r.resize(e);
  return r;
}

bool irreducible_mod_p(const std::vector<int>& m, int p) {
  const int e = static_cast<int>(m.size()) - 1;
  if (e == 1) return true;
  // A reducible polynomial has a root of some monic factor of degree <= e/2; test by
  // trial division with every monic polynomial of that degree.
  for (int d = 1; d <= e / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int n = 0; n < count; ++n) {
      std::vector<int> f = digits(n, p, d);
      f.push_back(1);
      std::vector<int> r = m;
      for (int k = e; k >= d; --k) {
        int c = r[k];
        if (!c) continue;
        for (int t = 0; t <= d; ++t) r[k - d + t] = ((r[k - d + t] - c * f[t]) % p + p) % p;
      }
      bool zero = true;
      for (int k = 0; k < d; ++k)
        if (r[k]) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(int q) : q_(q) {
  if (q > 256 || !is_prime_power(q, &p_, &e_)) throw domain_error("field size must be a prime power <= 256");
  if (e_ == 1) {
    modulus_ = {0, 1};
  } else {
    int count = 1;
    for (int i = 0; i < e_; ++i) count *= p_;
    for (int n = 0; n < count; ++n) {
      std::vector<int> m = digits(n, p_, e_);
      m.push_back(1);
      if (m[0] != 0 && irreducible_mod_p(m, p_)) {
        modulus_ = m;
        break;
      }
    }
  }
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p_, e_);
    std::vector<int> dn(e_);
    for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Elt>(undigits(dn, p_));
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p_, e_);
      std::vector<int> ds(e_);
      for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<Elt>(undigits(ds, p_));
      if (e_ == 1) {
        mul_[a * q + b] = static_cast<Elt>((a * b) % p_);
      } else {
        mul_[a * q + b] = static_cast<Elt>(undigits(mulmod_p(da, db, modulus_, p_), p_));
      }
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elt>(b);
}

const Field& Field::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto it = fields.find(q);
  if (it == fields.end()) it = fields.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
  return *it->second;
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw domain_error("inverse of zero in GF(q)");
  return inv_[a];
}

FqPoly poly_mul(const Field& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

FqPoly poly_mod(const Field& F, const FqPoly& a, const FqPoly& m) {
  FqPoly r = a;
  while (!r.empty() && r.back() == 0) r.pop_back();
  const int d = static_cast<int>(m.size()) - 1;
  const Elt li = F.inv(m.back());
  while (static_cast<int>(r.size()) - 1 >= d) {
    const int k = static_cast<int>(r.size()) - 1;
    const Elt c = F.mul(r.back(), li);
    for (int t = 0; t <= d; ++t) r[k - d + t] = F.sub(r[k - d + t], F.mul(c, m[t]));
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return r;
}

namespace {

FqPoly monic_from_index(int n, int q, int d) {
  FqPoly f(d + 1);
  for (int i = 0; i < d; ++i) {
    f[i] = static_cast<Elt>(n % q);
    n /= q;
  }
  f[d] = 1;
  return f;
}

}  // namespace

bool poly_is_irreducible(const Field& F, const FqPoly& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  const int q = F.q();
  for (int k = 1; k <= d / 2; ++k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= q;
    for (long long n = 0; n < count; ++n)
      if (poly_mod(F, f, monic_from_index(static_cast<int>(n), q, k)).empty()) return false;
  }
  return true;
}

std::vector<FqPoly> monic_irreducibles(const Field& F, int d) {
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= F.q();
  if (count > 2000000) throw resource_error("monic_irreducibles: degree too large for enumeration");
  std::vector<FqPoly> out;
  for (long long n = 0; n < count; ++n) {
    FqPoly f = monic_from_index(static_cast<int>(n), F.q(), d);
    if (poly_is_irreducible(F, f)) out.push_back(std::move(f));
  }
  return out;
}

std::string poly_str(const FqPoly& f) {
  std::string s;
  for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) {
    if (f[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (k == 0 || f[k] != 1) s += std::to_string(f[k]);
    if (k > 0) {
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace ah
