#include "aq/field.hpp"

namespace aq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("characteristic must be prime");
  if (p >= (1ULL << 31)) throw InputError("characteristic too large");
  return Field(p);
}

std::string Field::name() const {
  return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::make(long v) const {
  if (p_ == 0) return Scalar(v);
  long r = v % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return Scalar(r);
}

Scalar Field::make(const mpq_class& q) const {
  if (p_ == 0) {
    Scalar r(q);
    r.canonicalize();
    return r;
  }
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % m;
  if (num < 0) num += m;
  mpz_class den = q.get_den() % m;
  if (den < 0) den += m;
  if (den == 0) throw AlgebraError("denominator divisible by the characteristic");
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = (num * dinv) % m;
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  std::uint64_t s = a.get_num().get_ui() + b.get_num().get_ui();
  if (s >= p_) s -= p_;
  return Scalar(static_cast<unsigned long>(s));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  std::uint64_t x = a.get_num().get_ui(), y = b.get_num().get_ui();
  return Scalar(static_cast<unsigned long>(x >= y ? x - y : x + p_ - y));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  std::uint64_t x = a.get_num().get_ui(), y = b.get_num().get_ui();
  return Scalar(static_cast<unsigned long>((x * y) % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  std::uint64_t x = a.get_num().get_ui();
  return Scalar(static_cast<unsigned long>(x == 0 ? 0 : p_ - x));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw AlgebraError("division by zero");
  if (p_ == 0) return 1 / a;
  // Fermat inverse
  std::uint64_t base = a.get_num().get_ui(), e = p_ - 2, r = 1;
  while (e) {
    if (e & 1) r = (r * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return Scalar(static_cast<unsigned long>(r));
}

std::string Field::format(const Scalar& a) const { return a.get_str(); }

}  // namespace aq
