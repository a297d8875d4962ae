#include "aq/domain.hpp"

#include <algorithm>
#include <numeric>

namespace aq {

namespace {

using U64 = std::uint64_t;
using UPoly = std::vector<U64>;  // coefficients, lowest degree first

U64 mulm(U64 a, U64 b, U64 p) { return static_cast<U64>(static_cast<unsigned __int128>(a) * b % p); }

U64 powm(U64 a, U64 e, U64 p) {
  U64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

U64 invm(U64 a, U64 p) { return powm(a, p - 2, p); }

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly pmod(UPoly a, const UPoly& m, U64 p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const U64 li = invm(m.back(), p);
  while (a.size() > dm) {
    U64 q = mulm(a.back(), li, p);
    std::size_t s = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[s + i] = (a[s + i] + p - mulm(q, m[i], p)) % p;
    trim(a);
  }
  return a;
}

UPoly pmul(const UPoly& a, const UPoly& b, U64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulm(a[i], b[j], p)) % p;
  trim(c);
  return c;
}

UPoly ppow_mod(UPoly base, U64 e, const UPoly& m, U64 p) {
  UPoly r = {1};
  base = pmod(base, m, p);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

UPoly pgcd(UPoly a, UPoly b, U64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<U64> prime_factors(U64 n) {
  std::vector<U64> out;
  for (U64 q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's irreducibility test
bool rabin_irreducible(const UPoly& f_in, U64 p) {
  UPoly f = f_in;
  trim(f);
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  const U64 li = invm(f.back(), p);
  for (auto& c : f) c = mulm(c, li, p);
  const UPoly x = {0, 1};
  // frob[k] = x^(p^k) mod f
  std::vector<UPoly> frob{pmod(x, f, p)};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(ppow_mod(frob.back(), p, f, p));
  auto minus_x = [&](UPoly g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
  };
  if (!minus_x(frob[n]).empty()) return false;
  for (U64 q : prime_factors(n)) {
    UPoly g = pgcd(f, minus_x(frob[n / q]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// coefficient list of a univariate polynomial in var
std::vector<Scalar> univariate_coeffs(const Polynomial& h, int var) {
  const int d = h.degree_in(var);
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(d, 0) + 1), Scalar(0));
  for (const auto& t : h.terms()) {
    for (std::size_t i = 0; i < t.m.e.size(); ++i)
      if (static_cast<int>(i) != var && t.m.e[i] != 0) throw AlgebraError("polynomial is not univariate");
    c[static_cast<std::size_t>(t.m.e[static_cast<std::size_t>(var)])] = t.c;
  }
  return c;
}

std::optional<UPoly> reduce_mod(const std::vector<mpz_class>& c, U64 p) {
  UPoly out;
  for (const auto& z : c) {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    out.push_back(r.get_ui());
  }
  if (out.back() == 0) return std::nullopt;
  return out;
}

std::vector<mpz_class> divisors_abs(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::optional<bool> rational_irreducible(const std::vector<Scalar>& c) {
  const std::size_t n = c.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  mpz_class den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& q : c) z.push_back(mpz_class(q * den));
  static const U64 primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (U64 p : primes) {
    auto f = reduce_mod(z, p);
    if (f && rabin_irreducible(*f, p)) return true;
  }
  if (n == 2) {
    mpz_class disc = z[1] * z[1] - 4 * z[2] * z[0];
    return disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0;
  }
  if (n == 3) {
    if (z[0] == 0) return false;
    const mpz_class limit("1000000000000");
    if (abs(z[0]) > limit || abs(z[3]) > limit) return std::nullopt;
    for (const auto& a : divisors_abs(z[0]))
      for (const auto& b : divisors_abs(z[3]))
        for (int s : {1, -1}) {
          mpq_class r(a * s, b);
          r.canonicalize();
          mpq_class v = 0;
          for (std::size_t i = c.size(); i-- > 0;) v = v * r + c[i];
          if (v == 0) return false;
        }
    return true;
  }
  return std::nullopt;
}

}  // namespace

std::optional<bool> univariate_irreducible(const Polynomial& h, int var) {
  std::vector<Scalar> c = univariate_coeffs(h, var);
  const Field& F = h.ring()->field();
  if (F.is_rational()) return rational_irreducible(c);
  UPoly f;
  for (const auto& q : c) f.push_back(q.get_num().get_ui());
  trim(f);
  if (f.empty()) return false;
  return rabin_irreducible(f, F.characteristic());
}

FieldCertificate verify_field(const PresentedAlgebra& L) {
  if (L.is_zero_ring()) return {false, "zero ring"};
  const std::size_t n = L.nvars();
  if (n == 0) return {true, "base field"};
  if (L.krull_dimension() != 0) return {false, "not zero-dimensional"};
  for (std::size_t last = n; last-- > 0;) {
    MonomialOrder ord{OrderKind::Lex, {}};
    for (std::size_t i = 0; i < n; ++i)
      if (i != last) ord.priority.push_back(static_cast<int>(i));
    ord.priority.push_back(static_cast<int>(last));
    RingPtr r = make_ring(L.field(), L.vars(), ord);
    std::vector<Polynomial> rels;
    for (const auto& g : L.relations()) rels.push_back(g.in_ring(r));
    auto gb = ideal_groebner(r, rels);
    if (gb.size() != n) continue;
    std::vector<bool> seen(n, false);
    std::optional<Polynomial> eliminant;
    bool shape = true;
    for (const auto& g : gb) {
      const Monomial& lm = g.leading().m;
      bool only_last = true;
      for (std::size_t i = 0; i < n; ++i)
        if (i != last && lm.e[i] != 0) only_last = false;
      if (only_last) {
        if (eliminant) shape = false;
        eliminant = g;
        continue;
      }
      if (lm.deg != 1) {
        shape = false;
        break;
      }
      std::size_t u = 0;
      while (lm.e[u] == 0) ++u;
      if (seen[u]) shape = false;
      seen[u] = true;
      for (std::size_t k = 1; k < g.terms().size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
          if (i != last && g.terms()[k].m.e[i] != 0) shape = false;
    }
    if (!shape || !eliminant) continue;
    auto irr = univariate_irreducible(*eliminant, static_cast<int>(last));
    if (!irr) continue;
    if (!*irr) return {false, "eliminant in " + L.vars()[last] + " is reducible"};
    return {true, "shape position in " + L.vars()[last] + ", eliminant " + eliminant->to_string() + " irreducible"};
  }
  return {false, "no shape-position certificate"};
}

bool eisenstein_irreducible(const Polynomial& f, int t, int x) {
  const int n = f.degree_in(x);
  if (n < 1) return false;
  const RingPtr& R = f.ring();
  // coefficients a_i in the other variables
  std::vector<Polynomial> a(static_cast<std::size_t>(n + 1), Polynomial(R));
  for (const auto& term : f.terms()) {
    Monomial m = term.m;
    int i = m.e[static_cast<std::size_t>(x)];
    m.e[static_cast<std::size_t>(x)] = 0;
    m.deg -= i;
    a[static_cast<std::size_t>(i)] += Polynomial::monomial(R, m, term.c);
  }
  if (!a[static_cast<std::size_t>(n)].is_constant()) return false;
  for (long val : {0L, 1L, -1L, 2L, -2L}) {
    std::vector<Polynomial> img;
    for (std::size_t v = 0; v < R->nvars(); ++v)
      img.push_back(static_cast<int>(v) == t ? Polynomial::constant(R, R->field().make(val)) : Polynomial::variable(R, static_cast<int>(v)));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (!a[static_cast<std::size_t>(i)].substitute(R, img).is_zero()) ok = false;
    if (!ok) continue;
    if (a[0].derivative(t).substitute(R, img).is_zero()) continue;
    return true;
  }
  return false;
}

namespace {

// eliminate one variable v from a graph relation c*v + h(others); nullopt when none
std::optional<PresentedAlgebra> eliminate_graph_variable(const PresentedAlgebra& C) {
  const auto& gb = C.groebner();
  const std::size_t n = C.nvars();
  for (std::size_t gi = 0; gi < gb.size(); ++gi) {
    const Polynomial& g = gb[gi];
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree_in(static_cast<int>(v)) != 1) continue;
      Scalar c(0);
      bool ok = true;
      Polynomial h(C.ring());
      for (const auto& t : g.terms()) {
        if (t.m.e[v] == 1) {
          if (t.m.deg != 1) {
            ok = false;
            break;
          }
          c = t.c;
        } else {
          h += Polynomial::monomial(C.ring(), t.m, t.c);
        }
      }
      if (!ok) continue;
      std::vector<std::string> names;
      std::vector<int> map(n, -1);
      for (std::size_t i = 0; i < n; ++i)
        if (i != v) {
          map[i] = static_cast<int>(names.size());
          names.push_back(C.vars()[i]);
        }
      RingPtr r = make_ring(C.field(), names, MonomialOrder{C.ring()->order().kind, {}});
      Polynomial hv = h.rename(r, map).scale(C.field().neg(C.field().inv(c)));
      std::vector<Polynomial> img;
      for (std::size_t i = 0; i < n; ++i)
        img.push_back(i == v ? hv : Polynomial::variable(r, map[i]));
      std::vector<Polynomial> rels;
      for (std::size_t k = 0; k < gb.size(); ++k)
        if (k != gi) rels.push_back(gb[k].substitute(r, img));
      return PresentedAlgebra(r, rels, C.name());
    }
  }
  return std::nullopt;
}

}  // namespace

namespace {

// a*x^p + b*y^q with a, b nonzero and gcd(p, q) = 1
bool coprime_binomial(const Polynomial& f, const std::vector<int>& used) {
  if (f.terms().size() != 2 || used.size() != 2) return false;
  int p = 0, q = 0;
  for (const auto& t : f.terms()) {
    int nonzero = 0;
    for (int v : used)
      if (t.m.e[static_cast<std::size_t>(v)] > 0) ++nonzero;
    if (nonzero != 1) return false;
    if (t.m.e[static_cast<std::size_t>(used[0])] > 0) p = t.m.e[static_cast<std::size_t>(used[0])];
    else q = t.m.e[static_cast<std::size_t>(used[1])];
  }
  return p > 0 && q > 0 && std::gcd(p, q) == 1;
}

}  // namespace

bool certified_domain(const PresentedAlgebra& S) {
  if (S.is_zero_ring()) return false;
  PresentedAlgebra C = S;
  while (!C.is_polynomial_ring()) {
    auto next = eliminate_graph_variable(C);
    if (!next) break;
    C = std::move(*next);
    if (C.is_zero_ring()) return false;
  }
  if (C.is_polynomial_ring()) return true;
  const auto& gb = C.groebner();
  if (gb.size() == 1) {
    const Polynomial& f = gb[0];
    std::vector<int> used;
    for (std::size_t v = 0; v < C.nvars(); ++v)
      if (f.degree_in(static_cast<int>(v)) > 0) used.push_back(static_cast<int>(v));
    if (used.size() == 1) {
      auto irr = univariate_irreducible(f, used[0]);
      if (irr && *irr) return true;
    }
    if (coprime_binomial(f, used)) return true;
    for (int x : used)
      for (int t : used)
        if (t != x && eisenstein_irreducible(f, t, x)) return true;
  }
  if (C.krull_dimension() == 0) return verify_field(C).certified;
  return false;
}

bool map_is_injective(const AlgebraMap& phi) {
  RelativePresentation rp = relative_presentation(phi);
  const std::size_t n = rp.P.nvars(), nz = rp.num_source_vars();
  MonomialOrder ord{OrderKind::Lex, {}};
  for (int y : rp.y_vars) ord.priority.push_back(y);
  for (std::size_t z = 0; z < nz; ++z) ord.priority.push_back(static_cast<int>(z));
  RingPtr r = make_ring(rp.P.field(), rp.P.vars(), ord);
  std::vector<Polynomial> gens;
  for (const auto& g : rp.P.relations()) gens.push_back(g.in_ring(r));
  for (const auto& g : rp.f) gens.push_back(g.in_ring(r));
  const auto gb = ideal_groebner(r, gens);
  const PresentedAlgebra& R = phi.source();
  std::vector<int> map(n, -1);
  for (std::size_t z = 0; z < nz; ++z) map[z] = static_cast<int>(z);
  for (const auto& g : gb) {
    bool y_free = true;
    for (int y : rp.y_vars)
      if (g.degree_in(y) > 0) y_free = false;
    if (y_free && !R.is_zero(g.rename(R.ring(), map))) return false;
  }
  return true;
}

}  // namespace aq
