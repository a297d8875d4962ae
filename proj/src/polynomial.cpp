#include "aq/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace aq {

Monomial::Monomial(std::vector<int> exps) : e(std::move(exps)) {
  deg = std::accumulate(e.begin(), e.end(), 0);
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
  r.deg = deg + o.deg;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
  r.deg = deg - o.deg;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(e.size());
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    r.e[i] = std::max(e[i], o.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0 && o.e[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "degrevlex") return degrevlex();
  if (name == "lex") return lex();
  throw InputError("unknown monomial order '" + name + "' (expected degrevlex or lex)");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.e.size();
  auto var = [&](std::size_t k) { return priority.empty() ? k : static_cast<std::size_t>(priority[k]); };
  if (kind == OrderKind::Lex) {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t v = var(k);
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
    }
    return 0;
  }
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (std::size_t k = n; k-- > 0;) {
    std::size_t v = var(k);
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  }
  return 0;
}

PolyRing::PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!index_.emplace(vars_[i], static_cast<int>(i)).second)
      throw InputError("duplicate variable '" + vars_[i] + "'");
  }
  if (!order_.priority.empty()) {
    std::vector<int> sorted = order_.priority;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted.size() != vars_.size() || sorted[i] != static_cast<int>(i))
        throw InputError("variable priority is not a permutation");
  }
}

int PolyRing::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return this == &o || (field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_);
}

RingPtr make_ring(Field field, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(vars), std::move(order));
}

namespace {

std::vector<Term> merge_add(const PolyRing& R, const std::vector<Term>& a, const std::vector<Term>& b,
                            bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const Field& F = R.field();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = R.order().compare(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, subtract ? F.neg(b[j].c) : b[j].c});
      ++j;
    } else {
      Scalar s = subtract ? F.sub(a[i].c, b[j].c) : F.add(a[i].c, b[j].c);
      if (!Field::is_zero(s)) out.push_back({a[i].m, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void Polynomial::check_ring(const Polynomial& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
    throw AlgebraError("polynomials live in different rings");
}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
  Polynomial p(ring);
  Scalar v = ring->field().make(c);
  if (!Field::is_zero(v)) p.terms_.push_back({Monomial(ring->nvars()), v});
  return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, long c) { return constant(ring, Scalar(c)); }

Polynomial Polynomial::variable(const RingPtr& ring, int index) {
  Polynomial p(ring);
  Monomial m(ring->nvars());
  m.e.at(static_cast<std::size_t>(index)) = 1;
  m.deg = 1;
  p.terms_.push_back({m, Scalar(1)});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, const std::string& name) {
  int i = ring->index_of(name);
  if (i < 0) throw InputError("unknown variable '" + name + "'");
  return variable(ring, i);
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m, const Scalar& c) {
  Polynomial p(ring);
  Scalar v = ring->field().make(c);
  if (!Field::is_zero(v)) p.terms_.push_back({std::move(m), v});
  return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  Polynomial p(ring);
  const Field& F = ring->field();
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = F.add(p.terms_.back().c, t.c);
    } else {
      if (!p.terms_.empty() && Field::is_zero(p.terms_.back().c)) p.terms_.pop_back();
      p.terms_.push_back({std::move(t.m), F.make(t.c)});
    }
  }
  if (!p.terms_.empty() && Field::is_zero(p.terms_.back().c)) p.terms_.pop_back();
  return p;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return Scalar(0);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.deg);
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.e[static_cast<std::size_t>(var)]);
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.is_zero() && ring_) return *this;
  if (is_zero() && o.ring_) return o;
  check_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge_add(*ring_, terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (o.is_zero() && ring_) return *this;
  check_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge_add(*ring_, terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, ring_->field().neg(t.c)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (Field::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  const Field& F = ring_->field();
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, F.mul(t.c, c)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  if (is_zero() || o.is_zero()) return r;
  const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
  for (const auto& t : small.terms_) {
    Polynomial s = big.mul_term(t.m, t.c);
    r.terms_ = merge_add(*ring_, r.terms_, s.terms_, false);
  }
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  Polynomial r(ring_);
  Scalar v = ring_->field().make(c);
  if (Field::is_zero(v)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, ring_->field().mul(t.c, v)});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(ring_, 1);
  Polynomial b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  const Field& F = ring_->field();
  const auto v = static_cast<std::size_t>(var);
  for (const auto& t : terms_) {
    if (t.m.e[v] == 0) continue;
    Scalar c = F.mul(t.c, F.make(static_cast<long>(t.m.e[v])));
    if (Field::is_zero(c)) continue;
    Monomial m = t.m;
    m.e[v] -= 1;
    m.deg -= 1;
    out.push_back({m, c});
  }
  // differentiation preserves the relative order of surviving terms only for
  // degree orders; sort to be safe
  return from_terms(ring_, std::move(out));
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  const Field& F = ring_->field();
  if (point.size() != ring_->nvars()) throw AlgebraError("point has wrong number of coordinates");
  Scalar acc(0);
  for (const auto& t : terms_) {
    Scalar v = t.c;
    for (std::size_t i = 0; i < t.m.e.size(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v = F.mul(v, point[i]);
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) throw AlgebraError("substitution has wrong number of images");
  Polynomial acc(target);
  // cache powers per variable
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (const auto& t : terms_) {
    Polynomial v = Polynomial::constant(target, t.c);
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      int k = t.m.e[i];
      if (k == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
      while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
      v = v * pw[static_cast<std::size_t>(k)];
    }
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::rename(const RingPtr& target, const std::vector<int>& var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (var_map[i] < 0) throw AlgebraError("variable '" + ring_->vars()[i] + "' has no image");
      m.e[static_cast<std::size_t>(var_map[i])] += t.m.e[i];
    }
    m.deg = t.m.deg;
    out.push_back({m, t.c});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->vars() != ring_->vars() || target->field() != ring_->field())
    throw AlgebraError("incompatible ring change");
  std::vector<Term> t = terms_;
  return from_terms(target, std::move(t));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(terms_.front().c));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (!first) s += neg ? "-" : "+";
    else if (neg) s += "-";
    first = false;
    bool unit = c == 1;
    std::string mono;
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars()[i];
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) s += c.get_str();
    else if (unit) s += mono;
    else s += c.get_str() + "*" + mono;
  }
  return s;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const RingPtr& ring) : s_(normalize(text)), ring_(ring) {}

  Polynomial parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  static std::string normalize(const std::string& t) {
    // U+2212 MINUS SIGN -> '-'
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i + 2 < t.size() && static_cast<unsigned char>(t[i]) == 0xE2 &&
          static_cast<unsigned char>(t[i + 1]) == 0x88 && static_cast<unsigned char>(t[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += t[i];
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool neg = false;
    if (peek('+')) ++pos_;
    else if (peek('-')) {
      neg = true;
      ++pos_;
    }
    Polynomial t = term();
    acc = neg ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip();
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                                      s_[pos_] == '_')) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long k = std::stoul(s_.substr(start, pos_ - start));
      if (k > 10000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class num(s_.substr(start, pos_ - start));
      mpz_class den(1);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        den = mpz_class(s_.substr(ds, pos_ - ds));
        if (den == 0) fail("zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, ring_->field().make(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace aq
