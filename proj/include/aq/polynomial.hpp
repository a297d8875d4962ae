#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "aq/field.hpp"

namespace aq {

struct Monomial {
  std::vector<int> e;
  int deg = 0;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e(n, 0) {}
  explicit Monomial(std::vector<int> exps);

  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // this / o, assuming o divides this
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

enum class OrderKind { DegRevLex, Lex };

struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  // priority[k] is the variable ranked k-th (highest first); empty = identity
  std::vector<int> priority;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
  static MonomialOrder parse(const std::string& name);
  std::string name() const { return kind == OrderKind::Lex ? "lex" : "degrevlex"; }
  // negative, zero, positive as a <, =, > b
  int compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder& o) const { return kind == o.kind && priority == o.priority; }
};

class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order = {});

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }
  int index_of(const std::string& name) const;
  bool same_as(const PolyRing& o) const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field field, std::vector<std::string> vars, MonomialOrder order = {});

struct Term {
  Monomial m;
  Scalar c;
};

// Polynomial with terms sorted strictly decreasing in the ring's order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, const Scalar& c);
  static Polynomial constant(const RingPtr& ring, long c);
  static Polynomial variable(const RingPtr& ring, int index);
  static Polynomial variable(const RingPtr& ring, const std::string& name);
  static Polynomial monomial(const RingPtr& ring, Monomial m, const Scalar& c);
  // terms in arbitrary order, possibly repeated
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  Scalar constant_term() const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(int var) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(int var) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  // images[i] is the image of variable i, all in one target ring
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;
  // variable i goes to target variable var_map[i]
  Polynomial rename(const RingPtr& target, const std::vector<int>& var_map) const;
  // same variables, different ring object (e.g. another order)
  Polynomial in_ring(const RingPtr& target) const;
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

using PolyVec = std::vector<Polynomial>;

// Parse a polynomial over the ring; variables must exist in the ring.
// Accepts + - * ^ parentheses, integer and rational constants, U+2212 minus.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t column)
      : InputError(msg + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace aq
