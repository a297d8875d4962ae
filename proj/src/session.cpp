#include "aq/session.hpp"

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace aq {

SessionError::SessionError(int line, int column, const std::string& msg)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column),
      detail_(msg) {}

namespace {

const std::vector<std::string> kTasks = {"homology", "cohomology", "classify", "resolve", "check"};
const std::vector<std::string> kConstructions = {"bar", "koszul", "hypersurface", "killcycles"};
const std::vector<std::string> kCoefficients = {"residue", "target", "free", "generic", "quotient"};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// U+2212 minus sign to '-'
std::string normalize(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 && static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

class Cursor {
 public:
  Cursor(std::string text, int line) : s_(std::move(text)), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const { throw SessionError(line_, col(), msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw SessionError(line_, static_cast<int>(pos) + 1, msg);
  }
  int col() const { return static_cast<int>(pos_) + 1; }
  std::size_t pos() const { return pos_; }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    ws();
    return pos_ >= s_.size();
  }
  bool peek(const std::string& t) {
    ws();
    return s_.compare(pos_, t.size(), t) == 0;
  }
  bool accept(const std::string& t) {
    if (!peek(t)) return false;
    pos_ += t.size();
    return true;
  }
  void expect(const std::string& t) {
    if (!accept(t)) fail("expected '" + t + "'");
  }
  std::string ident(const std::string& what = "name") {
    ws();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
    }
    if (b == pos_) fail("expected " + what);
    return s_.substr(b, pos_ - b);
  }
  // identifier possibly containing '-' (suite names)
  std::string word(const std::string& what) {
    ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' || s_[pos_] == '_'))
      ++pos_;
    if (b == pos_) fail("expected " + what);
    return s_.substr(b, pos_ - b);
  }
  std::uint64_t integer(const std::string& what) {
    ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected " + what);
    if (pos_ - b > 18) fail_at(b, what + " too large");
    return std::stoull(s_.substr(b, pos_ - b));
  }
  // contents of a bracketed list split at top-level commas
  std::vector<std::string> list(char open, char close) {
    ws();
    if (pos_ >= s_.size() || s_[pos_] != open) fail(std::string("expected '") + open + "'");
    std::size_t start = ++pos_;
    int depth = 0;
    std::vector<std::string> items;
    std::size_t item = start;
    for (; pos_ < s_.size(); ++pos_) {
      char c = s_[pos_];
      if (c == '(' || c == '[') {
        ++depth;
      } else if ((c == ')' || c == ']') && depth > 0) {
        --depth;
      } else if (c == close && depth == 0) {
        std::string last = trim(s_.substr(item, pos_ - item));
        if (!last.empty() || !items.empty()) items.push_back(last);
        ++pos_;
        for (const auto& it : items)
          if (it.empty()) fail_at(start, "empty list entry");
        return items;
      } else if (c == ',' && depth == 0) {
        items.push_back(trim(s_.substr(item, pos_ - item)));
        item = pos_ + 1;
      }
    }
    fail_at(start - 1, std::string("unclosed '") + open + "'");
  }
  void end() {
    if (!done()) fail("unexpected text '" + s_.substr(pos_) + "'");
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
  int line_;
};

std::pair<std::string, std::string> split_pair(Cursor& c, const std::string& item, const std::string& sep,
                                               std::size_t at) {
  auto k = item.find(sep);
  if (k == std::string::npos) c.fail_at(at, "expected '" + sep + "' in '" + item + "'");
  std::string a = trim(item.substr(0, k)), b = trim(item.substr(k + sep.size()));
  if (a.empty() || b.empty()) c.fail_at(at, "malformed entry '" + item + "'");
  return {a, b};
}

struct Symbols {
  std::map<std::string, std::vector<std::string>> rings;  // ring -> variables
  std::map<std::string, std::pair<std::string, std::string>> maps;
  std::map<std::string, std::string> points;  // point -> ring
  bool field_seen = false;

  bool taken(const std::string& n) const { return rings.count(n) || maps.count(n) || points.count(n); }
};

Statement parse_line(Cursor& c, Symbols& sym) {
  Statement st;
  const std::size_t kw_at = (c.ws(), c.pos());
  std::string kw = c.ident("statement keyword");
  auto fresh = [&](const std::string& n, std::size_t at) {
    if (sym.taken(n)) c.fail_at(at, "name '" + n + "' already declared");
  };
  auto need_ring = [&](const std::string& n, std::size_t at) -> const std::vector<std::string>& {
    auto it = sym.rings.find(n);
    if (it == sym.rings.end()) c.fail_at(at, "unknown ring '" + n + "'");
    return it->second;
  };
  if (kw == "field") {
    if (sym.field_seen) c.fail_at(kw_at, "field declared twice");
    if (!sym.rings.empty()) c.fail_at(kw_at, "field must be declared before any ring");
    FieldDecl f;
    if (c.accept("QQ")) {
      f.characteristic = 0;
    } else if (c.accept("GF")) {
      std::size_t at = (c.ws(), c.pos());
      f.characteristic = c.integer("characteristic");
      if (!is_prime(f.characteristic)) c.fail_at(at, "characteristic must be prime");
      if (f.characteristic >= (1ULL << 31)) c.fail_at(at, "characteristic too large");
    } else {
      c.fail("expected QQ or GF <p>");
    }
    sym.field_seen = true;
    st.body = f;
  } else if (kw == "ring") {
    RingDecl r;
    std::size_t at = (c.ws(), c.pos());
    r.name = c.ident("ring name");
    fresh(r.name, at);
    c.expect("=");
    if (c.peek("poly(") && c.accept("poly")) {
      r.polynomial = true;
      std::size_t la = c.pos();
      r.vars = c.list('(', ')');
      std::set<std::string> seen;
      for (const auto& v : r.vars) {
        Cursor vc(v, 0);
        if (vc.ident() != v) c.fail_at(la, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second) c.fail_at(la, "variable '" + v + "' repeated");
      }
      sym.rings[r.name] = r.vars;
    } else {
      r.polynomial = false;
      std::size_t ba = (c.ws(), c.pos());
      r.base = c.ident("base ring");
      sym.rings[r.name] = need_ring(r.base, ba);
      c.expect("/");
      r.relations = c.list('(', ')');
    }
    st.body = r;
  } else if (kw == "map") {
    MapDecl m;
    std::size_t at = (c.ws(), c.pos());
    m.name = c.ident("map name");
    fresh(m.name, at);
    c.expect(":");
    std::size_t sa = (c.ws(), c.pos());
    m.source = c.ident("source ring");
    const auto& sv = need_ring(m.source, sa);
    c.expect("->");
    std::size_t ta = (c.ws(), c.pos());
    m.target = c.ident("target ring");
    const auto& tv = need_ring(m.target, ta);
    std::set<std::string> given;
    if (c.peek("[")) {
      std::size_t la = c.pos();
      for (const auto& item : c.list('[', ']')) {
        auto p = split_pair(c, item, "->", la);
        if (std::find(sv.begin(), sv.end(), p.first) == sv.end())
          c.fail_at(la, "'" + p.first + "' is not a variable of " + m.source);
        if (!given.insert(p.first).second) c.fail_at(la, "image of '" + p.first + "' given twice");
        m.images.push_back(p);
      }
    }
    for (const auto& v : sv)
      if (!given.count(v) && std::find(tv.begin(), tv.end(), v) == tv.end())
        c.fail_at(ta, "no image for '" + v + "' and no variable of that name in " + m.target);
    sym.maps[m.name] = {m.source, m.target};
    st.body = m;
  } else if (kw == "point") {
    PointDecl p;
    std::size_t at = (c.ws(), c.pos());
    p.name = c.ident("point name");
    fresh(p.name, at);
    c.expect("on");
    std::size_t ra = (c.ws(), c.pos());
    p.ring = c.ident("ring");
    const auto& vars = need_ring(p.ring, ra);
    std::size_t la = (c.ws(), c.pos());
    std::set<std::string> given;
    for (const auto& item : c.list('(', ')')) {
      auto kv = split_pair(c, item, "=", la);
      if (std::find(vars.begin(), vars.end(), kv.first) == vars.end())
        c.fail_at(la, "'" + kv.first + "' is not a variable of " + p.ring);
      if (!given.insert(kv.first).second) c.fail_at(la, "coordinate '" + kv.first + "' given twice");
      p.values.push_back(kv);
    }
    for (const auto& v : vars)
      if (!given.count(v)) c.fail_at(la, "missing coordinate '" + v + "'");
    sym.points[p.name] = p.ring;
    st.body = p;
  } else if (kw == "task") {
    std::size_t ka = (c.ws(), c.pos());
    std::string kind = c.ident("task kind");
    if (kind == "homology" || kind == "cohomology") {
      HomologyTask h;
      h.cohomology = kind == "cohomology";
      std::size_t ma = (c.ws(), c.pos());
      h.map = c.ident("map");
      if (!sym.maps.count(h.map)) c.fail_at(ma, "unknown map '" + h.map + "'");
      c.expect("coeff");
      std::size_t ca = (c.ws(), c.pos());
      h.coeff = c.ident("coefficient kind");
      if (h.coeff == "residue") {
        std::size_t pa = (c.ws(), c.pos());
        h.arg = c.ident("point");
        auto it = sym.points.find(h.arg);
        if (it == sym.points.end()) c.fail_at(pa, "unknown point '" + h.arg + "'");
        if (it->second != sym.maps[h.map].second)
          c.fail_at(pa, "point '" + h.arg + "' is not on the target of " + h.map);
      } else if (h.coeff == "free") {
        h.arg = std::to_string(c.integer("rank"));
      } else if (h.coeff == "quotient") {
        h.polys = c.list('(', ')');
      } else if (h.coeff != "target" && h.coeff != "generic") {
        c.fail_at(ca, "unknown coefficient kind '" + h.coeff + "'; valid kinds: " + join(kCoefficients, ", "));
      }
      c.expect("maxdeg");
      h.maxdeg = static_cast<int>(c.integer("degree"));
      st.body = h;
    } else if (kind == "classify") {
      ClassifyTask t;
      std::size_t pa = (c.ws(), c.pos());
      t.property = c.ident("property");
      try {
        parse_property(t.property);
      } catch (const std::exception& e) {
        c.fail_at(pa, e.what());
      }
      std::size_t sa = (c.ws(), c.pos());
      t.subject = c.ident("map or ring");
      std::string ring;
      if (sym.maps.count(t.subject) && (t.property == "regular" || t.property == "ci"))
        c.fail_at(sa, t.property + " applies to rings, not maps");
      if (sym.maps.count(t.subject)) ring = sym.maps[t.subject].second;
      else if (sym.rings.count(t.subject)) ring = t.subject;
      else c.fail_at(sa, "unknown map or ring '" + t.subject + "'");
      c.expect("at");
      do {
        std::size_t qa = (c.ws(), c.pos());
        std::string q = c.ident("point");
        auto it = sym.points.find(q);
        if (it == sym.points.end()) c.fail_at(qa, "unknown point '" + q + "'");
        if (it->second != ring) c.fail_at(qa, "point '" + q + "' is not on " + ring);
        t.points.push_back(q);
      } while (c.accept(","));
      st.body = t;
    } else if (kind == "resolve") {
      ResolveTask t;
      std::size_t ca = (c.ws(), c.pos());
      t.construction = c.ident("construction");
      if (std::find(kConstructions.begin(), kConstructions.end(), t.construction) == kConstructions.end())
        c.fail_at(ca, "unknown construction '" + t.construction + "'; valid constructions: " + join(kConstructions, ", "));
      std::size_t ra = (c.ws(), c.pos());
      t.ring = c.ident("ring");
      need_ring(t.ring, ra);
      if (t.construction != "bar") {
        std::size_t la = (c.ws(), c.pos());
        t.polys = c.list('(', ')');
        if (t.polys.empty()) c.fail_at(la, "expected at least one element");
        if (t.construction == "hypersurface" && t.polys.size() != 1) c.fail_at(la, "hypersurface takes one element");
      }
      c.expect("levels");
      t.levels = static_cast<int>(c.integer("level count"));
      st.body = t;
    } else if (kind == "check") {
      CheckTask t;
      std::size_t sa = (c.ws(), c.pos());
      t.suite = c.word("suite name");
      auto names = suite_names();
      if (std::find(names.begin(), names.end(), t.suite) == names.end())
        c.fail_at(sa, "unknown suite '" + t.suite + "'; valid suites: " + join(names, ", "));
      if (c.accept("seed")) t.seed = c.integer("seed");
      st.body = t;
    } else {
      c.fail_at(ka, "unknown task '" + kind + "'; valid tasks: " + join(kTasks, ", "));
    }
  } else {
    c.fail_at(kw_at, "unknown statement '" + kw + "'; expected field, ring, map, point or task");
  }
  c.end();
  return st;
}

std::string int_str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

SessionFile parse_session(const std::string& text) {
  SessionFile s;
  Symbols sym;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string body = normalize(raw);
    auto hash = body.find('#');
    if (hash != std::string::npos) body = body.substr(0, hash);
    if (trim(body).empty()) continue;
    Cursor c(body, line);
    Statement st = parse_line(c, sym);
    st.line = line;
    s.statements.push_back(std::move(st));
  }
  return s;
}

std::string print_statement(const Statement& s) {
  struct Printer {
    std::string operator()(const FieldDecl& f) const {
      return f.characteristic == 0 ? "field QQ" : "field GF " + int_str(f.characteristic);
    }
    std::string operator()(const RingDecl& r) const {
      if (r.polynomial) return "ring " + r.name + " = poly(" + join(r.vars, ", ") + ")";
      return "ring " + r.name + " = " + r.base + " / (" + join(r.relations, ", ") + ")";
    }
    std::string operator()(const MapDecl& m) const {
      std::string s = "map " + m.name + " : " + m.source + " -> " + m.target;
      if (!m.images.empty()) {
        std::vector<std::string> parts;
        for (const auto& [v, e] : m.images) parts.push_back(v + " -> " + e);
        s += " [" + join(parts, ", ") + "]";
      }
      return s;
    }
    std::string operator()(const PointDecl& p) const {
      std::vector<std::string> parts;
      for (const auto& [v, e] : p.values) parts.push_back(v + "=" + e);
      return "point " + p.name + " on " + p.ring + " (" + join(parts, ", ") + ")";
    }
    std::string operator()(const HomologyTask& h) const {
      std::string s = std::string("task ") + (h.cohomology ? "cohomology " : "homology ") + h.map + " coeff " + h.coeff;
      if (h.coeff == "residue" || h.coeff == "free") s += " " + h.arg;
      if (h.coeff == "quotient") s += " (" + join(h.polys, ", ") + ")";
      return s + " maxdeg " + std::to_string(h.maxdeg);
    }
    std::string operator()(const ClassifyTask& t) const {
      return "task classify " + t.property + " " + t.subject + " at " + join(t.points, ", ");
    }
    std::string operator()(const ResolveTask& t) const {
      std::string s = "task resolve " + t.construction + " " + t.ring;
      if (!t.polys.empty()) s += " (" + join(t.polys, ", ") + ")";
      return s + " levels " + std::to_string(t.levels);
    }
    std::string operator()(const CheckTask& t) const {
      return "task check " + t.suite + (t.seed ? " seed " + int_str(*t.seed) : "");
    }
  };
  return std::visit(Printer{}, s.body);
}

std::string print_session(const SessionFile& s) {
  std::string out;
  for (const auto& st : s.statements) out += print_statement(st) + "\n";
  return out;
}

// ---------------------------------------------------------------- running

namespace {

struct Env {
  Field field = Field::rationals();
  MonomialOrder order;
  std::map<std::string, PresentedAlgebra> rings;
  std::map<std::string, AlgebraMap> maps;
  std::map<std::string, RationalPoint> points;
};

Scalar parse_value(const Field& k, const std::string& text) {
  std::string t = text;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw InputError("invalid coordinate '" + text + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return k.make(q);
}

void declare(Env& env, const Statement& st) {
  if (auto f = std::get_if<FieldDecl>(&st.body)) {
    env.field = f->characteristic == 0 ? Field::rationals() : Field::prime(f->characteristic);
  } else if (auto r = std::get_if<RingDecl>(&st.body)) {
    if (r->polynomial) {
      env.rings.emplace(r->name, PresentedAlgebra::polynomial(env.field, r->vars, r->name, env.order));
    } else {
      const PresentedAlgebra& base = env.rings.at(r->base);
      std::vector<Polynomial> rel;
      for (const auto& t : r->relations) rel.push_back(base.parse_element(t));
      env.rings.emplace(r->name, base.quotient(rel, r->name));
    }
  } else if (auto m = std::get_if<MapDecl>(&st.body)) {
    env.maps.emplace(m->name, AlgebraMap::parse(env.rings.at(m->source), env.rings.at(m->target), m->images, m->name));
  } else if (auto p = std::get_if<PointDecl>(&st.body)) {
    const PresentedAlgebra& A = env.rings.at(p->ring);
    std::vector<std::pair<std::string, Scalar>> vals;
    for (const auto& [v, e] : p->values) vals.emplace_back(v, parse_value(A.field(), e));
    env.points.emplace(p->name, make_point(A, vals, p->name));
  }
}

struct TaskFailure {
  std::string kind, message;
};

Json run_homology(const Env& env, const HomologyTask& h, int maxdeg) {
  const AlgebraMap& phi = env.maps.at(h.map);
  const PresentedAlgebra& S = phi.target();
  Coefficients N;
  if (h.coeff == "residue") N = Coefficients::residue(env.points.at(h.arg));
  else if (h.coeff == "target") N = Coefficients::target_ring(S);
  else if (h.coeff == "free") N = Coefficients::of_module(FPModule::free(S, std::stoul(h.arg)));
  else if (h.coeff == "generic") N = Coefficients::generic();
  else {
    std::vector<Polynomial> ideal;
    for (const auto& t : h.polys) ideal.push_back(S.parse_element(t));
    N = Coefficients::of_module(FPModule::cyclic(S, ideal));
  }
  HomologyReport rep = h.cohomology ? aq_cohomology(phi, N, maxdeg) : aq_homology(phi, N, maxdeg);
  return homology_json(rep);
}

Json run_classify(const Env& env, const ClassifyTask& t, std::vector<TaskFailure>& fails) {
  Property prop = parse_property(t.property);
  std::vector<RationalPoint> pts;
  for (const auto& q : t.points) pts.push_back(env.points.at(q));
  ClassificationReport rep;
  auto m = env.maps.find(t.subject);
  if (m != env.maps.end()) rep = classify_map(prop, m->second, pts);
  else rep = classify_ring(prop, env.rings.at(t.subject), pts);
  if (!rep.oracle_agreement()) fails.push_back({"oracle-disagreement", "classifier and oracle disagree"});
  return classification_json(rep, env.field);
}

Json run_resolve(const Env& env, const ResolveTask& t, int levels, std::vector<TaskFailure>& fails) {
  const PresentedAlgebra& R = env.rings.at(t.ring);
  std::vector<Polynomial> f;
  for (const auto& s : t.polys) f.push_back(R.parse_element(s));
  Json j = {{"construction", t.construction}, {"ring", R.name()}, {"levels", levels}};
  if (t.construction == "koszul") {
    FreeComplex K = koszul_complex(f, R);
    j["complex"] = complex_json(K);
    Json hom = Json::array();
    bool regular = true;
    for (int n = 0; n <= static_cast<int>(f.size()); ++n) {
      FPModule H = complex_homology(K, n).pruned();
      hom.push_back({{"n", n}, {"module", module_json(H)}});
      if (n >= 1 && !H.is_zero()) regular = false;
    }
    j["homology"] = hom;
    j["higher_homology_vanishes"] = regular;
    return j;
  }
  SimplicialAlgebra A = t.construction == "bar"            ? SimplicialAlgebra::bar_construction(R, levels)
                        : t.construction == "hypersurface" ? SimplicialAlgebra::hypersurface(R, f[0], levels)
                                                           : SimplicialAlgebra::kill_chain(R, {}, t.polys, levels);
  auto v = validate_identities(A);
  auto vm = validate_identities(kahler_module(A));
  bool aug = augmentation_valid(A);
  j["simplicial"] = simplicial_json(A);
  j["violations"] = violations_json(v);
  j["module_violations"] = violations_json(vm);
  j["augmentation_valid"] = aug;
  auto res = is_resolution(A);
  j["resolution"] = res ? Json(*res) : Json(nullptr);
  if (!v.empty() || !vm.empty() || !aug) fails.push_back({"simplicial-identity", "simplicial identities fail"});
  if (t.construction == "hypersurface") {
    CotangentComplex L = cotangent_from_resolution(A, false);
    auto ranks = hypersurface_rank_table(L);
    Json rk = Json::array();
    for (int n = 2; n <= levels; ++n) {
      std::size_t want = hypersurface_rank_closed_form(n);
      rk.push_back({{"n", n}, {"rank", ranks[static_cast<std::size_t>(n - 2)]}, {"closed_form", want}});
      if (ranks[static_cast<std::size_t>(n - 2)] != want)
        fails.push_back({"rank-table", "rank of d_" + std::to_string(n) + " differs from the closed form"});
    }
    j["cotangent"] = complex_json(L.complex);
    j["ranks"] = rk;
  }
  return j;
}

std::string task_kind(const Statement& st) {
  if (auto h = std::get_if<HomologyTask>(&st.body)) return h->cohomology ? "cohomology" : "homology";
  if (std::holds_alternative<ClassifyTask>(st.body)) return "classify";
  if (std::holds_alternative<ResolveTask>(st.body)) return "resolve";
  if (std::holds_alternative<CheckTask>(st.body)) return "check";
  return "";
}

std::string file_name(const TaskOutcome& t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu", t.index);
  return std::string("task-") + buf + "-" + t.kind + ".json";
}

}  // namespace

Json SessionResult::summary() const {
  Json tasks_j = Json::array();
  for (const auto& t : tasks)
    tasks_j.push_back({{"index", t.index}, {"line", t.line}, {"kind", t.kind}, {"status", t.status}, {"file", file_name(t)}});
  Json s = {{"exit_code", exit_code}, {"tasks", tasks_j}, {"discrepancies", discrepancies}};
  if (!error.empty()) s["error"] = error;
  return s;
}

SessionResult run_session(const SessionFile& s, const RunOptions& opts) {
  SessionResult out;
  Env env;
  env.order = MonomialOrder{opts.order, {}};
  auto cap = [&](int n) { return opts.max_level ? std::min(n, *opts.max_level) : n; };
  std::size_t index = 0;
  for (const auto& st : s.statements) {
    std::string kind = task_kind(st);
    if (kind.empty()) {
      try {
        declare(env, st);
      } catch (const std::exception& e) {
        out.error = "line " + std::to_string(st.line) + ": " + e.what();
        out.exit_code = 2;
        break;
      }
      continue;
    }
    TaskOutcome t;
    t.index = ++index;
    t.line = st.line;
    t.kind = kind;
    std::vector<TaskFailure> fails;
    Json result;
    auto start = std::chrono::steady_clock::now();
    try {
      if (auto h = std::get_if<HomologyTask>(&st.body)) {
        result = run_homology(env, *h, cap(h->maxdeg));
      } else if (auto c = std::get_if<ClassifyTask>(&st.body)) {
        result = run_classify(env, *c, fails);
      } else if (auto r = std::get_if<ResolveTask>(&st.body)) {
        result = run_resolve(env, *r, cap(r->levels), fails);
      } else if (auto k = std::get_if<CheckTask>(&st.body)) {
        SuiteResult sr = run_suite(k->suite, k->seed.value_or(1), opts.order);
        result = suite_json(sr);
        for (const auto& f : sr.failures) fails.push_back({"suite-case", f});
      }
      t.status = fails.empty() ? "ok" : "failed";
    } catch (const OracleDisagreement& e) {
      fails.push_back({"oracle-disagreement", e.what()});
      t.status = "failed";
    } catch (const InputError& e) {
      out.error = "line " + std::to_string(st.line) + ": " + e.what();
      out.exit_code = 2;
      t.status = "error";
    } catch (const std::exception& e) {
      fails.push_back({"error", e.what()});
      t.status = "error";
    }
    t.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    t.canonical = {{"task", kind}, {"line", st.line}, {"statement", print_statement(st)}, {"status", t.status},
                   {"result", result}};
    for (const auto& f : fails) {
      out.discrepancies.push_back({{"task", t.index}, {"line", st.line}, {"kind", f.kind}, {"message", f.message}});
      if (out.exit_code == 0) out.exit_code = 1;
    }
    out.tasks.push_back(t);
    if (out.exit_code == 2) break;
  }
  if (opts.out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(*opts.out_dir);
    for (const auto& t : out.tasks) {
      Json file = {{"canonical", t.canonical}, {"info", {{"elapsed_ms", t.elapsed_ms}}}};
      std::ofstream(fs::path(*opts.out_dir) / file_name(t)) << canonical_dump(file);
    }
    std::ofstream(fs::path(*opts.out_dir) / "summary.json") << canonical_dump(out.summary());
  }
  return out;
}

}  // namespace aq
