#include "deltatop/expr.hpp"

#include <algorithm>
#include <cctype>

#include "deltatop/covers.hpp"

namespace deltatop {

enum class Op {
  interval,
  labels,
  empty_set,
  whole,
  var,
  unary,
  set_union,
  set_meet,
  set_minus,
  predicate,
  equals,
  subset,
  logic_not,
  logic_and,
  logic_or,
  logic_implies,
};

struct ExprNode {
  Op op;
  std::size_t pos = 0;
  std::string name;                 // function, predicate or variable name
  std::vector<std::string> labels;  // label-set literal
  std::optional<Interval> interval;
  std::vector<std::shared_ptr<const ExprNode>> kids;

  bool formula() const {
    switch (op) {
      case Op::predicate:
      case Op::equals:
      case Op::subset:
      case Op::logic_not:
      case Op::logic_and:
      case Op::logic_or:
      case Op::logic_implies:
        return true;
      default:
        return false;
    }
  }
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

const std::vector<std::string> kFunctions = {"int", "cl", "comp", "dcl", "sqinv"};
const std::vector<std::string> kPredicates = {"open",         "closed",     "regular_open",
                                              "regular_closed", "delta_open", "delta_closed"};
const std::vector<std::string> kKeywords = {"not", "and", "or", "implies", "subset"};

bool one_of(const std::string& w, const std::vector<std::string>& list) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool is_variable_name(const std::string& w) {
  return w.size() == 1 && std::isupper(static_cast<unsigned char>(w[0])) && w != "U" && w != "X" && w != "R";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr n = implies();
    skip();
    if (p_ != text_.size()) throw ParseError("unexpected input", p_);
    return n;
  }

  std::vector<std::string> vars;

 private:
  void skip() {
    while (p_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[p_]))) ++p_;
  }

  static bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  // Reads the identifier at the cursor without consuming it.
  std::string peek_word() {
    skip();
    std::size_t q = p_;
    while (q < text_.size() && word_char(text_[q])) ++q;
    return std::string(text_.substr(p_, q - p_));
  }

  bool accept_word(const std::string& w) {
    if (peek_word() != w) return false;
    p_ += w.size();
    return true;
  }

  bool accept(char c) {
    skip();
    if (p_ < text_.size() && text_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", p_);
  }

  static NodePtr make(Op op, std::size_t pos, std::vector<NodePtr> kids = {}, std::string name = {}) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->pos = pos;
    n->kids = std::move(kids);
    n->name = std::move(name);
    return n;
  }

  static void need_formula(const NodePtr& n) {
    if (!n->formula()) throw ParseError("expected a formula, found a set", n->pos);
  }
  static void need_set(const NodePtr& n) {
    if (n->formula()) throw ParseError("expected a set, found a formula", n->pos);
  }

  NodePtr implies() {
    NodePtr lhs = disjunction();
    skip();
    const std::size_t at = p_;
    if (accept_word("implies")) {
      NodePtr rhs = implies();
      need_formula(lhs);
      need_formula(rhs);
      return make(Op::logic_implies, at, {lhs, rhs});
    }
    return lhs;
  }

  NodePtr disjunction() {
    NodePtr lhs = conjunction();
    while (true) {
      skip();
      const std::size_t at = p_;
      if (!accept_word("or")) return lhs;
      NodePtr rhs = conjunction();
      need_formula(lhs);
      need_formula(rhs);
      lhs = make(Op::logic_or, at, {lhs, rhs});
    }
  }

  NodePtr conjunction() {
    NodePtr lhs = negation();
    while (true) {
      skip();
      const std::size_t at = p_;
      if (!accept_word("and")) return lhs;
      NodePtr rhs = negation();
      need_formula(lhs);
      need_formula(rhs);
      lhs = make(Op::logic_and, at, {lhs, rhs});
    }
  }

  NodePtr negation() {
    skip();
    const std::size_t at = p_;
    if (accept_word("not")) {
      NodePtr inner = negation();
      need_formula(inner);
      return make(Op::logic_not, at, {inner});
    }
    return comparison();
  }

  NodePtr comparison() {
    NodePtr lhs = set_sum();
    skip();
    const std::size_t at = p_;
    Op op;
    if (accept('=')) {
      op = Op::equals;
    } else if (accept_word("subset")) {
      op = Op::subset;
    } else {
      return lhs;
    }
    NodePtr rhs = set_sum();
    need_set(lhs);
    need_set(rhs);
    return make(op, at, {lhs, rhs});
  }

  NodePtr set_sum() {
    NodePtr lhs = set_meet();
    while (true) {
      skip();
      const std::size_t at = p_;
      Op op;
      if (accept_word("U")) {
        op = Op::set_union;
      } else if (accept('-')) {
        op = Op::set_minus;
      } else {
        return lhs;
      }
      NodePtr rhs = set_meet();
      need_set(lhs);
      need_set(rhs);
      lhs = make(op, at, {lhs, rhs});
    }
  }

  NodePtr set_meet() {
    NodePtr lhs = primary();
    while (true) {
      skip();
      const std::size_t at = p_;
      if (!accept('^')) return lhs;
      NodePtr rhs = primary();
      need_set(lhs);
      need_set(rhs);
      lhs = make(Op::set_meet, at, {lhs, rhs});
    }
  }

  NodePtr primary() {
    skip();
    const std::size_t at = p_;
    if (p_ >= text_.size()) throw ParseError("unexpected end of expression", p_);
    const char c = text_[p_];
    if (c == '(' || c == '[') {
      if (auto iv = try_parse_interval(text_, p_)) {
        auto n = std::make_shared<ExprNode>();
        n->op = Op::interval;
        n->pos = at;
        n->interval = std::move(*iv);
        return n;
      }
      if (c == '[') throw ParseError("malformed interval", at);
      ++p_;
      NodePtr inner = implies();
      expect(')');
      return inner;
    }
    if (c == '{') {
      ++p_;
      auto n = std::make_shared<ExprNode>();
      n->pos = at;
      if (accept('}')) {
        n->op = Op::empty_set;
        return n;
      }
      n->op = Op::labels;
      do {
        std::string w = peek_word();
        if (w.empty()) throw ParseError("expected a point label", p_);
        p_ += w.size();
        n->labels.push_back(std::move(w));
      } while (accept(','));
      expect('}');
      return n;
    }
    const std::string w = peek_word();
    if (w.empty()) throw ParseError(std::string("unexpected character '") + c + "'", at);
    if (one_of(w, kKeywords) || w == "U") throw ParseError("unexpected '" + w + "'", at);
    p_ += w.size();
    if (one_of(w, kFunctions) || one_of(w, kPredicates)) {
      expect('(');
      NodePtr arg = implies();
      expect(')');
      need_set(arg);
      return make(one_of(w, kFunctions) ? Op::unary : Op::predicate, at, {arg}, w);
    }
    if (w == "X" || w == "R") return make(Op::whole, at, {}, w);
    if (is_variable_name(w)) {
      if (!one_of(w, vars)) vars.push_back(w);
      return make(Op::var, at, {}, w);
    }
    throw ParseError("unknown identifier '" + w + "'", at);
  }

  std::string_view text_;
  std::size_t p_ = 0;
};

struct RealDomain {
  using Set = IntervalSet;
  const std::map<std::string, IntervalSet>& vars;

  Set interval(const ExprNode& n) const { return IntervalSet::of(*n.interval); }
  Set labels(const ExprNode& n) const { throw ParseError("label sets need a finite space", n.pos); }
  Set empty() const { return {}; }
  Set whole(const ExprNode&) const { return IntervalSet::real_line(); }
  Set var(const ExprNode& n) const {
    auto it = vars.find(n.name);
    if (it == vars.end()) throw ParseError("unbound variable " + n.name, n.pos);
    return it->second;
  }
  Set unary(const ExprNode& n, const Set& a) const {
    if (n.name == "int") return interior_r(a);
    if (n.name == "cl") return closure_r(a);
    if (n.name == "comp") return a.complement();
    if (n.name == "sqinv") {
      try {
        return preimage_square(a);
      } catch (const UnsupportedEndpoint& e) {
        throw ParseError(e.what(), n.pos);
      }
    }
    throw ParseError(n.name + " is only defined on finite spaces", n.pos);
  }
  bool predicate(const ExprNode& n, const Set& a) const {
    if (n.name == "open") return is_open_r(a);
    if (n.name == "closed") return is_closed_r(a);
    if (n.name == "regular_open") return is_regular_open_r(a);
    if (n.name == "regular_closed") return is_regular_closed_r(a);
    if (n.name == "delta_open") return is_delta_open_r(a);
    return is_delta_closed_r(a);
  }
};

struct FiniteDomain {
  using Set = PtSet;
  const FinSpace& s;
  const std::map<std::string, PtSet>& vars;

  Set interval(const ExprNode& n) const { throw ParseError("interval literals need the real line", n.pos); }
  Set labels(const ExprNode& n) const {
    PtSet out = s.none();
    for (const auto& l : n.labels) {
      auto i = s.index_of(l);
      if (!i) throw ParseError("unknown point '" + l + "'", n.pos);
      out = out.with(*i);
    }
    return out;
  }
  Set empty() const { return s.none(); }
  Set whole(const ExprNode& n) const {
    if (n.name == "R") throw ParseError("R is the real line; use X inside a finite space", n.pos);
    return s.all();
  }
  Set var(const ExprNode& n) const {
    auto it = vars.find(n.name);
    if (it == vars.end()) throw ParseError("unbound variable " + n.name, n.pos);
    return it->second;
  }
  Set unary(const ExprNode& n, const Set& a) const {
    if (n.name == "int") return interior(s, a);
    if (n.name == "cl") return closure(s, a);
    if (n.name == "comp") return a.complement();
    if (n.name == "dcl") return delta_closure(s, a);
    throw ParseError(n.name + " needs the real line", n.pos);
  }
  bool predicate(const ExprNode& n, const Set& a) const {
    if (n.name == "open") return s.is_open(a);
    if (n.name == "closed") return s.is_closed(a);
    if (n.name == "regular_open") return is_regular_open(s, a);
    if (n.name == "regular_closed") return is_regular_closed(s, a);
    if (n.name == "delta_open") return is_delta_open(s, a);
    return is_delta_closed(s, a);
  }
};

template <class D>
std::variant<typename D::Set, bool> eval(const ExprNode& n, const D& d) {
  using Set = typename D::Set;
  auto set = [&](std::size_t i) { return std::get<Set>(eval(*n.kids[i], d)); };
  auto truth = [&](std::size_t i) { return std::get<bool>(eval(*n.kids[i], d)); };
  switch (n.op) {
    case Op::interval:
      return d.interval(n);
    case Op::labels:
      return d.labels(n);
    case Op::empty_set:
      return d.empty();
    case Op::whole:
      return d.whole(n);
    case Op::var:
      return d.var(n);
    case Op::unary:
      return d.unary(n, set(0));
    case Op::set_union:
      return set(0) | set(1);
    case Op::set_meet:
      return set(0) & set(1);
    case Op::set_minus:
      return set(0) - set(1);
    case Op::predicate:
      return d.predicate(n, set(0));
    case Op::equals:
      return set(0) == set(1);
    case Op::subset:
      return set(0).is_subset_of(set(1));
    case Op::logic_not:
      return !truth(0);
    case Op::logic_and:
      return truth(0) && truth(1);
    case Op::logic_or:
      return truth(0) || truth(1);
    case Op::logic_implies:
      return !truth(0) || truth(1);
  }
  throw ParseError("bad expression node", n.pos);
}

}  // namespace

bool Expr::is_formula() const { return root_->formula(); }

Expr parse_expr(std::string_view text) {
  Parser p(text);
  Expr e;
  e.root_ = p.parse_all();
  e.vars_ = std::move(p.vars);
  e.text_ = std::string(text);
  return e;
}

RealValue evaluate_real(const Expr& e, const std::map<std::string, IntervalSet>& vars) {
  return eval(e.root(), RealDomain{vars});
}

FiniteValue evaluate_finite(const Expr& e, const FinSpace& s, const std::map<std::string, PtSet>& vars) {
  for (const auto& [name, a] : vars) s.check_carrier(a);
  return eval(e.root(), FiniteDomain{s, vars});
}

std::string format_value(const RealValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return format_interval_set(std::get<IntervalSet>(v));
}

IntervalSet random_interval_set(std::mt19937_64& rng, std::size_t max_parts) {
  constexpr std::uint64_t kSteps = 33;  // k/4 for k in -16..16
  auto endpoint_at = [&](std::uint64_t k, bool closed) {
    return closed ? Endpoint::closed_at(Rat(static_cast<long long>(k) - 16, 4))
                  : Endpoint::open_at(Rat(static_cast<long long>(k) - 16, 4));
  };
  const std::size_t parts = static_cast<std::size_t>(rng() % (max_parts + 1));
  std::vector<Interval> raw;
  for (std::size_t i = 0; i < parts; ++i) {
    std::uint64_t a = rng() % kSteps;
    std::uint64_t b = rng() % kSteps;
    if (a > b) std::swap(a, b);
    const std::uint64_t style = rng() % 4;
    if (a == b) {
      raw.push_back(Interval{endpoint_at(a, true), endpoint_at(b, true)});
      continue;
    }
    Endpoint lo = a == 0 && style == 0 ? Endpoint::infinite() : endpoint_at(a, (style & 1U) != 0);
    Endpoint hi = b == kSteps - 1 && style == 0 ? Endpoint::infinite() : endpoint_at(b, (style & 2U) != 0);
    raw.push_back(Interval{std::move(lo), std::move(hi)});
  }
  return IntervalSet::normalize(std::move(raw));
}

SearchResult search_counterexamples(const Expr& e, const std::vector<FinSpace>& spaces, std::size_t keep) {
  if (!e.is_formula()) throw ParseError("search needs a formula, not a set expression", 0);
  const auto& names = e.variables();
  if (names.size() > 3) throw OutOfRange("search supports at most 3 variables");
  SearchResult out;
  for (const auto& s : spaces) {
    const auto subsets = all_subsets(s.size());
    std::vector<std::size_t> idx(names.size(), 0);
    while (true) {
      std::map<std::string, PtSet> vars;
      for (std::size_t i = 0; i < names.size(); ++i) vars.emplace(names[i], subsets[idx[i]]);
      ++out.instances;
      if (!std::get<bool>(evaluate_finite(e, s, vars))) {
        ++out.counterexample_count;
        if (out.examples.size() < keep) {
          Json j;
          j["space"] = space_to_json(s);
          for (const auto& name : names) j[name] = set_to_json(s, vars.at(name));
          out.examples.push_back(std::move(j));
        }
      }
      // Odometer over the assignments, last variable fastest.
      std::size_t k = names.size();
      while (k > 0 && ++idx[k - 1] == subsets.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

}  // namespace deltatop
