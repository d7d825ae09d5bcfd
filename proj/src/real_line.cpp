#include "deltatop/real_line.hpp"

#include <algorithm>
#include <cctype>

namespace deltatop {

namespace {

using boost::multiprecision::cpp_int;

// Lower bounds: -inf first, then by value, closed before open.
bool lower_less(const Endpoint& a, const Endpoint& b) {
  if (!a.finite() || !b.finite()) return !a.finite() && b.finite();
  if (*a.value != *b.value) return *a.value < *b.value;
  return a.closed && !b.closed;
}

// Upper bounds: by value, open before closed, +inf last.
bool upper_less(const Endpoint& a, const Endpoint& b) {
  if (!a.finite() || !b.finite()) return a.finite() && !b.finite();
  if (*a.value != *b.value) return *a.value < *b.value;
  return !a.closed && b.closed;
}

// An upper end followed by a lower end leave no gap between them.
bool touches(const Endpoint& hi, const Endpoint& lo) {
  if (!hi.finite() || !lo.finite()) return true;
  if (*lo.value != *hi.value) return *lo.value < *hi.value;
  return hi.closed || lo.closed;
}

void validate(const Interval& i) {
  if (!i.lo.finite() && i.lo.closed) throw MalformedInput("-inf cannot be a closed end");
  if (!i.hi.finite() && i.hi.closed) throw MalformedInput("+inf cannot be a closed end");
  if (i.lo.finite() && i.hi.finite()) {
    if (*i.lo.value > *i.hi.value) throw MalformedInput("interval lower bound exceeds upper bound");
    if (*i.lo.value == *i.hi.value && !(i.lo.closed && i.hi.closed)) {
      throw MalformedInput("interval with equal bounds must be closed on both sides");
    }
  }
}

// Nonempty interval from a lower and an upper end, if they enclose anything.
std::optional<Interval> make_if_nonempty(Endpoint lo, Endpoint hi) {
  if (lo.finite() && hi.finite()) {
    if (*lo.value > *hi.value) return std::nullopt;
    if (*lo.value == *hi.value && !(lo.closed && hi.closed)) return std::nullopt;
  }
  return Interval{std::move(lo), std::move(hi)};
}

Endpoint flip(const Endpoint& e) { return {e.value, e.finite() && !e.closed}; }

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  const cpp_int sn = boost::multiprecision::sqrt(num);
  const cpp_int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn, sd);
}

void skip_ws(std::string_view t, std::size_t& pos) {
  while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
}

// Reads a number or +-inf. Returns nullopt (pos untouched) if none is present.
struct NumberToken {
  std::optional<Rat> value;  // nullopt for infinities
  bool negative = false;
};

std::optional<NumberToken> read_number(std::string_view t, std::size_t& pos) {
  std::size_t p = pos;
  skip_ws(t, p);
  const std::size_t start = p;
  NumberToken tok;
  if (p < t.size() && (t[p] == '-' || t[p] == '+')) {
    tok.negative = t[p] == '-';
    ++p;
  }
  if (t.substr(p, 3) == "inf") {
    p += 3;
    pos = p;
    return tok;
  }
  std::size_t q = p;
  while (q < t.size() && (std::isdigit(static_cast<unsigned char>(t[q])) || t[q] == '/' || t[q] == '.')) ++q;
  if (q == p) return std::nullopt;
  try {
    Rat v = parse_rat(t.substr(start, q - start));
    tok.value = std::move(v);
  } catch (const ParseError& e) {
    throw ParseError("malformed number", start + e.position());
  }
  pos = q;
  return tok;
}

}  // namespace

bool Interval::contains(const Rat& x) const {
  if (lo.finite() && (x < *lo.value || (x == *lo.value && !lo.closed))) return false;
  if (hi.finite() && (x > *hi.value || (x == *hi.value && !hi.closed))) return false;
  return true;
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  for (const auto& i : raw) validate(i);
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return lower_less(a.lo, b.lo);
    return upper_less(a.hi, b.hi);
  });
  IntervalSet out;
  for (auto& i : raw) {
    if (!out.parts_.empty() && touches(out.parts_.back().hi, i.lo)) {
      auto& cur = out.parts_.back();
      if (upper_less(cur.hi, i.hi)) cur.hi = std::move(i.hi);
    } else {
      out.parts_.push_back(std::move(i));
    }
  }
  return out;
}

IntervalSet IntervalSet::real_line() {
  IntervalSet r;
  r.parts_.push_back(Interval{Endpoint::infinite(), Endpoint::infinite()});
  return r;
}

bool IntervalSet::contains(const Rat& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out;
  Endpoint cursor = Endpoint::infinite();  // lower end of the next gap; starts at -inf
  for (const auto& c : parts_) {
    if (c.lo.finite()) {
      if (auto gap = make_if_nonempty(cursor, flip(c.lo))) out.parts_.push_back(std::move(*gap));
    }
    if (!c.hi.finite()) return out;
    cursor = flip(c.hi);
  }
  if (auto gap = make_if_nonempty(cursor, Endpoint::infinite())) out.parts_.push_back(std::move(*gap));
  return out;
}

bool IntervalSet::is_subset_of(const IntervalSet& o) const { return (*this - o).empty(); }

IntervalSet operator|(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.parts_;
  all.insert(all.end(), b.parts_.begin(), b.parts_.end());
  return IntervalSet::normalize(std::move(all));
}

IntervalSet operator&(const IntervalSet& a, const IntervalSet& b) {
  return (a.complement() | b.complement()).complement();
}

IntervalSet operator-(const IntervalSet& a, const IntervalSet& b) { return a & b.complement(); }

IntervalSet closure_r(const IntervalSet& a) {
  std::vector<Interval> parts;
  for (auto c : a.components()) {
    c.lo.closed = c.lo.finite();
    c.hi.closed = c.hi.finite();
    parts.push_back(std::move(c));
  }
  return IntervalSet::normalize(std::move(parts));
}

IntervalSet interior_r(const IntervalSet& a) {
  std::vector<Interval> parts;
  for (auto c : a.components()) {
    if (c.degenerate()) continue;
    c.lo.closed = false;
    c.hi.closed = false;
    parts.push_back(std::move(c));
  }
  return IntervalSet::normalize(std::move(parts));
}

bool is_open_r(const IntervalSet& a) { return interior_r(a) == a; }
bool is_closed_r(const IntervalSet& a) { return closure_r(a) == a; }
bool is_regular_open_r(const IntervalSet& a) { return interior_r(closure_r(a)) == a; }
bool is_regular_closed_r(const IntervalSet& a) { return closure_r(interior_r(a)) == a; }

bool is_delta_open_r(const IntervalSet& a) {
  if (!is_open_r(a)) return false;
  return std::all_of(a.components().begin(), a.components().end(), [&](const Interval& c) {
    const IntervalSet witness = interior_r(closure_r(IntervalSet::of(c)));
    return is_regular_open_r(witness) && IntervalSet::of(c).is_subset_of(witness) && witness.is_subset_of(a);
  });
}

bool is_delta_closed_r(const IntervalSet& a) { return is_delta_open_r(a.complement()); }

IntervalSet relative_closure(const IntervalSet& a, const IntervalSet& y) { return closure_r(a & y) & y; }

IntervalSet relative_interior(const IntervalSet& a, const IntervalSet& y) {
  return y - relative_closure(y - a, y);
}

IntervalSet relative_int_cl(const IntervalSet& v, const IntervalSet& y) {
  return relative_interior(relative_closure(v & y, y), y);
}

bool is_regular_open_in(const IntervalSet& v, const IntervalSet& y) { return relative_int_cl(v, y) == (v & y); }

IntervalSet preimage_square(const IntervalSet& a) {
  const IntervalSet nonneg = a & IntervalSet::of(Interval{Endpoint::closed_at(0), Endpoint::infinite()});
  auto root = [](const Endpoint& e) -> Endpoint {
    if (!e.finite()) return e;
    auto r = exact_sqrt(*e.value);
    if (!r) throw UnsupportedEndpoint("endpoint " + format_rat(*e.value) + " has no rational square root");
    return {std::move(*r), e.closed};
  };
  auto negate = [](const Endpoint& e) -> Endpoint {
    if (!e.finite()) return e;
    return {-*e.value, e.closed};
  };
  std::vector<Interval> parts;
  for (const auto& c : nonneg.components()) {
    Endpoint lo = root(c.lo);
    Endpoint hi = root(c.hi);
    parts.push_back(Interval{negate(hi), negate(lo)});
    parts.push_back(Interval{std::move(lo), std::move(hi)});
  }
  return IntervalSet::normalize(std::move(parts));
}

std::string format_rat(const Rat& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_interval_set(const IntervalSet& a) {
  if (a.empty()) return "{}";
  std::string out;
  for (const auto& c : a.components()) {
    if (!out.empty()) out += "U";
    out += c.lo.closed ? "[" : "(";
    out += c.lo.finite() ? format_rat(*c.lo.value) : "-inf";
    out += ",";
    out += c.hi.finite() ? format_rat(*c.hi.value) : "+inf";
    out += c.hi.closed ? "]" : ")";
  }
  return out;
}

Rat parse_rat(std::string_view text) {
  std::size_t p = 0;
  bool negative = false;
  if (p < text.size() && (text[p] == '-' || text[p] == '+')) {
    negative = text[p] == '-';
    ++p;
  }
  auto digits = [&](std::size_t& q) {
    const std::size_t s = q;
    while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
    if (q == s) throw ParseError("expected digits", q);
    return cpp_int(std::string(text.substr(s, q - s)));
  };
  cpp_int whole = digits(p);
  Rat value(whole);
  if (p < text.size() && text[p] == '/') {
    ++p;
    const cpp_int den = digits(p);
    if (den == 0) throw ParseError("zero denominator", p - 1);
    value = Rat(whole, den);
  } else if (p < text.size() && text[p] == '.') {
    ++p;
    const std::size_t s = p;
    const cpp_int frac = digits(p);
    cpp_int scale = 1;
    for (std::size_t i = s; i < p; ++i) scale *= 10;
    value = Rat(whole * scale + frac, scale);
  }
  if (p != text.size()) throw ParseError("unexpected character in number", p);
  return negative ? Rat(-value) : value;
}

std::optional<Interval> try_parse_interval(std::string_view text, std::size_t& pos) {
  std::size_t p = pos;
  skip_ws(text, p);
  if (p >= text.size() || (text[p] != '(' && text[p] != '[')) return std::nullopt;
  const std::size_t open_pos = p;
  const bool lo_closed = text[p] == '[';
  ++p;
  auto lo = read_number(text, p);
  if (!lo) return std::nullopt;
  skip_ws(text, p);
  if (p >= text.size() || text[p] != ',') return std::nullopt;
  ++p;
  auto hi = read_number(text, p);
  if (!hi) throw ParseError("expected upper bound", p);
  skip_ws(text, p);
  if (p >= text.size() || (text[p] != ')' && text[p] != ']')) throw ParseError("expected ')' or ']'", p);
  const bool hi_closed = text[p] == ']';
  ++p;

  if (!lo->value && !lo->negative) throw ParseError("lower bound cannot be +inf", open_pos + 1);
  if (!hi->value && hi->negative) throw ParseError("upper bound cannot be -inf", p - 1);
  Interval iv{Endpoint{lo->value, lo_closed}, Endpoint{hi->value, hi_closed}};
  try {
    validate(iv);
  } catch (const MalformedInput& e) {
    throw ParseError(e.what(), open_pos);
  }
  pos = p;
  return iv;
}

IntervalSet parse_interval_set(std::string_view text) {
  std::size_t p = 0;
  skip_ws(text, p);
  if (text.substr(p, 2) == "{}") {
    p += 2;
    skip_ws(text, p);
    if (p != text.size()) throw ParseError("trailing input", p);
    return {};
  }
  std::vector<Interval> parts;
  while (true) {
    auto iv = try_parse_interval(text, p);
    if (!iv) throw ParseError("expected interval", p);
    parts.push_back(std::move(*iv));
    skip_ws(text, p);
    if (p == text.size()) break;
    if (text[p] != 'U') throw ParseError("expected 'U' between intervals", p);
    ++p;
  }
  return IntervalSet::normalize(std::move(parts));
}

}  // namespace deltatop
