#include "garside/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace garside {

namespace {

void require_same_table(const Element& g, const Element& h) {
  if (g.table() != h.table()) {
    throw std::invalid_argument("elements live over different structure tables");
  }
}

// Normalizes a positive factor sequence in place: strips identities, pulls
// Delta factors to the front (twisting what they pass by tau) and sweeps the
// local left-weighting move s' = s*(d(s) /\ t), t' = (d(s) /\ t) \ t until
// every adjacent pair is left-weighted. Returns the number of Deltas pulled
// out. Quadratic in the canonical length.
std::int64_t normalize_factors(const StructureTable& T, std::vector<SimpleId>& f) {
  std::int64_t deltas = 0;
  const SimpleId delta = T.delta();
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t w = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == kIdentity) continue;
      if (f[i] == delta) {
        ++deltas;
        for (std::size_t j = 0; j < w; ++j) f[j] = T.tau(f[j]);
        continue;
      }
      f[w++] = f[i];
    }
    f.resize(w);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      SimpleId s = f[i];
      SimpleId t = f[i + 1];
      SimpleId u = T.meet(T.complement(s), t);
      if (u != kIdentity) {
        f[i] = T.product(s, u);  // u <= d(s), so s*u is simple
        f[i + 1] = T.left_quotient(u, t);
        changed = true;
      }
    }
  }
  return deltas;
}

}  // namespace

Element Element::identity(TablePtr table) { return Element(std::move(table), 0, {}); }

Element Element::delta_power(TablePtr table, std::int64_t k) {
  return Element(std::move(table), k, {});
}

Element Element::from_simple(TablePtr table, SimpleId s) {
  if (s < 0 || static_cast<std::size_t>(s) >= table->simple_count()) {
    throw std::invalid_argument("simple index out of range");
  }
  if (s == kIdentity) return identity(std::move(table));
  if (s == table->delta()) return delta_power(std::move(table), 1);
  return Element(std::move(table), 0, {s});
}

Element Element::normalized(TablePtr table, std::int64_t delta_pow,
                            std::vector<SimpleId> factors) {
  for (SimpleId s : factors) {
    if (s < 0 || static_cast<std::size_t>(s) >= table->simple_count()) {
      throw std::invalid_argument("factor index out of range");
    }
  }
  std::int64_t extra = normalize_factors(*table, factors);
  return Element(std::move(table), delta_pow + extra, std::move(factors));
}

bool Element::operator==(const Element& other) const {
  require_same_table(*this, other);
  return inf_ == other.inf_ && factors_ == other.factors_;
}

std::strong_ordering Element::operator<=>(const Element& other) const {
  require_same_table(*this, other);
  if (auto c = inf_ <=> other.inf_; c != 0) return c;
  return std::lexicographical_compare_three_way(factors_.begin(), factors_.end(),
                                                other.factors_.begin(), other.factors_.end());
}

Element from_word(const TablePtr& table, const Word& w) {
  Element acc = Element::identity(table);
  for (const Letter& letter : w) {
    if (letter.atom < 0 || static_cast<std::size_t>(letter.atom) >= table->simple_count() ||
        !table->is_atom(letter.atom)) {
      throw std::invalid_argument("word letter is not an atom of the table");
    }
    Element s = Element::from_simple(table, letter.atom);
    acc = multiply(acc, letter.sign >= 0 ? s : inverse(s));
  }
  return acc;
}

Element multiply(const Element& g, const Element& h) {
  require_same_table(g, h);
  const StructureTable& T = *g.table();
  std::vector<SimpleId> f;
  f.reserve(static_cast<std::size_t>(g.len() + h.len()));
  for (SimpleId s : g.factors()) f.push_back(T.tau_pow(s, h.inf()));
  for (SimpleId s : h.factors()) f.push_back(s);
  return Element::normalized(g.table(), g.inf() + h.inf(), std::move(f));
}

Element inverse(const Element& g) {
  const StructureTable& T = *g.table();
  const std::int64_t p = g.inf();
  const std::int64_t l = g.len();
  std::vector<SimpleId> f;
  f.reserve(static_cast<std::size_t>(l));
  // (Delta^p s_1..s_l)^-1 = Delta^(-p-l) * tau^(-p-l)(d(s_l)) ... tau^(-p-1)(d(s_1))
  for (std::int64_t j = 1; j <= l; ++j) {
    SimpleId s = g.factors()[static_cast<std::size_t>(l - j)];
    f.push_back(T.tau_pow(T.complement(s), -p - l + j - 1));
  }
  return Element::normalized(g.table(), -p - l, std::move(f));
}

Element power(const Element& g, std::int64_t n) {
  if (n == 0) return Element::identity(g.table());
  Element base = n < 0 ? inverse(g) : g;
  std::uint64_t e = static_cast<std::uint64_t>(n < 0 ? -n : n);
  Element acc = Element::identity(g.table());
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return acc;
}

Element tau_on(const Element& g, std::int64_t k) {
  const StructureTable& T = *g.table();
  std::vector<SimpleId> f(g.factors().begin(), g.factors().end());
  for (SimpleId& s : f) s = T.tau_pow(s, k);
  return Element::normalized(g.table(), g.inf(), std::move(f));
}

Element conjugate(const Element& g, const Element& w) {
  return multiply(multiply(inverse(w), g), w);
}

InfSupLen invariants_inf_sup_len(const Element& g) { return {g.inf(), g.sup(), g.len()}; }

bool is_left_weighted(const Element& g) {
  const StructureTable& T = *g.table();
  for (SimpleId s : g.factors()) {
    if (s == kIdentity || s == T.delta()) return false;
  }
  for (std::size_t i = 0; i + 1 < g.factors().size(); ++i) {
    if (T.meet(T.complement(g.factors()[i]), g.factors()[i + 1]) != kIdentity) return false;
  }
  return true;
}

DivisorSets divisor_sets(const Element& g) {
  if (!g.is_positive()) {
    throw std::domain_error("divisor_sets requires a positive element");
  }
  const TablePtr& table = g.table();
  DivisorSets out;
  for (std::size_t s = 0; s < table->simple_count(); ++s) {
    Element simple = Element::from_simple(table, static_cast<SimpleId>(s));
    if (multiply(inverse(simple), g).is_positive()) out.left.push_back(static_cast<SimpleId>(s));
    if (multiply(g, inverse(simple)).is_positive()) out.right.push_back(static_cast<SimpleId>(s));
  }
  return out;
}

}  // namespace garside
