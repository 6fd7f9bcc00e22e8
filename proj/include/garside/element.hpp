#pragma once

#include "garside/structure.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace garside {

/// One letter of an input word: an atom with exponent +1 or -1. General
/// exponents and the Delta token are parser-level sugar (see io.hpp).
struct Letter {
  SimpleId atom;
  int sign;  // +1 or -1
};

using Word = std::vector<Letter>;

/// A group element in left normal form Delta^p s_1 ... s_l over a validated
/// table. Every factor is a simple distinct from the identity and Delta, and
/// each adjacent pair is left-weighted: d(s_i) /\ s_{i+1} = 1. Elements are
/// immutable values; all arithmetic goes through the free functions below.
class Element {
 public:
  static Element identity(TablePtr table);
  static Element delta_power(TablePtr table, std::int64_t k);
  static Element from_simple(TablePtr table, SimpleId s);
  /// Normalizes Delta^delta_pow * f_1 ... f_k into left normal form. The
  /// factors may be arbitrary simples (including 1 and Delta).
  static Element normalized(TablePtr table, std::int64_t delta_pow,
                            std::vector<SimpleId> factors);

  const TablePtr& table() const { return table_; }
  std::int64_t inf() const { return inf_; }
  std::int64_t sup() const { return inf_ + static_cast<std::int64_t>(factors_.size()); }
  std::int64_t len() const { return static_cast<std::int64_t>(factors_.size()); }
  std::span<const SimpleId> factors() const { return factors_; }

  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  bool is_positive() const { return inf_ >= 0; }

  /// Structural comparison; both operands must live over the same table.
  bool operator==(const Element& other) const;
  std::strong_ordering operator<=>(const Element& other) const;

 private:
  Element(TablePtr table, std::int64_t inf, std::vector<SimpleId> factors)
      : table_(std::move(table)), inf_(inf), factors_(std::move(factors)) {}

  TablePtr table_;
  std::int64_t inf_;
  std::vector<SimpleId> factors_;
};

/// Left normal form of the group element spelled by `w` (letters are atoms).
Element from_word(const TablePtr& table, const Word& w);

Element multiply(const Element& g, const Element& h);
Element inverse(const Element& g);
/// Repeated-squaring power; n may be negative or zero.
Element power(const Element& g, std::int64_t n);
/// tau^k(g) = Delta^-k g Delta^k.
Element tau_on(const Element& g, std::int64_t k);
/// w^-1 g w.
Element conjugate(const Element& g, const Element& w);

struct InfSupLen {
  std::int64_t inf, sup, len;
};
InfSupLen invariants_inf_sup_len(const Element& g);

/// True when every adjacent factor pair satisfies d(s_i) /\ s_{i+1} = 1.
bool is_left_weighted(const Element& g);

/// Simple left and right divisors of a positive element, computed exactly.
struct DivisorSets {
  std::vector<SimpleId> left, right;
};
DivisorSets divisor_sets(const Element& g);  // requires g positive

}  // namespace garside
