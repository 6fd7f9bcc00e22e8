#pragma once

#include "garside/element.hpp"
#include "garside/structure.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

// Equality of positive words decided purely from the defining relations of a
// presentation (no Garside machinery): bidirectional search over single
// relation applications. Used to verify frozen normal-form expectations.
struct RewriteSystem {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;

  std::vector<std::vector<int>> neighbours(const std::vector<int>& w) const;
  bool equal(const std::vector<int>& u, const std::vector<int>& v,
             std::size_t cap = 500000) const;
};

RewriteSystem braid_relations(int n);          // letters 0..n-2 are s1..s(n-1)
RewriteSystem torus_relations(int a, int b);   // letters 0 = x, 1 = y
RewriteSystem abelian_relations(int ell);      // letters 0..ell-1

// Unfiltered-by-summit conjugation closure: all conjugates of g reachable by
// simple conjugations without leaving the window inf >= inf(g),
// sup <= sup(g). The extreme values reached equal infs(g) and sups(g).
struct ClosureSummit {
  std::int64_t max_inf;
  std::int64_t min_sup;
  std::size_t states;
};
ClosureSummit summit_by_closure(const garside::Element& g, std::size_t cap = 400000);

garside::Word random_word(const garside::StructureTable& t, std::mt19937_64& rng, int length,
                          bool allow_inverse);
garside::Element random_element(const garside::TablePtr& t, std::mt19937_64& rng,
                                int word_length, bool allow_inverse);

}  // namespace oracle
