#include "garside/quotient.hpp"

#include "garside/conjugacy.hpp"
#include "garside/periodicity.hpp"
#include "garside/rational.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace garside {

Element coset_normalize(const Element& g) {
  const std::int64_t m = g.table()->central_exponent();
  const std::int64_t shift = floor_div(g.inf(), m) * m;
  if (shift == 0) return g;
  return multiply(Element::delta_power(g.table(), -shift), g);
}

bool coset_equal(const Element& g, const Element& h) {
  return coset_normalize(g) == coset_normalize(h);
}

bool in_central_delta_subgroup(const Element& g) {
  return g.len() == 0 && g.inf() % g.table()->central_exponent() == 0;
}

std::optional<std::int64_t> quotient_order(const Element& g) {
  if (!is_periodic(g)) return std::nullopt;
  auto cls = periodicity_class(g);
  const std::int64_t m = g.table()->central_exponent();
  const std::int64_t p = cls->p < 0 ? -cls->p : cls->p;
  const std::int64_t j = cls->q * m / std::gcd(p, m);
  // re-verify minimality by direct power checks
  Element pw = Element::identity(g.table());
  for (std::int64_t i = 1; i < j; ++i) {
    pw = multiply(pw, g);
    if (in_central_delta_subgroup(pw)) {
      throw std::logic_error("quotient_order: formula exceeds the true order");
    }
  }
  pw = multiply(pw, g);
  if (!in_central_delta_subgroup(pw)) {
    throw std::logic_error("quotient_order: g^j is not a central Delta power");
  }
  return j;
}

std::vector<TypeIGenerator> enumerate_type_i(const TablePtr& table) {
  const std::int64_t m = table->central_exponent();
  const int norm = table->delta_norm();
  const SimpleId delta = table->delta();
  std::vector<TypeIGenerator> out;

  for (std::int64_t u = 0; u < m; ++u) {
    Element e = Element::delta_power(table, u);
    out.push_back({u, kIdentity, std::nullopt, e, *quotient_order(e)});
  }
  for (std::int64_t u = 0; u < m; ++u) {
    for (SimpleId a = 1; static_cast<std::size_t>(a) < table->simple_count(); ++a) {
      if (a == delta) continue;
      for (int q = 2; q <= norm; ++q) {
        std::vector<SimpleId> fs;
        fs.reserve(static_cast<std::size_t>(q));
        for (int i = q - 1; i >= 0; --i) fs.push_back(table->tau_pow(a, i * u));
        Element prod = Element::normalized(table, 0, std::move(fs));
        if (!(prod == Element::delta_power(table, 1))) continue;
        Element e = multiply(Element::delta_power(table, u), Element::from_simple(table, a));
        if (!(power(e, q) == Element::delta_power(table, u * q + 1))) {
          throw std::logic_error("enumerate_type_i: power identity failed");
        }
        out.push_back({u, a, q, e, *quotient_order(e)});
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> group_by_conjugacy(
    const std::vector<TypeIGenerator>& generators) {
  const std::size_t n = generators.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };

  std::vector<Rational> infs;
  infs.reserve(n);
  for (const auto& gen : generators) infs.push_back(translation_numbers(gen.element).t_inf);

  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t m = generators[i].element.table()->central_exponent();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      // conjugacy in G_Delta: e_i ~ e_j * Delta^(m t); INF pins the only t
      Rational diff = infs[i] - infs[j];
      if (diff.denominator() != 1 || diff.numerator() % m != 0) continue;
      Element shifted = multiply(generators[j].element,
                                 Element::delta_power(generators[j].element.table(),
                                                      diff.numerator()));
      if (is_conjugate(generators[i].element, shifted)) parent[find(j)] = find(i);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) classes[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

bool inf_additivity_check(const Element& g, const Element& h) {
  if (!(multiply(g, h) == multiply(h, g))) {
    throw std::domain_error("inf_additivity_check: inputs do not commute");
  }
  if (!is_periodic(g) || !is_periodic(h)) {
    throw std::domain_error("inf_additivity_check: inputs must be periodic");
  }
  Rational lhs = translation_numbers(multiply(g, h)).t_inf;
  Rational rhs = translation_numbers(g).t_inf + translation_numbers(h).t_inf;
  return lhs == rhs;
}

std::pair<Element, std::int64_t> certify_cyclic(const std::vector<Element>& generators,
                                                std::size_t cap) {
  if (generators.empty()) {
    throw std::invalid_argument("certify_cyclic needs at least one generator");
  }
  const TablePtr& table = generators.front().table();
  for (const Element& g : generators) {
    if (g.table() != table) {
      throw std::invalid_argument("certify_cyclic: generators over different tables");
    }
    if (!is_periodic(g)) {
      throw std::domain_error("certify_cyclic: generator is not periodic");
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!(multiply(generators[i], generators[j]) == multiply(generators[j], generators[i]))) {
        throw std::domain_error("certify_cyclic: generators do not commute");
      }
    }
  }

  // abelian closure of the images under right multiplication by generators
  std::set<Element> subgroup;
  std::queue<Element> todo;
  Element one = coset_normalize(Element::identity(table));
  subgroup.insert(one);
  todo.push(one);
  while (!todo.empty()) {
    Element cur = todo.front();
    todo.pop();
    for (const Element& g : generators) {
      Element next = coset_normalize(multiply(cur, g));
      if (subgroup.count(next)) continue;
      if (subgroup.size() >= cap) {
        throw std::length_error("certify_cyclic: closure exceeded the cap of " +
                                std::to_string(cap));
      }
      subgroup.insert(next);
      todo.push(next);
    }
  }

  const std::int64_t size = static_cast<std::int64_t>(subgroup.size());
  for (const Element& e : subgroup) {
    std::int64_t ord = 0;
    Element pw = Element::identity(table);
    for (std::int64_t j = 1; j <= size; ++j) {
      pw = multiply(pw, e);
      if (in_central_delta_subgroup(pw)) {
        ord = j;
        break;
      }
    }
    if (ord == size) return {e, size};
  }
  throw std::logic_error(
      "certify_cyclic: no element generates the subgroup; the closure or order computation "
      "is inconsistent");
}

}  // namespace garside
