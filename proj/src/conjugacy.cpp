#include "garside/conjugacy.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace garside {

namespace {

void verify_witness(const Element& g, const Element& w, const Element& claimed) {
  if (!(conjugate(g, w) == claimed)) {
    throw std::logic_error("conjugacy witness failed exact verification");
  }
}

}  // namespace

std::pair<Element, Element> cycling(const Element& g) {
  if (g.len() == 0) return {g, Element::identity(g.table())};
  const StructureTable& T = *g.table();
  SimpleId twisted = T.tau_pow(g.factors()[0], -g.inf());
  Element w = Element::from_simple(g.table(), twisted);
  return {conjugate(g, w), w};
}

std::pair<Element, Element> decycling(const Element& g) {
  if (g.len() == 0) return {g, Element::identity(g.table())};
  SimpleId last = g.factors()[g.factors().size() - 1];
  Element w = inverse(Element::from_simple(g.table(), last));
  return {conjugate(g, w), w};
}

SummitData summit_invariants(const Element& g) {
  const int norm = g.table()->delta_norm();
  Element cur = g;
  Element witness = Element::identity(g.table());

  // Cycle until inf fails to strictly increase for ||Delta|| consecutive
  // steps, then decycle symmetrically for sup; repeat rounds until neither
  // phase makes progress. The round cap only guards against a broken table.
  long round_guard = 64 * (g.len() + 2) * (norm + 2);
  bool progressed = true;
  while (progressed) {
    if (--round_guard < 0) throw std::logic_error("summit iteration failed to stabilize");
    progressed = false;
    int stall = 0;
    while (cur.len() > 0 && stall < norm) {
      auto [next, w] = cycling(cur);
      if (next.inf() > cur.inf()) {
        stall = 0;
        progressed = true;
      } else {
        ++stall;
      }
      witness = multiply(witness, w);
      cur = next;
    }
    stall = 0;
    while (cur.len() > 0 && stall < norm) {
      auto [next, w] = decycling(cur);
      if (next.sup() < cur.sup()) {
        stall = 0;
        progressed = true;
      } else {
        ++stall;
      }
      witness = multiply(witness, w);
      cur = next;
    }
  }
  verify_witness(g, witness, cur);
  return {cur.inf(), cur.sup(), cur.len(), cur, witness};
}

namespace {

// Closure of the summit representative under conjugation by simples, keeping
// only elements at summit inf/sup. Witnesses map each member v to w with
// w^-1 g w = v.
std::map<Element, Element> summit_closure(const Element& g, const SummitData& summit,
                                          std::size_t cap) {
  const TablePtr& table = g.table();
  std::map<Element, Element> seen;
  std::queue<Element> todo;
  seen.emplace(summit.representative, summit.conjugator);
  todo.push(summit.representative);
  while (!todo.empty()) {
    Element v = todo.front();
    todo.pop();
    Element v_witness = seen.at(v);
    for (std::size_t s = 1; s < table->simple_count(); ++s) {
      Element w = Element::from_simple(table, static_cast<SimpleId>(s));
      Element h = conjugate(v, w);
      if (h.inf() != summit.infs || h.sup() != summit.sups) continue;
      if (seen.count(h)) continue;
      if (seen.size() >= cap) {
        throw std::length_error("super summit closure exceeded the cap of " +
                                std::to_string(cap));
      }
      seen.emplace(h, multiply(v_witness, w));
      todo.push(h);
    }
  }
  return seen;
}

}  // namespace

std::vector<Element> super_summit_set(const Element& g, std::size_t cap) {
  SummitData summit = summit_invariants(g);
  auto closure = summit_closure(g, summit, cap);
  std::vector<Element> out;
  out.reserve(closure.size());
  for (const auto& [v, w] : closure) out.push_back(v);  // map order is canonical
  return out;
}

std::optional<Element> is_conjugate(const Element& g, const Element& h, std::size_t cap) {
  if (g.table() != h.table()) {
    throw std::invalid_argument("is_conjugate requires elements over the same table");
  }
  SummitData sg = summit_invariants(g);
  SummitData sh = summit_invariants(h);
  if (sg.infs != sh.infs || sg.sups != sh.sups) return std::nullopt;
  auto closure = summit_closure(g, sg, cap);
  auto it = closure.find(sh.representative);
  if (it == closure.end()) return std::nullopt;
  // w^-1 g w = rep_h and c_h^-1 h c_h = rep_h, so (w c_h^-1) conjugates g to h.
  Element w = multiply(it->second, inverse(sh.conjugator));
  verify_witness(g, w, h);
  return w;
}

std::optional<std::pair<std::int64_t, Element>> conjugate_to_delta_power(const Element& g) {
  SummitData summit = summit_invariants(g);
  if (summit.lens != 0) return std::nullopt;
  return std::make_pair(summit.infs, summit.conjugator);
}

}  // namespace garside
