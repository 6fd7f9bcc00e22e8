#include "garside/structure.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace garside {

namespace {

constexpr std::size_t kMaxViolations = 64;

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '=' || c == '^' || c == ':') {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (pass) {
    os << "pass: " << simple_count << " simples, " << atom_count << " atoms, |Delta| = "
       << delta_norm << ", tau order " << tau_order;
  } else {
    os << "fail: " << violations.size() << " violation(s)";
    if (!violations.empty()) os << "; first: " << violations.front().what;
  }
  return os.str();
}

// Runs every check and builds the derived tables. Checks that depend on a
// broken prerequisite are skipped, so the report stays meaningful for badly
// malformed input.
struct TableBuilder {
  const StructureData& data;
  ValidationReport rep;
  std::size_t n = 0;
  bool usable = true;  // indices in range, product table of the right size

  std::vector<boost::dynamic_bitset<>> ldiv, rdiv, lmul;
  std::vector<std::vector<SimpleId>> row_defined, col_defined;
  std::vector<SimpleId> meet, lquot, complement, tau;
  std::vector<char> is_atom;
  std::vector<int> weight;
  std::vector<SimpleId> delta_word;
  int tau_order = 1;
  int delta_norm = 0;

  explicit TableBuilder(const StructureData& d) : data(d) {}

  void add(Violation::Kind kind, std::string what) {
    if (rep.violations.size() < kMaxViolations) {
      rep.violations.push_back({kind, std::move(what)});
    } else if (rep.violations.size() == kMaxViolations) {
      rep.violations.push_back({kind, "further violations suppressed"});
    }
  }

  const std::string& nm(SimpleId s) const { return data.names[static_cast<std::size_t>(s)]; }

  void run() {
    check_shape();
    if (!usable) {
      rep.pass = false;
      return;
    }
    build_divisibility();
    check_identity_and_units();
    check_cancellativity();
    check_associativity();
    check_atom_generation();  // fills weight, delta_norm, detects cycles
    check_atomicity();
    check_delta_divisors();   // fills complement
    if (complement_ok()) {
      build_tau();
      check_tau_compatibility();
    }
    build_meets_and_check_lattices();
    if (complement_ok()) check_tau_meet_compatibility();
    build_left_quotients();
    build_delta_word();
    rep.simple_count = n;
    rep.atom_count = data.atoms.size();
    rep.delta_norm = delta_norm;
    rep.tau_order = tau_order;
    rep.notes.push_back(
        "summit computations assume the standard cycling stabilization bound and "
        "simple-conjugation convexity; custom tables exercise these only through the "
        "test oracles");
    rep.pass = rep.violations.empty();
  }

  bool complement_ok() const {
    return !complement.empty() &&
           std::none_of(complement.begin(), complement.end(),
                        [](SimpleId c) { return c == kNoProduct; });
  }

  void check_shape() {
    n = data.count();
    if (n < 2) {
      add(Violation::Kind::Malformed, "table needs at least the identity and Delta");
      usable = false;
      return;
    }
    if (n > kMaxSimples) {
      add(Violation::Kind::Malformed,
          "too many simples (" + std::to_string(n) + " > " + std::to_string(kMaxSimples) + ")");
      usable = false;
      return;
    }
    if (data.names[0] != "1") {
      add(Violation::Kind::Malformed, "simple 0 must be named \"1\"");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!valid_name(data.names[i])) {
        add(Violation::Kind::Malformed, "invalid simple name at index " + std::to_string(i));
      } else if (!seen.insert(data.names[i]).second) {
        add(Violation::Kind::Malformed, "duplicate simple name \"" + data.names[i] + "\"");
      }
    }
    if (data.delta <= 0 || static_cast<std::size_t>(data.delta) >= n) {
      add(Violation::Kind::Malformed, "delta index out of range or equal to the identity");
      usable = false;
    }
    if (data.atoms.empty()) {
      add(Violation::Kind::Malformed, "empty atom list");
      usable = false;
    }
    std::set<SimpleId> atom_seen;
    for (SimpleId a : data.atoms) {
      if (a <= 0 || static_cast<std::size_t>(a) >= n) {
        add(Violation::Kind::Malformed, "atom index out of range");
        usable = false;
      } else if (!atom_seen.insert(a).second) {
        add(Violation::Kind::Malformed, "duplicate atom " + nm(a));
      }
    }
    if (data.product.size() != n * n) {
      add(Violation::Kind::Malformed, "product table has wrong size");
      usable = false;
      return;
    }
    for (SimpleId v : data.product) {
      if (v != kNoProduct && (v < 0 || static_cast<std::size_t>(v) >= n)) {
        add(Violation::Kind::Malformed, "product cell references a dangling index");
        usable = false;
        return;
      }
    }
  }

  void build_divisibility() {
    ldiv.assign(n, boost::dynamic_bitset<>(n));
    rdiv.assign(n, boost::dynamic_bitset<>(n));
    row_defined.assign(n, {});
    col_defined.assign(n, {});
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        SimpleId v = data.cell(static_cast<SimpleId>(s), static_cast<SimpleId>(t));
        if (v == kNoProduct) continue;
        ldiv[static_cast<std::size_t>(v)].set(s);
        rdiv[static_cast<std::size_t>(v)].set(t);
        row_defined[s].push_back(static_cast<SimpleId>(t));
        col_defined[t].push_back(static_cast<SimpleId>(s));
      }
    }
    lmul.assign(n, boost::dynamic_bitset<>(n));
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a = ldiv[b].find_first(); a != boost::dynamic_bitset<>::npos;
           a = ldiv[b].find_next(a)) {
        lmul[a].set(b);
      }
    }
  }

  void check_identity_and_units() {
    for (std::size_t s = 0; s < n; ++s) {
      if (data.cell(kIdentity, static_cast<SimpleId>(s)) != static_cast<SimpleId>(s)) {
        add(Violation::Kind::Malformed, "identity row: 1*" + nm(static_cast<SimpleId>(s)) +
                                            " must be " + nm(static_cast<SimpleId>(s)));
      }
      if (data.cell(static_cast<SimpleId>(s), kIdentity) != static_cast<SimpleId>(s)) {
        add(Violation::Kind::Malformed, "identity column: " + nm(static_cast<SimpleId>(s)) +
                                            "*1 must be " + nm(static_cast<SimpleId>(s)));
      }
    }
    for (std::size_t s = 0; s < n; ++s) {
      for (SimpleId t : row_defined[s]) {
        if (data.cell(static_cast<SimpleId>(s), t) == kIdentity && (s != 0 || t != 0)) {
          add(Violation::Kind::Axiom, "nontrivial unit: " + nm(static_cast<SimpleId>(s)) + "*" +
                                          nm(t) + " = 1");
        }
      }
    }
  }

  void check_cancellativity() {
    std::vector<SimpleId> seen(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::fill(seen.begin(), seen.end(), kNoProduct);
      for (SimpleId t : row_defined[s]) {
        SimpleId v = data.cell(static_cast<SimpleId>(s), t);
        if (seen[static_cast<std::size_t>(v)] != kNoProduct) {
          add(Violation::Kind::Axiom,
              "left cancellativity fails: " + nm(static_cast<SimpleId>(s)) + "*" +
                  nm(seen[static_cast<std::size_t>(v)]) + " = " + nm(static_cast<SimpleId>(s)) +
                  "*" + nm(t) + " = " + nm(v));
        } else {
          seen[static_cast<std::size_t>(v)] = t;
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      std::fill(seen.begin(), seen.end(), kNoProduct);
      for (SimpleId s : col_defined[t]) {
        SimpleId v = data.cell(s, static_cast<SimpleId>(t));
        if (seen[static_cast<std::size_t>(v)] != kNoProduct) {
          add(Violation::Kind::Axiom,
              "right cancellativity fails: " + nm(seen[static_cast<std::size_t>(v)]) + "*" +
                  nm(static_cast<SimpleId>(t)) + " = " + nm(s) + "*" +
                  nm(static_cast<SimpleId>(t)) + " = " + nm(v));
        } else {
          seen[static_cast<std::size_t>(v)] = s;
        }
      }
    }
  }

  void check_associativity() {
    // (s*t)*u defined forces t*u and s*(t*u) defined and equal.
    for (std::size_t s = 0; s < n && rep.violations.size() <= kMaxViolations; ++s) {
      for (SimpleId t : row_defined[s]) {
        SimpleId v = data.cell(static_cast<SimpleId>(s), t);
        for (SimpleId u : row_defined[static_cast<std::size_t>(v)]) {
          SimpleId w = data.cell(v, u);
          SimpleId y = data.cell(t, u);
          if (y == kNoProduct || data.cell(static_cast<SimpleId>(s), y) != w) {
            add(Violation::Kind::Axiom,
                "associativity fails on (" + nm(static_cast<SimpleId>(s)) + ", " + nm(t) + ", " +
                    nm(u) + ")");
          }
        }
      }
    }
    // s*(t*u) defined forces s*t and (s*t)*u defined and equal.
    for (std::size_t t = 0; t < n && rep.violations.size() <= kMaxViolations; ++t) {
      for (SimpleId u : row_defined[t]) {
        SimpleId y = data.cell(static_cast<SimpleId>(t), u);
        for (SimpleId s : col_defined[static_cast<std::size_t>(y)]) {
          SimpleId w = data.cell(s, y);
          SimpleId x = data.cell(s, static_cast<SimpleId>(t));
          if (x == kNoProduct || data.cell(x, u) != w) {
            add(Violation::Kind::Axiom,
                "associativity fails on (" + nm(s) + ", " + nm(static_cast<SimpleId>(t)) + ", " +
                    nm(u) + ")");
          }
        }
      }
    }
  }

  // Longest-path weights over the atom-labeled divisibility DAG; detects
  // cycles and simples not generated by atoms.
  void check_atom_generation() {
    is_atom.assign(n, 0);
    for (SimpleId a : data.atoms) is_atom[static_cast<std::size_t>(a)] = 1;

    std::vector<std::vector<SimpleId>> out(n);
    std::vector<int> indeg(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      for (SimpleId a : data.atoms) {
        SimpleId v = data.cell(static_cast<SimpleId>(s), a);
        if (v != kNoProduct) {
          out[s].push_back(v);
          ++indeg[static_cast<std::size_t>(v)];
        }
      }
    }
    std::queue<SimpleId> q;
    for (std::size_t s = 0; s < n; ++s) {
      if (indeg[s] == 0) q.push(static_cast<SimpleId>(s));
    }
    weight.assign(n, -1);
    weight[0] = 0;
    std::size_t processed = 0;
    while (!q.empty()) {
      SimpleId s = q.front();
      q.pop();
      ++processed;
      for (SimpleId v : out[static_cast<std::size_t>(s)]) {
        if (weight[static_cast<std::size_t>(s)] >= 0) {
          weight[static_cast<std::size_t>(v)] = std::max(
              weight[static_cast<std::size_t>(v)], weight[static_cast<std::size_t>(s)] + 1);
        }
        if (--indeg[static_cast<std::size_t>(v)] == 0) q.push(v);
      }
    }
    if (processed != n) {
      add(Violation::Kind::Axiom, "divisibility graph has a cycle");
      return;
    }
    for (std::size_t s = 1; s < n; ++s) {
      if (weight[s] < 0) {
        add(Violation::Kind::Axiom,
            "atoms do not generate: " + nm(static_cast<SimpleId>(s)) + " is unreachable");
      }
    }
    if (weight[static_cast<std::size_t>(data.delta)] > 0) {
      delta_norm = weight[static_cast<std::size_t>(data.delta)];
    }
  }

  void check_atomicity() {
    for (std::size_t s = 1; s < n; ++s) {
      for (SimpleId t : row_defined[s]) {
        if (t == kIdentity) continue;
        SimpleId v = data.cell(static_cast<SimpleId>(s), t);
        if (is_atom[static_cast<std::size_t>(v)]) {
          add(Violation::Kind::Axiom, "atom " + nm(v) + " factors as " +
                                          nm(static_cast<SimpleId>(s)) + "*" + nm(t));
        }
      }
    }
  }

  void check_delta_divisors() {
    complement.assign(n, kNoProduct);
    const std::size_t d = static_cast<std::size_t>(data.delta);
    for (std::size_t s = 0; s < n; ++s) {
      if (!ldiv[d][s]) {
        add(Violation::Kind::Axiom,
            nm(static_cast<SimpleId>(s)) + " does not left-divide Delta");
      }
      if (!rdiv[d][s]) {
        add(Violation::Kind::Axiom,
            nm(static_cast<SimpleId>(s)) + " does not right-divide Delta");
      }
      for (SimpleId t : row_defined[s]) {
        if (data.cell(static_cast<SimpleId>(s), t) == data.delta) {
          complement[s] = t;  // unique when left-cancellative
          break;
        }
      }
    }
    std::vector<char> hit(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (complement[s] == kNoProduct) continue;
      if (hit[static_cast<std::size_t>(complement[s])]) {
        add(Violation::Kind::Axiom, "complement is not a bijection");
        return;
      }
      hit[static_cast<std::size_t>(complement[s])] = 1;
    }
  }

  void build_tau() {
    tau.assign(n, kNoProduct);
    for (std::size_t s = 0; s < n; ++s) {
      tau[s] = complement[static_cast<std::size_t>(complement[s])];
    }
    // order of the permutation tau = lcm of its cycle lengths
    std::vector<char> done(n, 0);
    std::int64_t order = 1;
    for (std::size_t s = 0; s < n; ++s) {
      if (done[s]) continue;
      std::int64_t cycle = 0;
      std::size_t cur = s;
      while (!done[cur]) {
        done[cur] = 1;
        cur = static_cast<std::size_t>(tau[cur]);
        ++cycle;
      }
      order = std::lcm(order, cycle);
      if (order > 1000000) {
        add(Violation::Kind::Axiom, "tau order exceeds the desk-scale bound");
        order = 1;
        break;
      }
    }
    tau_order = static_cast<int>(order);
  }

  void check_tau_compatibility() {
    if (tau[static_cast<std::size_t>(data.delta)] != data.delta) {
      add(Violation::Kind::Axiom, "tau does not fix Delta");
    }
    for (SimpleId a : data.atoms) {
      if (!is_atom[static_cast<std::size_t>(tau[static_cast<std::size_t>(a)])]) {
        add(Violation::Kind::Axiom, "tau does not preserve the atom set");
      }
    }
    for (std::size_t s = 0; s < n && rep.violations.size() <= kMaxViolations; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        SimpleId v = data.cell(static_cast<SimpleId>(s), static_cast<SimpleId>(t));
        SimpleId tv = data.cell(tau[s], tau[t]);
        SimpleId expect = (v == kNoProduct) ? kNoProduct : tau[static_cast<std::size_t>(v)];
        if (tv != expect) {
          add(Violation::Kind::Axiom,
              "tau is not multiplicative on (" + nm(static_cast<SimpleId>(s)) + ", " +
                  nm(static_cast<SimpleId>(t)) + ")");
        }
      }
    }
  }

  // For each pair: the meet candidate is the maximal-weight common left
  // divisor, verified to dominate every common lower bound. The right order
  // is checked the same way without storing the result.
  void build_meets_and_check_lattices() {
    meet.assign(n * n, kNoProduct);
    boost::dynamic_bitset<> common(n);
    bool reported_l = false, reported_r = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        common = ldiv[a];
        common &= ldiv[b];
        SimpleId cand = kIdentity;
        int best = -1;
        for (std::size_t s = common.find_first(); s != boost::dynamic_bitset<>::npos;
             s = common.find_next(s)) {
          if (weight[s] > best) {
            best = weight[s];
            cand = static_cast<SimpleId>(s);
          }
        }
        if (best < 0 || !common.is_subset_of(ldiv[static_cast<std::size_t>(cand)])) {
          if (!reported_l) {
            add(Violation::Kind::Axiom,
                "left order is not a lattice: no meet for (" + nm(static_cast<SimpleId>(a)) +
                    ", " + nm(static_cast<SimpleId>(b)) + ")");
            reported_l = true;
          }
          cand = kIdentity;
        }
        meet[a * n + b] = cand;
        meet[b * n + a] = cand;
      }
    }
    for (std::size_t a = 0; a < n && !reported_r; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        common = rdiv[a];
        common &= rdiv[b];
        SimpleId cand = kIdentity;
        int best = -1;
        for (std::size_t s = common.find_first(); s != boost::dynamic_bitset<>::npos;
             s = common.find_next(s)) {
          if (weight[s] > best) {
            best = weight[s];
            cand = static_cast<SimpleId>(s);
          }
        }
        if (best < 0 || !common.is_subset_of(rdiv[static_cast<std::size_t>(cand)])) {
          add(Violation::Kind::Axiom,
              "right order is not a lattice: no meet for (" + nm(static_cast<SimpleId>(a)) +
                  ", " + nm(static_cast<SimpleId>(b)) + ")");
          reported_r = true;
          break;
        }
      }
    }
  }

  void check_tau_meet_compatibility() {
    for (std::size_t a = 0; a < n && rep.violations.size() <= kMaxViolations; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        SimpleId m = meet[a * n + b];
        SimpleId tm = meet[static_cast<std::size_t>(tau[a]) * n + static_cast<std::size_t>(tau[b])];
        if (tm != tau[static_cast<std::size_t>(m)]) {
          add(Violation::Kind::Axiom,
              "tau is not compatible with the meet on (" + nm(static_cast<SimpleId>(a)) + ", " +
                  nm(static_cast<SimpleId>(b)) + ")");
          return;
        }
      }
    }
  }

  void build_left_quotients() {
    lquot.assign(n * n, kNoProduct);
    for (std::size_t u = 0; u < n; ++u) {
      for (SimpleId c : row_defined[u]) {
        SimpleId t = data.cell(static_cast<SimpleId>(u), c);
        lquot[u * n + static_cast<std::size_t>(t)] = c;
      }
    }
  }

  void build_delta_word() {
    delta_word.clear();
    SimpleId cur = kIdentity;
    std::size_t guard = 0;
    while (cur != data.delta && guard++ <= n) {
      bool advanced = false;
      for (SimpleId a : data.atoms) {
        SimpleId next = data.cell(cur, a);
        if (next != kNoProduct) {
          delta_word.push_back(a);
          cur = next;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    if (cur != data.delta) delta_word.clear();  // only on invalid tables
  }
};

ValidationReport validate_structure(const StructureData& data) {
  TableBuilder builder(data);
  builder.run();
  return std::move(builder.rep);
}

std::shared_ptr<const StructureTable> StructureTable::create(StructureData data) {
  TableBuilder builder(data);
  builder.run();
  if (!builder.rep.pass) throw ValidationError(std::move(builder.rep));

  auto table = std::shared_ptr<StructureTable>(new StructureTable());
  table->data_ = std::move(data);
  table->meet_ = std::move(builder.meet);
  table->lquot_ = std::move(builder.lquot);
  table->complement_ = std::move(builder.complement);
  table->tau_ = std::move(builder.tau);
  table->ldiv_ = std::move(builder.ldiv);
  table->rdiv_ = std::move(builder.rdiv);
  table->lmul_ = std::move(builder.lmul);
  table->is_atom_ = std::move(builder.is_atom);
  table->weight_ = std::move(builder.weight);
  table->delta_word_ = std::move(builder.delta_word);
  table->tau_order_ = builder.tau_order;
  table->delta_norm_ = builder.delta_norm;
  table->report_ = std::move(builder.rep);
  return table;
}

std::optional<SimpleId> StructureTable::find_name(const std::string& name) const {
  for (std::size_t i = 0; i < data_.names.size(); ++i) {
    if (data_.names[i] == name) return static_cast<SimpleId>(i);
  }
  return std::nullopt;
}

SimpleId StructureTable::join(SimpleId a, SimpleId b) const {
  boost::dynamic_bitset<> common = lmul_[static_cast<std::size_t>(a)];
  common &= lmul_[static_cast<std::size_t>(b)];
  SimpleId result = delta();
  for (std::size_t c = common.find_first(); c != boost::dynamic_bitset<>::npos;
       c = common.find_next(c)) {
    result = meet(result, static_cast<SimpleId>(c));
  }
  return result;
}

SimpleId StructureTable::left_quotient(SimpleId u, SimpleId t) const {
  SimpleId c = lquot_[static_cast<std::size_t>(u) * simple_count() + static_cast<std::size_t>(t)];
  if (c == kNoProduct) {
    throw std::invalid_argument("left_quotient: " + name(u) + " does not left-divide " + name(t));
  }
  return c;
}

SimpleId StructureTable::tau_pow(SimpleId s, std::int64_t k) const {
  std::int64_t m = tau_order_;
  std::int64_t r = ((k % m) + m) % m;
  SimpleId cur = s;
  for (std::int64_t i = 0; i < r; ++i) cur = tau(cur);
  return cur;
}

std::vector<SimpleId> StructureTable::atom_word(SimpleId s) const {
  std::vector<SimpleId> word;
  SimpleId cur = s;
  while (cur != kIdentity) {
    bool advanced = false;
    for (SimpleId a : data_.atoms) {
      if (leq_left(a, cur)) {
        word.push_back(a);
        cur = left_quotient(a, cur);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("atom_word: simple not generated by atoms");
  }
  return word;
}

}  // namespace garside
