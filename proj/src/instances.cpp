#include "garside/instances.hpp"

#include "garside/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace garside {

namespace {

using Perm = std::vector<std::uint8_t>;

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

int inversions(const Perm& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++count;
    }
  }
  return count;
}

}  // namespace

TablePtr braid_classical(int n) {
  if (n < 2 || n > 7) throw std::invalid_argument("braid_classical: n must be in [2, 7]");

  const std::size_t strands = static_cast<std::size_t>(n);
  std::vector<Perm> atoms_perm;
  for (int i = 0; i + 1 < n; ++i) {
    Perm t(strands);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i) + 1]);
    atoms_perm.push_back(std::move(t));
  }

  // BFS closure of the atoms under length-additive right multiplication
  // enumerates all n! permutation braids in weight order.
  std::vector<Perm> simples;
  std::vector<std::string> names;
  std::map<Perm, SimpleId> index;
  Perm id(strands);
  std::iota(id.begin(), id.end(), 0);
  simples.push_back(id);
  names.push_back("1");
  index[id] = 0;

  const int delta_inv = n * (n - 1) / 2;
  std::vector<int> inv{0};
  for (std::size_t head = 0; head < simples.size(); ++head) {
    Perm cur = simples[head];
    int cur_inv = inv[head];
    for (std::size_t a = 0; a < atoms_perm.size(); ++a) {
      Perm next = compose(cur, atoms_perm[a]);
      int next_inv = inversions(next);
      if (next_inv != cur_inv + 1 || index.count(next)) continue;
      SimpleId sid = static_cast<SimpleId>(simples.size());
      std::string name;
      if (head == 0) {
        name = "s" + std::to_string(a + 1);  // atoms keep their name even when sigma_1 = Delta
      } else if (next_inv == delta_inv) {
        name = "D";
      } else {
        name = names[head] + ".s" + std::to_string(a + 1);
      }
      index[next] = sid;
      simples.push_back(std::move(next));
      names.push_back(std::move(name));
      inv.push_back(next_inv);
    }
  }

  StructureData data;
  data.names = std::move(names);
  for (std::size_t a = 0; a < atoms_perm.size(); ++a) {
    data.atoms.push_back(index.at(atoms_perm[a]));
  }
  Perm w0(strands);
  for (std::size_t i = 0; i < strands; ++i) w0[i] = static_cast<std::uint8_t>(strands - 1 - i);
  data.delta = index.at(w0);
  data.allocate_product();
  const std::size_t count = simples.size();
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t t = 0; t < count; ++t) {
      Perm st = compose(simples[s], simples[t]);
      if (inversions(st) == inv[s] + inv[t]) {
        data.set_cell(static_cast<SimpleId>(s), static_cast<SimpleId>(t), index.at(st));
      }
    }
  }
  return StructureTable::create(std::move(data));
}

TablePtr torus(int a, int b) {
  if (a < 2 || b < 2) throw std::invalid_argument("torus: parameters must be >= 2");

  // simples: 1, x..x^(a-1), y..y^(b-1), Delta; x^i sits at index i, y^j at
  // index (a - 1) + j, Delta last.
  const std::size_t count = static_cast<std::size_t>(a) + static_cast<std::size_t>(b);
  StructureData data;
  data.names.push_back("1");
  for (int i = 1; i < a; ++i) {
    data.names.push_back(i == 1 ? "x" : "x" + std::to_string(i));
  }
  for (int j = 1; j < b; ++j) {
    data.names.push_back(j == 1 ? "y" : "y" + std::to_string(j));
  }
  data.names.push_back("D");
  data.delta = static_cast<SimpleId>(count - 1);
  data.atoms = {1, static_cast<SimpleId>(a)};
  data.allocate_product();

  auto xid = [&](int i) {
    return i == 0 ? kIdentity : (i == a ? data.delta : static_cast<SimpleId>(i));
  };
  auto yid = [&](int j) {
    return j == 0 ? kIdentity : (j == b ? data.delta : static_cast<SimpleId>(a - 1 + j));
  };
  for (int i = 0; i <= a; ++i) {
    for (int k = 0; i + k <= a; ++k) {
      data.set_cell(xid(i), xid(k), xid(i + k));
    }
  }
  for (int j = 0; j <= b; ++j) {
    for (int k = 0; j + k <= b; ++k) {
      data.set_cell(yid(j), yid(k), yid(j + k));
    }
  }
  return StructureTable::create(std::move(data));
}

TablePtr free_abelian(int ell) {
  if (ell < 1 || ell > 12) throw std::invalid_argument("free_abelian: rank must be in [1, 12]");

  const std::size_t count = std::size_t{1} << ell;
  StructureData data;
  data.names.resize(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (mask == 0) {
      data.names[mask] = "1";
    } else if (mask == count - 1) {
      data.names[mask] = "D";
    } else {
      std::string name;
      for (int i = 0; i < ell; ++i) {
        if (mask & (std::size_t{1} << i)) {
          if (!name.empty()) name += '.';
          name += "e" + std::to_string(i + 1);
        }
      }
      data.names[mask] = std::move(name);
    }
  }
  data.delta = static_cast<SimpleId>(count - 1);
  for (int i = 0; i < ell; ++i) data.atoms.push_back(static_cast<SimpleId>(1u << i));
  data.allocate_product();
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t t = 0; t < count; ++t) {
      if ((s & t) == 0) {
        data.set_cell(static_cast<SimpleId>(s), static_cast<SimpleId>(t),
                      static_cast<SimpleId>(s | t));
      }
    }
  }
  return StructureTable::create(std::move(data));
}

TablePtr InstanceSpec::build() const {
  switch (kind) {
    case Kind::Braid:
      return braid_classical(a);
    case Kind::Torus:
      return torus(a, b);
    case Kind::FreeAbelian:
      return free_abelian(a);
    case Kind::Custom: {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw std::invalid_argument("cannot open structure file: " + path);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return load_structure(buffer.str());
    }
  }
  throw std::logic_error("unreachable");
}

std::string InstanceSpec::to_string() const {
  switch (kind) {
    case Kind::Braid:
      return "braid:" + std::to_string(a);
    case Kind::Torus:
      return "torus:" + std::to_string(a) + ":" + std::to_string(b);
    case Kind::FreeAbelian:
      return "free_abelian:" + std::to_string(a);
    case Kind::Custom:
      return "custom:" + path;
  }
  throw std::logic_error("unreachable");
}

InstanceSpec parse_instance(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("instance must look like kind:params, got \"" + text + "\"");
  }
  std::string kind = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) {
      throw std::invalid_argument("bad integer \"" + s + "\" in instance \"" + text + "\"");
    }
    return value;
  };

  InstanceSpec spec{};
  if (kind == "braid") {
    spec.kind = InstanceSpec::Kind::Braid;
    spec.a = parse_int(rest);
    if (spec.a < 2 || spec.a > 7) throw std::invalid_argument("braid strand count must be in [2, 7]");
  } else if (kind == "torus") {
    auto colon2 = rest.find(':');
    if (colon2 == std::string::npos) {
      throw std::invalid_argument("torus instance needs two parameters, e.g. torus:2:2");
    }
    spec.kind = InstanceSpec::Kind::Torus;
    spec.a = parse_int(rest.substr(0, colon2));
    spec.b = parse_int(rest.substr(colon2 + 1));
    if (spec.a < 2 || spec.b < 2) throw std::invalid_argument("torus parameters must be >= 2");
  } else if (kind == "free_abelian") {
    spec.kind = InstanceSpec::Kind::FreeAbelian;
    spec.a = parse_int(rest);
    if (spec.a < 1 || spec.a > 12) throw std::invalid_argument("free_abelian rank must be in [1, 12]");
  } else if (kind == "custom") {
    spec.kind = InstanceSpec::Kind::Custom;
    spec.path = rest;
    if (spec.path.empty()) throw std::invalid_argument("custom instance needs a file path");
  } else {
    throw std::invalid_argument("unknown instance kind \"" + kind + "\"");
  }
  return spec;
}

}  // namespace garside
