#include "garside/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace garside {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

TablePtr load_structure(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      line = strip_cr(line);
      if (!line.empty()) return true;
    }
    if (required) throw ParseError(lineno, "unexpected end of file");
    return false;
  };

  next_line(true);
  if (line != "garside-structure v1") {
    throw ParseError(lineno, "expected header \"garside-structure v1\"");
  }

  next_line(true);
  if (line != "simples:") throw ParseError(lineno, "expected \"simples:\" section");
  StructureData data;
  std::map<std::string, SimpleId> index;
  while (next_line(true) && line != "atoms:" && line.find(':') == std::string::npos) {
    auto tokens = split_ws(line);
    if (tokens.size() != 1) throw ParseError(lineno, "expected one simple name per line");
    if (index.count(tokens[0])) throw ParseError(lineno, "duplicate simple \"" + tokens[0] + "\"");
    index[tokens[0]] = static_cast<SimpleId>(data.names.size());
    data.names.push_back(tokens[0]);
  }
  if (data.names.empty() || data.names[0] != "1") {
    throw ParseError(lineno, "the first simple must be named \"1\"");
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(lineno, "unknown simple \"" + name + "\"");
    return it->second;
  };

  if (line.rfind("atoms:", 0) != 0) throw ParseError(lineno, "expected \"atoms:\" section");
  {
    auto tokens = split_ws(line.substr(6));
    if (tokens.empty()) throw ParseError(lineno, "atoms list is empty");
    for (const auto& t : tokens) data.atoms.push_back(lookup(t));
  }

  next_line(true);
  if (line.rfind("delta:", 0) != 0) throw ParseError(lineno, "expected \"delta:\" section");
  {
    auto tokens = split_ws(line.substr(6));
    if (tokens.size() != 1) throw ParseError(lineno, "delta section needs exactly one name");
    data.delta = lookup(tokens[0]);
  }

  next_line(true);
  if (line != "product:") throw ParseError(lineno, "expected \"product:\" section");
  data.allocate_product();
  while (next_line(false)) {
    auto tokens = split_ws(line);
    if (tokens.size() == 1 && tokens[0].back() == ':') {
      throw ParseError(lineno, "unknown section \"" + tokens[0] + "\"");
    }
    if (tokens.size() != 4 || tokens[2] != "=") {
      throw ParseError(lineno, "expected product line \"a b = c\"");
    }
    SimpleId a = lookup(tokens[0]);
    SimpleId b = lookup(tokens[1]);
    SimpleId c = lookup(tokens[3]);
    if (data.cell(a, b) != kNoProduct) {
      throw ParseError(lineno, "duplicate product cell " + tokens[0] + " " + tokens[1]);
    }
    data.set_cell(a, b, c);
  }

  return StructureTable::create(std::move(data));  // may throw ValidationError
}

std::string serialize_structure(const StructureTable& table) {
  std::ostringstream os;
  os << "garside-structure v1\n";
  os << "simples:\n";
  const std::size_t n = table.simple_count();
  for (std::size_t s = 0; s < n; ++s) os << table.name(static_cast<SimpleId>(s)) << "\n";
  os << "atoms:";
  for (SimpleId a : table.atoms()) os << " " << table.name(a);
  os << "\n";
  os << "delta: " << table.name(table.delta()) << "\n";
  os << "product:\n";
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      SimpleId c = table.product(static_cast<SimpleId>(a), static_cast<SimpleId>(b));
      if (c != kNoProduct) {
        os << table.name(static_cast<SimpleId>(a)) << " " << table.name(static_cast<SimpleId>(b))
           << " = " << table.name(c) << "\n";
      }
    }
  }
  return os.str();
}

Word parse_word(const StructureTable& table, const std::string& text) {
  Word word;
  auto tokens = split_ws(text);
  for (const auto& tok : tokens) {
    std::string base = tok;
    std::int64_t exponent = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string exp = tok.substr(caret + 1);
      std::size_t pos = 0;
      try {
        exponent = std::stoll(exp, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != exp.size() || exp.empty()) {
        throw ParseError(1, "bad exponent in token \"" + tok + "\"");
      }
    }
    std::vector<SimpleId> atoms;
    auto id = table.find_name(base);
    if (id && table.is_atom(*id)) {
      atoms.push_back(*id);
    } else if (base == "D") {
      atoms = table.delta_atom_word();
    } else {
      throw ParseError(1, "token \"" + base + "\" is neither an atom nor D");
    }
    int sign = exponent < 0 ? -1 : 1;
    std::int64_t reps = exponent < 0 ? -exponent : exponent;
    for (std::int64_t r = 0; r < reps; ++r) {
      if (sign > 0) {
        for (SimpleId a : atoms) word.push_back({a, 1});
      } else {
        for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) word.push_back({*it, -1});
      }
    }
  }
  return word;
}

std::string element_to_word_string(const Element& g) {
  const StructureTable& T = *g.table();
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& tok) {
    if (!first) os << " ";
    os << tok;
    first = false;
  };
  if (g.inf() == 1) {
    emit("D");
  } else if (g.inf() != 0) {
    emit("D^" + std::to_string(g.inf()));
  }
  for (SimpleId s : g.factors()) {
    for (SimpleId a : T.atom_word(s)) emit(T.name(a));
  }
  return os.str();  // empty string spells the identity
}

}  // namespace garside
