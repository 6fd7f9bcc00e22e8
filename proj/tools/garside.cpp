#include "garside/conjugacy.hpp"
#include "garside/element.hpp"
#include "garside/instances.hpp"
#include "garside/io.hpp"
#include "garside/periodicity.hpp"
#include "garside/quotient.hpp"
#include "garside/rational.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using garside::Element;
using nlohmann::json;

struct Options {
  std::string instance;
  std::vector<std::string> words;
  std::string left, right;
  std::int64_t a = 0, b = 0;
  bool has_a = false, has_b = false;
  std::int64_t bound = 10;
  bool has_bound = false;
  std::size_t cap = garside::kDefaultCap;
  bool text = false;
};

std::size_t cap_from_env() {
  if (const char* env = std::getenv("GARSIDE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return garside::kDefaultCap;
}

json element_json(const Element& g) {
  json j;
  j["inf"] = g.inf();
  json factors = json::array();
  for (garside::SimpleId s : g.factors()) factors.push_back(g.table()->name(s));
  j["factors"] = factors;
  j["word"] = garside::element_to_word_string(g);
  return j;
}

Element parse_element(const garside::TablePtr& table, const std::string& text) {
  return garside::from_word(table, garside::parse_word(*table, text));
}

void emit(const json& j, bool text) {
  if (text) {
    for (const auto& [key, value] : j.items()) {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int run_validate(const garside::InstanceSpec& spec, const Options& opt) {
  json j;
  j["instance"] = spec.to_string();
  try {
    garside::TablePtr table = spec.build();
    const auto& rep = table->report();
    j["pass"] = true;
    j["simples"] = rep.simple_count;
    j["atoms"] = rep.atom_count;
    j["delta_norm"] = rep.delta_norm;
    j["tau_order"] = rep.tau_order;
    j["notes"] = rep.notes;
    emit(j, opt.text);
    return 0;
  } catch (const garside::ValidationError& e) {
    j["pass"] = false;
    json violations = json::array();
    for (const auto& v : e.report.violations) {
      violations.push_back({{"kind", v.kind == garside::Violation::Kind::Malformed
                                         ? "malformed"
                                         : "axiom"},
                            {"what", v.what}});
    }
    j["violations"] = violations;
    emit(j, opt.text);
    std::cerr << "validation failed: " << e.what() << "\n";
    return 2;
  }
}

int dispatch(const std::string& cmd, const Options& opt) {
  garside::InstanceSpec spec = garside::parse_instance(opt.instance);
  if (cmd == "validate") return run_validate(spec, opt);

  garside::TablePtr table = spec.build();
  json j;

  if (cmd == "nf") {
    Element g = parse_element(table, opt.words.at(0));
    j = element_json(g);
  } else if (cmd == "invariants") {
    Element g = parse_element(table, opt.words.at(0));
    auto isl = garside::invariants_inf_sup_len(g);
    auto t = garside::translation_numbers(g);
    j["inf"] = isl.inf;
    j["sup"] = isl.sup;
    j["len"] = isl.len;
    j["INF"] = garside::to_string(t.t_inf);
    j["SUP"] = garside::to_string(t.t_sup);
    j["LEN"] = garside::to_string(t.t_len);
  } else if (cmd == "summit") {
    Element g = parse_element(table, opt.words.at(0));
    garside::SummitData s = garside::summit_invariants(g);
    j["infs"] = s.infs;
    j["sups"] = s.sups;
    j["lens"] = s.lens;
    j["representative"] = element_json(s.representative);
    j["conjugator"] = element_json(s.conjugator);
    try {
      json sss = json::array();
      for (const Element& v : garside::super_summit_set(g, opt.cap)) {
        sss.push_back(element_json(v));
      }
      j["super_summit_set"] = sss;
    } catch (const std::length_error&) {
      j["super_summit_set"] = nullptr;
      j["super_summit_cap_exceeded"] = true;
    }
  } else if (cmd == "conjugate") {
    Element g = parse_element(table, opt.left);
    Element h = parse_element(table, opt.right);
    auto w = garside::is_conjugate(g, h, opt.cap);
    j["conjugate"] = w.has_value();
    if (w) j["conjugator"] = element_json(*w);
    if (opt.has_bound) {
      auto kl = garside::commensurable(g, h, opt.bound);
      j["commensurable"] = kl.has_value();
      if (kl) {
        j["k"] = kl->first;
        j["l"] = kl->second;
      }
    }
  } else if (cmd == "periodic") {
    Element g = parse_element(table, opt.words.at(0));
    auto cls = garside::periodicity_class(g);
    j["periodic"] = cls.has_value();
    if (cls) {
      j["p"] = cls->p;
      j["q"] = cls->q;
      j["INF"] = garside::to_string(garside::Rational(cls->p, cls->q));
      j["conjugator"] = element_json(cls->conjugator);
      j["lens_profile"] = garside::lens_profile(g, 12);
    }
  } else if (cmd == "roots") {
    Element g = parse_element(table, opt.words.at(0));
    auto cls = garside::periodicity_class(g);
    if (!cls) throw std::domain_error("roots: element is not periodic");
    j["p"] = cls->p;
    j["q"] = cls->q;
    j["conjugator"] = element_json(cls->conjugator);
    if (opt.has_a != opt.has_b) throw std::domain_error("roots: --a and --b must be given together");
    if (opt.has_a && opt.has_b) {
      Element root = garside::delta_root_certificate(g, opt.a, opt.b);
      j["root_certificate"] = {{"a", opt.a}, {"b", opt.b}, {"conjugator", element_json(root)}};
      auto [d, w] = garside::gcd_periodic_exponent(g, opt.a * cls->q, opt.b * cls->q);
      j["gcd_certificate"] = {{"a", opt.a * cls->q},
                              {"b", opt.b * cls->q},
                              {"d", d},
                              {"conjugator", element_json(w)}};
    }
  } else if (cmd == "garside-element") {
    Element c = parse_element(table, opt.words.at(0));
    auto ds = garside::divisor_sets(c);
    j["garside_element"] = garside::is_garside_element(c);
    const bool central = garside::is_central(c);
    j["central"] = central;
    json left = json::array(), right = json::array();
    for (auto s : ds.left) left.push_back(table->name(s));
    for (auto s : ds.right) right.push_back(table->name(s));
    j["left_divisors"] = left;
    j["right_divisors"] = right;
    if (central && !c.is_identity()) {
      j["central_completion"] = element_json(garside::garside_element_from_central(c));
    }
  } else if (cmd == "quotient-order") {
    Element g = parse_element(table, opt.words.at(0));
    auto ord = garside::quotient_order(g);
    if (ord) {
      j["order"] = *ord;
    } else {
      j["order"] = "infinite";
    }
  } else if (cmd == "enumerate-finite") {
    auto gens = garside::enumerate_type_i(table);
    json list = json::array();
    for (const auto& gen : gens) {
      json e;
      e["u"] = gen.u;
      e["a"] = table->name(gen.a);
      if (gen.q) {
        e["q"] = *gen.q;
      } else {
        e["q"] = nullptr;
      }
      e["order"] = gen.order;
      e["element"] = element_json(gen.element);
      list.push_back(e);
    }
    j["generators"] = list;
    json classes = json::array();
    for (const auto& cls : garside::group_by_conjugacy(gens)) {
      classes.push_back(cls);
    }
    j["classes"] = classes;
  } else if (cmd == "certify-cyclic") {
    std::vector<Element> gens;
    for (const auto& w : opt.words) gens.push_back(parse_element(table, w));
    auto [generator, order] = garside::certify_cyclic(gens, opt.cap);
    j["order"] = order;
    j["generator"] = element_json(generator);
  } else {
    throw std::logic_error("unknown subcommand");
  }
  emit(j, opt.text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside group computation kernel"};
  app.require_subcommand(1);

  Options opt;
  opt.cap = cap_from_env();

  const std::vector<std::string> commands = {
      "validate",        "nf",       "invariants",      "summit",
      "conjugate",       "periodic", "roots",           "garside-element",
      "quotient-order",  "enumerate-finite", "certify-cyclic"};

  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--instance", opt.instance, "braid:n | torus:a:b | free_abelian:l | custom:path")
        ->required();
    sub->add_flag("--json", "machine-readable output (default)");
    sub->add_flag("--text", opt.text, "line-oriented output");
    sub->add_option("--cap", opt.cap, "closure size cap");
    if (name == "nf" || name == "invariants" || name == "summit" || name == "periodic" ||
        name == "roots" || name == "garside-element" || name == "quotient-order" ||
        name == "certify-cyclic") {
      sub->add_option("--word", opt.words, "word over the atoms (may repeat for certify-cyclic)");
    }
    if (name == "conjugate") {
      sub->add_option("--left", opt.left, "left-hand word")->required();
      sub->add_option("--right", opt.right, "right-hand word")->required();
    }
    if (name == "roots") {
      sub->add_option("--a", opt.a, "Delta exponent a");
      sub->add_option("--b", opt.b, "root exponent b");
    }
    if (name == "conjugate") {
      sub->add_option("--bound", opt.bound, "also search for commensurability up to this bound");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  if (cmd == "roots") {
    opt.has_a = sub->count("--a") > 0;
    opt.has_b = sub->count("--b") > 0;
  }
  if (cmd == "conjugate") opt.has_bound = sub->count("--bound") > 0;

  try {
    bool word_required = cmd == "nf" || cmd == "invariants" || cmd == "summit" ||
                         cmd == "periodic" || cmd == "roots" || cmd == "garside-element" ||
                         cmd == "quotient-order" || cmd == "certify-cyclic";
    if (word_required && opt.words.empty()) {
      std::cerr << "error: " << cmd << " requires --word\n";
      return 1;
    }
    return dispatch(cmd, opt);
  } catch (const garside::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const garside::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
