// netideal: proof nets as polynomial ideals, from the command line.
//
// Subcommands: validate, reduce, normalize, ideal, gb, eliminate, hilbert,
// gotzmann, macaulay, church, check.  Input files may be "-" for stdin.
// Exit codes: 0 success, 1 verification failure, 2 resource limit,
// 64 usage/input error, 70 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "netideal/hilbert.hpp"
#include "netideal/interpret.hpp"
#include "netideal/polytext.hpp"
#include "netideal/reduction.hpp"
#include "netideal/semantics.hpp"

using json = nlohmann::ordered_json;
using namespace netideal;

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

struct Config {
  std::string order = "grevlex";
  std::string field = "q";
  int dmax = 12;
  int truncation = 1;
  int fuel = 1000;
  std::string format = "text";
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

ProofNet load_net(const std::string& path) { return net_from_json(read_input(path)); }

ParsedIdeal load_ideal(const std::string& path) { return parse_ideal_text(read_input(path)); }

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

MonomialOrder make_order(const std::string& spec, const RingPtr& ring) {
  if (spec == "grevlex") return MonomialOrder::grevlex();
  if (spec == "lex") return MonomialOrder::lex();
  if (spec.rfind("elim:", 0) == 0) {
    std::vector<int> block_of(ring->nvars(), 1);
    for (const auto& name : split_csv(spec.substr(5))) {
      int idx = ring->var_index(name);
      if (idx < 0) throw std::invalid_argument("--order elim: unknown variable '" + name + "'");
      block_of[idx] = 0;
    }
    return MonomialOrder::block(block_of);
  }
  throw std::invalid_argument("--order must be grevlex, lex or elim:<vars>");
}

std::uint64_t parse_prime(const std::string& field) {
  if (field.rfind("fp:", 0) != 0)
    throw std::invalid_argument("--field must be q or fp:<p>");
  long p = 0;
  try {
    p = std::stol(field.substr(3));
  } catch (const std::exception&) {
    throw std::invalid_argument("--field fp: expects a number");
  }
  if (p < 2 || p >= (1L << 31)) throw std::invalid_argument("--field fp: p must be in [2, 2^31)");
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("--field fp: " + std::to_string(p) + " is not prime");
  return static_cast<std::uint64_t>(p);
}

PolyFp to_fp(const PolyQ& p) {
  PolyFp r = PolyFp::zero(p.ring());
  mpz_class mod(static_cast<unsigned long>(Fp::modulus()));
  for (const auto& t : p.terms()) {
    mpz_class num = t.c.raw().get_num() % mod;
    mpz_class den = t.c.raw().get_den() % mod;
    if (den == 0)
      throw std::invalid_argument("coefficient denominator divisible by the field modulus");
    Fp c = Fp(num.get_si()) / Fp(den.get_si());
    r = r.add(PolyFp::term(p.ring(), t.m, c), kGrevlex);
  }
  return r;
}

json violations_json(const ValidationReport& rep) {
  json arr = json::array();
  for (const auto& v : rep.violations)
    arr.push_back({{"rule", v.rule}, {"subject", v.subject}, {"detail", v.detail}});
  return arr;
}

json corr_json(const EdgeCorrespondence& corr) {
  json fwd = json::object(), bwd = json::object(), clones = json::object();
  for (const auto& [k, v] : corr.forward) fwd[k] = v ? json(*v) : json(nullptr);
  for (const auto& [k, v] : corr.backward) bwd[k] = v ? json(*v) : json(nullptr);
  for (const auto& [k, v] : corr.clone_of) clones[k] = v;
  return {{"forward", fwd}, {"backward", bwd}, {"clone_of", clones}};
}

json trace_step_json(const TraceStep& s) {
  return {{"step", s.step},
          {"kind", redex_kind_name(s.redex.kind)},
          {"cut", s.redex.cut},
          {"links", s.links},
          {"correspondence", corr_json(s.corr)}};
}

std::vector<std::string> poly_lines(const std::vector<PolyQ>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(poly_to_string(g, kGrevlex));
  return out;
}

void print_ideal_text(const RingPtr& ring, const std::vector<std::string>& lines) {
  std::cout << "# vars:";
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    std::cout << (i ? ", " : " ") << ring->var_name(i);
  std::cout << "\n";
  for (const auto& l : lines) std::cout << l << "\n";
}

json ring_json(const RingPtr& ring) {
  json names = json::array();
  for (std::size_t i = 0; i < ring->nvars(); ++i) names.push_back(ring->var_name(i));
  return names;
}

/// Applies up to `steps` leftmost supported reductions, collecting the trace.
std::pair<ProofNet, std::vector<TraceStep>> step_leftmost(const ProofNet& start, int steps) {
  ProofNet net = start;
  std::vector<TraceStep> trace;
  for (int i = 1; i <= steps; ++i) {
    std::vector<Redex> redexes = find_redexes(net);
    const Redex* pick = nullptr;
    for (const auto& r : redexes)
      if (r.kind != RedexKind::PromPax) {
        pick = &r;
        break;
      }
    if (!pick) {
      if (!redexes.empty())
        throw NonShallowRequiredError("only box-commutation redexes remain");
      break;
    }
    ReduceResult res = reduce_step(net, pick->cut, i);
    trace.push_back({i, res.redex, res.links, res.corr});
    net = std::move(res.net);
  }
  return {net, trace};
}

json hilbert_json(const HilbertTable& table) {
  json diff = json(nullptr);
  if (table.diff_set) {
    diff = json::array();
    for (const auto& v : *table.diff_set)
      diff.push_back(v.fits_slong_p() ? json(v.get_si()) : json(v.get_str()));
  }
  return {{"j", table.stabilization ? json(*table.stabilization) : json(nullptr)},
          {"gotzmann", table.gotzmann ? json(*table.gotzmann) : json(nullptr)},
          {"diff_set", diff}};
}

json mpz_json(const mpz_class& v) {
  return v.fits_slong_p() ? json(v.get_si()) : json(v.get_str());
}

int run(int argc, char** argv) {
  CLI::App app{"shallow proof nets as polynomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--order", cfg.order, "monomial order: grevlex | lex | elim:<vars>")
      ->envname("NETIDEAL_ORDER");
  app.add_option("--field", cfg.field, "coefficient field: q | fp:<p>")
      ->envname("NETIDEAL_FIELD");
  app.add_option("--dmax", cfg.dmax, "largest degree for Hilbert tables (>= 2)")
      ->envname("NETIDEAL_DMAX");
  app.add_option("--truncation-degree", cfg.truncation, "chart truncation degree N")
      ->envname("NETIDEAL_TRUNCATION_DEGREE");
  app.add_option("--fuel", cfg.fuel, "maximum reduction steps")->envname("NETIDEAL_FUEL");
  app.add_option("--format", cfg.format, "output format: text | json")
      ->envname("NETIDEAL_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));

  std::string input = "-";
  std::string cut_id, keep_csv, strategy = "leftmost";
  int steps = -1;
  long macaulay_c = 0;
  int macaulay_d = 0, church_n = 0;
  bool dehomog = false, cut_zero = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a net for shallow well-formedness");
  validate_cmd->add_option("net", input, "net JSON file or -");

  auto* reduce_cmd = app.add_subcommand("reduce", "apply cut-elimination steps");
  reduce_cmd->add_option("net", input, "net JSON file or -");
  reduce_cmd->add_option("--cut", cut_id, "reduce at this Cut link id");
  reduce_cmd->add_option("--steps", steps, "number of leftmost steps (default 1)");

  auto* normalize_cmd = app.add_subcommand("normalize", "reduce to cut-free normal form");
  normalize_cmd->add_option("net", input, "net JSON file or -");
  normalize_cmd->add_option("--strategy", strategy, "leftmost | by-kind")
      ->check(CLI::IsMember({"leftmost", "by-kind"}));

  auto* ideal_cmd = app.add_subcommand("ideal", "emit the net's generators and registry");
  ideal_cmd->add_option("net", input, "net JSON file or -");
  ideal_cmd->add_flag("--dehomogenize", dehomog, "set primed variables to 1");

  auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  gb_cmd->add_option("ideal", input, "ideal file or -");

  auto* elim_cmd = app.add_subcommand("eliminate", "eliminate all but the kept variables");
  elim_cmd->add_option("ideal", input, "ideal file or -");
  elim_cmd->add_option("--keep", keep_csv, "comma-separated variables to keep")->required();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "diagonal Hilbert function table");
  hilbert_cmd->add_option("ideal", input, "ideal file or -");

  auto* gotzmann_cmd = app.add_subcommand("gotzmann", "Gotzmann number of an ideal file");
  gotzmann_cmd->add_option("ideal", input, "ideal file or -");

  auto* macaulay_cmd = app.add_subcommand("macaulay", "Macaulay expansion of c in degree d");
  macaulay_cmd->add_option("c", macaulay_c, "the value to expand")->required();
  macaulay_cmd->add_option("d", macaulay_d, "the degree")->required();

  auto* church_cmd = app.add_subcommand("church", "emit a Church numeral net");
  church_cmd->add_option("n", church_n, "the numeral")->required();
  church_cmd->add_flag("--cut-against-zero", cut_zero, "cut against a promoted numeral 0");

  auto* check_cmd = app.add_subcommand("check", "verify reduction invariance of the semantics");
  check_cmd->add_option("net", input, "net JSON file or -");
  check_cmd->add_option("--steps", steps, "check after this many steps (default: normalize)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }
  if (cfg.dmax < 2) throw std::invalid_argument("--dmax must be >= 2");
  if (cfg.truncation < 1) throw std::invalid_argument("--truncation-degree must be >= 1");
  if (cfg.fuel < 0) throw std::invalid_argument("--fuel must be >= 0");
  if (cfg.field != "q") Fp::set_modulus(parse_prime(cfg.field));
  bool as_json = cfg.format == "json";

  InterpretOptions iopts;
  iopts.truncation = cfg.truncation;

  if (*validate_cmd) {
    ValidationReport rep = validate_shallow(load_net(input));
    if (as_json) {
      std::cout << json{{"shallow", rep.shallow}, {"violations", violations_json(rep)}}.dump()
                << "\n";
    } else if (rep.shallow) {
      std::cout << "shallow\n";
    } else {
      std::cout << "not shallow\n";
      for (const auto& v : rep.violations)
        std::cout << v.rule << " " << v.subject << ": " << v.detail << "\n";
    }
    return rep.shallow ? 0 : 1;
  }

  if (*reduce_cmd) {
    ProofNet net = load_net(input);
    std::vector<TraceStep> trace;
    if (!cut_id.empty()) {
      ReduceResult res = reduce_step(net, cut_id, 1);
      trace.push_back({1, res.redex, res.links, res.corr});
      net = std::move(res.net);
    } else {
      auto [reduced, t] = step_leftmost(net, steps < 0 ? 1 : steps);
      net = std::move(reduced);
      trace = std::move(t);
    }
    if (as_json) {
      json jt = json::array();
      for (const auto& s : trace) jt.push_back(trace_step_json(s));
      std::cout << json{{"net", json::parse(net_to_json(net))},
                        {"trace", jt},
                        {"warnings", json::array()}}
                       .dump()
                << "\n";
    } else {
      for (const auto& s : trace) std::cerr << trace_step_json(s).dump() << "\n";
      std::cout << net_to_json(net);
    }
    return 0;
  }

  if (*normalize_cmd) {
    NormalizeOptions nopts;
    nopts.fuel = cfg.fuel;
    nopts.strategy = strategy == "by-kind" ? Strategy::ByKindPriority : Strategy::Leftmost;
    NormalizeResult res = normalize(load_net(input), nopts);
    if (as_json) {
      json jt = json::array();
      for (const auto& s : res.trace) jt.push_back(trace_step_json(s));
      std::cout << json{{"net", json::parse(net_to_json(res.net))},
                        {"trace", jt},
                        {"warnings", res.warnings}}
                       .dump()
                << "\n";
    } else {
      for (const auto& s : res.trace) std::cerr << trace_step_json(s).dump() << "\n";
      for (const auto& w : res.warnings) std::cerr << "# warning: " << w << "\n";
      std::cout << net_to_json(res.net);
    }
    return 0;
  }

  if (*ideal_cmd) {
    ProofNet net = load_net(input);
    Interpretation interp = build_interpretation(net, iopts);
    std::vector<PolyQ> gens = dehomog ? dehomogenize_by_name(interp.gens) : interp.gens;
    if (as_json) {
      std::cout << json{{"vars", ring_json(interp.registry.ring)},
                        {"generators", poly_lines(gens)},
                        {"registry", json::parse(interp.registry.to_json())}}
                       .dump()
                << "\n";
    } else {
      print_ideal_text(interp.registry.ring, poly_lines(gens));
      std::cout << "# registry " << interp.registry.to_json() << "\n";
    }
    return 0;
  }

  if (*gb_cmd) {
    ParsedIdeal ideal = load_ideal(input);
    MonomialOrder ord = make_order(cfg.order, ideal.ring);
    std::vector<std::string> lines;
    if (cfg.field == "q") {
      for (const auto& g : reduced_groebner(ideal.gens, ord))
        lines.push_back(poly_to_string(g, ord));
    } else {
      std::vector<PolyFp> gens;
      for (const auto& g : ideal.gens) gens.push_back(to_fp(g));
      for (const auto& g : reduced_groebner(gens, ord)) lines.push_back(poly_to_string(g, ord));
    }
    if (as_json)
      std::cout << json{{"vars", ring_json(ideal.ring)}, {"basis", lines}}.dump() << "\n";
    else
      print_ideal_text(ideal.ring, lines);
    return 0;
  }

  if (*elim_cmd) {
    ParsedIdeal ideal = load_ideal(input);
    std::vector<std::string> keep = split_csv(keep_csv);
    std::vector<PolyQ> basis = eliminate(ideal.gens, keep, kGrevlex);
    if (as_json)
      std::cout << json{{"vars", ring_json(ideal.ring)},
                        {"keep", keep},
                        {"basis", poly_lines(basis)}}
                       .dump()
                << "\n";
    else
      print_ideal_text(ideal.ring, poly_lines(basis));
    return 0;
  }

  if (*hilbert_cmd) {
    ParsedIdeal ideal = load_ideal(input);
    HilbertOptions hopts;
    hopts.dmax = cfg.dmax;
    HilbertTable table =
        hilbert_function(ideal.gens, blocks_by_prime_pairing(ideal.ring), hopts);
    if (as_json) {
      json rows = json::array();
      for (std::size_t d = 0; d < table.values.size(); ++d)
        rows.push_back({static_cast<long>(d), table.values[d]});
      json out = {{"table", rows}};
      json extra = hilbert_json(table);
      for (const auto& [k, v] : extra.items()) out[k] = v;
      std::cout << out.dump() << "\n";
    } else {
      for (std::size_t d = 0; d < table.values.size(); ++d)
        std::cout << d << "\t" << table.values[d] << "\n";
      std::cout << hilbert_json(table).dump() << "\n";
    }
    return 0;
  }

  if (*gotzmann_cmd) {
    ParsedIdeal ideal = load_ideal(input);
    HilbertOptions hopts;
    hopts.dmax = cfg.dmax;
    long g = gotzmann_number(ideal.gens, blocks_by_prime_pairing(ideal.ring), hopts);
    if (as_json)
      std::cout << json{{"gotzmann", g}}.dump() << "\n";
    else
      std::cout << g << "\n";
    return 0;
  }

  if (*macaulay_cmd) {
    mpz_class c(macaulay_c);
    BinomialExpansion exp = d_binomial_expansion(c, macaulay_d);
    std::vector<mpz_class> diff = macaulay_diff_set(c, macaulay_d);
    mpz_class bracket = macaulay_bracket(c, macaulay_d);
    if (as_json) {
      json terms = json::array();
      for (const auto& [k, i] : exp.terms) terms.push_back({mpz_json(k), i});
      json ds = json::array();
      for (const auto& v : diff) ds.push_back(mpz_json(v));
      std::cout << json{{"c", mpz_json(c)},
                        {"d", macaulay_d},
                        {"expansion", terms},
                        {"diff_set", ds},
                        {"bracket", mpz_json(bracket)}}
                       .dump()
                << "\n";
    } else {
      std::cout << c.get_str() << " =";
      for (std::size_t i = 0; i < exp.terms.size(); ++i)
        std::cout << (i ? " + C(" : " C(") << exp.terms[i].first.get_str() << ","
                  << exp.terms[i].second << ")";
      std::cout << "\n";
      std::cout << "M_" << macaulay_d << "(" << c.get_str() << ") = (";
      for (std::size_t i = 0; i < diff.size(); ++i)
        std::cout << (i ? ", " : "") << diff[i].get_str();
      std::cout << ")\n";
      std::cout << c.get_str() << "^<" << macaulay_d << "> = " << bracket.get_str() << "\n";
    }
    return 0;
  }

  if (*church_cmd) {
    std::cout << net_to_json(church(church_n, cut_zero));
    return 0;
  }

  if (*check_cmd) {
    ProofNet before = load_net(input);
    ProofNet after = before;
    if (steps >= 0) {
      after = step_leftmost(before, steps).first;
    } else {
      NormalizeOptions nopts;
      nopts.fuel = cfg.fuel;
      after = normalize(before, nopts).net;
    }
    InvarianceReport rep = check_invariance(before, after, iopts);
    if (as_json) {
      std::cout << json{{"ok", rep.ok},
                        {"variable_sets_match", rep.variable_sets_match},
                        {"detail", rep.detail},
                        {"conclusion_vars_before", rep.conclusion_vars_before},
                        {"conclusion_vars_after", rep.conclusion_vars_after},
                        {"basis_before", poly_lines(rep.basis_before)},
                        {"basis_after", poly_lines(rep.basis_after)}}
                       .dump()
                << "\n";
    } else if (rep.ok) {
      for (const auto& line : poly_lines(rep.basis_before)) std::cout << line << "\n";
    } else {
      std::cout << "violation: " << rep.detail << "\n";
      for (const auto& line : poly_lines(rep.basis_before)) std::cout << "before: " << line << "\n";
      for (const auto& line : poly_lines(rep.basis_after)) std::cout << "after: " << line << "\n";
    }
    return rep.ok ? 0 : 1;
  }

  return 64;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ResourceLimitError& e) {
    std::cerr << "netideal: " << e.what() << "\n";
    return 2;
  } catch (const FuelExhaustedError& e) {
    std::cerr << "netideal: " << e.what() << "\n";
    return 2;
  } catch (const NotStabilizedError& e) {
    std::cerr << "netideal: " << e.what() << "\n";
    return 2;
  } catch (const NetFormatError& e) {
    std::cerr << "netideal: " << e.what() << "\n";
    return 64;
  } catch (const StaleRedexError& e) {
    std::cerr << "netideal: " << e.what() << "\n";
    return 64;
  } catch (const std::invalid_argument& e) {
    std::cerr << "netideal: " << e.what() << "\n";
    return 64;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "netideal: " << e.what() << "\n";
    return 64;
  } catch (const std::runtime_error& e) {
    // Model-level findings: non-shallow requirements, chart mismatches,
    // degenerate slices, shape mismatches, unsupported reductions.
    std::cerr << "netideal: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "netideal: internal error: " << e.what() << "\n";
    return 70;
  }
}
