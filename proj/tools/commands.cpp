#include "commands.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>

#include "tanglekit/annulus.hpp"
#include "tanglekit/bracket2.hpp"
#include "tanglekit/colored.hpp"
#include "tanglekit/io.hpp"
#include "tanglekit/random.hpp"

namespace tanglekit::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  int n = 1;
  int max_crossings = 16;
  bool text = false;
  std::string basis = "z";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A fraction like "12/5" or "inf", or tangle notation.
ExtRational fraction_arg(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b != std::string::npos && s[b] == '[') return parse_tangle_notation(s).fraction();
  return parse_ext_rational(s);
}

std::string frac_text(const ExtRational& r) { return r.to_string(); }

json fraction_json(const ExtRational& r) {
  json j;
  j["p"] = r.p();
  j["q"] = r.q();
  j["parity"] = to_string(parity(r));
  return j;
}

json annulus_json(const AnnulusElement& e, const std::string& basis) {
  json z = json::object(), cheb = json::object();
  for (int k = 0; k <= e.degree(); ++k) {
    RatFunc c = e.coeff(k);
    if (!c.is_zero()) z[std::to_string(k)] = c.to_string();
  }
  auto coords = chebyshev_convert(e);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) cheb[std::to_string(k)] = coords[k].to_string();
  json j;
  if (basis == "z") {
    j["z"] = z;
    j["chebyshev"] = cheb;
  } else {
    j["chebyshev"] = cheb;
    j["z"] = z;
  }
  return j;
}

json bracket_json(const BracketVec2& v) {
  json j;
  j["alpha"] = v.alpha.to_string();
  j["beta"] = v.beta.to_string();
  auto r = ratio_invariant(v);
  j["R"] = r ? r->to_string() : "inf";
  j["C"] = c_invariant(v).to_string();
  return j;
}

void emit_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) emit_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) emit_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": ";
    if (j.is_string()) {
      out << j.get<std::string>();
    } else if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
    } else {
      out << j.dump();
    }
    out << '\n';
  }
}

void emit(const json& j, const Globals& g, std::ostream& out) {
  if (g.text)
    emit_text(j, "", out);
  else
    out << j.dump() << '\n';
}

// Evaluates f on each input with a worker pool; results keep input order.
json fan_out(const std::vector<std::string>& inputs, const std::function<json(const std::string&)>& f) {
  if (inputs.size() == 1) return f(inputs[0]);
  std::vector<json> results(inputs.size());
  std::vector<std::string> errors(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(inputs.size()); ++i) {
    try {
      results[i] = f(inputs[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error(e);
  json arr = json::array();
  for (auto& r : results) arr.push_back(std::move(r));
  return arr;
}

// A tangle in notation, or a diagram file via --diagram.
struct TangleInput {
  std::string notation;
  std::string diagram_path;

  bool is_diagram() const { return !diagram_path.empty(); }
  void require() const {
    if (notation.empty() == diagram_path.empty()) throw Error("expected exactly one of a tangle or --diagram");
  }
  RationalTangle tangle() const { return parse_tangle_notation(notation); }
  PlanarTangleDiagram diagram() const { return diagram_from_json(read_file(diagram_path)); }
};

void add_tangle_input(CLI::App* sub, TangleInput& in) {
  sub->add_option("tangle", in.notation, "tangle notation such as \"[3 2 -3]\"");
  sub->add_option("--diagram", in.diagram_path, "diagram JSON file");
}

// Positional inputs beyond the first arrive as extras so that CLI11 does not
// read "[a b]" as its own list syntax.
std::vector<std::string> with_extras(std::vector<std::string> inputs, const CLI::App& app) {
  for (auto& x : app.remaining(true)) {
    if (x.size() > 1 && x[0] == '-' && !std::isdigit(static_cast<unsigned char>(x[1])))
      throw Error("unknown option " + x);
    inputs.push_back(x);
  }
  return inputs;
}

json invariant_json(const BracketVec2& v, const std::optional<RationalTangle>& t) {
  json j;
  auto r = ratio_invariant(v);
  j["R"] = r ? r->to_string() : "inf";
  const ExtRational c = c_invariant(v);
  j["C"] = c.to_string();
  if (t) {
    const ExtRational f = t->fraction();
    j["F"] = f.to_string();
    j["C_equals_F"] = c == f;
  }
  return j;
}

json oracle_check(int budget, int count, std::uint64_t seed, int& failures) {
  std::mt19937_64 rng(seed);
  TwistVectorSampler sample;
  sample.max_crossings = budget;
  StateSumOptions opt;
  opt.max_crossings = budget;
  std::vector<TwistVector> cases;
  for (int i = 0; i < count; ++i) cases.push_back(sample(rng));
  std::vector<std::string> bad(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const RationalTangle t = build_rational(cases[i]);
    const PlanarTangleDiagram d = rational_to_diagram(t);
    if (bracket_vector(t) != oracle_bracket(d, opt))
      bad[i] = "bracket";
    else if (closure_bracket(t) != closure_bracket(d, opt))
      bad[i] = "closure";
  }
  json j;
  j["checked"] = count;
  j["max_crossings"] = budget;
  j["seed"] = seed;
  json fails = json::array();
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (!bad[i].empty()) fails.push_back(cases[i].to_string() + " " + bad[i]);
  failures = static_cast<int>(fails.size());
  j["failures"] = fails;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Globals g;
  CLI::App app{"Invariants of rational tangles and their solid torus closures", "tanglekit"};
  app.require_subcommand(1);
  app.add_option("--n", g.n, "color")->check(CLI::PositiveNumber);
  app.add_option("--max-crossings", g.max_crossings, "oracle crossing budget")->check(CLI::PositiveNumber);
  auto* text_flag = app.add_flag("--text", g.text, "human readable output");
  app.add_flag("--json", "JSON output (default)")->excludes(text_flag);
  app.add_option("--basis", g.basis, "basis listed first")->check(CLI::IsMember({"z", "chebyshev"}));
  // Global flags may also follow the subcommand.
  app.fallthrough();
  app.allow_extras();
  bool multi = false;

  std::function<int()> action;
  std::vector<std::string> many;
  std::string a, b;
  TangleInput tin;
  int count = 100;
  std::uint64_t seed = 1;

  auto opt = [&] {
    StateSumOptions o;
    o.max_crossings = g.max_crossings;
    return o;
  };
  auto done = [&](const json& j) {
    emit(j, g, out);
    return 0;
  };

  auto* fraction = app.add_subcommand("fraction", "fraction and parity of a tangle");
  fraction->add_option("tangles", many, "tangle notation")->required()->allow_extra_args(false);
  fraction->allow_extras();
  fraction->callback([&] {
    multi = true;
    action = [&] { return done(fan_out(with_extras(many, app), [](const std::string& s) { return fraction_json(parse_tangle_notation(s).fraction()); })); };
  });

  auto* canonical = app.add_subcommand("canonical", "canonical twist vector of a fraction or tangle");
  canonical->add_option("inputs", many, "fraction or tangle")->required()->allow_extra_args(false);
  canonical->allow_extras();
  canonical->callback([&] {
    multi = true;
    action = [&] {
      return done(fan_out(with_extras(many, app), [](const std::string& s) {
        const ExtRational r = fraction_arg(s);
        json j;
        j["fraction"] = frac_text(r);
        j["canonical"] = r.is_infinite() ? RationalTangle::infinity().to_string() : canonical_form(r).to_string();
        return j;
      }));
    };
  });

  auto* par = app.add_subcommand("parity", "parity class of a fraction or tangle");
  par->add_option("inputs", many, "fraction or tangle")->required()->allow_extra_args(false);
  par->allow_extras();
  par->callback([&] {
    multi = true;
    action = [&] {
      return done(fan_out(with_extras(many, app), [](const std::string& s) {
        const ExtRational r = fraction_arg(s);
        json j;
        j["fraction"] = frac_text(r);
        j["parity"] = to_string(parity(r));
        return j;
      }));
    };
  });

  auto* schubert = app.add_subcommand("schubert", "isotopy of numerator closures (exit 0 iff equivalent)");
  schubert->add_option("a", a)->required();
  schubert->add_option("b", b)->required();
  schubert->callback([&] {
    action = [&] {
      const ExtRational x = fraction_arg(a), y = fraction_arg(b);
      json j;
      j["fractions"] = {frac_text(x), frac_text(y)};
      const bool eq = schubert_equivalent(x, y);
      j["equivalent"] = eq;
      emit(j, g, out);
      return eq ? 0 : 1;
    };
  });

  auto* bracket = app.add_subcommand("bracket", "bracket coordinates in the basis [inf], [0]");
  add_tangle_input(bracket, tin);
  bracket->callback([&] {
    action = [&] {
      tin.require();
      return done(bracket_json(tin.is_diagram() ? oracle_bracket(tin.diagram(), opt()) : bracket_vector(tin.tangle())));
    };
  });

  auto* invariant = app.add_subcommand("invariant", "ratio invariant R and arithmetic invariant C");
  add_tangle_input(invariant, tin);
  invariant->callback([&] {
    action = [&] {
      tin.require();
      if (tin.is_diagram()) return done(invariant_json(oracle_bracket(tin.diagram(), opt()), std::nullopt));
      const RationalTangle t = tin.tangle();
      return done(invariant_json(bracket_vector(t), t));
    };
  });

  auto* closure = app.add_subcommand("closure", "bracket of the solid torus closure");
  add_tangle_input(closure, tin);
  closure->callback([&] {
    action = [&] {
      tin.require();
      if (tin.is_diagram()) return done(annulus_json(closure_bracket(tin.diagram(), opt()), g.basis));
      const RationalTangle t = tin.tangle();
      json j;
      j["fraction"] = frac_text(t.fraction());
      j.update(annulus_json(closure_bracket(t), g.basis));
      return done(j);
    };
  });

  auto* equiv = app.add_subcommand("equiv", "isotopy of solid torus closures (exit 0 iff equivalent)");
  equiv->add_option("a", a)->required();
  equiv->add_option("b", b)->required();
  equiv->callback([&] {
    action = [&] {
      const SolidTorusRationalLink x{parse_tangle_notation(a)}, y{parse_tangle_notation(b)};
      const bool eq = links_equivalent(x, y);
      json j;
      j["fractions"] = {frac_text(link_fraction(x)), frac_text(link_fraction(y))};
      j["equivalent"] = eq;
      j["closures"] = {annulus_json(closure_bracket(x.source), g.basis), annulus_json(closure_bracket(y.source), g.basis)};
      emit(j, g, out);
      return eq ? 0 : 1;
    };
  });

  auto* classify = app.add_subcommand("classify", "fraction, parity, connectivity and homotopy type");
  classify->add_option("tangles", many, "tangle notation")->required()->allow_extra_args(false);
  classify->allow_extras();
  classify->callback([&] {
    multi = true;
    action = [&] {
      return done(fan_out(with_extras(many, app), [&](const std::string& s) {
        const RationalTangle t = parse_tangle_notation(s);
        const ExtRational f = t.fraction();
        json j;
        j["tangle"] = t.to_string();
        j["fraction"] = frac_text(f);
        j["parity"] = to_string(parity(f));
        j["connectivity"] = to_string(connectivity(rational_to_diagram(t)));
        j["homotopy_type"] = to_string(homotopy_type(SolidTorusRationalLink{t}));
        j.update(annulus_json(closure_bracket(t), g.basis));
        return j;
      }));
    };
  });

  auto* colored = app.add_subcommand("colored", "colored skein coordinates gamma_i and ratios CR^i");
  add_tangle_input(colored, tin);
  colored->callback([&] {
    action = [&] {
      tin.require();
      const auto gam = tin.is_diagram() ? colored_expand(tin.diagram(), g.n, opt()) : colored_expand(tin.tangle(), g.n);
      json j;
      j["n"] = g.n;
      json gj = json::array(), cj = json::array();
      for (const auto& x : gam) gj.push_back(x.to_string());
      j["gamma"] = gj;
      const ColoredRatios cr = colored_ratios(gam);
      for (const auto& x : cr.ratios) cj.push_back(x.to_string());
      j["CR"] = cj;
      j["normalizer"] = cr.normalizer;
      j["flagged"] = cr.flagged;
      return done(j);
    };
  });

  auto* cclosure = app.add_subcommand("colored-closure", "colored bracket of the solid torus closure");
  add_tangle_input(cclosure, tin);
  cclosure->callback([&] {
    action = [&] {
      tin.require();
      const AnnulusElement e =
          tin.is_diagram() ? colored_closure(tin.diagram(), g.n, opt()) : colored_closure(tin.tangle(), g.n);
      json j;
      j["n"] = g.n;
      j.update(annulus_json(e, g.basis));
      json rj = json::array();
      for (const auto& x : gamma_ratio_invariants(e)) rj.push_back(x.to_string());
      j["Gamma_ratios"] = rj;
      return done(j);
    };
  });

  auto* oracle = app.add_subcommand("oracle-check", "compare transfer matrices with the state sum oracle");
  oracle->add_option("--count", count, "number of random tangles")->check(CLI::NonNegativeNumber);
  oracle->add_option("--seed", seed, "random seed");
  oracle->callback([&] {
    action = [&] {
      int failures = 0;
      emit(oracle_check(g.max_crossings, count, seed, failures), g, out);
      return failures == 0 ? 0 : 1;
    };
  });

  auto* render = app.add_subcommand("render-ascii", "text picture of the twist regions");
  render->add_option("tangle", a)->required();
  render->callback([&] {
    action = [&] {
      out << render_ascii(parse_tangle_notation(a));
      return 0;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (!multi && !app.remaining(true).empty()) throw Error("unexpected argument " + app.remaining(true).front());
    return action ? action() : 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(json{{"error", e.what()}}, Globals{}, out);
    return 2;
  } catch (const std::exception& e) {
    emit(json{{"error", e.what()}}, Globals{}, out);
    return 2;
  }
}

}  // namespace tanglekit::cli
