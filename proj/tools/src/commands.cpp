#include "commands.hpp"

#include "specs.hpp"

#include "hmf/branch_rules.hpp"
#include "hmf/classifier.hpp"
#include "hmf/errors.hpp"
#include "hmf/freudenthal.hpp"
#include "hmf/restricted_weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace hmf::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string out;
  std::int64_t cap = kDefaultDimensionCap;
  int jobs = 1;
  bool halved = false;
  int bound_classical = 6;
  int bound_exceptional = 2;
};

struct Outcome {
  json body;
  int code = kOk;
};

using Action = std::function<Outcome()>;

json multiset_json(const BranchingMultiset& bm) {
  json list = json::array();
  for (const auto& [hw, m] : bm.entries()) list.push_back({{"highest", key_string(hw)}, {"multiplicity", m}});
  return list;
}

json sectored_json(const SectoredMultiset& sm) {
  json list = json::array();
  for (const auto& [key, m] : sm)
    list.push_back({{"sector", key.first}, {"highest", key_string(key.second)}, {"multiplicity", m}});
  return list;
}

json branching_body(const char* rule, const BranchingMultiset& bm) {
  return {{"rule", rule},
          {"constituents", multiset_json(bm)},
          {"count", bm.size()},
          {"multiplicity_free", bm.max_multiplicity() <= 1}};
}

json witness_json(const HermitianPair& pair, const std::optional<Witness>& w) {
  if (!w) return nullptr;
  const int scale = build_m_model(pair).reductive.scale();
  return {{"sector", w->sector},
          {"highest", key_string(w->highest)},
          {"highest_plain", format_plain(w->highest, scale)},
          {"multiplicity", w->multiplicity}};
}

int bound_for(const Globals& g, const HermitianPair& pair, std::optional<int> bound) {
  if (bound) return *bound;
  return pair.family == Family::E6 || pair.family == Family::E7 ? g.bound_exceptional : g.bound_classical;
}

std::string reproduce(const Globals& g, const HermitianPair& pair, const KRepresentation& tau) {
  const TauSpec spec = tau_spec(pair, tau);
  std::string cmd = "hmf mf " + pair.name() + " --tau " + spec.text;
  if (spec.halved) cmd += " --halved";
  if (g.cap != kDefaultDimensionCap) cmd += " --cap " + std::to_string(g.cap);
  return cmd;
}

json tau_json(const HermitianPair& pair, const KRepresentation& tau) {
  const TauSpec spec = tau_spec(pair, tau);
  return {{"spec", spec.text}, {"halved", spec.halved}, {"pretty", format_krep(pair, tau)}};
}

void add_weights(CLI::App& app, const Globals& g, Action& action) {
  auto* cmd = app.add_subcommand("weights", "Weight multiplicities of an irreducible representation");
  auto datum = std::make_shared<std::string>();
  auto weight = std::make_shared<std::string>();
  cmd->add_option("datum", *datum, "gl:n, so:n, sp:n, spin:n or e6")->required();
  cmd->add_option("weight", *weight, "Highest weight: coordinates or fundamental-weight terms")->required();
  cmd->callback([&g, &action, datum, weight] {
    action = [&g, datum, weight] {
      const RootDatum d = parse_datum(*datum);
      const Weight hw = parse_weight(d, *weight, g.halved);
      const FormalCharacter ch = freudenthal_character(d, hw, g.cap);
      json weights = json::object();
      for (const auto& [w, m] : ch.terms()) weights[key_string(w)] = m;
      return Outcome{{{"datum", d.name()},
                      {"highest", format_plain(hw, d.scale())},
                      {"scale", d.scale()},
                      {"dimension", ch.total()},
                      {"weights", weights}}};
    };
  });
}

void add_dim(CLI::App& app, const Globals& g, Action& action) {
  auto* cmd = app.add_subcommand("dim", "Weyl dimension of an irreducible representation");
  auto datum = std::make_shared<std::string>();
  auto weight = std::make_shared<std::string>();
  cmd->add_option("datum", *datum, "gl:n, so:n, sp:n, spin:n or e6")->required();
  cmd->add_option("weight", *weight, "Highest weight")->required();
  cmd->callback([&g, &action, datum, weight] {
    action = [&g, datum, weight] {
      const RootDatum d = parse_datum(*datum);
      const Weight hw = parse_weight(d, *weight, g.halved);
      if (!is_dominant(d, hw)) throw ShapeError(format_plain(hw, d.scale()) + " is not dominant for " + d.name());
      return Outcome{
          {{"datum", d.name()}, {"highest", format_plain(hw, d.scale())}, {"dimension", weyl_dim(d, hw)}}};
    };
  });
}

void add_branch(CLI::App& app, const Globals& g, Action& action) {
  auto* branch = app.add_subcommand("branch", "Closed-form branching rules");
  branch->require_subcommand(1);

  {
    auto* cmd = branch->add_subcommand("gl-levi", "GL(r+b) -> GL(1)^r x GL(b)");
    auto datum = std::make_shared<std::string>();
    auto weight = std::make_shared<std::string>();
    auto r = std::make_shared<int>(0);
    auto b = std::make_shared<int>(0);
    cmd->add_option("datum", *datum, "gl:n")->required();
    cmd->add_option("weight", *weight, "Highest weight")->required();
    cmd->add_option("--r", *r, "Number of GL(1) factors")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--b", *b, "Size of the GL(b) block")->required()->check(CLI::NonNegativeNumber);
    cmd->callback([&g, &action, datum, weight, r, b] {
      action = [&g, datum, weight, r, b] {
        const RootDatum d = parse_datum(*datum);
        const Weight mu = parse_weight(d, *weight, g.halved);
        json body = branching_body("gl-levi", gl_branch_levi(mu, *r, *b));
        body["highest"] = format_plain(mu, d.scale());
        return Outcome{body};
      };
    });
  }
  {
    auto* cmd = branch->add_subcommand("lr", "GL(p+q) -> GL(p) x GL(q)");
    auto datum = std::make_shared<std::string>();
    auto weight = std::make_shared<std::string>();
    auto p = std::make_shared<int>(0);
    auto q = std::make_shared<int>(0);
    cmd->add_option("datum", *datum, "gl:n")->required();
    cmd->add_option("weight", *weight, "Highest weight")->required();
    cmd->add_option("--p", *p, "Size of the first block")->required();
    cmd->add_option("--q", *q, "Size of the second block")->required();
    cmd->callback([&g, &action, datum, weight, p, q] {
      action = [&g, datum, weight, p, q] {
        const RootDatum d = parse_datum(*datum);
        const Weight lambda = parse_weight(d, *weight, g.halved);
        json body = branching_body("lr", lr_restrict(lambda, *p, *q));
        body["highest"] = format_plain(lambda, d.scale());
        return Outcome{body};
      };
    });
  }
  {
    auto* cmd = branch->add_subcommand("so", "Spin(2k+1) -> Spin(2k) or Spin(2k) -> Spin(2k-1)");
    auto datum = std::make_shared<std::string>();
    auto weight = std::make_shared<std::string>();
    cmd->add_option("datum", *datum, "so:n or spin:n")->required();
    cmd->add_option("weight", *weight, "Highest weight")->required();
    cmd->callback([&g, &action, datum, weight] {
      action = [&g, datum, weight] {
        const RootDatum d = parse_datum(*datum);
        const FactorType t = d.factors().front().type;
        if (t != FactorType::B && t != FactorType::D) throw ShapeError("branch so needs so:n or spin:n");
        const Weight mu = parse_weight(d, *weight, g.halved);
        json body = branching_body("so", so_branch_step(mu, t == FactorType::B));
        body["highest"] = format_plain(mu, d.scale());
        return Outcome{body};
      };
    });
  }
  {
    auto* cmd = branch->add_subcommand("su2", "S^m(C^2r) over SU(2)^r");
    auto m = std::make_shared<int>(0);
    auto r = std::make_shared<int>(0);
    cmd->add_option("--m", *m, "Symmetric degree")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--r", *r, "Number of SU(2) factors")->required()->check(CLI::PositiveNumber);
    cmd->callback([&action, m, r] {
      action = [m, r] { return Outcome{branching_body("su2", su2_blocks_symmetric(*m, *r))}; };
    });
  }
}

void add_mf(CLI::App& app, const Globals& g, Action& action) {
  auto* cmd = app.add_subcommand("mf", "Is tau restricted to M multiplicity-free?");
  auto pair_spec = std::make_shared<std::string>();
  auto tau_text = std::make_shared<std::string>();
  auto show = std::make_shared<bool>(false);
  cmd->add_option("pair", *pair_spec, "A:r=R,b=B, C:n, Cmp:n, D:n, BD:n, BDspin:n, E6 or E7")->required();
  cmd->add_option("--tau", *tau_text, "Representation of K")->required();
  cmd->add_flag("--decomposition", *show, "Include the full decomposition of tau|M");
  cmd->callback([&g, &action, pair_spec, tau_text, show] {
    action = [&g, pair_spec, tau_text, show] {
      const HermitianPair pair = HermitianPair::parse(*pair_spec);
      const KRepresentation tau = parse_tau(pair, *tau_text, g.halved);
      const MfResult r = mf_check(pair, tau, g.cap);
      const bool expected = theorem_list_contains(pair, tau);
      json body = {{"pair", pair.name()},
                   {"tau", tau_json(pair, tau)},
                   {"dimension", r.dimension},
                   {"verdict", r.multiplicity_free},
                   {"expected", expected},
                   {"witness", witness_json(pair, r.witness)}};
      if (*show) body["decomposition"] = sectored_json(m_decomposition(pair, tau, g.cap));
      return Outcome{body, r.multiplicity_free == expected ? kOk : kDisagreement};
    };
  });
}

void add_classify(CLI::App& app, const Globals& g, Action& action) {
  auto* cmd = app.add_subcommand("classify", "Compare verdicts with the classification list");
  auto pair_spec = std::make_shared<std::string>();
  auto bound = std::make_shared<std::optional<int>>();
  cmd->add_option("pair", *pair_spec, "Pair spec")->required();
  cmd->add_option("--bound", *bound, "Enumeration bound (default by family)")->check(CLI::NonNegativeNumber);
  cmd->callback([&g, &action, pair_spec, bound] {
    action = [&g, pair_spec, bound] {
      const HermitianPair pair = HermitianPair::parse(*pair_spec);
      ClassifierOptions options;
      options.dimension_cap = g.cap;
      options.jobs = g.jobs;
      const ClassifyReport report = classify_range(pair, bound_for(g, pair, *bound), options);
      json disagreements = json::array();
      for (const auto& d : report.disagreements)
        disagreements.push_back({{"tau", tau_json(pair, d.tau)},
                                 {"verdict", d.verdict},
                                 {"expected", d.expected},
                                 {"witness", witness_json(pair, d.witness)},
                                 {"reproduce", reproduce(g, pair, d.tau)}});
      json body = {{"pair", pair.name()},
                   {"bound", report.bound},
                   {"total", report.total},
                   {"agree", report.agree},
                   {"disagreements", disagreements}};
      return Outcome{body, report.disagreements.empty() ? kOk : kDisagreement};
    };
  });
}

void add_cross_validate(CLI::App& app, const Globals& g, Action& action) {
  auto* cmd = app.add_subcommand("cross-validate", "Closed-form branching against the character route");
  auto pair_spec = std::make_shared<std::string>();
  auto tau_text = std::make_shared<std::string>();
  auto bound = std::make_shared<std::optional<int>>();
  cmd->add_option("pair", *pair_spec, "Pair spec of type A, C, Cmp or D")->required();
  auto* tau_opt = cmd->add_option("--tau", *tau_text, "Check a single representation");
  cmd->add_option("--bound", *bound, "Check every representative up to this bound")->excludes(tau_opt);
  cmd->callback([&g, &action, pair_spec, tau_text, bound] {
    action = [&g, pair_spec, tau_text, bound] {
      const HermitianPair pair = HermitianPair::parse(*pair_spec);
      std::vector<KRepresentation> taus;
      if (!tau_text->empty()) {
        taus.push_back(parse_tau(pair, *tau_text, g.halved));
      } else {
        taus = enumerate_dominant(pair, bound_for(g, pair, *bound));
      }
      json mismatches = json::array();
      for (const auto& tau : taus) {
        const SectoredMultiset closed = closed_form_decomposition(pair, tau);
        const SectoredMultiset character = m_decomposition(pair, tau, g.cap);
        if (closed != character)
          mismatches.push_back(
              {{"tau", tau_json(pair, tau)}, {"closed_form", sectored_json(closed)}, {"character", sectored_json(character)}});
      }
      json body = {{"pair", pair.name()}, {"checked", taus.size()}, {"mismatches", mismatches}};
      return Outcome{body, mismatches.empty() ? kOk : kDisagreement};
    };
  });
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw ParseError("expected an integer, got '" + item + "'", pos);
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

void add_weyl_orbit(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("weyl-orbit", "Orbits of the restricted Weyl group W(BC_r)");
  auto rank = std::make_shared<int>(0);
  auto nu = std::make_shared<std::string>();
  auto sigma = std::make_shared<std::string>();
  auto pair_spec = std::make_shared<std::string>();
  auto count = std::make_shared<bool>(false);
  cmd->add_option("--rank", *rank, "Rank r")->required()->check(CLI::Range(1, 8));
  auto* nu_opt = cmd->add_option("--nu", *nu, "Spectral parameter: rationals or multiples of x1, x2, ...");
  cmd->add_option("--sigma", *sigma, "M-labels (type C pairs)")->needs(nu_opt);
  cmd->add_option("--pair", *pair_spec, "Pair acting on sigma (default C:<rank>)");
  cmd->add_flag("--count-group", *count, "Print the group order only")->excludes(nu_opt);
  cmd->callback([&action, rank, nu, sigma, pair_spec, count] {
    action = [rank, nu, sigma, pair_spec, count] {
      if (*count) return Outcome{{{"rank", *rank}, {"group_order", generate_weyl(*rank).size()}}};
      if (nu->empty()) throw ShapeError("weyl-orbit needs --nu or --count-group");
      SpectralParameter p;
      p.nu = parse_nu(*nu);
      std::optional<HermitianPair> pair;
      if (!sigma->empty()) {
        p.sigma = parse_int_list(*sigma);
        pair = HermitianPair::parse(pair_spec->empty() ? "C:" + std::to_string(*rank) : *pair_spec);
      }
      const auto points = orbit(*rank, p, pair ? &*pair : nullptr);
      json list = json::array();
      for (const auto& q : points) {
        json entry;
        json coords = json::array();
        for (const auto& e : q.nu) coords.push_back(format_nu_entry(e));
        entry["nu"] = coords;
        if (q.sigma) entry["sigma"] = *q.sigma;
        list.push_back(entry);
      }
      return Outcome{{{"rank", *rank}, {"size", points.size()}, {"points", list}}};
    };
  });
}

void add_rho_a(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("rho-a", "Restricted root data of a pair");
  auto pair_spec = std::make_shared<std::string>();
  cmd->add_option("pair", *pair_spec, "Pair spec")->required();
  cmd->callback([&action, pair_spec] {
    action = [pair_spec] {
      const HermitianPair pair = HermitianPair::parse(*pair_spec);
      const RestrictedWeylData data = restricted_weyl_data(pair);
      const RootMultiplicities m = restricted_root_multiplicities(pair);
      json rho = json::array();
      for (const auto& q : rho_a(pair)) rho.push_back(format_nu_entry({q, -1}));
      return Outcome{{{"pair", pair.name()},
                      {"rank", data.rank},
                      {"restricted_type", data.type == RestrictedType::BC ? "BC" : "C"},
                      {"multiplicities", {{"e_i+-e_j", m.pair}, {"e_i", m.single}, {"2e_i", m.twice}}},
                      {"rho_a", rho},
                      {"dim_p", dim_p(pair)}}};
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact branching and multiplicity-freeness checks for Hermitian symmetric pairs", "hmf"};
  app.set_config("--config", "", "Read options from an INI or TOML file");
  app.allow_config_extras(CLI::config_extras_mode::ignore);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--out", g.out, "Write JSON to FILE instead of stdout");
  app.add_option("--cap", g.cap, "Largest representation dimension to expand")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads for classify")->capture_default_str()->check(CLI::Range(1, 256));
  app.add_flag("--halved", g.halved, "Read explicit coordinates in units of 1/2");
  app.add_option("--bound-classical", g.bound_classical, "Default classify bound for classical pairs")
      ->capture_default_str();
  app.add_option("--bound-exceptional", g.bound_exceptional, "Default classify bound for E6 and E7")
      ->capture_default_str();

  Action action;
  add_weights(app, g, action);
  add_dim(app, g, action);
  add_branch(app, g, action);
  add_mf(app, g, action);
  add_classify(app, g, action);
  add_cross_validate(app, g, action);
  add_weyl_orbit(app, action);
  add_rho_a(app, action);

  std::vector<const char*> argv{"hmf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    const Outcome result = action();
    const std::string text = result.body.dump(2) + "\n";
    if (g.out.empty()) {
      out << text;
    } else {
      std::ofstream file(g.out, std::ios::binary);
      if (!(file << text)) {
        err << "error: cannot write " << g.out << "\n";
        return kFailure;
      }
    }
    return result.code;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "; raise --cap to expand it\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kFailure;
}

}  // namespace hmf::cli
