#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hornsys/analysis.hpp"
#include "hornsys/errors.hpp"
#include "hornsys/restriction.hpp"

using nlohmann::json;
using namespace hornsys;

namespace {

struct Options {
  long budget = kDefaultBudget;
  int trunc = 12;
  std::string format = "text";
  int jobs = 1;
  std::string system = "lattice";  // lattice | horn | nhorn
};

std::pair<IntMatrix, RatVec> parse_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.contains("B") || !j["B"].is_array() || j["B"].empty())
    throw ParseError(path + ": field \"B\" must be a nonempty array of rows");
  if (!j.contains("kappa") || !j["kappa"].is_array())
    throw ParseError(path + ": field \"kappa\" must be an array");
  int n = j["B"].size();
  int m = j["B"][0].is_array() ? static_cast<int>(j["B"][0].size()) : -1;
  if (m <= 0) throw ParseError(path + ": rows of \"B\" must be nonempty arrays");
  IntMatrix B(n, m);
  for (int i = 0; i < n; ++i) {
    const auto& row = j["B"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw ParseError(path + ": row " + std::to_string(i + 1) + " of \"B\" is ragged");
    for (int k = 0; k < m; ++k) {
      if (!row[k].is_number_integer())
        throw ParseError(path + ": B[" + std::to_string(i + 1) + "][" +
                         std::to_string(k + 1) + "] is not an integer");
      B.at(i, k) = Int(row[k].get<long>());
    }
  }
  RatVec kappa;
  for (const auto& v : j["kappa"]) {
    if (v.is_string())
      kappa.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer())
      kappa.push_back(Rational(v.get<long>()));
    else
      throw ParseError(path + ": kappa entries must be strings like \"p/q\" or integers");
  }
  if (static_cast<int>(kappa.size()) != n)
    throw ShapeMismatch(path + ": kappa length " + std::to_string(kappa.size()) +
                        " does not match row count " + std::to_string(n));
  return {B, kappa};
}

DIdeal pick_system(const HornData& d, const std::string& which) {
  if (which == "horn") return build_horn(d);
  if (which == "nhorn") return build_nhorn(d);
  return build_h_ideal(d);
}

json gens_json(const std::vector<WeylOp>& gens) {
  json a = json::array();
  for (const auto& g : gens) a.push_back(to_string(g));
  return a;
}

void emit(const json& out, const Options& opt) {
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::function<void(const json&, int)> walk = [&](const json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (it.value().is_object() || it.value().is_array()) {
          std::cout << pad << it.key() << ":\n";
          walk(it.value(), indent + 2);
        } else {
          std::cout << pad << it.key() << ": "
                    << (it.value().is_string() ? it.value().get<std::string>()
                                               : it.value().dump())
                    << "\n";
        }
      }
    } else if (v.is_array()) {
      for (const auto& e : v) {
        if (e.is_object() || e.is_array()) {
          walk(e, indent + 2);
        } else {
          std::cout << pad << "- "
                    << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      }
    }
  };
  walk(out, 0);
}

json flags_json(const HornData& d) {
  return {{"full_rank_m", d.flags.full_rank_m},
          {"no_nonneg_kernel_vector", d.flags.no_nonneg_kernel_vector},
          {"has_identity_top_block", d.flags.has_identity_top_block},
          {"has_identity_anywhere", d.flags.has_identity_anywhere},
          {"kappa_zero_on_identity_rows", d.flags.kappa_zero_on_identity_rows},
          {"top_m_rows_rank_m", d.flags.top_m_rows_rank_m}};
}

int cmd_validate(const HornData& d, const Options& opt) {
  json out;
  out["n"] = d.n;
  out["m"] = d.m;
  out["d"] = d.d;
  out["flags"] = flags_json(d);
  json A = json::array();
  for (int i = 0; i < d.A.rows; ++i) {
    json row = json::array();
    for (int k = 0; k < d.A.cols; ++k) row.push_back(d.A.at(i, k).get_str());
    A.push_back(row);
  }
  out["gale_dual"] = A;
  json beta = json::array();
  for (const auto& b : d.beta) beta.push_back(to_string(b));
  out["beta"] = beta;
  if (d.kernel.exists) {
    json w = json::array();
    for (const auto& c : d.kernel.coeffs) w.push_back(to_string(c));
    out["nonneg_kernel_witness"] = w;
  }
  emit(out, opt);
  return 0;
}

int cmd_construct(const HornData& d, const Options& opt) {
  json out;
  out["lattice_system"] = gens_json(build_h_ideal(d).generators);
  try {
    out["horn"] = gens_json(build_horn(d).generators);
  } catch (const HypothesisViolated& e) {
    out["horn"] = json{{"skipped", e.what()}};
  }
  try {
    out["nhorn"] = gens_json(build_nhorn(d).generators);
  } catch (const NotNormalized& e) {
    out["nhorn"] = json{{"skipped", e.what()}};
  }
  emit(out, opt);
  return 0;
}

int cmd_rank(const HornData& d, const Options& opt) {
  RankVerdict r = holonomic_rank(pick_system(d, opt.system), opt.budget);
  json out;
  out["system"] = opt.system;
  if (r.kind == RankVerdict::Kind::Finite) {
    out["rank"] = r.value;
    json mons = json::array();
    std::vector<std::string> names;
    for (int i = 1; i <= (opt.system == "lattice" ? d.n : d.m); ++i)
      names.push_back("dx" + std::to_string(i));
    for (const auto& mo : r.std_monomials) {
      CPoly p(mo.size());
      p.add_term(mo, 1);
      mons.push_back(to_string(p, names));
    }
    out["standard_monomials"] = mons;
  } else {
    out["rank"] = "infinite";
  }
  emit(out, opt);
  return r.kind == RankVerdict::Kind::Finite ? 0 : 1;
}

int cmd_holonomic(const HornData& d, const Options& opt) {
  DIdeal I = pick_system(d, opt.system);
  json out;
  out["system"] = opt.system;
  int rc;
  try {
    int dim = char_dimension(I, opt.budget);
    out["char_dimension"] = dim;
    out["ambient"] = I.n;
    bool hol = dim == I.n;
    out["holonomic"] = hol;
    rc = hol ? 0 : 1;
  } catch (const ImproperIdeal&) {
    out["holonomic"] = "zero module";
    rc = 1;
  }
  emit(out, opt);
  return rc;
}

int cmd_regular(const HornData& d, const Options& opt) {
  bool reg = regularity_row_sum(d);
  json sums = json::array();
  for (const auto& s : row_sums(d.B)) sums.push_back(s.get_str());
  json out = {{"row_sums", sums}, {"regular_candidate", reg}};
  emit(out, opt);
  return reg ? 0 : 1;
}

int cmd_bcert(const HornData& d, const Options& opt) {
  auto certs = bfunction_divides_s_certificate(d, opt.budget);
  json out;
  json list = json::array();
  for (const auto& c : certs) {
    json nu = json::array();
    for (const auto& v : c.nu) nu.push_back(to_string(v));
    list.push_back({{"j", c.j},
                    {"nu", nu},
                    {"member", to_string(c.witness)},
                    {"initial_form", to_string(c.initial_form)}});
  }
  out["certificates"] = list;
  out["b_function_divides_s"] = true;
  emit(out, opt);
  return 0;
}

int cmd_restrict(const HornData& d, const Options& opt) {
  auto gens = restriction_via_elimination(d, opt.budget);
  json out = {{"restriction_generators", gens_json(gens)}};
  emit(out, opt);
  return 0;
}

const char* verdict_name(EqualityVerdict v) {
  switch (v) {
    case EqualityVerdict::Equal: return "equal";
    case EqualityVerdict::LeftNotContained: return "left-not-contained";
    case EqualityVerdict::RightNotContained: return "right-not-contained";
    default: return "inconclusive";
  }
}

int cmd_verify(const HornData& d, const Options& opt) {
  RestrictionReport rep = verify_restriction_theorem(d, opt.budget);
  json out;
  out["verdict"] = verdict_name(rep.equality.verdict);
  if (rep.equality.witness) out["witness"] = to_string(*rep.equality.witness);
  out["routes_agree"] = rep.routes_agree;
  out["restriction_generators"] = gens_json(rep.intersection_generators);
  out["nhorn_generators"] = gens_json(build_nhorn(d).generators);
  emit(out, opt);
  if (rep.equality.verdict == EqualityVerdict::Equal && rep.routes_agree) return 0;
  if (rep.equality.verdict == EqualityVerdict::Inconclusive) return 2;
  return 1;
}

int cmd_cor16(const HornData& d, const Options& opt) {
  ConsistencyReport rep = holonomicity_consistency(d, opt.budget);
  json out = {{"lattice_char_dim", rep.h_char_dim},
              {"lattice_holonomic", rep.h_holonomic},
              {"nhorn_char_dim", rep.nhorn_char_dim},
              {"nhorn_holonomic", rep.nhorn_holonomic},
              {"verdicts_agree", rep.agree}};
  emit(out, opt);
  return rep.agree ? 0 : 1;
}

int cmd_correspondence(const HornData& d, const Options& opt) {
  CorrespondenceReport rep = verify_solution_correspondence(d, opt.trunc);
  json out = {{"pass", rep.pass}, {"skipped", rep.skipped}};
  if (!rep.detail.empty()) out["detail"] = rep.detail;
  emit(out, opt);
  if (rep.skipped) return 2;
  return rep.pass ? 0 : 1;
}

int cmd_report(const HornData& d, const Options& opt) {
  // one pass over everything that applies; failures are recorded, not fatal
  json out;
  out["n"] = d.n;
  out["m"] = d.m;
  out["flags"] = flags_json(d);
  out["regular_candidate"] = regularity_row_sum(d);
  out["a_homogeneous"] = check_a_homogeneous(build_h_ideal(d), d.A);
  auto guarded = [&](const char* key, auto fn) {
    try {
      out[key] = fn();
    } catch (const std::exception& e) {
      out[key] = json{{"error", e.what()}};
    }
  };
  guarded("lattice_char_dim",
          [&] { return json(char_dimension(build_h_ideal(d), opt.budget)); });
  guarded("rank", [&] {
    RankVerdict r = holonomic_rank(pick_system(d, opt.system), opt.budget);
    return r.kind == RankVerdict::Kind::Finite ? json(r.value) : json("infinite");
  });
  guarded("restriction_verdict", [&] {
    RestrictionReport rep = verify_restriction_theorem(d, opt.budget);
    return json(verdict_name(rep.equality.verdict));
  });
  guarded("correspondence", [&] {
    CorrespondenceReport rep = verify_solution_correspondence(d, opt.trunc);
    return json{{"pass", rep.pass}, {"skipped", rep.skipped}, {"detail", rep.detail}};
  });
  emit(out, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of hypergeometric systems built from integer data"};
  app.require_subcommand(1);

  Options opt;
  std::string input;
  app.add_option("--budget", opt.budget, "S-pair limit for Groebner runs");
  app.add_option("--trunc", opt.trunc, "series truncation order");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", opt.jobs, "max concurrent analyses");
  app.add_option("--system", opt.system, "which ideal rank/holonomic act on")
      ->check(CLI::IsMember({"lattice", "horn", "nhorn"}));

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const HornData&, const Options&);
  };
  const Cmd cmds[] = {
      {"validate", "check hypotheses and print derived data", cmd_validate},
      {"construct", "print all system generators", cmd_construct},
      {"rank", "holonomic rank", cmd_rank},
      {"holonomic", "characteristic dimension test", cmd_holonomic},
      {"regular", "row-sum regularity criterion", cmd_regular},
      {"bfunction-cert", "restriction b-function divides s", cmd_bcert},
      {"restrict", "restriction ideal by elimination", cmd_restrict},
      {"verify-thm15", "restriction equals the normalized system", cmd_verify},
      {"check-cor16", "holonomicity verdicts agree", cmd_cor16},
      {"check-correspondence", "series solution transport check", cmd_correspondence},
      {"report", "run every applicable analysis", cmd_report},
  };
  std::map<std::string, const Cmd*> by_name;
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("input", input, "input JSON file")->required();
    by_name[c.name] = &c;
  }

  CLI11_PARSE(app, argc, argv);
  const Cmd* cmd = by_name.at(app.get_subcommands()[0]->get_name());

  try {
    auto [B, kappa] = parse_input(input);
    HornData data = validate(B, kappa);
    return cmd->run(data, opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const RankDeficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisViolated& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 1;
  } catch (const NotNormalized& e) {
    std::cerr << "not normalized: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
