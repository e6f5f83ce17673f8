#include "counit/commands.hpp"

#include <chrono>
#include <sstream>

#include "counit/cache.hpp"
#include "counit/cogroupoid.hpp"
#include "counit/homology.hpp"

namespace counit {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Report* rep;
  std::string name;
  Clock::time_point start = Clock::now();
  Timer(Report* r, std::string n) : rep(r), name(std::move(n)) {}
  ~Timer() {
    rep->timings.emplace_back(name, std::chrono::duration<double>(Clock::now() - start).count());
  }
};

std::string b2s(bool b) { return b ? "true" : "false"; }

std::string dims_str(const std::array<long, 4>& d) {
  std::ostringstream os;
  os << "(" << d[0] << "," << d[1] << "," << d[2] << "," << d[3] << ")";
  return os.str();
}

template <typename T>
std::string vec_str(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "]";
  return os.str();
}

BilinearFormHopf build_hopf(const RunConfig& cfg, int min_degree, const std::string& cache_dir,
                            Report* rep) {
  int D = std::max(cfg.truncation_degree, min_degree);
  Timer t(rep, "gb_completion");
  CacheOutcome oc;
  PresentedAlgebra A = cached_complete(Alphabet::matrix_generators(cfg.E.rows(), cfg.E.rows()),
                                       BilinearFormHopf::bilinear_relations(cfg.E), D, cache_dir,
                                       &oc);
  if (!oc.warning.empty()) {
    CheckResult w{"cache", "info", {}};
    w.add("warning", oc.warning);
    rep->results.push_back(w);
  }
  return BilinearFormHopf::wrap(cfg.E, std::move(A));
}

void cmd_gb(const RunConfig& cfg, const std::string& cache_dir, Report& rep) {
  Timer t(&rep, "total");
  CheckResult res{"gb", "pass", {}};
  if (cfg.F) {
    BEFAlgebra B = BEFAlgebra::build(cfg.E, *cfg.F, cfg.truncation_degree);
    res.add("algebra", "B(E,F)");
    res.add("zero_algebra", b2s(B.collapsed()));
    res.add("rules", std::to_string(B.algebra().rules().size()));
    res.add("max_rule_degree", std::to_string(B.algebra().max_rule_degree()));
    res.add("certified_degree", std::to_string(B.algebra().certified_degree()));
    res.add("filtration_dims", vec_str(B.algebra().filtration_dims()));
    res.add("reduction_steps", std::to_string(B.algebra().reduction_steps()));
  } else {
    BilinearFormHopf H = build_hopf(cfg, cfg.truncation_degree, cache_dir, &rep);
    res.add("algebra", "B(E)");
    res.add("rules", std::to_string(H.algebra().rules().size()));
    res.add("max_rule_degree", std::to_string(H.algebra().max_rule_degree()));
    res.add("certified_degree", std::to_string(H.algebra().certified_degree()));
    res.add("filtration_dims", vec_str(H.algebra().filtration_dims()));
    res.add("reduction_steps", std::to_string(H.algebra().reduction_steps()));
  }
  rep.results.push_back(res);
}

void cmd_verify_hopf(const RunConfig& cfg, const std::string& cache_dir, Report& rep) {
  BilinearFormHopf H = build_hopf(cfg, 2 * cfg.degree, cache_dir, &rep);
  Timer t(&rep, "verify_hopf");
  HopfAxiomReport r = H.verify_axioms(cfg.degree);
  auto push = [&](const std::string& name, bool ok) {
    CheckResult res{name, ok ? "pass" : "fail", {}};
    res.add("word_degree", std::to_string(cfg.degree));
    rep.results.push_back(res);
  };
  push("hopf.coassociativity", r.coassociativity);
  push("hopf.counit_axiom", r.counit_axiom);
  push("hopf.antipode_left", r.antipode_left);
  push("hopf.antipode_right", r.antipode_right);
  push("hopf.relations_counit", r.relations_counit);
  push("hopf.relations_antipode", r.relations_antipode);
  push("hopf.relations_comultiplication", r.relations_comultiplication);
  CheckResult info{"hopf.summary", r.all_pass() ? "pass" : "fail", {}};
  info.add("words_checked", std::to_string(r.words_checked));
  if (!r.failures.empty()) info.add("first_failure", r.failures.front());
  rep.results.push_back(info);
}

void cmd_resolution(const RunConfig& cfg, const std::string& cache_dir, Report& rep) {
  BilinearFormHopf H = build_hopf(cfg, std::max(4, cfg.degree + 2), cache_dir, &rep);
  Timer t(&rep, "resolution");
  FreeYDComplex C = build_counit_resolution(H);
  {
    CheckResult res{"resolution.assembly_matches_closed_form", "pass", {}};
    try {
      assemble_via_components(H);
    } catch (const Error& e) {
      res.status = "fail";
      res.add("error", e.what());
    }
    rep.results.push_back(res);
  }
  {
    CheckResult res{"resolution.lift_composite_relations", "pass", {}};
    if (!lift_composite_relations_hold(H)) res.status = "fail";
    rep.results.push_back(res);
  }
  ComplexCheckReport cr = check_complex_and_morphisms(C, cfg.degree);
  auto push = [&](const std::string& name, bool ok) {
    rep.results.push_back(CheckResult{name, ok ? "pass" : "fail", {}});
  };
  push("resolution.phi2_phi1_zero", cr.phi2_phi1_zero);
  push("resolution.phi3_phi2_zero", cr.phi3_phi2_zero);
  push("resolution.eps_phi3_zero", cr.eps_phi3_zero);
  push("resolution.phi1_colinear", cr.phi1_colinear);
  push("resolution.phi2_colinear", cr.phi2_colinear);
  push("resolution.phi3_colinear", cr.phi3_colinear);
  CheckResult words{"resolution.words_composite_zero", cr.words_ok ? "pass" : "fail", {}};
  words.add("words_checked", std::to_string(cr.words_checked));
  rep.results.push_back(words);
}

void cmd_exactness(const RunConfig& cfg, const std::string& cache_dir, Report& rep) {
  BilinearFormHopf H = build_hopf(cfg, cfg.degree + cfg.slack + 1, cache_dir, &rep);
  FreeYDComplex C = build_counit_resolution(H);
  std::vector<int> positions;
  if (cfg.position < 0)
    positions = {1, 2, 3};
  else
    positions = {cfg.position};
  int max_slack = std::min(cfg.slack, H.algebra().certified_degree() - cfg.degree - 1);
  for (int pos : positions) {
    Timer t(&rep, "exactness.position_" + std::to_string(pos));
    ExactnessCertificate cert = exactness_witness(C, pos, cfg.degree, max_slack);
    CheckResult res{"exactness.position_" + std::to_string(pos), cert.status, {}};
    res.add("through_degree", std::to_string(cert.through_degree));
    res.add("slack_used", std::to_string(cert.slack_used));
    res.add("kernel_dim", std::to_string(cert.kernel_dim));
    res.add("out_cols", std::to_string(cert.out_cols));
    res.add("out_rank", std::to_string(cert.out_rank));
    res.add("in_cols", std::to_string(cert.in_cols));
    if (!cert.witness.empty()) res.add("witness", cert.witness);
    rep.results.push_back(res);
  }
}

void cmd_homology(const RunConfig& cfg, const std::string& cache_dir, Report& rep) {
  BilinearFormHopf H = build_hopf(cfg, 3, cache_dir, &rep);
  Timer t(&rep, "homology");
  Character alpha = resolve_character(H, cfg.alpha);
  Character beta = resolve_character(H, cfg.beta);
  FreeYDComplex C = build_counit_resolution(H);
  HomologyDims closed = closed_form_dims(H, alpha, beta);
  HomologyDims reso = homology_dims(specialize_resolution(C, twist_gamma(H, alpha, beta)));
  bool agree = closed == reso;
  CheckResult res{"homology.character_bimodule", agree ? "pass" : "fail", {}};
  res.add("method_closed_form", dims_str(closed.h));
  res.add("method_resolution", dims_str(reso.h));
  res.add("agreement", b2s(agree));
  rep.results.push_back(res);
}

void cmd_ext(const RunConfig& cfg, const std::string& cache_dir, Report& rep) {
  BilinearFormHopf H = build_hopf(cfg, 3, cache_dir, &rep);
  Timer t(&rep, "ext");
  Character alpha = resolve_character(H, cfg.alpha);
  Character beta = resolve_character(H, cfg.beta);
  HomologyDims he = ext_dims(H, alpha, beta);
  CheckResult res{"ext.character_bimodule", "pass", {}};
  res.add("dims", dims_str(he.h));
  rep.results.push_back(res);
}

void cmd_poincare(const RunConfig& cfg, const std::string& cache_dir, Report& rep) {
  BilinearFormHopf H = build_hopf(cfg, 3, cache_dir, &rep);
  Timer t(&rep, "poincare");
  Character alpha = resolve_character(H, cfg.alpha);
  Character beta = resolve_character(H, cfg.beta);
  FreeYDComplex C = build_counit_resolution(H);
  PoincareReport pr = poincare_check(H, C, alpha, beta);
  CheckResult res{"poincare.duality", pr.pass ? "pass" : "fail", {}};
  res.add("ext_dims", dims_str(pr.ext));
  res.add("sigma_twisted_homology", dims_str(pr.twisted_homology));
  rep.results.push_back(res);
}

void cmd_bialgebra(const RunConfig& cfg, const std::string& cache_dir, Report& rep) {
  BilinearFormHopf H = build_hopf(cfg, 3, cache_dir, &rep);
  Timer t(&rep, "bialgebra_cohomology");
  FreeYDComplex C = build_counit_resolution(H);
  BialgebraCohomologyReport br = bialgebra_cohomology(H, C);
  CheckResult res{"bialgebra_cohomology", "pass", {}};
  res.add("hom_space_dims", dims_str(br.hom_dims));
  res.add("dims", dims_str(br.dims));
  rep.results.push_back(res);
}

void cmd_cogroupoid(const RunConfig& cfg, const std::string&, Report& rep) {
  if (!cfg.F) fail(errc::validation_error, "cogroupoid command needs the matrix F");
  Timer t(&rep, "cogroupoid");
  bool pre = nonvanishing_precheck(cfg.E, *cfg.F);
  {
    CheckResult res{"cogroupoid.nonvanishing_precheck", "info", {}};
    res.add("traces_match", b2s(pre));
    res.add("trace_E", trace_invariant(cfg.E).str());
    res.add("trace_F", trace_invariant(*cfg.F).str());
    rep.results.push_back(res);
  }
  int D = std::max(2, cfg.truncation_degree);
  BEFAlgebra B = BEFAlgebra::build(cfg.E, *cfg.F, D);
  {
    // A trace mismatch must be matched by a collapse within the certified
    // range (or flagged as out of range).
    CheckResult res{"cogroupoid.vanishing_consistency", "pass", {}};
    res.add("zero_algebra", b2s(B.collapsed()));
    res.add("filtration_dims", vec_str(B.algebra().filtration_dims()));
    if (pre && B.collapsed()) res.status = "fail";
    if (!pre && !B.collapsed()) {
      res.status = "info";
      res.add("note", "collapse not reached within certified range");
    }
    rep.results.push_back(res);
  }
  if (pre) {
    struct Triple {
      const FieldMatrix* third;
      const char* tag;
    };
    for (const Triple& tr : {Triple{&cfg.E, "cogroupoid.maps_E_F_E"},
                             Triple{&*cfg.F, "cogroupoid.maps_E_F_F"}}) {
      CogroupoidCheckReport cr = cogroupoid_maps_check(cfg.E, *cfg.F, *tr.third, D);
      CheckResult res{tr.tag, cr.all_pass() ? "pass" : "fail", {}};
      res.add("delta_algebra_map", b2s(cr.delta_algebra_map));
      res.add("counit_laws", b2s(cr.counit_laws));
      res.add("coassociativity", b2s(cr.coassociativity));
      res.add("antipode_left", b2s(cr.antipode_left));
      res.add("antipode_right", b2s(cr.antipode_right));
      if (!cr.failures.empty()) res.add("first_failure", cr.failures.front());
      rep.results.push_back(res);
    }
  }
}

void cmd_transport(const RunConfig& cfg, const std::string&, Report& rep) {
  if (!cfg.F) fail(errc::validation_error, "transport command needs the matrix F");
  Timer t(&rep, "transport");
  TransportReport tr = check_transport_diagrams(cfg.E, *cfg.F, std::max(1, cfg.degree));
  auto push = [&](const std::string& name, bool ok) {
    rep.results.push_back(CheckResult{name, ok ? "pass" : "fail", {}});
  };
  push("transport.phi1_diagram", tr.phi1_diagram);
  push("transport.phi2_diagram", tr.phi2_diagram);
  push("transport.phi3_diagram", tr.phi3_diagram);
  push("transport.eps_diagram", tr.eps_diagram);
  push("transport.action_consistency", tr.action_consistency);
  CheckResult info{"transport.summary", tr.all_pass() ? "pass" : "fail", {}};
  info.add("elements_checked", std::to_string(tr.elements_checked));
  rep.results.push_back(info);
}

void cmd_oracle(const RunConfig& cfg, const std::string& cache_dir, Report& rep) {
  int Dint = std::max(2, cfg.degree);
  BilinearFormHopf H = build_hopf(cfg, Dint, cache_dir, &rep);
  Timer t(&rep, "oracle");
  Character alpha = resolve_character(H, cfg.alpha);
  Character beta = resolve_character(H, cfg.beta);
  Character gamma = twist_gamma(H, alpha, beta);
  TorOracleReport orc = tor_bar_oracle(H, gamma, cfg.k_max, Dint, cfg.budget_mb);
  CheckResult res{"oracle.tor_bar", "pass", {}};
  res.add("k_max", std::to_string(orc.k_max));
  res.add("internal_degree", std::to_string(orc.D));
  res.add("dims", vec_str(orc.dims_at_D));
  res.add("dims_previous_degree", vec_str(orc.dims_at_Dminus1));
  std::vector<int> stab(orc.stabilized.begin(), orc.stabilized.end());
  res.add("stabilized_heuristic", vec_str(stab));
  rep.results.push_back(res);
}

}  // namespace

Report run_command(const std::string& cmd, const RunConfig& config,
                   const std::string& cache_dir) {
  Report rep;
  rep.config = config;
  try {
    if (cmd == "gb")
      cmd_gb(config, cache_dir, rep);
    else if (cmd == "verify-hopf")
      cmd_verify_hopf(config, cache_dir, rep);
    else if (cmd == "resolution")
      cmd_resolution(config, cache_dir, rep);
    else if (cmd == "exactness")
      cmd_exactness(config, cache_dir, rep);
    else if (cmd == "homology")
      cmd_homology(config, cache_dir, rep);
    else if (cmd == "ext")
      cmd_ext(config, cache_dir, rep);
    else if (cmd == "poincare")
      cmd_poincare(config, cache_dir, rep);
    else if (cmd == "bialgebra-cohomology")
      cmd_bialgebra(config, cache_dir, rep);
    else if (cmd == "cogroupoid")
      cmd_cogroupoid(config, cache_dir, rep);
    else if (cmd == "transport")
      cmd_transport(config, cache_dir, rep);
    else if (cmd == "oracle")
      cmd_oracle(config, cache_dir, rep);
    else
      fail(errc::validation_error, "unknown command '" + cmd + "'");
  } catch (const Error& e) {
    CheckResult res{"command." + cmd, "error", {}};
    res.add("error_code", errc_name(e.code()));
    res.add("error", e.what());
    rep.results.push_back(res);
  }
  return rep;
}

}  // namespace counit
