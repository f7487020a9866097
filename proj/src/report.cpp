#include "ahg/report.hpp"

#include "ahg/frobenius.hpp"
#include "ahg/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace ahg {

namespace {

constexpr const char* kReportFormat = "ahg-report 1";

Json set_json(const std::set<int>& s) {
  Json a = Json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(rat_str(v[i]));
  return a;
}

Json ivec_json(const IVec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i].get_str());
  return a;
}

Json monomial_list_json(VarFamily fam, const std::vector<Monomial>& ms) {
  Json a = Json::array();
  for (auto& m : ms) a.push_back(Polynomial::monomial(fam, m).str());
  return a;
}

Json poly_list_json(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (auto& p : ps) a.push_back(p.str());
  return a;
}

/// Canonical rendering of a homogeneous ideal: its reduced Groebner basis.
Json ideal_json(const HomogeneousIdeal& I) { return poly_list_json(I.groebner()); }

Json config_json(const ProblemConfig& cfg) {
  std::string doc = serialize_config(cfg);
  return Json::parse(doc.substr(doc.find('\n') + 1));
}

Json pair_json(const StandardPair& sp) {
  Json j;
  Json root = Json::array();
  for (int i = 0; i < sp.root.nvars(); ++i) root.push_back(sp.root[i]);
  j["root"] = root;
  j["sigma"] = set_json(sp.sigma);
  return j;
}

const char* cert_str(Certification c) {
  switch (c) {
    case Certification::LPCertified: return "lp-certified";
    case Certification::RadiusStable: return "radius-stable";
    case Certification::Uncertified: return "uncertified";
  }
  return "?";
}

bool in_family(const std::vector<std::set<int>>& fam, const std::set<int>& I) {
  return std::find(fam.begin(), fam.end(), I) != fam.end();
}

Rat dot(const QVec& a, const QVec& b) {
  Rat r(0);
  for (int i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

/// Everything analyze/solve/sufficiency share.
struct Core {
  IMat B;
  ToricGB gb;
  MonomialIdeal in_w;
  std::vector<StandardPair> sps;
  FakeExponentSet fes;
  std::vector<CertifiedAnalysis> supports;  // parallel to fes.exponents
  std::vector<int> reps;                    // representative index per class
};

Core compute_core(const ProblemConfig& cfg) {
  if (rank_of(cfg.A) != cfg.d())
    throw std::invalid_argument("A must have full row rank");
  if (!check_homogeneous(cfg.A))
    throw std::invalid_argument(
        "A is not homogeneous: no rational row combination equals (1,...,1)");
  Core core;
  if (cfg.basis) {
    validate_basis(cfg.A, *cfg.basis);
    core.B = *cfg.basis;
  } else {
    core.B = kernel_basis(cfg.A);
  }
  core.gb = toric_groebner(core.B, cfg.w);
  core.in_w = MonomialIdeal(cfg.n(), core.gb.initial_gens);
  core.sps = standard_pairs(core.in_w);
  core.fes = fake_exponents_full(cfg.A, cfg.beta, core.sps, core.B);
  int nclasses = 0;
  for (auto& fe : core.fes.exponents) {
    core.supports.push_back(
        support_classes_certified(fe.v, core.B, cfg.w, cfg.radius));
    nclasses = std::max(nclasses, fe.cls + 1);
  }
  core.reps.assign(nclasses, -1);
  for (size_t i = 0; i < core.fes.exponents.size(); ++i) {
    auto& fe = core.fes.exponents[i];
    int& r = core.reps[fe.cls];
    if (r < 0 ||
        dot(cfg.w, fe.v) < dot(cfg.w, core.fes.exponents[r].v))
      r = static_cast<int>(i);
  }
  return core;
}

Json support_json(const CertifiedAnalysis& ca) {
  Json j;
  j["I0"] = set_json(ca.analysis.I0);
  j["radius"] = ca.analysis.radius;
  j["stable"] = ca.stable;
  Json cls = Json::array();
  for (size_t k = 0; k < ca.analysis.classes.size(); ++k) {
    auto& sc = ca.analysis.classes[k];
    Json c;
    c["I"] = set_json(sc.I);
    c["in_N"] = sc.in_N;
    c["in_Nv"] = sc.in_Nv;
    c["certification"] = cert_str(ca.certs[k]);
    if (sc.in_N) {
      c["min_weight"] = rat_str(sc.min_weight);
      c["min_u"] = ivec_json(sc.min_u);
    }
    cls.push_back(std::move(c));
  }
  j["classes"] = std::move(cls);
  return j;
}

std::vector<std::set<int>> ns_sets(const CertifiedAnalysis& ca) {
  std::vector<std::set<int>> out;
  for (auto& sc : ca.analysis.classes) out.push_back(sc.I);
  return out;
}

std::vector<std::set<int>> select_sets(const CertifiedAnalysis& ca,
                                       const std::string& sel) {
  std::vector<std::set<int>> out;
  if (sel == "nv") {
    for (auto& sc : ca.analysis.classes)
      if (sc.in_Nv) out.push_back(sc.I);
  } else if (sel == "n") {
    for (auto& sc : ca.analysis.classes)
      if (sc.in_N) out.push_back(sc.I);
  } else if (sel == "i0") {
    out.push_back(ca.analysis.I0);
  } else {
    // Explicit family: semicolon-separated comma sets, 1-based; "-" for the
    // empty set.
    std::istringstream in(sel);
    std::string part;
    while (std::getline(in, part, ';')) {
      std::set<int> I;
      if (part != "-") {
        std::istringstream pin(part);
        std::string tok;
        while (std::getline(pin, tok, ',')) {
          try {
            int i = std::stoi(tok);
            if (i < 1) throw std::out_of_range("index");
            I.insert(i - 1);
          } catch (const std::exception&) {
            throw std::invalid_argument("bad support-family selector: " + sel);
          }
        }
      }
      out.push_back(std::move(I));
    }
    if (out.empty())
      throw std::invalid_argument("empty support-family selector");
    for (auto& I : out)
      if (!in_family(ns_sets(ca), I))
        throw std::invalid_argument(
            "selected support set is not a negative-support class");
  }
  return out;
}

Json sets_json(const std::vector<std::set<int>>& fam) {
  Json a = Json::array();
  for (auto& I : fam) a.push_back(set_json(I));
  return a;
}

Json ideals_json(const FrobeniusIdeals& FI) {
  Json j;
  j["K"] = set_json(FI.K);
  j["m_t"] = Polynomial::monomial(VarFamily::T, FI.m_t).str();
  j["m_s"] = FI.m_s.str();
  j["P_t"] = monomial_list_json(VarFamily::T, FI.P_t.gens());
  j["P_s"] = ideal_json(FI.P_s);
  j["Q_t"] = ideal_json(FI.Q_t);
  j["P_B_t"] = monomial_list_json(VarFamily::T, FI.PB_t.gens());
  j["P_B_s"] = ideal_json(FI.PB_s);
  j["certified"] = FI.certified;
  return j;
}

std::vector<int> chosen_exponents(const Core& core, int selector) {
  std::vector<int> idx;
  if (selector >= 1) {
    if (selector > static_cast<int>(core.fes.exponents.size()))
      throw std::invalid_argument("exponent index out of range");
    idx.push_back(selector - 1);
  } else {
    idx.assign(core.reps.begin(), core.reps.end());
  }
  return idx;
}

}  // namespace

Polynomial parse_poly(const std::string& text, VarFamily fam, int nvars) {
  const std::string sym = family_symbol(fam);
  Polynomial out(fam, nvars);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto parse_number = [&]() -> Rat {
    size_t start = i;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) ||
            text[i] == '/'))
      ++i;
    if (start == i) throw std::invalid_argument("bad polynomial: " + text);
    return parse_rat(text.substr(start, i - start));
  };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("bad polynomial: " + text);
    }
    first = false;
    Rat coeff(sign);
    Monomial mono(nvars);
    bool any = false;
    while (true) {
      skip_ws();
      if (i < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff *= parse_number();
        any = true;
      } else if (text.compare(i, sym.size(), sym) == 0 &&
                 i + sym.size() < text.size() &&
                 std::isdigit(
                     static_cast<unsigned char>(text[i + sym.size()]))) {
        i += sym.size();
        size_t start = i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
          ++i;
        int var = std::stoi(text.substr(start, i - start));
        if (var < 1 || var > nvars)
          throw std::invalid_argument("variable index out of range: " + text);
        int exp = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          size_t es = i;
          while (i < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
          if (es == i) throw std::invalid_argument("bad exponent: " + text);
          exp = std::stoi(text.substr(es, i - es));
        }
        mono[var - 1] += exp;
        any = true;
      } else {
        break;
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      // Juxtaposition only continues with another factor; re-loop to test.
      if (i < text.size() && text.compare(i, sym.size(), sym) == 0) continue;
      break;
    }
    if (!any) throw std::invalid_argument("bad polynomial: " + text);
    out.add_term(mono, coeff);
    skip_ws();
  }
  if (first) throw std::invalid_argument("empty polynomial");
  return out;
}

Json run_analyze(const ProblemConfig& cfg) {
  Core core = compute_core(cfg);
  Json rep;
  rep["format"] = kReportFormat;
  rep["command"] = "analyze";
  rep["config"] = config_json(cfg);
  rep["homogeneous"] = true;
  {
    Json rows = Json::array();
    for (int k = 0; k < core.B.cols(); ++k) {
      Json row = Json::array();
      for (int j = 0; j < core.B.rows(); ++j)
        row.push_back(core.B(j, k).get_str());
      rows.push_back(std::move(row));
    }
    rep["lattice_basis"] = std::move(rows);
  }
  rep["groebner_basis"] = poly_list_json(core.gb.basis);
  rep["initial_ideal"] = monomial_list_json(VarFamily::DX, core.in_w.gens());
  {
    Json pairs = Json::array();
    for (auto& sp : core.sps) pairs.push_back(pair_json(sp));
    rep["standard_pairs"] = std::move(pairs);
  }
  {
    Json fails = Json::array();
    for (auto& [sp, reason] : core.fes.failures) {
      Json f = pair_json(sp);
      f["reason"] = reason;
      fails.push_back(std::move(f));
    }
    rep["pair_failures"] = std::move(fails);
  }
  {
    Json fes = Json::array();
    for (size_t i = 0; i < core.fes.exponents.size(); ++i) {
      auto& fe = core.fes.exponents[i];
      Json f;
      f["index"] = static_cast<int>(i) + 1;
      f["v"] = qvec_json(fe.v);
      Json ps = Json::array();
      for (auto& sp : fe.pairs)
        for (size_t k = 0; k < core.sps.size(); ++k)
          if (core.sps[k] == sp) ps.push_back(static_cast<int>(k) + 1);
      f["pairs"] = std::move(ps);
      f["class"] = fe.cls + 1;
      f["weight"] = rat_str(dot(cfg.w, fe.v));
      f["minimal"] = is_minimal_exponent(fe.v, core.B, cfg.w, cfg.radius);
      f["support"] = support_json(core.supports[i]);
      fes.push_back(std::move(f));
    }
    rep["fake_exponents"] = std::move(fes);
  }
  {
    Json reps = Json::array();
    for (size_t c = 0; c < core.reps.size(); ++c) {
      int i = core.reps[c];
      auto& fe = core.fes.exponents[i];
      auto& ca = core.supports[i];
      Json r;
      r["class"] = static_cast<int>(c) + 1;
      r["exponent_index"] = i + 1;
      r["v"] = qvec_json(fe.v);
      std::vector<std::set<int>> Nv = select_sets(ca, "nv");
      r["N_v"] = sets_json(Nv);
      FrobeniusIdeals FI = build_ideals(fe.v, cfg.A, core.B, Nv, ns_sets(ca));
      r["ideals"] = ideals_json(FI);
      CoefficientDual cd = coefficient_dual(FI, cfg.degree_cap);
      Json ind;
      ind["colon_ideal"] = ideal_json(cd.colon_ideal);
      ind["dual_dimension"] = static_cast<int>(cd.dual.basis.size());
      ind["dual_basis"] = poly_list_json(cd.dual.basis);
      ind["complete"] = cd.dual.complete;
      r["indicial"] = std::move(ind);
      reps.push_back(std::move(r));
    }
    rep["class_representatives"] = std::move(reps);
  }
  return rep;
}

Json run_solve(const ProblemConfig& cfg, const SolveOptions& opts) {
  if (opts.method != "extended" && opts.method != "lperturb")
    throw std::invalid_argument("method must be \"extended\" or \"lperturb\"");
  Core core = compute_core(cfg);
  Json rep;
  rep["format"] = kReportFormat;
  rep["command"] = "solve";
  rep["config"] = config_json(cfg);
  rep["method"] = opts.method;
  rep["W_max"] = rat_str(cfg.weight_cap);

  Json series = Json::array();
  int violations_total = 0;
  for (int i : chosen_exponents(core, opts.exponent)) {
    auto& fe = core.fes.exponents[i];
    auto& ca = core.supports[i];
    std::vector<std::set<int>> Nprime = select_sets(ca, opts.nprime);
    std::vector<std::set<int>> NS = ns_sets(ca);
    FrobeniusIdeals FI = build_ideals(fe.v, cfg.A, core.B, Nprime, NS);

    std::vector<Polynomial> qs;
    if (opts.q == "spanning") {
      if (opts.method == "extended") {
        // The x^v coefficient space is (Q : t^{I0\K})^perp; composing its
        // basis with Dt^{I0\K} gives perturbation operators inside Q^perp
        // whose series span the solutions starting at v.
        CoefficientDual cd = coefficient_dual(FI, cfg.degree_cap);
        Polynomial shift = Polynomial::monomial(VarFamily::DT, FI.m_t);
        for (auto& q0 : cd.dual.basis) qs.push_back(q0 * shift);
      } else {
        DualSpace ps = perp_of_ideal(FI.P_s, cfg.degree_cap);
        qs = ps.basis;
      }
    } else if (opts.method == "extended") {
      qs.push_back(parse_poly(opts.q, VarFamily::DT, cfg.n()));
    } else {
      qs.push_back(parse_poly(opts.q, VarFamily::DS,
                              static_cast<int>(core.B.cols())));
    }

    for (auto& q : qs) {
      LogSeries s =
          opts.method == "extended"
              ? extract_solution(fe.v, cfg.A, core.B, cfg.w, FI, Nprime, q,
                                 cfg.weight_cap, cfg.radius)
              : l_perturb_solution(fe.v, cfg.A, core.B, cfg.w, FI, Nprime, q,
                                   cfg.weight_cap, cfg.radius);
      VerifyReport vr =
          verify_series(s, cfg.A, core.B, cfg.w, core.gb.basis, NS, cfg.radius);
      violations_total += static_cast<int>(vr.violations.size());
      Json sj;
      sj["exponent_index"] = i + 1;
      sj["v"] = qvec_json(fe.v);
      sj["Nprime"] = sets_json(Nprime);
      sj["q"] = q.str();
      Json terms = Json::array();
      int nonzero = 0;
      for (auto& [u, r] : s.terms) {
        Json t;
        t["u"] = ivec_json(u);
        t["r"] = r.str();
        if (!r.is_zero()) ++nonzero;
        terms.push_back(std::move(t));
      }
      sj["term_count"] = static_cast<int>(s.terms.size());
      sj["nonzero_terms"] = nonzero;
      sj["terms"] = std::move(terms);
      Json vj;
      vj["checked"] = vr.checked;
      vj["skipped"] = vr.skipped;
      Json viols = Json::array();
      for (auto& v : vr.violations) viols.push_back(v.equation);
      vj["violations"] = std::move(viols);
      sj["verify"] = std::move(vj);
      series.push_back(std::move(sj));
    }
  }
  rep["series"] = std::move(series);
  rep["violations_total"] = violations_total;
  return rep;
}

Json run_check_sufficiency(const ProblemConfig& cfg,
                           const SufficiencyOptions& opts) {
  Core core = compute_core(cfg);
  std::vector<int> idx = chosen_exponents(core, opts.exponent);
  Json rep;
  rep["format"] = kReportFormat;
  rep["command"] = "check-sufficiency";
  rep["config"] = config_json(cfg);
  Json results = Json::array();
  for (int i : idx) {
    auto& fe = core.fes.exponents[i];
    auto& ca = core.supports[i];
    std::vector<std::set<int>> Nprime = select_sets(ca, opts.nprime);
    std::vector<std::set<int>> Nsecond =
        opts.nsecond.empty() ? Nprime : select_sets(ca, opts.nsecond);
    SufficiencyReport sr = sufficiency_check(fe.v, cfg.A, core.B, Nprime,
                                             Nsecond, ns_sets(ca),
                                             cfg.degree_cap);
    Json r;
    r["exponent_index"] = i + 1;
    r["v"] = qvec_json(fe.v);
    r["Nprime"] = sets_json(Nprime);
    r["Nsecond"] = sets_json(Nsecond);
    r["phi_colon_equality"] = sr.a_phi_colon_eq;
    r["colon_is_P_B"] = sr.b_colon_is_PB;
    r["smallest_element"] = sr.c_smallest;
    r["intersection_form"] = sr.d_intersection;
    Json es = Json::array();
    for (auto& [I, ok] : sr.e_square) {
      Json e;
      e["I"] = set_json(I);
      e["equal"] = ok;
      es.push_back(std::move(e));
    }
    r["square_tests"] = std::move(es);
    r["square_tests_all"] = sr.e_all;
    r["chain_conclusion"] = sr.f_chain;
    r["suffices"] = sr.suffices;
    r["verdict"] = sr.suffices ? "L-perturbation suffices here"
                               : "sufficiency criterion not established";
    results.push_back(std::move(r));
  }
  rep["results"] = std::move(results);
  return rep;
}

std::vector<ProblemConfig> search_instances(std::uint64_t seed,
                                            const SearchBounds& bounds) {
  std::mt19937_64 rng(seed);
  auto ri = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<ProblemConfig> out;
  for (int idx = 0; idx < bounds.count; ++idx) {
    ProblemConfig cfg;
    bool ok = false;
    for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
      int d = ri(1, bounds.max_d);
      int n = ri(std::min(d + 1, bounds.max_n), bounds.max_n);
      if (n <= d) continue;
      IMat A(d, n);
      for (int j = 0; j < n; ++j) A(0, j) = 1;  // homogeneous by construction
      for (int r = 1; r < d; ++r)
        for (int j = 0; j < n; ++j)
          A(r, j) = Int(ri(-bounds.entry_bound, bounds.entry_bound));
      if (rank_of(A) != d) continue;
      IMat B = kernel_basis(A);
      QVec beta(d);
      for (int r = 0; r < d; ++r)
        beta[r] = Rat(ri(-bounds.beta_bound, bounds.beta_bound));
      // Draw weights until one is generic for this toric ideal.
      QVec w(n);
      bool generic = false;
      for (int wtry = 0; wtry < 50 && !generic; ++wtry) {
        for (int j = 0; j < n; ++j) w[j] = Rat(ri(-10 * n, 10 * n));
        try {
          toric_groebner(B, w);
          generic = true;
        } catch (const WeightNotGeneric&) {
        }
      }
      if (!generic) continue;
      cfg.A = std::move(A);
      cfg.beta = std::move(beta);
      cfg.w = std::move(w);
      cfg.radius = bounds.radius;
      ok = true;
    }
    if (!ok)
      throw std::runtime_error("search: instance generation failed to converge");
    out.push_back(std::move(cfg));
  }
  return out;
}

Json run_search(std::uint64_t seed, const SearchBounds& bounds) {
  std::vector<ProblemConfig> configs = search_instances(seed, bounds);

  struct Outcome {
    std::string status;
    int exponents = 0;
    int pair_failures = 0;
    bool counterexample = false;
    std::string detail;
  };
  auto process = [](const ProblemConfig& cfg) {
    Outcome oc;
    try {
      IMat B = cfg.basis ? *cfg.basis : kernel_basis(cfg.A);
      ToricGB gb = toric_groebner(B, cfg.w);
      MonomialIdeal in_w(cfg.n(), gb.initial_gens);
      std::vector<StandardPair> sps = standard_pairs(in_w);
      FakeExponentSet fes = fake_exponents_full(cfg.A, cfg.beta, sps, B);
      oc.pair_failures = static_cast<int>(fes.failures.size());
      for (auto& fe : fes.exponents) {
        SupportAnalysis sa = support_classes(fe.v, B, cfg.w, cfg.radius);
        std::vector<std::set<int>> Nv, NS;
        for (auto& sc : sa.classes) {
          NS.push_back(sc.I);
          if (sc.in_Nv) Nv.push_back(sc.I);
        }
        if (std::find(Nv.begin(), Nv.end(), sa.I0) == Nv.end()) continue;
        FrobeniusIdeals FI = build_ideals(fe.v, cfg.A, B, Nv, NS);
        Polynomial mt = Polynomial::monomial(VarFamily::T, FI.m_t);
        HomogeneousIdeal lhs = phi_ideal(colon(FI.Q_t, mt), B);
        HomogeneousIdeal rhs = colon(FI.P_s, FI.m_s);
        ++oc.exponents;
        if (!ideal_equal(lhs, rhs)) {
          oc.counterexample = true;
          std::ostringstream vs;
          for (int k = 0; k < fe.v.size(); ++k)
            vs << (k ? "," : "") << rat_str(fe.v[k]);
          oc.detail = "Phi(Q_{N_v}(t) : t^{I0\\K}) != P_{N_v} : m at v = (" +
                      vs.str() + ")";
        }
      }
      oc.status = "ok";
    } catch (const std::exception& e) {
      oc.status = std::string("error: ") + e.what();
    }
    return oc;
  };

  // Fan the independent instances out to a small worker pool; assembly is
  // ordered by instance index.
  std::vector<std::future<Outcome>> futs;
  futs.reserve(configs.size());
  for (auto& cfg : configs)
    futs.push_back(std::async(std::launch::async, process, std::cref(cfg)));

  Json rep;
  rep["format"] = kReportFormat;
  rep["command"] = "search";
  rep["seed"] = seed;
  {
    Json b;
    b["max_d"] = bounds.max_d;
    b["max_n"] = bounds.max_n;
    b["entry_bound"] = bounds.entry_bound;
    b["beta_bound"] = bounds.beta_bound;
    b["count"] = bounds.count;
    b["radius"] = bounds.radius;
    rep["bounds"] = std::move(b);
  }
  Json instances = Json::array();
  Json counterexamples = Json::array();
  int checked = 0;
  for (size_t i = 0; i < configs.size(); ++i) {
    Outcome oc = futs[i].get();
    Json ij;
    ij["index"] = static_cast<int>(i);
    ij["config"] = config_json(configs[i]);
    ij["status"] = oc.status;
    ij["exponents_checked"] = oc.exponents;
    ij["pair_failures"] = oc.pair_failures;
    ij["counterexample"] = oc.counterexample;
    checked += oc.exponents;
    if (oc.counterexample) {
      Json cj;
      cj["index"] = static_cast<int>(i);
      cj["config"] = config_json(configs[i]);
      cj["detail"] = oc.detail;
      counterexamples.push_back(std::move(cj));
    }
    instances.push_back(std::move(ij));
  }
  rep["instances"] = std::move(instances);
  rep["counterexamples"] = counterexamples;
  rep["exponents_checked"] = checked;
  rep["summary"] =
      counterexamples.empty()
          ? "no counterexample among " + std::to_string(configs.size()) +
                " instances"
          : std::to_string(counterexamples.size()) + " counterexample(s) found";
  return rep;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  std::function<void(const Json&, int)> walk = [&](const Json& j, int indent) {
    std::string pad(2 * static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
      for (auto& [key, val] : j.items()) {
        if (val.is_object() || (val.is_array() && !val.empty() &&
                                (val[0].is_object() || val[0].is_array()))) {
          os << pad << key << ":\n";
          walk(val, indent + 1);
        } else if (val.is_array()) {
          os << pad << key << ": ";
          if (val.empty()) {
            os << "(none)\n";
          } else {
            bool first = true;
            for (auto& e : val) {
              if (!first) os << ", ";
              first = false;
              os << (e.is_string() ? e.get<std::string>() : e.dump());
            }
            os << "\n";
          }
        } else {
          os << pad << key << ": "
             << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
        }
      }
    } else if (j.is_array()) {
      int k = 0;
      for (auto& e : j) {
        os << pad << "- [" << k++ << "]\n";
        walk(e, indent + 1);
      }
    } else {
      os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
  };
  walk(report, 0);
  return os.str();
}

}  // namespace ahg
