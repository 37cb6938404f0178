// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end: exact sphere integrals, the two bilinear pairings,
// stability form assembly and certification, the eigenvalue bounds, the
// one-shot reproduction suite and the degree-4/5 extension runs.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "crsphere/bounds.hpp"
#include "crsphere/certify.hpp"
#include "crsphere/forms.hpp"
#include "crsphere/quadrature.hpp"
#include "crsphere/reports.hpp"

using namespace crsphere;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitStable = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitUnstable = 10;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

json make_report(const std::string& echo) {
  json rep;
  rep["command"] = echo;
  rep["version"] = kVersion;
  return rep;
}

void finish_report(json& rep, const Timer& timer, bool as_json) {
  rep["timings_ms"] = {{"total", timer.elapsed_ms()}};
  if (as_json) std::cout << rep.dump(2) << "\n";
}

MultiIndex index_from(const std::vector<int>& e) { return MultiIndex(e); }

// ---------------------------------------------------------------------------
// integrate

int cmd_integrate(const std::string& echo, const std::vector<int>& exps, int m,
                  const std::string& units, bool oracle, bool as_json) {
  Timer timer;
  json rep = make_report(echo);
  MultiIndex a = index_from(exps);
  Rational value = integrate_monomial(a, m);
  Rational shown = units == "phi2" ? Rational(value / phi_squared_integral(m)) : value;

  rep["inputs"] = {{"index", exps}, {"m", m}, {"units", units}};
  rep["outputs"]["value"] = to_string(shown);
  if (!as_json) {
    std::cout << "integral phi^" << a.to_string() << " over S^" << m << " = " << to_string(shown)
              << (units == "phi2" ? "  (units of integral phi^2)" : "  (units of |S^m|)") << "\n";
  }
  if (oracle) {
    if (m != 2) throw std::invalid_argument("--oracle quadrature is defined on S^2 only");
    double quad = quad_integrate(Polynomial::monomial(a), 8, 16);
    double exact = 4.0 * std::numbers::pi * value.get_d();
    rep["outputs"]["quadrature"] = format_double(quad);
    rep["outputs"]["difference"] = format_double(quad - exact);
    if (!as_json) {
      std::cout << "quadrature (dM units): " << format_double(quad)
                << "   exact*4pi: " << format_double(exact)
                << "   diff: " << format_double(quad - exact) << "\n";
    }
  }
  finish_report(rep, timer, as_json);
  return kExitStable;
}

// ---------------------------------------------------------------------------
// pairing

int cmd_pairing(const std::string& echo, const std::string& kind, int axis,
                const std::vector<int>& ae, const std::vector<int>& be, bool oracle,
                bool as_json) {
  Timer timer;
  json rep = make_report(echo);
  MultiIndex a = index_from(ae), b = index_from(be);
  rep["inputs"] = {{"kind", kind}, {"a", ae}, {"b", be}};
  if (kind == "cr") rep["inputs"]["axis"] = axis;

  Rational value, other;
  std::string other_name;
  if (kind == "grad") {
    value = dirichlet_pair(a, b);
    if (oracle) {
      other = dirichlet_pair_pointwise(a, b);
      other_name = "pointwise";
    }
  } else {
    value = cr_pair(axis, a, b);
    if (oracle) {
      other = cr_pair_oracle(axis, a, b);
      other_name = "triple-determinant";
    }
  }
  rep["outputs"]["value"] = to_string(value);
  if (!as_json) std::cout << kind << " pairing = " << to_string(value) << "\n";
  if (oracle) {
    bool agree = other == value;
    rep["outputs"]["oracle"] = to_string(other);
    rep["verdicts"]["oracle_agrees"] = agree;
    if (!as_json) {
      std::cout << other_name << " route = " << to_string(other)
                << (agree ? "   (agrees)" : "   (MISMATCH)") << "\n";
    }
    if (!agree) {
      finish_report(rep, timer, as_json);
      return kExitFail;
    }
  }
  finish_report(rep, timer, as_json);
  return kExitStable;
}

// ---------------------------------------------------------------------------
// form

int cmd_form(const std::string& echo, const std::string& kind, int degree, int axis,
             const std::string& out, bool as_json) {
  Timer timer;
  json rep = make_report(echo);
  SymQForm q = kind == "short" ? short_form(axis, degree) : long_form(degree);
  rep["inputs"] = {{"kind", kind}, {"degree", degree}};
  if (kind == "short") rep["inputs"]["axis"] = axis;
  rep["outputs"]["dim"] = q.dim();
  auto blocks = block_decompose(q);
  auto sizes = json::array();
  for (const auto& blk : blocks) sizes.push_back(blk.size());
  rep["outputs"]["block_sizes"] = std::move(sizes);

  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot open output file: " + out);
    if (out.size() >= 4 && out.substr(out.size() - 4) == ".csv") {
      file << q.to_csv();
    } else {
      file << q.to_json().dump(2) << "\n";
    }
    rep["outputs"]["file"] = out;
    if (!as_json) std::cout << "wrote " << out << "\n";
  } else if (!as_json) {
    std::cout << q.to_json().dump(2) << "\n";
  } else {
    rep["outputs"]["matrix"] = q.to_json();
  }
  if (!as_json) {
    std::cout << "dim " << q.dim() << ", " << blocks.size() << " coupling blocks\n";
  }
  finish_report(rep, timer, as_json);
  return kExitStable;
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(const std::string& echo, int degree, int axis, bool fhess, double tol,
                 bool as_json) {
  Timer timer;
  json rep = make_report(echo);
  RatMatrix m;
  if (fhess) {
    m = f_hessian();
    rep["inputs"] = {{"matrix", "f_hessian"}};
  } else {
    SymQForm q = axis > 0 ? short_form(axis, degree) : long_form(degree);
    m = q.matrix;
    rep["inputs"] = {{"matrix", axis > 0 ? "short_form" : "long_form"}, {"degree", degree}};
    if (axis > 0) rep["inputs"]["axis"] = axis;
  }
  rep["inputs"]["tol"] = format_double(tol);

  auto values = json::array();
  if (m.is_zero()) {
    for (int i = 0; i < m.rows(); ++i) values.push_back(format_double(0.0));
    if (!as_json) {
      for (int i = 0; i < m.rows(); ++i) std::cout << format_double(0.0) << "\n";
    }
  } else {
    auto res = jacobi_spectrum(m, tol);
    for (double ev : res.eigenvalues) {
      values.push_back(format_double(ev));
      if (!as_json) std::cout << format_double(ev) << "\n";
    }
    rep["outputs"]["sweeps"] = res.sweeps;
  }
  rep["outputs"]["eigenvalues"] = std::move(values);
  finish_report(rep, timer, as_json);
  return kExitStable;
}

// ---------------------------------------------------------------------------
// certify

int cmd_certify(const std::string& echo, int degree, int axis, bool fhess, bool as_json) {
  Timer timer;
  json rep = make_report(echo);
  if (fhess) {
    // The published 10x10 hessian: genuinely indefinite, certifies through
    // the witness path.
    RatMatrix h = f_hessian();
    Certificate cert = instability_certificate(h);
    Inertia sig = inertia(h);
    rep["inputs"] = {{"matrix", "f_hessian"}};
    rep["outputs"]["inertia"] = {{"pos", sig.n_pos}, {"neg", sig.n_neg}, {"zero", sig.n_zero}};
    bool bad = cert.kind == Certificate::Kind::kUnstable;
    rep["outputs"]["verdict"] = bad ? "unstable" : "stable";
    if (bad) {
      auto witness = json::array();
      for (const auto& x : cert.witness) witness.push_back(x.get_str());
      rep["outputs"]["witness"] = std::move(witness);
      rep["outputs"]["witness_value"] = to_string(cert.witness_value);
      rep["outputs"]["witness_verified"] = verify_certificate(h, cert);
    }
    if (!as_json) {
      std::cout << "verdict: " << rep["outputs"]["verdict"].get<std::string>() << ", inertia ("
                << sig.n_pos << "," << sig.n_neg << "," << sig.n_zero << ")\n";
      if (bad) {
        std::cout << "witness value: " << to_string(cert.witness_value) << "\n";
      }
    }
    finish_report(rep, timer, as_json);
    return bad ? kExitUnstable : kExitStable;
  }
  rep["inputs"] = {{"degree", degree}};
  if (axis > 0) rep["inputs"]["axis"] = axis;
  json body = certify_report(degree, axis);
  bool unstable = body["verdict"] == "unstable";
  rep["outputs"] = std::move(body);
  if (!as_json) {
    std::cout << "verdict: " << rep["outputs"]["verdict"].get<std::string>() << "\n";
    std::cout << "inertia: (" << rep["outputs"]["inertia"]["pos"] << ","
              << rep["outputs"]["inertia"]["neg"] << "," << rep["outputs"]["inertia"]["zero"]
              << ")\n";
    for (const auto& blk : rep["outputs"]["blocks"]) {
      std::cout << "  block size " << blk["size"] << ": " << blk["verdict"].get<std::string>();
      if (blk.contains("witness_value")) {
        std::cout << ", witness value " << blk["witness_value"].get<std::string>();
      }
      std::cout << "\n";
    }
  }
  finish_report(rep, timer, as_json);
  return unstable ? kExitUnstable : kExitStable;
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(const std::string& echo, int l, int s, int m, int n, const std::string& theta_text,
               bool as_json) {
  Timer timer;
  json rep = make_report(echo);
  Rational theta = rational_from_string(theta_text);
  BoundReport br = rayleigh_bound(l, s, m, n, theta);
  rep["inputs"] = {{"l", l}, {"s", s}, {"m", m}, {"n", n}, {"theta", to_string(theta)}};
  rep["outputs"] = {
      {"lambda_l", to_string(br.lambda_l)},
      {"lambda_s", to_string(br.lambda_s)},
      {"eigenvalue_sufficiency", br.eigenvalue_sufficiency},
      {"coeff_one_space", format_double(br.coeff_one_space)},
      {"coeff_one_space_sq", to_string(br.coeff_one_space_sq)},
      {"stable_flag", br.stable_flag},
      {"coeff_two_spaces", format_double(br.coeff_two_spaces)},
      {"two_space_le_one", br.two_space_le_one},
  };
  if (!as_json) {
    std::cout << "lambda_l = " << to_string(br.lambda_l) << ", threshold m^2(n-2)^2 = "
              << (static_cast<long>(m) * m * (n - 2) * (n - 2)) << "\n";
    std::cout << "eigenvalue sufficiency: " << (br.eigenvalue_sufficiency ? "holds" : "fails")
              << "\n";
    std::cout << "one-eigenspace coefficient = " << format_double(br.coeff_one_space)
              << " (stable flag: " << (br.stable_flag ? "yes" : "no") << ")\n";
    std::cout << "two-eigenspace coefficient = " << format_double(br.coeff_two_spaces)
              << " (<= 1: " << (br.two_space_le_one ? "yes" : "no") << ")\n";
  }
  finish_report(rep, timer, as_json);
  return kExitStable;
}

// ---------------------------------------------------------------------------
// reproduce

struct Item {
  std::string name;
  bool pass = false;
  bool unstable_where_stability_claimed = false;
  json detail;
};

Item item_integrals() {
  Item item;
  item.name = "integrals";
  struct Expect {
    MultiIndex a;
    Rational value;
  };
  const Expect table[] = {
      {MultiIndex(0, 0, 0), Rational(1)},          {MultiIndex(2, 0, 0), make_rational(1, 3)},
      {MultiIndex(1, 2, 2), Rational(0)},          {MultiIndex(2, 2, 0), make_rational(1, 15)},
      {MultiIndex(4, 0, 0), make_rational(1, 5)},  {MultiIndex(6, 0, 0), make_rational(1, 7)},
      {MultiIndex(4, 2, 0), make_rational(1, 35)}, {MultiIndex(2, 2, 2), make_rational(1, 105)},
  };
  item.pass = true;
  auto rows = json::array();
  for (const auto& e : table) {
    Rational got = integrate_monomial(e.a);
    bool ok = got == e.value;
    item.pass = item.pass && ok;
    rows.push_back({{"index", e.a.to_string()},
                    {"expected", to_string(e.value)},
                    {"got", to_string(got)},
                    {"pass", ok}});
  }
  item.detail["values"] = std::move(rows);
  return item;
}

Item item_oracles() {
  Item item;
  item.name = "oracles";
  bool factorial_ok = true;
  for (int d = 0; d <= 16 && factorial_ok; d += 2) {
    for (const auto& a : monomial_basis(d)) {
      if (!a.all_even()) continue;
      if (integrate_monomial(a) != factorial_oracle(a)) factorial_ok = false;
    }
  }
  bool dirichlet_ok = true;
  for (int l = 0; l <= 6 && dirichlet_ok; ++l) {
    auto basis = monomial_basis(l);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        if (dirichlet_pair(a, b) != dirichlet_pair_pointwise(a, b)) dirichlet_ok = false;
      }
    }
  }
  bool cr_ok = true;
  for (int l = 0; l <= 5 && cr_ok; ++l) {
    auto basis = monomial_basis(l);
    for (int i = 1; i <= 3; ++i) {
      for (const auto& a : basis) {
        for (const auto& b : basis) {
          if (cr_pair(i, a, b) != cr_pair_oracle(i, a, b)) cr_ok = false;
        }
      }
    }
  }
  item.pass = factorial_ok && dirichlet_ok && cr_ok;
  item.detail = {{"factorial_oracle_deg16", factorial_ok},
                 {"dirichlet_dual_formula_deg6", dirichlet_ok},
                 {"cr_triple_det_deg5", cr_ok}};
  return item;
}

Item item_structure() {
  Item item;
  item.name = "structure";
  Polynomial phi1 = Polynomial::variable(1), phi2 = Polynomial::variable(2),
             phi3 = Polynomial::variable(3);
  bool det_ok = triple_det(phi1, phi2) == phi3;
  bool cr_val_ok = cr_pair(3, MultiIndex(1, 0, 0), MultiIndex(0, 1, 0)) == make_rational(1, 3);

  bool degree_ok = true, cross_ok = true;
  std::vector<std::vector<Polynomial>> harmonics(6);
  for (int l = 0; l <= 5; ++l) {
    for (const auto& a : monomial_basis(l)) {
      auto dec = harmonic_decompose(Polynomial::monomial(a));
      for (const auto& [d, h] : dec.components) {
        if (d == l) harmonics[l].push_back(h);
      }
    }
  }
  for (int l = 1; l <= 5 && degree_ok; ++l) {
    for (int i = 1; i <= 3; ++i) {
      for (const auto& h : harmonics[l]) {
        Polynomial bracket = triple_det(Polynomial::variable(i), h);
        if (bracket.is_zero()) continue;
        auto dec = harmonic_decompose(bracket);
        if (dec.components.size() != 1 || dec.components[0].first != l) degree_ok = false;
      }
    }
  }
  for (int l = 0; l <= 5 && cross_ok; ++l) {
    for (int s = 0; s < l && cross_ok; ++s) {
      for (const auto& h : harmonics[l]) {
        for (const auto& g : harmonics[s]) {
          for (int i = 1; i <= 3; ++i) {
            if (cr_value(i, h, g) != 0) cross_ok = false;
          }
        }
      }
    }
  }
  item.pass = det_ok && cr_val_ok && degree_ok && cross_ok;
  item.detail = {{"triple_det_phi1_phi2_is_phi3", det_ok},
                 {"cr_pair_value_1_3", cr_val_ok},
                 {"bracket_degree_preserved", degree_ok},
                 {"cross_degree_vanishing", cross_ok}};
  return item;
}

Item item_thm11() {
  Item item;
  item.name = "thm11";
  bool psd_ok = true;
  int worst_neg = 0;
  for (int i = 1; i <= 3; ++i) {
    for (int l = 0; l <= 6; ++l) {
      Inertia sig = inertia(short_form(i, l));
      if (sig.n_neg != 0) {
        psd_ok = false;
        worst_neg = std::max(worst_neg, sig.n_neg);
      }
    }
  }
  SymQForm s11 = short_form(1, 1);
  Inertia sig11 = inertia(s11);
  bool kernel_dim_ok = sig11.n_zero == 2;
  std::vector<Rational> v1(6, Rational(0)), v2(6, Rational(0));
  v1[s11.index_of({0, MultiIndex(0, 1, 0)})] = 1;
  v1[s11.index_of({1, MultiIndex(0, 0, 1)})] = 1;
  v2[s11.index_of({0, MultiIndex(0, 0, 1)})] = 1;
  v2[s11.index_of({1, MultiIndex(0, 1, 0)})] = -1;
  auto in_kernel = [&](const std::vector<Rational>& v) {
    for (const auto& e : s11.matrix.apply(v)) {
      if (e != 0) return false;
    }
    return true;
  };
  bool span_ok = in_kernel(v1) && in_kernel(v2);

  item.pass = psd_ok && kernel_dim_ok && span_ok;
  item.unstable_where_stability_claimed = !psd_ok;
  item.detail = {{"short_forms_psd_l_le_6", psd_ok},
                 {"kernel_dim_axis1_deg1", sig11.n_zero},
                 {"equality_family_spans", span_ok}};
  return item;
}

Item item_longforms() {
  Item item;
  item.name = "longforms";
  bool l0_ok = long_form(0).matrix.is_zero();

  Inertia sig1 = inertia(long_form(1));
  bool l1_ok = sig1.n_neg == 0 && sig1.n_zero == 8;

  Inertia sig2 = inertia(long_form(2));
  bool l2_ok = sig2.n_neg == 0 && sig2.n_zero >= 4;

  // Publication: degree 3 carries a negative direction. Exact assembly:
  // the form is PSD, its kernel the embedded degree-1 equality family.
  Inertia sig3 = inertia(long_form(3));
  bool l3_matches_publication = sig3.n_neg >= 1;

  item.pass = l0_ok && l1_ok && l2_ok && l3_matches_publication;
  item.unstable_where_stability_claimed = !(sig1.n_neg == 0 && sig2.n_neg == 0);
  item.detail = {{"l0_zero_form", l0_ok},
                 {"l1_inertia", sig1.to_string()},
                 {"l2_inertia", sig2.to_string()},
                 {"l3_inertia", sig3.to_string()},
                 {"l3_published_expectation", "n_neg >= 1"},
                 {"l3_matches_publication", l3_matches_publication}};
  if (!l3_matches_publication) {
    item.detail["note"] =
        "exact arithmetic certifies the degree-3 form PSD; the published negative direction "
        "rests on an expansion that dropped four couplings (see the counterexample item)";
  }
  return item;
}

Item item_f() {
  Item item;
  item.name = "F";
  Rational value = f_polynomial(f_paper_vector());
  item.pass = value == Rational(-138);
  item.detail = {{"vector", "[3,-4,-1,3,4,-4,-3,-1,-2,1]"}, {"value", to_string(value)}};
  return item;
}

Item item_counterexample() {
  Item item;
  item.name = "counterexample";
  SymQForm q3 = long_form(3);

  auto fs = counterexample_functions();
  CoeffVector cv = embed_functions(fs[0], fs[1], fs[2], fs[3], 3);
  Rational via_functions = q3.evaluate(cv.to_dense());
  Rational via_poly = long_gap_poly(fs);

  Rational via_vector = q3.evaluate(embed_f_variables(f_paper_vector()));

  bool witnesses = via_functions < 0 || via_vector < 0;
  bool routes_agree = via_functions == via_poly;
  item.pass = witnesses && routes_agree;
  item.unstable_where_stability_claimed = false;
  item.detail = {
      {"stated_functions_gap", to_string(via_functions)},
      {"stated_functions_violate", via_functions < 0},
      {"paper_vector_gap", to_string(via_vector)},
      {"paper_vector_violates", via_vector < 0},
      {"matrix_vs_polynomial_route", routes_agree},
      {"note_x_slot",
       "the printed f4 has coefficient 4 on phi1^2 phi3 while the tested 10-vector uses 3 in "
       "that slot; both candidates are evaluated and reported, not reconciled"},
  };
  auto dropped = json::array();
  for (const auto& d : f_block_discrepancies()) {
    dropped.push_back({{"pair", d.row.to_string() + " x " + d.col.to_string()},
                       {"assembled", to_string(d.assembled)},
                       {"published", to_string(d.published)}});
  }
  item.detail["dropped_couplings"] = std::move(dropped);
  item.detail["functions"] = {{"f4", polynomial_to_json(fs[0])},
                              {"f5", polynomial_to_json(fs[1])},
                              {"f6", polynomial_to_json(fs[2])},
                              {"f7", polynomial_to_json(fs[3])}};
  if (!witnesses) {
    item.detail["note_verdict"] =
        "neither candidate evaluates negative once the four dropped couplings are restored; "
        "the two evaluation routes agree exactly and match symbolic spherical integration";
  }
  return item;
}

Item item_spectrum() {
  Item item;
  item.name = "spectrum";
  const std::vector<double> published = {
      193.95260118883090, 123.94135950568288, 111.22289635621148, 64.826325872315152,
      39.493408799262383, 34.522364101735334, 26.731868670430774, 15.181112147219768,
      5.8125282188336085, -3.6844648605223074};
  RatMatrix h = f_hessian();
  auto res = jacobi_spectrum(h);
  bool eigen_ok = res.eigenvalues.size() == published.size();
  double worst = 0.0;
  for (size_t i = 0; i < published.size() && eigen_ok; ++i) {
    double rel = std::abs(res.eigenvalues[i] - published[i]) / std::abs(published[i]);
    worst = std::max(worst, rel);
    if (rel > 1e-6) eigen_ok = false;
  }
  Inertia sig = inertia(h);
  bool inertia_ok = sig == Inertia{9, 1, 0};
  Rational trace(0);
  for (int i = 0; i < 10; ++i) trace += h.at(i, i);
  bool trace_ok = trace == Rational(612);

  item.pass = eigen_ok && inertia_ok && trace_ok;
  item.detail = {{"eigenvalues_match_1e-6", eigen_ok},
                 {"worst_relative_error", format_double(worst)},
                 {"inertia", sig.to_string()},
                 {"trace", to_string(trace)}};
  return item;
}

Item item_bounds() {
  Item item;
  item.name = "bounds";
  bool l6 = rayleigh_bound(6, 6, 2, 5, Rational(1)).eigenvalue_sufficiency;
  bool l5 = rayleigh_bound(5, 5, 2, 5, Rational(1)).eigenvalue_sufficiency;
  item.pass = l6 && !l5;
  item.detail = {{"l6_sufficiency", l6}, {"l5_sufficiency", l5}};
  return item;
}

int cmd_reproduce(const std::string& echo, const std::string& only, bool as_json) {
  Timer timer;
  json rep = make_report(echo);
  std::vector<Item> items;
  auto want = [&](const std::string& name) { return only.empty() || only == name; };

  if (want("integrals")) items.push_back(item_integrals());
  if (want("oracles")) items.push_back(item_oracles());
  if (want("structure")) items.push_back(item_structure());
  if (want("thm11")) items.push_back(item_thm11());
  if (want("longforms")) items.push_back(item_longforms());
  if (want("F")) items.push_back(item_f());
  if (want("counterexample")) items.push_back(item_counterexample());
  if (want("spectrum")) items.push_back(item_spectrum());
  if (want("bounds")) items.push_back(item_bounds());

  if (items.empty()) throw std::invalid_argument("unknown --only item: " + only);

  bool all_pass = true, unstable = false;
  auto items_json = json::array();
  for (const auto& item : items) {
    all_pass = all_pass && item.pass;
    unstable = unstable || item.unstable_where_stability_claimed;
    items_json.push_back(
        {{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
    if (!as_json) {
      std::cout << (item.pass ? "PASS" : "FAIL") << "  " << item.name << "\n";
      if (!item.pass) std::cout << "      " << item.detail.dump() << "\n";
    }
  }
  rep["outputs"]["items"] = std::move(items_json);
  rep["verdicts"]["all_pass"] = all_pass;
  if (!as_json) {
    std::cout << (all_pass ? "all items passed" : "some items FAILED") << "\n";
  }
  finish_report(rep, timer, as_json);
  if (all_pass) return kExitStable;
  return unstable ? kExitUnstable : kExitFail;
}

// ---------------------------------------------------------------------------
// extend

int cmd_extend(const std::string& echo, int degree, const std::string& out, bool as_json) {
  Timer timer;
  json rep = make_report(echo);
  rep["inputs"] = {{"degree", degree}};
  json body = extend_report(degree);
  bool unstable = body["report"]["verdict"] == "unstable";
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot open output file: " + out);
    file << body.dump(2) << "\n";
    rep["outputs"]["file"] = out;
  }
  rep["outputs"]["fixture"] = std::move(body);
  if (!as_json) {
    const auto& r = rep["outputs"]["fixture"]["report"];
    std::cout << "long form degree " << degree << ": dim " << r["dim"] << ", verdict "
              << r["verdict"].get<std::string>() << "\n";
    for (const auto& blk : r["blocks"]) {
      std::cout << "  block size " << blk["size"] << ": " << blk["verdict"].get<std::string>()
                << " inertia (" << blk["inertia"]["pos"] << "," << blk["inertia"]["neg"] << ","
                << blk["inertia"]["zero"] << ")";
      if (blk.contains("witness_value")) {
        std::cout << ", witness value " << blk["witness_value"].get<std::string>();
      }
      std::cout << "\n";
    }
  }
  finish_report(rep, timer, as_json);
  return unstable ? kExitUnstable : kExitStable;
}

std::string join_args(int argc, char** argv) {
  std::ostringstream s;
  for (int i = 0; i < argc; ++i) {
    if (i) s << " ";
    s << argv[i];
  }
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Cauchy-Riemann stability computations on the 2-sphere"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string echo = join_args(argc, argv);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable JSON report");

  // integrate
  auto* integrate = app.add_subcommand("integrate", "exact monomial moment over S^m");
  integrate->fallthrough();
  std::vector<int> exps;
  int m = 2;
  std::string units = "area";
  bool int_oracle = false;
  integrate->add_option("exponents", exps, "three exponents a1 a2 a3")->expected(3);
  integrate->add_option("--m", m, "sphere dimension (default 2)");
  integrate->add_option("--units", units, "area | phi2")
      ->check(CLI::IsMember({"area", "phi2"}));
  integrate->add_flag("--oracle", int_oracle, "also run the floating-point quadrature");

  // pairing
  auto* pairing = app.add_subcommand("pairing", "Dirichlet and Cauchy-Riemann pairings");
  pairing->fallthrough();
  auto* pairing_grad = pairing->add_subcommand("grad", "integral <grad phi^a, grad phi^b>");
  pairing_grad->fallthrough();
  auto* pairing_cr = pairing->add_subcommand("cr", "integral phi_i <J grad phi^a, grad phi^b>");
  pairing_cr->fallthrough();
  std::vector<int> pair_args;
  int cr_axis = 1;
  bool pair_oracle = false;
  pairing_grad->add_option("indices", pair_args, "a1 a2 a3 b1 b2 b3")->expected(6);
  pairing_grad->add_flag("--oracle", pair_oracle, "recompute by the second route");
  std::vector<int> cr_args;
  pairing_cr->add_option("axis", cr_axis, "coordinate axis 1..3")->required();
  pairing_cr->add_option("indices", cr_args, "a1 a2 a3 b1 b2 b3")->expected(6);
  pairing_cr->add_flag("--oracle", pair_oracle, "recompute by the second route");

  // form
  auto* form = app.add_subcommand("form", "assemble a stability form");
  form->fallthrough();
  auto* form_long = form->add_subcommand("long", "four-function form");
  form_long->fallthrough();
  auto* form_short = form->add_subcommand("short", "pair form");
  form_short->fallthrough();
  int form_degree = 1, form_axis = 1;
  std::string form_out;
  form_long->add_option("--degree", form_degree, "monomial degree")->required();
  form_long->add_option("--out", form_out, "write matrix.json or matrix.csv");
  form_short->add_option("--degree", form_degree, "monomial degree")->required();
  form_short->add_option("--axis", form_axis, "coordinate axis 1..3")->required();
  form_short->add_option("--out", form_out, "write matrix.json or matrix.csv");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Jacobi eigenvalues of an assembled form");
  spectrum->fallthrough();
  int spec_degree = 1, spec_axis = 0;
  bool spec_fhess = false;
  double spec_tol = 1e-13;
  spectrum->add_option("--degree", spec_degree, "monomial degree");
  spectrum->add_option("--short", spec_axis, "use the pair form on this axis");
  spectrum->add_flag("--fhess", spec_fhess, "use the 10x10 hessian of F");
  spectrum->add_option("--tol", spec_tol, "off-diagonal convergence threshold");

  // certify
  auto* certify = app.add_subcommand("certify", "exact stability verdict with certificates");
  certify->fallthrough();
  int cert_degree = 1, cert_axis = 0;
  bool cert_fhess = false;
  auto* cert_degree_opt = certify->add_option("--degree", cert_degree, "monomial degree");
  certify->add_option("--short", cert_axis, "certify the pair form on this axis");
  certify->add_flag("--fhess", cert_fhess, "certify the published 10x10 hessian instead");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Rayleigh-quotient sufficiency report");
  bounds->fallthrough();
  int b_l = 1, b_s = 0, b_m = 2, b_n = 5;
  std::string b_theta = "1";
  bounds->add_option("--l", b_l, "eigenspace degree")->required();
  bounds->add_option("--s", b_s, "second eigenspace degree (default: l)");
  bounds->add_option("--m", b_m, "sphere dimension");
  bounds->add_option("--n", b_n, "codimension");
  bounds->add_option("--theta", b_theta, "comass bound theta as p/q");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "run the published-value suite");
  reproduce->fallthrough();
  std::string only;
  reproduce->add_option("--only", only, "run a single item by name");

  // extend
  auto* extend = app.add_subcommand("extend", "certify the degree-4/5 long forms");
  extend->fallthrough();
  int ext_degree = 4;
  std::string ext_out;
  extend->add_option("--degree", ext_degree, "monomial degree (3, 4 or 5)")->required();
  extend->add_option("--out", ext_out, "write the versioned JSON fixture here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*integrate) return cmd_integrate(echo, exps, m, units, int_oracle, as_json);
    if (*pairing_grad) {
      std::vector<int> a(pair_args.begin(), pair_args.begin() + 3);
      std::vector<int> b(pair_args.begin() + 3, pair_args.end());
      return cmd_pairing(echo, "grad", 0, a, b, pair_oracle, as_json);
    }
    if (*pairing_cr) {
      std::vector<int> a(cr_args.begin(), cr_args.begin() + 3);
      std::vector<int> b(cr_args.begin() + 3, cr_args.end());
      return cmd_pairing(echo, "cr", cr_axis, a, b, pair_oracle, as_json);
    }
    if (*form_long) return cmd_form(echo, "long", form_degree, 0, form_out, as_json);
    if (*form_short) return cmd_form(echo, "short", form_degree, form_axis, form_out, as_json);
    if (*spectrum) return cmd_spectrum(echo, spec_degree, spec_axis, spec_fhess, spec_tol, as_json);
    if (*certify) {
      if (!cert_fhess && cert_degree_opt->count() == 0) {
        throw std::invalid_argument("certify needs --degree (or --fhess)");
      }
      return cmd_certify(echo, cert_degree, cert_axis, cert_fhess, as_json);
    }
    if (*bounds) return cmd_bounds(echo, b_l, b_s > 0 ? b_s : b_l, b_m, b_n, b_theta, as_json);
    if (*reproduce) return cmd_reproduce(echo, only, as_json);
    if (*extend) return cmd_extend(echo, ext_degree, ext_out, as_json);
    std::cerr << "no command selected\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
