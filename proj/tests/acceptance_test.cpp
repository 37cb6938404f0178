// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails. Times are wall
// clock and are part of the criterion.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crsphere/bounds.hpp"
#include "crsphere/certify.hpp"
#include "crsphere/forms.hpp"
#include "crsphere/quadrature.hpp"
#include "crsphere/reports.hpp"

using namespace crsphere;
using json = nlohmann::ordered_json;

namespace {

struct Criterion {
  int number;
  std::string name;
  double time_limit_s;
  std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& why, const std::string& label) {
  if (!ok) {
    if (!why.empty()) why += "; ";
    why += label;
  }
  return ok;
}

// --- criterion 1 -----------------------------------------------------------

bool criterion_integrals(std::string& why) {
  bool ok = true;
  ok &= check(integrate_monomial(MultiIndex(2, 0, 0)) == make_rational(1, 3), why, "(2,0,0)");
  ok &= check(integrate_monomial(MultiIndex(2, 2, 0)) == make_rational(1, 15), why, "(2,2,0)");
  ok &= check(integrate_monomial(MultiIndex(4, 0, 0)) == make_rational(1, 5), why, "(4,0,0)");
  ok &= check(integrate_monomial(MultiIndex(6, 0, 0)) == make_rational(1, 7), why, "(6,0,0)");
  ok &= check(integrate_monomial(MultiIndex(4, 2, 0)) == make_rational(1, 35), why, "(4,2,0)");
  ok &= check(integrate_monomial(MultiIndex(2, 2, 2)) == make_rational(1, 105), why, "(2,2,2)");
  for (int d = 1; d <= 8 && ok; ++d) {
    for (const auto& a : monomial_basis(d)) {
      if (!a.all_even() && integrate_monomial(a) != 0) {
        ok = check(false, why, "odd index " + a.to_string() + " not zero");
        break;
      }
    }
  }
  return ok;
}

// --- criterion 2 -----------------------------------------------------------

bool criterion_oracles(std::string& why) {
  bool ok = true;
  for (int d = 0; d <= 16; d += 2) {
    for (const auto& a : monomial_basis(d)) {
      if (!a.all_even()) continue;
      if (integrate_monomial(a) != factorial_oracle(a)) {
        ok = check(false, why, "factorial oracle " + a.to_string());
      }
    }
  }
  for (int l = 0; l <= 6; ++l) {
    auto basis = monomial_basis(l);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        if (dirichlet_pair(a, b) != dirichlet_pair_pointwise(a, b)) {
          ok = check(false, why, "dirichlet dual " + a.to_string() + b.to_string());
        }
      }
    }
  }
  for (int l = 0; l <= 5; ++l) {
    auto basis = monomial_basis(l);
    for (int i = 1; i <= 3; ++i) {
      for (const auto& a : basis) {
        for (const auto& b : basis) {
          if (cr_pair(i, a, b) != cr_pair_oracle(i, a, b)) {
            ok = check(false, why, "cr oracle " + a.to_string() + b.to_string());
          }
        }
      }
    }
  }
  return ok;
}

// --- criterion 3 -----------------------------------------------------------

bool criterion_structure(std::string& why) {
  bool ok = true;
  ok &= check(triple_det(Polynomial::variable(1), Polynomial::variable(2)) ==
                  Polynomial::variable(3),
              why, "triple_det(phi1,phi2) != phi3");
  ok &= check(cr_pair(3, MultiIndex(1, 0, 0), MultiIndex(0, 1, 0)) == make_rational(1, 3), why,
              "cr_pair(3,e1,e2) != 1/3");

  std::vector<std::vector<Polynomial>> harmonics(6);
  for (int l = 0; l <= 5; ++l) {
    for (const auto& a : monomial_basis(l)) {
      auto dec = harmonic_decompose(Polynomial::monomial(a));
      for (const auto& [d, h] : dec.components) {
        if (d == l) harmonics[l].push_back(h);
      }
    }
  }
  for (int l = 1; l <= 5; ++l) {
    for (int i = 1; i <= 3; ++i) {
      for (const auto& h : harmonics[l]) {
        Polynomial bracket = triple_det(Polynomial::variable(i), h);
        if (bracket.is_zero()) continue;
        auto dec = harmonic_decompose(bracket);
        if (dec.components.size() != 1 || dec.components[0].first != l) {
          ok = check(false, why, "bracket degree not preserved at l=" + std::to_string(l));
        }
      }
    }
  }
  for (int l = 0; l <= 5; ++l) {
    for (int s = 0; s < l; ++s) {
      for (const auto& h : harmonics[l]) {
        for (const auto& g : harmonics[s]) {
          for (int i = 1; i <= 3; ++i) {
            if (cr_value(i, h, g) != 0) {
              ok = check(false, why,
                         "cross-degree pairing nonzero at (" + std::to_string(l) + "," +
                             std::to_string(s) + ")");
            }
          }
        }
      }
    }
  }
  return ok;
}

// --- criterion 4 -----------------------------------------------------------

bool criterion_short_forms(std::string& why) {
  bool ok = true;
  for (int i = 1; i <= 3; ++i) {
    for (int l = 0; l <= 6; ++l) {
      Inertia sig = inertia(short_form(i, l));
      if (sig.n_neg != 0) {
        ok = check(false, why,
                   "short_form(" + std::to_string(i) + "," + std::to_string(l) + ") has n_neg=" +
                       std::to_string(sig.n_neg));
      }
    }
  }
  SymQForm s11 = short_form(1, 1);
  Inertia sig = inertia(s11);
  ok &= check(sig.n_zero == 2, why, "kernel of short_form(1,1) is not 2-dimensional");
  std::vector<Rational> v1(6, Rational(0)), v2(6, Rational(0));
  v1[s11.index_of({0, MultiIndex(0, 1, 0)})] = 1;
  v1[s11.index_of({1, MultiIndex(0, 0, 1)})] = 1;
  v2[s11.index_of({0, MultiIndex(0, 0, 1)})] = 1;
  v2[s11.index_of({1, MultiIndex(0, 1, 0)})] = -1;
  for (const auto& v : {v1, v2}) {
    for (const auto& e : s11.matrix.apply(v)) {
      if (e != 0) ok = check(false, why, "stated equality vector is not in the kernel");
    }
  }
  return ok;
}

// --- criterion 5 -----------------------------------------------------------

bool criterion_long_forms(std::string& why) {
  bool ok = true;
  ok &= check(long_form(0).matrix.is_zero(), why, "long_form(0) not zero");
  Inertia sig1 = inertia(long_form(1));
  ok &= check(sig1.n_neg == 0 && sig1.n_zero == 8, why,
              "long_form(1) inertia " + sig1.to_string() + " != PSD nullity 8");
  Inertia sig2 = inertia(long_form(2));
  ok &= check(sig2.n_neg == 0, why, "long_form(2) not PSD: " + sig2.to_string());
  ok &= check(sig2.n_zero >= 4, why, "long_form(2) nullity < 4");
  Inertia sig3 = inertia(long_form(3));
  ok &= check(sig3.n_neg >= 1, why,
              "published claim refuted: exact inertia of long_form(3) is " + sig3.to_string() +
                  " (PSD); the printed degree-3 expansion dropped four couplings, see "
                  "f_block_discrepancies and the decisions ledger");
  return ok;
}

// --- criterion 6 -----------------------------------------------------------

bool criterion_lemma_310(std::string& why) {
  bool ok = true;
  ok &= check(f_polynomial(f_paper_vector()) == Rational(-138), why, "F(paper vector) != -138");

  RatMatrix h = f_hessian();
  ok &= check(inertia(h) == Inertia{9, 1, 0}, why, "inertia(Hess F) != (9,1,0)");

  const std::vector<double> published = {
      193.95260118883090, 123.94135950568288, 111.22289635621148, 64.826325872315152,
      39.493408799262383, 34.522364101735334, 26.731868670430774, 15.181112147219768,
      5.8125282188336085, -3.6844648605223074};
  auto res = jacobi_spectrum(h);
  for (size_t i = 0; i < published.size(); ++i) {
    if (std::abs(res.eigenvalues[i] - published[i]) > 1e-6 * std::abs(published[i])) {
      ok = check(false, why, "eigenvalue " + std::to_string(i) + " off published value");
    }
  }

  Rational trace(0);
  for (int i = 0; i < 10; ++i) trace += h.at(i, i);
  ok &= check(trace == Rational(612), why, "trace(Hess F) != 612");

  SymQForm q3 = long_form(3);
  std::vector<int> idx;
  for (const auto& label : f_variable_labels()) idx.push_back(q3.index_of(label));
  RatMatrix block = q3.matrix.submatrix(idx);
  Rational s = Rational(2) * block.at(0, 0) / h.at(0, 0);
  ok &= check(s > 0, why, "block scale not positive");
  auto diffs = f_block_discrepancies();
  if (!diffs.empty()) {
    std::string cells;
    for (const auto& d : diffs) {
      cells += " (" + std::to_string(d.f_row) + "," + std::to_string(d.f_col) + ")=" +
               to_string(d.assembled);
    }
    ok = check(false, why,
               "block/hessian proportionality fails at" + cells +
                   "; the printed expansion dropped these couplings (exact values verified by "
                   "the determinant oracle and symbolic integration)");
  }
  Rational gap = q3.evaluate(embed_f_variables(f_paper_vector()));
  ok &= check(gap < 0, why,
              "embedded paper vector does not violate the inequality: exact gap = " +
                  to_string(gap) + " > 0");
  ok &= check(gap == s * Rational(-138), why, "embedded gap != s * (-138)");
  return ok;
}

// --- criterion 7 -----------------------------------------------------------

bool criterion_counterexample(std::string& why) {
  bool ok = true;
  SymQForm q3 = long_form(3);

  auto fs = counterexample_functions();
  CoeffVector cv = embed_functions(fs[0], fs[1], fs[2], fs[3], 3);
  Rational functions_gap = q3.evaluate(cv.to_dense());
  Rational vector_gap = q3.evaluate(embed_f_variables(f_paper_vector()));

  // Cross-report through the independent polynomial route.
  ok &= check(functions_gap == long_gap_poly(fs), why, "matrix and polynomial routes disagree");
  ok &= check(functions_gap < 0 || vector_gap < 0, why,
              "neither candidate certifies instability: both gaps are positive under the exact "
              "form (published claim refuted)");

  std::cout << "      counterexample report: stated functions gap = " << to_string(functions_gap)
            << (functions_gap < 0 ? " (violates)" : " (does not violate)")
            << "; published 10-vector gap = " << to_string(vector_gap)
            << (vector_gap < 0 ? " (violates)" : " (does not violate)") << "\n";
  std::cout << "      note: printed f4 uses coefficient 4 on phi1^2 phi3, the tested vector "
               "uses 3; the discrepancy is reported, not resolved\n";
  return ok;
}

// --- criterion 8 -----------------------------------------------------------

bool criterion_bounds(std::string& why) {
  bool ok = true;
  for (int l = 1; l <= 5; ++l) {
    if (rayleigh_bound(l, l, 2, 5, Rational(1)).eigenvalue_sufficiency) {
      ok = check(false, why, "sufficiency should fail at l=" + std::to_string(l));
    }
  }
  ok &= check(rayleigh_bound(6, 6, 2, 5, Rational(1)).eigenvalue_sufficiency, why,
              "sufficiency should hold at l=6");
  return ok;
}

// --- criterion 9 -----------------------------------------------------------

bool fixture_matches(const json& fresh, const json& stored, std::string& why) {
  // Exact fields must be identical; floating-point spectra and the witness
  // path may legitimately differ across toolchains, so witnesses are
  // re-verified rather than byte-compared.
  const json& fr = fresh.at("report");
  const json& st = stored.at("report");
  bool ok = true;
  ok &= check(fresh.at("fixture_version") == stored.at("fixture_version"), why,
              "fixture version changed");
  ok &= check(fr.at("dim") == st.at("dim"), why, "dimension changed");
  ok &= check(fr.at("verdict") == st.at("verdict"), why, "verdict changed");
  ok &= check(fr.at("inertia") == st.at("inertia"), why, "inertia changed");
  const auto& fb = fr.at("blocks");
  const auto& sb = st.at("blocks");
  ok &= check(fb.size() == sb.size(), why, "block count changed");
  for (size_t i = 0; ok && i < fb.size(); ++i) {
    ok &= check(fb[i].at("size") == sb[i].at("size"), why, "block size changed");
    ok &= check(fb[i].at("labels") == sb[i].at("labels"), why, "block labels changed");
    ok &= check(fb[i].at("inertia") == sb[i].at("inertia"), why, "block inertia changed");
    ok &= check(fb[i].at("verdict") == sb[i].at("verdict"), why, "block verdict changed");
  }
  return ok;
}

bool criterion_extension(std::string& why) {
  bool ok = true;
  for (int degree : {4, 5}) {
    json fresh = extend_report(degree);
    const json& rep = fresh.at("report");
    int expected_dim = 4 * monomial_count(degree);
    ok &= check(rep.at("dim").get<int>() == expected_dim, why,
                "degree " + std::to_string(degree) + " dimension != " +
                    std::to_string(expected_dim));

    // Every block must be certified; negative blocks must carry an exact
    // integer witness that re-evaluates negative.
    SymQForm q = long_form(degree);
    for (const auto& blk : rep.at("blocks")) {
      Inertia sig{blk.at("inertia").at("pos").get<int>(), blk.at("inertia").at("neg").get<int>(),
                  blk.at("inertia").at("zero").get<int>()};
      int size = blk.at("size").get<int>();
      ok &= check(sig.n_pos + sig.n_neg + sig.n_zero == size, why, "inertia does not sum");
      if (sig.n_neg > 0) {
        ok &= check(blk.contains("witness_full"), why, "negative block without witness");
        std::vector<Rational> w;
        for (const auto& entry : blk.at("witness_full")) {
          w.push_back(rational_from_string(entry.get<std::string>()));
        }
        Rational value = q.evaluate(w);
        ok &= check(value < 0, why, "witness does not re-evaluate negative");
        ok &= check(to_string(value) == blk.at("witness_value").get<std::string>(), why,
                    "witness value mismatch");
      }
    }

    std::string path = std::string(CRSPHERE_FIXTURE_DIR) + "/extend_l" + std::to_string(degree) +
                       ".json";
    std::ifstream in(path);
    if (in) {
      json stored = json::parse(in);
      ok &= fixture_matches(fresh, stored, why);
    } else {
      std::ofstream out(path);
      out << fresh.dump(2) << "\n";
      std::cout << "      wrote new fixture " << path << "\n";
    }
    std::cout << "      degree " << degree << ": verdict "
              << rep.at("verdict").get<std::string>() << ", inertia ("
              << rep.at("inertia").at("pos") << "," << rep.at("inertia").at("neg") << ","
              << rep.at("inertia").at("zero") << ")\n";
  }
  return ok;
}

// --- criterion 10 ----------------------------------------------------------

bool criterion_quadrature(std::string& why) {
  bool ok = true;
  const double four_pi = 4.0 * std::numbers::pi;
  for (int d = 0; d <= 12; ++d) {
    for (const auto& a : monomial_basis(d)) {
      double exact = four_pi * integrate_monomial(a).get_d();
      double quad = quad_integrate(Polynomial::monomial(a), 8, 16);
      if (std::abs(quad - exact) > 1e-10) {
        ok = check(false, why, "quadrature off at " + a.to_string());
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "exact integrals", 1.0, criterion_integrals},
      {2, "oracle equivalences", 60.0, criterion_oracles},
      {3, "structure identities", 30.0, criterion_structure},
      {4, "pair inequality at desk scale", 120.0, criterion_short_forms},
      {5, "long-form verdicts l=0..3", 300.0, criterion_long_forms},
      {6, "10x10 block reproduction", 60.0, criterion_lemma_310},
      {7, "counterexample functions report", 60.0, criterion_counterexample},
      {8, "eigenvalue sufficiency bounds", 1.0, criterion_bounds},
      {9, "degree-4/5 extension", 1800.0, criterion_extension},
      {10, "quadrature cross-check", 10.0, criterion_quadrature},
  };

  int failures = 0;
  for (auto& criterion : criteria) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.time_limit_s) {
      ok = false;
      why += (why.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.number << ": " << criterion.name
         << "  [" << seconds << "s]";
    if (!ok) line << "  -- " << why;
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED\n";
  std::cout << "note: criteria 5, 6 and 7 encode published degree-3 claims that exact\n"
               "arithmetic refutes (four couplings are missing from the printed expansion;\n"
               "the assembled form is PSD and both published witnesses evaluate positive).\n"
               "The failures above are the faithful report of that finding; see README.md\n"
               "and `crsphere reproduce` for the full diagnosis.\n";
  return 1;
}
