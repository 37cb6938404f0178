// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/reports.hpp"

#include <nlohmann/json.hpp>

#include "crsphere/certify.hpp"
#include "crsphere/forms.hpp"

namespace crsphere {

namespace {

nlohmann::ordered_json inertia_json(const Inertia& sig) {
  return {{"pos", sig.n_pos}, {"neg", sig.n_neg}, {"zero", sig.n_zero}};
}

}  // namespace

nlohmann::ordered_json certify_report(int degree, int short_axis) {
  SymQForm q = short_axis > 0 ? short_form(short_axis, degree) : long_form(degree);
  auto blocks = block_decompose(q);

  nlohmann::ordered_json rep;
  rep["form"] = short_axis > 0 ? "short" : "long";
  rep["degree"] = degree;
  if (short_axis > 0) rep["axis"] = short_axis;
  rep["dim"] = q.dim();

  Inertia total;
  bool unstable = false;
  auto blocks_json = nlohmann::ordered_json::array();
  for (const auto& block : blocks) {
    RatMatrix sub = q.matrix.submatrix(block);
    Certificate cert = instability_certificate(sub);
    Inertia sig = inertia(sub);
    total.n_pos += sig.n_pos;
    total.n_neg += sig.n_neg;
    total.n_zero += sig.n_zero;

    nlohmann::ordered_json bj;
    auto labels = nlohmann::ordered_json::array();
    for (int idx : block) labels.push_back(q.basis[idx].to_string());
    bj["size"] = static_cast<int>(block.size());
    bj["labels"] = std::move(labels);
    bj["inertia"] = inertia_json(sig);
    if (cert.kind == Certificate::Kind::kUnstable) {
      unstable = true;
      bj["verdict"] = "unstable";
      auto witness = nlohmann::ordered_json::array();
      // Block-local witness lifted to full coordinates.
      auto full = nlohmann::ordered_json::array();
      std::vector<Integer> lifted(q.dim(), Integer(0));
      for (size_t i = 0; i < block.size(); ++i) {
        witness.push_back(cert.witness[i].get_str());
        lifted[block[i]] = cert.witness[i];
      }
      for (const auto& x : lifted) full.push_back(x.get_str());
      bj["witness"] = std::move(witness);
      bj["witness_full"] = std::move(full);
      bj["witness_value"] = to_string(cert.witness_value);
      bj["witness_scale"] = cert.scale_used;
    } else {
      bj["verdict"] = "stable";
      bj["kernel_dim"] = static_cast<int>(cert.kernel.size());
    }
    auto spectrum = nlohmann::ordered_json::array();
    if (!sub.is_zero()) {
      for (double ev : jacobi_spectrum(sub).eigenvalues) spectrum.push_back(format_double(ev));
    } else {
      for (size_t i = 0; i < block.size(); ++i) spectrum.push_back(format_double(0.0));
    }
    bj["spectrum"] = std::move(spectrum);
    blocks_json.push_back(std::move(bj));
  }
  rep["inertia"] = inertia_json(total);
  rep["verdict"] = unstable ? "unstable" : "stable";
  rep["blocks"] = std::move(blocks_json);
  return rep;
}

nlohmann::ordered_json extend_report(int degree) {
  nlohmann::ordered_json rep;
  rep["fixture_version"] = 1;
  rep["artifact_version"] = kVersion;
  rep["report"] = certify_report(degree, 0);
  return rep;
}

}  // namespace crsphere
