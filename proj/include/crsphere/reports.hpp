// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json_fwd.hpp>

namespace crsphere {

inline constexpr const char* kVersion = "1.0.0";

/// Full certification report for the degree-l long form: assembles the
/// matrix, splits it into coupling blocks, and certifies each block with
/// exact inertia plus an integer witness wherever a negative direction
/// exists. Deterministic; timings are not included (callers add them).
/// Shared by the `extend` command and the regression fixtures.
nlohmann::ordered_json extend_report(int degree);

/// Certification summary (verdict, inertia, blocks, witness) for an
/// arbitrary assembled form. degree/axis parametrize long_form/short_form.
nlohmann::ordered_json certify_report(int degree, int short_axis /* 0 = long form */);

}  // namespace crsphere
