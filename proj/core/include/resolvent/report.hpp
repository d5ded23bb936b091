#pragma once

#include <string>

#include "resolvent/pipeline.hpp"

namespace resolvent {

// Fixed-order JSON document for a run; floats formatted at 17 significant
// digits, rationals as "p/q" (bare integer when q = 1).
std::string report_to_json(const RunReport& rep);

// {order, shift, coefficients: [...]} with coefficient lists ordered
// y^(r) .. y, each ascending in s.
std::string ode_to_json(const ResolventODE& ode);

// Header branch_id,i,re,im; one row per stored (unscaled) coefficient.
std::string coeffs_to_csv(const RunReport& rep);

// One-screen human summary.
std::string report_to_text(const RunReport& rep);

std::string format_double(double v);

}  // namespace resolvent
