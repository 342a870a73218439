#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "xebspoof/spoofer.hpp"

namespace xeb {

using Json = nlohmann::ordered_json;

/// {"n": int, "d": int, "perms": [[...], ...]} with 1-based images.
Json skeleton_to_json(const Skeleton &s);
Skeleton skeleton_from_json(const Json &j);

/// Skeleton fields plus "gates": d layers of n/2 gates, each 16 [re, im]
/// pairs in row-major order.
Json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const Json &j);

/// Selected outputs (1-based), marginal pairs, achieved m, cone sizes.
Json plan_to_json(const SpoofPlan &p);

/// "bitstring,probability" rows, bitstring as the integer with output i on
/// bit i-1.
void write_distribution_csv(std::ostream &os, const VectorXd &q);

/// Stable text form: two-space indentation and a trailing newline.
std::string dump(const Json &j);

Json read_json_file(const std::string &path);

} // namespace xeb
