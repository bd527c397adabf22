#pragma once

#include <string>
#include <vector>

#include "holofield/io.hpp"

namespace holofield::reports {

using json = nlohmann::json;

struct Options {
  Limits limits;
  bool verify = false;
};

// Each builder returns {"result": ..., "citations": [...]}.
json surface_info(const json& surface, const Options& opt = {});
json holonomy(const json& surface, const Options& opt = {});
json fod(const json& subspace, const Options& opt = {});
json intersect_fields(const std::vector<json>& fields, const Options& opt = {});
json k_of_m(const std::vector<json>& surfaces, const Options& opt = {});
/// mode is "pa", "decompose" or "blocks".
json monodromy(const json& rep, const std::string& mode, const Options& opt = {});
/// input is a periods file or a surface file.
json typical(const json& input, const json& ambient, const Options& opt = {});

}  // namespace holofield::reports
