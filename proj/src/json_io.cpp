#include "cocyclelab/json_io.hpp"

namespace cocyclelab {

nlohmann::json to_json(const LongestElementReport& rep) {
  nlohmann::json action = nlohmann::json::array();
  for (const auto& row : rep.action)
    for (const auto& entry : row) action.push_back(to_string(entry));
  return nlohmann::json{
      {"type", rep.type_label},
      {"rank", rep.rank},
      {"word_length", rep.word.size()},
      {"word", rep.word},
      {"action", action},
      {"basis", rep.basis},
      {"s", rep.s},
      {"t", rep.t},
      {"minus_one", rep.minus_one},
  };
}

nlohmann::json to_json(const InvariantDims& inv, const CohomologyTable& table) {
  const int top = table.max_degree;
  auto clip = [&](const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out(top + 1, 0);
    for (int k = 0; k <= top && k < static_cast<int>(v.size()); ++k) out[k] = v[k];
    return out;
  };
  return nlohmann::json{
      {"rank", inv.rank},
      {"s", inv.signature.s},
      {"t", inv.signature.t},
      {"max_degree", top},
      {"dim_H_A", clip(inv.dims_HA)},
      {"dim_H_A_w0", clip(inv.dims_HA_w0)},
      {"dim_H_A_equiv", clip(inv.dims_HA_equiv)},
      {"dim_NH", table.dim_NH},
      {"dim_NH_nalt", table.dim_NH_nalt},
      {"dim_NH_alt", table.dim_NH_alt},
  };
}

nlohmann::json to_json(const SpectralPage& page) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : page.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) {
      if (std::holds_alternative<std::int64_t>(e))
        r.push_back(std::get<std::int64_t>(e));
      else
        r.push_back(std::get<std::string>(e));
    }
    rows.push_back(std::move(r));
  }
  return nlohmann::json{
      {"label", page.label}, {"max_p", page.max_p}, {"max_q", page.max_q}, {"rows", rows}};
}

nlohmann::json to_json(const std::vector<SpectralPage>& pages) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pages) out.push_back(to_json(p));
  return out;
}

nlohmann::json to_json(const VerificationReport& rep) {
  return nlohmann::json{
      {"check_name", rep.check_name},
      {"trials", rep.trials},
      {"rejected", rep.rejected},
      {"max_abs_residual", rep.max_abs_residual},
      {"max_rel_residual", rep.max_rel_residual},
      {"tolerance", rep.tolerance},
      {"pass", rep.pass},
      {"seed", rep.seed},
  };
}

}  // namespace cocyclelab
