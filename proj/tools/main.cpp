#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cocyclelab/cocycles.hpp"
#include "cocyclelab/cohomology.hpp"
#include "cocyclelab/json_io.hpp"
#include "cocyclelab/root_system.hpp"
#include "cocyclelab/weyl.hpp"

namespace {

using namespace cocyclelab;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<std::int64_t> parse_int_list(const std::string& s, const char* flag) {
  std::vector<std::int64_t> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "expected a comma-separated integer list");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

std::string entry_text(const PageEntry& e) {
  if (std::holds_alternative<std::int64_t>(e)) return std::to_string(std::get<std::int64_t>(e));
  return std::get<std::string>(e);
}

void print_page_grid(const SpectralPage& page, std::ostream& os) {
  os << page.label << "\n";
  std::size_t width = 1;
  for (const auto& row : page.entries)
    for (const auto& e : row) width = std::max(width, entry_text(e).size());
  for (int p = page.max_p; p >= 0; --p) {
    os << "p=" << p << " |";
    for (int q = 0; q <= page.max_q; ++q) {
      std::string t = entry_text(page.entries[p][q]);
      os << " " << std::string(width - t.size(), ' ') << t;
    }
    os << "\n";
  }
  os << "     ";
  for (int q = 0; q <= page.max_q; ++q) {
    std::string t = "q=" + std::to_string(q);
    os << " " << std::string(width > t.size() ? width - t.size() : 0, ' ') << t;
  }
  os << "\n";
}

struct TableRequest {
  std::string factors;
  int max_degree = -1;  // -1: rank + 2
  std::string hg;
  std::string format = "tsv";
};

int run_table(const TableRequest& req, bool pages_only, int max_p, int max_q) {
  RootSystem rs = build_root_system(req.factors);
  LongestElementReport w0 = longest_element(rs);
  const int max_degree = req.max_degree >= 0 ? req.max_degree : rs.rank + 2;
  InvariantDims inv = invariant_dims({w0.s, w0.t}, max_degree);
  CohomologyTable table = kernel_table(inv, max_degree);

  std::optional<std::vector<std::int64_t>> hg;
  if (!req.hg.empty()) hg = parse_int_list(req.hg, "--hg");

  const int mp = max_p >= 0 ? max_p : max_degree;
  const int mq = max_q >= 0 ? max_q : max_degree;
  auto pages = spectral_pages(inv, mp, mq, hg);

  if (req.format == "json") {
    nlohmann::json j = to_json(inv, table);
    j["type"] = rs.label();
    j["pages"] = to_json(pages);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (pages_only) {
    for (const auto& page : pages) {
      print_page_grid(page, std::cout);
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << "degree\tH_A\tH_A_w0\tH_A_equiv\tNH\tNH_nalt\tNH_alt\n";
  for (int k = 0; k <= max_degree; ++k) {
    auto at = [&](const std::vector<std::int64_t>& v) {
      return k < static_cast<int>(v.size()) ? v[k] : 0;
    };
    std::cout << k << "\t" << at(inv.dims_HA) << "\t" << at(inv.dims_HA_w0) << "\t"
              << at(inv.dims_HA_equiv) << "\t" << table.dim_NH[k] << "\t" << table.dim_NH_nalt[k]
              << "\t" << table.dim_NH_alt[k] << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cocyclelab: Weyl longest elements, boundary-cohomology kernel tables, and "
               "numerical cocycle verification"};
  app.require_subcommand(1);

  // weyl
  std::string weyl_type;
  std::string weyl_format = "json";
  auto* weyl_cmd = app.add_subcommand("weyl", "longest Weyl element report for a root system");
  weyl_cmd->add_option("--type", weyl_type, "root system type, e.g. G2 or B2,A2")->required();
  weyl_cmd->add_option("--format", weyl_format)->check(CLI::IsMember({"json", "text"}));

  // table
  TableRequest treq;
  auto* table_cmd = app.add_subcommand("table", "kernel dimension table for a root system");
  table_cmd->add_option("--factors", treq.factors, "root system type, e.g. A1,A1")->required();
  table_cmd->add_option("--max-degree", treq.max_degree, "top degree (default rank + 2)");
  table_cmd->add_option("--hg", treq.hg, "known dims of H^p(G), comma-separated from degree 0");
  table_cmd->add_option("--format", treq.format)->check(CLI::IsMember({"tsv", "json"}));

  // pages
  TableRequest preq;
  preq.format = "text";
  int max_p = -1, max_q = -1;
  auto* pages_cmd = app.add_subcommand("pages", "spectral-sequence page layouts");
  pages_cmd->add_option("--factors", preq.factors, "root system type")->required();
  pages_cmd->add_option("--max-p", max_p, "top row (default rank + 2)");
  pages_cmd->add_option("--max-q", max_q, "top column (default rank + 2)");
  pages_cmd->add_option("--hg", preq.hg, "known dims of H^p(G)");
  pages_cmd->add_option("--format", preq.format)->check(CLI::IsMember({"text", "json"}));

  // verify
  std::string check;
  std::string dims_str;
  long long trials = 1000;
  double tol = 1e-8;
  std::uint64_t seed = 42;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "seeded Monte-Carlo cocycle checks");
  verify_cmd->add_option("--check", check, "one of: " + [] {
                std::string s;
                for (const auto& n : all_check_names()) s += (s.empty() ? "" : ", ") + n;
                return s;
              }())
      ->required();
  verify_cmd->add_option("--dims", dims_str, "hyperbolic dimensions n,m (boundaries R^{n-1}, R^{m-1})")
      ->required();
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--tol", tol);
  verify_cmd->add_option("--seed", seed)->envname("COCYCLELAB_SEED");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (weyl_cmd->parsed()) {
      LongestElementReport rep = longest_element(build_root_system(weyl_type));
      if (weyl_format == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "type: " << rep.type_label << "\nrank: " << rep.rank
                  << "\nword_length: " << rep.word.size() << "\nword:";
        for (int i : rep.word) std::cout << " " << i;
        std::cout << "\ns: " << rep.s << "\nt: " << rep.t
                  << "\nminus_one: " << (rep.minus_one ? "true" : "false") << "\n";
      }
      return 0;
    }
    if (table_cmd->parsed()) return run_table(treq, false, -1, -1);
    if (pages_cmd->parsed()) return run_table(preq, true, max_p, max_q);
    if (verify_cmd->parsed()) {
      auto parsed_dims = parse_int_list(dims_str, "--dims");
      if (parsed_dims.size() != 2)
        throw CLI::ValidationError("--dims", "expects two comma-separated integers");
      std::pair<int, int> dims{static_cast<int>(parsed_dims[0]),
                               static_cast<int>(parsed_dims[1])};
      VerifyOptions opts;
      VerificationReport rep = verify(parse_check(check), dims, trials, tol, seed, opts);
      if (verify_format == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "check: " << rep.check_name << "\ntrials: " << rep.trials
                  << "\nrejected: " << rep.rejected
                  << "\nmax_abs_residual: " << fmt_double(rep.max_abs_residual)
                  << "\nmax_rel_residual: " << fmt_double(rep.max_rel_residual)
                  << "\ntolerance: " << fmt_double(rep.tolerance) << "\nseed: " << rep.seed
                  << "\nseparation: " << fmt_double(opts.separation)
                  << "\ncrossratio_window: [" << fmt_double(opts.crossratio_min) << ", "
                  << fmt_double(opts.crossratio_max) << "]"
                  << "\nresult: " << (rep.pass ? "PASS" : "FAIL") << "\n";
      }
      return rep.pass ? 0 : 1;
    }
  } catch (const InvalidType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidCheck& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
