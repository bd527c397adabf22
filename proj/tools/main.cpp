#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "holofield/reports.hpp"

namespace {

using holofield::Error;
using json = nlohmann::json;

struct Input {
  std::string file;
  std::string bytes;
  json value;
};

std::string sha256_hex(const std::string& data) {
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), out, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    s += hex[out[i] >> 4];
    s += hex[out[i] & 15];
  }
  return s;
}

Input load(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  holofield::require(in.good(), holofield::ErrorKind::InvalidInput, "cannot read " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  Input r{file, ss.str(), json()};
  try {
    r.value = json::parse(r.bytes);
  } catch (const json::exception& e) {
    throw Error(holofield::ErrorKind::InvalidInput, file + ": " + e.what());
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact holonomy fields, fields of definition and monodromy decompositions"};
  app.require_subcommand(1);
  std::string config_file, out_file;
  bool verify = false;
  app.add_option("--config", config_file, "JSON file with degree caps and step budgets");
  app.add_flag("--verify", verify, "re-check every postcondition exactly");
  app.add_option("--out", out_file, "write the report here instead of stdout");

  std::vector<std::string> files;
  std::string ambient_file;
  bool pa = false, decompose = false, blocks = false;

  auto* info = app.add_subcommand("surface-info", "stratum, homology ranks and periods");
  info->add_option("file", files, "surface file")->required()->expected(1);
  auto* hol = app.add_subcommand("holonomy", "holonomy field of a surface");
  hol->add_option("file", files, "surface file")->required()->expected(1);
  auto* fod = app.add_subcommand("fod", "field of definition of a subspace");
  fod->add_option("file", files, "subspace file")->required()->expected(1);
  auto* inter = app.add_subcommand("intersect-fields", "intersection of number fields");
  inter->add_option("files", files, "field files")->required();
  auto* kom = app.add_subcommand("k-of-m", "intersection of holonomy fields of sample surfaces");
  kom->add_option("files", files, "surface files")->required();
  auto* mono = app.add_subcommand("monodromy", "Perron data, decomposition or block structure");
  mono->add_option("file", files, "representation file")->required()->expected(1);
  auto* modes = mono->add_option_group("mode");
  modes->add_flag("--pa", pa, "Perron root of the pseudo-Anosov matrix");
  modes->add_flag("--decompose", decompose, "isotypic decomposition");
  modes->add_flag("--blocks", blocks, "relative block structure");
  modes->require_option(1);
  auto* typ = app.add_subcommand("typical", "typical versus special periods");
  typ->add_option("file", files, "periods or surface file")->required()->expected(1);
  typ->add_option("--ambient", ambient_file, "ambient model file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    holofield::reports::Options opt;
    opt.verify = verify;
    if (!config_file.empty()) opt.limits = holofield::io::limits_from(load(config_file).value);

    std::vector<Input> inputs;
    for (const auto& f : files) inputs.push_back(load(f));
    std::vector<json> values;
    for (const auto& i : inputs) values.push_back(i.value);

    std::string command;
    json body;
    if (info->parsed()) {
      command = "surface-info";
      body = holofield::reports::surface_info(values[0], opt);
    } else if (hol->parsed()) {
      command = "holonomy";
      body = holofield::reports::holonomy(values[0], opt);
    } else if (fod->parsed()) {
      command = "fod";
      body = holofield::reports::fod(values[0], opt);
    } else if (inter->parsed()) {
      command = "intersect-fields";
      body = holofield::reports::intersect_fields(values, opt);
    } else if (kom->parsed()) {
      command = "k-of-m";
      body = holofield::reports::k_of_m(values, opt);
    } else if (mono->parsed()) {
      command = "monodromy";
      body = holofield::reports::monodromy(values[0], pa ? "pa" : decompose ? "decompose" : "blocks", opt);
    } else {
      command = "typical";
      inputs.push_back(load(ambient_file));
      body = holofield::reports::typical(values[0], inputs.back().value, opt);
    }

    json report = {{"command", command}, {"result", body["result"]}, {"citations", body["citations"]}};
    json digests = json::array();
    for (const auto& i : inputs) digests.push_back({{"file", i.file}, {"sha256", sha256_hex(i.bytes)}});
    report["inputs"] = digests;
    report["verified"] = verify;

    const std::string text = report.dump(2) + "\n";
    if (out_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_file, std::ios::binary);
      out << text;
      if (!out.good()) {
        std::cerr << "error: cannot write " << out_file << "\n";
        return 1;
      }
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_limit() ? 2 : 1;
  } catch (const json::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << "\n";
    return 1;
  }
}
