// Command line front end: parse a structure file, dispatch one query, print
// the result, and map exceptions onto the documented exit codes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zlat/fixtures.hpp"
#include "zlat/query.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zlat::error(zlat::errc::bad_param, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_fixtures(const std::string& name, bool as_json) {
  if (name.empty()) {
    if (as_json) {
      nlohmann::json o;
      o["command"] = "fixtures";
      nlohmann::json arr = nlohmann::json::array();
      for (std::string_view n : zlat::fixture_names()) arr.push_back(std::string(n));
      o["fixtures"] = std::move(arr);
      std::cout << o.dump(2) << "\n";
    } else {
      for (std::string_view n : zlat::fixture_names()) std::cout << n << "\n";
    }
    return 0;
  }
  zlat::mult_lattice ml = zlat::fixture_by_name(name);
  std::string text = zlat::serialize_mlat(zlat::document_from_structure(ml));
  if (as_json) {
    nlohmann::json o;
    o["command"] = "fixtures";
    o["name"] = std::string(ml.name());
    o["mlat"] = text;
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite multiplicative lattice toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string file, element, property, mode = "all", fixture;
  std::vector<std::string> theorems;
  unsigned max_size = 5, ceiling = 6;
  bool no_dedupe = false;

  CLI::App* validate = app.add_subcommand("validate", "check a structure file");
  validate->add_option("file", file, "structure file")->required();

  CLI::App* classify = app.add_subcommand("classify", "element classification table");
  classify->add_option("file", file, "structure file")->required();
  classify->add_option("-e,--element", element, "restrict to one element");

  CLI::App* zmap = app.add_subcommand("zmap", "per-element z data and structure predicates");
  zmap->add_option("file", file, "structure file")->required();

  CLI::App* closure = app.add_subcommand("closure", "z-closure of one element");
  closure->add_option("file", file, "structure file")->required();
  closure->add_option("-e,--element", element, "element to close")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the theorem catalog");
  verify->add_option("file", file, "structure file")->required();
  verify->add_option("-t,--theorem", theorems, "theorem codes (default: all)");

  CLI::App* search = app.add_subcommand("search", "hunt a counterexample over the corpus");
  search->add_option("-p,--property", property, "property code")->required();
  search->add_option("--max-size", max_size, "largest universe to enumerate");
  search->add_option("--mode", mode, "all, frame-only or fixtures-only");
  search->add_option("--ceiling", ceiling, "hard enumeration ceiling");
  search->add_flag("--no-dedupe", no_dedupe, "keep isomorphic duplicates");

  CLI::App* fixtures = app.add_subcommand("fixtures", "list or print the named fixtures");
  fixtures->add_option("name", fixture, "fixture to print as a structure file");

  // Let --json appear after the subcommand name as well as before it.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixtures->parsed()) return run_fixtures(fixture, as_json);

    zlat::query_request req;
    zlat::mlat_document doc;
    if (search->parsed()) {
      req.command = "search";
      req.property = property;
      req.spec.max_n = max_size;
      req.spec.ceiling = ceiling;
      req.spec.mode = zlat::mult_mode_from_code(mode);
      req.spec.dedupe_isomorphic = !no_dedupe;
    } else {
      doc = zlat::parse_mlat(read_file(file));
      if (validate->parsed()) req.command = "validate";
      if (classify->parsed()) req.command = "classify";
      if (zmap->parsed()) req.command = "zmap";
      if (closure->parsed()) req.command = "closure";
      if (verify->parsed()) req.command = "verify";
      if (!element.empty()) req.element = element;
      req.theorem_codes = theorems;
    }
    zlat::query_result r = zlat::run_query(
        doc, req, as_json ? zlat::output_format::json : zlat::output_format::text);
    std::cout << r.body;
    return r.exit_code;
  } catch (const zlat::parse_error& e) {
    std::cerr << "parse error at line " << e.line() << ", col " << e.col() << ": "
              << e.what() << "\n";
    return 3;
  } catch (const zlat::error& e) {
    std::cerr << "error: " << e.what() << " (code " << zlat::errc_name(e.code()) << ")\n";
    return 1;
  }
}
