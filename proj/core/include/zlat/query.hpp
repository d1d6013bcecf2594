#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zlat/enumerate.hpp"
#include "zlat/mlat.hpp"

namespace zlat {

enum class output_format { text, json };

// One dispatchable request against a parsed document. Commands: validate,
// classify, zmap, closure, verify, search. classify takes an optional element;
// closure requires one; verify takes an optional theorem selection; search
// takes a property plus corpus bounds and ignores the document's structure
// beyond validating it.
struct query_request {
  std::string command;
  std::optional<std::string> element;
  std::vector<std::string> theorem_codes;
  std::optional<std::string> property;
  corpus_spec spec;
};

struct query_result {
  std::string body;
  // 0 = success, 1 = validation failure, 2 = theorem violation or
  // counterexample found. Parse errors surface as exceptions before a result
  // exists and map to 3 at the CLI.
  int exit_code = 0;
};

// unknown_command on a bad command; module errors pass through with structure
// context attached to the message. JSON bodies have element arrays in declared
// order and object keys sorted, and are byte-stable across runs.
query_result run_query(const mlat_document& doc, const query_request& req, output_format fmt);

} // namespace zlat
