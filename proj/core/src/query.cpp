#include "zlat/query.hpp"

#include <json.hpp>

#include "zlat/search.hpp"
#include "zlat/spectra.hpp"
#include "zlat/theorems.hpp"
#include "zlat/ztheory.hpp"

namespace zlat {
namespace {

using nlohmann::json;

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string label_list(const mult_lattice& ml, element_set s) {
  std::string out;
  for (element_id x : s) {
    if (!out.empty()) out += " ";
    out += ml.label(x);
  }
  return out.empty() ? "-" : out;
}

json label_array(const mult_lattice& ml, element_set s) {
  json a = json::array();
  for (element_id x : s) a.push_back(ml.label(x));
  return a;
}

json id_array(std::span<const element_id> v) {
  json a = json::array();
  for (element_id x : v) a.push_back(x);
  return a;
}

element_id resolve(const mult_lattice& ml, const std::string& label) {
  if (auto x = ml.lattice().find_label(label)) return *x;
  throw error(errc::undeclared_label, "no element labeled " + label + " in " +
                                          std::string(ml.name()));
}

query_result failure_result(const std::string& command, const error& e, output_format fmt) {
  query_result r;
  r.exit_code = 1;
  if (fmt == output_format::json) {
    json o;
    o["command"] = command;
    o["ok"] = false;
    json err;
    err["code"] = std::string(errc_name(e.code()));
    err["message"] = e.what();
    err["witness"] = id_array(e.witness());
    o["error"] = std::move(err);
    r.body = o.dump(2) + "\n";
  } else {
    r.body = "validation failed: " + std::string(e.what()) + " (code " +
             std::string(errc_name(e.code())) + ")\n";
  }
  return r;
}

json element_json(const mult_lattice& ml, element_id x) {
  classification_record c = classify_element(ml, x);
  z_profile z = z_classify(ml, x);
  json o;
  o["element"] = ml.label(x);
  o["proper"] = c.proper;
  o["maximal"] = c.maximal;
  o["prime"] = c.prime;
  o["semiprime"] = c.semiprime;
  o["primary"] = c.primary;
  o["irreducible"] = c.irreducible;
  o["strongly_irreducible"] = c.strongly_irreducible;
  o["complemented"] = c.complemented;
  o["idempotent"] = c.idempotent;
  o["radical_element"] = c.radical_element;
  o["radical"] = ml.label(c.radical);
  o["z"] = z.is_z;
  o["strong_z"] = z.strong_z;
  o["basic_z"] = z.basic_z;
  o["big_m"] = label_array(ml, z.big_m);
  o["little_m"] = ml.label(z.little_m);
  o["cz"] = ml.label(z.cz);
  o["z_prime"] = z.z_prime;
  o["z_semiprime"] = z.z_semiprime;
  o["z_primary"] = z.z_primary;
  o["z_irreducible"] = z.z_irreducible;
  o["z_strongly_irreducible"] = z.z_strongly_irreducible;
  return o;
}

std::string element_text(const mult_lattice& ml, element_id x) {
  classification_record c = classify_element(ml, x);
  z_profile z = z_classify(ml, x);
  std::string s = ml.label(x) + ":";
  s += " proper=" + std::string(yn(c.proper));
  s += " maximal=" + std::string(yn(c.maximal));
  s += " prime=" + std::string(yn(c.prime));
  s += " semiprime=" + std::string(yn(c.semiprime));
  s += " primary=" + std::string(yn(c.primary));
  s += " irreducible=" + std::string(yn(c.irreducible));
  s += " strongly-irreducible=" + std::string(yn(c.strongly_irreducible));
  s += " complemented=" + std::string(yn(c.complemented));
  s += " idempotent=" + std::string(yn(c.idempotent));
  s += " radical-element=" + std::string(yn(c.radical_element));
  s += " radical=" + ml.label(c.radical);
  s += " z=" + std::string(yn(z.is_z));
  s += " strong-z=" + std::string(yn(z.strong_z));
  s += " basic-z=" + std::string(yn(z.basic_z));
  s += " big-m={" + label_list(ml, z.big_m) + "}";
  s += " little-m=" + ml.label(z.little_m);
  s += " cz=" + ml.label(z.cz);
  s += " z-prime=" + std::string(yn(z.z_prime));
  s += " z-semiprime=" + std::string(yn(z.z_semiprime));
  s += " z-primary=" + std::string(yn(z.z_primary));
  s += " z-irreducible=" + std::string(yn(z.z_irreducible));
  s += " z-strongly-irreducible=" + std::string(yn(z.z_strongly_irreducible));
  return s;
}

query_result do_validate(const mult_lattice& ml, output_format fmt) {
  query_result r;
  if (fmt == output_format::json) {
    json o;
    o["command"] = "validate";
    o["ok"] = true;
    o["name"] = std::string(ml.name());
    o["size"] = ml.size();
    o["bottom"] = ml.label(ml.bottom());
    o["top"] = ml.label(ml.top());
    o["frame"] = is_frame(ml);
    r.body = o.dump(2) + "\n";
  } else {
    r.body = "structure " + std::string(ml.name()) + ": " + std::to_string(ml.size()) +
             " elements, valid\nbottom " + ml.label(ml.bottom()) + ", top " +
             ml.label(ml.top()) + "\nframe: " + yn(is_frame(ml)) + "\n";
  }
  return r;
}

query_result do_classify(const mult_lattice& ml, const query_request& req,
                         output_format fmt) {
  std::vector<element_id> targets;
  if (req.element) {
    targets.push_back(resolve(ml, *req.element));
  } else {
    for (element_id x = 0; x < ml.size(); ++x) targets.push_back(x);
  }
  query_result r;
  if (fmt == output_format::json) {
    json o;
    o["command"] = "classify";
    o["name"] = std::string(ml.name());
    json arr = json::array();
    for (element_id x : targets) arr.push_back(element_json(ml, x));
    o["elements"] = std::move(arr);
    r.body = o.dump(2) + "\n";
  } else {
    r.body = "structure " + std::string(ml.name()) + "\n";
    for (element_id x : targets) r.body += element_text(ml, x) + "\n";
  }
  return r;
}

query_result do_zmap(const mult_lattice& ml, output_format fmt) {
  const spectra_cache& sp = ml.spectra();
  z_predicates_record zp = lattice_z_predicates(ml);
  lattice_predicates_record lp = lattice_predicates(ml);
  element_set zprime = z_primes(ml);
  element_set min_zp = ml.size() >= 2 ? minimal_z_primes(ml) : element_set{};
  query_result r;
  if (fmt == output_format::json) {
    json o;
    o["command"] = "zmap";
    o["name"] = std::string(ml.name());
    o["maximal"] = label_array(ml, sp.maximal);
    o["jacobson"] = ml.label(sp.jacobson);
    o["z_elements"] = label_array(ml, sp.z_set);
    o["z_primes"] = label_array(ml, zprime);
    o["minimal_z_primes"] = label_array(ml, min_zp);
    json pred;
    pred["szi"] = zp.szi;
    pred["pz"] = zp.pz;
    pred["z_join_closed"] = zp.z_join_closed;
    pred["semisimple"] = lp.semisimple;
    pred["quasi_local"] = lp.quasi_local;
    pred["maximal_count"] = lp.maximal_count;
    pred["regular"] = lp.regular;
    pred["frame"] = lp.frame;
    o["predicates"] = std::move(pred);
    json arr = json::array();
    for (element_id x = 0; x < ml.size(); ++x) arr.push_back(element_json(ml, x));
    o["elements"] = std::move(arr);
    r.body = o.dump(2) + "\n";
  } else {
    r.body = "structure " + std::string(ml.name()) + ": " + std::to_string(ml.size()) +
             " elements\n";
    r.body += "maximal: " + label_list(ml, sp.maximal) + "\n";
    r.body += "jacobson: " + ml.label(sp.jacobson) + "\n";
    r.body += "z-elements: " + label_list(ml, sp.z_set) + "\n";
    r.body += "z-primes: " + label_list(ml, zprime) + "\n";
    r.body += "minimal z-primes: " + label_list(ml, min_zp) + "\n";
    r.body += "szi=" + std::string(yn(zp.szi)) + " pz=" + yn(zp.pz) +
              " z-join-closed=" + yn(zp.z_join_closed) + " semisimple=" + yn(lp.semisimple) +
              " regular=" + yn(lp.regular) + " frame=" + yn(lp.frame) + "\n";
    for (element_id x = 0; x < ml.size(); ++x) r.body += element_text(ml, x) + "\n";
  }
  return r;
}

query_result do_closure(const mult_lattice& ml, const query_request& req,
                        output_format fmt) {
  if (!req.element) throw error(errc::bad_param, "closure requires an element");
  element_id x = resolve(ml, *req.element);
  z_profile z = z_classify(ml, x);
  query_result r;
  if (fmt == output_format::json) {
    json o;
    o["command"] = "closure";
    o["name"] = std::string(ml.name());
    o["element"] = ml.label(x);
    o["cz"] = ml.label(z.cz);
    o["little_m"] = ml.label(z.little_m);
    o["big_m"] = label_array(ml, z.big_m);
    o["z"] = z.is_z;
    r.body = o.dump(2) + "\n";
  } else {
    r.body = "structure " + std::string(ml.name()) + "\nelement " + ml.label(x) +
             ": cz=" + ml.label(z.cz) + " little-m=" + ml.label(z.little_m) +
             " z=" + yn(z.is_z) + "\nbig-m: " + label_list(ml, z.big_m) + "\n";
  }
  return r;
}

query_result do_verify(const mult_lattice& ml, const query_request& req,
                       output_format fmt) {
  std::vector<theorem_id> selection;
  for (const std::string& code : req.theorem_codes)
    selection.push_back(theorem_from_code(code));
  std::vector<theorem_report> reports = run_theorems(ml, selection);
  unsigned failures = 0;
  for (const theorem_report& rep : reports)
    if (rep.result == verdict::fail) ++failures;

  query_result r;
  r.exit_code = failures ? 2 : 0;
  if (fmt == output_format::json) {
    json o;
    o["command"] = "verify";
    o["name"] = std::string(ml.name());
    o["failures"] = failures;
    json arr = json::array();
    for (const theorem_report& rep : reports) {
      const theorem_info& info = theorem_about(rep.id);
      json t;
      t["code"] = std::string(info.code);
      t["statement"] = std::string(info.statement);
      t["hypothesis"] = std::string(info.hypothesis);
      t["verdict"] = std::string(verdict_name(rep.result));
      t["law"] = rep.law;
      t["witness"] = id_array(rep.witness);
      t["detail"] = rep.detail;
      arr.push_back(std::move(t));
    }
    o["theorems"] = std::move(arr);
    r.body = o.dump(2) + "\n";
  } else {
    r.body = "structure " + std::string(ml.name()) + "\n";
    for (const theorem_report& rep : reports) {
      const theorem_info& info = theorem_about(rep.id);
      std::string line = std::string(info.code) + ": " + std::string(verdict_name(rep.result));
      if (rep.result == verdict::fail) {
        line += " [law " + rep.law + "]";
        if (!rep.witness.empty()) {
          line += " witness=(";
          for (std::size_t i = 0; i < rep.witness.size(); ++i)
            line += (i ? ", " : "") + std::to_string(rep.witness[i]);
          line += ")";
        }
      }
      if (!rep.detail.empty()) line += " -- " + rep.detail;
      r.body += line + "\n";
    }
    r.body += "failures: " + std::to_string(failures) + "\n";
  }
  return r;
}

query_result do_search(const query_request& req, output_format fmt) {
  if (!req.property) throw error(errc::bad_param, "search requires a property");
  property_id prop = property_from_code(*req.property);
  search_result s = search_counterexample(prop, req.spec);
  query_result r;
  r.exit_code = s.found ? 2 : 0;
  if (fmt == output_format::json) {
    json o;
    o["command"] = "search";
    o["property"] = std::string(property_code(prop));
    o["found"] = s.found;
    o["structures_searched"] = s.structures_searched;
    o["detail"] = s.detail;
    if (s.found) {
      o["structure"] = std::string(s.structure->name());
      o["witness"] = id_array(s.witness);
      o["mlat"] = serialize_mlat(document_from_structure(*s.structure));
    }
    r.body = o.dump(2) + "\n";
  } else {
    r.body = "property " + std::string(property_code(prop)) + "\n";
    r.body += "found: " + std::string(yn(s.found)) + "\n";
    if (s.found) {
      r.body += "structure: " + std::string(s.structure->name()) + "\n";
      r.body += "witness:";
      for (element_id w : s.witness) r.body += " " + s.structure->label(w);
      r.body += "\n";
    }
    r.body += "detail: " + s.detail + "\n";
    r.body += "searched: " + std::to_string(s.structures_searched) + " structures\n";
  }
  return r;
}

} // namespace

query_result run_query(const mlat_document& doc, const query_request& req,
                       output_format fmt) {
  const std::string& cmd = req.command;
  if (cmd == "search") {
    // A search ranges over the corpus; the document only rides along and is
    // validated when it declares anything.
    if (!doc.elements.empty()) {
      try {
        structure_from_document(doc);
      } catch (const parse_error&) {
        throw;
      } catch (const error& e) {
        return failure_result(cmd, e, fmt);
      }
    }
    return do_search(req, fmt);
  }
  if (cmd != "validate" && cmd != "classify" && cmd != "zmap" && cmd != "closure" &&
      cmd != "verify")
    throw error(errc::unknown_command, "unknown command: " + cmd);

  std::optional<mult_lattice> ml;
  try {
    ml = structure_from_document(doc);
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    return failure_result(cmd, e, fmt);
  }
  if (cmd == "validate") return do_validate(*ml, fmt);
  if (cmd == "classify") return do_classify(*ml, req, fmt);
  if (cmd == "zmap") return do_zmap(*ml, fmt);
  if (cmd == "closure") return do_closure(*ml, req, fmt);
  return do_verify(*ml, req, fmt);
}

} // namespace zlat
