#include "zlat/mlat.hpp"

#include <algorithm>
#include <set>

namespace zlat {
namespace {

bool is_keyword(std::string_view s) {
  return s == "lattice" || s == "elements" || s == "order" || s == "mult" || s == "query";
}

struct tok {
  std::string text;
  int line = 0, col = 0;
};

std::string trimmed(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

} // namespace

mlat_document parse_mlat(std::string_view text) {
  mlat_document doc;
  enum class sec { none, elements, order, mult_explicit, mult_meet };
  sec cur = sec::none;
  bool have_name = false, have_mult = false;
  std::set<std::string, std::less<>> declared;

  auto need_declared = [&](const tok& t) {
    if (!declared.contains(t.text))
      throw parse_error(errc::undeclared_label, t.line, t.col,
                        "undeclared element label: " + t.text);
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t hash = line.find('#');
    std::string_view code = hash == std::string_view::npos ? line : line.substr(0, hash);

    std::vector<std::vector<tok>> items(1);
    for (std::size_t i = 0; i < code.size();) {
      char c = code[i];
      if (c == ' ' || c == '\t') { ++i; continue; }
      if (c == ',') { items.emplace_back(); ++i; continue; }
      std::size_t j = i;
      while (j < code.size() && code[j] != ' ' && code[j] != '\t' && code[j] != ',') ++j;
      items.back().push_back({std::string(code.substr(i, j - i)), line_no,
                              static_cast<int>(i) + 1});
      i = j;
    }
    std::erase_if(items, [](const std::vector<tok>& v) { return v.empty(); });
    if (items.empty()) continue;

    const tok head = items[0][0];
    if (is_keyword(head.text)) {
      if (head.text == "lattice") {
        if (have_name)
          throw parse_error(errc::syntax_error, head.line, head.col,
                            "only one lattice line is allowed");
        if (items.size() != 1 || items[0].size() != 2)
          throw parse_error(errc::syntax_error, head.line, head.col,
                            "expected \"lattice <name>\"");
        doc.name = items[0][1].text;
        have_name = true;
        cur = sec::none;
        continue;
      }
      if (head.text == "query") {
        std::size_t start = static_cast<std::size_t>(head.col - 1) + 5;
        doc.queries.push_back(trimmed(code.substr(std::min(code.size(), start))));
        cur = sec::none;
        continue;
      }
      if (head.text == "elements") {
        cur = sec::elements;
      } else if (head.text == "order") {
        cur = sec::order;
      } else { // mult
        if (have_mult)
          throw parse_error(errc::syntax_error, head.line, head.col,
                            "only one mult section is allowed");
        have_mult = true;
        if (items[0].size() >= 2 && items[0][1].text == "meet") {
          if (items.size() != 1 || items[0].size() != 2)
            throw parse_error(errc::syntax_error, head.line, head.col,
                              "expected \"mult meet\" on its own");
          doc.mult_is_meet = true;
          cur = sec::mult_meet;
          continue;
        }
        cur = sec::mult_explicit;
      }
      items[0].erase(items[0].begin());
      std::erase_if(items, [](const std::vector<tok>& v) { return v.empty(); });
    }

    for (const std::vector<tok>& item : items) {
      switch (cur) {
        case sec::none:
          throw parse_error(errc::syntax_error, item[0].line, item[0].col,
                            "expected one of: lattice, elements, order, mult, query");
        case sec::elements:
          for (const tok& t : item) {
            doc.elements.push_back(t.text);
            declared.insert(t.text);
          }
          break;
        case sec::order: {
          if (item.size() != 3 || item[1].text != "<")
            throw parse_error(errc::syntax_error, item[0].line, item[0].col,
                              "expected \"a < b\"");
          need_declared(item[0]);
          need_declared(item[2]);
          doc.order_pairs.push_back(
              {item[0].text, item[2].text, item[0].line, item[0].col});
          break;
        }
        case sec::mult_explicit: {
          if (item.size() != 3)
            throw parse_error(errc::syntax_error, item[0].line, item[0].col,
                              "expected \"a b c\" meaning a*b = c");
          for (const tok& t : item) need_declared(t);
          for (const mlat_triple& prev : doc.mult_triples) {
            bool same_pair = (prev.a == item[0].text && prev.b == item[1].text) ||
                             (prev.a == item[1].text && prev.b == item[0].text);
            if (!same_pair) continue;
            if (prev.c == item[2].text)
              throw parse_error(errc::duplicate_triple, item[0].line, item[0].col,
                                "product for " + item[0].text + ", " + item[1].text +
                                    " given twice");
            throw parse_error(errc::conflicting_triple, item[0].line, item[0].col,
                              "product for " + item[0].text + ", " + item[1].text +
                                  " conflicts with an earlier triple");
          }
          doc.mult_triples.push_back({item[0].text, item[1].text, item[2].text,
                                      item[0].line, item[0].col});
          break;
        }
        case sec::mult_meet:
          throw parse_error(errc::syntax_error, item[0].line, item[0].col,
                            "no triples are allowed after \"mult meet\"");
      }
    }
  }
  return doc;
}

std::string serialize_mlat(const mlat_document& doc) {
  std::string out;
  if (!doc.name.empty()) out += "lattice " + doc.name + "\n";
  out += "elements";
  for (const std::string& e : doc.elements) out += " " + e;
  out += "\norder";
  for (std::size_t i = 0; i < doc.order_pairs.size(); ++i) {
    const mlat_order_pair& p = doc.order_pairs[i];
    out += (i ? "," : "") + std::string(" ") + p.lo + " < " + p.hi;
  }
  out += "\n";
  if (doc.mult_is_meet) {
    out += "mult meet\n";
  } else {
    out += "mult\n";
    for (const mlat_triple& t : doc.mult_triples)
      out += "  " + t.a + " " + t.b + " " + t.c + "\n";
  }
  for (const std::string& q : doc.queries) out += "query " + q + "\n";
  return out;
}

mult_lattice structure_from_document(const mlat_document& doc) {
  unsigned n = static_cast<unsigned>(doc.elements.size());
  auto index_of = [&](const std::string& s, int line, int col) -> unsigned {
    for (unsigned i = 0; i < n; ++i)
      if (doc.elements[i] == s) return i;
    throw parse_error(errc::undeclared_label, line, col, "undeclared element label: " + s);
  };

  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (const mlat_order_pair& p : doc.order_pairs)
    pairs.emplace_back(index_of(p.lo, p.line, p.col), index_of(p.hi, p.line, p.col));
  finite_lattice lat = validate_lattice(n, pairs, doc.elements);

  mult_table t;
  if (doc.mult_is_meet) {
    t = mult_table::meet_table(lat);
  } else {
    const element_id unset = n;
    t = mult_table(n, unset);
    for (element_id a = 0; a < n; ++a) t.set(lat.top(), a, a);
    for (element_id a = 0; a < n; ++a) t.set(lat.bottom(), a, lat.bottom());
    for (const mlat_triple& tr : doc.mult_triples) {
      unsigned a = index_of(tr.a, tr.line, tr.col);
      unsigned b = index_of(tr.b, tr.line, tr.col);
      unsigned c = index_of(tr.c, tr.line, tr.col);
      element_id prev = t.at(a, b);
      if (prev != unset && prev != c)
        throw parse_error(errc::conflicting_triple, tr.line, tr.col,
                          "product for " + tr.a + ", " + tr.b +
                              " conflicts with an implied or earlier value");
      t.set(a, b, c);
    }
    for (element_id a = 0; a < n; ++a)
      for (element_id b = a; b < n; ++b)
        if (t.at(a, b) == unset)
          throw parse_error(errc::missing_triple, 0, 0,
                            "no product given for " + doc.elements[a] + ", " +
                                doc.elements[b]);
  }
  return validate_quantale(std::move(lat), std::move(t), doc.name);
}

mlat_document document_from_structure(const mult_lattice& ml) {
  mlat_document doc;
  doc.name = ml.name();
  for (element_id x = 0; x < ml.size(); ++x) doc.elements.push_back(ml.label(x));
  for (const cover_edge& e : ml.lattice().covers())
    doc.order_pairs.push_back({ml.label(e.lower), ml.label(e.upper)});
  if (is_frame(ml)) {
    doc.mult_is_meet = true;
    return doc;
  }
  for (element_id a = 0; a < ml.size(); ++a) {
    if (a == ml.top() || a == ml.bottom()) continue;
    for (element_id b = a; b < ml.size(); ++b) {
      if (b == ml.top() || b == ml.bottom()) continue;
      doc.mult_triples.push_back({ml.label(a), ml.label(b), ml.label(ml.mul(a, b))});
    }
  }
  return doc;
}

} // namespace zlat
