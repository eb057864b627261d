#include "skewps/serialize.hpp"

#include <fstream>
#include <sstream>

#include "skewps/errors.hpp"

namespace skewps {
namespace {

const json& field(const json& j, const char* key, const char* ctx) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(ctx) + ": missing field \"" + key + "\"");
  return j.at(key);
}

int64_t as_int(const json& j, const char* ctx) {
  if (!j.is_number_integer()) throw ParseError(std::string(ctx) + ": expected an integer, got " + j.dump());
  return j.get<int64_t>();
}

json payload(const Element& e) {
  switch (e.kind()) {
    case RingKind::Zp:
      return e.zp_residue();
    case RingKind::FqSeries: {
      json arr = json::array();
      // a zero known at the cap reads back as the literal zero; print both alike
      if (e.is_exact_zero() || (e.leaf_precision() >= e.ring()->cap && e.is_zero())) {
        arr.push_back(0);
      } else {
        for (auto c : e.fq_coeffs()) arr.push_back(c);
      }
      return arr;
    }
    case RingKind::Matrix: {
      const int n = e.ring()->n;
      json rows = json::array();
      for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int k = 0; k < n; ++k) row.push_back(element_to_json(e.entry(i, k)));
        rows.push_back(row);
      }
      return rows;
    }
    case RingKind::Product: {
      json arr = json::array();
      for (const auto& p : e.parts()) arr.push_back(element_to_json(p));
      return arr;
    }
  }
  return nullptr;
}

}  // namespace

json ring_to_json(const Ring& ring) { return json::parse(ring->canonical); }

Ring ring_from_json(const json& j) {
  const std::string kind = field(j, "kind", "ring").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "Zp")
    return RingDescriptor::zp(static_cast<uint64_t>(as_int(field(j, "p", "Zp"), "Zp.p")),
                              static_cast<int>(as_int(field(j, "N", "Zp"), "Zp.N")));
  if (kind == "FqSeries")
    return RingDescriptor::fq_series(static_cast<uint32_t>(as_int(field(j, "q", "FqSeries"), "FqSeries.q")),
                                     static_cast<int>(as_int(field(j, "N", "FqSeries"), "FqSeries.N")));
  if (kind == "Matrix")
    return RingDescriptor::matrix(static_cast<int>(as_int(field(j, "n", "Matrix"), "Matrix.n")),
                                  ring_from_json(field(j, "inner", "Matrix")));
  if (kind == "Product") {
    const json& fs = field(j, "factors", "Product");
    if (!fs.is_array()) throw ParseError("Product.factors must be an array");
    std::vector<Ring> factors;
    for (const auto& f : fs) factors.push_back(ring_from_json(f));
    return RingDescriptor::product(std::move(factors));
  }
  throw ParseError("unknown ring kind in " + j.dump());
}

json element_to_json(const Element& e) {
  if (e.ring()->is_leaf() && !e.is_exact_zero() && e.leaf_precision() < e.ring()->cap)
    return json{{"prec", e.leaf_precision()}, {"value", payload(e)}};
  return payload(e);
}

Element element_from_json(const Ring& ring, const json& j) {
  if (j.is_object()) {
    const int prec = static_cast<int>(as_int(field(j, "prec", "element"), "element.prec"));
    if (prec < 0) throw ParseError("negative precision");
    return element_from_json(ring, field(j, "value", "element")).truncated(prec);
  }
  switch (ring->kind) {
    case RingKind::Zp: {
      int64_t v = as_int(j, "Zp element");
      return v == 0 ? Element::zero(ring) : Element::zp(ring, v);
    }
    case RingKind::FqSeries: {
      if (!j.is_array()) throw ParseError("FqSeries element must be a coefficient list, got " + j.dump());
      std::vector<uint32_t> c;
      bool all_zero = true;
      for (const auto& x : j) {
        int64_t v = as_int(x, "F_q coefficient");
        if (v < 0) throw ParseError("negative F_q coefficient");
        all_zero = all_zero && v == 0;
        c.push_back(static_cast<uint32_t>(v));
      }
      if (all_zero && static_cast<int>(c.size()) <= ring->cap) return Element::zero(ring);
      return Element::fq_series(ring, std::move(c));
    }
    case RingKind::Matrix: {
      const int n = ring->n;
      if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("matrix literal needs " + std::to_string(n) + " rows, got " + j.dump());
      std::vector<Element> entries;
      for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
          throw ParseError("matrix row needs " + std::to_string(n) + " entries, got " + row.dump());
        for (const auto& x : row) entries.push_back(element_from_json(ring->inner, x));
      }
      return Element::matrix(ring, std::move(entries));
    }
    case RingKind::Product: {
      if (!j.is_array() || j.size() != ring->factors.size())
        throw ParseError("product literal needs " + std::to_string(ring->factors.size()) + " parts");
      std::vector<Element> parts;
      for (size_t i = 0; i < j.size(); ++i) parts.push_back(element_from_json(ring->factors[i], j[i]));
      return Element::product(ring, std::move(parts));
    }
  }
  throw ParseError("bad element literal");
}

json level_to_json(const Level& l) {
  if (l.is_infinite()) return json{{"exact", true}, {"value", "inf"}};
  return json{{"exact", l.is_exact()}, {"value", l.value()}};
}

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": malformed literal at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

}  // namespace skewps
