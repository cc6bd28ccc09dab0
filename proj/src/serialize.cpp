#include "immaculate/serialize.hpp"

#include <sstream>

namespace immaculate {

namespace {

Json coefficient_map(const BasisExpansion& x) {
  Json coeffs = Json::object();
  for (const auto& [key, c] : x.coefficients()) {
    coeffs[key.to_string()] = rational_to_string(c);
  }
  return coeffs;
}

}  // namespace

Json expansion_json(const BasisExpansion& x) {
  Json out = Json::object();
  out["algebra"] = x.algebra() == Algebra::QSym ? "QSym" : "NSym";
  out["basis"] = basis_tag(x.basis());
  out["degree"] = x.degree();
  out["coeffs"] = coefficient_map(x);
  return out;
}

Json expansion_json_compact(const BasisExpansion& x) {
  Json out = Json::object();
  out[basis_tag(x.basis())] = coefficient_map(x);
  return out;
}

Json tableau_json(const ImmaculateTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rows;
}

Json module_json(const HeckeModule& m) {
  Json out = Json::object();
  out["label"] = m.kind() == ModuleKind::Word ? "M" : "V";
  out["alpha"] = m.alpha().to_string();
  out["dim"] = m.dim();
  Json generators = Json::object();
  for (int i = 1; i <= m.action().generator_count(); ++i) {
    Json images = Json::array();
    for (int b = 0; b < m.dim(); ++b) {
      const GeneratorImage& image = m.action().image(i, b);
      switch (image.kind) {
        case ImageKind::Fixed: images.push_back(Json{{"fixed", true}}); break;
        case ImageKind::Zero: images.push_back(Json{{"zero", true}}); break;
        case ImageKind::MovedTo: images.push_back(Json{{"to", image.target}}); break;
      }
    }
    generators[std::to_string(i)] = std::move(images);
  }
  out["generators"] = std::move(generators);
  return out;
}

Json certificate_json(const IndecomposabilityCertificate& cert) {
  Json out = Json::object();
  out["alpha"] = cert.alpha.to_string();
  out["dim"] = cert.dim;
  out["commutant_dim"] = cert.commutant_dim;
  Json cyclic = Json::object();
  cyclic["seed"] = cert.cyclic.seed;
  cyclic["complete"] = cert.cyclic.complete;
  Json witnesses = Json::object();
  for (std::size_t b = 0; b < cert.cyclic.witnesses.size(); ++b) {
    if (cert.cyclic.witnesses[b])
      witnesses[std::to_string(b)] = *cert.cyclic.witnesses[b];
  }
  cyclic["witnesses"] = std::move(witnesses);
  out["cyclic"] = std::move(cyclic);
  Json separation = Json::object();
  for (const auto& [index, generator] : cert.separation)
    separation[std::to_string(index)] = generator;
  out["separation"] = std::move(separation);
  out["valid"] = cert.valid;
  if (!cert.valid) out["failure"] = cert.failure;
  return out;
}

std::string module_dot(const HeckeModule& m) {
  std::ostringstream out;
  out << "digraph module {\n";
  out << "  rankdir=TB;\n";
  for (int b = 0; b < m.dim(); ++b) out << "  \"" << m.label(b) << "\";\n";
  bool has_zero = false;
  for (int i = 1; i <= m.action().generator_count() && !has_zero; ++i)
    for (int b = 0; b < m.dim() && !has_zero; ++b)
      has_zero = m.action().image(i, b).kind == ImageKind::Zero;
  if (has_zero) out << "  \"0\";\n";
  for (int b = 0; b < m.dim(); ++b) {
    for (int i = 1; i <= m.action().generator_count(); ++i) {
      const GeneratorImage& image = m.action().image(i, b);
      if (image.kind == ImageKind::MovedTo) {
        out << "  \"" << m.label(b) << "\" -> \"" << m.label(image.target)
            << "\" [label=\"" << i << "\"];\n";
      } else if (image.kind == ImageKind::Zero) {
        out << "  \"" << m.label(b) << "\" -> \"0\" [label=\"" << i << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace immaculate
