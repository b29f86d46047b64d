#include "gencomp/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace gencomp {

namespace {

using Json = nlohmann::ordered_json;

Json seed_json(const SeedPreset& seed) {
  if (seed.tag != Preset::Custom) return std::string(preset_name(seed.tag));
  Json list = Json::array();
  for (const auto& v : seed.custom_values) list.push_back(to_decimal(v));
  return list;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "bfile") return Format::Bfile;
  return std::nullopt;
}

std::string format_sequence(const ArithmeticFunction& f, const SeedPreset& seed,
                            unsigned m, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      Json doc;
      doc["seed"] = seed_json(seed);
      doc["m"] = m;
      doc["N"] = f.size();
      Json values = Json::array();
      for (const auto& v : f.values()) values.push_back(to_decimal(v));
      doc["values"] = std::move(values);
      out << doc.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,value\n";
      for (std::size_t n = 1; n <= f.size(); ++n) out << n << ',' << f(n) << '\n';
      break;
    case Format::Bfile:
      for (std::size_t n = 1; n <= f.size(); ++n) out << n << ' ' << f(n) << '\n';
      break;
  }
  return out.str();
}

std::string format_triangle(const CompositionTriangle& triangle,
                            const SeedPreset& seed, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      Json doc;
      doc["seed"] = seed_json(seed);
      doc["m"] = triangle.m();
      doc["N"] = triangle.order();
      Json rows = Json::array();
      for (std::size_t n = 1; n <= triangle.order(); ++n) {
        Json row = Json::array();
        for (const auto& v : triangle.row(n)) row.push_back(to_decimal(v));
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,k,value\n";
      for (std::size_t n = 1; n <= triangle.order(); ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
          out << n << ',' << k << ',' << triangle(n, k) << '\n';
        }
      }
      break;
    case Format::Bfile: {
      std::size_t idx = 1;
      for (std::size_t n = 1; n <= triangle.order(); ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
          out << idx++ << ' ' << triangle(n, k) << '\n';
        }
      }
      break;
    }
  }
  return out.str();
}

}  // namespace gencomp
