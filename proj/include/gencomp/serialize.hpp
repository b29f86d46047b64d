#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gencomp/sequences.hpp"
#include "gencomp/triangle.hpp"

namespace gencomp {

enum class Format { Json, Csv, Bfile };

std::optional<Format> parse_format(std::string_view name);

// All writers emit UTF-8 text with LF line endings and render integers in
// decimal. Output depends only on the arguments.
//
// JSON:  {"seed": <preset name or list>, "m": m, "N": N, "rows": [[...], ...]}
//        with every integer as a decimal string ("values" for sequences).
// CSV:   header n,k,value (n,value for sequences), sorted by (n,k).
// bfile: "idx value" lines, idx the 1-based row-major position.

std::string format_sequence(const ArithmeticFunction& f, const SeedPreset& seed,
                            unsigned m, Format format);

std::string format_triangle(const CompositionTriangle& triangle,
                            const SeedPreset& seed, Format format);

}  // namespace gencomp
