#pragma once

#include "eicat/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eicat {

enum class Format { Markdown, Json, Csv };

/// Accepts "md", "markdown", "json", "csv"; nullopt otherwise.
std::optional<Format> parse_format(const std::string& s);

/// Object list, hom-set sizes, automorphism orders, and the total
/// dimension of the category algebra.
std::string enumerate_report(const FiniteCategory& c, Format fmt);

struct TableRow {
  std::string species;
  int n = 0;
  std::string field;
  std::string predicted;
  std::string computed;
  bool agree = false;
};

std::string render_table(const std::vector<TableRow>& rows, Format fmt);

/// Group from a JSON file: {"name": str, "elems": [str...], "mul": [[int...]...]}.
/// "elems" is optional (defaults to e0, e1, ...). The table is validated.
FiniteGroup load_group_file(const std::string& path);

}  // namespace eicat
