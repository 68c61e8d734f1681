#include "eicat/report.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace eicat {

std::optional<Format> parse_format(const std::string& s) {
  if (s == "md" || s == "markdown") return Format::Markdown;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return std::nullopt;
}

std::string enumerate_report(const FiniteCategory& c, Format fmt) {
  long long total = c.total;
  std::ostringstream os;
  switch (fmt) {
    case Format::Json: {
      nlohmann::json j;
      j["species"] = c.species.name();
      j["n"] = c.n;
      nlohmann::json objs = nlohmann::json::array();
      for (int x = 0; x <= c.n; ++x) {
        nlohmann::json hom = nlohmann::json::array();
        for (int y = x; y <= c.n; ++y)
          hom.push_back({{"target", y}, {"size", c.homset(x, y).size()}});
        objs.push_back({{"object", x},
                        {"aut_order", c.homset(x, x).size()},
                        {"hom_sizes", hom}});
      }
      j["objects"] = objs;
      j["total_dim"] = total;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      os << "object,aut_order";
      for (int y = 0; y <= c.n; ++y) os << ",hom_to_" << y;
      os << "\n";
      for (int x = 0; x <= c.n; ++x) {
        os << x << "," << c.homset(x, x).size();
        for (int y = 0; y <= c.n; ++y) os << "," << (y >= x ? c.homset(x, y).size() : 0);
        os << "\n";
      }
      os << "total_dim," << total << "\n";
      break;
    }
    case Format::Markdown: {
      os << "# " << c.species.name() << ", truncation n = " << c.n << "\n\n";
      os << "| object | aut order |";
      for (int y = 0; y <= c.n; ++y) os << " hom to " << y << " |";
      os << "\n|---|---|";
      for (int y = 0; y <= c.n; ++y) os << "---|";
      os << "\n";
      for (int x = 0; x <= c.n; ++x) {
        os << "| " << x << " | " << c.homset(x, x).size() << " |";
        for (int y = 0; y <= c.n; ++y) os << " " << (y >= x ? c.homset(x, y).size() : 0) << " |";
        os << "\n";
      }
      os << "\nTotal algebra dimension: " << total << "\n";
      break;
    }
  }
  return os.str();
}

std::string render_table(const std::vector<TableRow>& rows, Format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case Format::Json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows)
        j.push_back({{"species", r.species},
                     {"n", r.n},
                     {"field", r.field},
                     {"predicted", r.predicted},
                     {"computed", r.computed},
                     {"agree", r.agree}});
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      os << "species,n,field,predicted,computed,agree\n";
      for (const auto& r : rows)
        os << r.species << "," << r.n << "," << r.field << ",\"" << r.predicted << "\",\""
           << r.computed << "\"," << (r.agree ? "true" : "false") << "\n";
      break;
    }
    case Format::Markdown: {
      os << "| species | n | field | predicted | computed | agree |\n";
      os << "|---|---|---|---|---|---|\n";
      for (const auto& r : rows)
        os << "| " << r.species << " | " << r.n << " | " << r.field << " | " << r.predicted
           << " | " << r.computed << " | " << (r.agree ? "yes" : "NO") << " |\n";
      break;
    }
  }
  return os.str();
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  nlohmann::json j;
  in >> j;
  FiniteGroup g;
  g.name = j.value("name", "custom");
  g.mul = j.at("mul").get<std::vector<std::vector<int>>>();
  if (j.contains("elems"))
    g.elems = j.at("elems").get<std::vector<std::string>>();
  else
    for (size_t i = 0; i < g.mul.size(); ++i) g.elems.push_back("e" + std::to_string(i));
  g.validate();
  return g;
}

}  // namespace eicat
