#include "twistcoh/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace twistcoh::cli {

namespace {

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

std::string as_table(const Report &report) {
  std::ostringstream out;
  out << "# " << report.command << "  (input " << report.input_digest << ")\n";
  for (const Table &t : report.tables) {
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      width[i] = t.columns[i].size();
    }
    for (const auto &row : t.rows) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
        width[i] = std::max(width[i], row[i].size());
      }
    }
    auto line = [&](const std::vector<std::string> &cells) {
      std::string s;
      for (std::size_t i = 0; i < width.size(); ++i) {
        const std::string cell = i < cells.size() ? cells[i] : "";
        s += cell;
        if (i + 1 < width.size()) {
          s += std::string(width[i] - cell.size() + 2, ' ');
        }
      }
      while (!s.empty() && s.back() == ' ') {
        s.pop_back();
      }
      return s;
    };
    out << '\n' << t.title << '\n' << line(t.columns) << '\n';
    std::vector<std::string> rule;
    for (std::size_t w : width) {
      rule.emplace_back(w, '-');
    }
    out << line(rule) << '\n';
    for (const auto &row : t.rows) {
      out << line(row) << '\n';
    }
  }
  if (!report.notes.empty()) {
    out << '\n';
    for (const auto &n : report.notes) {
      out << "note: " << n << '\n';
    }
  }
  return out.str();
}

std::string as_csv(const Report &report) {
  std::ostringstream out;
  bool first = true;
  for (const Table &t : report.tables) {
    if (!first) {
      out << '\n';
    }
    first = false;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << (i ? "," : "") << csv_field(t.columns[i]);
    }
    out << '\n';
    for (const auto &row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_field(row[i]);
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string as_json(const Report &report) {
  nlohmann::json j;
  j["schema"] = "twistcoh-report";
  j["schema_version"] = kSchemaVersion;
  j["command"] = report.command;
  j["input_digest"] = report.input_digest;
  j["result"] = report.data;
  j["notes"] = report.notes;
  nlohmann::json tables = nlohmann::json::array();
  for (const Table &t : report.tables) {
    tables.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
  }
  j["tables"] = tables;
  return j.dump(2) + "\n";
}

} // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "table") {
    return Format::Table;
  }
  if (name == "csv") {
    return Format::Csv;
  }
  if (name == "json") {
    return Format::Json;
  }
  return std::nullopt;
}

std::string export_report(const Report &report, Format format) {
  switch (format) {
  case Format::Table:
    return as_table(report);
  case Format::Csv:
    return as_csv(report);
  case Format::Json:
    return as_json(report);
  }
  throw std::invalid_argument("unknown format");
}

std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char *hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

} // namespace twistcoh::cli
