#include "qgeo/document.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qgeo/error.hpp"

namespace qgeo {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Cell parse_cell(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  std::int64_t i = 0;
  const char* end = s.data() + s.size();
  if (auto [p, ec] = std::from_chars(s.data(), end, i); ec == std::errc() && p == end && !s.empty()) return i;
  if (!s.empty()) {
    errno = 0;
    char* stop = nullptr;
    const double d = std::strtod(s.c_str(), &stop);
    if (stop == s.c_str() + s.size() && format_double(d) == s) return d;
  }
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void check_text(const std::string& s) {
  if (s.find_first_of(",\"\n\r") != std::string::npos)
    fail(ErrorKind::InvalidArgument, "CSV text cell contains a reserved character: " + s);
}

nlohmann::json to_json_value(const Cell& c) {
  return std::visit([](const auto& v) -> nlohmann::json { return v; }, c);
}

}  // namespace

void Document::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    fail(ErrorKind::DimensionMismatch, "row has " + std::to_string(row.size()) + " cells, expected " +
                                           std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const {
      check_text(v);
      return v;
    }
  };
  return std::visit(Visitor{}, c);
}

std::string to_csv(const Document& doc) {
  std::string out = "# schema=" + std::to_string(kSchemaVersion) + "\n";
  for (const auto& [key, value] : doc.params) out += "# " + key + "=" + format_cell(value) + "\n";
  for (const auto& [key, value] : doc.summary) out += "# summary." + key + "=" + format_cell(value) + "\n";
  for (std::size_t j = 0; j < doc.columns.size(); ++j) {
    check_text(doc.columns[j]);
    out += (j ? "," : "") + doc.columns[j];
  }
  out += "\n";
  for (const auto& row : doc.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + format_cell(row[j]);
    out += "\n";
  }
  return out;
}

std::string to_json(const Document& doc) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : doc.params) j["params"][key] = to_json_value(value);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < row.size(); ++k) r[doc.columns[k]] = to_json_value(row[k]);
    j["rows"].push_back(std::move(r));
  }
  if (!doc.summary.empty()) {
    j["summary"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : doc.summary) j["summary"][key] = to_json_value(value);
  }
  return j.dump(2) + "\n";
}

Document parse_csv(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  bool schema = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const std::string body = line.substr(2);
      const auto eq = body.find('=');
      if (eq == std::string::npos) fail(ErrorKind::InvalidArgument, "malformed comment line: " + line);
      const std::string key = body.substr(0, eq);
      const Cell value = parse_cell(body.substr(eq + 1));
      if (key == "schema") {
        schema = true;
        if (value != Cell{std::int64_t{kSchemaVersion}})
          fail(ErrorKind::InvalidArgument, "unsupported schema " + body.substr(eq + 1));
      } else if (key.rfind("summary.", 0) == 0) {
        doc.summary.emplace_back(key.substr(8), value);
      } else {
        doc.params.emplace_back(key, value);
      }
    } else if (!header) {
      doc.columns = split(line);
      header = true;
    } else {
      std::vector<Cell> row;
      for (const auto& s : split(line)) row.push_back(parse_cell(s));
      doc.add_row(std::move(row));
    }
  }
  if (!schema) fail(ErrorKind::InvalidArgument, "missing schema line");
  if (!header) fail(ErrorKind::InvalidArgument, "missing header row");
  return doc;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open " + path + ": " + std::strerror(errno));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) fail(ErrorKind::Io, "failed writing " + path);
}

}  // namespace qgeo
