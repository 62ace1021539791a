#pragma once

// Command-line front end: the CDGA file format, reports and their
// serializations, and command dispatch.

#include "twistcoh/cdga.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistcoh::cli {

/// Line-oriented text with `#` comments:
///   generator <name> degree=<int> [truncation=<int>]
///   d <name> = <expression>
///   twist = <expression>
struct CdgaFile {
  cdga::Presentation presentation;
  std::optional<cdga::Element> twist;
};

/// Any syntax or validation failure; `kind` names the underlying check
/// (SyntaxError, NameError, DegreeError, TruncationError, LeibnizError,
/// ExpressionError, TwistError).
class FileError : public std::runtime_error {
public:
  FileError(int line, std::string kind, const std::string &message);
  int line() const { return line_; }
  const std::string &kind() const { return kind_; }

private:
  int line_;
  std::string kind_;
};

CdgaFile parse_file(std::string_view text);
/// Canonical text: generators in order, nonzero differentials, the twist.
std::string emit_file(const CdgaFile &file);

/// Built-in example files, shipped from data/.
std::vector<std::string> builtin_names();
std::optional<std::string> builtin_file(std::string_view name);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::string input_digest;
  std::vector<Table> tables;
  std::vector<std::string> notes;
  nlohmann::json data = nlohmann::json::object();
};

inline constexpr int kSchemaVersion = 1;

enum class Format { Table, Csv, Json };
std::optional<Format> parse_format(std::string_view name);
std::string export_report(const Report &report, Format format);

/// 64-bit FNV-1a, as 16 hex digits.
std::string digest(std::string_view text);

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kPrecondition = 3 };

/// Runs one command line; returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace twistcoh::cli
