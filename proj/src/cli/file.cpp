#include "twistcoh/cli.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace twistcoh::cli {

using cdga::CdgaError;
using cdga::Element;
using cdga::GeneratorSpec;
using cdga::GradedAlgebra;

FileError::FileError(int line, std::string kind, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + kind + ": " +
                         message),
      line_(line), kind_(std::move(kind)) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool starts_with_word(std::string_view s, std::string_view word) {
  return s.size() > word.size() && s.substr(0, word.size()) == word &&
         (std::isspace(static_cast<unsigned char>(s[word.size()])) ||
          s[word.size()] == '=');
}

std::string kind_of(const CdgaError &e) {
  if (dynamic_cast<const cdga::DegreeError *>(&e)) {
    return "DegreeError";
  }
  if (dynamic_cast<const cdga::LeibnizError *>(&e)) {
    return "LeibnizError";
  }
  if (dynamic_cast<const cdga::TruncationError *>(&e)) {
    return "TruncationError";
  }
  if (dynamic_cast<const cdga::NameError *>(&e)) {
    return "NameError";
  }
  return "ValidationError";
}

int parse_int(std::string_view text, int line, std::string_view key) {
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(std::string(text), &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw FileError(line, "SyntaxError",
                    "expected an integer for " + std::string(key) + ", got '" +
                        std::string(text) + "'");
  }
  return value;
}

struct DiffLine {
  int line;
  std::size_t generator;
  std::string expression;
};

} // namespace

CdgaFile parse_file(std::string_view text) {
  std::vector<GeneratorSpec> specs;
  std::vector<int> generator_lines;
  std::vector<std::pair<int, std::string>> raw_diffs;  // line, "name = expr"
  std::optional<std::pair<int, std::string>> twist_line;

  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (starts_with_word(line, "generator")) {
      std::istringstream words{std::string(line.substr(9))};
      std::string name, word;
      words >> name;
      GeneratorSpec spec{name, 0, std::nullopt};
      bool have_degree = false;
      while (words >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) {
          throw FileError(number, "SyntaxError",
                          "expected key=value, got '" + word + "'");
        }
        const std::string key = word.substr(0, eq);
        const std::string value = word.substr(eq + 1);
        if (key == "degree") {
          spec.degree = parse_int(value, number, key);
          have_degree = true;
        } else if (key == "truncation") {
          spec.truncation = parse_int(value, number, key);
        } else {
          throw FileError(number, "SyntaxError", "unknown key '" + key + "'");
        }
      }
      if (name.empty() || !have_degree) {
        throw FileError(number, "SyntaxError",
                        "expected 'generator <name> degree=<int>'");
      }
      specs.push_back(std::move(spec));
      generator_lines.push_back(number);
    } else if (starts_with_word(line, "twist")) {
      std::string_view rest = trim(line.substr(5));
      if (rest.empty() || rest.front() != '=') {
        throw FileError(number, "SyntaxError", "expected 'twist = <expression>'");
      }
      if (twist_line) {
        throw FileError(number, "SyntaxError", "twist given twice");
      }
      twist_line.emplace(number, std::string(trim(rest.substr(1))));
    } else if (starts_with_word(line, "d")) {
      raw_diffs.emplace_back(number, std::string(trim(line.substr(1))));
    } else {
      throw FileError(number, "SyntaxError",
                      "expected 'generator', 'd' or 'twist'");
    }
  }

  GradedAlgebra algebra;
  try {
    algebra = GradedAlgebra(specs);
  } catch (const CdgaError &e) {
    const int line = e.generator() && *e.generator() < generator_lines.size()
                         ? generator_lines[*e.generator()]
                         : (generator_lines.empty() ? 1 : generator_lines[0]);
    throw FileError(line, kind_of(e), e.what());
  }

  std::vector<Element> differentials(specs.size());
  std::map<std::size_t, int> diff_lines;
  for (const auto &[line, body] : raw_diffs) {
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw FileError(line, "SyntaxError", "expected 'd <name> = <expression>'");
    }
    const std::string name(trim(std::string_view(body).substr(0, eq)));
    const auto index = algebra.find(name);
    if (!index) {
      throw FileError(line, "NameError", "unknown generator '" + name + "'");
    }
    if (diff_lines.count(*index)) {
      throw FileError(line, "SyntaxError",
                      "differential of '" + name + "' given twice");
    }
    try {
      differentials[*index] =
          cdga::parse_element(algebra, trim(std::string_view(body).substr(eq + 1)));
    } catch (const CdgaError &e) {
      throw FileError(line, kind_of(e), e.what());
    } catch (const cdga::ExpressionError &e) {
      throw FileError(line, "ExpressionError", e.what());
    }
    diff_lines[*index] = line;
  }

  CdgaFile file;
  try {
    file.presentation = cdga::validate(algebra, differentials);
  } catch (const CdgaError &e) {
    int line = raw_diffs.empty() ? 1 : raw_diffs.front().first;
    if (e.generator()) {
      auto it = diff_lines.find(*e.generator());
      line = it != diff_lines.end() ? it->second
                                    : generator_lines.at(*e.generator());
    }
    throw FileError(line, kind_of(e), e.what());
  }

  if (twist_line) {
    const auto &[line, expr] = *twist_line;
    Element eta;
    try {
      eta = cdga::parse_element(algebra, expr);
    } catch (const CdgaError &e) {
      throw FileError(line, kind_of(e), e.what());
    } catch (const cdga::ExpressionError &e) {
      throw FileError(line, "ExpressionError", e.what());
    }
    for (const auto &[m, c] : eta.terms()) {
      if (algebra.degree(m) % 2 == 0) {
        throw FileError(line, "TwistError",
                        "twist " + algebra.format(eta) + " has an even-degree term");
      }
    }
    const Element d_eta = file.presentation.differential(eta);
    if (!d_eta.is_zero()) {
      throw FileError(line, "TwistError",
                      "twist " + algebra.format(eta) +
                          " is not closed: d = " + algebra.format(d_eta));
    }
    file.twist = std::move(eta);
  }
  return file;
}

std::string emit_file(const CdgaFile &file) {
  const auto &algebra = file.presentation.algebra();
  std::ostringstream out;
  const auto &gens = file.presentation.generators();
  for (const auto &g : gens) {
    out << "generator " << g.name << " degree=" << g.degree;
    if (g.truncation) {
      out << " truncation=" << *g.truncation;
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Element &d = file.presentation.generator_differential(i);
    if (!d.is_zero()) {
      out << "d " << gens[i].name << " = " << algebra.format(d) << '\n';
    }
  }
  if (file.twist) {
    out << "twist = " << algebra.format(*file.twist) << '\n';
  }
  return out.str();
}

} // namespace twistcoh::cli
