#include "srdg/backend.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "srdg/errors.hpp"

namespace srdg {

namespace fs = std::filesystem;

std::optional<SolutionDialect> parse_dialect(std::string_view text) {
  if (text == "cbc") return SolutionDialect::cbc;
  if (text == "highs") return SolutionDialect::highs;
  if (text == "plain") return SolutionDialect::plain;
  return std::nullopt;
}

std::string_view to_string(SolutionDialect dialect) {
  switch (dialect) {
    case SolutionDialect::cbc: return "cbc";
    case SolutionDialect::highs: return "highs";
    case SolutionDialect::plain: return "plain";
  }
  return "cbc";
}

double SolutionFile::value(std::string_view name) const {
  auto it = values.find(name);
  return it == values.end() ? 0.0 : it->second;
}

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool says_infeasible(const std::string& status) {
  const std::string s = lower(status);
  return s.find("infeasible") != std::string::npos;
}

bool says_optimal(const std::string& status) {
  const std::string s = lower(status);
  return s.rfind("optimal", 0) == 0;
}

double to_double(const std::string& token) {
  try {
    std::size_t used = 0;
    double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw SolverError("unparsable number '" + token + "' in solution file");
  }
}

SolutionFile parse_cbc(std::istream& in) {
  SolutionFile out;
  std::string line;
  if (!std::getline(in, line)) throw SolverError("empty solution file");
  if (says_infeasible(line)) {
    out.status = SolutionStatus::infeasible;
    return out;
  }
  if (!says_optimal(line)) throw SolverError("backend did not reach optimality: " + line);
  const auto pos = line.find("objective value");
  if (pos != std::string::npos) out.objective = to_double(line.substr(line.find_first_not_of(' ', pos + 15)));
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string first, name, value;
    if (!(row >> first)) continue;
    if (first == "**") row >> first;
    if (!(row >> name >> value)) throw SolverError("malformed solution row: " + line);
    out.values[name] = to_double(value);
  }
  return out;
}

SolutionFile parse_highs(std::istream& in) {
  SolutionFile out;
  std::string line;
  std::string status;
  bool in_columns = false;
  std::size_t remaining = 0;
  while (std::getline(in, line)) {
    if (line == "Model status") {
      std::getline(in, status);
      continue;
    }
    if (line.rfind("Objective", 0) == 0) {
      std::istringstream row(line.substr(9));
      std::string v;
      if (row >> v) out.objective = to_double(v);
      continue;
    }
    if (line.rfind("# Columns", 0) == 0) {
      in_columns = true;
      remaining = static_cast<std::size_t>(std::stoul(line.substr(9)));
      continue;
    }
    if (in_columns && remaining > 0) {
      std::istringstream row(line);
      std::string name, value;
      if (!(row >> name >> value)) throw SolverError("malformed solution row: " + line);
      out.values[name] = to_double(value);
      if (--remaining == 0) in_columns = false;
    }
  }
  if (status.empty()) throw SolverError("solution file lacks a model status");
  if (says_infeasible(status)) {
    out.status = SolutionStatus::infeasible;
    out.values.clear();
    return out;
  }
  if (!says_optimal(status)) throw SolverError("backend did not reach optimality: " + status);
  return out;
}

SolutionFile parse_plain(std::istream& in) {
  SolutionFile out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string name, value;
    if (!(row >> name)) continue;
    if (!(row >> value)) throw SolverError("malformed solution row: " + line);
    if (name == "status") {
      if (says_infeasible(value)) {
        out.status = SolutionStatus::infeasible;
        out.values.clear();
        return out;
      }
      if (!says_optimal(value)) throw SolverError("backend did not reach optimality: " + value);
      continue;
    }
    if (name == "objective") {
      out.objective = to_double(value);
      continue;
    }
    out.values[name] = to_double(value);
  }
  return out;
}

std::string replace_all(std::string text, std::string_view key, const std::string& with) {
  for (auto pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos + with.size()))
    text.replace(pos, key.size(), with);
  return text;
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

std::string tail_of(const fs::path& log) {
  std::ifstream in(log);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string s = buf.str();
  if (s.size() > 800) s = s.substr(s.size() - 800);
  return s;
}

}  // namespace

SolutionFile parse_solution(std::string_view text, SolutionDialect dialect) {
  std::istringstream in{std::string(text)};
  switch (dialect) {
    case SolutionDialect::cbc: return parse_cbc(in);
    case SolutionDialect::highs: return parse_highs(in);
    case SolutionDialect::plain: return parse_plain(in);
  }
  throw SolverError("unknown dialect");
}

std::optional<SolverBackend> default_backend() {
  if (const char* cmd = std::getenv("SRDG_SOLVER_CMD"); cmd && *cmd) {
    SolverBackend backend{cmd, SolutionDialect::cbc};
    if (const char* d = std::getenv("SRDG_SOLVER_DIALECT"); d && *d) {
      auto dialect = parse_dialect(d);
      if (!dialect) throw InvalidInput(std::string("unknown solution dialect '") + d + "'");
      backend.dialect = *dialect;
    }
    return backend;
  }
#ifdef SRDG_DEFAULT_CBC
  if (fs::exists(SRDG_DEFAULT_CBC)) {
    return SolverBackend{std::string("'") + SRDG_DEFAULT_CBC + "' {model} solve solu {solution}",
                         SolutionDialect::cbc};
  }
#endif
  return std::nullopt;
}

SolutionFile run_backend(const SolverBackend& backend, std::string_view lp_text) {
  if (backend.command.find("{model}") == std::string::npos ||
      backend.command.find("{solution}") == std::string::npos)
    throw InvalidInput("solver command needs {model} and {solution} placeholders");
  static std::atomic<unsigned long> counter{0};
  const std::size_t digest = std::hash<std::string_view>{}(lp_text);
  std::ostringstream stem;
  stem << "srdg-" << ::getpid() << '-' << counter++ << '-' << std::hex << digest;
  const fs::path dir = fs::temp_directory_path() / stem.str();
  fs::create_directories(dir);
  const fs::path model = dir / "model.lp";
  const fs::path solution = dir / "solution.txt";
  const fs::path log = dir / "solver.log";
  {
    std::ofstream out(model, std::ios::binary);
    out << lp_text;
    if (!out) throw SolverError("cannot write " + model.string());
  }
  std::string command = replace_all(backend.command, "{model}", quote(model));
  command = replace_all(command, "{solution}", quote(solution));
  command += " > " + quote(log) + " 2>&1";
  const int rc = std::system(command.c_str());
  if (rc != 0 || !fs::exists(solution)) {
    const std::string detail = tail_of(log);
    std::error_code ec;
    fs::remove_all(dir, ec);
    throw SolverError("backend failed (status " + std::to_string(rc) + "): " + detail);
  }
  std::ifstream in(solution);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::error_code ec;
  SolutionFile parsed;
  try {
    parsed = parse_solution(buf.str(), backend.dialect);
  } catch (...) {
    fs::remove_all(dir, ec);
    throw;
  }
  fs::remove_all(dir, ec);
  return parsed;
}

}  // namespace srdg
