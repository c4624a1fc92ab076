#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wbalg/instances.hpp"
#include "wbalg/qtg.hpp"

namespace wbalg::cli {

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
      : Error("ParseError", source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

class ResolutionError : public Error {
 public:
  explicit ResolutionError(const std::string& what) : Error("ResolutionError", what) {}
};

class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, CheckReport report)
      : Error("ValidationError", what), report_(std::move(report)) {}
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

class SuiteMismatch : public Error {
 public:
  explicit SuiteMismatch(const std::string& what) : Error("SuiteMismatch", what) {}
};

struct Field {
  std::string key;
  std::string name;  // for "arrow a: …" style fields
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;  // of the value
};

struct Block {
  std::string kind;
  std::string name;
  std::string source;
  std::size_t line = 0;
  std::vector<Field> fields;

  const Field* find(std::string_view key) const;
  std::vector<const Field*> all(std::string_view key) const;
};

std::vector<Block> parse_text(std::string_view text, const std::string& source = "<input>");

// One resolved declaration. Only the members relevant to `kind` are set.
struct Structure {
  std::string kind;
  std::string name;
  bool unchecked = false;
  std::shared_ptr<const Quiver> quiver;
  std::optional<FaceAlgebra> face;
  std::shared_ptr<const Groupoid> groupoid;
  std::optional<GroupTable> group;
  std::shared_ptr<const HopfAlgebraData> hopf;
  std::shared_ptr<const SeparableAlgebraData> separable;
  std::shared_ptr<const ModuleAlgebraAction> action;
  std::shared_ptr<const WeakBialgebra> wba;
  std::optional<LinearMap> antipode;
  std::optional<Comodule> comodule;
  std::optional<Bicomodule> bicomodule;
  std::string bundle_kind;
  std::optional<ComoduleAlgebra> algebra;
  std::optional<ComoduleCoalgebra> coalgebra;
  std::shared_ptr<const QTG> qtg;
  // Names of referenced declarations, for dumps.
  std::map<std::string, std::string> refs;
};

class Structures {
 public:
  // Resolves every block; throws ResolutionError or ValidationError.
  // Options apply to the checks run while constructing QTGs.
  explicit Structures(std::vector<Block> blocks, CheckOptions opt = {});

  const std::vector<std::string>& names() const noexcept { return order_; }
  const Structure& get(const std::string& name) const;
  bool contains(const std::string& name) const { return done_.count(name) > 0; }

 private:
  const Structure& resolve(const std::string& name);
  Structure build(const Block& b);

  std::map<std::string, Block> blocks_;
  std::vector<std::string> order_;
  std::map<std::string, std::unique_ptr<Structure>> done_;
  std::vector<std::string> stack_;
  CheckOptions opt_;

  friend struct Resolver;
};

// Reads and resolves the files as one namespace.
Structures parse_spec(const std::vector<std::string>& paths, const CheckOptions& opt = {});
Structures parse_spec_text(std::string_view text, const std::string& source = "<input>", const CheckOptions& opt = {});

enum class Suite {
  wba,
  wha,
  comodule,
  comodule_algebra,
  comodule_coalgebra,
  comodule_frobenius,
  internal_roundtrip,
  qtg_full,
  gamma_monoidal
};

std::optional<Suite> suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);
std::vector<Suite> all_suites();

struct SuiteOptions {
  CheckOptions check;
  std::vector<std::string> structures;                      // empty: every compatible declaration
  std::vector<std::pair<std::string, std::string>> pairs;   // gamma-monoidal bicomodule pairs
};

struct SuiteRun {
  std::string suite;
  std::string structure;
  std::string kind;
  CheckReport report;
  double seconds = 0;
};

// Throws SuiteMismatch when a named structure does not fit, or nothing does.
std::vector<SuiteRun> run_suite(const Structures& s, Suite suite, const SuiteOptions& opt);

enum class Format { text, json };

struct EmitOptions {
  Format format = Format::text;
  bool timing = false;
  bool verbose = false;
};

std::string emit_report(const std::vector<SuiteRun>& runs, const EmitOptions& opt);
// 0 all pass, 1 any failure, 2 pass with skips.
int exit_code(const std::vector<SuiteRun>& runs);

// The declarations in the input format with every structure tensor written
// out; parsing the dump reproduces the tensors.
std::string dump(const Structures& s, const std::vector<std::string>& names = {});

// Named structure tensors of a declaration, as columns.
std::vector<std::pair<std::string, std::vector<SparseVector>>> tensors_of(const Structure& s);

// Full command line; returns the exit code (3 for usage and input errors).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wbalg::cli
