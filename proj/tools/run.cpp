#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "wbalg/version.hpp"

namespace wbalg::cli {

namespace {

struct Common {
  std::vector<std::string> files;
  std::vector<std::string> structures;
  std::string format = "text";
  std::string output;
  std::uint64_t sample_budget = 0;
  unsigned threads = 1;
  bool verbose = false;
  bool timing = false;
  std::vector<std::string> pairs;
  std::string suite;
};

void add_common(CLI::App& sub, Common& c, bool with_pairs) {
  sub.add_option("files", c.files, "Structure files")->required()->check(CLI::ExistingFile);
  sub.add_option("--structure,-s", c.structures, "Only these declarations (repeatable)");
  sub.add_option("--format,-f", c.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  sub.add_option("--output,-o", c.output, "Write the report to a file");
  sub.add_option("--sample-budget", c.sample_budget, "Check at most this many tuples per identity (0: all)");
  sub.add_option("--threads,-j", c.threads, "Worker threads per identity")->check(CLI::Range(1u, 256u));
  sub.add_flag("--verbose,-v", c.verbose, "Print tuple counts and notes");
  sub.add_flag("--timing", c.timing, "Print wall time per structure");
  if (with_pairs) sub.add_option("--pair", c.pairs, "Bicomodule pair X,Y (L and k are built in)");
}

CheckOptions check_options(const Common& c) {
  CheckOptions o;
  o.threads = c.threads;
  if (c.sample_budget) o.sample_budget = c.sample_budget;
  return o;
}

void print_failures(std::ostream& err, const CheckReport& r) {
  for (const auto& c : r.checks)
    if (c.status == Status::fail) err << "  failed: " << c.name << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
}

int write_out(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    err << "cannot write " << path << "\n";
    return 3;
  }
  f << text;
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of weak bialgebras, their comodules and quantum transformation groupoids",
               "wbalg"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);

  Common c;
  std::vector<std::pair<CLI::App*, Suite>> suites;
  for (Suite s : all_suites()) {
    std::string name(suite_name(s));
    auto* sub = app.add_subcommand(name, "Run the " + name + " suite");
    add_common(*sub, c, s == Suite::gamma_monoidal);
    suites.emplace_back(sub, s);
  }
  auto* run = app.add_subcommand("run", "Run the suite given by --suite");
  add_common(*run, c, true);
  std::vector<std::string> names;
  for (Suite s : all_suites()) names.emplace_back(suite_name(s));
  run->add_option("--suite", c.suite, "Suite name")->required()->check(CLI::IsMember(names));
  auto* dump_cmd = app.add_subcommand("dump", "Print the declarations with every tensor written out");
  dump_cmd->add_option("files", c.files, "Structure files")->required()->check(CLI::ExistingFile);
  dump_cmd->add_option("--structure,-s", c.structures, "Only these declarations and what they reference");
  dump_cmd->add_option("--output,-o", c.output, "Write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(version) + "\n" : app.help());
      return 0;
    }
    err << e.what() << "\n" << "Run with --help for usage.\n";
    return 3;
  }

  try {
    Structures all = parse_spec(c.files, check_options(c));
    if (dump_cmd->parsed()) return write_out(dump(all, c.structures), c.output, out, err);

    Suite suite = Suite::wba;
    if (run->parsed()) {
      suite = *suite_from_name(c.suite);
    } else {
      for (auto& [sub, s] : suites)
        if (sub->parsed()) suite = s;
    }
    SuiteOptions opt;
    opt.check = check_options(c);
    opt.structures = c.structures;
    for (const auto& p : c.pairs) {
      auto comma = p.find(',');
      if (comma == std::string::npos) {
        err << "--pair expects X,Y\n";
        return 3;
      }
      opt.pairs.emplace_back(p.substr(0, comma), p.substr(comma + 1));
    }
    auto runs = run_suite(all, suite, opt);
    EmitOptions eo;
    eo.format = c.format == "json" ? Format::json : Format::text;
    eo.timing = c.timing;
    eo.verbose = c.verbose;
    if (int rc = write_out(emit_report(runs, eo), c.output, out, err)) return rc;
    return exit_code(runs);
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    print_failures(err, e.report());
    return 3;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 3;
  }
}

}  // namespace wbalg::cli
