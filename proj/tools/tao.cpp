// Command-line front end: `tao check <file>` runs the checks a model file requests.

#include "tao/errors.hpp"
#include "tao/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode { kAllPositive = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw tao::ConfigError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_check(const std::string& path, const tao::RunOptions& options, const std::string& format)
{
  tao::ModelDocument doc = tao::parse_model(read_file(path));
  tao::Report report = tao::run_checks(doc, options);
  std::cout << (format == "json" ? tao::render_json(report) : tao::render_text(report));
  return report.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Bounded opacity checks for timed automata"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::string only;
  std::size_t witnesses = 1;
  bool stable = false;

  CLI::App* check = app.add_subcommand("check", "Run the checks requested by a model file");
  check->add_option("file", path, "Model file")->required();
  check->add_option("--only", only, "Run only the named check");
  check->add_flag("--stable", stable, "Omit timings for byte-identical reports");
  check->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--witnesses", witnesses, "Witnesses shown per check")->check(CLI::NonNegativeNumber);

  std::string print_path;
  CLI::App* print = app.add_subcommand("print", "Parse a model file and print its canonical form");
  print->add_option("file", print_path, "Model file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kAllPositive : kUsage;
  }

  try {
    if (*print) {
      std::cout << tao::serialize_model(tao::parse_model(read_file(print_path)));
      return kAllPositive;
    }
    tao::RunOptions options;
    if (!only.empty())
      options.only = only;
    options.stable = stable;
    options.max_witnesses = witnesses;
    return run_check(path, options, format) == 0 ? kAllPositive : kNegative;
  } catch (const tao::ParseError& e) {
    std::cerr << "tao: " << (*print ? print_path : path) << ":" << e.what() << "\n";
    return kUsage;
  } catch (const tao::Error& e) {
    std::cerr << "tao: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "tao: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "tao: " << e.what() << "\n";
    return kUsage;
  }
}
