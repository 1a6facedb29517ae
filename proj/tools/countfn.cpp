// countfn <command> --mode <monoid|group|brooks> --rank <n> [--maxlen L]
//         [--steps K] [--format text|json] <expr> [<expr2>]

#include <countfn/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace countfn::cli;

  CLI::App app{"Canonical forms, kernel certificates and witnesses for counting functions"};
  std::string command, mode, format = "text";
  Query query;
  query.max_len = default_max_len();

  app.add_option("command", command, "eval | canon | equiv | kernel | witness | defect | basis")->required();
  app.add_option("--mode", mode, "monoid | group | brooks")->required();
  app.add_option("--rank", query.rank, "alphabet rank n >= 2")->required();
  app.add_option("--maxlen", query.max_len, "enumeration depth for sup-norm estimates (env COUNTFN_MAXLEN)");
  app.add_option("--steps", query.steps, "witness range K");
  app.add_option("--format", format, "text | json");
  app.add_option("expressions", query.expressions, "expression(s) or word")->required()->expected(1, 2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto parsed_command = parse_command(command);
  auto parsed_mode = parse_mode(mode);
  if (!parsed_command || !parsed_mode || (format != "text" && format != "json")) {
    std::cerr << "error: unknown command, mode or format\n";
    return 2;
  }
  query.command = *parsed_command;
  query.mode = *parsed_mode;
  query.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  Report report;
  try {
    report = run(query);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << report.out;
  std::cerr << report.err;
  return report.exit_code;
}
