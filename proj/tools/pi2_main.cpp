#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pi2/cli.hpp"

namespace {

void write_output(pi2::Report const& report, pi2::RunConfig const& cfg,
                  std::string const& output_path) {
  std::string payload = (cfg.format == "json") ? report.doc.dump(2) + "\n" : report.text + "\n";
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    throw pi2::error("cannot write output file: " + output_path);
  }
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pi2: word equivalence, non-cancellative tuples and second-homotopy chains of "
               "semi-positively presented monoids"};
  app.require_subcommand(1);
  app.fallthrough();

  pi2::RunConfig cfg;
  std::string output_path;
  app.add_option("-p,--presentation", cfg.presentation,
                 "presentation file or bundled corpus name");
  app.add_option("--max-states", cfg.limits.max_states, "search state bound");
  app.add_option("--max-word-length", cfg.limits.max_word_length, "search word-length bound");
  app.add_option("--max-depth", cfg.limits.max_depth, "search depth bound (0 = unlimited)");
  app.add_option("--format", cfg.format, "output format: json|text|dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_flag("--strict", cfg.strict, "exit nonzero when any verdict is unknown");
  app.add_option("-o,--output", output_path, "write the report to a file instead of stdout");

  std::string u_text;
  std::string v_text;
  auto* equiv = app.add_subcommand("equiv", "decide word equivalence with a witness");
  equiv->add_option("-u", u_text, "first word")->required();
  equiv->add_option("-v", v_text, "second word")->required();

  std::string w_text;
  std::string dot_path;
  auto* component = app.add_subcommand("component", "materialize a rewriting-graph component");
  component->add_option("-w", w_text, "root word")->required();
  component->add_option("--dot", dot_path, "write a Graphviz DOT file");

  std::string kernel_text;
  size_t flank = 3;
  bool prove_one_sided = false;
  auto* nc = app.add_subcommand("nc", "search non-cancellative tuples over kernels");
  nc->add_option("--kernel,--kernels", kernel_text, "kernels \"b|c;b2|c2\"")->required();
  nc->add_option("--flank", flank, "flank length bound");
  nc->add_flag("--prove-one-sided", prove_one_sided,
               "attempt the boundary-letter proof that one-sided tuples cannot exist");

  std::string twins_kernels;
  int all_kernels_up_to = 0;
  size_t twins_flank = 3;
  auto* twins = app.add_subcommand("twins", "find twins of reduced non-cancellative tuples");
  twins->add_option("--kernels", twins_kernels, "kernels \"b|c;b2|c2\"");
  twins->add_option("--all-kernels-up-to", all_kernels_up_to,
                    "scan all kernels with words up to this length");
  twins->add_option("--flank", twins_flank, "flank length bound");

  std::string pi2_kernels;
  size_t pi2_flank = 3;
  int oracle_radius = 0;
  bool with_ba = false;
  auto* pi2cmd = app.add_subcommand("pi2", "compute Pi-class chains of twins");
  pi2cmd->add_option("--kernel,--kernels", pi2_kernels, "kernels \"b|c;b2|c2\"")->required();
  pi2cmd->add_option("--flank", pi2_flank, "flank length bound");
  pi2cmd->add_option("--oracle", oracle_radius,
                     "cross-check against the box-kernel oracle at this radius");
  pi2cmd->add_flag("--ba-certificate", with_ba, "attach classifying-space certificates");

  int m = 1;
  size_t length_bound = 8;
  auto* example1 = app.add_subcommand("example1", "bounded analysis of {a,b | (ab)^m a ~ 1}");
  example1->add_option("-m", m, "relation exponent")->check(CLI::PositiveNumber);
  example1->add_option("--bound", length_bound, "sweep word-length bound");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "replay every certificate embedded in a report");
  verify->add_option("report", report_path, "report JSON file")->required();

  std::string dump_name;
  auto* corpus = app.add_subcommand("corpus", "list bundled presentations");
  corpus->add_option("--dump", dump_name, "print one bundled presentation document");

  CLI11_PARSE(app, argc, argv);

  try {
    pi2::Report report;
    if (*equiv) {
      report = pi2::cmd_equiv(cfg, u_text, v_text);
    } else if (*component) {
      report = pi2::cmd_component(cfg, w_text, dot_path);
    } else if (*nc) {
      report = pi2::cmd_nc(cfg, kernel_text, flank, prove_one_sided);
    } else if (*twins) {
      if (twins_kernels.empty() && all_kernels_up_to <= 0) {
        throw pi2::error("twins needs --kernels or --all-kernels-up-to");
      }
      report = pi2::cmd_twins(cfg, twins_kernels, all_kernels_up_to, twins_flank);
    } else if (*pi2cmd) {
      report = pi2::cmd_pi2(cfg, pi2_kernels, pi2_flank, oracle_radius, with_ba);
    } else if (*example1) {
      report = pi2::cmd_example1(cfg, m, length_bound);
    } else if (*verify) {
      report = pi2::cmd_verify(report_path);
    } else if (*corpus) {
      report = pi2::cmd_corpus(dump_name);
    }
    write_output(report, cfg, output_path);
    return report.exit_code(cfg.strict);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
