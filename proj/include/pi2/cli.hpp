#ifndef PI2_CLI_HPP_
#define PI2_CLI_HPP_

#include <string>

#include "pi2/chains.hpp"
#include "pi2/corpus.hpp"
#include "pi2/nc.hpp"

namespace pi2 {

struct RunConfig {
  std::string presentation;     // filesystem path or bundled corpus name
  SearchLimits limits;          // defaults: 32 / 200000 / 0
  std::string format = "json";  // json | text | dot
  bool strict = false;
};

// A self-contained command result: the JSON document embeds the presentation
// and every certificate it mentions, so `pi2 verify` can re-check the file
// without other inputs.
struct Report {
  nlohmann::json doc;
  std::string text;          // human rendering
  bool ok = true;            // command completed without error
  bool any_unknown = false;  // some verdict hit a search bound

  int exit_code(bool strict) const {
    if (!ok) {
      return 1;
    }
    return (strict && any_unknown) ? 2 : 0;
  }
};

// Kernel list syntax: "b|c;b2|c2;..." with space-separated symbols (compact
// digits accepted for single-character alphabets).
std::vector<std::pair<Word, Word>> parse_kernels(Presentation const& p, std::string const& text);

Report cmd_equiv(RunConfig const& cfg, std::string const& u_text, std::string const& v_text);
Report cmd_component(RunConfig const& cfg, std::string const& w_text, std::string const& dot_path);
Report cmd_nc(RunConfig const& cfg, std::string const& kernel_text, size_t flank,
              bool prove_one_sided);
Report cmd_twins(RunConfig const& cfg, std::string const& kernels_text, int all_kernels_up_to,
                 size_t flank);
Report cmd_pi2(RunConfig const& cfg, std::string const& kernels_text, size_t flank,
               int oracle_radius, bool with_ba);
Report cmd_example1(RunConfig const& cfg, int m, size_t length_bound);
Report cmd_verify(std::string const& report_path);
Report cmd_corpus(std::string const& dump_name);

// Kernel-candidate enumeration for --all-kernels-up-to: inequivalent word
// pairs up to the length bound, deduplicated by unordered class pair.
std::vector<std::pair<Word, Word>> enumerate_kernels(Presentation const& p, size_t max_len,
                                                     SearchLimits const& limits);

}  // namespace pi2

#endif  // PI2_CLI_HPP_
