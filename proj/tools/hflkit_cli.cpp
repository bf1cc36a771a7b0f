// hflkit: longitude Floer homology of (2,2n+1) torus knots from the command line.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
// error, 3 internal invariant breach.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "hflkit/graded_complex.hpp"
#include "hflkit/report.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longitude Floer homology toolkit for (2,2n+1) torus knots"};
  app.require_subcommand(1);
  app.fallthrough();

  // Read the env var by hand: CLI11 silently drops env values that fail a check.
  const char* env_format = std::getenv("HFLKIT_FORMAT");
  std::string format = env_format ? env_format : "table";
  app.add_option("--format", format, "Output format: json or table (default $HFLKIT_FORMAT, else table)")
      ->check(CLI::IsMember({"json", "table"}));

  int n = 0;
  std::string spinc_text;

  auto* hfl = app.add_subcommand("hfl", "Longitude homology: chain computation beside the closed form");
  hfl->add_option("--n", n, "Torus knot parameter, T(2,2n+1)")->required();
  hfl->add_option("--spinc", spinc_text, "Restrict to one half-integral class, e.g. 3/2");

  auto* complex = app.add_subcommand("complex", "Emit the chain complex of one class as JSON");
  complex->add_option("--n", n, "Torus knot parameter")->required();
  complex->add_option("--spinc", spinc_text, "Half-integral class, e.g. -1/2")->required();

  std::string input_path;
  auto* homology = app.add_subcommand("homology", "Homology of a chain complex given as JSON");
  homology->add_option("--input", input_path, "JSON file, or - for standard input")->required();

  auto* whitehead = app.add_subcommand("whitehead", "HFK-hat(K_L, 1) of the Whitehead double of T(2,2n+1)");
  whitehead->add_option("--n", n, "Torus knot parameter")->required();

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomials");
  alexander->require_subcommand(1);
  auto* torus = alexander->add_subcommand("torus", "Alexander polynomial of T(2,2n+1)");
  torus->add_option("--n", n, "Torus knot parameter")->required();
  std::string companion, pattern;
  std::int64_t winding = 0;
  auto* satellite = alexander->add_subcommand("satellite", "Alexander polynomial of a satellite knot");
  satellite->add_option("--companion", companion, "Companion polynomial, e.g. \"t^-1 - 1 + t\"")->required();
  satellite->add_option("--pattern", pattern, "Pattern polynomial")->required();
  satellite->add_option("--winding", winding, "Winding number of the pattern")->required();

  bool list = false;
  std::string pd_text;
  auto* kauffman = app.add_subcommand("kauffman", "Kauffman states of T(2,2n+1) or of a PD code");
  auto* kn = kauffman->add_option("--n", n, "Torus knot parameter");
  auto* kpd = kauffman->add_option("--pd", pd_text, "PD code, e.g. \"X(1,4,2,5), X(3,6,4,1), X(5,2,6,3), mark=6\"");
  kn->excludes(kpd);
  kauffman->add_flag("--list", list, "List every state");

  int max_n = 0;
  auto* verify = app.add_subcommand("verify", "Run every family check for n = 1..max-n");
  verify->add_option("--max-n", max_n, "Largest n to check")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const hflkit::OutputFormat fmt = hflkit::parse_format(format);
    hflkit::ReportDocument doc;
    if (*hfl) {
      std::optional<hflkit::HalfInt> s;
      if (!spinc_text.empty()) s = hflkit::HalfInt::parse(spinc_text);
      doc = hflkit::cmd_hfl(n, s);
    } else if (*complex) {
      doc = hflkit::cmd_complex(n, hflkit::HalfInt::parse(spinc_text));
    } else if (*homology) {
      doc = hflkit::cmd_homology(nlohmann::json::parse(read_input(input_path)));
    } else if (*whitehead) {
      doc = hflkit::cmd_whitehead(n);
    } else if (*torus) {
      doc = hflkit::cmd_alexander_torus(n);
    } else if (*satellite) {
      doc = hflkit::cmd_alexander_satellite(companion, pattern, winding);
    } else if (*kauffman) {
      if (kpd->count() > 0) {
        doc = hflkit::cmd_kauffman_pd(pd_text, list);
      } else if (kn->count() > 0) {
        doc = hflkit::cmd_kauffman(n, list);
      } else {
        throw std::invalid_argument("kauffman needs --n or --pd");
      }
    } else if (*verify) {
      doc = hflkit::cmd_verify(max_n);
    }
    std::cout << hflkit::render(doc, fmt);
    if (!doc.all_passed()) {
      for (const auto& c : doc.checks) {
        if (!c.pass) {
          std::cerr << "check failed: " << c.name << "\n";
          break;
        }
      }
      return kExitCheckFailed;
    }
    return 0;
  } catch (const hflkit::MalformedComplex& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
