#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "horo/horoclass.hpp"
#include "horo/report.hpp"

namespace {

int emit(const horo::ReportEnvelope& e, const std::string& format) {
  std::cout << (format == "tsv" ? horo::render_tsv(e) : horo::render_json(e));
  return e.mismatched > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive re-derivation of the rank-1 horospherical and "
               "two-orbits classification tables"};
  app.require_subcommand(1);

  int max_rank = 12;
  std::string format = "json";
  std::string fixtures = "fixtures";

  auto add_rank = [&](CLI::App* cmd) {
    cmd->add_option("--max-rank", max_rank, "largest simple rank enumerated")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
  };

  CLI::App* classify =
      app.add_subcommand("classify", "enumerate the special pairs and their verdicts");
  add_rank(classify);
  add_format(classify);

  CLI::App* two = app.add_subcommand(
      "two-orbits", "enumerate the smooth completion candidates and their resolutions");
  add_rank(two);
  add_format(two);

  CLI::App* oct =
      app.add_subcommand("octonion", "verify the octonion multiplication tables");
  add_format(oct);

  CLI::App* ver =
      app.add_subcommand("verify-all", "regenerate all reports and compare with fixtures");
  add_rank(ver);
  ver->add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (classify->parsed()) return emit(horo::cmd_classify(max_rank), format);
    if (two->parsed()) return emit(horo::cmd_two_orbits(max_rank), format);
    if (oct->parsed()) return emit(horo::cmd_octonion(), format);
    return horo::verify_all(max_rank, fixtures, std::cout, std::cerr);
  } catch (const horo::classification_gap_error& e) {
    std::cerr << "classification gap: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
