// magicpath command-line tool. Talks to the library exclusively through the
// C interface in magicpath.h.

#include <CLI11.hpp>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "magicpath/magicpath.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct CatalogDeleter {
  void operator()(mp_catalog* c) const { mp_catalog_free(c); }
};
struct AnalysisDeleter {
  void operator()(mp_analysis* a) const { mp_analysis_free(a); }
};
using CatalogPtr = std::unique_ptr<mp_catalog, CatalogDeleter>;
using AnalysisPtr = std::unique_ptr<mp_analysis, AnalysisDeleter>;

// Prints the error and maps a status to the process exit code.
int report(mp_status st) {
  if (st == MP_OK) return kExitOk;
  std::fprintf(stderr, "magicpath: %s\n", mp_last_error());
  return st == MP_ERR_IO ? kExitIo : kExitValidation;
}

int run_enumerate(int order, unsigned threads, const std::string& out) {
  mp_catalog* raw = nullptr;
  if (auto st = mp_catalog_enumerate(order, threads, &raw); st != MP_OK) return report(st);
  CatalogPtr catalog(raw);
  if (auto st = mp_catalog_save(catalog.get(), out.c_str()); st != MP_OK) return report(st);
  std::printf("wrote %zu squares of order %d to %s\n", mp_catalog_size(catalog.get()), order, out.c_str());
  return kExitOk;
}

int run_analyze(const std::string& squares, const std::string& out, const mp_classifier_params& params,
                unsigned threads) {
  mp_catalog* raw = nullptr;
  if (auto st = mp_catalog_load(squares.c_str(), &raw); st != MP_OK) return report(st);
  CatalogPtr catalog(raw);
  mp_analysis* a = nullptr;
  if (auto st = mp_analysis_run(catalog.get(), &params, threads, &a); st != MP_OK) return report(st);
  AnalysisPtr analysis(a);
  if (auto st = mp_analysis_save(analysis.get(), out.c_str()); st != MP_OK) return report(st);

  std::size_t reflexive = 0;
  for (std::size_t i = 1; i <= mp_analysis_size(analysis.get()); ++i) {
    mp_record rec;
    mp_analysis_record(analysis.get(), i, &rec);
    reflexive += rec.reflexive ? 1 : 0;
  }
  std::printf("wrote %zu records to %s (reflexive: %zu)\n", mp_analysis_size(analysis.get()), out.c_str(),
              reflexive);
  return kExitOk;
}

int with_analysis(const std::string& path, auto&& body) {
  mp_analysis* a = nullptr;
  if (auto st = mp_analysis_load(path.c_str(), &a); st != MP_OK) return report(st);
  AnalysisPtr analysis(a);
  return report(body(analysis.get()));
}

int run_render(const std::string& squares, std::size_t index, const std::string& mode, const std::string& out) {
  int m = -1;
  if (mode == "trajectory") m = MP_RENDER_TRAJECTORY;
  else if (mode == "pattern") m = MP_RENDER_PATTERN;
  else {
    std::fprintf(stderr, "magicpath: unknown mode '%s' (expected trajectory or pattern)\n", mode.c_str());
    return kExitValidation;
  }
  mp_catalog* raw = nullptr;
  if (auto st = mp_catalog_load(squares.c_str(), &raw); st != MP_OK) return report(st);
  CatalogPtr catalog(raw);
  return report(mp_render_svg(catalog.get(), index, m, out.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magicpath: traveler paths through magic squares"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mp_version()));

  unsigned threads = 1;

  auto* enumerate = app.add_subcommand("enumerate", "Write the canonical catalog of magic squares");
  int order = 4;
  std::string enum_out;
  enumerate->add_option("--order", order, "Square order (3 or 4)")->required();
  enumerate->add_option("--out", enum_out, "Squares file to write")->required();
  enumerate->add_option("--threads", threads, "Worker threads");

  auto* analyze = app.add_subcommand("analyze", "Analyze every square in a squares file");
  std::string squares_in, analysis_out;
  mp_classifier_params params = mp_default_classifier_params();
  analyze->add_option("--squares", squares_in, "Squares file")->required();
  analyze->add_option("--out", analysis_out, "Analysis file to write")->required();
  analyze->add_option("--local-min-length", params.local_min_length, "Local palindrome length threshold");
  analyze->add_option("--partial-max-mismatch", params.partial_max_mismatch, "Mismatch pairs allowed for Partial");
  analyze->add_option("--threads", threads, "Worker threads");

  auto* report_cmd = app.add_subcommand("report", "Write the markdown report and CSV sidecars");
  std::string analysis_in, report_out;
  mp_histogram_spec hist = mp_default_histogram_spec();
  std::vector<double> hist_range;
  report_cmd->add_option("--analysis", analysis_in, "Analysis file")->required();
  report_cmd->add_option("--out", report_out, "Markdown report path")->required();
  report_cmd->add_option("--hist-bin-width", hist.bin_width, "Histogram bin width");
  report_cmd->add_option("--hist-range", hist_range, "Histogram range A B")->expected(2);

  auto* render = app.add_subcommand("render", "Render one square as SVG");
  std::string render_squares, mode, render_out;
  std::size_t index = 0;
  render->add_option("--squares", render_squares, "Squares file")->required();
  render->add_option("--index", index, "1-based catalog index")->required();
  render->add_option("--mode", mode, "trajectory or pattern")->required();
  render->add_option("--out", render_out, "SVG path")->required();

  auto* sweep = app.add_subcommand("sweep", "Sweep the local-symmetry threshold");
  std::string sweep_in, sweep_out;
  sweep->add_option("--analysis", sweep_in, "Analysis file")->required();
  sweep->add_option("--out", sweep_out, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (enumerate->parsed()) return run_enumerate(order, threads, enum_out);
  if (analyze->parsed()) return run_analyze(squares_in, analysis_out, params, threads);
  if (report_cmd->parsed()) {
    if (hist_range.size() == 2) {
      hist.range_start = hist_range[0];
      hist.range_end = hist_range[1];
    }
    return with_analysis(analysis_in, [&](mp_analysis* a) { return mp_report_write(a, &hist, report_out.c_str()); });
  }
  if (render->parsed()) return run_render(render_squares, index, mode, render_out);
  if (sweep->parsed())
    return with_analysis(sweep_in, [&](mp_analysis* a) { return mp_sweep_write(a, sweep_out.c_str()); });
  return kExitValidation;
}
