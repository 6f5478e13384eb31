#include "magicpath/magicpath.h"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <new>
#include <string>

#include "magicpath/analysis.hpp"
#include "magicpath/enumerator.hpp"
#include "magicpath/error.hpp"
#include "magicpath/io.hpp"
#include "magicpath/render.hpp"
#include "magicpath/report.hpp"

struct mp_catalog {
  int order = 0;
  std::vector<magicpath::Square> squares;
};

struct mp_analysis {
  magicpath::AnalysisSet set;
};

namespace {

thread_local std::string g_last_error;

mp_status fail(mp_status code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
mp_status guarded(Body&& body) {
  try {
    body();
    return MP_OK;
  } catch (const magicpath::ValidationError& e) {
    return fail(MP_ERR_VALIDATION, e.what());
  } catch (const magicpath::IoError& e) {
    return fail(MP_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MP_ERR_INTERNAL, e.what());
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw magicpath::ValidationError(what);
}

magicpath::ClassifierParams to_params(const mp_classifier_params* p) {
  magicpath::ClassifierParams out;
  if (p) {
    out.local_min_length = p->local_min_length;
    out.partial_max_mismatch = p->partial_max_mismatch;
  }
  return out;
}

std::filesystem::path sidecar(const std::filesystem::path& report, const std::string& suffix) {
  return report.parent_path() / (report.stem().string() + suffix);
}

}  // namespace

extern "C" {

const char* mp_version(void) { return "1.0.0"; }

const char* mp_last_error(void) { return g_last_error.c_str(); }

const char* mp_symmetry_class_name(int cls) {
  switch (cls) {
    case MP_CLASS_REFLEXIVE: return "Reflexive";
    case MP_CLASS_LOCAL: return "Local";
    case MP_CLASS_PERIODIC: return "Periodic";
    case MP_CLASS_PARTIAL: return "Partial";
    case MP_CLASS_OTHER: return "Other";
    default: return "?";
  }
}

mp_classifier_params mp_default_classifier_params(void) {
  const magicpath::ClassifierParams d;
  return {d.local_min_length, d.partial_max_mismatch};
}

mp_histogram_spec mp_default_histogram_spec(void) {
  const magicpath::HistogramSpec d;
  return {d.bin_width, d.range_start, d.range_end};
}

mp_status mp_catalog_enumerate(int order, unsigned threads, mp_catalog** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    auto catalog = magicpath::enumerate_canonical(order, threads);
    auto* h = new mp_catalog{order, catalog.squares()};
    *out = h;
  });
}

mp_status mp_catalog_load(const char* squares_path, mp_catalog** out) {
  return guarded([&] {
    require(squares_path && out, "null argument");
    auto squares = magicpath::parse_squares(magicpath::read_text_file(squares_path));
    require(!squares.empty(), "squares file holds no squares");
    const int order = squares.front().order();
    *out = new mp_catalog{order, std::move(squares)};
  });
}

mp_status mp_catalog_save(const mp_catalog* catalog, const char* squares_path) {
  return guarded([&] {
    require(catalog && squares_path, "null argument");
    magicpath::write_text_file(squares_path, magicpath::format_squares(catalog->order, catalog->squares));
  });
}

int mp_catalog_order(const mp_catalog* catalog) { return catalog ? catalog->order : 0; }

size_t mp_catalog_size(const mp_catalog* catalog) { return catalog ? catalog->squares.size() : 0; }

mp_status mp_catalog_square(const mp_catalog* catalog, size_t index, int* cells, size_t capacity) {
  return guarded([&] {
    require(catalog && cells, "null argument");
    if (index < 1 || index > catalog->squares.size())
      throw magicpath::ValidationError("index " + std::to_string(index) + " out of range 1.." +
                                       std::to_string(catalog->squares.size()));
    const auto src = catalog->squares[index - 1].cells();
    require(capacity >= src.size(), "cell buffer too small");
    std::copy(src.begin(), src.end(), cells);
  });
}

void mp_catalog_free(mp_catalog* catalog) { delete catalog; }

mp_status mp_analysis_run(const mp_catalog* catalog, const mp_classifier_params* params, unsigned threads,
                          mp_analysis** out) {
  return guarded([&] {
    require(catalog && out, "null argument");
    *out = new mp_analysis{magicpath::analyze(catalog->squares, to_params(params), threads)};
  });
}

mp_status mp_analysis_load(const char* analysis_path, mp_analysis** out) {
  return guarded([&] {
    require(analysis_path && out, "null argument");
    *out = new mp_analysis{magicpath::parse_analysis(magicpath::read_text_file(analysis_path))};
  });
}

mp_status mp_analysis_save(const mp_analysis* analysis, const char* analysis_path) {
  return guarded([&] {
    require(analysis && analysis_path, "null argument");
    magicpath::write_text_file(analysis_path, magicpath::format_analysis(analysis->set));
  });
}

size_t mp_analysis_size(const mp_analysis* analysis) { return analysis ? analysis->set.records.size() : 0; }

mp_status mp_analysis_record(const mp_analysis* analysis, size_t index, mp_record* out) {
  return guarded([&] {
    require(analysis && out, "null argument");
    const auto& recs = analysis->set.records;
    if (index < 1 || index > recs.size())
      throw magicpath::ValidationError("index " + std::to_string(index) + " out of range 1.." +
                                       std::to_string(recs.size()));
    const auto& r = recs[index - 1];
    mp_record rec{};
    rec.index = r.index;
    rec.order = analysis->set.order;
    std::copy(r.cells.begin(), r.cells.end(), rec.cells);
    std::copy(r.legs_squared.begin(), r.legs_squared.end(), rec.legs_squared);
    rec.total = r.total;
    rec.per_city_average = r.per_city_average;
    rec.reflexive = r.reflexive;
    rec.mismatch_pairs = r.mismatch_pairs;
    rec.longest_local_palindrome_length = r.longest_local_palindrome_length;
    rec.period = r.period.value_or(0);
    rec.assigned_class = static_cast<int>(r.assigned_class);
    rec.dudeney_group = r.dudeney_group.value_or(0);
    rec.duplicate_group_id = r.duplicate_group_id;
    rec.is_associative = r.is_associative;
    rec.is_pandiagonal = r.is_pandiagonal;
    *out = rec;
  });
}

void mp_analysis_free(mp_analysis* analysis) { delete analysis; }

mp_status mp_report_write(const mp_analysis* analysis, const mp_histogram_spec* spec, const char* report_path) {
  return guarded([&] {
    require(analysis && report_path, "null argument");
    magicpath::HistogramSpec hs;
    if (spec) hs = {spec->bin_width, spec->range_start, spec->range_end};
    const auto files = magicpath::build_report(analysis->set, hs);
    const std::filesystem::path path(report_path);
    magicpath::write_text_file(path, files.markdown);
    magicpath::write_text_file(sidecar(path, ".histogram.csv"), files.histogram_csv);
    if (!files.group_census_csv.empty())
      magicpath::write_text_file(sidecar(path, ".dudeney.csv"), files.group_census_csv);
  });
}

mp_status mp_sweep_write(const mp_analysis* analysis, const char* csv_path) {
  return guarded([&] {
    require(analysis && csv_path, "null argument");
    require(!analysis->set.records.empty(), "analysis holds no records");
    magicpath::write_text_file(csv_path,
                               magicpath::format_sweep_csv(magicpath::sweep_local_threshold(analysis->set)));
  });
}

mp_status mp_render_svg(const mp_catalog* catalog, size_t index, int mode, const char* svg_path) {
  return guarded([&] {
    require(catalog && svg_path, "null argument");
    if (mode != MP_RENDER_TRAJECTORY && mode != MP_RENDER_PATTERN)
      throw magicpath::ValidationError("unknown render mode " + std::to_string(mode));
    if (index < 1 || index > catalog->squares.size())
      throw magicpath::ValidationError("index " + std::to_string(index) + " out of range 1.." +
                                       std::to_string(catalog->squares.size()));
    const auto m = mode == MP_RENDER_TRAJECTORY ? magicpath::RenderMode::Trajectory : magicpath::RenderMode::Pattern;
    magicpath::write_text_file(svg_path, magicpath::render_svg(catalog->squares[index - 1], m));
  });
}

}  // extern "C"
