/*
 * magicpath C interface.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an mp_status; on
 * failure a description is available from mp_last_error() on the same
 * thread until the next failing call.
 *
 * Catalog and record indices are 1-based.
 */
#ifndef MAGICPATH_H
#define MAGICPATH_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MAGICPATH_BUILDING)
#    define MP_API __declspec(dllexport)
#  else
#    define MP_API __declspec(dllimport)
#  endif
#else
#  define MP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_ERR_VALIDATION = 1, /* bad input, malformed files, out-of-range index */
  MP_ERR_IO = 2,         /* file could not be read or written */
  MP_ERR_INTERNAL = 3
} mp_status;

typedef struct mp_catalog mp_catalog;   /* ordered list of squares */
typedef struct mp_analysis mp_analysis; /* per-square analysis records */

typedef struct mp_classifier_params {
  int local_min_length;     /* 2..15, default 9 */
  int partial_max_mismatch; /* 1..7, default 3 */
} mp_classifier_params;

typedef struct mp_histogram_spec {
  double bin_width;   /* default 1.0 */
  double range_start; /* default 20.0 */
  double range_end;   /* default 43.0 */
} mp_histogram_spec;

typedef enum mp_symmetry_class {
  MP_CLASS_REFLEXIVE = 0,
  MP_CLASS_LOCAL = 1,
  MP_CLASS_PERIODIC = 2,
  MP_CLASS_PARTIAL = 3,
  MP_CLASS_OTHER = 4
} mp_symmetry_class;

typedef enum mp_render_mode { MP_RENDER_TRAJECTORY = 0, MP_RENDER_PATTERN = 1 } mp_render_mode;

typedef struct mp_record {
  size_t index;
  int order;
  int cells[16];        /* order*order entries used */
  int legs_squared[15]; /* order*order-1 entries used */
  double total;
  double per_city_average;
  int reflexive;
  int mismatch_pairs;
  int longest_local_palindrome_length;
  int period;        /* 0 when absent */
  int assigned_class; /* mp_symmetry_class */
  int dudeney_group; /* 0 for order 3 */
  size_t duplicate_group_id;
  int is_associative;
  int is_pandiagonal;
} mp_record;

MP_API const char* mp_version(void);
MP_API const char* mp_last_error(void);
MP_API const char* mp_symmetry_class_name(int cls);

MP_API mp_classifier_params mp_default_classifier_params(void);
MP_API mp_histogram_spec mp_default_histogram_spec(void);

/* Catalogs */
MP_API mp_status mp_catalog_enumerate(int order, unsigned threads, mp_catalog** out);
MP_API mp_status mp_catalog_load(const char* squares_path, mp_catalog** out);
MP_API mp_status mp_catalog_save(const mp_catalog* catalog, const char* squares_path);
MP_API int mp_catalog_order(const mp_catalog* catalog);
MP_API size_t mp_catalog_size(const mp_catalog* catalog);
/* Copies order*order cells of entry `index` into `cells`. */
MP_API mp_status mp_catalog_square(const mp_catalog* catalog, size_t index, int* cells, size_t capacity);
MP_API void mp_catalog_free(mp_catalog* catalog);

/* Analysis */
MP_API mp_status mp_analysis_run(const mp_catalog* catalog, const mp_classifier_params* params, unsigned threads,
                                 mp_analysis** out);
MP_API mp_status mp_analysis_load(const char* analysis_path, mp_analysis** out);
MP_API mp_status mp_analysis_save(const mp_analysis* analysis, const char* analysis_path);
MP_API size_t mp_analysis_size(const mp_analysis* analysis);
MP_API mp_status mp_analysis_record(const mp_analysis* analysis, size_t index, mp_record* out);
MP_API void mp_analysis_free(mp_analysis* analysis);

/* Outputs. The report writes `report_path` plus two sidecars next to it:
 * <stem>.histogram.csv and, for order 4, <stem>.dudeney.csv. */
MP_API mp_status mp_report_write(const mp_analysis* analysis, const mp_histogram_spec* spec, const char* report_path);
MP_API mp_status mp_sweep_write(const mp_analysis* analysis, const char* csv_path);
MP_API mp_status mp_render_svg(const mp_catalog* catalog, size_t index, int mode, const char* svg_path);

#ifdef __cplusplus
}
#endif

#endif /* MAGICPATH_H */
