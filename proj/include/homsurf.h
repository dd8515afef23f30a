#ifndef HOMSURF_H
#define HOMSURF_H

/* C interface to the homogeneous-affine-surface library.  All functions
 * return hs_status; results and error messages come back as malloc'd JSON /
 * text strings owned by the caller (release with hs_string_free). */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hs_surface hs_surface;

typedef enum hs_status {
  HS_OK = 0,
  HS_ERR_UNKNOWN = 1,
  HS_ERR_UNCLASSIFIED = 2,
  HS_ERR_PARSE = 3,
  HS_ERR_VERIFY = 4,
  HS_ERR_DOMAIN = 5,
  HS_ERR_PRECONDITION = 6,
  HS_ERR_RANK = 7,
  HS_ERR_PARAM = 8,
  HS_ERR_DICTIONARY = 9,
  HS_ERR_NOT_CLOSED = 10,
  HS_ERR_FLAT = 11,
  HS_ERR_UNSUPPORTED = 12,
  HS_ERR_DIVISION = 13,
  HS_ERR_JACOBI = 14,
  HS_ERR_INTERNAL = 15
} hs_status;

/* Static version string; do not free. */
const char* hs_version(void);

/* Frees any string returned by the functions below; NULL is a no-op. */
void hs_string_free(char* s);

/* Parses {"kind":"typeA"|"typeB","gamma":{"111":..,..,"222":..}} or model
 * shorthand {"model":"M2","params":{"c":0.25}}.  On success *out owns the
 * surface; release with hs_surface_free. */
hs_status hs_surface_from_json(const char* json_text, hs_surface** out, char** err);

void hs_surface_free(hs_surface* s);

/* cfg_json may be NULL or an object with optional keys tol, fd_step_2d,
 * fd_step_4d, seed, samples.  Each call writes a malloc'd JSON report to
 * *out on success, or a message to *err on failure. */
hs_status hs_classify_json(const hs_surface* s, const char* cfg_json, char** out, char** err);
hs_status hs_killing_json(const hs_surface* s, const char* cfg_json, char** out, char** err);
hs_status hs_soliton_json(const hs_surface* s, const char* cfg_json, char** out, char** err);
hs_status hs_yamabe_json(const hs_surface* s, const char* cfg_json, char** out, char** err);

/* request_json keys (all optional): phi [[r,r],[r,r]], points [[x1,x2,y1,y2],
 * ...], h, tol, seed, samples.  Lifts the surface's soliton potential and
 * checks the 4D steady-soliton equation on the extension. */
hs_status hs_verify_extension_json(const hs_surface* s, const char* request_json, char** out,
                                   char** err);

/* request_json keys: p0 [x1,x2] and v0 [v1,v2] (required), t_max, dt. */
hs_status hs_geodesic_json(const hs_surface* s, const char* request_json, char** out, char** err);

/* Bundles classify + killing + soliton + yamabe; sections that fail carry an
 * embedded {"error": {...}} object instead of aborting the whole report. */
hs_status hs_report_json(const hs_surface* s, const char* cfg_json, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* HOMSURF_H */
