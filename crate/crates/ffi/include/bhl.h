#ifndef BHL_H
#define BHL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible call.
 */
typedef enum BhlStatus {
  BhlStatus_Ok = 0,
  BhlStatus_NullArgument = 1,
  BhlStatus_InvalidUtf8 = 2,
  BhlStatus_Parse = 3,
  /**
   * A hypothesis of the requested construction or check does not hold.
   */
  BhlStatus_Precondition = 4,
  /**
   * Unknown name, signature mismatch or another misuse.
   */
  BhlStatus_Invalid = 5,
  BhlStatus_Panic = 6,
} BhlStatus;

/**
 * Outcome of a report.
 */
typedef enum BhlOutcome {
  BhlOutcome_Pass = 0,
  BhlOutcome_Fail = 2,
  BhlOutcome_Precondition = 3,
} BhlOutcome;

/**
 * Opaque Hopf algebra.
 */
typedef struct BhlAlgebra BhlAlgebra;

/**
 * Opaque object of a module category.
 */
typedef struct BhlModule BhlModule;

/**
 * Opaque verification report.
 */
typedef struct BhlReport BhlReport;

/**
 * Message of the last failed call on this thread; empty after a success. Borrowed.
 */
const char *bhl_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void bhl_string_free(char *s);

/**
 * A built-in algebra: `kZ<N>`, `sweedler`, `hmnd:<m>:<d1,d2,..>`.
 *
 * # Safety
 * `name` is a nul-terminated string; `out` is writable.
 */
enum BhlStatus bhl_algebra_builtin(const char *name, struct BhlAlgebra **out);

/**
 * Parses an algebra from the text format.
 *
 * # Safety
 * `text` is a nul-terminated string; `out` is writable.
 */
enum BhlStatus bhl_algebra_parse(const char *text, struct BhlAlgebra **out);

/**
 * # Safety
 * `a` is null or a live handle from this library.
 */
void bhl_algebra_free(struct BhlAlgebra *a);

/**
 * Dimension of the algebra, 0 for a null handle.
 *
 * # Safety
 * `a` is null or a live handle.
 */
uintptr_t bhl_algebra_dim(const struct BhlAlgebra *a);

/**
 * The algebra in the text format; release with [`bhl_string_free`]. Null for a null handle.
 *
 * # Safety
 * `a` is null or a live handle.
 */
char *bhl_algebra_to_text(const struct BhlAlgebra *a);

/**
 * The Drinfel'd double of `a`.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum BhlStatus bhl_double(const struct BhlAlgebra *a, struct BhlAlgebra **out);

/**
 * Hopf axioms of `a`.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum BhlStatus bhl_verify_hopf(const struct BhlAlgebra *a, struct BhlReport **out);

/**
 * A built-in module over `a` (`adjoint`, `adjoint_ll`, `regular_left`, `LR_Hcop:1`, ...).
 *
 * # Safety
 * `a` is a live handle; `name` is a nul-terminated string; `out` is writable.
 */
enum BhlStatus bhl_module_builtin(const struct BhlAlgebra *a,
                                  const char *name,
                                  struct BhlModule **out);

/**
 * # Safety
 * `m` is null or a live handle.
 */
void bhl_module_free(struct BhlModule *m);

/**
 * Structure laws of a module (YD conditions or D-module axioms).
 *
 * # Safety
 * `m` is a live handle; `out` is writable.
 */
enum BhlStatus bhl_module_check(const struct BhlModule *m, struct BhlReport **out);

/**
 * A functor property (`roundtrip`, `monoidal`, `braided`) on `m` and, when not null, `n`.
 * Monoidality and braidings use `m` twice when `n` is null.
 *
 * # Safety
 * `functor` and `property` are nul-terminated strings; `m` is a live handle; `n` is null or
 * a live handle; `out` is writable.
 */
enum BhlStatus bhl_check_functor(const char *functor,
                                 const char *property,
                                 const struct BhlModule *m,
                                 const struct BhlModule *n,
                                 struct BhlReport **out);

/**
 * One acceptance criterion, `1..=12`.
 *
 * # Safety
 * `out` is writable.
 */
enum BhlStatus bhl_suite_criterion(uint32_t k, struct BhlReport **out);

/**
 * # Safety
 * `r` is null or a live handle.
 */
void bhl_report_free(struct BhlReport *r);

/**
 * Failure dominates precondition, which dominates pass. A null handle reads as failure.
 *
 * # Safety
 * `r` is null or a live handle.
 */
enum BhlOutcome bhl_report_outcome(const struct BhlReport *r);

/**
 * Number of checks in the report.
 *
 * # Safety
 * `r` is null or a live handle.
 */
uintptr_t bhl_report_len(const struct BhlReport *r);

/**
 * The report as a JSON array of `{check, status, witness}`; release with [`bhl_string_free`].
 *
 * # Safety
 * `r` is null or a live handle.
 */
char *bhl_report_json(const struct BhlReport *r);

#endif  /* BHL_H */
