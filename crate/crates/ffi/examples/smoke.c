/* Build: cargo build -p bhl-ffi --release
 * cc crates/ffi/examples/smoke.c -Icrates/ffi/include target/release/libbhl_ffi.a -lpthread -ldl -lm -o smoke */
#include <stdio.h>
#include "bhl.h"

int main(void) {
  BhlAlgebra *a = NULL, *d = NULL, *bad = NULL;
  BhlReport *r = NULL;
  if (bhl_algebra_builtin("sweedler", &a) != BhlStatus_Ok) return 1;
  if (bhl_double(a, &d) != BhlStatus_Ok) return 1;
  if (bhl_verify_hopf(d, &r) != BhlStatus_Ok) return 1;
  printf("dim %zu outcome %d checks %zu\n", bhl_algebra_dim(d), (int)bhl_report_outcome(r), bhl_report_len(r));
  int st = (int)bhl_algebra_parse("conductor=1\ndim=2\nxx", &bad);
  const char *err = bhl_last_error();
  printf("parse status %d: %s\n", st, err);
  bhl_report_free(r);
  bhl_algebra_free(d);
  bhl_algebra_free(a);
  return 0;
}
