#include "clipopt/clipopt.h"

#include <stdio.h>
#include <string.h>

int main(void) {
  const char* text =
      "{\"n\": 1, \"terms\": [{\"loss\": {\"kind\": \"square\"}, \"a\": [1], \"b\": 0, \"weight\": 1, \"alpha\": 0.25}]}";
  clipopt_problem* p = NULL;
  double x = 1.0, v = 0.0;
  if (clipopt_problem_parse(text, strlen(text), &p) != CLIPOPT_OK) {
    fprintf(stderr, "parse: %s\n", clipopt_last_error());
    return 1;
  }
  if (clipopt_eval_objective(p, &x, 1, &v) != CLIPOPT_OK || v != 0.25) {
    fprintf(stderr, "eval: %g\n", v);
    clipopt_problem_free(p);
    return 1;
  }
  clipopt_problem_free(p);
  return 0;
}
