/* The header must compile as C; decides the unsatisfiable pair of units. */
#include <onsat.h>
#include <stdio.h>
#include <string.h>

int main(void) {
  const char* text = "p cnf 1 2\n1 0\n-1 0\n";
  onsat_problem* p = NULL;
  onsat_config* cfg = onsat_config_new();
  onsat_status s = onsat_problem_parse(text, strlen(text), ONSAT_FORMAT_AUTO, 0, &p);
  if (s != ONSAT_OK) {
    fprintf(stderr, "parse: %s\n", onsat_last_error());
    return 1;
  }
  s = onsat_solve(p, cfg, NULL, NULL, NULL);
  onsat_problem_free(p);
  onsat_config_free(cfg);
  return s == ONSAT_UNSAT ? 0 : 1;
}
