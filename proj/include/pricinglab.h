/*------------------------------------------------------------------------------
//
//   Copyright 2026 PricingLab developers
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//----------------------------------------------------------------------------*/

/* C interface of the pricing-lab shared library.
 *
 * Conventions:
 *  - functions returning int yield PLAB_OK (0) on success and a nonzero
 *    error code otherwise; plab_last_error() describes the failure and is
 *    thread-local;
 *  - functions returning plab_prior* or char* yield NULL on failure;
 *  - char* results are heap strings owned by the caller, released with
 *    plab_string_free();
 *  - priors are immutable opaque handles, released with plab_prior_free().
 */

#ifndef PRICINGLAB_H
#define PRICINGLAB_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
  PLAB_OK = 0,
  PLAB_ERR_INVALID = 1,    /* bad argument or precondition */
  PLAB_ERR_PARSE = 2,      /* malformed prior/options text */
  PLAB_ERR_INFEASIBLE = 3, /* model infeasible, e.g. insufficient tail mass */
  PLAB_ERR_INTERNAL = 4
};

const char* plab_version(void);
const char* plab_last_error(void);
int plab_last_error_code(void);

/* ---- priors ---------------------------------------------------------- */

typedef struct plab_prior plab_prior;

/* Accepts the shorthands uniform01, exp:RATE, er:M, point:V, or the JSON
 * schema {"type":"discrete","values":[...],"probs":[...]} etc. */
plab_prior* plab_prior_parse(const char* text);

/* Adversarial prior with triangular revenue curve in value space: revenue v
 * up to t, then t - beta (v - t), hitting zero at t + t / beta. */
plab_prior* plab_prior_f_beta(double t, double beta);

/* Quantile-midpoint discretization with grid_n atoms; bounded support only. */
plab_prior* plab_prior_discretize(const plab_prior* prior, int grid_n);

void plab_prior_free(plab_prior* prior);

int plab_prior_monopoly(const plab_prior* prior, double* price, double* revenue);
int plab_prior_mean(const plab_prior* prior, double* mean);
int plab_prior_partial_expectation(const plab_prior* prior, double a, double* out);
char* plab_prior_to_json(const plab_prior* prior);

/* ---- tradeoff frontier ------------------------------------------------ */

int plab_frontier_dual_objective(double beta, double c, double* out);
/* beta_argmin receives +inf when the infimum sits at a boundary limit. */
int plab_frontier_r_star(double c, double* r, double* beta_argmin);
int plab_frontier_symmetric_point(double* c, double* r);
/* CSV with header C,R_star,beta_argmin,baseline_R. */
char* plab_frontier_sweep_csv(double c_min, double c_max, int steps);

/* ---- optimal mechanisms for a fixed prior ----------------------------- */

/* Solves the per-type program, its posted-price form, and the certificate
 * program; returns the combined JSON document and the posted-vs-certificate
 * gap. Non-discrete priors with bounded support are discretized on a
 * 200-atom quantile-midpoint grid; unbounded ones are rejected. */
char* plab_rev_solve(const plab_prior* prior, double c, double* gap);

/* mechanism is one of guess_discount, hidden_price, heavy_tail, baseline;
 * param is eps for heavy_tail and lambda for baseline, ignored otherwise. */
char* plab_mech_eval(const plab_prior* prior, const char* mechanism, double param);

/* Discretizes the adversarial prior, solves for optimal revenue, and reports
 * the two-sided sandwich as JSON. */
char* plab_tightness_check(double c, double beta, double t, int grid_n);

/* options JSON: {"seed":42,"corpus":100,"suites":["..."],
 * "inject_fault":"payment","beta":1,"c":1,"grid":200,
 * "explicit_tightness":false}; every key optional. Returns the formatted
 * report; *all_passed is 1 when every suite met its tolerance. */
char* plab_verify_run(const char* options_json, int* all_passed);

void plab_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PRICINGLAB_H */
