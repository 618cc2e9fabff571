#pragma once

#include "symquot/engine.hpp"

#include <string>
#include <vector>

namespace symquot {

// Batteries of exact cross-checks over the built-in presets. Each returns one
// CheckResult per comparison; a brute-force case that trips an oracle size
// guard is reported ok with a "skipped" note, never silently dropped, while a
// non-integral group average is a failure.

// hs_sym == hh_with_coefficients_sym == hh_series_product coefficient, for
// k in {-1,0,1,2} and n <= max_n on every preset.
std::vector<CheckResult> verify_three_path(int max_n);

// inertia_sum_bruteforce against inertia_hodge_sym across every preset and
// coefficient family for n <= max_n, plus 200 randomized comparisons of
// sym_bruteforce against sym_n.
std::vector<CheckResult> verify_oracle(int max_n);

// The x = s^{-1}, x = 0, y = 0 and chi_y specializations of the trivariate
// series on every preset and line-bundle family through t^max_n.
std::vector<CheckResult> verify_specializations(int max_n);

// Fock-space slices against the k = 1 symmetric-quotient series on every
// preset, plus Kunneth factorization of the Fock space of a direct sum.
std::vector<CheckResult> verify_fock(int max_n);

// Suite names accepted by verify_suite, in execution order of "all".
const std::vector<std::string>& verify_suite_names();

// Dispatch by name; "all" concatenates every suite. Unknown names throw
// std::invalid_argument listing the choices.
std::vector<CheckResult> verify_suite(const std::string& name, int max_n);

}  // namespace symquot
