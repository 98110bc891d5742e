#pragma once

#include <optional>

namespace knodel {

// Closed-form domination numbers for the 3- and 4-regular families, and the
// matching criticality/stability characterizations. Domains: even n >= 8 for
// delta = 3, even n >= 16 for delta = 4; violations throw std::invalid_argument.

// 2*floor(n/8), plus 1 when n = 2 (mod 8), plus 2 when n = 4 or 6 (mod 8).
int gamma_formula_w3(int n);

// 2*floor(n/10) plus a correction: the four exceptional orders 16, 18, 28, 36
// are looked up first, then the residue of n mod 10 decides.
int gamma_formula_w4(int n);

bool is_critical_w3(int n);  // exactly when n = 4 (mod 8)
bool is_stable_w3(int n);

bool is_critical_w4(int n);  // n = 26, or n >= 22 with n = 2 (mod 10), or n >= 38 with n = 8 (mod 10)
bool is_stable_w4(int n);    // n in {18, 28}, or n = 0,4 (mod 10), or n = 6 (mod 10) with n != 26

// ceil(n / (delta + 1)); a lower bound on the domination number of any graph
// with n vertices and maximum degree delta.
int domination_lower_bound(int n, int delta);

// Dispatch helpers: engaged only where a closed form exists (delta 3 or 4,
// n in the formula's domain).
std::optional<int> gamma_formula(int delta, int n);
std::optional<bool> predicted_critical(int delta, int n);

}  // namespace knodel
