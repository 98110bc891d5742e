#include "knodel/formulas.hpp"

#include <stdexcept>
#include <string>

namespace knodel {

namespace {

void require_even_at_least(int n, int min_n, const char* family) {
    if (n % 2 != 0)
        throw std::invalid_argument(std::string(family) + " formula needs even n, got " +
                                    std::to_string(n));
    if (n < min_n)
        throw std::invalid_argument(std::string(family) + " formula needs n >= " +
                                    std::to_string(min_n) + ", got " + std::to_string(n));
}

}  // namespace

int gamma_formula_w3(int n) {
    require_even_at_least(n, 8, "delta=3");
    switch (n % 8) {
        case 0: return 2 * (n / 8);
        case 2: return 2 * (n / 8) + 1;
        default: return 2 * (n / 8) + 2;  // residues 4 and 6
    }
}

int gamma_formula_w4(int n) {
    require_even_at_least(n, 16, "delta=4");
    int base = 2 * (n / 10);
    // The four exceptional orders take precedence over their residue class.
    if (n == 16 || n == 18 || n == 36) return base + 2;
    if (n == 28) return base + 3;
    switch (n % 10) {
        case 0: return base;
        case 2:
        case 4: return base + 2;
        case 6: return base + 3;
        default: return base + 4;  // residue 8
    }
}

bool is_critical_w3(int n) {
    require_even_at_least(n, 8, "delta=3");
    return n % 8 == 4;
}

bool is_stable_w3(int n) {
    return !is_critical_w3(n);
}

bool is_critical_w4(int n) {
    require_even_at_least(n, 16, "delta=4");
    return n == 26 || (n >= 22 && n % 10 == 2) || (n >= 38 && n % 10 == 8);
}

bool is_stable_w4(int n) {
    require_even_at_least(n, 16, "delta=4");
    return n == 18 || n == 28 || n % 10 == 0 || n % 10 == 4 || (n % 10 == 6 && n != 26);
}

int domination_lower_bound(int n, int delta) {
    if (n < 1) throw std::invalid_argument("lower bound needs n >= 1");
    if (delta < 1) throw std::invalid_argument("lower bound needs delta >= 1");
    return (n + delta) / (delta + 1);
}

std::optional<int> gamma_formula(int delta, int n) {
    if (delta == 3 && n % 2 == 0 && n >= 8) return gamma_formula_w3(n);
    if (delta == 4 && n % 2 == 0 && n >= 16) return gamma_formula_w4(n);
    return std::nullopt;
}

std::optional<bool> predicted_critical(int delta, int n) {
    if (delta == 3 && n % 2 == 0 && n >= 8) return is_critical_w3(n);
    if (delta == 4 && n % 2 == 0 && n >= 16) return is_critical_w4(n);
    return std::nullopt;
}

}  // namespace knodel
