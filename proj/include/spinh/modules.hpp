#pragma once

#include "spinh/abgroup.hpp"
#include "spinh/clifford.hpp"

#include <cstdint>
#include <string>

namespace spinh {

enum class ModSign { none, plus, minus };

struct ModuleLabel {
    int n = 1;
    Field field = Field::R;
    bool graded = true;
    ModSign sign = ModSign::none;

    bool operator==(const ModuleLabel&) const = default;
    std::string str() const;
};

// True when a graded fundamental module at (n, field) comes in a +/- pair.
bool has_sign(int n, Field f);
ModuleLabel fundamental_label(int n, Field f, ModSign s = ModSign::none);
// Bold-face choice: + for n = 0 mod 8, - for n = 4 mod 8, + for even complex.
ModuleLabel bold_label(int n, Field f);

std::uint64_t fundamental_dimension(int n, Field f);
// Twice the real dimension of the irreducible ungraded module over Cl_{n-1} (K-structure).
std::uint64_t fundamental_dimension_via_algebra(int n, Field f);

AbGroupExpr ngroup(int n, Field f);
AbGroupExpr ngroup_bigraded(int r, int s, Field f);

enum class ScalarFunctor { Ind_R_C, Res_C_H, Res_R_C, Ind_C_H };
ScalarFunctor parse_functor(const std::string& s);
const char* functor_name(ScalarFunctor f);

struct ScalarChangeResult {
    ModuleLabel label;
    std::uint64_t source_dim = 0;
    std::uint64_t image_dim = 0;
};

ScalarChangeResult scalar_change(const ModuleLabel& label, ScalarFunctor f);

struct GradedProductResult {
    ModuleLabel label;
    int family = 0;        // 1, 2 or 3
    int multiplicity = 1;  // R^4 factor in family 3
    std::uint64_t product_dim = 0;
    std::uint64_t result_dim = 0;
};

GradedProductResult graded_product(const ModuleLabel& a, const ModuleLabel& b);

struct BimoduleReport {
    int n = 0;
    Field tensor_base = Field::R;
    bool half = false;
    std::uint64_t left_dim = 0;
    std::uint64_t right_dim = 0;
    std::uint64_t algebra_dim = 0;
    std::uint64_t factor_dim = 0;   // (left*right/dim base), halved when flagged
    bool consistent() const { return algebra_dim == factor_dim; }
};

BimoduleReport bimodule_decomposition(int n);

} // namespace spinh
