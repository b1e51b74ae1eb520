#include "spinh/modules.hpp"
#include "spinh/error.hpp"

namespace spinh {

namespace {

const std::uint64_t dim_table[3][8] = {
    {2, 4, 8, 8, 16, 16, 16, 16},
    {4, 4, 8, 8, 16, 16, 32, 32},
    {8, 8, 8, 8, 16, 32, 64, 64},
};

int fidx(Field f) { return f == Field::R ? 0 : f == Field::C ? 1 : 2; }

int mod(int a, int m) { return ((a % m) + m) % m; }

const char* sign_suffix(ModSign s)
{
    return s == ModSign::plus ? "+" : s == ModSign::minus ? "-" : "";
}

ModSign flip(ModSign s)
{
    return s == ModSign::plus ? ModSign::minus : s == ModSign::minus ? ModSign::plus : s;
}

void check_label(const ModuleLabel& l)
{
    if (l.n < 1)
        throw DomainError(Errc::invalid_argument, "module label needs n >= 1");
    if (!l.graded)
        throw DomainError(Errc::invalid_argument, "only graded fundamental modules are tracked");
    if (has_sign(l.n, l.field) != (l.sign != ModSign::none))
        throw DomainError(Errc::invalid_argument, "sign does not match (n, field) for " + l.str());
}

} // namespace

bool has_sign(int n, Field f)
{
    return f == Field::C ? n % 2 == 0 : n % 4 == 0;
}

std::string ModuleLabel::str() const
{
    return std::string("Delta") + sign_suffix(sign) + "_{" + std::to_string(n) + "," + field_name(field) + "}";
}

ModuleLabel fundamental_label(int n, Field f, ModSign s)
{
    ModuleLabel l{n, f, true, s};
    check_label(l);
    return l;
}

ModuleLabel bold_label(int n, Field f)
{
    ModSign s = ModSign::none;
    if (has_sign(n, f))
        s = (f != Field::C && n % 8 == 4) ? ModSign::minus : ModSign::plus;
    return fundamental_label(n, f, s);
}

std::uint64_t fundamental_dimension(int n, Field f)
{
    if (n < 1)
        throw DomainError(Errc::invalid_argument, "fundamental_dimension: n must be >= 1");
    if (n > 120)
        throw DomainError(Errc::bound_exceeded, "fundamental_dimension: n too large");
    int k = (n - 1) / 8;
    return dim_table[fidx(f)][(n - 1) % 8] << (4 * k);
}

std::uint64_t fundamental_dimension_via_algebra(int n, Field f)
{
    if (n < 1)
        throw DomainError(Errc::invalid_argument, "n must be >= 1");
    Variant v = f == Field::R ? Variant::Cl : f == Field::C ? Variant::CCl : Variant::Clh;
    AlgebraDescriptor d = classify(n - 1, v);
    return 2 * d.size * field_dim(d.field);
}

AbGroupExpr ngroup(int n, Field f)
{
    if (n < 0)
        throw DomainError(Errc::invalid_argument, "ngroup: n must be >= 0");
    if (f == Field::C)
        return n % 2 ? AbGroupExpr::zero() : AbGroupExpr::integers();
    static const long real[8] = {0, 2, 2, 1, 0, 1, 1, 1};   // 0 means Z, 1 means trivial
    int k = n % 8;
    if (f == Field::H)
        k = (k + 4) % 8;
    return AbGroupExpr::cyclic(real[k]);
}

AbGroupExpr ngroup_bigraded(int r, int s, Field f)
{
    if (r < 0 || s < 0)
        throw DomainError(Errc::invalid_argument, "ngroup_bigraded: r, s must be >= 0");
    if (f == Field::C)
        throw DomainError(Errc::invalid_argument, "ngroup_bigraded: field must be R or H");
    return ngroup(mod(r - s, 8), f);
}

ScalarFunctor parse_functor(const std::string& s)
{
    if (s == "Ind_R_C") return ScalarFunctor::Ind_R_C;
    if (s == "Res_C_H") return ScalarFunctor::Res_C_H;
    if (s == "Res_R_C") return ScalarFunctor::Res_R_C;
    if (s == "Ind_C_H") return ScalarFunctor::Ind_C_H;
    throw DomainError(Errc::parse_error, "unknown functor '" + s + "'");
}

const char* functor_name(ScalarFunctor f)
{
    switch (f) {
    case ScalarFunctor::Ind_R_C: return "Ind_R_C";
    case ScalarFunctor::Res_C_H: return "Res_C_H";
    case ScalarFunctor::Res_R_C: return "Res_R_C";
    case ScalarFunctor::Ind_C_H: return "Ind_C_H";
    }
    return "?";
}

ScalarChangeResult scalar_change(const ModuleLabel& label, ScalarFunctor f)
{
    check_label(label);
    int r = label.n % 8;
    Field from, to;
    bool ind;
    switch (f) {
    case ScalarFunctor::Ind_R_C: from = Field::R; to = Field::C; ind = true; break;
    case ScalarFunctor::Ind_C_H: from = Field::C; to = Field::H; ind = true; break;
    case ScalarFunctor::Res_C_H: from = Field::H; to = Field::C; ind = false; break;
    default: from = Field::C; to = Field::R; ind = false; break;
    }
    if (label.field != from)
        throw DomainError(Errc::inapplicable,
            std::string(functor_name(f)) + " does not apply to a " + field_name(label.field) + "-module");
    if (ind && r != 0)
        throw DomainError(Errc::inapplicable, "induction is only tracked for n = 0 mod 8");
    if (!ind && r != 4)
        throw DomainError(Errc::inapplicable, "restriction is only tracked for n = 4 mod 8");
    ScalarChangeResult out;
    out.label = {label.n, to, true, ind ? label.sign : flip(label.sign)};
    out.source_dim = fundamental_dimension(label.n, from);
    out.image_dim = ind ? out.source_dim * field_dim(to) / field_dim(from) : out.source_dim;
    if (out.image_dim != fundamental_dimension(label.n, to))
        throw DomainError(Errc::inapplicable, "scalar change does not land on a fundamental module");
    return out;
}

GradedProductResult graded_product(const ModuleLabel& a, const ModuleLabel& b)
{
    check_label(a);
    check_label(b);
    GradedProductResult out;
    auto is_plus = [](const ModuleLabel& l, int n, Field f) {
        return l.n == n && l.field == f && l.sign == ModSign::plus;
    };
    if (is_plus(a, 8, Field::R) && b.field != Field::C) {
        out.family = 1;
        out.label = {b.n + 8, b.field, true, b.sign};
    } else if (a.field == Field::R && is_plus(b, 4, Field::H)) {
        out.family = 2;
        out.label = {a.n + 4, Field::H, true, a.sign};
    } else if (a.field == Field::H && is_plus(b, 4, Field::H)) {
        out.family = 3;
        out.multiplicity = 4;
        out.label = {a.n + 4, Field::R, true, a.sign};
    } else
        throw DomainError(Errc::unmatched_family, "no graded tensor identity for " + a.str() + " x " + b.str());
    out.product_dim = fundamental_dimension(a.n, a.field) * fundamental_dimension(b.n, b.field);
    out.result_dim = out.multiplicity * fundamental_dimension(out.label.n, out.label.field);
    return out;
}

BimoduleReport bimodule_decomposition(int n)
{
    if (n < 0)
        throw DomainError(Errc::invalid_argument, "bimodule_decomposition: n must be >= 0");
    BimoduleReport rep;
    rep.n = n;
    rep.algebra_dim = classify(n, Variant::Clh).real_dimension();
    switch (n % 8) {
    case 0: {
        AlgebraDescriptor d = classify(n, Variant::CClh);
        rep.tensor_base = Field::C;
        rep.half = true;
        rep.left_dim = rep.right_dim = 2 * d.size;
        break;
    }
    case 4: rep.tensor_base = Field::R; break;
    case 5: rep.tensor_base = Field::C; break;
    case 6: rep.tensor_base = Field::H; break;
    default:
        throw DomainError(Errc::invalid_argument, "bimodule_decomposition: n mod 8 must be 0, 4, 5 or 6");
    }
    if (!rep.half)
        rep.left_dim = rep.right_dim = fundamental_dimension(n, Field::H);
    rep.factor_dim = rep.left_dim * rep.right_dim / field_dim(rep.tensor_base);
    if (rep.half)
        rep.factor_dim /= 2;
    return rep;
}

} // namespace spinh
