#include "spinh/ktheory.hpp"
#include "spinh/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace spinh {

Theory parse_theory(const std::string& s)
{
    if (s == "KO") return Theory::KO;
    if (s == "KU") return Theory::KU;
    if (s == "KSp") return Theory::KSp;
    throw DomainError(Errc::parse_error, "unknown theory '" + s + "' (expected KO, KU or KSp)");
}

const char* theory_name(Theory t)
{
    switch (t) {
    case Theory::KO: return "KO";
    case Theory::KU: return "KU";
    case Theory::KSp: return "KSp";
    }
    return "?";
}

CoefficientRing CoefficientRing::parse(const std::string& s)
{
    if (s == "Z") return {Z, 0};
    if (s == "Q") return {Q, 0};
    if (s == "Q/Z") return {QZ, 0};
    if (s.size() > 1 && s[0] == 'Z' && std::all_of(s.begin() + 1, s.end(), ::isdigit) && s.size() < 12) {
        long k = std::stol(s.substr(1));
        if (k >= 2)
            return {Zk, k};
    }
    throw DomainError(Errc::parse_error, "unknown coefficient ring '" + s + "' (expected Z, Q, Q/Z or Z<k>, k >= 2)");
}

std::string CoefficientRing::str() const
{
    switch (tag) {
    case Z: return "Z";
    case Q: return "Q";
    case QZ: return "Q/Z";
    case Zk: return "Z" + std::to_string(k);
    }
    return "?";
}

std::string CoefficientGroup::str() const
{
    if (!undetermined)
        return group.str();
    return "ext(" + sub.str() + "," + quotient.str() + ")";
}

namespace {

long mod8(long n) { return ((n % 8) + 8) % 8; }

} // namespace

AbGroupExpr k_point(Theory t, long n)
{
    static const long ko[8] = {0, 2, 2, 1, 0, 1, 1, 1};   // 0 = Z, 1 = trivial
    switch (t) {
    case Theory::KU:
        return n % 2 ? AbGroupExpr::zero() : AbGroupExpr::integers();
    case Theory::KO:
        return AbGroupExpr::cyclic(ko[mod8(n)]);
    case Theory::KSp:
        return AbGroupExpr::cyclic(ko[mod8(n + 4)]);
    }
    return {};
}

AbGroupExpr tensor_group(const AbGroupExpr& g, const CoefficientRing& ring)
{
    if (g.has_divisible())
        throw DomainError(Errc::invalid_argument, "tensor_group expects a finitely generated group");
    AbGroupExpr out;
    for (int i = 0; i < g.rank(); ++i) {
        switch (ring.tag) {
        case CoefficientRing::Z: out = out + AbGroupExpr::integers(); break;
        case CoefficientRing::Q: out = out + AbGroupExpr::rationals(); break;
        case CoefficientRing::QZ: out = out + AbGroupExpr::rationals_mod_integers(); break;
        case CoefficientRing::Zk: out = out + AbGroupExpr::cyclic(ring.k); break;
        }
    }
    for (long m : g.torsion()) {
        if (ring.tag == CoefficientRing::Z)
            out = out + AbGroupExpr::cyclic(m);
        else if (ring.tag == CoefficientRing::Zk)
            out = out + AbGroupExpr::cyclic(std::gcd(m, ring.k));
    }
    return out;
}

AbGroupExpr tor_group(const AbGroupExpr& g, const CoefficientRing& ring)
{
    if (g.has_divisible())
        throw DomainError(Errc::invalid_argument, "tor_group expects a finitely generated group");
    AbGroupExpr out;
    for (long m : g.torsion()) {
        if (ring.tag == CoefficientRing::QZ)
            out = out + AbGroupExpr::cyclic(m);
        else if (ring.tag == CoefficientRing::Zk)
            out = out + AbGroupExpr::cyclic(std::gcd(m, ring.k));
    }
    return out;
}

CoefficientGroup k_coefficients(Theory t, long n, const CoefficientRing& ring)
{
    if (ring.tag == CoefficientRing::Zk && ring.k < 2)
        throw DomainError(Errc::invalid_argument, "Z_k needs k >= 2");
    CoefficientGroup c;
    c.sub = tensor_group(k_point(t, n), ring);
    c.quotient = tor_group(k_point(t, n - 1), ring);
    // a divisible subgroup splits off; otherwise both ends nonzero leaves the extension open
    bool splits = c.sub.is_zero() || c.quotient.is_zero() || ring.tag == CoefficientRing::QZ;
    c.undetermined = !splits;
    c.group = c.sub + c.quotient;
    return c;
}

AbGroupExpr k_coefficients_qz_les(Theory t, long n)
{
    // ... -> h_n -> h_n (x) Q -> h_n(Q/Z) -> h_{n-1} -> h_{n-1} (x) Q -> ...
    AbGroupExpr hn = k_point(t, n), hn1 = k_point(t, n - 1);
    AbGroupExpr coker;
    for (int i = 0; i < hn.rank(); ++i)
        coker = coker + AbGroupExpr::rationals_mod_integers();
    AbGroupExpr ker;
    for (long m : hn1.torsion())
        ker = ker + AbGroupExpr::cyclic(m);
    return coker + ker;
}

ZkSphereResult zk_sphere_group(Theory t, long m, long k)
{
    if (t == Theory::KSp)
        throw DomainError(Errc::invalid_argument, "zk_sphere_group supports KO and KU");
    if (m < 2)
        throw DomainError(Errc::invalid_argument, "zk_sphere_group needs m >= 2");
    if (k < 2 || k > 100000)
        throw DomainError(Errc::invalid_argument, "zk_sphere_group needs 2 <= k <= 100000");
    ZkSphereResult r;
    r.theory = t;
    r.m = m;
    r.k = k;
    CoefficientRing zk{CoefficientRing::Zk, k};
    AbGroupExpr h1 = k_point(t, 1);
    for (long i = 0; i + 1 < k && !h1.is_zero(); ++i)
        r.circle_part = r.circle_part + h1;
    r.moore_sub = tensor_group(k_point(t, m), zk);
    r.quotient = tor_group(k_point(t, m - 1), zk);
    // when an end is zero the Moore part is the other end; otherwise both are kept and flagged
    r.moore_group = r.moore_sub + r.quotient;
    AbGroupExpr sub = r.circle_part + r.moore_sub;
    r.undetermined = !sub.is_zero() && !r.quotient.is_zero();
    r.total = sub + r.quotient;
    if (t == Theory::KO && m % 4 == 0) {
        r.comparison_factor = m % 8 == 0 ? 1 : 2;
        r.comparison = r.comparison_factor == 1 ? "iso" : "multiplication by 2";
    }
    return r;
}

long zk_index(const ZkIndexInput& in)
{
    if (in.n % 4 != 0 || in.n < 0)
        throw DomainError(Errc::invalid_argument, "zk_index needs n = 0 mod 4");
    if (in.k < 2)
        throw DomainError(Errc::invalid_argument, "zk_index needs k >= 2");
    long eps = in.n % 8 == 4 ? 1 : 2;
    Rational q = (in.integral_term - in.eta_term) / eps;
    if (!is_integer(q))
        throw DomainError(Errc::non_integral,
            "(integral - eta)/" + std::to_string(eps) + " = " + q.get_str() + " is not an integer");
    Integer r = q.get_num() % in.k;
    if (r < 0)
        r += in.k;
    return r.get_si();
}

AindResult aind_classify(long n, std::optional<Rational> genus, std::optional<long> harmonic_dim)
{
    if (n < 0)
        throw DomainError(Errc::invalid_argument, "aind_classify needs n >= 0");
    AindResult r;
    r.group = k_point(Theory::KSp, n);
    switch (n % 8) {
    case 0:
    case 4: {
        if (!genus)
            throw DomainError(Errc::missing_input, "genus value required for n = 0, 4 mod 8");
        Rational v = n % 8 == 0 ? Rational(*genus / 2) : *genus;
        if (!is_integer(v))
            throw DomainError(Errc::non_integral,
                n % 8 == 0 ? "genus must be even for n = 0 mod 8" : "genus must be an integer for n = 4 mod 8");
        r.kind = "integer";
        r.value = v.get_num();
        break;
    }
    case 5:
    case 6:
        if (!harmonic_dim)
            throw DomainError(Errc::missing_input, "harmonic space dimension required for n = 5, 6 mod 8");
        if (*harmonic_dim < 0)
            throw DomainError(Errc::invalid_argument, "harmonic dimension must be >= 0");
        r.kind = "parity";
        r.value = *harmonic_dim % 2;
        break;
    default:
        r.kind = "zero";
        r.value = 0;
    }
    return r;
}

FGAbelianGroup FGAbelianGroup::from_cyclic(long rank, const std::vector<long>& orders)
{
    if (rank < 0)
        throw DomainError(Errc::invalid_argument, "rank must be >= 0");
    FGAbelianGroup g;
    g.rank = rank;
    std::vector<long> tors;
    for (long m : orders) {
        if (m == 0)
            ++g.rank;
        else if (m < 0)
            throw DomainError(Errc::invalid_argument, "cyclic orders must be >= 0");
        else if (m > 1)
            tors.push_back(m);
    }
    g.torsion = invariant_factors(tors);
    return g;
}

long FGAbelianGroup::torsion_order() const
{
    long o = 1;
    for (long m : torsion)
        o *= m;
    return o;
}

AbGroupExpr FGAbelianGroup::expr() const
{
    AbGroupExpr e = AbGroupExpr::integers(static_cast<int>(rank));
    for (long m : torsion)
        e = e + AbGroupExpr::cyclic(m);
    return e;
}

std::string FGAbelianGroup::str() const { return expr().str(); }

bool free_witness_descends(const Rational& q)
{
    // the map Z -> Q, z -> q z lands in Z iff it does on the generator
    return is_integer(q);
}

namespace {

// Values in Q/Z stored as numerators over a common denominator per coordinate.
using Tuple = std::vector<long>;

void enumerate(const std::vector<long>& radix, const std::function<void(const Tuple&)>& f)
{
    Tuple t(radix.size(), 0);
    while (true) {
        f(t);
        std::size_t i = 0;
        for (; i < t.size(); ++i) {
            if (++t[i] < radix[i])
                break;
            t[i] = 0;
        }
        if (i == t.size())
            break;
    }
}

} // namespace

DualityReport dual_group(const FGAbelianGroup& a, long bound)
{
    if (a.rank > 2)
        throw DomainError(Errc::bound_exceeded, "dual_group verification supports rank <= 2");
    if (a.torsion_order() > bound)
        throw DomainError(Errc::bound_exceeded, "torsion part exceeds verification bound " + std::to_string(bound));
    DualityReport rep;
    rep.dual = a;
    const auto& n = a.torsion;

    // Hom(T, Q/Z): generator g_i -> c_i / n_i^2, valid iff n_i * value is in Z
    std::vector<long> grid;
    for (long m : n)
        grid.push_back(m * m);
    long characters = 0;
    enumerate(grid, [&](const Tuple& c) {
        bool ok = true;
        for (std::size_t i = 0; i < c.size(); ++i)
            ok = ok && (c[i] * n[i]) % (n[i] * n[i]) == 0;
        characters += ok;
    });

    // The dual T^ is generated by chi_i (g_j -> delta_ij / n_i), of order n_i.
    // Hom(T^, Q/Z): chi_i -> c_i / n_i^2, valid iff n_i * value is in Z.
    std::set<Tuple> valid;
    enumerate(grid, [&](const Tuple& c) {
        ++rep.candidate_maps;
        bool ok = true;
        for (std::size_t i = 0; i < c.size(); ++i)
            ok = ok && (c[i] * n[i]) % (n[i] * n[i]) == 0;
        if (ok)
            valid.insert(c);
    });
    rep.valid_maps = static_cast<long>(valid.size());

    // Evaluation T -> T^^: t -> (chi_i -> t_i / n_i) = (t_i * n_i) / n_i^2.
    std::set<Tuple> image;
    std::vector<long> radix(n.begin(), n.end());
    bool hom = true;
    enumerate(radix, [&](const Tuple& t) {
        Tuple e(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            e[i] = (t[i] * n[i]) % (n[i] * n[i]);
        image.insert(e);
    });
    // additivity of evaluation on generator pairs
    for (std::size_t i = 0; i < n.size() && hom; ++i)
        for (long x = 0; x < n[i] && hom; ++x)
            for (long y = 0; y < n[i] && hom; ++y) {
                long lhs = (((x + y) % n[i]) * n[i]) % (n[i] * n[i]);
                long rhs = ((x * n[i]) + (y * n[i])) % (n[i] * n[i]);
                hom = lhs == rhs;
            }
    rep.finite_verified = hom && characters == a.torsion_order() && image == valid
        && static_cast<long>(image.size()) == a.torsion_order();

    rep.free_verified = true;
    if (a.rank > 0) {
        for (long p = -6; p <= 6; ++p)
            for (long q = 1; q <= 6; ++q) {
                Rational r(p, q);
                r.canonicalize();
                bool lands = true;
                for (long z = -6; z <= 6; ++z)
                    lands = lands && is_integer(Rational(r * z));
                if (free_witness_descends(r) != lands)
                    rep.free_verified = false;
            }
    }
    return rep;
}

} // namespace spinh
