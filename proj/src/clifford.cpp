#include "spinh/clifford.hpp"
#include "spinh/error.hpp"

#include <bit>
#include <random>
#include <vector>

namespace spinh {

int blade_grade(Blade b) { return std::popcount(b); }

int blade_product_sign(const Signature& sig, Blade a, Blade b)
{
    int swaps = 0;
    for (Blade rest = b; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        swaps += std::popcount(static_cast<Blade>(a >> (j + 1)));
    }
    Blade neg = sig.r >= 32 ? ~Blade(0) : ((Blade(1) << sig.r) - 1);
    swaps += std::popcount(static_cast<Blade>(a & b & neg));
    return (swaps & 1) ? -1 : 1;
}

static void check_sig(const Signature& sig)
{
    if (sig.r < 0 || sig.s < 0 || sig.n() > max_generators)
        throw DomainError(Errc::invalid_argument, "signature out of range");
}

CliffordElement::CliffordElement(Signature sig) : sig_(sig) { check_sig(sig); }

CliffordElement CliffordElement::scalar(Signature sig, const Rational& c)
{
    return blade(sig, 0, c);
}

CliffordElement CliffordElement::blade(Signature sig, Blade b, const Rational& c)
{
    CliffordElement x(sig);
    if (b >> sig.n())
        throw DomainError(Errc::invalid_argument, "blade index exceeds signature");
    x.add_term(b, c);
    return x;
}

CliffordElement CliffordElement::generator(Signature sig, int i)
{
    if (i < 1 || i > sig.n())
        throw DomainError(Errc::invalid_argument, "generator index out of range");
    return blade(sig, Blade(1) << (i - 1));
}

Rational CliffordElement::coeff(Blade b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CliffordElement::add_term(Blade b, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(b, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int CliffordElement::parity() const
{
    int p = -2;
    for (auto& [b, c] : terms_) {
        int q = blade_grade(b) & 1;
        if (p == -2)
            p = q;
        else if (p != q)
            return -1;
    }
    return p == -2 ? 0 : p;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const
{
    if (!(sig_ == o.sig_))
        throw DomainError(Errc::signature_mismatch, "signature mismatch");
    CliffordElement x = *this;
    for (auto& [b, c] : o.terms_)
        x.add_term(b, c);
    return x;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const
{
    return *this + o * Rational(-1);
}

CliffordElement CliffordElement::operator*(const Rational& c) const
{
    CliffordElement x(sig_);
    if (c == 0)
        return x;
    for (auto& [b, v] : terms_)
        x.terms_.emplace(b, v * c);
    return x;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const
{
    return blade_mul(*this, o);
}

bool CliffordElement::operator==(const CliffordElement& o) const
{
    return sig_ == o.sig_ && terms_ == o.terms_;
}

std::string CliffordElement::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto& [b, c] : terms_) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string name;
        for (int i = 0; i < max_generators; ++i)
            if (b >> i & 1)
                name += "e" + std::to_string(i + 1);
        if (name.empty())
            out += a.get_str();
        else if (a == 1)
            out += name;
        else
            out += a.get_str() + "*" + name;
    }
    return out;
}

CliffordElement blade_mul(const CliffordElement& a, const CliffordElement& b)
{
    if (!(a.signature() == b.signature()))
        throw DomainError(Errc::signature_mismatch, "blade_mul: signature mismatch");
    CliffordElement out(a.signature());
    for (auto& [ba, ca] : a.terms())
        for (auto& [bb, cb] : b.terms()) {
            int s = blade_product_sign(a.signature(), ba, bb);
            out.add_term(ba ^ bb, s > 0 ? Rational(ca * cb) : Rational(-ca * cb));
        }
    return out;
}

CliffordElement volume_element(const Signature& sig)
{
    Blade top = sig.n() == 32 ? ~Blade(0) : ((Blade(1) << sig.n()) - 1);
    return CliffordElement::blade(sig, top);
}

int volume_square_sign(const Signature& sig)
{
    long n = sig.n();
    long e = (n * n + sig.r - sig.s) / 2;
    return (e & 1) ? -1 : 1;
}

CliffordElement transpose(const CliffordElement& a)
{
    CliffordElement out(a.signature());
    for (auto& [b, c] : a.terms()) {
        int k = blade_grade(b);
        bool flip = (k * (k - 1) / 2) & 1;
        out.add_term(b, flip ? Rational(-c) : c);
    }
    return out;
}

const char* field_name(Field f)
{
    switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
    }
    return "?";
}

const char* variant_name(Variant v)
{
    switch (v) {
    case Variant::Cl: return "Cl";
    case Variant::CCl: return "CCl";
    case Variant::Clh: return "Clh";
    case Variant::CClh: return "CClh";
    }
    return "?";
}

int field_dim(Field f)
{
    switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
    }
    return 0;
}

Field parse_field(const std::string& s)
{
    if (s == "R") return Field::R;
    if (s == "C") return Field::C;
    if (s == "H") return Field::H;
    throw DomainError(Errc::parse_error, "unknown field '" + s + "' (expected R, C or H)");
}

Variant parse_variant(const std::string& s)
{
    if (s == "Cl") return Variant::Cl;
    if (s == "CCl") return Variant::CCl;
    if (s == "Clh") return Variant::Clh;
    if (s == "CClh") return Variant::CClh;
    throw DomainError(Errc::parse_error, "unknown variant '" + s + "' (expected Cl, CCl, Clh or CClh)");
}

std::uint64_t AlgebraDescriptor::real_dimension() const
{
    return size * size * field_dim(field) * (simple ? 1 : 2);
}

std::string AlgebraDescriptor::str() const
{
    std::string k = field_name(field);
    if (size != 1)
        k += "(" + std::to_string(size) + ")";
    return simple ? k : k + "+" + k;
}

namespace {

AlgebraDescriptor field_tensor(Field a, Field b)
{
    if (a == Field::R) return {b, 1, true};
    if (b == Field::R) return {a, 1, true};
    if (a == Field::C && b == Field::C) return {Field::C, 1, false};
    if (a == Field::H && b == Field::H) return {Field::R, 4, true};
    return {Field::C, 2, true};
}

AlgebraDescriptor matrices(Field f, std::uint64_t n, bool simple = true)
{
    return {f, n, simple};
}

const AlgebraDescriptor cl_definite[8] = {
    matrices(Field::R, 1), matrices(Field::C, 1), matrices(Field::H, 1), matrices(Field::H, 1, false),
    matrices(Field::H, 2), matrices(Field::C, 4), matrices(Field::R, 8), matrices(Field::R, 8, false),
};

// Cl_{0,m}, all generators squaring to +1
const AlgebraDescriptor cl_positive[8] = {
    matrices(Field::R, 1), matrices(Field::R, 1, false), matrices(Field::R, 2), matrices(Field::C, 2),
    matrices(Field::H, 2), matrices(Field::H, 2, false), matrices(Field::H, 4), matrices(Field::C, 8),
};

constexpr int max_classify_n = 56;

AlgebraDescriptor times_real_matrices(AlgebraDescriptor d, int log2_size)
{
    d.size <<= log2_size;
    return d;
}

} // namespace

AlgebraDescriptor tensor(const AlgebraDescriptor& a, const AlgebraDescriptor& b)
{
    AlgebraDescriptor f = field_tensor(a.field, b.field);
    int split = (a.simple ? 0 : 1) + (b.simple ? 0 : 1) + (f.simple ? 0 : 1);
    if (split > 1)
        throw DomainError(Errc::invalid_argument, "tensor product has more than two simple factors");
    return {f.field, a.size * b.size * f.size, split == 0};
}

AlgebraDescriptor classify(int n, Variant v)
{
    if (n < 0 || n > max_classify_n)
        throw DomainError(Errc::invalid_argument, "classify: n must be in 0.." + std::to_string(max_classify_n));
    AlgebraDescriptor d = times_real_matrices(cl_definite[n % 8], 4 * (n / 8));
    if (v == Variant::Clh || v == Variant::CClh)
        d = tensor(d, matrices(Field::H, 1));
    if (v == Variant::CCl || v == Variant::CClh)
        d = tensor(d, matrices(Field::C, 1));
    return d;
}

AlgebraDescriptor classify_indefinite(int r, int s, bool quaternionic)
{
    if (r < 0 || s < 0 || r + s > max_classify_n)
        throw DomainError(Errc::invalid_argument, "classify_indefinite: r, s out of range");
    AlgebraDescriptor d;
    if (r >= s)
        d = times_real_matrices(classify(r - s, Variant::Cl), s);
    else {
        int m = s - r;
        d = times_real_matrices(cl_positive[m % 8], 4 * (m / 8) + r);
    }
    if (quaternionic)
        d = tensor(d, matrices(Field::H, 1));
    return d;
}

namespace {

struct PairTerm {
    Blade a, b;
    int sign;
};

PairTerm koszul_mul(const Signature& sa, const Signature& sb, const PairTerm& x, const PairTerm& y)
{
    int s = x.sign * y.sign;
    if ((blade_grade(x.b) & 1) && (blade_grade(y.a) & 1))
        s = -s;
    s *= blade_product_sign(sa, x.a, y.a) * blade_product_sign(sb, x.b, y.b);
    return {x.a ^ y.a, x.b ^ y.b, s};
}

} // namespace

GradedTensorReport graded_tensor_check(int m, int n, int cap)
{
    if (m < 0 || n < 0)
        throw DomainError(Errc::invalid_argument, "graded_tensor_check: negative index");
    if (m + n > cap || m + n > 20)
        throw DomainError(Errc::bound_exceeded, "graded_tensor_check: m+n exceeds cap");
    GradedTensorReport rep;
    rep.m = m;
    rep.n = n;
    Signature src{m + n, 0}, sa{m, 0}, sb{n, 0};
    Blade low = (Blade(1) << m) - 1;

    std::vector<PairTerm> gen(m + n);
    for (int i = 0; i < m + n; ++i)
        gen[i] = i < m ? PairTerm{Blade(1) << i, 0, 1} : PairTerm{0, Blade(1) << (i - m), 1};

    rep.relations_ok = true;
    for (int i = 0; i < m + n; ++i) {
        PairTerm sq = koszul_mul(sa, sb, gen[i], gen[i]);
        if (sq.a || sq.b || sq.sign != -1)
            rep.relations_ok = false;
        for (int j = i + 1; j < m + n; ++j) {
            PairTerm x = koszul_mul(sa, sb, gen[i], gen[j]);
            PairTerm y = koszul_mul(sa, sb, gen[j], gen[i]);
            if (x.a != y.a || x.b != y.b || x.sign != -y.sign)
                rep.relations_ok = false;
        }
    }

    std::size_t count = std::size_t(1) << (m + n);
    std::vector<PairTerm> image(count);
    std::vector<char> hit(count, 0);
    rep.bijective_on_basis = true;
    rep.grading_ok = true;
    for (Blade I = 0; I < count; ++I) {
        PairTerm t{0, 0, 1};
        for (int i = 0; i < m + n; ++i)
            if (I >> i & 1)
                t = koszul_mul(sa, sb, t, gen[i]);
        image[I] = t;
        std::size_t key = t.a | (std::size_t(t.b) << m);
        if (hit[key])
            rep.bijective_on_basis = false;
        hit[key] = 1;
        if ((blade_grade(I) & 1) != ((blade_grade(t.a) + blade_grade(t.b)) & 1))
            rep.grading_ok = false;
        if (t.a != (I & low) || t.b != (I >> m))
            rep.bijective_on_basis = false;
    }

    auto check_pair = [&](Blade I, Blade J) {
        int s = blade_product_sign(src, I, J);
        PairTerm lhs = image[I ^ J];
        PairTerm rhs = koszul_mul(sa, sb, image[I], image[J]);
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.sign * s == rhs.sign;
    };
    rep.multiplicative = true;
    if (count * count <= (std::size_t(1) << 20)) {
        for (Blade I = 0; I < count; ++I)
            for (Blade J = 0; J < count; ++J)
                if (!check_pair(I, J))
                    rep.multiplicative = false;
    } else {
        std::mt19937_64 rng(0x5eedULL + m * 131 + n);
        std::uniform_int_distribution<Blade> pick(0, static_cast<Blade>(count - 1));
        for (int t = 0; t < (1 << 16); ++t)
            if (!check_pair(pick(rng), pick(rng)))
                rep.multiplicative = false;
    }
    rep.dim_source = std::uint64_t(1) << (m + n);
    rep.dim_target = (std::uint64_t(1) << m) * (std::uint64_t(1) << n);
    return rep;
}

} // namespace spinh
