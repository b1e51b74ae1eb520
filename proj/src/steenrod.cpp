#include "spinh/steenrod.hpp"
#include "spinh/error.hpp"

#include <algorithm>
#include <cctype>

namespace spinh::steenrod {

int gen_degree(Gen g) { return g & 0x7f; }

int degree(const Monomial& m)
{
    int d = 0;
    for (Gen g : m)
        d += gen_degree(g);
    return d;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const
{
    int da = degree(a), db = degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

std::string monomial_str(const Monomial& m)
{
    if (m.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += "w" + std::to_string(gen_degree(m[i]));
        if (m[i] & primed)
            out += "'";
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool binom_odd(long n, long k)
{
    if (k == 0)
        return true;
    if (n < 0 || k < 0 || k > n)
        return false;
    return (k & ~n) == 0;
}

bool gen_exists(Gen g)
{
    int d = gen_degree(g);
    if (d == 1)
        return false;
    if ((g & primed) && d > primed_top)
        return false;
    return d >= 2;
}

// Sq^i w_j by the Wu formula, as a list of monomials.
Poly sq_gen(int i, Gen g)
{
    int j = gen_degree(g);
    Gen fam = g & primed;
    Poly out;
    if (i > j)
        return out;
    if (i == 0)
        return Poly::monomial({g});
    for (int t = 0; t <= i; ++t) {
        if (!binom_odd(j + t - i - 1, t))
            continue;
        int lo = i - t, hi = j + t;
        Monomial m;
        if (lo != 0) {
            Gen a = static_cast<Gen>(fam | lo);
            if (!gen_exists(a))
                continue;
            m.push_back(a);
        }
        Gen b = static_cast<Gen>(fam | hi);
        if (!gen_exists(b))
            continue;
        m.push_back(b);
        std::sort(m.begin(), m.end());
        out.toggle(m);
    }
    return out;
}

} // namespace

Poly Poly::one() { return monomial({}); }

Poly Poly::w(int i)
{
    if (i < 0 || i > 127)
        throw DomainError(Errc::invalid_argument, "generator index out of range");
    if (i == 0)
        return one();
    Gen g = static_cast<Gen>(i);
    return gen_exists(g) ? monomial({g}) : Poly();
}

Poly Poly::wp(int i)
{
    if (i < 0 || i > 127)
        throw DomainError(Errc::invalid_argument, "generator index out of range");
    if (i == 0)
        return one();
    Gen g = static_cast<Gen>(primed | i);
    return gen_exists(g) ? monomial({g}) : Poly();
}

Poly Poly::monomial(Monomial m)
{
    std::sort(m.begin(), m.end());
    Poly p;
    p.t_.insert(std::move(m));
    return p;
}

int Poly::degree() const
{
    if (t_.empty())
        return -1;
    int d = steenrod::degree(*t_.begin());
    for (auto& m : t_)
        if (steenrod::degree(m) != d)
            return -2;
    return d;
}

void Poly::toggle(const Monomial& m)
{
    auto it = t_.find(m);
    if (it == t_.end())
        t_.insert(m);
    else
        t_.erase(it);
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    for (auto& m : o.t_)
        toggle(m);
    return *this;
}

Poly Poly::operator*(const Poly& o) const
{
    Poly r;
    for (auto& a : t_)
        for (auto& b : o.t_)
            r.toggle(mono_mul(a, b));
    return r;
}

Poly Poly::indecomposable_part() const
{
    Poly r;
    for (auto& m : t_)
        if (m.size() == 1)
            r.t_.insert(m);
    return r;
}

std::string Poly::str() const
{
    if (t_.empty())
        return "0";
    std::string out;
    for (auto& m : t_) {
        if (!out.empty())
            out += " + ";
        out += monomial_str(m);
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly parse()
    {
        Poly p = sum();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why)
    {
        throw DomainError(Errc::parse_error, "polynomial parse error at " + std::to_string(pos_) + ": " + why);
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int number()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        if (pos_ - start > 4)
            fail("number too large");
        return std::stoi(s_.substr(start, pos_ - start));
    }
    Poly sum()
    {
        Poly p = product();
        while (eat('+'))
            p += product();
        return p;
    }
    Poly product()
    {
        Poly p = power();
        while (eat('*'))
            p = p * power();
        return p;
    }
    Poly power()
    {
        Poly base = atom();
        if (eat('^')) {
            int e = number();
            Poly r = Poly::one();
            for (int i = 0; i < e; ++i)
                r = r * base;
            return r;
        }
        return base;
    }
    Poly atom()
    {
        skip();
        if (eat('(')) {
            Poly p = sum();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 'w' || c == 'v') {
            ++pos_;
            int i = number();
            if (i > 64)
                fail("generator index too large");
            bool prime = eat('\'');
            if (c == 'w')
                return prime ? Poly::wp(i) : Poly::w(i);
            if (prime)
                fail("Wu classes have no primed family");
            return wu_classes(std::max(i, 2))[i];
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int v = number();
            return (v % 2) ? Poly::one() : Poly();
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

struct SqKey {
    int k;
    Monomial m;
    bool operator<(const SqKey& o) const { return k != o.k ? k < o.k : m < o.m; }
};

} // namespace

Poly parse_poly(const std::string& text) { return Parser(text).parse(); }

Poly sq(int k, const Monomial& m)
{
    if (k < 0)
        throw DomainError(Errc::invalid_argument, "negative Steenrod square");
    int d = degree(m);
    if (k == 0)
        return Poly::monomial(m);
    if (k > d)
        return {};
    if (k == d)
        return Poly::monomial(mono_mul(m, m));
    thread_local std::map<SqKey, Poly> memo;
    SqKey key{k, m};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Gen g = m.front();
    Monomial rest(m.begin() + 1, m.end());
    int dg = gen_degree(g), dr = d - dg;
    Poly out;
    for (int i = std::max(0, k - dr); i <= std::min(k, dg); ++i) {
        Poly a = sq_gen(i, g);
        if (a.is_zero())
            continue;
        out += a * sq(k - i, rest);
    }
    memo.emplace(std::move(key), out);
    return out;
}

Poly sq(int k, const Poly& p)
{
    Poly out;
    for (auto& m : p.terms())
        out += sq(k, m);
    return out;
}

Poly sq_total(const Poly& p, int max_degree)
{
    Poly out;
    for (auto& m : p.terms()) {
        int d = degree(m);
        for (int k = 0; k <= d && d + k <= max_degree; ++k)
            out += sq(k, m);
    }
    return out;
}

std::vector<Poly> wu_classes(int max_degree)
{
    if (max_degree < 0)
        throw DomainError(Errc::invalid_argument, "wu_classes: negative degree");
    if (max_degree > 64)
        throw DomainError(Errc::degree_cap, "wu_classes: degree cap is 64");
    std::vector<Poly> nu(max_degree + 1);
    nu[0] = Poly::one();
    for (int k = 1; k <= max_degree; ++k) {
        Poly v = Poly::w(k);
        for (int i = 1; 2 * i <= k; ++i)
            v += sq(i, nu[k - i]);
        nu[k] = v;
    }
    return nu;
}

bool admissible(const SqMonomial& I)
{
    for (std::size_t t = 0; t + 1 < I.size(); ++t)
        if (I[t] < 2 * I[t + 1])
            return false;
    return std::all_of(I.begin(), I.end(), [](int i) { return i > 0; });
}

int excess(const SqMonomial& I)
{
    int e = 0;
    for (std::size_t t = 0; t < I.size(); ++t)
        e += t + 1 < I.size() ? I[t] - 2 * I[t + 1] : I[t];
    return e;
}

std::string sq_str(const SqMonomial& I)
{
    if (I.empty())
        return "1";
    std::string out;
    for (int i : I)
        out += "Sq" + std::to_string(i);
    return out;
}

std::string sq_sum_str(const SqSum& s)
{
    if (s.empty())
        return "0";
    std::string out;
    for (auto& I : s) {
        if (!out.empty())
            out += " + ";
        out += sq_str(I);
    }
    return out;
}

SqSum adem_reduce(const SqMonomial& raw)
{
    SqMonomial I;
    for (int i : raw) {
        if (i < 0)
            throw DomainError(Errc::invalid_argument, "negative Steenrod square");
        if (i)
            I.push_back(i);
    }
    std::size_t t = 0;
    while (t + 1 < I.size() && I[t] >= 2 * I[t + 1])
        ++t;
    if (t + 1 >= I.size())
        return {I};
    thread_local std::map<SqMonomial, SqSum> memo;
    if (auto it = memo.find(I); it != memo.end())
        return it->second;
    int a = I[t], b = I[t + 1];
    SqSum out;
    for (int j = 0; 2 * j <= a; ++j) {
        if (!binom_odd(b - 1 - j, a - 2 * j))
            continue;
        SqMonomial J(I.begin(), I.begin() + t);
        J.push_back(a + b - j);
        J.push_back(j);
        J.insert(J.end(), I.begin() + t + 2, I.end());
        for (auto& K : adem_reduce(J)) {
            auto it = out.find(K);
            if (it == out.end())
                out.insert(K);
            else
                out.erase(it);
        }
    }
    memo.emplace(I, out);
    return out;
}

SqSum chi_sq(int k)
{
    if (k < 0)
        throw DomainError(Errc::invalid_argument, "negative Steenrod square");
    if (k > 128)
        throw DomainError(Errc::degree_cap, "chi_sq: degree cap is 128");
    thread_local std::vector<SqSum> memo{SqSum{SqMonomial{}}};
    while (static_cast<int>(memo.size()) <= k) {
        int n = static_cast<int>(memo.size());
        SqSum out;
        for (int i = 1; i <= n; ++i)
            for (auto& J : memo[n - i]) {
                SqMonomial K{i};
                K.insert(K.end(), J.begin(), J.end());
                for (auto& L : adem_reduce(K)) {
                    auto it = out.find(L);
                    if (it == out.end())
                        out.insert(L);
                    else
                        out.erase(it);
                }
            }
        memo.push_back(out);
    }
    return memo[k];
}

Poly act(const SqMonomial& I, const Poly& p)
{
    Poly r = p;
    for (auto it = I.rbegin(); it != I.rend(); ++it)
        r = sq(*it, r);
    return r;
}

Poly act(const SqSum& s, const Poly& p)
{
    Poly r;
    for (auto& I : s)
        r += act(I, p);
    return r;
}

PolyRing::PolyRing(std::vector<Gen> generators, int max_degree)
    : gens_(std::move(generators)), max_(max_degree)
{
    if (max_degree < 0 || max_degree > 40)
        throw DomainError(Errc::degree_cap, "polynomial ring degree cap must be in 0..40");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    mono_.resize(max_ + 1);
    idx_.resize(max_ + 1);
    Monomial cur;
    auto rec = [&](auto&& self, std::size_t from, int deg) -> void {
        mono_[deg].push_back(cur);
        for (std::size_t g = from; g < gens_.size(); ++g) {
            int d = gen_degree(gens_[g]);
            if (deg + d > max_)
                continue;
            cur.push_back(gens_[g]);
            self(self, g, deg + d);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    for (int d = 0; d <= max_; ++d) {
        std::sort(mono_[d].begin(), mono_[d].end());
        for (std::size_t i = 0; i < mono_[d].size(); ++i)
            idx_[d].emplace(mono_[d][i], i);
    }
}

const std::vector<Monomial>& PolyRing::monomials(int d) const
{
    if (d < 0 || d > max_)
        throw DomainError(Errc::degree_cap, "degree " + std::to_string(d) + " exceeds ring cap " + std::to_string(max_));
    return mono_[d];
}

long PolyRing::index(const Monomial& m) const
{
    int d = degree(m);
    if (d > max_)
        return -1;
    auto it = idx_[d].find(m);
    return it == idx_[d].end() ? -1 : static_cast<long>(it->second);
}

f2::BitRow PolyRing::vector(const Poly& p, int d) const
{
    f2::BitRow v(count(d));
    for (auto& m : p.terms()) {
        if (degree(m) != d)
            throw DomainError(Errc::invalid_argument, "polynomial is not homogeneous of degree " + std::to_string(d));
        long i = index(m);
        if (i < 0)
            throw DomainError(Errc::invalid_argument, "monomial " + monomial_str(m) + " not in ring");
        v.set(static_cast<std::size_t>(i));
    }
    return v;
}

Poly PolyRing::poly(const f2::BitRow& v, int d) const
{
    Poly p;
    const auto& ms = monomials(d);
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (v.get(i))
            p.toggle(ms[i]);
    return p;
}

PolyRing bso_ring(int max_degree)
{
    std::vector<Gen> g;
    for (int i = 2; i <= max_degree; ++i)
        g.push_back(static_cast<Gen>(i));
    return PolyRing(g, max_degree);
}

PolyRing bso_bso3_ring(int max_degree)
{
    std::vector<Gen> g;
    for (int i = 2; i <= max_degree; ++i)
        g.push_back(static_cast<Gen>(i));
    for (int i = 2; i <= primed_top && i <= max_degree; ++i)
        g.push_back(static_cast<Gen>(primed | i));
    return PolyRing(g, max_degree);
}

GradedIdeal::GradedIdeal(const PolyRing& ring, std::vector<Poly> generators)
    : ring_(ring), gens_(std::move(generators))
{
    for (auto& g : gens_)
        if (g.degree() == -2)
            throw DomainError(Errc::invalid_argument, "ideal generators must be homogeneous");
    for (int d = 0; d <= ring_.max_degree(); ++d) {
        std::vector<std::pair<Monomial, std::size_t>> span;
        for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
            int dg = gens_[gi].degree();
            if (dg < 0 || dg > d)
                continue;
            for (auto& m : ring_.monomials(d - dg))
                span.emplace_back(m, gi);
        }
        Slice s{f2::Echelon(ring_.count(d), std::max<std::size_t>(span.size(), 1)), std::move(span)};
        for (auto& [m, gi] : s.spanning)
            s.basis.insert(ring_.vector(Poly::monomial(m) * gens_[gi], d));
        slices_.push_back(std::move(s));
    }
}

const f2::Echelon& GradedIdeal::slice(int d) const
{
    if (d < 0 || d > ring_.max_degree())
        throw DomainError(Errc::degree_cap, "degree " + std::to_string(d) + " exceeds ideal cap");
    return slices_[d].basis;
}

std::size_t GradedIdeal::rank(int d) const { return slice(d).rank(); }

bool GradedIdeal::contains(const Poly& p, Certificate* cert) const
{
    int d = p.degree();
    if (d == -1) {
        if (cert)
            cert->terms.clear();
        return true;
    }
    if (d == -2) {
        // inhomogeneous: check each homogeneous part
        std::map<int, Poly> parts;
        for (auto& m : p.terms())
            parts[degree(m)].toggle(m);
        Certificate all;
        for (auto& [deg, part] : parts) {
            Certificate c;
            if (!contains(part, &c))
                return false;
            all.terms.insert(all.terms.end(), c.terms.begin(), c.terms.end());
        }
        if (cert)
            *cert = all;
        return true;
    }
    if (d > ring_.max_degree())
        throw DomainError(Errc::degree_cap, "degree " + std::to_string(d) + " exceeds ideal cap");
    std::vector<std::size_t> combo;
    if (!slices_[d].basis.contains(ring_.vector(p, d), &combo))
        return false;
    if (cert) {
        cert->terms.clear();
        for (std::size_t i : combo)
            cert->terms.push_back(slices_[d].spanning[i]);
    }
    return true;
}

Poly GradedIdeal::expand(const Certificate& c) const
{
    Poly p;
    for (auto& [m, gi] : c.terms)
        p += Poly::monomial(m) * gens_.at(gi);
    return p;
}

std::vector<Poly> bspinh_relations(int max_degree)
{
    std::vector<Poly> rel;
    int top = 4;
    while (2 * top + 1 <= max_degree)
        top *= 2;
    auto nu = wu_classes(std::max(top, 2));
    for (int e = 4; e + 1 <= max_degree; e *= 2)
        rel.push_back(sq(1, nu[e]));
    return rel;
}

std::vector<Poly> bspin_relations(int max_degree)
{
    std::vector<Poly> rel{Poly::w(2), sq(1, Poly::w(2))};
    auto h = bspinh_relations(max_degree);
    rel.insert(rel.end(), h.begin(), h.end());
    return rel;
}

std::vector<Poly> bspinc_relations(int max_degree)
{
    std::vector<Poly> rel{sq(1, Poly::w(2))};
    auto h = bspinh_relations(max_degree);
    rel.insert(rel.end(), h.begin(), h.end());
    return rel;
}

std::vector<long> quotient_poincare_series(const GradedIdeal& I, int max_degree)
{
    if (max_degree > I.ring().max_degree())
        throw DomainError(Errc::degree_cap, "series degree exceeds ideal cap");
    std::vector<long> out;
    for (int d = 0; d <= max_degree; ++d)
        out.push_back(static_cast<long>(I.ring().count(d) - I.rank(d)));
    return out;
}

std::vector<long> sq1_homology_series(const GradedIdeal& I, int max_degree)
{
    const PolyRing& R = I.ring();
    if (max_degree + 1 > R.max_degree())
        throw DomainError(Errc::degree_cap, "Sq1 homology needs the ideal one degree past the series");
    // rank of Sq1: Q_d -> Q_{d+1}
    std::vector<long> rk(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        f2::Echelon e = I.slice(d + 1).untracked();
        std::size_t base = e.rank();
        for (auto& m : R.monomials(d))
            e.insert(R.vector(sq(1, m), d + 1));
        rk[d] = static_cast<long>(e.rank() - base);
    }
    std::vector<long> out;
    for (int d = 0; d <= max_degree; ++d) {
        long q = static_cast<long>(R.count(d) - I.rank(d));
        out.push_back(q - rk[d] - (d > 0 ? rk[d - 1] : 0));
    }
    return out;
}

std::vector<long> sq1_homology_series(int max_degree)
{
    if (max_degree < 0)
        throw DomainError(Errc::invalid_argument, "negative degree");
    PolyRing R = bso_ring(max_degree + 1);
    GradedIdeal I(R, bspinh_relations(max_degree + 1));
    return sq1_homology_series(I, max_degree);
}

std::vector<long> free_algebra_series(const std::vector<int>& degrees, int max_degree)
{
    std::vector<long> c(max_degree + 1, 0);
    c[0] = 1;
    for (int g : degrees) {
        if (g <= 0)
            throw DomainError(Errc::invalid_argument, "generator degrees must be positive");
        for (int d = g; d <= max_degree; ++d)
            c[d] += c[d - g];
    }
    return c;
}

std::vector<MonicityEntry> monicity_battery(int max_r)
{
    Poly x = Poly::w(2) + Poly::wp(2);
    std::vector<MonicityEntry> out;
    SqMonomial I;
    for (int r = -1; r <= max_r; ++r) {
        if (r >= 0)
            I.insert(I.begin(), 1 << r);
        Poly v = act(I, x);
        out.push_back({I, v, v.indecomposable_part()});
    }
    return out;
}

} // namespace spinh::steenrod
