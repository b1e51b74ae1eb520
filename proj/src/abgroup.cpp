#include "spinh/abgroup.hpp"
#include "spinh/error.hpp"
#include "spinh/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace spinh {

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::signature_mismatch: return "signature_mismatch";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::inapplicable: return "inapplicable";
    case Errc::non_unit: return "non_unit";
    case Errc::non_integral: return "non_integral";
    case Errc::bound_exceeded: return "bound_exceeded";
    case Errc::degree_cap: return "degree_cap";
    case Errc::missing_input: return "missing_input";
    case Errc::unmatched_family: return "unmatched_family";
    case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

Integer binomial(long a, long b)
{
    if (a < 0 || b < 0 || b > a)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

std::vector<long> invariant_factors(const std::vector<long>& orders)
{
    std::map<long, std::vector<long>> by_prime;
    for (long m : orders) {
        if (m < 1)
            throw DomainError(Errc::invalid_argument, "cyclic order must be positive");
        long x = m;
        for (long p = 2; p * p <= x; ++p) {
            if (x % p)
                continue;
            long q = 1;
            while (x % p == 0) {
                x /= p;
                q *= p;
            }
            by_prime[p].push_back(q);
        }
        if (x > 1)
            by_prime[x].push_back(x);
    }
    size_t len = 0;
    for (auto& [p, v] : by_prime) {
        std::sort(v.begin(), v.end(), std::greater<>());
        len = std::max(len, v.size());
    }
    // factor k (from the top) is the product of the k-th largest prime powers
    std::vector<long> out(len, 1);
    for (auto& [p, v] : by_prime)
        for (size_t i = 0; i < v.size(); ++i)
            out[i] *= v[i];
    std::reverse(out.begin(), out.end());
    return out;
}

AbGroupExpr AbGroupExpr::integers(int rank)
{
    AbGroupExpr g;
    for (int i = 0; i < rank; ++i)
        g.s_.push_back({Summand::Z, 0});
    return g;
}

AbGroupExpr AbGroupExpr::cyclic(long m)
{
    if (m == 0)
        return integers(1);
    AbGroupExpr g;
    if (m > 1)
        g.s_.push_back({Summand::Zm, m});
    return g;
}

AbGroupExpr AbGroupExpr::rationals()
{
    AbGroupExpr g;
    g.s_.push_back({Summand::Q, 0});
    return g;
}

AbGroupExpr AbGroupExpr::rationals_mod_integers()
{
    AbGroupExpr g;
    g.s_.push_back({Summand::QZ, 0});
    return g;
}

AbGroupExpr AbGroupExpr::operator+(const AbGroupExpr& o) const
{
    AbGroupExpr g = *this;
    g.s_.insert(g.s_.end(), o.s_.begin(), o.s_.end());
    g.normalize();
    return g;
}

void AbGroupExpr::normalize()
{
    int nz = 0, nq = 0, nqz = 0;
    std::vector<long> tors;
    for (auto& x : s_) {
        switch (x.kind) {
        case Summand::Z: ++nz; break;
        case Summand::Q: ++nq; break;
        case Summand::QZ: ++nqz; break;
        case Summand::Zm: tors.push_back(x.m); break;
        }
    }
    s_.clear();
    for (int i = 0; i < nz; ++i) s_.push_back({Summand::Z, 0});
    for (int i = 0; i < nq; ++i) s_.push_back({Summand::Q, 0});
    for (int i = 0; i < nqz; ++i) s_.push_back({Summand::QZ, 0});
    for (long m : invariant_factors(tors))
        s_.push_back({Summand::Zm, m});
}

int AbGroupExpr::rank() const
{
    return static_cast<int>(std::count_if(s_.begin(), s_.end(),
        [](const Summand& x) { return x.kind == Summand::Z; }));
}

std::vector<long> AbGroupExpr::torsion() const
{
    std::vector<long> t;
    for (auto& x : s_)
        if (x.kind == Summand::Zm)
            t.push_back(x.m);
    return t;
}

bool AbGroupExpr::has_divisible() const
{
    return std::any_of(s_.begin(), s_.end(),
        [](const Summand& x) { return x.kind == Summand::Q || x.kind == Summand::QZ; });
}

std::string AbGroupExpr::str() const
{
    if (s_.empty())
        return "0";
    std::string out;
    for (auto& x : s_) {
        if (!out.empty())
            out += "+";
        switch (x.kind) {
        case Summand::Z: out += "Z"; break;
        case Summand::Q: out += "Q"; break;
        case Summand::QZ: out += "Q/Z"; break;
        case Summand::Zm: out += "Z" + std::to_string(x.m); break;
        }
    }
    return out;
}

AbGroupExpr AbGroupExpr::parse(const std::string& text)
{
    AbGroupExpr g;
    if (text == "0")
        return g;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('+', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok == "Z")
            g.s_.push_back({Summand::Z, 0});
        else if (tok == "Q")
            g.s_.push_back({Summand::Q, 0});
        else if (tok == "Q/Z")
            g.s_.push_back({Summand::QZ, 0});
        else if (tok.size() > 1 && tok[0] == 'Z'
                 && std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            long m = std::stol(tok.substr(1));
            if (m < 1)
                throw DomainError(Errc::parse_error, "bad cyclic order in '" + text + "'");
            if (m > 1)
                g.s_.push_back({Summand::Zm, m});
        } else
            throw DomainError(Errc::parse_error, "cannot parse group '" + text + "'");
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    g.normalize();
    return g;
}

} // namespace spinh
