#pragma once

#include "spinh/f2_linalg.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace spinh::steenrod {

// Generator code: w_i is i, the primed (BSO(3)) class w'_i is primed | i.
using Gen = std::uint8_t;
constexpr Gen primed = 0x80;
constexpr int primed_top = 3;

using Monomial = std::vector<Gen>;   // sorted ascending

int gen_degree(Gen g);
int degree(const Monomial& m);
std::string monomial_str(const Monomial& m);

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    Poly() = default;
    static Poly one();
    static Poly w(int i);
    static Poly wp(int i);
    static Poly monomial(Monomial m);

    const std::set<Monomial, MonoLess>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // -1 for zero, -2 for inhomogeneous
    int degree() const;
    void toggle(const Monomial& m);

    Poly operator+(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return t_ != o.t_; }

    // Terms that are a single generator.
    Poly indecomposable_part() const;
    std::string str() const;

private:
    std::set<Monomial, MonoLess> t_;
};

Poly parse_poly(const std::string& text);

Poly sq(int k, const Poly& p);
Poly sq(int k, const Monomial& m);
// Sq^0 + Sq^1 + ... applied, keeping degrees <= max_degree.
Poly sq_total(const Poly& p, int max_degree);

// nu_0 .. nu_max (index = degree); nu_1 = 0 in the oriented case.
std::vector<Poly> wu_classes(int max_degree);

using SqMonomial = std::vector<int>;
using SqSum = std::set<SqMonomial>;

bool admissible(const SqMonomial& I);
int excess(const SqMonomial& I);
std::string sq_str(const SqMonomial& I);
std::string sq_sum_str(const SqSum& s);
SqSum adem_reduce(const SqMonomial& I);
SqSum chi_sq(int k);
Poly act(const SqMonomial& I, const Poly& p);
Poly act(const SqSum& s, const Poly& p);

class PolyRing {
public:
    PolyRing(std::vector<Gen> generators, int max_degree);

    int max_degree() const { return max_; }
    const std::vector<Gen>& generators() const { return gens_; }
    const std::vector<Monomial>& monomials(int d) const;
    std::size_t count(int d) const { return monomials(d).size(); }
    // Index of m in monomials(degree(m)), or -1.
    long index(const Monomial& m) const;
    f2::BitRow vector(const Poly& p, int d) const;
    Poly poly(const f2::BitRow& v, int d) const;

private:
    std::vector<Gen> gens_;
    int max_;
    std::vector<std::vector<Monomial>> mono_;
    std::vector<std::map<Monomial, std::size_t>> idx_;
};

// H*(BSO; Z2) truncated: w_2 .. w_max.
PolyRing bso_ring(int max_degree);
// H*(BSO x BSO(3); Z2): w_2 .. w_max and w'_2, w'_3.
PolyRing bso_bso3_ring(int max_degree);

struct Certificate {
    // p = sum of monomial * generator[gen]
    std::vector<std::pair<Monomial, std::size_t>> terms;
};

class GradedIdeal {
public:
    // All slices up to the ring's max degree are computed here; the object is read-only afterwards.
    GradedIdeal(const PolyRing& ring, std::vector<Poly> generators);

    const PolyRing& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }
    std::size_t rank(int d) const;
    const f2::Echelon& slice(int d) const;
    bool contains(const Poly& p, Certificate* cert = nullptr) const;
    Poly expand(const Certificate& c) const;

private:
    struct Slice {
        f2::Echelon basis;
        std::vector<std::pair<Monomial, std::size_t>> spanning;
    };
    PolyRing ring_;
    std::vector<Poly> gens_;
    std::vector<Slice> slices_;
};

// Sq^1 nu_{2^{r+1}} for r >= 1 with 2^{r+1}+1 <= max_degree.
std::vector<Poly> bspinh_relations(int max_degree);
std::vector<Poly> bspin_relations(int max_degree);
std::vector<Poly> bspinc_relations(int max_degree);

std::vector<long> quotient_poincare_series(const GradedIdeal& I, int max_degree);
std::vector<long> sq1_homology_series(const GradedIdeal& I, int max_degree);
std::vector<long> sq1_homology_series(int max_degree);

// Poincare series of a free commutative algebra on generators of the given degrees.
std::vector<long> free_algebra_series(const std::vector<int>& degrees, int max_degree);

struct MonicityEntry {
    SqMonomial op;
    Poly value;
    Poly indecomposable;
};

// Sq^I (w2 + w2') for I = (), (1), (2,1), (4,2,1), ... up to r.
std::vector<MonicityEntry> monicity_battery(int max_r);

} // namespace spinh::steenrod
