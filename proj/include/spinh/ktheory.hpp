#pragma once

#include "spinh/abgroup.hpp"
#include "spinh/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinh {

enum class Theory { KO, KU, KSp };
Theory parse_theory(const std::string& s);
const char* theory_name(Theory t);

struct CoefficientRing {
    enum Tag { Z, Q, QZ, Zk };
    Tag tag = Z;
    long k = 0;

    static CoefficientRing parse(const std::string& s);
    std::string str() const;
};

// Coefficient group h_n(pt; ring). When both the tensor and Tor parts are nonzero and
// could form a nonsplit extension, the result carries both ends and a flag.
struct CoefficientGroup {
    AbGroupExpr group;          // the group when determined; sub + quotient otherwise
    AbGroupExpr sub;            // h_n (x) ring
    AbGroupExpr quotient;       // Tor(h_{n-1}, ring)
    bool undetermined = false;
    std::string str() const;
};

AbGroupExpr k_point(Theory t, long n);
CoefficientGroup k_coefficients(Theory t, long n, const CoefficientRing& ring);
// Q/Z coefficients from the long exact sequence of 0 -> Z -> Q -> Q/Z -> 0.
AbGroupExpr k_coefficients_qz_les(Theory t, long n);

AbGroupExpr tensor_group(const AbGroupExpr& g, const CoefficientRing& ring);
AbGroupExpr tor_group(const AbGroupExpr& g, const CoefficientRing& ring);

struct ZkSphereResult {
    Theory theory = Theory::KU;
    long m = 0, k = 0;
    AbGroupExpr circle_part;    // h^{-1}(pt)^{k-1}
    AbGroupExpr moore_sub;      // h^{-m}(pt) (x) Z_k
    AbGroupExpr quotient;       // Tor(h^{-m+1}(pt), Z_k)
    AbGroupExpr moore_group;    // Moore part when determined
    AbGroupExpr total;          // circle + Moore when determined
    bool undetermined = false;
    // Ind_R^C on the Moore part: "iso", "multiplication by 2", or "" when not applicable.
    std::string comparison;
    long comparison_factor = 0;
};

ZkSphereResult zk_sphere_group(Theory t, long m, long k);

struct ZkIndexInput {
    long n = 0;
    long k = 0;
    Rational integral_term;
    Rational eta_term;
};

long zk_index(const ZkIndexInput& in);

struct AindResult {
    AbGroupExpr group;          // KSp^{-n}(pt)
    std::string kind;           // "integer", "parity", "zero"
    Integer value;
};

AindResult aind_classify(long n, std::optional<Rational> genus, std::optional<long> harmonic_dim);

struct FGAbelianGroup {
    long rank = 0;
    std::vector<long> torsion;  // invariant factors n1 | n2 | ...

    static FGAbelianGroup from_cyclic(long rank, const std::vector<long>& orders);
    long torsion_order() const;
    bool operator==(const FGAbelianGroup&) const = default;
    std::string str() const;
    AbGroupExpr expr() const;
};

struct DualityReport {
    FGAbelianGroup dual;
    bool finite_verified = false;
    long candidate_maps = 0;      // maps tried for Hom(Hom(A,Q/Z),Q/Z)
    long valid_maps = 0;
    bool free_verified = false;
    bool pass() const { return finite_verified && free_verified; }
};

// q in Q descends to Z -> Z under the duality iff q*Z lands in Z.
bool free_witness_descends(const Rational& q);

DualityReport dual_group(const FGAbelianGroup& a, long bound = 1000);

} // namespace spinh
