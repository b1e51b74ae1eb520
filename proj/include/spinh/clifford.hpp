#pragma once

#include "spinh/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace spinh {

// Cl_{r,s}: the first r generators square to -1, the last s to +1.
struct Signature {
    int r = 0;
    int s = 0;
    int n() const { return r + s; }
    bool operator==(const Signature&) const = default;
};

// Bit i-1 set means e_i is present; blades are kept in ascending index order.
using Blade = std::uint32_t;

constexpr int max_generators = 30;

int blade_grade(Blade b);
// Sign of e_A e_B relative to e_{A xor B}.
int blade_product_sign(const Signature& sig, Blade a, Blade b);

class CliffordElement {
public:
    explicit CliffordElement(Signature sig = {});

    static CliffordElement scalar(Signature sig, const Rational& c);
    static CliffordElement blade(Signature sig, Blade b, const Rational& c = 1);
    static CliffordElement generator(Signature sig, int i);

    const Signature& signature() const { return sig_; }
    const std::map<Blade, Rational>& terms() const { return terms_; }
    Rational coeff(Blade b) const;

    void add_term(Blade b, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    // -1 if mixed, else 0 or 1.
    int parity() const;

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator*(const CliffordElement& o) const;
    CliffordElement operator*(const Rational& c) const;
    bool operator==(const CliffordElement& o) const;

    std::string str() const;

private:
    Signature sig_;
    std::map<Blade, Rational> terms_;
};

CliffordElement blade_mul(const CliffordElement& a, const CliffordElement& b);
CliffordElement volume_element(const Signature& sig);
// Closed form of the square of the volume element: (-1)^{[(r+s)^2 + (r-s)]/2}.
int volume_square_sign(const Signature& sig);
CliffordElement transpose(const CliffordElement& a);

enum class Field { R, C, H };
enum class Variant { Cl, CCl, Clh, CClh };

const char* field_name(Field f);
const char* variant_name(Variant v);
int field_dim(Field f);
Field parse_field(const std::string& s);
Variant parse_variant(const std::string& s);

struct AlgebraDescriptor {
    Field field = Field::R;
    std::uint64_t size = 1;
    bool simple = true;

    std::uint64_t real_dimension() const;
    std::string str() const;
    bool operator==(const AlgebraDescriptor&) const = default;
};

AlgebraDescriptor tensor(const AlgebraDescriptor& a, const AlgebraDescriptor& b);

AlgebraDescriptor classify(int n, Variant v);
AlgebraDescriptor classify_indefinite(int r, int s, bool quaternionic);

struct GradedTensorReport {
    int m = 0, n = 0;
    bool relations_ok = false;
    bool bijective_on_basis = false;
    bool multiplicative = false;
    bool grading_ok = false;
    std::uint64_t dim_source = 0;
    std::uint64_t dim_target = 0;
    bool pass() const
    {
        return relations_ok && bijective_on_basis && multiplicative && grading_ok
            && dim_source == dim_target;
    }
};

// Checks Cl_{m+n} = Cl_m (graded tensor) Cl_n on generators and basis blades.
GradedTensorReport graded_tensor_check(int m, int n, int cap = 12);

} // namespace spinh
