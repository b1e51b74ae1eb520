#pragma once

#include <string>
#include <vector>

namespace spinh {

// One summand of a finitely generated (or Q, Q/Z) abelian group.
struct Summand {
    enum Kind { Z, Zm, Q, QZ };
    Kind kind = Z;
    long m = 0;   // order for Zm

    bool operator==(const Summand&) const = default;
};

class AbGroupExpr {
public:
    AbGroupExpr() = default;

    static AbGroupExpr zero() { return {}; }
    static AbGroupExpr integers(int rank = 1);
    static AbGroupExpr cyclic(long m);
    static AbGroupExpr rationals();
    static AbGroupExpr rationals_mod_integers();

    AbGroupExpr operator+(const AbGroupExpr& o) const;
    bool operator==(const AbGroupExpr& o) const { return s_ == o.s_; }

    const std::vector<Summand>& summands() const { return s_; }
    bool is_zero() const { return s_.empty(); }
    int rank() const;
    // Torsion orders, ascending.
    std::vector<long> torsion() const;
    bool has_divisible() const;

    std::string str() const;
    static AbGroupExpr parse(const std::string& text);

private:
    void normalize();
    std::vector<Summand> s_;
};

} // namespace spinh

namespace spinh {

// Invariant factors n1 | n2 | ... of the product of cyclic groups of the given orders.
std::vector<long> invariant_factors(const std::vector<long>& orders);

} // namespace spinh
