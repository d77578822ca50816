#pragma once

#include "locstat/rational.hpp"

#include <optional>
#include <vector>

namespace locstat {

// A system of exact rational linear constraints:
//   eq rows:  a.x == b
//   le rows:  a.x <= b
//   lower[j]: optional lower bound on x_j (nullopt = free variable)
struct LinearSystem {
    int nvars = 0;
    std::vector<std::vector<Rational>> eq_lhs;
    std::vector<Rational> eq_rhs;
    std::vector<std::vector<Rational>> le_lhs;
    std::vector<Rational> le_rhs;
    std::vector<std::optional<Rational>> lower;  // size nvars (empty = all free)

    void add_eq(std::vector<Rational> lhs, Rational rhs);
    void add_le(std::vector<Rational> lhs, Rational rhs);
    void validate() const;  // row widths match nvars
};

struct LpResult {
    enum class Status { Optimal, Unbounded, Infeasible };
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> point;
};

// Exact phase-1 simplex with Bland's anti-cycling rule. Returns a witness
// satisfying every row exactly, or nullopt.
std::optional<std::vector<Rational>> feasible(const LinearSystem& sys);

// Exact maximization of obj.x over the system; deterministic tie-breaking (Bland).
LpResult maximize(const LinearSystem& sys, const std::vector<Rational>& obj);

}  // namespace locstat
