#include "locstat/lp.hpp"

#include "locstat/util.hpp"

#include <algorithm>

namespace locstat {

void LinearSystem::add_eq(std::vector<Rational> lhs, Rational rhs) {
    eq_lhs.push_back(std::move(lhs));
    eq_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_le(std::vector<Rational> lhs, Rational rhs) {
    le_lhs.push_back(std::move(lhs));
    le_rhs.push_back(std::move(rhs));
}

void LinearSystem::validate() const {
    if (nvars < 0) throw ValidationError("LinearSystem: negative variable count");
    for (const auto& row : eq_lhs)
        if (static_cast<int>(row.size()) != nvars)
            throw ValidationError("LinearSystem: eq row width mismatch");
    for (const auto& row : le_lhs)
        if (static_cast<int>(row.size()) != nvars)
            throw ValidationError("LinearSystem: le row width mismatch");
    if (eq_lhs.size() != eq_rhs.size() || le_lhs.size() != le_rhs.size())
        throw ValidationError("LinearSystem: lhs/rhs count mismatch");
    if (!lower.empty() && static_cast<int>(lower.size()) != nvars)
        throw ValidationError("LinearSystem: bound vector width mismatch");
}

namespace {

// Full-tableau simplex over exact rationals.
//
// Internal standard form: A y = b, y >= 0, b >= 0. Original variables are
// shifted by their lower bound or split into positive/negative parts.
struct Tableau {
    int m = 0;                              // rows
    int n = 0;                              // columns (variables)
    std::vector<std::vector<Rational>> a;   // m x n
    std::vector<Rational> b;                // m
    std::vector<int> basis;                 // m, column basic in each row

    void pivot(int row, int col) {
        const Rational p = a[row][col];
        for (int j = 0; j < n; ++j) a[row][j] /= p;
        b[row] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            const Rational f = a[i][col];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        basis[row] = col;
    }

    // Maximizes the objective encoded by reduced-cost row `d` (updated in
    // place together with the objective constant). Bland's rule throughout.
    // `allowed` masks columns the entering step may use.
    // Returns false when unbounded.
    bool run(std::vector<Rational>& d, Rational& dconst, const std::vector<char>& allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (allowed[j] && d[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < m; ++i) {
                if (a[i][enter] <= 0) continue;
                Rational ratio = b[i] / a[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            const Rational f = d[enter];
            pivot(leave, enter);
            // fold the pivot row into the cost row
            for (int j = 0; j < n; ++j) d[j] -= f * a[leave][j];
            dconst += f * b[leave];
        }
    }
};

struct StandardForm {
    Tableau t;
    int nvars = 0;
    // var j of the original system maps to column pos[j] (shifted) or the
    // pair (pos[j], pos[j]+1) = (positive, negative part) when split[j].
    std::vector<int> pos;
    std::vector<char> split;
    std::vector<Rational> shift;  // lower bound applied to shifted vars
    int nstruct = 0;              // structural columns (before slacks)
};

StandardForm build_standard(const LinearSystem& sys) {
    sys.validate();
    StandardForm sf;
    sf.nvars = sys.nvars;
    sf.pos.resize(sys.nvars);
    sf.split.assign(sys.nvars, 0);
    sf.shift.assign(sys.nvars, Rational(0));
    int cols = 0;
    for (int j = 0; j < sys.nvars; ++j) {
        sf.pos[j] = cols;
        if (!sys.lower.empty() && sys.lower[j].has_value()) {
            sf.shift[j] = *sys.lower[j];
            cols += 1;
        } else {
            sf.split[j] = 1;
            cols += 2;
        }
    }
    sf.nstruct = cols;
    const int n_le = static_cast<int>(sys.le_lhs.size());
    const int m = static_cast<int>(sys.eq_lhs.size()) + n_le;
    Tableau& t = sf.t;
    t.m = m;
    t.n = cols + n_le;  // slacks for <= rows
    t.a.assign(m, std::vector<Rational>(t.n, Rational(0)));
    t.b.assign(m, Rational(0));
    t.basis.assign(m, -1);

    auto fill_row = [&](int row, const std::vector<Rational>& lhs, const Rational& rhs) {
        Rational adj = rhs;
        for (int j = 0; j < sys.nvars; ++j) {
            const Rational& c = lhs[j];
            if (c == 0) continue;
            if (sf.split[j]) {
                t.a[row][sf.pos[j]] = c;
                t.a[row][sf.pos[j] + 1] = -c;
            } else {
                t.a[row][sf.pos[j]] = c;
                adj -= c * sf.shift[j];
            }
        }
        t.b[row] = adj;
    };

    int row = 0;
    for (std::size_t i = 0; i < sys.eq_lhs.size(); ++i, ++row) fill_row(row, sys.eq_lhs[i], sys.eq_rhs[i]);
    for (std::size_t i = 0; i < sys.le_lhs.size(); ++i, ++row) {
        fill_row(row, sys.le_lhs[i], sys.le_rhs[i]);
        t.a[row][cols + static_cast<int>(i)] = 1;  // slack
    }
    // normalize b >= 0
    for (int i = 0; i < t.m; ++i) {
        if (t.b[i] < 0) {
            for (int j = 0; j < t.n; ++j) t.a[i][j] = -t.a[i][j];
            t.b[i] = -t.b[i];
        }
    }
    return sf;
}

// Phase 1. Returns false when the system is infeasible; otherwise leaves the
// tableau in a basic feasible state with artificials removed.
bool phase1(StandardForm& sf) {
    Tableau& t = sf.t;
    const int n0 = t.n;
    // append one artificial per row
    t.n = n0 + t.m;
    for (int i = 0; i < t.m; ++i) {
        t.a[i].resize(t.n, Rational(0));
        t.a[i][n0 + i] = 1;
        t.basis[i] = n0 + i;
    }
    // objective: maximize -sum(artificials); reduced costs relative to basis
    std::vector<Rational> d(t.n, Rational(0));
    Rational dconst(0);
    for (int i = 0; i < t.m; ++i) {
        for (int j = 0; j < n0; ++j) d[j] += t.a[i][j];
        dconst -= t.b[i];
    }
    std::vector<char> allowed(t.n, 1);
    if (!t.run(d, dconst, allowed)) throw std::logic_error("phase 1 cannot be unbounded");
    if (dconst != 0) return false;  // artificial mass remains
    // drive artificials out of the basis; drop redundant rows
    for (int i = 0; i < t.m;) {
        if (t.basis[i] < n0) {
            ++i;
            continue;
        }
        int col = -1;
        for (int j = 0; j < n0; ++j) {
            if (t.a[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col >= 0) {
            t.pivot(i, col);
            ++i;
        } else {
            // redundant row
            t.a.erase(t.a.begin() + i);
            t.b.erase(t.b.begin() + i);
            t.basis.erase(t.basis.begin() + i);
            --t.m;
        }
    }
    // strip artificial columns
    for (int i = 0; i < t.m; ++i) t.a[i].resize(n0);
    t.n = n0;
    return true;
}

std::vector<Rational> extract_point(const StandardForm& sf) {
    std::vector<Rational> y(sf.t.n, Rational(0));
    for (int i = 0; i < sf.t.m; ++i) y[sf.t.basis[i]] = sf.t.b[i];
    std::vector<Rational> x(sf.nvars);
    for (int j = 0; j < sf.nvars; ++j) {
        if (sf.split[j])
            x[j] = y[sf.pos[j]] - y[sf.pos[j] + 1];
        else
            x[j] = y[sf.pos[j]] + sf.shift[j];
    }
    return x;
}

}  // namespace

std::optional<std::vector<Rational>> feasible(const LinearSystem& sys) {
    StandardForm sf = build_standard(sys);
    if (!phase1(sf)) return std::nullopt;
    return extract_point(sf);
}

LpResult maximize(const LinearSystem& sys, const std::vector<Rational>& obj) {
    if (static_cast<int>(obj.size()) != sys.nvars)
        throw ValidationError("maximize: objective width mismatch");
    LpResult res;
    StandardForm sf = build_standard(sys);
    if (!phase1(sf)) {
        res.status = LpResult::Status::Infeasible;
        return res;
    }
    Tableau& t = sf.t;
    // objective over standard-form columns
    std::vector<Rational> c(t.n, Rational(0));
    Rational cconst(0);
    for (int j = 0; j < sys.nvars; ++j) {
        if (obj[j] == 0) continue;
        if (sf.split[j]) {
            c[sf.pos[j]] = obj[j];
            c[sf.pos[j] + 1] = -obj[j];
        } else {
            c[sf.pos[j]] = obj[j];
            cconst += obj[j] * sf.shift[j];
        }
    }
    // reduced costs w.r.t. current basis
    std::vector<Rational> d = c;
    Rational dconst = cconst;
    for (int i = 0; i < t.m; ++i) {
        const Rational f = c[t.basis[i]];
        if (f == 0) continue;
        for (int j = 0; j < t.n; ++j) d[j] -= f * t.a[i][j];
        dconst += f * t.b[i];
        d[t.basis[i]] = 0;  // exact zero for basic columns
    }
    std::vector<char> allowed(t.n, 1);
    if (!t.run(d, dconst, allowed)) {
        res.status = LpResult::Status::Unbounded;
        return res;
    }
    res.status = LpResult::Status::Optimal;
    res.value = dconst;
    res.point = extract_point(sf);
    return res;
}

}  // namespace locstat
