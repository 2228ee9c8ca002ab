// Core QUBO model: integer linear/quadratic coefficients over binary
// variables, plus the exact spin-space (Ising) image. Minimization is over
// x in {0,1}^n of  offset + sum_i h_i x_i + sum_{i<j} J_ij x_i x_j.
#ifndef QUBOKIT_QUBO_HPP
#define QUBOKIT_QUBO_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qubokit/arith.hpp"

namespace qubokit {

using Index = std::uint32_t;
// One bit per variable, values 0/1, indexed by variable.
using Assignment = std::vector<std::uint8_t>;

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

class QuboModel {
public:
    QuboModel() = default;
    explicit QuboModel(Index num_vars) : num_vars_(num_vars), linear_(num_vars, 0) {}

    Index num_vars() const { return num_vars_; }
    Coeff offset() const { return offset_; }
    Coeff linear(Index i) const { check_index(i); return linear_[i]; }
    const std::vector<Coeff>& linear_terms() const { return linear_; }
    // Keys are (i, j) with i < j; zero coefficients are never stored.
    const std::map<std::pair<Index, Index>, Coeff>& quadratic_terms() const { return quadratic_; }

    void add_offset(Coeff c) { offset_ = checked_add(offset_, c); }

    void add_linear(Index i, Coeff c) {
        check_index(i);
        linear_[i] = checked_add(linear_[i], c);
    }

    void add_quadratic(Index i, Index j, Coeff c) {
        if (i == j) throw DimensionError("quadratic term with i == j");
        check_index(i);
        check_index(j);
        if (i > j) std::swap(i, j);
        auto key = std::make_pair(i, j);
        auto it = quadratic_.find(key);
        if (it == quadratic_.end()) {
            if (c != 0) quadratic_.emplace(key, c);
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) quadratic_.erase(it);
        }
    }

    // x_i * x_i == x_i, so a square lands in the linear part.
    void add_product(Index i, Index j, Coeff c) {
        if (i == j) add_linear(i, c);
        else add_quadratic(i, j, c);
    }

    std::size_t num_linear_nonzero() const {
        std::size_t n = 0;
        for (Coeff c : linear_) n += (c != 0);
        return n;
    }
    std::size_t num_quadratic_nonzero() const { return quadratic_.size(); }

private:
    void check_index(Index i) const {
        if (i >= num_vars_)
            throw DimensionError("variable index " + std::to_string(i) + " out of range (n=" +
                                 std::to_string(num_vars_) + ")");
    }

    Index num_vars_ = 0;
    std::vector<Coeff> linear_;
    std::map<std::pair<Index, Index>, Coeff> quadratic_;
    Coeff offset_ = 0;
};

// Spin model over s in {-1,+1}^n produced from a QUBO by x = (s+1)/2.
// Coefficients are exact rationals (quarters of integers).
struct IsingModel {
    std::vector<Rational> linear;
    std::map<std::pair<Index, Index>, Rational> quadratic;
    Rational offset;
};

Coeff energy(const QuboModel& model, const Assignment& a);
IsingModel to_ising(const QuboModel& model);
Rational ising_energy(const IsingModel& model, const std::vector<int>& spins);
// 2 if any quadratic term present, 1 if only linear, 0 for a constant model.
int max_quadratic_degree(const QuboModel& model);

// Small affine expression over binary variables, used to transcribe penalty
// Hamiltonians term by term. Term lists may carry duplicates; emission
// handles them exactly.
class LinearExpr {
public:
    LinearExpr() = default;
    static LinearExpr variable(Index i, Coeff coeff = 1) {
        LinearExpr e;
        e.terms_.emplace_back(i, coeff);
        return e;
    }
    static LinearExpr constant(Coeff c) {
        LinearExpr e;
        e.constant_ = c;
        return e;
    }

    LinearExpr& add_term(Index i, Coeff coeff) {
        terms_.emplace_back(i, coeff);
        return *this;
    }
    LinearExpr& add_constant(Coeff c) {
        constant_ = checked_add(constant_, c);
        return *this;
    }
    LinearExpr& operator+=(const LinearExpr& o) {
        terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
        constant_ = checked_add(constant_, o.constant_);
        return *this;
    }
    LinearExpr& operator-=(const LinearExpr& o) {
        for (const auto& [i, c] : o.terms_) terms_.emplace_back(i, checked_mul(c, -1));
        constant_ = checked_sub(constant_, o.constant_);
        return *this;
    }

    const std::vector<std::pair<Index, Coeff>>& terms() const { return terms_; }
    Coeff constant() const { return constant_; }

private:
    std::vector<std::pair<Index, Coeff>> terms_;
    Coeff constant_ = 0;
};

// Adds weight * expr to the model.
void add_linear_expr(QuboModel& model, const LinearExpr& e, Coeff weight);
// Adds weight * (a * b) to the model; the product is at most quadratic.
void add_product_expr(QuboModel& model, const LinearExpr& a, const LinearExpr& b, Coeff weight);
// Adds weight * expr^2 to the model.
void add_square_expr(QuboModel& model, const LinearExpr& e, Coeff weight);
// Adds weight * (a * b) / 2; every coefficient of the product must be even.
void add_half_product_expr(QuboModel& model, const LinearExpr& a, const LinearExpr& b, Coeff weight);

}  // namespace qubokit

#endif
