#include "qubokit/qubo.hpp"

#include <map>

namespace qubokit {

Coeff energy(const QuboModel& model, const Assignment& a) {
    if (a.size() != model.num_vars())
        throw DimensionError("assignment has " + std::to_string(a.size()) + " bits, model has " +
                             std::to_string(model.num_vars()) + " variables");
    for (std::uint8_t bit : a)
        if (bit > 1) throw DimensionError("assignment bits must be 0 or 1");

    Coeff e = model.offset();
    const auto& lin = model.linear_terms();
    for (Index i = 0; i < model.num_vars(); ++i)
        if (a[i]) e = checked_add(e, lin[i]);
    for (const auto& [key, c] : model.quadratic_terms())
        if (a[key.first] && a[key.second]) e = checked_add(e, c);
    return e;
}

IsingModel to_ising(const QuboModel& model) {
    // x_i = (s_i + 1) / 2, so
    //   h_i x_i        -> h_i/2 s_i + h_i/2
    //   J_ij x_i x_j   -> J_ij/4 (s_i s_j + s_i + s_j + 1)
    IsingModel ising;
    ising.linear.assign(model.num_vars(), Rational(0));
    ising.offset = Rational(model.offset());
    const auto& lin = model.linear_terms();
    for (Index i = 0; i < model.num_vars(); ++i) {
        if (lin[i] == 0) continue;
        ising.linear[i] += Rational(lin[i], 2);
        ising.offset += Rational(lin[i], 2);
    }
    for (const auto& [key, c] : model.quadratic_terms()) {
        Rational quarter(c, 4);
        ising.quadratic[key] = quarter;
        ising.linear[key.first] += quarter;
        ising.linear[key.second] += quarter;
        ising.offset += quarter;
    }
    return ising;
}

Rational ising_energy(const IsingModel& model, const std::vector<int>& spins) {
    if (spins.size() != model.linear.size())
        throw DimensionError("spin vector size does not match model");
    for (int s : spins)
        if (s != 1 && s != -1) throw DimensionError("spins must be +1 or -1");

    Rational e = model.offset;
    for (std::size_t i = 0; i < spins.size(); ++i)
        e += model.linear[i] * Rational(spins[i]);
    for (const auto& [key, c] : model.quadratic)
        e += c * Rational(static_cast<Coeff>(spins[key.first]) * spins[key.second]);
    return e;
}

int max_quadratic_degree(const QuboModel& model) {
    if (!model.quadratic_terms().empty()) return 2;
    for (Coeff c : model.linear_terms())
        if (c != 0) return 1;
    return 0;
}

void add_linear_expr(QuboModel& model, const LinearExpr& e, Coeff weight) {
    model.add_offset(checked_mul(weight, e.constant()));
    for (const auto& [i, c] : e.terms())
        model.add_linear(i, checked_mul(weight, c));
}

void add_product_expr(QuboModel& model, const LinearExpr& a, const LinearExpr& b, Coeff weight) {
    model.add_offset(checked_mul(weight, checked_mul(a.constant(), b.constant())));
    for (const auto& [i, c] : a.terms())
        model.add_linear(i, checked_mul(weight, checked_mul(c, b.constant())));
    for (const auto& [j, c] : b.terms())
        model.add_linear(j, checked_mul(weight, checked_mul(c, a.constant())));
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms())
            model.add_product(i, j, checked_mul(weight, checked_mul(ci, cj)));
}

void add_square_expr(QuboModel& model, const LinearExpr& e, Coeff weight) {
    add_product_expr(model, e, e, weight);
}

void add_half_product_expr(QuboModel& model, const LinearExpr& a, const LinearExpr& b, Coeff weight) {
    // Accumulate the exact product first so halving can be checked even when
    // individual contributions are odd but sums are even.
    Coeff constant = checked_mul(a.constant(), b.constant());
    std::map<Index, Coeff> lin;
    std::map<std::pair<Index, Index>, Coeff> quad;
    for (const auto& [i, c] : a.terms())
        lin[i] = checked_add(lin.count(i) ? lin[i] : 0, checked_mul(c, b.constant()));
    for (const auto& [j, c] : b.terms())
        lin[j] = checked_add(lin.count(j) ? lin[j] : 0, checked_mul(c, a.constant()));
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms()) {
            Coeff c = checked_mul(ci, cj);
            if (i == j) {
                lin[i] = checked_add(lin.count(i) ? lin[i] : 0, c);
            } else {
                auto key = std::minmax(i, j);
                std::pair<Index, Index> k{key.first, key.second};
                quad[k] = checked_add(quad.count(k) ? quad[k] : 0, c);
            }
        }

    auto halve = [](Coeff c) {
        if (c % 2 != 0) throw OverflowError("half-product with odd coefficient");
        return c / 2;
    };
    model.add_offset(checked_mul(weight, halve(constant)));
    for (const auto& [i, c] : lin)
        model.add_linear(i, checked_mul(weight, halve(c)));
    for (const auto& [key, c] : quad)
        model.add_quadratic(key.first, key.second, checked_mul(weight, halve(c)));
}

}  // namespace qubokit
