#include "nbsc/economics.hpp"

#include <algorithm>
#include <cmath>

#include "nbsc/errors.hpp"

namespace nbsc::economics {

double EconomicParams::phi(double alpha) const {
  return std::pow(alpha, phi_exponent.value_or(adoption_exponent));
}

void EconomicParams::validate() const {
  const double monetary[] = {unit_price,      salvage_value, holding_cost,
                             stockout_penalty, variance_weight, risk_weight,
                             fillrate_weight,  adoption_scale,  a1,
                             a2,               a3,              a4,
                             budget};
  for (double v : monetary) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("economics: monetary fields must be finite and >= 0");
    }
  }
  if (!(fillrate_target > 0.0) || !(fillrate_target < 1.0)) {
    throw DomainError("economics: fill-rate target must lie in (0, 1)");
  }
  if (!(adoption_exponent >= 1.0)) {
    throw DomainError("economics: adoption exponent must be >= 1");
  }
  if (phi_exponent && !(*phi_exponent >= 0.0)) {
    throw DomainError("economics: phi exponent must be >= 0");
  }
  if (salvage_value > unit_price) {
    throw DomainError("economics: salvage value cannot exceed unit price");
  }
  if (!(risk_exponent > 0.0)) {
    throw DomainError("economics: risk exponent must be positive");
  }
}

long long Scenario::total_quantity() const {
  long long total = 0;
  for (long long q : quantities) total += q;
  return total;
}

UnitCost procurement_unit_cost(double alpha, const Supplier& supplier,
                               const EconomicParams& econ) {
  if (!(alpha >= 0.0) || !(alpha <= 1.0)) {
    throw DomainError("procurement_unit_cost: alpha must lie in [0, 1]");
  }
  const double raw = supplier.base_cost - econ.a1 * alpha - econ.a2 * supplier.readiness -
                     econ.a3 * alpha * supplier.readiness - econ.a4 * econ.phi(alpha);
  if (raw < 0.0) return {0.0, true};
  return {raw, false};
}

double adoption_cost(double alpha, const EconomicParams& econ) {
  if (!(alpha >= 0.0) || !(alpha <= 1.0)) {
    throw DomainError("adoption_cost: alpha must lie in [0, 1]");
  }
  return econ.adoption_scale * std::pow(alpha, econ.adoption_exponent);
}

ProfitBreakdown& ProfitBreakdown::operator+=(const ProfitBreakdown& other) {
  revenue += other.revenue;
  salvage += other.salvage;
  stockout_cost += other.stockout_cost;
  holding_cost += other.holding_cost;
  procurement_cost += other.procurement_cost;
  adoption_cost += other.adoption_cost;
  return *this;
}

double procurement_spend(const Scenario& scenario,
                         const std::vector<Supplier>& suppliers,
                         const EconomicParams& econ) {
  if (scenario.quantities.size() != suppliers.size()) {
    throw DomainError("scenario has a quantity entry per supplier");
  }
  double spend = 0.0;
  for (std::size_t i = 0; i < suppliers.size(); ++i) {
    if (scenario.quantities[i] < 0) {
      throw DomainError("scenario quantities must be non-negative");
    }
    spend += procurement_unit_cost(scenario.alpha, suppliers[i], econ).value *
             static_cast<double>(scenario.quantities[i]);
  }
  return spend;
}

bool budget_check(const Scenario& scenario, const std::vector<Supplier>& suppliers,
                  const EconomicParams& econ) {
  return procurement_spend(scenario, suppliers, econ) <= econ.budget;
}

ProfitBreakdown replication_profit(const Scenario& scenario, long long demand,
                                   const std::vector<Supplier>& suppliers,
                                   const EconomicParams& econ) {
  if (demand < 0) throw DomainError("replication_profit: demand must be >= 0");
  const double spend = procurement_spend(scenario, suppliers, econ);
  if (spend > econ.budget) {
    throw InfeasibleScenarioError("scenario exceeds the procurement budget");
  }
  const double q = static_cast<double>(scenario.total_quantity());
  const double d = static_cast<double>(demand);
  const double sold = std::min(q, d);
  const double leftover = std::max(q - d, 0.0);
  const double unmet = std::max(d - q, 0.0);

  ProfitBreakdown b;
  b.revenue = econ.unit_price * sold;
  b.salvage = econ.salvage_value * leftover;
  b.stockout_cost = econ.stockout_penalty * unmet;
  b.holding_cost = econ.holding_cost * leftover;
  b.procurement_cost = spend;
  b.adoption_cost = adoption_cost(scenario.alpha, econ);
  return b;
}

double variance_penalty(double variance, const EconomicParams& econ) {
  if (!(variance >= 0.0)) throw DomainError("variance_penalty: variance must be >= 0");
  return econ.variance_weight * variance;
}

double risk_penalty(double stockout_prob, const EconomicParams& econ) {
  if (!(stockout_prob >= 0.0) || !(stockout_prob <= 1.0)) {
    throw DomainError("risk_penalty: probability must lie in [0, 1]");
  }
  if (stockout_prob == 0.0) return 0.0;
  return econ.risk_weight * std::pow(stockout_prob, econ.risk_exponent);
}

double fillrate_penalty(double fill_rate, const EconomicParams& econ) {
  if (!(fill_rate >= 0.0) || !(fill_rate <= 1.0)) {
    throw DomainError("fillrate_penalty: fill rate must lie in [0, 1]");
  }
  double gap = econ.fillrate_target - fill_rate;
  if (econ.one_sided_fillrate) gap = std::max(gap, 0.0);
  return econ.fillrate_weight * gap * gap;
}

}  // namespace nbsc::economics
