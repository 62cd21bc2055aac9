#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nbsc::economics {

/// Monetary and penalty coefficients of the procurement objective.
/// unit_price is the per-unit selling price (distinct from the demand model's
/// success probability, which the source notation also calls p).
struct EconomicParams {
  double unit_price = 25.0;
  double salvage_value = 1.0;
  double holding_cost = 2.0;       // h
  double stockout_penalty = 15.0;  // r_p
  double variance_weight = 2.0;    // kappa
  double risk_weight = 5.0;        // gamma
  double risk_exponent = 2.0;      // lambda
  double fillrate_weight = 100.0;  // eta
  double fillrate_target = 0.90;   // tau
  double adoption_scale = 1500.0;  // A
  double adoption_exponent = 2.0;  // nu, >= 1
  double a1 = 5.0;                 // marginal adoption effect
  double a2 = 3.0;                 // readiness sensitivity
  double a3 = 3.0;                 // adoption x readiness interaction
  double a4 = 4.0;                 // nonlinear adoption term weight
  double budget = 1e9;             // B
  /// Exponent of phi(alpha) inside the procurement cost; shares
  /// adoption_exponent unless overridden.
  std::optional<double> phi_exponent;
  /// When true the fill-rate penalty only charges shortfalls below tau.
  bool one_sided_fillrate = false;

  double phi(double alpha) const;
  void validate() const;
};

struct Supplier {
  std::string id;
  double base_cost = 0.0;  // c_i^0, > 0
  double readiness = 0.0;  // beta_i, in [0, 1]
};

/// A candidate decision: adoption level plus per-supplier order quantities
/// (aligned with the supplier list).
struct Scenario {
  double alpha = 0.0;
  std::vector<long long> quantities;

  long long total_quantity() const;
};

/// Per-unit procurement cost c0 - a1*alpha - a2*beta - a3*alpha*beta -
/// a4*phi(alpha), floored at zero.
struct UnitCost {
  double value = 0.0;
  bool floored = false;  // set when the raw expression went negative
};

UnitCost procurement_unit_cost(double alpha, const Supplier& supplier,
                               const EconomicParams& econ);

/// Convex implementation cost psi(alpha) = A * alpha^nu.
double adoption_cost(double alpha, const EconomicParams& econ);

/// Itemized single-replication profit terms. profit() is the signed total;
/// the components are all stored as positive magnitudes.
struct ProfitBreakdown {
  double revenue = 0.0;
  double salvage = 0.0;
  double stockout_cost = 0.0;
  double holding_cost = 0.0;
  double procurement_cost = 0.0;
  double adoption_cost = 0.0;

  double profit() const {
    return revenue + salvage - stockout_cost - holding_cost - procurement_cost -
           adoption_cost;
  }

  ProfitBreakdown& operator+=(const ProfitBreakdown& other);
};

/// Profit of one demand realization under the scenario. Throws
/// InfeasibleScenarioError when the procurement spend exceeds the budget.
ProfitBreakdown replication_profit(const Scenario& scenario, long long demand,
                                   const std::vector<Supplier>& suppliers,
                                   const EconomicParams& econ);

/// kappa * variance.
double variance_penalty(double variance, const EconomicParams& econ);

/// gamma * stockout_prob^lambda.
double risk_penalty(double stockout_prob, const EconomicParams& econ);

/// eta * (tau - fill_rate)^2, or the one-sided variant when configured.
double fillrate_penalty(double fill_rate, const EconomicParams& econ);

/// True when sum_i c(alpha, beta_i) * q_i <= budget (boundary inclusive).
bool budget_check(const Scenario& scenario, const std::vector<Supplier>& suppliers,
                  const EconomicParams& econ);

/// Total procurement spend sum_i c(alpha, beta_i) * q_i.
double procurement_spend(const Scenario& scenario,
                         const std::vector<Supplier>& suppliers,
                         const EconomicParams& econ);

}  // namespace nbsc::economics
