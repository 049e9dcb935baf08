#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "walks/series.hpp"

namespace walks {

/// Sparse polynomial with Rational coefficients over named symbols.
class MPoly {
 public:
  using Exponents = std::map<std::string, int>;
  using Term = std::pair<Exponents, Rational>;

  MPoly() = default;
  explicit MPoly(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::vector<std::string> symbols() const;
  int degree(const std::string& symbol) const;

  /// Substitutes a series for every symbol. Throws std::invalid_argument if a
  /// symbol has no binding.
  template <class C>
  Series<C> evaluate(const std::map<std::string, Series<C>>& bindings, std::size_t order) const {
    std::map<std::string, PowerCache<C>> caches;
    for (const auto& s : symbols()) {
      auto it = bindings.find(s);
      if (it == bindings.end()) throw std::invalid_argument("no binding for symbol '" + s + "'");
      caches.emplace(s, PowerCache<C>(it->second.truncated(order)));
    }
    Series<C> sum(order);
    for (const auto& [exps, c] : terms_) {
      Series<C> prod = Series<C>::constant(Ring<C>::one(), order);
      for (const auto& [s, e] : exps) prod = prod * caches.at(s)(static_cast<std::size_t>(e));
      sum = sum + prod * c;
    }
    return sum;
  }

 private:
  std::vector<Term> terms_;
};

/// Term list: [{"c": "p/q", "<symbol>": exponent, ...}, ...].
void to_json(nlohmann::json& j, const MPoly& p);
void from_json(const nlohmann::json& j, MPoly& p);

}  // namespace walks
