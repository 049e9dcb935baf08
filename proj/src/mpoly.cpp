#include "walks/mpoly.hpp"

#include <algorithm>
#include <set>

namespace walks {

MPoly::MPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (const auto& [exps, c] : terms_)
    for (const auto& [s, e] : exps)
      if (e < 0) throw std::invalid_argument("negative exponent for '" + s + "'");
}

std::vector<std::string> MPoly::symbols() const {
  std::set<std::string> out;
  for (const auto& [exps, c] : terms_)
    for (const auto& [s, e] : exps)
      if (e > 0) out.insert(s);
  return {out.begin(), out.end()};
}

int MPoly::degree(const std::string& symbol) const {
  int d = 0;
  for (const auto& [exps, c] : terms_) {
    auto it = exps.find(symbol);
    if (it != exps.end()) d = std::max(d, it->second);
  }
  return d;
}

void to_json(nlohmann::json& j, const MPoly& p) {
  j = nlohmann::json::array();
  for (const auto& [exps, c] : p.terms()) {
    nlohmann::json t{{"c", to_string(c)}};
    for (const auto& [s, e] : exps) t[s] = e;
    j.push_back(std::move(t));
  }
}

void from_json(const nlohmann::json& j, MPoly& p) {
  std::vector<MPoly::Term> terms;
  for (const auto& t : j) {
    MPoly::Exponents exps;
    Rational c = 0;
    for (const auto& [key, val] : t.items()) {
      if (key == "c")
        c = parse_rational(val.get<std::string>());
      else
        exps[key] = val.get<int>();
    }
    terms.emplace_back(std::move(exps), c);
  }
  p = MPoly(std::move(terms));
}

}  // namespace walks
