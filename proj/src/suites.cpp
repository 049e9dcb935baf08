#include "walks/suites.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "walks/algebraic.hpp"
#include "walks/closed_forms.hpp"
#include "walks/decompose.hpp"
#include "walks/identities.hpp"

namespace walks {

bool SuiteReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.pass; });
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const SuiteEntry& e) { return !e.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "closed-forms", "params", "endpoints", "quartics"};
  return names;
}

namespace {

template <class Entry>
std::vector<const Entry*> select(const std::vector<Entry>& all, const std::vector<std::string>& ids) {
  std::vector<const Entry*> out;
  if (ids.empty()) {
    for (const auto& e : all) out.push_back(&e);
    return out;
  }
  for (const auto& id : ids) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Entry& e) { return e.id == id; });
    if (it == all.end()) throw std::invalid_argument("unknown id '" + id + "'");
    out.push_back(&*it);
  }
  return out;
}

std::string mismatch_at(std::size_t t) { return "first mismatch at t^" + std::to_string(t); }

}  // namespace

SuiteReport identity_suite(const SuiteOptions& options) {
  std::vector<std::string> ids = options.ids;
  if (ids.empty())
    for (const auto& c : identity_catalog()) ids.push_back(c.id);
  for (const auto& id : ids)
    if (std::none_of(identity_catalog().begin(), identity_catalog().end(), [&](const auto& c) { return c.id == id; }))
      throw std::invalid_argument("unknown id '" + id + "'");
  SuiteReport r{"identities", {}};
  for (const Verdict& v : verify_all(ids, options.order, options.heavy_order, options.threads)) {
    SuiteEntry e{v.id, v.anchor, v.pass, v.order_checked, std::to_string(v.checks) + " checks"};
    if (v.failure) {
      const auto& f = *v.failure;
      e.detail = f.check + ": t^" + std::to_string(f.t) + " x^" + std::to_string(f.i) + " y^" + std::to_string(f.j) +
                 " lhs " + f.lhs + " rhs " + f.rhs;
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

SuiteReport closed_form_suite(const SuiteOptions& options) {
  SuiteReport r{"closed-forms", {}};
  for (const ClosedFormEntry* e : select(ClosedFormCatalog::builtin().entries(), options.ids)) {
    SuiteEntry s{e->id, e->anchor, true, static_cast<std::size_t>(options.max_length), ""};
    const auto tables = count_walks_upto(e->model(), static_cast<int>(options.max_length));
    for (long len = 0; len <= options.max_length; len += 2) {
      const BigInt dp = tables[static_cast<std::size_t>(len)].at(e->endpoint);
      const BigInt cf = eval_closed_form_at_length(*e, len);
      if (cf != dp) {
        s.pass = false;
        s.detail = "length " + std::to_string(len) + ": closed form " + cf.get_str() + ", walks " + dp.get_str();
        break;
      }
    }
    if (s.pass) s.detail = "lengths 0.." + std::to_string(options.max_length);
    r.entries.push_back(std::move(s));
  }
  return r;
}

SuiteReport param_suite(const SuiteOptions& options) {
  SuiteReport r{"params", {}};
  for (const ParamEntry* p : select(AlgebraicCatalog::builtin().params(), options.ids)) {
    SuiteEntry s{p->id, p->anchor, false, options.order, ""};
    auto diff = first_difference(eval_param(p->id, options.order), param_target(p->id, options.order));
    s.pass = !diff;
    s.detail = diff ? mismatch_at(*diff) : p->change + " change of variables";
    r.entries.push_back(std::move(s));
  }
  return r;
}

SuiteReport endpoint_suite(const SuiteOptions& options) {
  SuiteReport r{"endpoints", {}};
  for (const EndpointEntry* e : select(AlgebraicCatalog::builtin().endpoints(), options.ids)) {
    auto diff = endpoint_rational_check(e->id, options.order);
    r.entries.push_back({e->id, e->anchor, !diff, options.order, diff ? mismatch_at(*diff) : ""});
  }
  if (options.ids.empty()) {
    const WalkModel sq(StepSet::square(), Region::ThreeQuadrant, {0, 0});
    const WalkModel dg(StepSet::diagonal(), Region::ThreeQuadrant, {0, 0});
    auto diff = first_difference(endpoint_series(sq, {-1, 0}, options.order), endpoint_series(dg, {-1, 1}, options.order));
    r.entries.push_back({"COINCIDENCE", "square c(-1,0) and diagonal c(-1,1) from the origin have one series", !diff,
                         options.order, diff ? mismatch_at(*diff) : ""});
  }
  return r;
}

SuiteReport quartic_suite(const SuiteOptions& options) {
  const std::size_t n = options.order;
  const auto& cat = AlgebraicCatalog::builtin();
  const BoundaryValues dp = boundary_values_from_walks(n);
  struct Row {
    std::string id;
    const ScalarSeries* series;
    std::string relation;
    std::string value;
  };
  const std::vector<Row> rows = {
      {"S1_SQUARE", &dp.s1_square, "S1_QUARTIC", "S1"},
      {"S1_DIAGONAL", &dp.s1_diagonal, "S1_QUARTIC", "S1"},
      {"P0_SQUARE", &dp.p0_square, "P0_QUARTIC", "P0_SQ"},
      {"F0_DIAGONAL", &dp.f0_diagonal, "F0_QUARTIC", "F0_DIAG"},
  };
  SuiteReport r{"quartics", {}};
  for (const Row& row : rows) {
    if (!options.ids.empty() && std::find(options.ids.begin(), options.ids.end(), row.id) == options.ids.end()) continue;
    SuiteEntry s{row.id, cat.relation(row.relation).anchor, true, n, ""};
    if (auto bad = check_poly_relation(*row.series, cat.relation(row.relation).poly)) {
      s.pass = false;
      s.detail = row.relation + " " + mismatch_at(*bad);
    } else if (auto diff = first_difference(*row.series, to_scalar(cat.value(row.value).expr.evaluate(n)))) {
      s.pass = false;
      s.detail = row.value + " " + mismatch_at(*diff);
    } else {
      s.detail = row.relation + " and " + row.value;
    }
    r.entries.push_back(std::move(s));
  }
  return r;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "identities") return identity_suite(options);
  if (name == "closed-forms") return closed_form_suite(options);
  if (name == "params") return param_suite(options);
  if (name == "endpoints") return endpoint_suite(options);
  if (name == "quartics") return quartic_suite(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

void to_json(nlohmann::json& j, const SuiteEntry& e) {
  j = nlohmann::json{{"id", e.id},       {"anchor", e.anchor},          {"checked", e.checked},
                     {"verdict", e.pass ? "pass" : "fail"}, {"detail", e.detail}};
}

void to_json(nlohmann::json& j, const SuiteReport& r) {
  j = nlohmann::json{{"suite", r.suite}, {"pass", r.pass()}, {"failures", r.failures()}, {"entries", r.entries}};
}

std::string format_text(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& e : r.entries)
    os << std::left << std::setw(20) << e.id << std::setw(6) << e.checked << (e.pass ? "pass  " : "FAIL  ") << e.detail
       << "\n";
  os << r.suite << ": " << r.entries.size() - r.failures() << "/" << r.entries.size() << " pass\n";
  return os.str();
}

std::string format_csv(const SuiteReport& r) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::ostringstream os;
  os << "suite,id,checked,verdict,detail\n";
  for (const auto& e : r.entries)
    os << r.suite << "," << e.id << "," << e.checked << "," << (e.pass ? "pass" : "fail") << "," << quote(e.detail)
       << "\n";
  return os.str();
}

}  // namespace walks
