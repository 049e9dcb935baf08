#include "walks/closed_forms.hpp"

#include <stdexcept>

#include "walks/data.hpp"

namespace walks {

Rational rising_factorial(const Rational& a, long n) {
  if (n < 0) throw std::invalid_argument("rising factorial of negative length");
  Rational r = 1;
  for (long k = 0; k < n; ++k) r *= a + k;
  return r;
}

BigInt quadrant_square_count(long i, long j, long n) {
  if (i < 0 || j < 0) throw std::invalid_argument("quadrant endpoint must be nonnegative");
  if (n < 0) throw std::invalid_argument("walk length must be nonnegative");
  if ((n - i - j) % 2 != 0) return 0;
  Rational v = make_rational((i + 1) * (j + 1), (n + 1) * (n + 2));
  v *= Rational(binomial(n + 2, (n - i - j) / 2) * binomial(n + 2, (n + i - j + 2) / 2));
  return to_integer(v);
}

BigInt quadrant_diag_count(long i, long j, long n) {
  if (i < 0 || j < 0) throw std::invalid_argument("quadrant endpoint must be nonnegative");
  if (n < 0) throw std::invalid_argument("walk length must be nonnegative");
  if ((n - i) % 2 != 0 || (n - j) % 2 != 0) return 0;
  Rational v = make_rational((i + 1) * (j + 1), (1 + (n + i) / 2) * (1 + (n + j) / 2));
  v *= Rational(binomial(n, (n + i) / 2) * binomial(n, (n + j) / 2));
  return to_integer(v);
}

BigInt gessel_count(long n) {
  if (n < 0) throw std::invalid_argument("walk length must be nonnegative");
  BigInt p16;
  mpz_ui_pow_ui(p16.get_mpz_t(), 16, static_cast<unsigned long>(n));
  Rational v = Rational(p16) * rising_factorial(make_rational(1, 2), n) * rising_factorial(make_rational(5, 6), n) /
               (rising_factorial(2, n) * rising_factorial(make_rational(5, 3), n));
  return to_integer(v);
}

Rational HypTermSpec::evaluate(long n) const {
  Rational pre = 0, power = 1;
  for (const auto& c : prefactor) {
    pre += c * power;
    power *= n;
  }
  if (sgn(pre) == 0) return 0;
  Rational v = pre;
  mpq_class b = 1;
  for (long k = 0; k < n; ++k) b *= base;
  v *= b;
  for (const auto& p : numerator) v *= rising_factorial(p.a, n + p.shift);
  for (const auto& p : denominator) {
    Rational d = rising_factorial(p.a, n + p.shift);
    if (sgn(d) == 0) throw std::domain_error("hypergeometric term has a vanishing denominator");
    v /= d;
  }
  return v;
}

WalkModel ClosedFormEntry::model() const { return WalkModel(parse_lattice(lattice), region, start); }

Rational ClosedFormEntry::evaluate(long n) const {
  if (n < 0) throw std::invalid_argument("index must be nonnegative");
  Rational sum = 0;
  for (const auto& t : terms) sum += t.evaluate(n);
  return sum;
}

BigInt eval_closed_form(const ClosedFormEntry& entry, long n) {
  Rational v = entry.evaluate(n);
  if (!is_integer(v))
    throw std::domain_error(entry.id + " at n = " + std::to_string(n) + " is not an integer: " + to_string(v));
  return v.get_num();
}

BigInt eval_closed_form(const std::string& id, long n) {
  return eval_closed_form(ClosedFormCatalog::builtin().find(id), n);
}

BigInt eval_closed_form_at_length(const ClosedFormEntry& entry, long length) {
  if (length < 0 || length % 2 != 0)
    throw std::invalid_argument(entry.id + " is defined for even lengths only, got " + std::to_string(length));
  return eval_closed_form(entry, length / 2);
}

ClosedFormCatalog::ClosedFormCatalog(std::vector<ClosedFormEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t a = 0; a < entries_.size(); ++a)
    for (std::size_t b = a + 1; b < entries_.size(); ++b)
      if (entries_[a].id == entries_[b].id) throw std::invalid_argument("duplicate catalog id " + entries_[a].id);
}

ClosedFormCatalog ClosedFormCatalog::load(const std::filesystem::path& path) {
  return load_json(path).get<ClosedFormCatalog>();
}

const ClosedFormCatalog& ClosedFormCatalog::builtin() {
  static const ClosedFormCatalog catalog = load(data_dir() / "closed_forms.json");
  return catalog;
}

const ClosedFormEntry& ClosedFormCatalog::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown closed-form id '" + id + "'");
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json params_to_json(const std::vector<ShiftedParam>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back({to_string(p.a), p.shift});
  return out;
}

std::vector<ShiftedParam> params_from_json(const nlohmann::json& j) {
  std::vector<ShiftedParam> out;
  for (const auto& p : j) {
    int shift = p.at(1).get<int>();
    if (shift < 0) throw std::invalid_argument("negative parameter shift");
    out.push_back({parse_rational(p.at(0).get<std::string>()), shift});
  }
  return out;
}

}  // namespace

void to_json(nlohmann::json& j, const HypTermSpec& t) {
  nlohmann::json pre = nlohmann::json::array();
  for (const auto& c : t.prefactor) pre.push_back(to_string(c));
  j = {{"prefactor", pre},
       {"base", to_string(t.base)},
       {"numerator", params_to_json(t.numerator)},
       {"denominator", params_to_json(t.denominator)}};
}

void from_json(const nlohmann::json& j, HypTermSpec& t) {
  t.prefactor.clear();
  for (const auto& c : j.at("prefactor")) t.prefactor.push_back(parse_rational(c.get<std::string>()));
  t.base = parse_rational(j.at("base").get<std::string>());
  t.numerator = params_from_json(j.at("numerator"));
  t.denominator = params_from_json(j.at("denominator"));
}

void to_json(nlohmann::json& j, const ClosedFormEntry& e) {
  j = {{"id", e.id},
       {"anchor", e.anchor},
       {"lattice", e.lattice},
       {"region", to_string(e.region)},
       {"start", {e.start.i, e.start.j}},
       {"endpoint", {e.endpoint.i, e.endpoint.j}},
       {"terms", e.terms}};
}

void from_json(const nlohmann::json& j, ClosedFormEntry& e) {
  e.id = j.at("id").get<std::string>();
  e.anchor = j.value("anchor", "");
  e.lattice = j.at("lattice").get<std::string>();
  parse_lattice(e.lattice);
  e.region = parse_region(j.at("region").get<std::string>());
  e.start = {j.at("start").at(0).get<int>(), j.at("start").at(1).get<int>()};
  e.endpoint = {j.at("endpoint").at(0).get<int>(), j.at("endpoint").at(1).get<int>()};
  e.terms = j.at("terms").get<std::vector<HypTermSpec>>();
}

void to_json(nlohmann::json& j, const ClosedFormCatalog& c) { j = {{"entries", c.entries()}}; }

void from_json(const nlohmann::json& j, ClosedFormCatalog& c) {
  c = ClosedFormCatalog(j.at("entries").get<std::vector<ClosedFormEntry>>());
}

}  // namespace walks
