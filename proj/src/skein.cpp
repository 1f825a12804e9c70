#include "orbsnake/skein.hpp"

#include <fstream>

namespace orbsnake {

using nlohmann::json;

LaurentPoly chi(const Multicurve& c, const Triangulation& t) {
  LaurentPoly r = 1;
  for (const auto& d : c) r *= chi(d, t);
  return r;
}

std::pair<LaurentPoly, std::vector<LaurentPoly>> skein_system(const SkeinFixture& f) {
  const Triangulation& t = f.triangulation;
  if (f.relation == SkeinRelation::TwoTerm) {
    std::vector<LaurentPoly> basis;
    for (const auto& term : f.terms) {
      LaurentPoly v = chi(term.curves, t);
      basis.push_back(term.sign < 0 ? -v : v);
    }
    return {chi(f.curves, t), basis};
  }
  LaurentPoly b1 = chi(f.beta1, t), b2 = chi(f.beta2, t);
  return {chi(f.gamma1, t) * chi(f.gamma2, t), {b1 * b1, LaurentPoly(CoefPoly::lambda(f.order)) * b1 * b2, b2 * b2}};
}

namespace {

bool check(const SkeinFixture& f, const std::vector<LaurentPoly>& ys) {
  auto [lhs, basis] = skein_system(f);
  if (ys.size() != basis.size()) throw Error(ErrorKind::Input, "fixture " + f.name + " has the wrong number of Y's");
  LaurentPoly rhs;
  for (std::size_t i = 0; i < basis.size(); ++i) rhs += ys[i] * basis[i];
  return lhs == rhs;
}

bool pure_y(const Monomial& m) {
  for (const auto& [v, e] : m)
    if (!v.is_y || e < 0) return false;
  return true;
}

bool solve_rec(const LaurentPoly& rem, const std::vector<LaurentPoly>& basis, std::vector<std::optional<LaurentPoly>>& ys) {
  if (rem.is_zero()) return true;
  const auto& [lead, coef] = *rem.terms().begin();
  std::vector<std::size_t> cand;
  std::vector<Monomial> quot;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (ys[i] || basis[i].is_zero()) continue;
    Monomial q = mono_mul(lead, mono_inv(basis[i].terms().begin()->first));
    if (!pure_y(q)) continue;
    cand.push_back(i);
    quot.push_back(q);
  }
  const std::size_t k = cand.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    CoefPoly sum;
    for (std::size_t s = 0; s < k; ++s)
      if (mask >> s & 1) sum += basis[cand[s]].terms().begin()->second;
    if (sum != coef) continue;
    LaurentPoly next = rem;
    for (std::size_t s = 0; s < k; ++s) {
      if (!(mask >> s & 1)) continue;
      LaurentPoly y = LaurentPoly::term(quot[s], 1);
      ys[cand[s]] = y;
      next -= y * basis[cand[s]];
    }
    if (solve_rec(next, basis, ys)) return true;
    for (std::size_t s = 0; s < k; ++s)
      if (mask >> s & 1) ys[cand[s]].reset();
  }
  return false;
}

json y_to_json(const LaurentPoly& y) {
  if (y.is_zero()) return nullptr;
  if (!y.is_monomial() || y.terms().begin()->second != CoefPoly(1) || !pure_y(y.terms().begin()->first))
    throw Error(ErrorKind::Input, "coefficient " + y.str() + " is not a y-monomial");
  json j = json::array();
  for (const auto& [v, e] : y.terms().begin()->first) j.push_back({v.id, e});
  return j;
}

LaurentPoly y_from_json(const json& j) {
  if (j.is_null()) return 0;
  LaurentPoly y = 1;
  for (const auto& p : j) y *= LaurentPoly::y(p.at(0).get<int>(), p.at(1).get<int>());
  return y;
}

json curves_to_json(const Multicurve& c) {
  json j = json::array();
  for (const auto& d : c) j.push_back(to_json(d));
  return j;
}

Multicurve curves_from_json(const json& j) {
  Multicurve c;
  for (const auto& d : j) c.push_back(curve_from_json(d));
  return c;
}

}  // namespace

bool verify_two_term(const SkeinFixture& f) {
  if (f.relation != SkeinRelation::TwoTerm) throw Error(ErrorKind::Input, "fixture " + f.name + " is not two-term");
  std::vector<LaurentPoly> ys;
  for (const auto& term : f.terms) ys.push_back(term.y);
  return check(f, ys);
}

bool verify_three_term(const SkeinFixture& f) {
  if (f.relation != SkeinRelation::ThreeTerm) throw Error(ErrorKind::Input, "fixture " + f.name + " is not three-term");
  return check(f, f.y);
}

bool verify_skein(const SkeinFixture& f) {
  return f.relation == SkeinRelation::TwoTerm ? verify_two_term(f) : verify_three_term(f);
}

std::optional<std::vector<LaurentPoly>> solve_y_monomials(const LaurentPoly& lhs, const std::vector<LaurentPoly>& basis) {
  std::vector<std::optional<LaurentPoly>> ys(basis.size());
  if (!solve_rec(lhs, basis, ys)) return std::nullopt;
  std::vector<LaurentPoly> r;
  for (const auto& y : ys) r.push_back(y ? *y : LaurentPoly(0));
  return r;
}

SkeinFixture skein_fixture_from_json(const json& j, const std::string& data_dir) {
  try {
    SkeinFixture f;
    f.name = j.value("name", "");
    if (j.contains("triangulation")) {
      f.triangulation = triangulation_from_json(j.at("triangulation"));
    } else {
      std::string path = data_dir + "/" + j.at("triangulation_file").get<std::string>();
      std::ifstream in(path);
      if (!in) throw Error(ErrorKind::Input, "cannot open triangulation file " + path);
      f.triangulation = triangulation_from_json(json::parse(in));
    }
    const std::string rel = j.at("relation").get<std::string>();
    if (rel == "two_term") {
      f.relation = SkeinRelation::TwoTerm;
      f.curves = curves_from_json(j.at("multicurve"));
      for (const auto& r : j.at("resolutions"))
        f.terms.push_back({r.value("sign", 1), y_from_json(r.at("y")), curves_from_json(r.at("multicurve"))});
      if (f.terms.size() != 2) throw Error(ErrorKind::Input, "two-term fixture needs two resolutions");
    } else if (rel == "three_term") {
      f.relation = SkeinRelation::ThreeTerm;
      f.gamma1 = curve_from_json(j.at("gamma1"));
      f.gamma2 = curve_from_json(j.at("gamma2"));
      f.beta1 = curve_from_json(j.at("beta1"));
      f.beta2 = curve_from_json(j.at("beta2"));
      f.order = j.at("order").get<int>();
      for (const auto& y : j.at("y")) f.y.push_back(y_from_json(y));
      if (f.y.size() != 3) throw Error(ErrorKind::Input, "three-term fixture needs three Y's");
    } else {
      throw Error(ErrorKind::Input, "unknown relation " + rel);
    }
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Input, std::string("malformed skein fixture: ") + e.what());
  }
}

json to_json(const SkeinFixture& f) {
  json j{{"schema_version", kSchemaVersion}, {"name", f.name}, {"triangulation", to_json(f.triangulation)}};
  if (f.relation == SkeinRelation::TwoTerm) {
    j["relation"] = "two_term";
    j["multicurve"] = curves_to_json(f.curves);
    j["resolutions"] = json::array();
    for (const auto& t : f.terms)
      j["resolutions"].push_back({{"sign", t.sign}, {"y", y_to_json(t.y)}, {"multicurve", curves_to_json(t.curves)}});
  } else {
    j["relation"] = "three_term";
    j["gamma1"] = to_json(f.gamma1);
    j["gamma2"] = to_json(f.gamma2);
    j["beta1"] = to_json(f.beta1);
    j["beta2"] = to_json(f.beta2);
    j["order"] = f.order;
    j["y"] = json::array();
    for (const auto& y : f.y) j["y"].push_back(y_to_json(y));
  }
  return j;
}

}  // namespace orbsnake
