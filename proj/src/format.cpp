#include "plie/format.hpp"

#include <json.hpp>
#include <map>
#include <sstream>

namespace plie {

using ojson = nlohmann::ordered_json;

namespace {

std::pair<std::string, std::string> split_pair_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos)
    throw Error("bracket key '" + key + "' is not of the form \"a,b\"");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

Vec coeff_map_to_vec(const GfCtx& F, const ojson& m,
                     const std::map<std::string, int>& index, int length,
                     const std::string& where) {
  Vec v(length, 0);
  if (!m.is_object())
    throw Error(where + ": expected an object of name -> integer");
  for (auto it = m.begin(); it != m.end(); ++it) {
    auto found = index.find(it.key());
    if (found == index.end())
      throw Error(where + ": unknown name '" + it.key() + "'");
    if (found->second >= length)
      throw Error(where + ": name '" + it.key() + "' is outside the even block");
    if (!it.value().is_number_integer())
      throw Error(where + ": coefficient of '" + it.key() + "' is not an integer");
    v[found->second] = F.reduce(it.value().get<long long>());
  }
  return v;
}

}  // namespace

LieSuperData parse_algebra(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("algebra file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("algebra file must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "p" && k != "even" && k != "odd" && k != "bracket" && k != "pmap")
      throw Error("unknown top-level key '" + k + "'");
  }
  if (!j.contains("p") || !j["p"].is_number_integer())
    throw Error("missing integer field 'p'");
  long long pval = j["p"].get<long long>();
  if (pval < 3 || !is_odd_prime(static_cast<std::uint64_t>(pval)))
    throw Error("p must be an odd prime >= 3, got " + std::to_string(pval));

  LieSuperData L;
  L.F = GfCtx(static_cast<Fp>(pval));

  auto read_names = [&](const char* key) {
    std::vector<std::string> names;
    if (!j.contains(key)) return names;
    if (!j[key].is_array()) throw Error(std::string(key) + " must be an array");
    for (const auto& e : j[key]) {
      if (!e.is_string()) throw Error(std::string(key) + " entries must be strings");
      names.push_back(e.get<std::string>());
    }
    return names;
  };
  std::vector<std::string> even = read_names("even");
  std::vector<std::string> odd = read_names("odd");
  L.n0 = static_cast<int>(even.size());
  L.n1 = static_cast<int>(odd.size());
  L.names = even;
  L.names.insert(L.names.end(), odd.begin(), odd.end());

  std::map<std::string, int> index;
  for (int i = 0; i < L.dim(); ++i) {
    if (!index.emplace(L.names[i], i).second)
      throw Error("duplicate basis name '" + L.names[i] + "'");
  }

  const int n = L.dim();
  L.bracket_tab.assign(std::size_t(n) * (n + 1) / 2, Vec(n, 0));
  if (j.contains("bracket")) {
    if (!j["bracket"].is_object()) throw Error("bracket must be an object");
    for (auto it = j["bracket"].begin(); it != j["bracket"].end(); ++it) {
      auto [a, b] = split_pair_key(it.key());
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end())
        throw Error("bracket pair '" + it.key() + "': unknown name '" + a + "'");
      if (ib == index.end())
        throw Error("bracket pair '" + it.key() + "': unknown name '" + b + "'");
      int i = ia->second, k = ib->second;
      if (i > k)
        throw Error("bracket pair '" + it.key() +
                    "' is out of declared order (store only pairs with the "
                    "first name not after the second)");
      L.bracket_tab[L.tri(i, k)] =
          coeff_map_to_vec(L.F, it.value(), index, n, "bracket '" + it.key() + "'");
    }
  }

  L.pmap_tab.assign(L.n0, Vec(L.n0, 0));
  if (j.contains("pmap")) {
    if (!j["pmap"].is_object()) throw Error("pmap must be an object");
    for (auto it = j["pmap"].begin(); it != j["pmap"].end(); ++it) {
      auto found = index.find(it.key());
      if (found == index.end())
        throw Error("pmap: unknown name '" + it.key() + "'");
      if (found->second >= L.n0)
        throw Error("pmap: '" + it.key() + "' is odd; the p-map is defined on "
                    "the even block only");
      L.pmap_tab[found->second] = coeff_map_to_vec(
          L.F, it.value(), index, L.n0, "pmap '" + it.key() + "'");
    }
  }
  return L;
}

std::string emit_algebra(const LieSuperData& L) {
  ojson j;
  j["p"] = L.F.p();
  j["even"] = std::vector<std::string>(L.names.begin(), L.names.begin() + L.n0);
  j["odd"] = std::vector<std::string>(L.names.begin() + L.n0, L.names.end());
  ojson bracket = ojson::object();
  for (int i = 0; i < L.dim(); ++i)
    for (int k = i; k < L.dim(); ++k) {
      const Vec& v = L.stored(i, k);
      if (is_zero_vec(v)) continue;
      ojson m = ojson::object();
      for (int t = 0; t < L.dim(); ++t)
        if (v[t]) m[L.names[t]] = v[t];
      bracket[L.names[i] + "," + L.names[k]] = std::move(m);
    }
  j["bracket"] = std::move(bracket);
  ojson pmap = ojson::object();
  for (int i = 0; i < L.n0; ++i) {
    if (is_zero_vec(L.pmap_tab[i])) continue;
    ojson m = ojson::object();
    for (int t = 0; t < L.n0; ++t)
      if (L.pmap_tab[i][t]) m[L.names[t]] = L.pmap_tab[i][t];
    pmap[L.names[i]] = std::move(m);
  }
  j["pmap"] = std::move(pmap);
  return j.dump(2) + "\n";
}

LoadedAlgebra load_verified(const std::string& text, std::uint64_t enum_cap) {
  LoadedAlgebra out;
  out.L = parse_algebra(text);
  out.axioms = verify_axioms(out.L, enum_cap);
  if (!out.axioms.passed())
    throw Error("algebra rejected: " + out.axioms.first_failure());
  return out;
}

// --- report serialization ---

namespace {

ojson property_to_json(const PropertyReport& p) {
  ojson j;
  j["condition"] = verdict_name(p.condition);
  j["oracle"] = verdict_name(p.oracle);
  j["agree"] = p.agree;
  if (p.oracle_class)
    j["oracle_class"] = *p.oracle_class;
  else
    j["oracle_class"] = nullptr;
  j["notes"] = p.notes;
  return j;
}

PropertyReport property_from_json(const ojson& j) {
  PropertyReport p;
  p.condition = verdict_from_name(j.at("condition").get<std::string>());
  p.oracle = verdict_from_name(j.at("oracle").get<std::string>());
  p.agree = j.at("agree").get<bool>();
  if (!j.at("oracle_class").is_null())
    p.oracle_class = j.at("oracle_class").get<int>();
  p.notes = j.at("notes").get<std::vector<std::string>>();
  return p;
}

ojson report_to_json(const ClassificationReport& r) {
  ojson j;
  j["algebra"] = r.algebra;
  j["p"] = r.p;
  j["n0"] = r.n0;
  j["n1"] = r.n1;
  j["dim_u"] = r.dim_u;
  j["axioms"] = r.axioms;
  ojson props;
  props["nonmatrix_pi"] = property_to_json(r.nonmatrix);
  props["lie_solvable"] = property_to_json(r.solvable);
  props["lie_nilpotent"] = property_to_json(r.nilpotent);
  props["lie_super_nilpotent"] = property_to_json(r.super_nilpotent);
  j["properties"] = std::move(props);
  j["pnil_L0L0"] = verdict_name(r.pnil_L0L0);
  j["pnil_L0L0_index"] = r.pnil_L0L0_index;
  j["witness_module_rows"] = r.witness_module_rows;
  j["witness_subspace_rows"] = r.witness_subspace_rows;
  ojson series;
  series["gamma"] = r.gamma_dims;
  series["delta"] = r.delta_dims;
  series["gamma_super"] = r.super_dims;
  j["series"] = std::move(series);
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson cj;
    cj["name"] = c.name;
    cj["status"] = c.status;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["budget_notes"] = r.budget_notes;
  ojson t = ojson::object();
  for (const auto& [k, v] : r.timing_ms) t[k] = v;
  j["timing_ms"] = std::move(t);
  return j;
}

ClassificationReport report_from_json(const ojson& j) {
  ClassificationReport r;
  r.algebra = j.at("algebra").get<std::string>();
  r.p = j.at("p").get<Fp>();
  r.n0 = j.at("n0").get<int>();
  r.n1 = j.at("n1").get<int>();
  r.dim_u = j.at("dim_u").get<std::uint32_t>();
  r.axioms = j.at("axioms").get<std::string>();
  const auto& props = j.at("properties");
  r.nonmatrix = property_from_json(props.at("nonmatrix_pi"));
  r.solvable = property_from_json(props.at("lie_solvable"));
  r.nilpotent = property_from_json(props.at("lie_nilpotent"));
  r.super_nilpotent = property_from_json(props.at("lie_super_nilpotent"));
  r.pnil_L0L0 = verdict_from_name(j.at("pnil_L0L0").get<std::string>());
  r.pnil_L0L0_index = j.at("pnil_L0L0_index").get<int>();
  r.witness_module_rows =
      j.at("witness_module_rows").get<std::vector<std::vector<long long>>>();
  r.witness_subspace_rows =
      j.at("witness_subspace_rows").get<std::vector<std::vector<long long>>>();
  r.gamma_dims = j.at("series").at("gamma").get<std::vector<int>>();
  r.delta_dims = j.at("series").at("delta").get<std::vector<int>>();
  r.super_dims = j.at("series").at("gamma_super").get<std::vector<int>>();
  for (const auto& cj : j.at("checks")) {
    CheckItem c;
    c.name = cj.at("name").get<std::string>();
    c.status = cj.at("status").get<std::string>();
    c.detail = cj.at("detail").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  r.budget_notes = j.at("budget_notes").get<std::vector<std::string>>();
  for (auto it = j.at("timing_ms").begin(); it != j.at("timing_ms").end(); ++it)
    r.timing_ms[it.key()] = it.value().get<double>();
  return r;
}

}  // namespace

std::string emit_report(const ClassificationReport& rep) {
  return report_to_json(rep).dump(2) + "\n";
}

ClassificationReport parse_report(const std::string& text) {
  try {
    return report_from_json(ojson::parse(text));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string("bad report file: ") + e.what());
  }
}

std::string emit_report_without_timing(const ClassificationReport& rep) {
  ClassificationReport r = rep;
  r.timing_ms.clear();
  return emit_report(r);
}

std::string render_report_text(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "algebra: " << rep.algebra << "  (p=" << rep.p << ", n0=" << rep.n0
     << ", n1=" << rep.n1 << ", dim u(L)=" << rep.dim_u << ")\n";
  os << "axioms: " << rep.axioms << "\n";
  auto line = [&](const char* name, const PropertyReport& p) {
    os << "  " << name << ": condition=" << verdict_name(p.condition)
       << " oracle=" << verdict_name(p.oracle)
       << (p.agree ? "  [agree]" : "  [DISAGREE]");
    if (p.oracle_class) os << "  class/length=" << *p.oracle_class;
    os << "\n";
  };
  line("non-matrix PI     ", rep.nonmatrix);
  line("Lie solvable      ", rep.solvable);
  line("Lie nilpotent     ", rep.nilpotent);
  line("Lie super-nilpotent", rep.super_nilpotent);
  auto dims = [&](const char* name, const std::vector<int>& d) {
    os << "  " << name << " dims:";
    for (int x : d) os << " " << x;
    os << "\n";
  };
  dims("gamma", rep.gamma_dims);
  dims("delta", rep.delta_dims);
  dims("gamma_super", rep.super_dims);
  for (const auto& c : rep.checks) {
    os << "  check " << c.name << ": " << c.status;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  for (const auto& b : rep.budget_notes) os << "  budget: " << b << "\n";
  return os.str();
}

}  // namespace plie
