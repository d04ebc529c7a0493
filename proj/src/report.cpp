#include "horo/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "horo/dynkin.hpp"
#include "horo/horoclass.hpp"
#include "horo/octonion.hpp"
#include "horo/rootsys.hpp"
#include "horo/twoorbits.hpp"

namespace horo {

using nlohmann::ordered_json;

namespace {

ordered_json weight_json(const std::optional<Weight>& w) {
  if (!w) return nullptr;
  return ordered_json(w->coords);
}

void tally(ReportEnvelope& e, bool ok) {
  if (ok)
    ++e.verified;
  else
    ++e.mismatched;
}

}  // namespace

ordered_json envelope_json(const ReportEnvelope& e) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = e.command;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : e.params) params[k] = v;
  j["params"] = params;
  j["records"] = e.records;
  ordered_json summary;
  summary["verified"] = e.verified;
  summary["mismatched"] = e.mismatched;
  summary["gaps"] = e.gaps;
  j["summary"] = summary;
  return j;
}

std::string render_json(const ReportEnvelope& e) { return envelope_json(e).dump(2) + "\n"; }

namespace {

std::string tsv_cell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

std::string render_tsv(const ReportEnvelope& e) {
  std::string out;
  out += "# tool\t";
  out += kToolName;
  out += "\n# version\t";
  out += kToolVersion;
  out += "\n# command\t" + e.command + "\n";
  for (const auto& [k, v] : e.params) out += "# param\t" + k + "\t" + v + "\n";
  out += "# summary\tverified=" + std::to_string(e.verified) +
         "\tmismatched=" + std::to_string(e.mismatched) +
         "\tgaps=" + std::to_string(e.gaps) + "\n";
  std::vector<std::string> cols;
  for (const auto& r : e.records)
    for (auto it = r.begin(); it != r.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
        cols.push_back(it.key());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k) out += "\t";
    out += cols[k];
  }
  out += "\n";
  for (const auto& r : e.records) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k) out += "\t";
      if (r.contains(cols[k])) out += tsv_cell(r.at(cols[k]));
    }
    out += "\n";
  }
  return out;
}

ReportEnvelope cmd_classify(int max_rank) {
  ReportEnvelope e;
  e.command = "classify";
  e.params = {{"max_rank", std::to_string(max_rank)}};
  for (const SpecialCase& c : enumerate_special(max_rank)) {
    ClassificationVerdict v = homogeneity_verdict(c.pair);
    ordered_json r;
    r["kind"] = "special-pair";
    r["type"] = c.pair.gamma.name();
    r["alpha"] = c.pair.alpha;
    r["beta"] = c.pair.beta;
    r["case"] = c.case_label;
    r["homogeneous"] = v.homogeneous;
    r["dim"] = v.dim;
    r["model"] = v.model ? ordered_json(*v.model) : ordered_json(nullptr);
    if (v.model) {
      CaseParams cp = case_params(c);
      bool ok = v.dim == dim_homogeneous_model(c.case_label, cp.m, cp.i);
      r["dim_consistent"] = ok;
      tally(e, ok);
    } else {
      r["dim_consistent"] = nullptr;
      tally(e, true);
    }
    r["pairing"] = v.pairing_value ? ordered_json(*v.pairing_value) : ordered_json(nullptr);
    r["sections_y"] = weight_json(v.sections_Y);
    r["sections_z"] = weight_json(v.sections_Z);
    r["aut"] = v.aut ? ordered_json(v.aut->render()) : ordered_json(nullptr);
    e.records.push_back(std::move(r));
  }
  return e;
}

namespace {

std::string outcome_name(CaseOutcome o) {
  switch (o) {
    case CaseOutcome::homogeneous:
      return "homogeneous";
    case CaseOutcome::nonhomogeneous:
      return "nonhomogeneous";
    case CaseOutcome::nonsmooth:
      return "nonsmooth";
  }
  return "";
}

void add_candidate(ReportEnvelope& e, const CandidateTriple& t, const char* kind) {
  CaseVerdict v = case_verdict(t);
  ordered_json r;
  r["kind"] = kind;
  r["group"] = t.group_name();
  r["p"] = t.p_name();
  r["q"] = t.q_name();
  r["label"] = t.label;
  r["outcome"] = outcome_name(v.outcome);
  r["target"] = v.target.empty() ? ordered_json(nullptr) : ordered_json(v.target);
  r["target_dim"] = v.target_dim ? ordered_json(*v.target_dim) : ordered_json(nullptr);
  r["fiber_row"] = v.fiber_row.empty() ? ordered_json(nullptr) : ordered_json(v.fiber_row);
  r["fiber_dim"] = v.fiber_dim ? ordered_json(*v.fiber_dim) : ordered_json(nullptr);
  r["local_weight"] = weight_json(v.local_weight);
  if (v.outcome == CaseOutcome::homogeneous) {
    bool ok = dim_consistency(t);
    r["dim_consistent"] = ok;
    r["local_model_allowed"] = nullptr;
    tally(e, ok);
  } else {
    bool allowed = allowed_local_model(q_levi_diagram(t), *v.local_weight);
    bool ok = v.outcome == CaseOutcome::nonhomogeneous ? allowed : !allowed;
    r["dim_consistent"] = nullptr;
    r["local_model_allowed"] = allowed;
    tally(e, ok);
  }
  e.records.push_back(std::move(r));
}

}  // namespace

ReportEnvelope cmd_two_orbits(int max_rank) {
  ReportEnvelope e;
  e.command = "two-orbits";
  e.params = {{"max_rank", std::to_string(max_rank)}};
  auto simple = enumerate_simple_triples(max_rank);
  auto product = enumerate_product_triples(max_rank);
  for (const auto& t : simple) add_candidate(e, t, "simple-candidate");
  for (const auto& t : product) add_candidate(e, t, "product-candidate");
  for (const auto& row : levi_case_table()) {
    ordered_json r;
    r["kind"] = "levi-case";
    r["tag"] = row.tag;
    r["group"] = row.group;
    r["parabolic"] = row.parabolic;
    r["stabilizer"] = row.stabilizer;
    r["excluded"] = row.excluded;
    r["resolution"] = row.resolution;
    if (row.tag == "(ii)") {
      bool ok = true;
      for (int n = 2; n <= 6; ++n) ok = ok && levi_case_ii_dim_identity(n);
      r["dim_identity"] = ok;
      tally(e, ok);
    } else if (row.tag == "(iv)") {
      bool ok = levi_case_iv_dim_identity();
      r["dim_identity"] = ok;
      tally(e, ok);
    } else {
      r["dim_identity"] = nullptr;
    }
    e.records.push_back(std::move(r));
  }
  std::set<std::string> homog, x1, x2, nonsmooth;
  auto collect = [&](const std::vector<CandidateTriple>& v) {
    for (const auto& t : v) {
      CaseVerdict cv = case_verdict(t);
      if (cv.outcome == CaseOutcome::homogeneous)
        homog.insert(t.label);
      else if (cv.outcome == CaseOutcome::nonhomogeneous)
        (cv.target == "X1" ? x1 : x2).insert(t.label);
      else
        nonsmooth.insert(t.label);
    }
  };
  collect(simple);
  collect(product);
  ordered_json r;
  r["kind"] = "trichotomy";
  r["homogeneous"] = std::vector<std::string>(homog.begin(), homog.end());
  r["x1"] = std::vector<std::string>(x1.begin(), x1.end());
  r["x2"] = std::vector<std::string>(x2.begin(), x2.end());
  r["nonsmooth"] = std::vector<std::string>(nonsmooth.begin(), nonsmooth.end());
  e.records.push_back(std::move(r));
  return e;
}

namespace {

ordered_json z_report_json(const ZTableReport& rep, const char* basis_tag) {
  ordered_json r;
  r["kind"] = "z-table";
  r["basis"] = basis_tag;
  r["checked"] = static_cast<long long>(rep.checks.size());
  r["matched"] = static_cast<long long>(rep.checks.size()) - rep.mismatched;
  ordered_json mm = ordered_json::array();
  for (const auto& c : rep.checks) {
    if (c.match) continue;
    ordered_json m;
    m["row"] = z_names[c.row];
    m["col"] = z_names[c.col];
    m["expected"] = to_string(c.expected);
    m["computed"] = to_string(c.computed);
    mm.push_back(std::move(m));
  }
  r["mismatched"] = std::move(mm);
  return r;
}

Octonion random_octonion(std::mt19937& gen) {
  Octonion x;
  for (int k = 0; k < 8; ++k) {
    long long den = 1 + static_cast<long long>(gen() % 2);
    long long re = static_cast<long long>(gen() % 7) - 3;
    long long im = static_cast<long long>(gen() % 7) - 3;
    x.coords[k] = Scalar{Rational(re, den), Rational(im, den)};
  }
  return x;
}

}  // namespace

ReportEnvelope cmd_octonion() {
  ReportEnvelope e;
  e.command = "octonion";
  e.records.push_back(z_report_json(verify_z_table(), "printed"));

  ZRepair rep = repair_z3_search();
  ZTableReport repaired = verify_z_table(repaired_z_basis());
  ordered_json rj = z_report_json(repaired, "repaired");
  ordered_json rdesc;
  rdesc["first"] = rep.first;
  rdesc["second"] = rep.second;
  rdesc["sign"] = rep.sign;
  rj["repair"] = std::move(rdesc);
  bool repaired_ok = repaired.mismatched == 0;
  rj["passed"] = repaired_ok;
  tally(e, repaired_ok);
  e.records.push_back(std::move(rj));

  bool id_ok = mul(Octonion::unit(), Octonion::unit()) == Octonion::unit();
  for (int k = 1; k <= 7; ++k) {
    Octonion ek = Octonion::e(k);
    id_ok = id_ok && mul(Octonion::unit(), ek) == ek && mul(ek, Octonion::unit()) == ek;
  }
  {
    ordered_json r;
    r["kind"] = "identity";
    r["passed"] = id_ok;
    e.records.push_back(std::move(r));
  }
  tally(e, id_ok);

  bool comp_ok = true;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      Octonion x = a == 0 ? Octonion::unit() : Octonion::e(a);
      Octonion y = b == 0 ? Octonion::unit() : Octonion::e(b);
      comp_ok = comp_ok && norm_q(mul(x, y)) == norm_q(x) * norm_q(y);
    }
  std::mt19937 gen(20130614u);
  for (int k = 0; k < 100; ++k) {
    Octonion x = random_octonion(gen);
    Octonion y = random_octonion(gen);
    comp_ok = comp_ok && norm_q(mul(x, y)) == norm_q(x) * norm_q(y);
  }
  {
    ordered_json r;
    r["kind"] = "composition";
    r["basis_products"] = 64;
    r["random_pairs"] = 100;
    r["passed"] = comp_ok;
    e.records.push_back(std::move(r));
  }
  tally(e, comp_ok);

  int kd = wedge_kernel_dimension();
  {
    ordered_json r;
    r["kind"] = "kernel";
    r["dimension"] = kd;
    r["expected"] = 14;
    r["passed"] = kd == 14;
    e.records.push_back(std::move(r));
  }
  tally(e, kd == 14);

  auto zb = repaired_z_basis();
  bool book_ok = true;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      Octonion lhs = mul(zb[a], zb[b]) + mul(zb[b], zb[a]);
      Scalar half{Rational(1, 2)};
      Scalar pol = (norm_q(zb[a] + zb[b]) - norm_q(zb[a]) - norm_q(zb[b])) * half;
      Octonion rhs = scale(Scalar(-2) * pol, Octonion::unit());
      book_ok = book_ok && lhs == rhs;
    }
  {
    ordered_json r;
    r["kind"] = "polarization";
    r["passed"] = book_ok;
    e.records.push_back(std::move(r));
  }
  tally(e, book_ok);
  return e;
}

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void print_unified_diff(const std::vector<std::string>& a, const std::vector<std::string>& b,
                        std::ostream& err) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const int cap = 2000;
  const int max_d = std::min(n + m, cap);
  const int offset = max_d + 1;
  std::vector<int> v(2 * max_d + 3, 0);
  std::vector<std::vector<int>> trace;
  int d_final = -1;
  for (int d = 0; d <= max_d && d_final < 0; ++d) {
    trace.push_back(v);
    for (int k = -d; k <= d; k += 2) {
      int x = (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1]))
                  ? v[offset + k + 1]
                  : v[offset + k - 1] + 1;
      int y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[offset + k] = x;
      if (x >= n && y >= m) {
        d_final = d;
        break;
      }
    }
  }
  if (d_final < 0) {
    err << "(files differ in more than " << cap << " edit steps)\n";
    return;
  }
  std::vector<std::pair<char, std::string>> ops;
  int x = n, y = m;
  for (int d = d_final; d >= 0; --d) {
    const std::vector<int>& pv = trace[d];
    int k = x - y;
    int prev_k = (k == -d || (k != d && pv[offset + k - 1] < pv[offset + k + 1])) ? k + 1
                                                                                  : k - 1;
    int prev_x = pv[offset + prev_k];
    int prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      ops.push_back({' ', a[x - 1]});
      --x;
      --y;
    }
    if (d > 0) {
      if (x == prev_x)
        ops.push_back({'+', b[y - 1]});
      else
        ops.push_back({'-', a[x - 1]});
      x = prev_x;
      y = prev_y;
    }
  }
  std::reverse(ops.begin(), ops.end());

  std::vector<int> apos(ops.size()), bpos(ops.size());
  int ai = 1, bi = 1;
  for (std::size_t t = 0; t < ops.size(); ++t) {
    apos[t] = ai;
    bpos[t] = bi;
    if (ops[t].first != '+') ++ai;
    if (ops[t].first != '-') ++bi;
  }
  const std::size_t ctx = 3;
  std::size_t t = 0;
  while (t < ops.size()) {
    if (ops[t].first == ' ') {
      ++t;
      continue;
    }
    std::size_t last_change = t;
    for (std::size_t scan = t; scan < ops.size(); ++scan) {
      if (ops[scan].first != ' ')
        last_change = scan;
      else if (scan - last_change > 2 * ctx)
        break;
    }
    std::size_t h_lo = t > ctx ? t - ctx : 0;
    std::size_t h_hi = std::min(last_change + ctx, ops.size() - 1);
    int a_count = 0, b_count = 0;
    for (std::size_t u = h_lo; u <= h_hi; ++u) {
      if (ops[u].first != '+') ++a_count;
      if (ops[u].first != '-') ++b_count;
    }
    err << "@@ -" << apos[h_lo] << "," << a_count << " +" << bpos[h_lo] << "," << b_count
        << " @@\n";
    for (std::size_t u = h_lo; u <= h_hi; ++u) err << ops[u].first << ops[u].second << "\n";
    t = h_hi + 1;
  }
}

}  // namespace

int verify_all(int max_rank, const std::string& fixtures_dir, std::ostream& out,
               std::ostream& err) {
  struct Item {
    const char* name;
    std::string current;
  };
  const std::vector<Item> items = {
      {"classify.json", render_json(cmd_classify(max_rank))},
      {"two_orbits.json", render_json(cmd_two_orbits(max_rank))},
      {"octonion.json", render_json(cmd_octonion())},
  };
  bool missing = false;
  bool differs = false;
  for (const auto& it : items) {
    const std::string path = fixtures_dir + "/" + it.name;
    std::ifstream f(path, std::ios::binary);
    if (!f) {
      err << "missing fixture: " << path << "\n";
      missing = true;
      continue;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    const std::string want = ss.str();
    if (want == it.current) {
      out << "ok " << it.name << "\n";
      continue;
    }
    differs = true;
    err << "--- " << path << "\n+++ " << it.name << " (regenerated)\n";
    print_unified_diff(split_lines(want), split_lines(it.current), err);
  }
  if (missing) return 3;
  return differs ? 1 : 0;
}

}  // namespace horo
