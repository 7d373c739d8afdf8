// permx: command-line front end for the permx library.
//
// Exit status: 0 success, 2 invalid input or violated precondition,
// 3 resource limit, 1 anything else (including a failing selftest).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "permx/avoidance.hpp"
#include "permx/binary_matrix.hpp"
#include "permx/bounds.hpp"
#include "permx/extremal.hpp"
#include "permx/inflation.hpp"
#include "permx/io.hpp"
#include "permx/numeric.hpp"
#include "permx/permutation.hpp"
#include "permx/selftest.hpp"

namespace {

using nlohmann::json;
using namespace permx;

enum class Format { Text, Json, Csv };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  json data;
  std::string text;  // empty: pretty JSON is shown instead
  std::optional<Table> table;
  int status = 0;
};

struct Config {
  Format format = Format::Text;
  std::optional<std::uint64_t> budget_flag;
  std::uint64_t seed = 0;
  bool timing = false;

  std::uint64_t budget() const {
    if (budget_flag) return *budget_flag;
    if (const char* env = std::getenv("PERMX_BUDGET")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0) throw Error(Errc::MalformedInput, "PERMX_BUDGET must be a positive integer");
      return v;
    }
    return kDefaultNodeBudget;
  }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

/// Top-level scalar members as a single CSV row.
Table flat_table(const json& j) {
  Table t;
  std::vector<std::string> row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_structured()) continue;
    t.header.push_back(it.key());
    row.push_back(scalar_text(*it));
  }
  t.rows.push_back(std::move(row));
  return t;
}

void emit(const Config& cfg, const Output& out) {
  switch (cfg.format) {
    case Format::Json:
      std::cout << out.data.dump() << "\n";
      break;
    case Format::Csv: {
      const Table t = out.table ? *out.table : flat_table(out.data);
      for (std::size_t i = 0; i < t.header.size(); ++i) std::cout << (i ? "," : "") << csv_field(t.header[i]);
      std::cout << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
        std::cout << "\n";
      }
      break;
    }
    case Format::Text:
      std::cout << (out.text.empty() ? out.data.dump(2) + "\n" : out.text);
      break;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A matrix argument: inline JSON, @file with JSON, I<k> for the diagonal
/// matrix, or a permutation in one-line notation.
BinaryMatrix matrix_arg(const std::string& s) {
  if (!s.empty() && s[0] == '{') return io::parse_matrix(s);
  if (!s.empty() && s[0] == '@') return io::parse_matrix(read_file(s.substr(1)));
  if (s.size() > 1 && s[0] == 'I') {
    std::size_t k = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error(Errc::MalformedInput, "bad identity argument '" + s + "'");
      k = k * 10 + static_cast<std::size_t>(s[i] - '0');
    }
    return identity_matrix(k).matrix();
  }
  return to_matrix(parse_permutation(s)).matrix();
}

PermutationMatrix pattern_arg(const std::string& s) { return PermutationMatrix(matrix_arg(s)); }

std::string render(const BinaryMatrix& m) {
  std::string out;
  for (std::size_t r = 1; r <= m.rows(); ++r) {
    out += "  ";
    for (std::size_t c = 1; c <= m.cols(); ++c) out += m.at(r, c) ? '1' : '.';
    out += "\n";
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

AvoidanceLimits limits(const Config& cfg) {
  AvoidanceLimits l;
  l.node_budget = cfg.budget();
  return l;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::MalformedInput, "bad integer '" + item + "'");
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(parse_rational(item)));
  return out;
}

/// "0=0,1=1,2=3" -> {0: 0, 1: 1, 2: 3}
std::map<std::uint64_t, BigInt> parse_ex_table(const std::string& s) {
  std::map<std::uint64_t, BigInt> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(Errc::MalformedInput, "table entry must be n=value: '" + item + "'");
    const auto n = parse_u64_list(item.substr(0, eq));
    const Rational v = parse_rational(item.substr(eq + 1));
    if (n.size() != 1 || boost::multiprecision::denominator(v) != 1) {
      throw Error(Errc::MalformedInput, "bad table entry '" + item + "'");
    }
    out[n[0]] = boost::multiprecision::numerator(v);
  }
  return out;
}

std::uint64_t exact_a(double a) {
  if (!(a >= 1) || std::floor(a) != a || a > 64) {
    throw Error(Errc::PreconditionViolated, "exact evaluation needs an integer exponent a >= 1");
  }
  return static_cast<std::uint64_t>(a);
}

json schedule_params_json(const BoundParams& p) { return {{"k", p.k}, {"a", p.a}, {"c", p.c}}; }

// ---------------------------------------------------------------------------

Output cmd_contains(const std::string& host, const std::string& pattern) {
  Occurrence occ;
  const bool found = contains(parse_permutation(host), parse_permutation(pattern), &occ);
  Output o;
  o.data = {{"host", parse_permutation(host).to_string()},
            {"pattern", parse_permutation(pattern).to_string()},
            {"contains", found},
            {"witness", found ? json(occ.positions) : json(nullptr)}};
  o.text = bool_text(found) + "\n";
  return o;
}

Output cmd_matrix_contains(const std::string& host, const std::string& pattern) {
  MatrixOccurrence w;
  const bool found = matrix_contains(matrix_arg(host), matrix_arg(pattern), &w);
  Output o;
  o.data = {{"contains", found}};
  o.data["witness"] = found ? json{{"rows", w.rows}, {"cols", w.cols}} : json(nullptr);
  o.text = bool_text(found) + "\n";
  return o;
}

Output cmd_sum(const std::string& p, const std::string& q, bool skew) {
  const auto a = parse_permutation(p), b = parse_permutation(q);
  const auto r = skew ? skew_sum(a, b) : direct_sum(a, b);
  Output o;
  o.data = {{"p", a.to_string()}, {"q", b.to_string()}, {"result", r.to_string()}};
  o.text = r.to_string() + "\n";
  return o;
}

Output cmd_inflate(const std::string& skeleton, const std::vector<std::string>& blocks) {
  std::vector<Permutation> bs;
  for (const auto& b : blocks) bs.push_back(parse_permutation(b));
  const auto r = inflate(parse_permutation(skeleton), bs);
  Output o;
  o.data = {{"result", r.to_string()}};
  o.text = r.to_string() + "\n";
  return o;
}

Output cmd_decompose(const std::string& perm, std::size_t c) {
  const auto ds = blockable_decompositions(parse_permutation(perm), c);
  Output o;
  o.data = {{"permutation", parse_permutation(perm).to_string()}, {"c", c}, {"decompositions", json::array()}};
  Table t{{"skeleton", "blocks"}, {}};
  for (const auto& d : ds) {
    o.data["decompositions"].push_back(io::to_json(d));
    std::string blocks;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) blocks += (i ? " " : "") + d.blocks[i].to_string();
    t.rows.push_back({d.skeleton.to_string(), blocks});
    o.text += d.skeleton.to_string() + "[";
    for (std::size_t i = 0; i < d.blocks.size(); ++i) o.text += (i ? "," : "") + d.blocks[i].to_string();
    o.text += "]\n";
  }
  if (ds.empty()) o.text = "none\n";
  o.table = std::move(t);
  return o;
}

Output cmd_count_av(const Config& cfg, const std::string& pattern, std::size_t n) {
  const auto p = parse_permutation(pattern);
  const BigInt count = count_avoiders(p, n, limits(cfg));
  Output o;
  o.data = {{"pattern", p.to_string()}, {"n", n}, {"count", count.str()}};
  o.text = count.str() + "\n";
  return o;
}

Output cmd_sw_estimate(const Config& cfg, const std::string& pattern, std::size_t n_max) {
  const auto p = parse_permutation(pattern);
  const auto seq = sw_estimate_sequence(p, n_max, limits(cfg));
  Output o;
  o.data = {{"pattern", p.to_string()}, {"estimates", json::array()}};
  Table t{{"n", "count", "estimate"}, {}};
  for (const auto& e : seq) {
    o.data["estimates"].push_back({{"n", e.n}, {"count", e.count.str()}, {"estimate", e.value}});
    t.rows.push_back({std::to_string(e.n), e.count.str(), json(e.value).dump()});
    o.text += std::to_string(e.n) + "\t" + e.count.str() + "\t" + json(e.value).dump() + "\n";
  }
  o.table = std::move(t);
  return o;
}

Output cmd_merge_check(const Config& cfg, const std::string& host, const std::string& red, const std::string& blue) {
  MergeQuery q{parse_permutation(host), parse_permutation(red), parse_permutation(blue)};
  Coloring col;
  const bool member = merge_member(q, &col, limits(cfg));
  std::string colors;
  for (bool r : col) colors += r ? 'R' : 'B';
  Output o;
  o.data = {{"host", q.host.to_string()},
            {"red", q.red_pattern.to_string()},
            {"blue", q.blue_pattern.to_string()},
            {"member", member},
            {"coloring", member ? json(colors) : json(nullptr)}};
  o.text = bool_text(member) + (member ? " " + colors : "") + "\n";
  return o;
}

Output cmd_verify_jv(const Config& cfg, const std::string& a, const std::string& b, const std::string& c,
                     std::size_t n, bool skew) {
  const auto r = verify_jv_inclusion(parse_permutation(a), parse_permutation(b), parse_permutation(c), n,
                                     skew ? SumKind::Skew : SumKind::Direct, limits(cfg));
  Output o;
  o.data = io::to_json(r);
  o.text = std::string(r.pass ? "pass" : "fail") + " (" + std::to_string(r.checked) + " checked)" +
           (r.counterexample ? ", counterexample " + r.counterexample->to_string() : "") + "\n";
  return o;
}

Output cmd_merge_count(const Config& cfg, const std::string& red, const std::string& blue, std::size_t n) {
  const auto r = merge_count_upper_check(parse_permutation(red), parse_permutation(blue), n, limits(cfg));
  Output o;
  o.data = io::to_json(r);
  o.text = r.lhs.str() + " <= " + r.rhs.str() + " : " + (r.pass ? "pass" : "fail") + "\n" + r.lhs.str() +
           " <= " + r.rhs_values.str() + " (positions and values) : " + (r.pass_values ? "pass" : "fail") + "\n";
  return o;
}

Output cmd_exfn(const Config& cfg, const std::string& pattern, std::size_t n, std::size_t rows) {
  const auto p = pattern_arg(pattern);
  const auto r = rows ? exfn_rect_exact(p, rows, n, cfg.budget()) : exfn_exact(p, n, cfg.budget());
  Output o;
  o.data = io::to_json(r);
  o.data["n"] = n;
  o.data["rows"] = rows ? rows : n;
  o.text = "ex = " + std::to_string(r.value) + (r.proven_optimal ? "" : " (lower bound, budget exhausted)") + ", " +
           std::to_string(r.nodes_explored) + " nodes\n" + render(r.witness);
  o.status = r.proven_optimal ? 0 : 3;
  return o;
}

Output cmd_fpts(const Config& cfg, const std::string& pattern, std::size_t t, std::size_t s, std::uint64_t n_cap,
                bool columns) {
  const auto p = pattern_arg(pattern);
  const auto r = columns ? gpts_exact(p, t, s, n_cap, cfg.budget()) : fpts_exact(p, t, s, n_cap, cfg.budget());
  Output o;
  o.data = io::to_json(r);
  o.data["t"] = t;
  o.data["s"] = s;
  const std::string name = columns ? "g" : "f";
  if (r.unbounded) {
    o.text = name + " = unbounded\n";
  } else {
    o.text = name + " = " + std::to_string(r.value) +
             (r.cap_exceeded ? " (exceeds cap)" : r.proven_optimal ? "" : " (lower bound, budget exhausted)") + ", " +
             std::to_string(r.nodes_explored) + " nodes\n" + render(r.witness);
  }
  o.status = r.proven_optimal ? 0 : 3;
  return o;
}

Output cmd_lemma21(const Config& cfg, const std::string& pattern, double a, std::size_t t, std::size_t s,
                   std::size_t hyp_n) {
  const auto r = check_lemma21(pattern_arg(pattern), exact_a(a), t, s, hyp_n, cfg.budget());
  Output o;
  o.data = io::to_json(r, cfg.timing);
  o.text = std::to_string(r.lhs.value) + " <= " + to_string(r.rhs) + " : " + (r.pass ? "pass" : "fail") + "\n";
  return o;
}

Output cmd_lemma22(const Config& cfg, const std::string& pattern, double a, std::size_t c, std::size_t t,
                   std::size_t s, const std::string& x, const std::string& y) {
  const auto r =
      check_lemma22(pattern_arg(pattern), exact_a(a), c, t, s, parse_rational(x), parse_rational(y), cfg.budget());
  Output o;
  o.data = io::to_json(r, cfg.timing);
  o.text = std::to_string(r.lhs.value) + " <= " + (r.vacuous ? std::string("unbounded") : to_string(r.rhs)) + " : " +
           (r.pass ? "pass" : "fail") + "\n";
  return o;
}

Output cmd_mt(std::uint64_t k) {
  const BigInt v = marcus_tardos_bound(k);
  Output o;
  o.data = {{"k", k}, {"bound", v.str()}};
  o.text = v.str() + "\n";
  return o;
}

Output cmd_lemma21_bound(std::uint64_t k, double a, std::uint64_t t, std::uint64_t s) {
  const Rational v = lemma21_bound(k, exact_a(a), t, s);
  Output o;
  o.data = {{"k", k}, {"a", a}, {"t", t}, {"s", s}, {"bound", to_string(v)}, {"approx", to_double(v)}};
  o.text = to_string(v) + "\n";
  return o;
}

Output cmd_lemma22_rhs(std::uint64_t k, double a, std::uint64_t c, std::uint64_t t, std::uint64_t s,
                       const std::string& x, const std::string& y, const std::string& f_sub) {
  const Rational fs = parse_rational(f_sub);
  if (boost::multiprecision::denominator(fs) != 1 || fs < 0) {
    throw Error(Errc::MalformedInput, "f-sub must be a nonnegative integer");
  }
  const auto terms = lemma22_terms(k, exact_a(a), c, t, s, parse_rational(x), parse_rational(y));
  const Rational v = lemma22_rhs(k, exact_a(a), c, t, s, parse_rational(x), parse_rational(y),
                                 boost::multiprecision::numerator(fs));
  Output o;
  o.data = {{"floor_xc", terms.floor_xc},    {"choose", terms.choose.str()},
            {"sub_t", terms.sub_t},          {"sub_s", terms.sub_s},
            {"second_term", to_string(terms.second)}, {"rhs", to_string(v)},
            {"approx", to_double(v)}};
  o.text = to_string(v) + "\n";
  return o;
}

Output cmd_schedule(const BoundParams& p, bool floors) {
  const auto sc = build_schedule(p, floors);
  Output o;
  o.data = io::to_json(sc);
  o.data["checks"] = io::to_json(certify_schedule(sc))["checks"];
  Table t{{"i", "log2_t", "log2_s", "y"}, {}};
  for (const auto& st : sc.states) {
    t.rows.push_back(
        {std::to_string(st.step), json(st.log2_t).dump(), json(st.log2_s).dump(), st.y ? json(*st.y).dump() : ""});
  }
  o.table = std::move(t);
  std::ostringstream ss;
  ss << "beta = " << json(sc.beta).dump() << ", x_b = " << json(sc.x_b).dump() << ", y_b = " << json(sc.y_b).dump()
     << ", y_1 = " << json(sc.y_1).dump() << ", R_A = " << sc.R_A << "\n";
  o.text = ss.str();
  return o;
}

Output cmd_certify(const BoundParams& p, bool floors) {
  const auto sc = build_schedule(p, floors);
  const auto rep = certify_schedule(sc);
  Output o;
  o.data = io::to_json(rep);
  o.data["params"] = schedule_params_json(p);
  o.data["R_A"] = sc.R_A;
  Table t{{"name", "holds", "lhs", "rhs", "informational", "note"}, {}};
  for (const auto& c : rep.checks) {
    t.rows.push_back({c.name, bool_text(c.holds), io::number_or_null(c.lhs).dump(), io::number_or_null(c.rhs).dump(),
                      bool_text(c.informational), c.note});
    o.text += std::string(c.holds ? "ok   " : c.informational ? "info " : "FAIL ") + c.name + "  lhs=" +
              io::number_or_null(c.lhs).dump() + " rhs=" + io::number_or_null(c.rhs).dump() +
              (c.note.empty() ? "" : "  (" + c.note + ")") + "\n";
  }
  o.text += rep.all_hold() ? "certified\n" : "not certified\n";
  o.table = std::move(t);
  return o;
}

Output cmd_crude(const BoundParams& p) {
  const auto sc = build_schedule(p);
  const double v = crude_fpts_bound(sc);
  Output o;
  o.data = {{"params", schedule_params_json(p)}, {"log2_bound", v}};
  o.text = "log2 bound = " + json(v).dump() + "\n";
  return o;
}

Output cmd_alpha(double a, double c) {
  const double alpha = theorem24_alpha(a, c), exponent = theorem12_exponent(a, c);
  Output o;
  o.data = {{"a", a}, {"c", c}, {"alpha", alpha}, {"exponent", exponent}};
  o.text = "alpha = " + json(alpha).dump() + "\nexponent = " + json(exponent).dump() + "\n";
  return o;
}

Output cmd_fox_rhs(const std::string& table, std::uint64_t t, std::uint64_t s, const std::string& f,
                   const std::string& g, std::uint64_t n) {
  const auto ft = parse_ex_table(table);
  auto integer = [](const std::string& v) {
    const Rational q = parse_rational(v);
    if (boost::multiprecision::denominator(q) != 1) throw Error(Errc::MalformedInput, "not an integer: " + v);
    return BigInt(boost::multiprecision::numerator(q));
  };
  const BigInt v = fox_rhs(ft, t, s, integer(f), integer(g), n);
  Output o;
  o.data = {{"t", t}, {"s", s}, {"n", n}, {"rhs", v.str()}};
  o.text = v.str() + "\n";
  return o;
}

Output cmd_cibulka(double c_val) {
  const auto note = cibulka_note(c_val);
  Output o;
  o.data = {{"relation", note.relation}, {"square", note.square}, {"certified", note.certified}};
  o.text = note.relation + ", c^2 = " + json(note.square).dump() + " (not a certified bound)\n";
  return o;
}

Output cmd_sweep(const std::string& ks, const std::string& as, const std::string& cs) {
  Output o;
  o.data = json::array();
  Table t{{"k", "a", "c", "R_A", "y_1", "certified", "failed_checks", "log2_crude"}, {}};
  for (auto k : parse_u64_list(ks)) {
    for (double a : parse_double_list(as)) {
      for (auto c : parse_u64_list(cs)) {
        const BoundParams p{k, a, c};
        const auto sc = build_schedule(p);
        const auto rep = certify_schedule(sc);
        std::string failed;
        for (const auto& ch : rep.checks) {
          if (!ch.holds && !ch.informational) failed += (failed.empty() ? "" : "; ") + ch.name;
        }
        json crude = nullptr;
        try {
          crude = crude_fpts_bound(sc);
        } catch (const Error&) {
        }
        o.data.push_back({{"params", schedule_params_json(p)},
                          {"R_A", sc.R_A},
                          {"y_1", sc.y_1},
                          {"certified", rep.all_hold()},
                          {"failed_checks", failed},
                          {"log2_crude", crude}});
        t.rows.push_back({std::to_string(k), json(a).dump(), std::to_string(c), std::to_string(sc.R_A),
                          json(sc.y_1).dump(), bool_text(rep.all_hold()), failed, scalar_text(crude)});
      }
    }
  }
  o.table = std::move(t);
  std::ostringstream text;
  for (const auto& row : o.table->rows) {
    text << "k=" << row[0] << " a=" << row[1] << " c=" << row[2] << " R_A=" << row[3] << " certified=" << row[5]
         << (row[6].empty() ? "" : " failing: " + row[6]) << "\n";
  }
  o.text = text.str();
  return o;
}

Output cmd_min_k(double a, std::uint64_t c, std::uint64_t lo, std::uint64_t hi, const std::vector<std::string>& ignore) {
  const auto k = min_certified_k(a, c, lo, hi, ignore);
  Output o;
  o.data = {{"a", a}, {"c", c}, {"k_lo", lo}, {"k_hi", hi}, {"ignored", ignore},
            {"min_k", k ? json(*k) : json(nullptr)}};
  o.text = k ? std::to_string(*k) + "\n" : "none in range\n";
  return o;
}

Output cmd_selftest(const Config& cfg) {
  const bool progress = cfg.format == Format::Text;
  const auto results = selftest::run_all(cfg.seed, [&](const selftest::CriterionResult& r) {
    if (!progress) return;
    std::printf("%s %2d %-28s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  });
  Output o;
  o.data = selftest::to_json(results);
  Table t{{"id", "name", "pass", "detail"}, {}};
  for (const auto& r : results) t.rows.push_back({std::to_string(r.id), r.name, bool_text(r.pass), r.detail});
  o.table = std::move(t);
  o.text = selftest::all_pass(results) ? "all criteria pass\n" : "some criteria fail\n";
  o.status = selftest::all_pass(results) ? 0 : 1;
  return o;
}

int exit_code_for(Errc e) { return e == Errc::ResourceLimit ? 3 : 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation pattern avoidance and extremal 0-1 matrix toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::string format = "text";
  std::uint64_t budget = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  auto* budget_opt = app.add_option("--budget", budget, "Search node budget (also PERMX_BUDGET)")
                         ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Selftest ordering seed; never affects results");
  app.add_flag("--timing", cfg.timing, "Include wall-clock times in reports");

  std::function<Output()> action;
  auto on = [&](CLI::App* sub, std::function<Output()> f) { sub->callback([&action, f] { action = f; }); };

  // Permutations.
  std::string host, pattern, red, blue, p_s, q_s, a_s, b_s, c_s, skeleton, x_s = "", y_s = "", f_sub, table;
  std::string f_s, g_s, ks, as_list, cs_list;
  std::vector<std::string> blocks, ignore;
  std::size_t n = 0, t = 0, s = 0, c = 0, rows = 0, n_max = 0, hyp_n = 4;
  std::uint64_t k = 0, n_cap = std::numeric_limits<std::uint64_t>::max(), k_lo = 2, k_hi = 1'000'000;
  double a = 1, c_real = 2, c_val = 0;
  bool skew = false, floors = false;

  auto* sub = app.add_subcommand("contains", "Does host contain pattern?");
  sub->add_option("--host", host)->required();
  sub->add_option("--pattern", pattern)->required();
  on(sub, [&] { return cmd_contains(host, pattern); });

  sub = app.add_subcommand("matrix-contains", "Submatrix containment (JSON, @file, I<k> or permutation)");
  sub->add_option("--host", host)->required();
  sub->add_option("--pattern", pattern)->required();
  on(sub, [&] { return cmd_matrix_contains(host, pattern); });

  sub = app.add_subcommand("sum", "Direct sum p + q");
  sub->add_option("--p", p_s)->required();
  sub->add_option("--q", q_s)->required();
  on(sub, [&] { return cmd_sum(p_s, q_s, false); });

  sub = app.add_subcommand("skew", "Skew sum p - q");
  sub->add_option("--p", p_s)->required();
  sub->add_option("--q", q_s)->required();
  on(sub, [&] { return cmd_sum(p_s, q_s, true); });

  sub = app.add_subcommand("inflate", "Inflate a skeleton by blocks");
  sub->add_option("--skeleton", skeleton)->required();
  sub->add_option("--blocks", blocks)->required();
  on(sub, [&] { return cmd_inflate(skeleton, blocks); });

  sub = app.add_subcommand("decompose", "All decompositions into c blocks");
  sub->add_option("--perm", p_s)->required();
  sub->add_option("--c", c)->required();
  on(sub, [&] { return cmd_decompose(p_s, c); });

  // Avoidance.
  sub = app.add_subcommand("count-av", "Count n-permutations avoiding a pattern");
  sub->add_option("--pattern", pattern)->required();
  sub->add_option("--n", n)->required();
  on(sub, [&] { return cmd_count_av(cfg, pattern, n); });

  sub = app.add_subcommand("sw-estimate", "|Av_n|^(1/n) for n = 1..n-max");
  sub->add_option("--pattern", pattern)->required();
  sub->add_option("--n-max", n_max)->required();
  on(sub, [&] { return cmd_sw_estimate(cfg, pattern, n_max); });

  sub = app.add_subcommand("merge-check", "Is host a merge of a red and a blue avoider?");
  sub->add_option("--host", host)->required();
  sub->add_option("--red", red)->required();
  sub->add_option("--blue", blue)->required();
  on(sub, [&] { return cmd_merge_check(cfg, host, red, blue); });

  sub = app.add_subcommand("verify-jv", "Check Av_n(A+B+C) is inside Av(A+B) merged with Av(B+C)");
  sub->add_option("--A", a_s)->required();
  sub->add_option("--B", b_s)->required();
  sub->add_option("--C", c_s)->required();
  sub->add_option("--n", n)->required();
  sub->add_flag("--skew", skew, "Use skew sums");
  on(sub, [&] { return cmd_verify_jv(cfg, a_s, b_s, c_s, n, skew); });

  sub = app.add_subcommand("merge-count", "Compare merge size with the coloring union bound");
  sub->add_option("--red", red)->required();
  sub->add_option("--blue", blue)->required();
  sub->add_option("--n", n)->required();
  on(sub, [&] { return cmd_merge_count(cfg, red, blue, n); });

  // Extremal functions.
  sub = app.add_subcommand("exfn", "Exact ex_P(n)");
  sub->add_option("--pattern", pattern)->required();
  sub->add_option("--n", n)->required();
  sub->add_option("--rows", rows, "Row count for an m x n host (default n)");
  on(sub, [&] { return cmd_exfn(cfg, pattern, n, rows); });

  for (bool columns : {false, true}) {
    sub = app.add_subcommand(columns ? "gpts" : "fpts", columns ? "Exact g_P(t, s)" : "Exact f_P(t, s)");
    sub->add_option("--pattern", pattern)->required();
    sub->add_option("--t", t)->required();
    sub->add_option("--s", s)->required();
    sub->add_option("--n-cap", n_cap, "Stop once more rows than this are found");
    on(sub, [&, columns] { return cmd_fpts(cfg, pattern, t, s, n_cap, columns); });
  }

  sub = app.add_subcommand("check-lemma21", "Compare f_P(t, s) with k^a t / (s - k^a)");
  sub->add_option("--pattern", pattern)->required();
  sub->add_option("--a", a)->required();
  sub->add_option("--t", t)->required();
  sub->add_option("--s", s)->required();
  sub->add_option("--hyp-n", hyp_n, "Check ex_P(n) <= k^a n up to this n");
  on(sub, [&] { return cmd_lemma21(cfg, pattern, a, t, s, hyp_n); });

  sub = app.add_subcommand("check-lemma22", "Compare f_P(t, s) with the block recursion bound");
  sub->add_option("--pattern", pattern)->required();
  sub->add_option("--a", a)->required();
  sub->add_option("--c", c)->required();
  sub->add_option("--t", t)->required();
  sub->add_option("--s", s)->required();
  sub->add_option("--x", x_s)->required();
  sub->add_option("--y", y_s)->required();
  on(sub, [&] { return cmd_lemma22(cfg, pattern, a, c, t, s, x_s, y_s); });

  // Bounds.
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and schedules");
  bounds->require_subcommand(1);

  sub = bounds->add_subcommand("mt", "2 k^4 C(k^2, k)");
  sub->add_option("--k", k)->required();
  on(sub, [&] { return cmd_mt(k); });

  sub = bounds->add_subcommand("lemma21", "k^a t / (s - k^a)");
  sub->add_option("--k", k)->required();
  sub->add_option("--a", a)->required();
  sub->add_option("--t", t)->required();
  sub->add_option("--s", s)->required();
  on(sub, [&] { return cmd_lemma21_bound(k, a, t, s); });

  sub = bounds->add_subcommand("lemma22-rhs", "Block recursion bound for a given f on shrunken arguments");
  sub->add_option("--k", k)->required();
  sub->add_option("--a", a)->required();
  sub->add_option("--c", c)->required();
  sub->add_option("--t", t)->required();
  sub->add_option("--s", s)->required();
  sub->add_option("--x", x_s)->required();
  sub->add_option("--y", y_s)->required();
  sub->add_option("--f-sub", f_sub)->required();
  on(sub, [&] { return cmd_lemma22_rhs(k, a, c, t, s, x_s, y_s, f_sub); });

  for (const char* name : {"schedule", "certify", "crude"}) {
    sub = bounds->add_subcommand(name, std::string(name) + " for the (t_i, s_i) recursion");
    sub->add_option("--k", k)->required();
    sub->add_option("--a", a)->required();
    sub->add_option("--c", c)->required();
    if (std::string(name) != "crude") sub->add_flag("--floors", floors, "Apply floors in the recursion");
    const std::string which = name;
    on(sub, [&, which] {
      const BoundParams p{k, a, c};
      if (which == "schedule") return cmd_schedule(p, floors);
      if (which == "certify") return cmd_certify(p, floors);
      return cmd_crude(p);
    });
  }

  sub = bounds->add_subcommand("alpha", "Extremal and Stanley-Wilf exponents");
  sub->add_option("--a", a)->required();
  sub->add_option("--c", c_real)->required();
  on(sub, [&] { return cmd_alpha(a, c_real); });

  sub = bounds->add_subcommand("fox-rhs", "ex(s-1) ex(n) + ex(t) (f + g) n");
  sub->add_option("--ex", table, "Table as n=value,n=value,...")->required();
  sub->add_option("--t", t)->required();
  sub->add_option("--s", s)->required();
  sub->add_option("--f", f_s)->required();
  sub->add_option("--g", g_s)->required();
  sub->add_option("--n", n)->required();
  on(sub, [&] { return cmd_fox_rhs(table, t, s, f_s, g_s, n); });

  sub = bounds->add_subcommand("cibulka", "The asymptotic relation between L and c");
  sub->add_option("--c-val", c_val)->required();
  on(sub, [&] { return cmd_cibulka(c_val); });

  sub = bounds->add_subcommand("sweep", "Certify a grid of (k, a, c)");
  sub->add_option("--k", ks, "Comma-separated k values")->required();
  sub->add_option("--a", as_list, "Comma-separated a values")->required();
  sub->add_option("--c", cs_list, "Comma-separated c values")->required();
  on(sub, [&] { return cmd_sweep(ks, as_list, cs_list); });

  sub = bounds->add_subcommand("min-k", "Smallest certifying k");
  sub->add_option("--a", a)->required();
  sub->add_option("--c", c)->required();
  sub->add_option("--k-lo", k_lo);
  sub->add_option("--k-hi", k_hi);
  sub->add_option("--ignore", ignore, "Check names to leave out");
  on(sub, [&] { return cmd_min_k(a, c, k_lo, k_hi, ignore); });

  sub = app.add_subcommand("selftest", "Run the acceptance suite");
  on(sub, [&] { return cmd_selftest(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  if (budget_opt->count()) cfg.budget_flag = budget;

  try {
    const Output out = action();
    emit(cfg, out);
    return out.status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
