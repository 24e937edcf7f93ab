// Copyright 2026 The gmspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <sstream>

#include "gmspec/cohn.hpp"
#include "gmspec/errors.hpp"
#include "gmspec/lattice.hpp"
#include "gmspec/spectrum.hpp"
#include "serialize.hpp"
#include "tables.hpp"
#include "verify.hpp"

namespace gmspec::cli {

namespace {

struct Options {
  std::string k = "0,0,0";
  std::string sigma = "id";
  std::string t;
  std::string seq;
  std::string from, to;
  std::string method = "closed";
  std::string suite = "all";
  int depth = 2;
  long kmax = -1;
  long bound = 0;
  std::string format = "text";
  std::string out_path;
};

// One command's output in all three formats; a verification failure sets
// exit_code.
struct Output {
  std::string text;
  json data;
  std::string csv;
  int exit_code = kOk;
};

GMParams params_of(const Options& o) {
  return GMParams{parse_k(o.k), Permutation::parse(o.sigma)};
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// --seq, or s(t) for --t under --k / --sigma.
AdmissibleSeq sequence_input(const Options& o) {
  if (!o.seq.empty()) return AdmissibleSeq::parse(o.seq);
  if (!o.t.empty()) return admissible_sequence(Fraction::parse(o.t), params_of(o));
  throw DomainError("give --seq or --t");
}

Fraction fraction_input(const Options& o) {
  if (o.t.empty()) throw DomainError("--t is required");
  return Fraction::parse(o.t);
}

std::string surd_text(const QuadSurd& x) {
  return x.to_string() + "\n≈ " + x.to_decimal() + "\n";
}

std::string surd_csv(const QuadSurd& x) {
  return "p,q,D,r,decimal\n" + x.p().get_str() + "," + x.q().get_str() + "," +
         x.D().get_str() + "," + x.r().get_str() + "," + x.to_decimal() + "\n";
}

Output cmd_seq(const Options& o) {
  Fraction t = fraction_input(o);
  GMParams p = params_of(o);
  AdmissibleSeq s = admissible_sequence(t, p);
  return {s.to_string() + "\n",
          json{{"t", to_json(t)},
               {"k", p.k},
               {"sigma", p.sigma.to_string()},
               {"seq", to_json(s)}},
          "t,seq\n" + t.to_string() + "," + csv_quote(s.to_string()) + "\n"};
}

Output cmd_cohn(const Options& o) {
  Fraction t = fraction_input(o);
  GMParams p = params_of(o);
  Mat2 m;
  if (o.method == "closed") {
    m = cohn_closed_form(t, p);
  } else if (o.method == "recursive") {
    m = cohn_recursive(t, p);
  } else {
    throw DomainError("--method must be closed or recursive");
  }
  return {m.to_string() + "\n",
          json{{"t", to_json(t)},
               {"k", p.k},
               {"sigma", p.sigma.to_string()},
               {"method", o.method},
               {"matrix", to_json(m)}},
          "a,b,c,d\n" + m.a.get_str() + "," + m.b.get_str() + "," +
              m.c.get_str() + "," + m.d.get_str() + "\n"};
}

Output cmd_node(const Options& o) {
  Fraction t = fraction_input(o);
  GMParams p = params_of(o);
  GMNode node = gm_node(t, p);
  BigInt u = characteristic_number(t, node, p);
  auto pair = [](const GMPair& x) {
    return "(" + x.value.get_str() + "," + std::to_string(x.pos) + ")";
  };
  std::string text = "(" + pair(node.left) + "," + pair(node.mid) + "," +
                     pair(node.right) + ")\nu " + u.get_str() + "\n";
  json data = to_json(node);
  data["t"] = to_json(t);
  data["u"] = to_json(u);
  std::string csv = "t,left,left_pos,mid,mid_pos,right,right_pos,u\n" +
                    t.to_string() + "," + node.left.value.get_str() + "," +
                    std::to_string(node.left.pos) + "," +
                    node.mid.value.get_str() + "," +
                    std::to_string(node.mid.pos) + "," +
                    node.right.value.get_str() + "," +
                    std::to_string(node.right.pos) + "," + u.get_str() + "\n";
  return {text, data, csv};
}

Output cmd_lagrange(const Options& o) {
  AdmissibleSeq s = sequence_input(o);
  QuadSurd v = lagrange_value(s);
  return {surd_text(v),
          json{{"seq", to_json(s)},
               {"value", to_json(v)},
               {"decimal", v.to_decimal()},
               {"rotation", lagrange_rotation(s)}},
          surd_csv(v)};
}

Output cmd_alpha(const Options& o) {
  AdmissibleSeq s = sequence_input(o);
  QuadSurd v = alpha_fixed_point(s);
  PeriodicExpansion e = periodic_cf_expansion(v);
  std::string period;
  json jp = json::array();
  for (std::size_t i = 0; i < e.period.size(); ++i) {
    if (i) period += ",";
    period += e.period[i].get_str();
    jp.push_back(to_json(e.period[i]));
  }
  return {surd_text(v) + "period " + period + "\n",
          json{{"seq", to_json(s)},
               {"value", to_json(v)},
               {"decimal", v.to_decimal()},
               {"period", jp}},
          surd_csv(v)};
}

Output cmd_qform(const Options& o) {
  AdmissibleSeq s = sequence_input(o);
  QForm q = qform_of(s);
  Output out{q.to_string() + "\n",
             json{{"seq", to_json(s)},
                  {"a", q.a.get_str()},
                  {"b", q.b.get_str()},
                  {"c", q.c.get_str()}},
             "a,b,c\n" + q.a.get_str() + "," + q.b.get_str() + "," +
                 q.c.get_str() + "\n"};
  if (o.bound > 0) {
    NumericSup sup = markov_sup_numeric(q, o.bound);
    if (sup.infinite) {
      out.text += "sup over box: infinite\n";
      out.data["sup"] = "infinite";
    } else {
      out.text += "sup over box ≥ " + sup.value.to_string() + " ≈ " +
                  sup.value.to_decimal() + " at (" + sup.x.get_str() + "," +
                  sup.y.get_str() + ")\n";
      out.data["sup"] = to_json(sup.value);
      out.data["sup_decimal"] = sup.value.to_decimal();
    }
  }
  return out;
}

Output cmd_distance(const Options& o) {
  if (o.from.empty() || o.to.empty()) {
    throw DomainError("--from and --to are required");
  }
  LatticePoint a = LatticePoint::parse(o.from);
  LatticePoint b = LatticePoint::parse(o.to);
  GMParams p = params_of(o);
  BigInt d = gm_distance(a, b, p);
  json data{{"from", a.to_string()},
            {"to", b.to_string()},
            {"k", p.k},
            {"sigma", p.sigma.to_string()},
            {"distance", to_json(d)}};
  if (!(a == b)) data["seq"] = to_json(segment_sign_sequence(a, b, p));
  return {d.get_str() + "\n", data,
          "from,to,distance\n" + csv_quote(a.to_string()) + "," +
              csv_quote(b.to_string()) + "," + d.get_str() + "\n"};
}

std::string element_csv_row(const SpectrumElement& e) {
  const KTriple& k = e.params.k;
  return std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
         std::to_string(k[2]) + "," + csv_quote(e.params.sigma.to_string()) +
         "," + e.t.to_string() + "," + e.n.get_str() + "," +
         std::to_string(e.pos) + "," + e.value.p().get_str() + "," +
         e.value.q().get_str() + "," + e.value.D().get_str() + "," +
         e.value.r().get_str() + "," + e.value.to_decimal() + "\n";
}

std::string element_text(const SpectrumElement& e) {
  return e.value.to_string() + "  ≈ " + e.value.to_decimal() + "  k=" +
         k_to_string(e.params.k) + " sigma=" + e.params.sigma.to_string() +
         " t=" + e.t.to_string() + " n=" + e.n.get_str() +
         " pos=" + std::to_string(e.pos) + "\n";
}

Output cmd_spectrum(const Options& o) {
  static const char* kHeader = "k1,k2,k3,sigma,t,n,pos,p,q,D,r,decimal\n";
  Output out;
  out.csv = kHeader;
  out.data = json::array();
  if (o.kmax >= 0) {
    out.text =
        "# elements in [3, c_F) found at depth " + std::to_string(o.depth) +
        "; finite depth confirms membership only\n";
    for (const TransitionHit& h : transition_scan(o.kmax, o.depth)) {
      out.text += element_text(h.element);
      out.csv += element_csv_row(h.element);
      out.data.push_back(to_json(h.element));
    }
    return out;
  }
  for (const SpectrumElement& e : enumerate_spectrum(parse_k(o.k), o.depth)) {
    out.text += element_text(e);
    out.csv += element_csv_row(e);
    out.data.push_back(to_json(e));
  }
  return out;
}

Output cmd_tables(const Options&) {
  Output out;
  out.csv = "table,k,sigma,t,s_ok,alpha_ok,n_ok,L_ok,s,alpha,n,L\n";
  out.data = json::array();
  std::size_t bad = 0, total = 0;
  for (const RowCheck& c : reproduce_tables(golden_rows())) {
    ++total;
    if (!c.ok()) ++bad;
    const GoldenRow& r = c.row;
    std::string head = r.table + " t=" + r.t.to_string();
    if (c.ok()) {
      out.text += "ok        " + head + "\n";
    } else {
      out.text += "MISMATCH  " + head + " (fixture line " +
                  std::to_string(r.line) + ")\n";
      if (!c.s_ok) {
        out.text += "  s:     table " + r.s.to_string() + "  computed " +
                    c.s.to_string() + "\n";
      }
      if (!c.alpha_ok) {
        out.text += "  alpha: table " + r.alpha.to_string() + "  computed " +
                    c.alpha.to_string() + "\n";
      }
      if (!c.n_ok) {
        out.text += "  n:     table " + r.n.get_str() + "  computed " +
                    c.n.get_str() + "\n";
      }
      if (!c.L_ok) {
        out.text += "  L:     table " + r.L.to_string() + "  computed " +
                    c.L.to_string() + "\n";
      }
    }
    out.data.push_back(json{{"table", r.table},
                            {"k", r.params.k},
                            {"sigma", r.params.sigma.to_string()},
                            {"t", to_json(r.t)},
                            {"match",
                             {{"s", c.s_ok},
                              {"alpha", c.alpha_ok},
                              {"n", c.n_ok},
                              {"L", c.L_ok}}},
                            {"computed",
                             {{"s", to_json(c.s)},
                              {"alpha", to_json(c.alpha)},
                              {"n", to_json(c.n)},
                              {"L", to_json(c.L)}}}});
    out.csv += r.table + "," + csv_quote(k_to_string(r.params.k)) + "," +
               csv_quote(r.params.sigma.to_string()) + "," + r.t.to_string() +
               "," + (c.s_ok ? "1" : "0") + "," + (c.alpha_ok ? "1" : "0") +
               "," + (c.n_ok ? "1" : "0") + "," + (c.L_ok ? "1" : "0") + "," +
               csv_quote(c.s.to_string()) + "," + csv_quote(c.alpha.to_string()) +
               "," + c.n.get_str() + "," + csv_quote(c.L.to_string()) + "\n";
  }
  out.text += std::to_string(total - bad) + "/" + std::to_string(total) +
              " rows match\n";
  if (bad) out.exit_code = kVerification;
  return out;
}

Output cmd_verify(const Options& o) {
  Output out;
  out.csv = "suite,check,cases,failures,first_failure\n";
  out.data = json::array();
  for (const SuiteReport& r : run_suites(o.suite)) {
    for (const CheckResult& c : r.checks) {
      out.text += std::string(c.passed() ? "PASS " : "FAIL ") + r.suite +
                  ": " + c.name + " (" + std::to_string(c.cases) + " cases)";
      if (!c.passed()) {
        out.text += " " + std::to_string(c.failures) +
                    " failures, first: " + c.first_failure;
      }
      out.text += "\n";
      out.data.push_back(json{{"suite", r.suite},
                              {"check", c.name},
                              {"passed", c.passed()},
                              {"cases", c.cases},
                              {"failures", c.failures},
                              {"first_failure", c.first_failure}});
      out.csv += r.suite + "," + csv_quote(c.name) + "," +
                 std::to_string(c.cases) + "," + std::to_string(c.failures) +
                 "," + csv_quote(c.first_failure) + "\n";
    }
    if (!r.passed()) out.exit_code = kVerification;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact generalized Markov numbers, Cohn matrices and spectra",
               "gmspec"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", o.out_path, "Write output to this file");

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "k1,k2,k3 (default 0,0,0)");
    sub->add_option("--sigma", o.sigma, "Permutation in cycle notation");
  };
  auto add_seq_input = [&](CLI::App* sub) {
    add_params(sub);
    sub->add_option("--seq", o.seq, "Comma-separated positive integers");
    sub->add_option("--t", o.t, "Use s(t) for this fraction");
  };
  std::vector<std::pair<CLI::App*, Output (*)(const Options&)>> subs;
  auto add = [&](const char* name, const char* help,
                 Output (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    subs.emplace_back(sub, fn);
    return sub;
  };

  CLI::App* seq = add("seq", "Strongly admissible sequence s(t)", cmd_seq);
  add_params(seq);
  seq->add_option("--t", o.t, "Fraction a/b or inf")->required();

  CLI::App* cohn = add("cohn", "Cohn matrix C_t", cmd_cohn);
  add_params(cohn);
  cohn->add_option("--t", o.t, "Fraction a/b or inf")->required();
  cohn->add_option("--method", o.method, "closed or recursive")
      ->check(CLI::IsMember({"closed", "recursive"}));

  CLI::App* node = add("node", "Tree node and characteristic number", cmd_node);
  add_params(node);
  node->add_option("--t", o.t, "Fraction a/b or inf")->required();

  add_seq_input(add("lagrange", "Lagrange value L(S)", cmd_lagrange));
  add_seq_input(add("alpha", "Periodic continued fraction [S^inf]", cmd_alpha));
  CLI::App* qform = add("qform", "Quadratic form Q_S", cmd_qform);
  add_seq_input(qform);
  qform->add_option("--bound", o.bound,
                    "Also scan sqrt(D)/|Q| over the box of this radius");

  CLI::App* dist = add("distance", "Generalized Markov distance", cmd_distance);
  add_params(dist);
  dist->add_option("--from", o.from, "Lattice point x,y")->required();
  dist->add_option("--to", o.to, "Lattice point x,y")->required();

  CLI::App* spectrum = add("spectrum", "Enumerated spectrum values", cmd_spectrum);
  spectrum->add_option("--k", o.k, "k1,k2,k3");
  spectrum->add_option("--depth", o.depth, "Farey depth")
      ->check(CLI::Range(0, 20));
  spectrum->add_option("--kmax", o.kmax,
                   "Scan all k with max <= kmax for values in [3, c_F)")
      ->check(CLI::Range(0L, 50L));

  add("tables", "Recompute the golden table rows", cmd_tables);

  CLI::App* ver = add("verify", "Run an invariant suite", cmd_verify);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suites));

  std::vector<std::string> argv_store{"gmspec"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const CLI::App* failing = &app;
    for (const auto& [sub, fn] : subs) {
      if (sub->parsed()) failing = sub;
    }
    err << failing->help();
    return kUsage;
  }

  Output result;
  try {
    for (const auto& [sub, fn] : subs) {
      if (sub->parsed()) result = fn(o);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerification;
  }

  std::string body;
  if (o.format == "json") {
    body = result.data.dump(2) + "\n";
  } else if (o.format == "csv") {
    body = result.csv;
  } else {
    body = result.text;
  }
  if (o.out_path.empty()) {
    out << body;
  } else {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "error: cannot write " << o.out_path << "\n";
      return kDomain;
    }
    f << body;
  }
  return result.exit_code;
}

}  // namespace gmspec::cli
