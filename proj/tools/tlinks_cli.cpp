// tlinks: command-line front end.
//
//   tlinks build "T((2,2),(3,6))"
//   tlinks classify "P(7,2;[2,3,4])"
//   tlinks satellite "T((4,4),(7,2))"
//   tlinks normalform --strands 3 "1 2 1"
//   tlinks verify --strands 3 "1 2 1" "2 1 2"
//   tlinks verify --suite pipelines
//
// Exit status: 0 success, 1 parameter or parse error, 2 unsupported input,
// 3 failed verification.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tlinks/serialize.hpp"
#include "tlinks/tlinks.hpp"

namespace {

using namespace tlinks;

enum Exit { kOk = 0, kParameter = 1, kUnsupported = 2, kVerification = 3 };

struct Options {
  std::string subcommand;
  std::string format = "json";
  int kauffman_cap = default_kauffman_cap;
  bool verify = true;
  bool ascii = false;
  int strands = 0;
  std::string fill;
  std::string move = "absorb";
  std::string suite;
};

struct Result {
  Json json;
  std::string text;
  int code = kOk;
};

// --------------------------------------------------------------------------
// Input handling.

enum class InputKind { TLink, Parent, Word };

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

InputKind kind_of(const std::string& input) {
  if (!input.empty() && (input[0] == 'T' || input[0] == 't')) return InputKind::TLink;
  if (!input.empty() && (input[0] == 'P' || input[0] == 'p')) return InputKind::Parent;
  return InputKind::Word;
}

BraidWord read_word(const std::string& input, int strands) {
  if (strands > 0) return parse_word(input, strands);
  // Smallest strand count that holds every generator.
  int widest = 1;
  std::istringstream is(input);
  std::string token;
  while (is >> token) {
    const long v = std::strtol(token.c_str(), nullptr, 10);
    widest = std::max<long>(widest, std::labs(v) + 1);
  }
  return parse_word(input, widest);
}

// Braid word for any input kind; parent links take their fillings from --fill.
BraidWord braid_of(const std::string& input, const Options& opt, std::string& echo) {
  switch (kind_of(input)) {
    case InputKind::TLink: {
      const TLinkSpec spec = parse_tlink(input);
      echo = format_tlink(spec);
      return tlink_braid(spec);
    }
    case InputKind::Parent: {
      const ParentLinkSpec parent = parse_parent(input);
      echo = format_parent(parent);
      if (opt.fill.empty()) throw ParameterError("a parent link needs --fill s1,...,sn to give a braid");
      std::vector<int> twists;
      std::istringstream is(opt.fill);
      for (std::string part; std::getline(is, part, ',');) twists.push_back(std::stoi(trim(part)));
      return tlink_braid(fill_parent(parent, twists));
    }
    case InputKind::Word: {
      BraidWord w = read_word(input, opt.strands);
      echo = format_word(w);
      return w;
    }
  }
  throw ParameterError("unrecognised input");
}

TLinkSpec require_tlink(const std::string& input, const char* what) {
  if (kind_of(input) != InputKind::TLink)
    throw UnsupportedInput(std::string(what) + " takes a T-link such as T((2,2),(3,6))");
  return parse_tlink(input);
}

// Three rows per letter; the middle row shows '/' for sigma_i and '\' for
// its inverse.
std::string ascii_diagram(const BraidWord& w) {
  const int n = w.strands();
  const std::size_t width = static_cast<std::size_t>(2 * n - 1);
  std::ostringstream os;
  auto blank = [&] {
    std::string row(width, ' ');
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(2 * j)] = '|';
    return row;
  };
  for (const auto& g : w.letters()) {
    const std::size_t left = static_cast<std::size_t>(2 * (g.index - 1));
    std::string top = blank(), mid = blank(), bottom = blank();
    top[left] = '\\';
    top[left + 2] = '/';
    mid[left] = ' ';
    mid[left + 2] = ' ';
    mid[left + 1] = g.sign > 0 ? '/' : '\\';
    bottom[left] = '/';
    bottom[left + 2] = '\\';
    os << top << '\n' << mid << '\n' << bottom << '\n';
  }
  return os.str();
}

// Agreement of two closures: Alexander polynomials, plus component count and
// linking numbers for links.
Json compare_closures(const BraidWord& a, const BraidWord& b, bool& agree) {
  const ClosureData da = closure_data(a);
  const ClosureData db = closure_data(b);
  if (da.component_count == 1 && db.component_count == 1) {
    const Polynomial pa = alexander(a);
    const Polynomial pb = alexander(b);
    agree = pa == pb;
    return Json{{"method", "alexander"}, {"before", pa.to_string()}, {"after", pb.to_string()}, {"agree", agree}};
  }
  const Polynomial pa = closure_alexander(a);
  const Polynomial pb = closure_alexander(b);
  agree = da.component_count == db.component_count && linking_signature(da) == linking_signature(db) && pa == pb;
  return Json{{"method", "linking+alexander"},
              {"components", Json::array({da.component_count, db.component_count})},
              {"before", pa.to_string()},
              {"after", pb.to_string()},
              {"agree", agree}};
}

// --------------------------------------------------------------------------
// Subcommands.

Result run_build(const std::string& input, const Options& opt) {
  std::string echo;
  const BraidWord w = braid_of(input, opt, echo);
  Result r;
  r.json = Json{{"input", echo}, {"strands", w.strands()}, {"word", format_word(w)}, {"length", w.size()}};
  r.text = echo + "\nstrands: " + std::to_string(w.strands()) + "\nword: " + format_word(w) + "\n";
  if (opt.ascii) {
    r.json["ascii"] = ascii_diagram(w);
    r.text += ascii_diagram(w);
  }
  return r;
}

Result run_rewrite(const std::string& input, const Options& opt) {
  const TLinkSpec spec = require_tlink(input, "rewrite");
  Result r;
  r.json = Json{{"input", format_tlink(spec)}, {"move", opt.move}};
  BraidWord after(1);
  std::string output;
  bool applied = false;
  if (opt.move == "absorb") {
    TLinkSpec current = spec;
    for (auto step = absorb_interior_q_twists(current); step.applied; step = absorb_interior_q_twists(current)) {
      current = step.spec;
      applied = true;
    }
    output = format_tlink(current);
    after = tlink_braid(current);
  } else if (opt.move == "transpose") {
    const Rewrite t = transpose_full_twisted(spec);
    applied = t.applied;
    output = format_tlink(t.spec);
    after = tlink_braid(t.spec);
  } else if (opt.move == "braid-move") {
    if (auto reduced = braid_move_reduction(spec)) {
      applied = true;
      after = *reduced;
      output = format_word(after);
      r.json["strands"] = after.strands();
    }
  } else {
    throw ParameterError("unknown move '" + opt.move + "'; expected absorb, transpose or braid-move");
  }
  r.json["applied"] = applied;
  r.json["output"] = applied ? Json(output) : Json(nullptr);
  r.text = format_tlink(spec) + " -> " + (applied ? output : std::string("(move does not apply)")) + "\n";
  if (applied && opt.verify) {
    bool agree = false;
    r.json["oracle"] = compare_closures(tlink_braid(spec), after, agree);
    r.text += std::string("oracle: ") + (agree ? "agree" : "DISAGREE") + "\n";
    if (!agree) r.code = kVerification;
  }
  return r;
}

std::string certificate_text(const Certificate& c) {
  std::string out = std::string("  ") + to_string(c.rule) + " [" + anchor(c.rule) + "]";
  for (const auto& [k, v] : c.witnesses) out += " " + k + "=" + std::to_string(v);
  return out + "\n";
}

Result run_classify(const std::string& input, const Options& opt) {
  VerdictReport report;
  if (kind_of(input) == InputKind::Parent) {
    report = classify_report(parse_parent(input));
  } else {
    report = classify_report(require_tlink(input, "classify"), opt.verify);
  }
  Result r;
  r.json = report.json;
  if (report.verification_failed()) r.code = kVerification;
  r.text = report.json["input"].get<std::string>() + ": " + to_string(report.verdict.kind) + "\n";
  for (const auto& c : report.verdict.certificates) r.text += certificate_text(c);
  return r;
}

Result run_satellite(const std::string& input, const Options& opt) {
  const TLinkSpec spec = require_tlink(input, "satellite");
  auto d = halftwist_satellite(spec);
  if (!d) throw UnsupportedInput("satellite: " + format_tlink(spec) + " is not a half-twisted T-link over a knotted companion");
  std::optional<SatelliteReport> report;
  Result r;
  if (opt.verify) {
    report = verify_satellite(spec, *d);
    if (!report->passed()) r.code = kVerification;
  }
  r.json = Json{{"input", format_tlink(spec)}};
  r.json.update(to_json(*d, report));
  if (report) {
    r.json["genus"] = Json{{"knot", report->knot_genus}, {"pattern", report->pattern_genus}, {"companion", report->companion_genus}};
  }
  r.text = format_tlink(spec) + "\ncompanion: " + format_tlink(d->companion) + "\npattern (" +
           std::to_string(d->pattern.strands()) + " strands): " + format_word(d->pattern) +
           "\nwinding: " + std::to_string(d->winding) + "\n";
  if (report)
    r.text += std::string("alexander: ") + (report->alexander_ok ? "ok" : "FAILED") +
              "\ngenus: " + (report->genus_ok ? "ok" : "FAILED") + "\n";
  return r;
}

Result run_invariants(const std::string& input, const Options& opt) {
  std::string echo;
  const BraidWord w = braid_of(input, opt, echo);
  const ClosureData data = closure_data(w);
  Result r;
  r.json = Json{{"input", echo}, {"strands", w.strands()}, {"closure", to_json(data)}};
  r.text = echo + "\ncomponents: " + std::to_string(data.component_count) + "\n";
  if (data.component_count == 1) {
    const Polynomial a = alexander(w);
    r.json["alexander"] = to_json(a);
    r.text += "alexander: " + a.to_string() + "\n";
    if (w.is_positive()) {
      const int g = bennequin_genus(w);
      r.json["genus"] = g;
      r.text += "genus: " + std::to_string(g) + "\n";
    } else {
      r.json["genus"] = nullptr;
    }
  } else {
    r.json["alexander"] = nullptr;
    r.json["genus"] = nullptr;
  }
  if (static_cast<int>(w.size()) <= opt.kauffman_cap) {
    const Polynomial v = jones_kauffman(w, opt.kauffman_cap);
    // Keys are doubled exponents: "3" is t^(3/2).
    r.json["jones_half_exponents"] = to_json(v);
    r.json["jones"] = format_jones(v);
    r.text += "jones: " + format_jones(v) + "\n";
  } else {
    r.json["jones"] = nullptr;
    r.json["jones_skipped"] = std::to_string(w.size()) + " crossings exceed --kauffman-cap " + std::to_string(opt.kauffman_cap);
    r.text += "jones: skipped (" + std::to_string(w.size()) + " crossings)\n";
  }
  return r;
}

Result run_index(const std::string& input, const Options&) {
  const TLinkSpec spec = require_tlink(input, "index");
  const BraidIndex b = tlink_braid_index(spec);
  Result r;
  r.json = Json{{"input", format_tlink(spec)}};
  r.json.update(to_json(b));
  r.text = format_tlink(spec) + ": braid index " +
           (b.exact ? std::to_string(b.lower) : "in [" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]") +
           " (" + b.method + ")\n";
  return r;
}

Result run_normalform(const std::string& input, const Options& opt) {
  std::string echo;
  const BraidWord w = braid_of(input, opt, echo);
  const NormalForm nf = left_normal_form(w);
  Result r;
  r.json = Json{{"input", echo}};
  r.json.update(to_json(nf));
  r.text = echo + "\n" + format_normal_form(nf) + "\n";
  return r;
}

Result run_verify_pair(const std::string& a, const std::string& b, const Options& opt) {
  std::string ea, eb;
  Options widened = opt;
  if (widened.strands == 0) {
    widened.strands = std::max(read_word(a, 0).strands(), read_word(b, 0).strands());
  }
  const BraidWord u = braid_of(a, widened, ea);
  const BraidWord v = braid_of(b, widened, eb);
  const bool equal = braids_equal(u, v);
  Result r;
  r.json = Json{{"left", ea},
                {"right", eb},
                {"strands", u.strands()},
                {"equal", equal},
                {"left_normal_form", format_normal_form(left_normal_form(u))},
                {"right_normal_form", format_normal_form(left_normal_form(v))}};
  r.text = std::string(equal ? "equal" : "not equal") + "\n";
  if (!equal) r.code = kVerification;
  return r;
}

Result run_suite(const std::string& name) {
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string& label, bool ok) {
    checks.push_back(Json{{"check", label}, {"ok", ok}});
    all = all && ok;
  };
  if (name == "identities") {
    for (int r = 2; r <= 4; ++r)
      for (int q = 1; q <= 3; ++q)
        for (int t = 1; t < r; ++t)
          for (int k = 0; k <= 1; ++k)
            record("halftwist r=" + std::to_string(r) + " q=" + std::to_string(q) + " t=" + std::to_string(t) +
                       " k=" + std::to_string(k),
                   halftwist_factorization(r, q, t, k).identity_holds);
  } else if (name == "pipelines") {
    for (int p = 3; p <= 9; ++p)
      for (int q = 2; q < p; ++q)
        if (std::gcd(p, q) == 1)
          record("alexander T(" + std::to_string(p) + "," + std::to_string(q) + ")",
                 alexander(torus_braid(p, q, p)) == torus_alexander(p, q));
  } else if (name == "satellite") {
    for (const char* text : {"T((4,4),(7,2))", "T((2,1),(4,4),(9,2))", "T((3,1),(6,6),(8,3))", "T((4,8),(9,2))"}) {
      const TLinkSpec spec = parse_tlink(text);
      const auto d = halftwist_satellite(spec);
      record(std::string("satellite ") + text, d && verify_satellite(spec, *d).passed());
    }
  } else {
    throw ParameterError("unknown suite '" + name + "'; expected identities, pipelines or satellite");
  }
  Result r;
  r.json = Json{{"suite", name}, {"passed", all}, {"checks", checks}};
  for (const auto& c : checks)
    r.text += std::string(c["ok"].get<bool>() ? "PASS " : "FAIL ") + c["check"].get<std::string>() + "\n";
  if (!all) r.code = kVerification;
  return r;
}

Result dispatch(const std::vector<std::string>& inputs, const Options& opt) {
  const std::string& cmd = opt.subcommand;
  if (cmd == "verify") {
    if (!opt.suite.empty()) return run_suite(opt.suite);
    if (inputs.size() != 2) throw ParameterError("verify takes two braid words or --suite NAME");
    return run_verify_pair(inputs[0], inputs[1], opt);
  }
  if (inputs.size() != 1) throw ParameterError(cmd + " takes exactly one input");
  const std::string input = trim(inputs[0]);
  if (cmd == "build") return run_build(input, opt);
  if (cmd == "rewrite") return run_rewrite(input, opt);
  if (cmd == "classify") return run_classify(input, opt);
  if (cmd == "satellite") return run_satellite(input, opt);
  if (cmd == "invariants") return run_invariants(input, opt);
  if (cmd == "index") return run_index(input, opt);
  if (cmd == "normalform") return run_normalform(input, opt);
  throw ParameterError("unknown subcommand " + cmd);
}

Result error_result(int code, const std::string& message) {
  Result r;
  r.code = code;
  r.json = Json{{"error", message}, {"exit", code}};
  r.text = "error: " + message + "\n";
  return r;
}

Result run_guarded(const std::vector<std::string>& inputs, const Options& opt) {
  try {
    return dispatch(inputs, opt);
  } catch (const ParameterError& e) {
    return error_result(kParameter, e.what());
  } catch (const std::invalid_argument& e) {
    return error_result(kParameter, e.what());
  } catch (const std::out_of_range& e) {
    return error_result(kParameter, e.what());
  } catch (const UnsupportedInput& e) {
    return error_result(kUnsupported, e.what());
  } catch (const ResourceError& e) {
    return error_result(kUnsupported, e.what());
  }
}

void emit(const Result& r, const Options& opt, bool compact) {
  if (opt.format == "text") {
    (r.code == kParameter || r.code == kUnsupported ? std::cerr : std::cout) << r.text;
  } else {
    std::cout << (compact ? r.json.dump() : r.json.dump(2)) << '\n';
  }
}

int run_batch(const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open batch file " << path << '\n';
    return kParameter;
  }
  std::vector<std::vector<std::string>> jobs;
  for (std::string line; std::getline(in, line);) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (opt.subcommand == "verify") {
      const auto bar = line.find('|');
      if (bar == std::string::npos) {
        jobs.push_back({line});
      } else {
        jobs.push_back({trim(line.substr(0, bar)), trim(line.substr(bar + 1))});
      }
    } else {
      jobs.push_back({line});
    }
  }
  std::vector<Result> results(jobs.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < jobs.size(); start += workers) {
    std::vector<std::future<Result>> running;
    const std::size_t end = std::min(jobs.size(), start + workers);
    for (std::size_t i = start; i < end; ++i)
      running.push_back(std::async(std::launch::async, [&, i] { return run_guarded(jobs[i], opt); }));
    for (std::size_t i = start; i < end; ++i) results[i] = running[i - start].get();
  }
  int code = kOk;
  for (const auto& r : results) {
    emit(r, opt, true);
    code = std::max(code, r.code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, rewrite, classify and decompose T-links"};
  app.require_subcommand(1);
  Options opt;
  std::string batch;
  std::vector<std::string> inputs;

  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--kauffman-cap", opt.kauffman_cap, "Largest crossing count for the Jones polynomial")
      ->check(CLI::Range(0, 64));
  app.add_flag("--no-verify", [&](std::int64_t) { opt.verify = false; }, "Skip oracle verification");
  app.add_option("--batch", batch, "Run the subcommand on each line of FILE");
  app.add_option("--strands", opt.strands, "Strand count for braid word inputs")->check(CLI::PositiveNumber);
  app.add_flag("--ascii", opt.ascii, "Append an ASCII braid diagram");
  app.fallthrough();

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"build", "Braid word of a T-link, filled parent link or word"},
      {"rewrite", "Apply a rewriting move and check it with invariants"},
      {"classify", "Geometric type with certificates"},
      {"satellite", "Satellite decomposition of a half-twisted T-link"},
      {"invariants", "Alexander, genus, Jones and linking data"},
      {"index", "Braid index of a T-link"},
      {"verify", "Compare two braid words or run a named suite"},
      {"normalform", "Garside left normal form"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", inputs, "T-link, parent link or braid word");
    if (name == "build" || name == "invariants" || name == "normalform")
      sub->add_option("--fill", opt.fill, "Fillings s1,...,sn for a parent link");
    if (name == "rewrite")
      sub->add_option("--move", opt.move, "absorb, transpose or braid-move")
          ->check(CLI::IsMember({"absorb", "transpose", "braid-move"}));
    if (name == "verify") sub->add_option("--suite", opt.suite, "identities, pipelines or satellite");
    sub->callback([&opt, name = name] { opt.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParameter;
  }

  if (!batch.empty()) return run_batch(batch, opt);
  const Result r = run_guarded(inputs, opt);
  emit(r, opt, false);
  return r.code;
}
