#include "dinv/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dinv/alexander.hpp"
#include "dinv/error.hpp"
#include "dinv/knot_model.hpp"
#include "dinv/lens.hpp"
#include "dinv/lspace_obstruct.hpp"
#include "dinv/reducibility.hpp"
#include "dinv/surgery.hpp"

namespace dinv::cli {

namespace {

using Json = nlohmann::ordered_json;

// Everything a command produces; rendered once the format is known.
struct Document {
  Json json = Json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string text;
  int exit_code = kExitOk;
};

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::json:
      return doc.json.dump(2) + "\n";
    case Format::csv: {
      std::ostringstream os;
      auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << "\n";
      };
      line(doc.csv_header);
      for (const auto& row : doc.csv_rows) line(row);
      return os.str();
    }
    case Format::text:
      return doc.text;
  }
  return {};
}

template <typename T>
T require(const std::optional<T>& value, const char* flag) {
  if (!value) throw InputError(std::string("missing required flag ") + flag);
  return *value;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("malformed integer '" + std::string(text) + "'");
  }
  return v;
}

ViSequence parse_vi(std::string_view csv) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto comma = csv.find(',', start);
    auto item = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    values.push_back(parse_int(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ViSequence(std::move(values));
}

// Exactly one of --alex / --vi (and optionally --slice) must be given.
ViSequence knot_input(const RunConfig& c, bool allow_slice, std::string& source) {
  const int given = int(c.alex.has_value()) + int(c.vi.has_value()) + int(allow_slice && c.slice);
  if (given != 1) {
    throw InputError(allow_slice ? "give exactly one of --alex, --vi, --slice" : "give exactly one of --alex, --vi");
  }
  if (c.alex) {
    source = "alex";
    return vi_from_alex(parse_alex(*c.alex));
  }
  if (c.vi) {
    source = "vi";
    return parse_vi(*c.vi);
  }
  source = "slice";
  return ViSequence();
}

Json int_array(const std::vector<std::int64_t>& xs) {
  Json a = Json::array();
  for (auto x : xs) a.push_back(x);
  return a;
}

Json rational_array(const RationalMultiset& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

std::string join(const std::vector<std::int64_t>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::string join(const RationalMultiset& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
  return out;
}

void add_d_rows(Document& doc, const DInvariantTable& table, std::optional<std::int64_t> only, std::string& text) {
  Json rows = Json::array();
  doc.csv_header = {"i", "d"};
  std::ostringstream os;
  os << std::setw(6) << "i" << "  d\n";
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(table.size()); ++i) {
    if (only && *only != i) continue;
    const std::string d = table[static_cast<std::size_t>(i)].to_string();
    rows.push_back(Json{{"i", i}, {"d", d}});
    doc.csv_rows.push_back({std::to_string(i), d});
    os << std::setw(6) << i << "  " << d << "\n";
  }
  doc.json["rows"] = rows;
  text += os.str();
}

// Runs fn(0) … fn(n−1) across worker threads; results land in index order.
template <typename Result>
std::vector<Result> parallel_map(std::size_t n, unsigned threads, const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> out(n);
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

void add_report(Document& doc, const ObstructionReport& report, std::string& text) {
  doc.json["verdict"] = to_string(report.verdict);
  Json evidence = Json::array();
  std::ostringstream os;
  os << "verdict: " << to_string(report.verdict) << "\n";
  if (!report.rows.empty()) os << std::setw(6) << "l" << std::setw(8) << "lhs" << std::setw(8) << "rhs" << "\n";
  doc.csv_header = {"l", "lhs", "rhs", "holds"};
  for (const auto& r : report.rows) {
    evidence.push_back(Json{{"l", r.ell}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds()}});
    doc.csv_rows.push_back(
        {std::to_string(r.ell), std::to_string(r.lhs), std::to_string(r.rhs), r.holds() ? "true" : "false"});
    os << std::setw(6) << r.ell << std::setw(8) << r.lhs << std::setw(8) << r.rhs << (r.holds() ? "" : "  FAIL")
       << "\n";
  }
  doc.json["evidence"] = evidence;
  Json notes = Json::array();
  for (const auto& n : report.notes) {
    notes.push_back(n);
    os << "note: " << n << "\n";
  }
  doc.json["notes"] = notes;
  text += os.str();
  if (report.verdict == Verdict::contradiction) doc.exit_code = kExitContradiction;
}

Document run_lens(const RunConfig& c) {
  const auto lens = LensSpace::make(require(c.p, "--p"), require(c.q, "--q"));
  if (c.spinc && (*c.spinc < 0 || *c.spinc >= lens.p)) {
    throw InputError("--spinc " + std::to_string(*c.spinc) + " outside [0, " + std::to_string(lens.p - 1) + "]");
  }
  const DInvariantTable table = d_lens_table(lens.p, lens.q);
  Document doc;
  doc.json["command"] = "lens";
  doc.json["p"] = lens.p;
  doc.json["q"] = lens.q;
  std::string text = "d-invariants of L(" + std::to_string(lens.p) + "," + std::to_string(lens.q) + ")\n";
  add_d_rows(doc, table, c.spinc, text);
  if (!c.spinc) {
    doc.json["multiset"] = rational_array(table.multiset());
    text += "multiset: {" + join(table.multiset()) + "}\n";
  }
  doc.text = text;
  return doc;
}

Document run_surgery(const RunConfig& c) {
  const std::int64_t p = require(c.p, "--p");
  const std::int64_t q = require(c.q, "--q");
  std::string source;
  const ViSequence v = knot_input(c, false, source);
  const DInvariantTable table = d_surgery_table(p, q, v);
  Document doc;
  doc.json["command"] = "surgery";
  doc.json["p"] = p;
  doc.json["q"] = q;
  doc.json["V"] = int_array(v.values());
  std::string text = "d-invariants of " + std::to_string(p) + "/" + std::to_string(q) + " surgery, V = (" +
                     join(v.values()) + ")\n";
  add_d_rows(doc, table, std::nullopt, text);
  doc.json["multiset"] = rational_array(table.multiset());
  text += "multiset: {" + join(table.multiset()) + "}\n";
  doc.text = text;
  return doc;
}

Document run_knot(const RunConfig& c) {
  const AlexanderPoly poly = parse_alex(require(c.alex, "--alex"));
  const bool lspace = validate_lspace(poly);
  const bool all = c.knot_view == KnotView::all;
  if (!lspace && !all) throw InputError("Alexander polynomial is not of L-space knot form");

  Document doc;
  doc.json["command"] = "knot";
  doc.json["alex"] = poly.to_string();
  doc.json["genus"] = poly.genus();
  doc.json["lspace"] = lspace;
  std::ostringstream os;
  os << "alex: " << poly.to_string() << "\ngenus: " << poly.genus() << "\nlspace: " << (lspace ? "yes" : "no") << "\n";

  if (!lspace) {
    const auto t = torsion_coeffs(poly);
    doc.json["torsion"] = int_array(t);
    os << "torsion coefficients: (" << join(t) << ")\n";
    doc.csv_header = {"i", "t"};
    for (std::size_t i = 0; i < t.size(); ++i) doc.csv_rows.push_back({std::to_string(i), std::to_string(t[i])});
    doc.text = os.str();
    return doc;
  }

  const ViSequence v = vi_from_alex(poly);
  if (all || c.knot_view == KnotView::vi) {
    doc.json["V"] = int_array(v.values());
    os << "V: (" << join(v.values()) << ")\n";
    doc.csv_header = {"i", "V"};
    for (std::size_t i = 0; i < v.values().size(); ++i) {
      doc.csv_rows.push_back({std::to_string(i), std::to_string(v.values()[i])});
    }
  }
  if (all || c.knot_view == KnotView::staircase) {
    Json rows = Json::array();
    os << "staircase:\n" << std::setw(6) << "A" << std::setw(6) << "M" << std::setw(7) << "delta" << "\n";
    if (!all) doc.csv_header = {"A", "M", "delta"};
    for (const auto& gen : staircase(poly)) {
      rows.push_back(Json{{"A", gen.alexander}, {"M", gen.maslov}, {"delta", gen.delta}});
      os << std::setw(6) << gen.alexander << std::setw(6) << gen.maslov << std::setw(7) << gen.delta << "\n";
      if (!all) {
        doc.csv_rows.push_back(
            {std::to_string(gen.alexander), std::to_string(gen.maslov), std::to_string(gen.delta)});
      }
    }
    doc.json["staircase"] = rows;
  }
  if (all || c.knot_view == KnotView::thickness) {
    const auto th = thickness(poly);
    doc.json["thickness"] = th;
    os << "thickness: " << th << "\n";
    if (!all) doc.csv_header = {"thickness"}, doc.csv_rows.push_back({std::to_string(th)});
  }
  if (all || c.knot_view == KnotView::nu_plus) {
    const auto nu = nu_plus(v);
    doc.json["nu_plus"] = nu;
    os << "nu+: " << nu << "\n";
    if (!all) doc.csv_header = {"nu_plus"}, doc.csv_rows.push_back({std::to_string(nu)});
  }
  doc.text = os.str();
  return doc;
}

Document run_check_reducible(const RunConfig& c) {
  const std::int64_t p = require(c.p, "--p");
  const std::int64_t q = require(c.q, "--q");
  std::string source;
  const ViSequence v = knot_input(c, true, source);
  const ObstructionReport report = check_reducible_constraints(v, p, q);
  Document doc;
  doc.json["command"] = "check-reducible";
  doc.json["p"] = p;
  doc.json["q"] = q;
  doc.json["slope"] = p * q;
  doc.json["source"] = source;
  doc.json["V"] = int_array(v.values());
  std::string text = "slope " + std::to_string(p * q) + " = " + std::to_string(p) + "*" + std::to_string(q) +
                     ", V = (" + join(v.values()) + ")\n";
  add_report(doc, report, text);
  doc.text = text;
  return doc;
}

Document run_slice_obstruct(const RunConfig& c) {
  const std::int64_t p = require(c.p, "--p");
  const std::int64_t q = require(c.q, "--q");
  const SliceVerdict verdict = slice_reducible_verdict(p, q);
  Document doc;
  doc.json["command"] = "slice-obstruct";
  doc.json["p"] = p;
  doc.json["q"] = q;
  std::string text = "slice knot, slope " + std::to_string(p * q) + " = " + std::to_string(p) + "*" +
                     std::to_string(q) + "\n";
  add_report(doc, verdict.report, text);
  if (verdict.forced) {
    const auto& f = *verdict.forced;
    doc.json["forced"] = Json{{"lens_p", f.lens_p}, {"lens_a", f.lens_a}, {"d_Y", f.homology_sphere_d.to_string()}};
    text += "forced: L(" + std::to_string(f.lens_p) + "," + std::to_string(f.lens_a) + ") # Y with d(Y) = " +
            f.homology_sphere_d.to_string() + "\n";
  } else {
    doc.json["forced"] = nullptr;
  }
  doc.text = text;
  return doc;
}

Document run_slopes(const RunConfig& c) {
  const std::int64_t gs = require(c.slice_genus, "G");
  const auto candidates = slice_slope_candidates(gs);
  Document doc;
  doc.json["command"] = "slopes-for-slice-genus";
  doc.json["slice_genus"] = gs;
  Json rows = Json::array();
  doc.csv_header = {"slope", "p", "q"};
  std::ostringstream os;
  os << "reducing slopes with two homologically nontrivial summands, slice genus " << gs << ":\n";
  for (const auto& s : candidates) {
    rows.push_back(Json{{"slope", s.slope}, {"p", s.p}, {"q", s.q}});
    doc.csv_rows.push_back({std::to_string(s.slope), std::to_string(s.p), std::to_string(s.q)});
    os << "  " << s.slope << " = " << s.p << "*" << s.q << "\n";
  }
  if (candidates.empty()) os << "  (none)\n";
  doc.json["candidates"] = rows;
  doc.text = os.str();
  return doc;
}

Document run_lspace_obstruct(const RunConfig& c) {
  const std::int64_t g = require(c.genus, "--g");
  const std::int64_t th = require(c.thickness, "--th");
  const bool excluded = smallthick_obstruction(g, th);
  const std::int64_t slope = 2 * g - 1;
  std::int64_t t = slope;
  for (std::int64_t d = 2; d * d <= slope; ++d) {
    if (slope % d == 0) {
      t = d;
      break;
    }
  }
  std::string reason;
  if (slope == 1) {
    reason = "2g-1 = 1 admits no factorization with p > q > 1";
  } else if (t == slope) {
    reason = "2g-1 is prime, so the lens summand would be L(2g-1,a)";
  } else if (excluded) {
    reason = "th < t-1 for smallest prime factor t";
  } else {
    reason = "th >= t-1; not excluded by thickness";
  }
  Document doc;
  doc.json["command"] = "lspace-obstruct";
  doc.json["g"] = g;
  doc.json["th"] = th;
  doc.json["slope"] = slope;
  doc.json["smallest_prime_factor"] = slope == 1 ? Json(nullptr) : Json(t);
  doc.json["excluded"] = excluded;
  doc.json["reason"] = reason;
  doc.csv_header = {"g", "th", "slope", "excluded"};
  doc.csv_rows.push_back({std::to_string(g), std::to_string(th), std::to_string(slope), excluded ? "true" : "false"});
  doc.text = "g = " + std::to_string(g) + ", th = " + std::to_string(th) + ", slope 2g-1 = " + std::to_string(slope) +
             "\n" + (excluded ? "excluded: " : "not excluded: ") + reason + "\n";
  if (excluded) doc.exit_code = kExitContradiction;
  return doc;
}

Document run_gen_alex(const RunConfig& c) {
  const std::int64_t q = require(c.q, "--q");
  const AlexanderPoly poly = gen_alex_pq2(q);
  Document doc;
  doc.json["command"] = "gen-alex";
  doc.json["q"] = q;
  doc.json["p"] = q + 2;
  doc.json["g"] = poly.genus();
  doc.json["alex"] = poly.to_string();
  Json terms = Json::array();
  doc.csv_header = {"e", "c"};
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend() && it->first >= 0; ++it) {
    terms.push_back(Json{{"e", it->first}, {"c", it->second}});
    doc.csv_rows.push_back({std::to_string(it->first), std::to_string(it->second)});
  }
  doc.json["terms"] = terms;
  doc.text = "p = " + std::to_string(q + 2) + ", q = " + std::to_string(q) + ", g = " + std::to_string(poly.genus()) +
             "\nDelta+: " + poly.to_string() + "\n";
  return doc;
}

Document run_reconstruct(const RunConfig& c) {
  const std::int64_t q = require(c.q, "--q");
  const std::int64_t p = q + 2;
  const ViSequence v = reconstruct_vi_pq2(q);
  const BlockDecomposition blocks = block_decomposition(v, p, q);
  Document doc;
  doc.json["command"] = "reconstruct";
  doc.json["q"] = q;
  doc.json["p"] = p;
  doc.json["g"] = v.genus();
  doc.json["k"] = (p - 1) * (q - 1) / 2 - 1;
  doc.json["V"] = int_array(v.values());
  Json runs = Json::array();
  std::string run_text;
  for (const auto& r : blocks.runs) {
    runs.push_back(Json{{"value", r.value}, {"length", r.length}});
    run_text += (run_text.empty() ? "" : " ") + std::to_string(r.value) + "x" + std::to_string(r.length);
  }
  doc.json["blocks"] = runs;
  doc.json["central_block"] = blocks.central_block ? Json(*blocks.central_block) : Json(nullptr);
  Json warnings = Json::array();
  std::string text = "p = " + std::to_string(p) + ", q = " + std::to_string(q) + ", g = " +
                     std::to_string(v.genus()) + "\nV: (" + join(v.values()) + ")\nblocks: " + run_text + "\n";
  if (auto w = long_run_warning(v, p, q)) {
    warnings.push_back(*w);
    text += "warning: " + *w + "\n";
  }
  doc.json["warnings"] = warnings;
  doc.csv_header = {"i", "V"};
  for (std::size_t i = 0; i < v.values().size(); ++i) {
    doc.csv_rows.push_back({std::to_string(i), std::to_string(v.values()[i])});
  }
  doc.text = text;
  return doc;
}

Document run_cross_check(const RunConfig& c) {
  const std::int64_t q_max = require(c.q_max, "--q-max");
  if (q_max < 3) throw InputError("--q-max must be >= 3");
  std::vector<std::int64_t> qs;
  for (std::int64_t q = 3; q <= q_max; q += 2) qs.push_back(q);
  const auto results =
      parallel_map<Pq2CrossCheck>(qs.size(), c.threads, [&](std::size_t i) { return cross_check_pq2_detail(qs[i]); });

  Document doc;
  doc.json["command"] = "cross-check";
  doc.json["q_max"] = q_max;
  Json rows = Json::array();
  doc.csv_header = {"q", "p", "vi_agree", "thickness", "lower", "upper", "ok"};
  std::ostringstream os;
  os << std::setw(5) << "q" << std::setw(5) << "p" << std::setw(10) << "V agree" << std::setw(11) << "thickness"
     << std::setw(10) << "bounds" << "\n";
  std::int64_t failures = 0;
  for (const auto& r : results) {
    failures += r.ok() ? 0 : 1;
    rows.push_back(Json{{"q", r.q},
                        {"p", r.p},
                        {"vi_agree", r.vi_agree()},
                        {"thickness", r.thickness},
                        {"lower", r.lower_bound},
                        {"upper", r.upper_bound},
                        {"ok", r.ok()}});
    doc.csv_rows.push_back({std::to_string(r.q), std::to_string(r.p), r.vi_agree() ? "true" : "false",
                            std::to_string(r.thickness), std::to_string(r.lower_bound), std::to_string(r.upper_bound),
                            r.ok() ? "true" : "false"});
    os << std::setw(5) << r.q << std::setw(5) << r.p << std::setw(10) << (r.vi_agree() ? "yes" : "NO")
       << std::setw(11) << r.thickness << std::setw(10)
       << ("[" + std::to_string(r.lower_bound) + "," + std::to_string(r.upper_bound) + "]")
       << (r.ok() ? "" : "  FAIL") << "\n";
  }
  doc.json["rows"] = rows;
  doc.json["checked"] = static_cast<std::int64_t>(results.size());
  doc.json["failures"] = failures;
  os << "checked " << results.size() << ", failures " << failures << "\n";
  doc.text = os.str();
  if (failures) doc.exit_code = kExitContradiction;
  return doc;
}

Document run_verify_torus(const RunConfig& c) {
  const std::int64_t max = require(c.max, "--max");
  if (max < 1) throw InputError("--max must be positive");
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t p = 3; p * 2 <= max; ++p) {
    for (std::int64_t q = 2; q < p && p * q <= max; ++q) {
      if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    }
  }
  const auto ok = parallel_map<char>(pairs.size(), c.threads, [&](std::size_t i) {
    return static_cast<char>(moser_check(pairs[i].first, pairs[i].second));
  });

  Document doc;
  doc.json["command"] = "verify-torus";
  doc.json["max"] = max;
  Json rows = Json::array();
  doc.csv_header = {"p", "q", "slope", "ok"};
  std::ostringstream os;
  std::int64_t failures = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    failures += ok[i] ? 0 : 1;
    rows.push_back(Json{{"p", p}, {"q", q}, {"slope", p * q}, {"ok", ok[i] != 0}});
    doc.csv_rows.push_back({std::to_string(p), std::to_string(q), std::to_string(p * q), ok[i] ? "true" : "false"});
    if (!ok[i]) os << "FAIL T(" << p << "," << q << ")\n";
  }
  doc.json["rows"] = rows;
  doc.json["checked"] = static_cast<std::int64_t>(pairs.size());
  doc.json["failures"] = failures;
  os << "verified pq-surgery on T(p,q) = L(p,q) # L(q,p) for " << pairs.size() << " pairs with pq <= " << max
     << ", failures " << failures << "\n";
  doc.text = os.str();
  if (failures) doc.exit_code = kExitContradiction;
  return doc;
}

Document build(const RunConfig& c) {
  switch (c.command) {
    case Command::lens: return run_lens(c);
    case Command::surgery: return run_surgery(c);
    case Command::knot: return run_knot(c);
    case Command::check_reducible: return run_check_reducible(c);
    case Command::slice_obstruct: return run_slice_obstruct(c);
    case Command::slopes_for_slice_genus: return run_slopes(c);
    case Command::lspace_obstruct: return run_lspace_obstruct(c);
    case Command::gen_alex: return run_gen_alex(c);
    case Command::reconstruct: return run_reconstruct(c);
    case Command::cross_check: return run_cross_check(c);
    case Command::verify_torus: return run_verify_torus(c);
  }
  throw InputError("unknown command");
}

}  // namespace

RunResult dispatch(const RunConfig& config) {
  RunResult result;
  try {
    Document doc = build(config);
    result.output = render(doc, config.format);
    result.exit_code = doc.exit_code;
  } catch (const InputError& e) {
    result.exit_code = kExitInvalid;
    result.error = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    // Internal invariant failures are reported as failures, not bad input.
    result.exit_code = kExitContradiction;
    result.error = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

RunResult run(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"Heegaard Floer d-invariants of lens spaces and surgeries, and reducible-surgery obstructions", "dinv"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  std::string format_name = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format (default text)")
        ->transform(CLI::IsMember({"json", "csv", "text"}, CLI::ignore_case).description(""))
        ->type_name("{json,csv,text}");
  };
  auto add_pq = [&](CLI::App* sub, const char* p_help, const char* q_help) {
    sub->add_option("--p", config.p, p_help)->required();
    sub->add_option("--q", config.q, q_help)->required();
  };

  auto* lens = app.add_subcommand("lens", "d-invariants of the lens space L(p,q)");
  add_pq(lens, "Order of H_1", "Lens parameter (reduced mod p)");
  lens->add_option("--spinc", config.spinc, "Print only this Spin^c label");
  add_format(lens);

  auto* surgery = app.add_subcommand("surgery", "d-invariants of p/q surgery via the V_i");
  add_pq(surgery, "Slope numerator", "Slope denominator");
  surgery->add_option("--alex", config.alex, "L-space knot Alexander polynomial, e.g. 1:1,0:-1");
  surgery->add_option("--vi", config.vi, "Comma-separated V_0,...,V_g");
  add_format(surgery);

  auto* knot = app.add_subcommand("knot", "V_i, staircase, thickness and nu+ of an L-space knot");
  knot->add_option("--alex", config.alex, "Alexander polynomial, non-negative half")->required();
  auto* g_vi = knot->add_flag("--vi", "Show V_i only");
  auto* g_st = knot->add_flag("--staircase", "Show staircase gradings only");
  auto* g_th = knot->add_flag("--thickness", "Show thickness only");
  auto* g_nu = knot->add_flag("--nu-plus", "Show nu+ only");
  g_vi->excludes(g_st, g_th, g_nu);
  g_st->excludes(g_th, g_nu);
  g_th->excludes(g_nu);
  add_format(knot);

  auto* check = app.add_subcommand("check-reducible", "Sum-identity constraints for a reducing slope pq");
  add_pq(check, "Order of H^2(Y_p)", "Order of H^2(Y_q)");
  check->add_option("--alex", config.alex, "L-space knot Alexander polynomial");
  check->add_option("--vi", config.vi, "Comma-separated V_0,...,V_g");
  check->add_flag("--slice", config.slice, "Use V = 0 (slice knot)");
  add_format(check);

  auto* slice = app.add_subcommand("slice-obstruct", "Reducible pq-surgery on a slice knot");
  add_pq(slice, "Lens summand order", "Order of the complementary summand");
  add_format(slice);

  auto* slopes = app.add_subcommand("slopes-for-slice-genus", "Candidate reducing slopes for a slice genus");
  slopes->add_option("G", config.slice_genus, "Slice genus")->required();
  add_format(slopes);

  auto* lsp = app.add_subcommand("lspace-obstruct", "Small-thickness obstruction for hyperbolic L-space knots");
  lsp->add_option("--g", config.genus, "Knot genus")->required();
  lsp->add_option("--th", config.thickness, "Knot thickness")->required();
  add_format(lsp);

  auto* gen = app.add_subcommand("gen-alex", "Alexander polynomial forced when p - q = 2");
  gen->add_option("--q", config.q, "Odd q >= 3 (p = q + 2)")->required();
  add_format(gen);

  auto* rec = app.add_subcommand("reconstruct", "Reconstruct V_i when p - q = 2");
  rec->add_option("--q", config.q, "Odd q >= 3 (p = q + 2)")->required();
  add_format(rec);

  auto* cross = app.add_subcommand("cross-check", "Closed form vs reconstruction for odd 3 <= q <= N");
  cross->add_option("--q-max", config.q_max, "Largest q")->required();
  cross->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
  add_format(cross);

  auto* torus = app.add_subcommand("verify-torus", "pq-surgery on T(p,q) vs L(p,q) # L(q,p) for pq <= N");
  torus->add_option("--max", config.max, "Largest slope pq")->required();
  torus->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
  add_format(torus);

  std::vector<std::string> argv_store{"dinv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  RunResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    result.output = target->help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitInvalid;
    result.error = std::string("error: ") + e.what() + "\n" + app.help();
    return result;
  }

  const std::map<const CLI::App*, Command> commands{
      {lens, Command::lens},
      {surgery, Command::surgery},
      {knot, Command::knot},
      {check, Command::check_reducible},
      {slice, Command::slice_obstruct},
      {slopes, Command::slopes_for_slice_genus},
      {lsp, Command::lspace_obstruct},
      {gen, Command::gen_alex},
      {rec, Command::reconstruct},
      {cross, Command::cross_check},
      {torus, Command::verify_torus},
  };
  config.command = commands.at(app.get_subcommands().front());
  config.format = formats.at(format_name);
  if (*g_vi) config.knot_view = KnotView::vi;
  if (*g_st) config.knot_view = KnotView::staircase;
  if (*g_th) config.knot_view = KnotView::thickness;
  if (*g_nu) config.knot_view = KnotView::nu_plus;
  return dispatch(config);
}

}  // namespace dinv::cli
