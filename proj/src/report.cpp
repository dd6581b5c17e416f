#include "ihull/report.hpp"

#include <algorithm>
#include <set>

#include "ihull/freeprod.hpp"
#include "ihull/strings.hpp"
#include "ihull/verify.hpp"

namespace ihull {

namespace {

// Element sets go out as name arrays sorted lexicographically.
json names(const Semigroup& S, const ElemSet& X) {
  std::vector<std::string> out;
  for (Elem x : X) out.push_back(x == kOne ? "1*" : S.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

json name(const Semigroup& S, Elem x) { return x == kOne ? "1*" : S.name(x); }

json yes(bool b) { return b; }

// delta_x for the first x with divisors(x) = sigma.
std::string string_label(const Semigroup& S, const StringSet& sigma) {
  for (Elem x : S.nonzero())
    if (divisors(S, x) == sigma) return "δ_" + S.name(x);
  return "";
}

json string_labels(const Semigroup& S, const std::vector<StringSet>& list) {
  std::vector<std::string> out;
  for (const auto& s : list) out.push_back(string_label(S, s));
  std::sort(out.begin(), out.end());
  return out;
}

int generator(const Semilattice& E, const Character& phi) {
  for (int x = 0; x < E.size(); ++x) {
    if (!phi[x]) continue;
    bool least = true;
    for (int y = 0; y < E.size(); ++y)
      if (phi[y] && !E.leq(x, y)) least = false;
    if (least) return x;
  }
  return -1;
}

json char_cell(const Semigroup& S, const Semilattice& E, const Character& phi) {
  const int g = generator(E, phi);
  return g < 0 ? json(nullptr) : names(S, E.members[g]);
}

Report start(const std::string& command, const InputDocument& doc) {
  Report r;
  r.command = command;
  r.subject = doc.origin;
  return r;
}

void oracle_row(Report& r, Table& t, const std::string& check, bool ok) {
  t.rows.push_back({check, ok ? "agree" : "DISAGREE"});
  if (!ok) {
    r.status = 2;
    r.notes.push_back("oracle mismatch: " + check);
  }
}

std::string cell_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + cell_text(v[i]);
    return out + "}";
  }
  return v.dump();
}

// Display width in code points, so "δ" counts once.
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
  return n;
}

}  // namespace

json report_to_json(const Report& r) {
  json tables = json::array();
  for (const auto& t : r.tables) {
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(row);
    tables.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", rows}});
  }
  return {{"command", r.command}, {"subject", r.subject}, {"tables", tables}, {"notes", r.notes}, {"status", r.status}};
}

Report report_from_json(const json& j) {
  Report r;
  try {
    r.command = j.at("command").get<std::string>();
    r.subject = j.at("subject").get<std::string>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.status = j.at("status").get<int>();
    for (const auto& t : j.at("tables")) {
      Table table;
      table.title = t.at("title").get<std::string>();
      table.columns = t.at("columns").get<std::vector<std::string>>();
      for (const auto& row : t.at("rows")) table.rows.push_back(row.get<std::vector<json>>());
      r.tables.push_back(std::move(table));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Input, std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string render_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::string out = r.command + ": " + r.subject + "\n";
  for (const auto& t : r.tables) {
    out += "\n" + t.title + " (" + std::to_string(t.rows.size()) + ")\n";
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> w;
    for (const auto& c : t.columns) w.push_back(width(c));
    for (const auto& row : t.rows) {
      cells.emplace_back();
      for (std::size_t i = 0; i < row.size(); ++i) {
        cells.back().push_back(cell_text(row[i]));
        if (i < w.size()) w[i] = std::max(w[i], width(cells.back().back()));
      }
    }
    auto line = [&](const std::vector<std::string>& v) {
      std::string s = " ";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += " " + v[i];
        if (i + 1 < v.size()) s += std::string(w[i] - width(v[i]) + 1, ' ');
      }
      s.erase(s.find_last_not_of(' ') + 1);
      return s + "\n";
    };
    out += line(t.columns);
    std::vector<std::string> rule;
    for (std::size_t x : w) rule.push_back(std::string(x, '-'));
    out += line(rule);
    for (const auto& c : cells) out += line(c);
  }
  if (!r.notes.empty()) out += "\n";
  for (const auto& n : r.notes) out += n + "\n";
  return out;
}

std::vector<std::string> command_names() {
  return {"props", "hull", "constructible", "strings", "spectrum", "census", "verify"};
}

Report run_command(const std::string& command, const InputDocument& doc, const Options& opts) {
  if (command == "props") return cmd_props(doc, opts);
  if (command == "hull") return cmd_hull(doc, opts);
  if (command == "constructible") return cmd_constructible(doc, opts);
  if (command == "strings") return cmd_strings(doc, opts);
  if (command == "spectrum") return cmd_spectrum(doc, opts);
  if (command == "census") return cmd_census(doc, opts);
  if (command == "verify") return cmd_verify(doc, opts);
  throw Error(ErrorKind::Input, "unknown command '" + command + "'");
}

Report cmd_props(const InputDocument& doc, const Options&) {
  const Semigroup& S = doc.semigroup;
  Report r = start("props", doc);
  PropertyFlags f = property_flags(S);

  Table summary{"properties", {"property", "value"}, {}};
  summary.rows = {{"kind", input_kind_name(doc.kind)},
                  {"size", S.size()},
                  {"0-left cancellative", yes(f.zero_left_cancellative)},
                  {"0-right cancellative", yes(f.zero_right_cancellative)},
                  {"categorical at zero", yes(f.categorical_at_zero)},
                  {"right reductive", yes(f.right_reductive)},
                  {"right local units", yes(f.right_local_units)},
                  {"unital", yes(f.unital)},
                  {"admits lcms", yes(f.admits_lcms)}};
  r.tables.push_back(std::move(summary));

  Table mult{"multiplication", {"*"}, {}};
  for (Elem y = 0; y < S.size(); ++y) mult.columns.push_back(S.name(y));
  for (Elem x = 0; x < S.size(); ++x) {
    std::vector<json> row{S.name(x)};
    for (Elem y = 0; y < S.size(); ++y) row.push_back(S.name(S.mul(x, y)));
    mult.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(mult));

  Table elems{"elements", {"element", "idempotent", "prime", "irreducible", "degenerate", "right unit", "divisors"}, {}};
  for (Elem s : S.nonzero()) {
    ElementClass k = classify_element(S, s);
    elems.rows.push_back({S.name(s), yes(k.idempotent), yes(k.prime), yes(k.irreducible), yes(k.degenerate),
                          k.right_unit ? name(S, *k.right_unit) : json(nullptr), names(S, divisors(S, s))});
  }
  r.tables.push_back(std::move(elems));

  Table pairs{"pairs", {"s", "t", "lcm", "alignment", "witnesses"}, {}};
  for (Elem s : S.nonzero())
    for (Elem t : S.nonzero()) {
      if (t < s) continue;
      auto l = lcm(S, s, t);
      Alignment a = alignment(S, s, t);
      pairs.rows.push_back({S.name(s), S.name(t), l ? name(S, *l) : json(nullptr), to_string(a.kind),
                            names(S, a.witnesses)});
    }
  r.tables.push_back(std::move(pairs));
  return r;
}

Report cmd_hull(const InputDocument& doc, const Options& opts) {
  const Semigroup& S = doc.semigroup;
  Report r = start("hull", doc);
  Hull H = generate_hull(S, opts.max_hull);
  const bool nf = admits_lcms(S);
  Table t{"inverse hull", {"#", "word", "map", "domain", "idempotent", "u", "lambda", "v"}, {}};
  for (std::size_t i = 0; i < H.size(); ++i) {
    std::vector<json> row{static_cast<int>(i), word_render(S, H.witness(i)), pb_render(S, H[i]),
                          names(S, H[i].domain()), yes(H[i].is_idempotent())};
    if (nf) {
      NormalForm n = hull_normal_form(S, H, i);
      row.push_back(name(S, n.u));
      row.push_back(names(S, n.lambda));
      row.push_back(name(S, n.v));
    } else {
      row.insert(row.end(), {nullptr, nullptr, nullptr});
    }
    t.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(t));
  if (!nf) r.notes.push_back("normal forms omitted: no lcms");
  r.notes.push_back("0-E-unitary: " + std::string(is_zero_e_unitary(H) ? "yes" : "no"));
  if (opts.oracle) {
    Table o{"oracle", {"check", "result"}, {}};
    oracle_row(r, o, "constructible sets = closure", constructible_sets(H) == constructible_closure(S));
    r.tables.push_back(std::move(o));
  }
  return r;
}

Report cmd_constructible(const InputDocument& doc, const Options& opts) {
  const Semigroup& S = doc.semigroup;
  Report r = start("constructible", doc);
  Hull H = generate_hull(S, opts.max_hull);
  const auto sets = constructible_sets(H);
  Table t{"constructible sets", {"set", "labels", "witness"}, {}};
  for (const auto& X : sets) {
    std::vector<std::string> labels;
    for (Elem s : S.nonzero()) {
      if (E_set(S, s) == X) labels.push_back("E_" + S.name(s));
      if (F_set(S, s) == X) labels.push_back("F_" + S.name(s));
    }
    std::string witness;
    for (std::size_t i : H.idempotents())
      if (H[i].domain() == X) {
        witness = word_render(S, H.witness(i));
        break;
      }
    t.rows.push_back({names(S, X), labels, witness});
  }
  r.tables.push_back(std::move(t));
  if (opts.oracle) {
    Table o{"oracle", {"check", "result"}, {}};
    oracle_row(r, o, "constructible sets = closure under s[.] and s^-1[.]", sets == constructible_closure(S));
    r.tables.push_back(std::move(o));
  }
  return r;
}

Report cmd_strings(const InputDocument& doc, const Options& opts) {
  const Semigroup& S = doc.semigroup;
  Report r = start("strings", doc);
  const auto strings = all_strings(S);
  Table t{"strings", {"label", "string", "open", "maximal", "degenerate", "prime singleton"}, {}};
  for (const auto& sigma : strings) {
    StringClass k = classify_string(S, sigma);
    t.rows.push_back({string_label(S, sigma), names(S, sigma), yes(k.open), yes(k.maximal), yes(k.degenerate),
                      yes(k.prime_singleton)});
  }
  r.tables.push_back(std::move(t));

  if (property_flags(S).zero_left_cancellative) {
    Table d{"star domains", {"s", "F*", "E*"}, {}};
    for (Elem s : S.nonzero()) {
      StarDomains sd = star_domains(S, s);
      d.rows.push_back({S.name(s), string_labels(S, sd.F), string_labels(S, sd.E)});
    }
    r.tables.push_back(std::move(d));
  }

  if (opts.oracle) {
    Table o{"oracle", {"check", "result"}, {}};
    if (S.nonzero().size() <= 12) {
      auto brute = all_strings_bruteforce(S);
      oracle_row(r, o, "strings = subset enumeration",
                 std::set<StringSet>(strings.begin(), strings.end()) == std::set<StringSet>(brute.begin(), brute.end()));
    } else {
      o.rows.push_back({"strings = subset enumeration", "skipped: more than 12 nonzero elements"});
    }
    r.tables.push_back(std::move(o));
  }
  return r;
}

Report cmd_spectrum(const InputDocument& doc, const Options& opts) {
  const Semigroup& S = doc.semigroup;
  Report r = start("spectrum", doc);
  Spectrum sp = spectrum_of(S, opts.max_hull);
  const Semilattice& E = sp.E;

  Table m{"semilattice", {"#", "set", "strings"}, {}};
  for (int x = 0; x < E.size(); ++x) m.rows.push_back({x, names(S, E.members[x]), string_labels(S, epsilon(S, E.members[x]))});
  r.tables.push_back(std::move(m));

  const bool lcms = admits_lcms(S);
  Table c{"characters", {"generator", "ultra", "tight", "open", "ground", "string"}, {}};
  const auto fs = filters(E);
  for (const auto& xi : fs) {
    Character phi = char_of(E, xi);
    CharacterClass k = classify_character(S, sp, phi);
    std::vector<json> row{char_cell(S, E, phi), yes(is_ultra(E, xi)), yes(is_tight(E, phi, opts.max_cover)),
                          yes(k.open), yes(k.ground)};
    row.push_back(lcms ? names(S, sigma_from_char(S, sp, phi)) : json(nullptr));
    c.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(c));

  if (opts.oracle) {
    Table o{"oracle", {"check", "result"}, {}};
    if (static_cast<int>(E.size()) <= 17) {
      auto brute = filters_bruteforce(E);
      oracle_row(r, o, "filters = subset enumeration",
                 std::set<Filter>(fs.begin(), fs.end()) == std::set<Filter>(brute.begin(), brute.end()));
    } else {
      o.rows.push_back({"filters = subset enumeration", "skipped: more than 16 nonzero members"});
    }
    if (E.size() <= 8) {
      bool same = true;
      for (const auto& xi : fs) {
        Character phi = char_of(E, xi);
        same = same && is_tight(E, phi, opts.max_cover) == is_tight_bruteforce(E, phi);
      }
      oracle_row(r, o, "tightness = cover enumeration", same);
    } else {
      o.rows.push_back({"tightness = cover enumeration", "skipped: more than 8 members"});
    }
    r.tables.push_back(std::move(o));
  }
  return r;
}

Report cmd_census(const InputDocument& doc, const Options& opts) {
  const Semigroup& S = doc.semigroup;
  Report r = start("census", doc);
  Spectrum sp = spectrum_of(S, opts.max_hull);
  Census c = ultra_census(S, sp);

  Table o{"open ultracharacters", {"string", "label", "generator"}, {}};
  for (const auto& u : c.open) o.rows.push_back({names(S, u.sigma), string_label(S, u.sigma), char_cell(S, sp.E, u.phi)});
  r.tables.push_back(std::move(o));

  Table n{"non-open ultracharacters", {"u", "ground", "generator"}, {}};
  for (const auto& u : c.nonopen)
    n.rows.push_back({name(S, u.u), char_cell(S, sp.E, u.ground), char_cell(S, sp.E, u.phi)});
  r.tables.push_back(std::move(n));

  Table q{"quasi-maximal strings", {"string", "label", "maximal"}, {}};
  for (const auto& s : c.quasi_maximal) q.rows.push_back({names(S, s), string_label(S, s), yes(is_maximal_string(S, s))});
  r.tables.push_back(std::move(q));

  r.notes.push_back(std::to_string(c.ultras.size()) + " ultracharacters, " + std::to_string(c.open.size()) +
                    " open, " + std::to_string(c.nonopen.size()) + " non-open");
  return r;
}

Report cmd_verify(const InputDocument& doc, const Options& opts) {
  Report r = start("verify", doc);
  auto results = run_suites(doc.semigroup, opts.suite, {opts.max_hull, opts.max_cover});
  Table t{"suites", {"suite", "status", "checks", "detail"}, {}};
  int pass = 0, fail = 0, skip = 0;
  for (const auto& s : results) {
    t.rows.push_back({s.name, suite_status_name(s.status), static_cast<int>(s.checks), s.detail});
    pass += s.status == SuiteStatus::Pass;
    fail += s.status == SuiteStatus::Fail;
    skip += s.status == SuiteStatus::Skipped;
  }
  r.tables.push_back(std::move(t));
  r.notes.push_back(std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " + std::to_string(skip) +
                    " skipped");
  if (fail) r.status = 2;
  return r;
}

Report cmd_freeprod(const InputDocument& M, const InputDocument& N, const std::vector<std::string>& exprs,
                    const Options& opts) {
  FreeProduct P(M.semigroup, N.semigroup);
  Report r;
  r.command = "freeprod";
  r.subject = M.origin + " * " + N.origin;
  Table forms{"normal forms", {"expression", "normal form", "syllables"}, {}};
  Table queries{"queries", {"x", "y", "x divides y", "lcm", "checked"}, {}};
  for (const auto& e : exprs) {
    const auto bar = e.find('|');
    if (bar == std::string::npos) {
      FpElement x = P.parse(e);
      forms.rows.push_back({e, P.render(x), static_cast<int>(x.syllables.size())});
      continue;
    }
    FpElement x = P.parse(e.substr(0, bar)), y = P.parse(e.substr(bar + 1));
    FpLcm l = P.lcm(x, y, opts.syllable_bound);
    json value = l.kind == FpLcm::Kind::Element ? json(P.render(l.value))
                 : l.kind == FpLcm::Kind::Zero  ? json("0")
                                                : json("unresolved");
    queries.rows.push_back({P.render(x), P.render(y), yes(P.divides(x, y)), value, static_cast<int>(l.checked)});
  }
  r.tables.push_back(std::move(forms));
  if (!queries.rows.empty()) {
    r.tables.push_back(std::move(queries));
    r.notes.push_back("lcms verified against all elements of at most " + std::to_string(opts.syllable_bound) +
                      " syllables");
  }
  return r;
}

}  // namespace ihull
