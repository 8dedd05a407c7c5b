#pragma once

// Command-line front end. run() is separate from main() so tests can drive it
// with captured streams.
//
// Exit codes: 0 success, 1 assertion or fuzz failure, 2 input parse error,
// 3 mathematical precondition violation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modknot/modknot.hpp"

namespace modknot::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kParse = 2, kPrecondition = 3 };

/// A command-line operand resolved to a primitive class.
struct Operand {
  std::string text;
  LorenzWord word;
};

/// Words match [LR]+; anything containing ';' is a matrix.
inline Operand resolve_operand(const std::string& token) {
  if (token.find(';') != std::string::npos) {
    Psl2Matrix m = parse_matrix(token);
    MatrixClass cls = word_of_matrix(m);
    if (!cls.primitive())
      throw PreconditionError("matrix " + m.str() + " is not primitive: it is conjugate to mat(" + cls.word.str() + ")^" +
                              std::to_string(cls.power));
    return {token, cls.word};
  }
  return {token, parse_word(token)};
}

inline Json word_json(const Psl2Matrix& m, const MatrixClass& cls) {
  Json j;
  j["matrix"] = m.str();
  j["form"] = form_of_matrix(m).str();
  j["word"] = cls.word.str();
  j["power"] = cls.power;
  j["primitive"] = cls.primitive();
  j["reciprocal"] = is_reciprocal(cls.word);
  return j;
}

inline Json cf_json(const CfExpansion& cf) {
  Json j;
  j["preperiod"] = Json::array();
  for (const auto& t : cf.preperiod) j["preperiod"].push_back(to_string(t));
  j["period"] = Json::array();
  for (const auto& t : cf.period) j["period"].push_back(to_string(t));
  j["period_start_parity"] = cf.period_start_parity;
  return j;
}

inline void print_report(std::ostream& out, const LinkReport& r) {
  out << "A: " << r.word_a.str() << " (canonical " << canonical(r.word_a).str() << ")\n";
  out << "B: " << r.word_b.str() << " (canonical " << canonical(r.word_b).str() << ")\n";
  if (r.rs_link) {
    out << "rs triples (i,j,x):";
    for (const auto& t : r.triples) out << " (" << t.i << "," << t.j << "," << t.x << ")";
    out << "\nrs link: " << *r.rs_link << "\n";
  }
  if (r.oracle_link) out << "oracle link: " << *r.oracle_link << "\n";
  if (r.kennedy) {
    const auto& k = *r.kennedy;
    out << "kennedy: (" << k.c1 << " + " << k.c2 << " - " << k.c3 << ")/4 = " << to_string(k.value) << "\n";
  }
  if (r.symmetrized) out << "symmetrized: " << *r.symmetrized << "\n";
  if (auto ok = r.rs_oracle_agree()) out << "rs/oracle agree: " << (*ok ? "yes" : "NO") << "\n";
  if (auto ok = r.kennedy_agree()) out << "kennedy agrees: " << (*ok ? "yes" : "no") << "\n";
}

inline MethodSet parse_method(const std::string& name) {
  if (name == "rs") return MethodSet::only_rs();
  if (name == "oracle") return MethodSet::only_oracle();
  if (name == "kennedy") return MethodSet::only_kennedy();
  return MethodSet::all();
}

inline int cmd_word(const std::string& text, bool json, std::ostream& out) {
  Psl2Matrix m = parse_matrix(text);
  MatrixClass cls = word_of_matrix(m);
  if (json) {
    out << word_json(m, cls).dump(2) << "\n";
  } else {
    out << "matrix: " << m.str() << "\n"
        << "form: " << form_of_matrix(m) << "\n"
        << "word: " << cls.word.str() << "\n"
        << "power: " << cls.power << (cls.primitive() ? " (primitive)" : " (not primitive)") << "\n";
  }
  return kOk;
}

inline int cmd_river(const std::string& text, bool json, std::ostream& out) {
  QuadForm q = parse_form(text);
  LorenzWord raw = river_word(q);
  CfExpansion cf = cf_expand(q);
  auto [reduced, move] = reduce_to_river_form(q);
  Psl2Matrix aut = automorph(reduced);
  if (json) {
    Json j;
    j["form"] = q.str();
    j["discriminant"] = to_string(discriminant(q));
    j["continued_fraction"] = cf_json(cf);
    j["river_word"] = raw.str();
    j["canonical"] = canonical(raw).str();
    j["river_form"] = reduced.str();
    j["automorph"] = aut.str();
    out << j.dump(2) << "\n";
  } else {
    out << "form: " << q << "\n"
        << "discriminant: " << discriminant(q) << "\n"
        << "continued fraction: " << cf.str() << "\n"
        << "river word: " << raw.str() << "\n"
        << "canonical: " << canonical(raw).str() << "\n"
        << "river form: " << reduced << "\n"
        << "automorph: " << aut.str() << "\n";
  }
  return kOk;
}

inline int cmd_link(const std::string& a, const std::string& b, MethodSet methods, bool json, std::ostream& out) {
  Operand x = resolve_operand(a);
  Operand y = resolve_operand(b);
  LinkReport r = build_report(x.word, y.word, methods);
  if (json)
    out << to_json(r).dump(2) << "\n";
  else
    print_report(out, r);
  return (methods.rs && methods.oracle && !*r.rs_oracle_agree()) ? kFailure : kOk;
}

/// One pair per line; blank lines and lines starting with '#' are skipped.
/// Every line is attempted; the exit code is that of the first failing line.
inline int cmd_link_batch(const std::string& path, MethodSet methods, bool json, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open batch file '" << path << "'\n";
    return kParse;
  }
  int status = kOk;
  auto note = [&](int code) {
    if (status == kOk) status = code;
  };
  Json docs = Json::array();
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a) || a[0] == '#') continue;
    try {
      if (!(fields >> b) || (fields >> extra)) throw ParseError("expected exactly two tokens");
      Operand x = resolve_operand(a);
      Operand y = resolve_operand(b);
      LinkReport r = build_report(x.word, y.word, methods);
      if (methods.rs && methods.oracle && !*r.rs_oracle_agree()) note(kFailure);
      if (json) {
        docs.push_back(to_json(r));
      } else {
        if (!first) out << "\n";
        print_report(out, r);
      }
      first = false;
    } catch (const ParseError& e) {
      err << path << ":" << lineno << ": error: " << e.what() << "\n";
      note(kParse);
    } catch (const PreconditionError& e) {
      err << path << ":" << lineno << ": error: " << e.what() << "\n";
      note(kPrecondition);
    }
  }
  if (json) out << docs.dump(2) << "\n";
  return status;
}

inline int cmd_table3(bool json, std::ostream& out) {
  std::vector<Table3Row> rows = compute_table3();
  bool ok = true;
  if (json) {
    Json knots = Json::array();
    for (const auto& k : kTable3Knots) knots.push_back(Json{{"name", k.name}, {"word", k.word}, {"matrix", k.matrix}});
    Json j;
    j["knots"] = std::move(knots);
    j["rows"] = Json::array();
    for (const auto& r : rows) {
      ok = ok && r.matches() && r.all_negative();
      j["rows"].push_back(Json{{"pair", r.x + "," + r.y},
                               {"link", r.link},
                               {"link_inverse", r.link_inverse},
                               {"symmetrized", r.symmetrized},
                               {"expected_magnitudes", r.expected_magnitudes},
                               {"match", r.matches()}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& k : kTable3Knots)
      out << k.name << " = " << k.word << "  [" << k.matrix << "]\n";
    out << "\n";
    out << std::left << std::setw(6) << "X,Y" << std::setw(12) << "link(X,Y)" << std::setw(14) << "link(X,Y^-1)"
        << std::setw(22) << "link(X+X^-1,Y+Y^-1)" << std::setw(14) << "expected |.|"
        << "match\n";
    for (const auto& r : rows) {
      ok = ok && r.matches() && r.all_negative();
      std::ostringstream mags;
      mags << r.expected_magnitudes[0] << " " << r.expected_magnitudes[1] << " " << r.expected_magnitudes[2];
      out << std::left << std::setw(6) << (r.x + "," + r.y) << std::setw(12) << r.link << std::setw(14)
          << r.link_inverse << std::setw(22) << r.symmetrized << std::setw(14) << mags.str()
          << (r.matches() ? "yes" : "NO") << "\n";
    }
  }
  return ok ? kOk : kFailure;
}

inline int cmd_fuzz(const FuzzOptions& opts, bool json, std::ostream& out) {
  FuzzSummary s = run_fuzz(opts);
  if (json) {
    Json j;
    j["max_len"] = opts.max_len;
    j["words"] = s.words;
    j["pairs"] = s.pairs;
    j["violations"] = Json::array();
    for (const auto& f : s.failures) j["violations"].push_back(Json{{"a", f.a}, {"b", f.b}, {"reason", f.reason}});
    if (opts.kennedy) {
      Json k;
      k["agree"] = s.kennedy_agree;
      k["disagree"] = s.kennedy_disagreements.size();
      k["non_integer"] = s.kennedy_non_integer;
      k["disagreements"] = Json::array();
      for (const auto& d : s.kennedy_disagreements)
        k["disagreements"].push_back(Json{{"a", d.a},
                                          {"b", d.b},
                                          {"rs_link", d.rs},
                                          {"value_num", d.kennedy.numerator()},
                                          {"value_den", d.kennedy.denominator()}});
      j["kennedy"] = std::move(k);
    } else {
      j["kennedy"] = nullptr;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "canonical words (length 2.." << opts.max_len << "): " << s.words << "\n"
        << "ordered pairs: " << s.pairs << "\n"
        << "rs/oracle, symmetry and sign violations: " << s.failures.size() << "\n";
    for (const auto& f : s.failures) out << "  " << f.a << " " << f.b << ": " << f.reason << "\n";
    if (opts.kennedy) {
      out << "kennedy agreements: " << s.kennedy_agree << "\n"
          << "kennedy disagreements: " << s.kennedy_disagreements.size() << " (non-integer: " << s.kennedy_non_integer
          << ")\n";
      for (const auto& d : s.kennedy_disagreements)
        out << "  " << d.a << " " << d.b << ": rs " << d.rs << ", kennedy " << to_string(d.kennedy) << "\n";
    }
  }
  return s.ok() ? kOk : kFailure;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Linking numbers of modular and Lorenz knots", "modknot"};
  app.require_subcommand(1);
  bool json = false;

  auto* word = app.add_subcommand("word", "Lorenz word and power of a hyperbolic matrix");
  std::string matrix_text;
  word->add_option("matrix", matrix_text, "matrix as a,b;c,d")->required();
  word->add_flag("--json", json, "emit JSON");

  auto* river = app.add_subcommand("river", "river word of an indefinite binary quadratic form");
  std::string form_text;
  river->add_option("form", form_text, "form as a,b,c (use -- before a negative leading entry)")->required();
  river->add_flag("--json", json, "emit JSON");

  auto* link = app.add_subcommand("link", "linking number of two knots (words or matrices)");
  std::vector<std::string> operands;
  std::string method = "all";
  std::string batch;
  auto* ops = link->add_option("operands", operands, "two operands: words over L,R or matrices a,b;c,d")->expected(2);
  link->add_option("--method", method, "rs, oracle, kennedy or all")
      ->check(CLI::IsMember({"rs", "oracle", "kennedy", "all"}));
  auto* batch_opt = link->add_option("--batch", batch, "file with one pair per line");
  batch_opt->excludes(ops);
  link->add_flag("--json", json, "emit JSON");

  auto* table3 = app.add_subcommand("table3", "linking numbers among four non-reciprocal knots");
  table3->add_flag("--json", json, "emit JSON");

  auto* fuzz = app.add_subcommand("fuzz", "compare methods on all word pairs up to a length");
  FuzzOptions fopts;
  fuzz->add_option("--max-len", fopts.max_len, "maximum word length")->check(CLI::Range(2, 16));
  fuzz->add_flag("--kennedy", fopts.kennedy, "also evaluate the alphabetization formula");
  fuzz->add_option("--threads", fopts.threads, "worker threads (0: all cores)");
  fuzz->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  try {
    if (word->parsed()) return cmd_word(matrix_text, json, out);
    if (river->parsed()) return cmd_river(form_text, json, out);
    if (link->parsed()) {
      MethodSet methods = parse_method(method);
      if (!batch.empty()) return cmd_link_batch(batch, methods, json, out, err);
      if (operands.size() != 2) {
        err << "error: link needs two operands or --batch FILE\n";
        return kParse;
      }
      return cmd_link(operands[0], operands[1], methods, json, out);
    }
    if (table3->parsed()) return cmd_table3(json, out);
    if (fuzz->parsed()) return cmd_fuzz(fopts, json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace modknot::cli
