#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "windlab/render.hpp"
#include "windlab/serialize.hpp"
#include "windlab/verify.hpp"
#include "windlab/windlab.hpp"

namespace windlab::cli {

// exit codes: 0 success / "trivial"; 1 "nontrivial" or suite failure;
// 2 usage or word-syntax error; 3 violated precondition (e.g. not in F_2')
inline constexpr int kExitOk = 0;
inline constexpr int kExitNontrivial = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

namespace detail {

/// Malformed flag syntax is a usage error (exit 2); values that parse but
/// violate a precondition (a bad coloring, an out-of-range index) propagate
/// as invalid_argument / out_of_range and exit 3.
inline long long parse_ll(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "expected an integer, got '" + text + "'");
  }
}

/// Coloring spec grammar:
///   std:<i>            the standard coloring c_i (needs --n)
///   bw:BWWB...         explicit black/white string, length n
///   pgood:<p>:<c0,c1,...>  p-good coloring with explicit colors
inline std::variant<TwoColoring, PGoodColoring> parse_coloring(const std::string& text,
                                                               long long n) {
  if (text.rfind("std:", 0) == 0) {
    return standard_coloring(parse_ll(text.substr(4), "coloring"), n);
  }
  if (text.rfind("bw:", 0) == 0) {
    std::vector<CellColor> colors;
    for (char c : text.substr(3)) {
      if (c == 'B' || c == 'b')
        colors.push_back(CellColor::black);
      else if (c == 'W' || c == 'w')
        colors.push_back(CellColor::white);
      else
        throw CLI::ValidationError("coloring", "expected only 'B'/'W' after bw:");
    }
    return TwoColoring(n, std::move(colors));
  }
  if (text.rfind("pgood:", 0) == 0) {
    std::string rest = text.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("coloring", "expected pgood:<p>:<c0,c1,...>");
    long long p = parse_ll(rest.substr(0, colon), "coloring");
    std::vector<long long> colors;
    std::stringstream ss(rest.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) colors.push_back(parse_ll(item, "coloring"));
    return PGoodColoring(p, n, std::move(colors));
  }
  throw CLI::ValidationError("coloring", "expected std:<i>, bw:<...> or pgood:<p>:<...>");
}

inline std::pair<long long, long long> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("option", "expected a comma-separated pair, got '" + text + "'");
  return {parse_ll(text.substr(0, comma), "option"),
          parse_ll(text.substr(comma + 1), "option")};
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"windlab: winding invariants, colorings and order bounds for free "
               "metabelian groups of prime-power exponent"};
  app.require_subcommand(1);

  std::string word_text, coloring_text, phi_text, translate_text = "0,0";
  std::string group, method = "invariant", target, family, relator_file, out_file, suite;
  long long n = 0, index = 0, d = 2, p = 0, k = 0;
  bool as_json = false, fold = false, bar = false, tilde = false, large = false;
  bool numbers = false, list_suites = false;
  long long cell_px = 24, pad_cells = 1;

  auto* cmd_parse = app.add_subcommand("parse", "parse a word and print its canonical form");
  cmd_parse->add_option("word", word_text)->required();
  cmd_parse->add_flag("--fold", fold, "fold exponent runs (x^3 instead of xxx)");

  auto* cmd_winding = app.add_subcommand("winding", "winding invariant of a word in F_2'");
  cmd_winding->add_option("word", word_text)->required();
  cmd_winding->add_flag("--json", as_json);

  auto* cmd_inv = app.add_subcommand("invariant", "evaluate one Lambda invariant");
  cmd_inv->add_option("word", word_text)->required();
  cmd_inv->add_option("--n", n, "modulus")->required();
  cmd_inv->add_option("--phi", phi_text, "phi(1,0),phi(0,1)")->required();
  cmd_inv->add_option("--translate", translate_text, "translation i0,j0");
  cmd_inv->add_option("--coloring", coloring_text, "std:<i> | bw:<BW...> | pgood:<p>:<...>")
      ->required();
  cmd_inv->add_flag("--json", as_json);

  auto* cmd_omega = app.add_subcommand("omega", "Omega / Omega-bar / Omega-tilde vectors");
  cmd_omega->add_option("word", word_text)->required();
  cmd_omega->add_option("--n", n, "modulus (2^k, k >= 2)");
  cmd_omega->add_flag("--bar", bar, "prepend the reduced area invariant");
  cmd_omega->add_flag("--tilde", tilde, "the five-coordinate M(2,4) invariant");
  cmd_omega->add_flag("--json", as_json);

  auto* cmd_wp = app.add_subcommand("word-problem", "decide triviality in M(2,4) or N(2,n)");
  cmd_wp->add_option("word", word_text)->required();
  cmd_wp->add_option("--group", group, "m24 | n2n")->required();
  cmd_wp->add_option("--n", n, "exponent for n2n");
  cmd_wp->add_option("--method", method, "invariant | normalform (m24 only)");

  auto* cmd_id = app.add_subcommand("identity", "Engel / Morse / basic-commutator reports");
  cmd_id->add_option("--family", family, "engel | morse | basic")->required();
  cmd_id->add_option("--n", n, "modulus (2^k)")->required();
  cmd_id->add_option("--index", index, "for engel: also report Omega(e_index)");
  cmd_id->add_flag("--json", as_json);

  auto* cmd_img = app.add_subcommand("image-order", "orders of invariant images");
  cmd_img->add_option("--target", target, "omega | omega-bar | cotainf | r28")->required();
  cmd_img->add_option("--n", n, "modulus");
  cmd_img->add_flag("--json", as_json);

  auto* cmd_q = app.add_subcommand("quotient", "lattice quotient of the relator family");
  cmd_q->add_option("--n", n, "exponent")->required();
  cmd_q->add_option("--relators", relator_file, "file with one word per line");
  cmd_q->add_flag("--large", large, "allow n = 16 (Z^256 lattice, multi-minute)");
  cmd_q->add_flag("--json", as_json);

  auto* cmd_b = app.add_subcommand("bounds", "closed-form order bounds for M(d,n)");
  cmd_b->add_option("--d", d, "rank")->required();
  cmd_b->add_option("--n", n, "exponent")->required();
  cmd_b->add_option("--p", p, "prime (inferred when omitted)");
  cmd_b->add_option("--k", k, "n = p^k (inferred when omitted)");
  cmd_b->add_flag("--json", as_json);

  auto* cmd_r = app.add_subcommand("render", "SVG picture of the lattice curve");
  cmd_r->add_option("word", word_text)->required();
  cmd_r->add_option("-o,--output", out_file, "output SVG path")->required();
  cmd_r->add_option("--coloring", coloring_text, "background coloring spec");
  cmd_r->add_option("--n", n, "modulus for the background coloring");
  cmd_r->add_option("--phi", phi_text, "phi for the background coloring (default 0,1)");
  cmd_r->add_option("--cell-px", cell_px, "cell size in pixels");
  cmd_r->add_option("--pad", pad_cells, "padding in cells");
  cmd_r->add_flag("--numbers", numbers, "label squares with winding numbers");

  auto* cmd_v = app.add_subcommand("verify", "run the oracle and property suites");
  cmd_v->add_option("--suite", suite, "suite id (default: all)");
  cmd_v->add_flag("--list", list_suites, "list suite ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*cmd_parse) {
      out << to_string(Word::parse(word_text), fold) << "\n";
      return kExitOk;
    }

    if (*cmd_winding) {
      LaurentPoly poly = winding_invariant(Word::parse(word_text));
      if (as_json)
        out << poly_to_json(poly).dump() << "\n";
      else
        out << to_text(poly) << "\n";
      return kExitOk;
    }

    if (*cmd_inv) {
      auto [px_, py_] = detail::parse_pair(phi_text);
      InvariantSpec spec{n, px_, py_, detail::parse_pair(translate_text),
                         detail::parse_coloring(coloring_text, n)};
      long long value = lambda_value(spec, Word::parse(word_text));
      if (as_json)
        out << invariant_report_json(spec, value).dump() << "\n";
      else
        out << "Lambda = " << value << " (mod " << n << ")\n";
      return kExitOk;
    }

    if (*cmd_omega) {
      Word w = Word::parse(word_text);
      if (tilde) {
        auto t = omega_tilde(w);
        json j = {{"n", 4}, {"tilde", std::vector<long long>(t.begin(), t.end())}};
        if (as_json)
          out << j.dump() << "\n";
        else
          out << "Omega~ = " << j["tilde"].dump() << " (mod 4)\n";
        return kExitOk;
      }
      if (n == 0) throw CLI::ValidationError("omega", "--n is required without --tilde");
      if (bar) {
        auto [a, o] = omega_bar(w, n);
        json j = omega_to_json(o);
        j["area_mod_half_n"] = a;
        if (as_json)
          out << j.dump() << "\n";
        else
          out << "area = " << a << " (mod " << n / 2 << "), h = " << json(o.h).dump()
              << ", v = " << json(o.v).dump() << " (mod " << n << ")\n";
        return kExitOk;
      }
      OmegaVector o = omega(w, n);
      if (as_json)
        out << omega_to_json(o).dump() << "\n";
      else
        out << "h = " << json(o.h).dump() << ", v = " << json(o.v).dump() << " (mod " << n
            << ")\n";
      return kExitOk;
    }

    if (*cmd_wp) {
      Word w = Word::parse(word_text);
      bool trivial;
      if (group == "m24") {
        if (method == "normalform")
          trivial = m24_word_problem_nf(w);
        else if (method == "invariant")
          trivial = m24_is_trivial(w);
        else
          throw CLI::ValidationError("word-problem", "--method must be invariant|normalform");
      } else if (group == "n2n") {
        if (n < 1) throw CLI::ValidationError("word-problem", "--n is required for n2n");
        trivial = n2n_is_trivial(w, n);
      } else {
        throw CLI::ValidationError("word-problem", "--group must be m24|n2n");
      }
      out << (trivial ? "trivial" : "nontrivial") << "\n";
      return trivial ? kExitOk : kExitNontrivial;
    }

    if (*cmd_id) {
      if (family == "engel") {
        EngelGammaReport r = engel_gamma_report(n);
        json j{{"n", r.n},
               {"first_vanishing_engel_index", r.vanishing_index},
               {"omega_trivial_on_gamma", r.gamma_triviality_index}};
        if (index > 0)
          j["omega_of_e_index"] = omega_to_json(omega_of_poly(engel_winding(index), n));
        if (as_json)
          out << j.dump() << "\n";
        else
          out << "Omega(e_" << r.vanishing_index << ") = 0 in Z_" << n
              << "; Omega is trivial on gamma_" << r.gamma_triviality_index << "(F_2)\n";
        return kExitOk;
      }
      if (family == "morse") {
        long long kk = 0;
        while ((1LL << (kk + 1)) <= n) ++kk;
        if ((1LL << kk) != n) throw CLI::ValidationError("identity", "--n must be 2^k");
        MorseReport r = morse_report(kk);
        json j{{"k", r.k},
               {"n", r.n},
               {"satisfied_morse_index", r.satisfied_index},
               {"divisibility_certificate", r.divisibility_certificate},
               {"violated_morse_index", r.violated_index},
               {"h0_minus_h1", r.h0_minus_h1},
               {"violation_certificate", r.violation_certificate}};
        if (as_json)
          out << j.dump() << "\n";
        else
          out << "M(2," << r.n << ") satisfies the Morse identity at m=" << r.satisfied_index
              << " and violates it at m=" << r.violated_index
              << " (h0-h1 = " << r.h0_minus_h1 << ")\n";
        return kExitOk;
      }
      if (family == "basic") {
        BasicCommutatorReport r = basic_commutator_report(n);
        json j{{"n", r.n},
               {"expected", r.expected},
               {"values", r.values},
               {"all_equal_expected", r.all_equal_expected},
               {"none_divisible_by_8", r.none_divisible_by_8}};
        if (as_json)
          out << j.dump() << "\n";
        else
          out << "diagonal Lambda of e_{i," << n << "-i+1}: " << json(r.values).dump()
              << ", expected " << r.expected << " each\n";
        return kExitOk;
      }
      throw CLI::ValidationError("identity", "--family must be engel|morse|basic");
    }

    if (*cmd_img) {
      json j;
      if (target == "omega") {
        if (n == 0) throw CLI::ValidationError("image-order", "--n required");
        j = order_json(omega_image_order_full(n));
      } else if (target == "omega-bar") {
        if (n == 0) throw CLI::ValidationError("image-order", "--n required");
        j = order_json(omega_bar_image_order_full(n));
      } else if (target == "cotainf") {
        if (n == 0) throw CLI::ValidationError("image-order", "--n required");
        j = order_bound_image_json(order_bound_image_check(n));
      } else if (target == "r28") {
        j = restricted_burnside_json(restricted_burnside_bound());
      } else {
        throw CLI::ValidationError("image-order", "--target must be omega|omega-bar|cotainf|r28");
      }
      out << (as_json ? j.dump() : j.dump(2)) << "\n";
      return kExitOk;
    }

    if (*cmd_q) {
      if (n == 16 && !large)
        throw CLI::ValidationError("quotient",
                                   "n=16 builds a Z^256 lattice; pass --large to confirm");
      if (n > 16) throw CLI::ValidationError("quotient", "n > 16 is not supported");
      std::vector<Word> relators;
      if (relator_file.empty()) {
        relators = relator_family(n);
      } else {
        std::ifstream in(relator_file);
        if (!in) throw std::runtime_error("cannot open relator file: " + relator_file);
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          relators.push_back(Word::parse(line));
        }
      }
      QuotientSummary s = quotient_order(build_lattice(relators, n));
      out << (as_json ? quotient_summary_json(s).dump() : quotient_summary_json(s).dump(2))
          << "\n";
      return kExitOk;
    }

    if (*cmd_b) {
      ClosedFormBounds b = closed_form_bounds(d, n, p, k);
      if (as_json) {
        out << bounds_json(b).dump() << "\n";
      } else {
        for (const auto& e : b.entries) {
          out << e.name << " [" << e.formula << "]: ";
          if (e.applicable && !e.value.is_zero())
            out << e.value.to_string();
          else if (e.applicable)
            out << e.note;
          else
            out << "not applicable" << (e.note.empty() ? "" : " (" + e.note + ")");
          out << "\n";
        }
      }
      return kExitOk;
    }

    if (*cmd_r) {
      RenderConfig cfg;
      cfg.cell_px = static_cast<int>(cell_px);
      cfg.pad_cells = static_cast<int>(pad_cells);
      cfg.show_winding_numbers = numbers;
      if (!coloring_text.empty()) {
        if (n == 0) throw CLI::ValidationError("render", "--coloring needs --n");
        auto [px_, py_] = phi_text.empty() ? std::pair<long long, long long>{0, 1}
                                           : detail::parse_pair(phi_text);
        cfg.coloring = InvariantSpec{n, px_, py_, {0, 0},
                                     detail::parse_coloring(coloring_text, n)};
      }
      std::string svg = render_svg(Word::parse(word_text), cfg);
      std::ofstream file(out_file, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file: " + out_file);
      file << svg;
      if (!file) throw std::runtime_error("failed writing: " + out_file);
      out << "wrote " << out_file << " (" << svg.size() << " bytes)\n";
      return kExitOk;
    }

    if (*cmd_v) {
      if (list_suites) {
        for (const auto& c : acceptance_checks()) out << c.id << "\n";
        return kExitOk;
      }
      std::vector<std::string> selection;
      if (!suite.empty() && suite != "all") selection.push_back(suite);
      auto results = run_checks(selection);
      if (results.empty()) {
        err << "unknown suite: " << suite << "\n";
        return kExitUsage;
      }
      bool all_pass = true;
      for (const auto& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.pass) out << " -- " << r.detail;
        out << "\n";
        all_pass = all_pass && r.pass;
      }
      return all_pass ? kExitOk : kExitNontrivial;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotInDerivedSubgroup& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::out_of_range& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNontrivial;
  }
  return kExitUsage;
}

}  // namespace windlab::cli
