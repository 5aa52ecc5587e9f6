#include "pseudoeq/commands.hpp"

#include "pseudoeq/freeness.hpp"
#include "pseudoeq/pseudo_structure.hpp"
#include "pseudoeq/search.hpp"

namespace pseudoeq {

  namespace {
    using Json = nlohmann::ordered_json;

    Json word_list(FiniteLanguage const& l) {
      Json out = Json::array();
      for (auto const& w : l) {
        out.push_back(w.to_string());
      }
      return out;
    }

    std::string class_line(EqClass const& c) {
      return c.to_string() + "=" + c.members().to_string();
    }

    Json class_list(std::vector<EqClass> const& classes) {
      Json out = Json::array();
      for (auto const& c : classes) {
        out.push_back(Json{{"class", c.to_string()},
                           {"members", word_list(c.members())}});
      }
      return out;
    }

    std::string joined_classes(std::vector<EqClass> const& classes) {
      std::string out;
      for (auto const& c : classes) {
        if (!out.empty()) {
          out += ' ';
        }
        out += class_line(c);
      }
      return out.empty() ? "(none)" : out;
    }

    PseudoSolution assignment(JobConfig const& cfg, Equation const& e) {
      auto const&                    rel = cfg.anticongruence();
      std::map<std::string, EqClass> images;
      for (auto const& [x, w] : cfg.assign) {
        if (!e.unknowns()->find(x)) {
          throw ConfigError("assignment to " + x
                            + ", which does not occur in the equation");
        }
        images.emplace(x, EqClass(rel, w));
      }
      for (auto const& x : e.unknowns()->symbols()) {
        if (images.count(x) == 0) {
          throw ConfigError("assignment has no image for unknown " + x);
        }
      }
      return PseudoSolution(rel, std::move(images));
    }

    Json image_map(PseudoSolution const& phi) {
      Json out = Json::object();
      for (auto const& [x, c] : phi.images()) {
        out[x] = c.to_string();
      }
      return out;
    }

    Json image_map(Solution const& phi) {
      Json out = Json::object();
      for (auto const& [x, w] : phi.images()) {
        out[x] = w.to_string();
      }
      return out;
    }
  }  // namespace

  std::string Report::render(bool machine) const {
    if (machine) {
      Json doc;
      doc["command"] = command;
      for (auto const& [k, v] : data.items()) {
        doc[k] = v;
      }
      doc["exit_code"] = exit_code;
      return doc.dump(2) + "\n";
    }
    std::string out = "command: " + command + "\n";
    for (auto const& l : lines) {
      out += l + "\n";
    }
    return out;
  }

  Report cmd_hull(JobConfig const& cfg) {
    auto const& rel   = cfg.anticongruence();
    auto const& words = cfg.require_words();
    auto const  free  = free_hull(words);
    auto const  pfb   = pseudo_free_hull(rel, words);

    Report r;
    r.command                   = "hull";
    r.data["rel"]               = rel->to_string();
    r.data["words"]             = word_list(words);
    r.data["free_basis"]        = word_list(free.words());
    r.data["rank"]              = free.size();
    r.data["pseudo_free_basis"] = word_list(pfb.basis().words());
    r.data["classes"]           = class_list(pfb.classes());
    r.data["pseudo_rank"]       = pfb.classes().size();

    r.lines = {
        "rel: " + rel->to_string(),
        "words: " + words.to_string(),
        "free basis: " + free.words().to_string(),
        "rank: " + std::to_string(free.size()),
        "pseudo-free basis words: " + pfb.basis().words().to_string(),
        "pseudo-free basis classes: " + joined_classes(pfb.classes()),
        "pseudo-rank: " + std::to_string(pfb.classes().size()),
    };
    return r;
  }

  Report cmd_check(JobConfig const& cfg) {
    auto const& e   = cfg.require_equation();
    auto const  phi = assignment(cfg, e);
    auto const  v   = check_pseudo_solution(e, phi, cfg.product_limit);

    Report r;
    r.command            = "check";
    r.data["equation"]   = e.to_string();
    r.data["rel"]        = phi.rel()->to_string();
    r.data["assignment"] = image_map(phi);
    r.data["valid"]      = v.valid;
    r.lines = {"equation: " + e.to_string(),
               "rel: " + phi.rel()->to_string(),
               "assignment: " + phi.to_string()};

    if (phi.rel()->kind() == Anticongruence::Kind::identity) {
      std::map<std::string, Word> images;
      for (auto const& [x, c] : phi.images()) {
        images.emplace(x, c.rep());
      }
      Solution sol(cfg.alphabet, std::move(images));
      r.data["solution_rank"] = solution_rank(sol);
      r.lines.push_back("solution rank: " + std::to_string(solution_rank(sol)));
    }

    if (!v.valid) {
      r.data["lhs_language"] = word_list(v.lhs);
      r.data["rhs_language"] = word_list(v.rhs);
      r.lines.push_back("verdict: invalid");
      r.lines.push_back("lhs language: " + v.lhs.to_string());
      r.lines.push_back("rhs language: " + v.rhs.to_string());
      r.exit_code = kExitFail;
      return r;
    }

    auto const d              = descend(e, phi, cfg.product_limit);
    r.data["common_word"]     = v.common->to_string();
    r.data["lhs_language"]    = word_list(v.lhs);
    r.data["rhs_language"]    = word_list(v.rhs);
    Json alpha                = Json::object();
    for (auto const& [x, cw] : d.alpha_classes) {
      alpha[x] = cw.to_string();
    }
    r.data["descent"] = Json{
        {"pseudo_free_basis", word_list(d.hull.basis().words())},
        {"classes", class_list(d.hull.classes())},
        {"alpha", alpha},
        {"gamma_common", d.gamma_common.to_string()},
        {"alpha_solves", d.alpha_solves},
        {"pseudo_rank", d.pseudo_rank},
        {"alpha_rank", d.alpha_rank},
        {"theorem_holds", d.holds()}};

    r.lines.push_back("verdict: valid");
    r.lines.push_back("common word: " + v.common->to_string());
    r.lines.push_back("pseudo-free basis classes: "
                      + joined_classes(d.hull.classes()));
    for (auto const& [x, cw] : d.alpha_classes) {
      r.lines.push_back("alpha(" + x + ") = " + cw.to_string());
    }
    r.lines.push_back("gamma(common) = " + d.gamma_common.to_string());
    r.lines.push_back("pseudo-rank: " + std::to_string(d.pseudo_rank));
    r.lines.push_back("rank of alpha: " + std::to_string(d.alpha_rank));
    r.lines.push_back(std::string("alpha solves the equation over C: ")
                      + (d.alpha_solves ? "yes" : "no"));
    if (!d.holds()) {
      r.exit_code = kExitFail;
    }
    return r;
  }

  Report cmd_search(JobConfig const& cfg) {
    auto const&   e   = cfg.require_equation();
    auto const&   rel = cfg.anticongruence();
    SearchOptions opts;
    opts.max_len       = cfg.max_len;
    opts.budget        = cfg.budget;
    opts.product_limit = cfg.product_limit;
    opts.workers       = cfg.workers;
    auto const cert    = bounded_rank_certificate(e, cfg.alphabet, rel, opts);

    Report r;
    r.command          = "search";
    r.data["equation"] = e.to_string();
    r.data["rel"]      = rel->to_string();
    r.data["max_len"]  = cfg.max_len;
    r.data["complete"] = cert.complete();
    r.data["budget"]   = Json{
        {"limit", cfg.budget},
        {"ordinary_examined", cert.ordinary_stats.examined},
        {"ordinary_total", cert.ordinary_stats.total},
        {"pseudo_examined", cert.pseudo_stats.examined},
        {"pseudo_total", cert.pseudo_stats.total}};
    r.lines = {"equation: " + e.to_string(),
               "rel: " + rel->to_string(),
               "max_len: " + std::to_string(cfg.max_len)
                   + " (all ranks below are lower bounds at this length)"};
    if (!cert.complete()) {
      r.lines.push_back("PARTIAL: budget of " + std::to_string(cfg.budget)
                        + " assignments exhausted");
    }

    Json table = Json::array();
    r.lines.push_back("pseudo-solutions:");
    for (auto const& c : cert.pseudo_solutions) {
      table.push_back(Json{{"assignment", image_map(c.phi)},
                           {"common_word", c.common.to_string()},
                           {"pseudo_rank", c.pseudo_rank},
                           {"alpha_rank", c.alpha_rank},
                           {"theorem_holds", c.theorem_holds}});
      r.lines.push_back("  " + c.phi.to_string() + "  common=" + c.common.to_string()
                        + "  pseudo-rank=" + std::to_string(c.pseudo_rank)
                        + "  alpha-rank=" + std::to_string(c.alpha_rank)
                        + (c.theorem_holds ? "" : "  FAIL"));
    }
    r.data["pseudo_solutions"]    = table;
    r.data["ordinary_solutions"]  = cert.ordinary_solutions;
    r.data["max_ordinary_rank"]   = cert.max_ordinary_rank;
    r.data["ordinary_witness"]    = cert.ordinary_witness
                                        ? image_map(*cert.ordinary_witness)
                                        : Json(nullptr);
    r.data["pseudo_solution_count"] = cert.pseudo_solutions.size();
    r.data["max_pseudo_rank"]     = cert.max_pseudo_rank;
    r.data["pseudo_witness"]      = cert.pseudo_witness
                                        ? image_map(*cert.pseudo_witness)
                                        : Json(nullptr);
    r.data["theorem_checks"]      = cert.theorem_checks;
    r.data["theorem_failures"]    = cert.theorem_failures;
    bool const pass               = cert.theorem_failures == 0;
    r.data["theorem_property"]    = pass ? "pass" : "fail";

    r.lines.push_back("ordinary solutions: " + std::to_string(cert.ordinary_solutions));
    r.lines.push_back("max ordinary rank found: "
                      + std::to_string(cert.max_ordinary_rank)
                      + (cert.ordinary_witness
                             ? "  witness " + cert.ordinary_witness->to_string()
                             : ""));
    r.lines.push_back("pseudo-solutions: "
                      + std::to_string(cert.pseudo_solutions.size()));
    r.lines.push_back("max pseudo-rank found: " + std::to_string(cert.max_pseudo_rank)
                      + (cert.pseudo_witness
                             ? "  witness " + cert.pseudo_witness->to_string()
                             : ""));
    r.lines.push_back("pseudo-rank = rank of descended solution: "
                      + std::string(pass ? "PASS" : "FAIL") + " ("
                      + std::to_string(cert.theorem_checks) + " checked, "
                      + std::to_string(cert.theorem_failures) + " failed)");

    if (!cert.complete()) {
      r.exit_code = kExitBudget;
    } else if (!pass) {
      r.exit_code = kExitFail;
    }
    return r;
  }

  Report cmd_verify_rel(JobConfig const& cfg) {
    auto const verdict =
        cfg.rel.rel ? verify_axioms(*cfg.rel.rel, cfg.max_len)
                    : verify_axioms(*cfg.rel.raw, cfg.max_len);
    Report r;
    r.command          = "verify-rel";
    r.data["rel"]      = cfg.rel.rel ? cfg.rel.rel->to_string() : cfg.rel.text;
    r.data["max_len"]  = cfg.max_len;
    r.data["verdict"]  = verdict.pass() ? "pass" : "counterexample";
    r.lines = {"rel: " + r.data["rel"].get<std::string>(),
               "max_len: " + std::to_string(cfg.max_len)};
    if (verdict.pass()) {
      r.lines.push_back("verdict: pass");
      return r;
    }
    auto const& v = *verdict.violation;
    Json        cx{{"axiom", to_string(v.axiom)},
                   {"u", v.u.to_string()},
                   {"v", v.v.to_string()}};
    std::string line = "verdict: counterexample (" + v.u.to_string() + ", "
                       + v.v.to_string();
    if (v.axiom == Axiom::split) {
      cx["cut"] = v.cut;
      line += ", " + std::to_string(v.cut);
    }
    if (v.w) {
      cx["w"] = v.w->to_string();
      line += ", " + v.w->to_string();
    }
    r.data["counterexample"] = cx;
    r.lines.push_back(line + ") violates " + to_string(v.axiom));
    r.exit_code = kExitFail;
    return r;
  }

}  // namespace pseudoeq
