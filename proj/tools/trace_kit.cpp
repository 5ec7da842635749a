#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

#include "reports.hpp"
#include "reproduce.hpp"
#include "tracekit/errors.hpp"
#include "tracekit/io.hpp"

using namespace tracekit;
using cli::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2 };

using Clock = std::chrono::steady_clock;

// Canonical result plus a manifest. The digest covers the result only, so
// reruns agree on it while the wallclock moves.
void emit(json result, const std::string& sub, const json& params, Clock::time_point start,
          bool to_stderr = false) {
  const std::string dig = cli::digest(result);
  const std::chrono::duration<double> took = Clock::now() - start;
  json manifest = {{"tool", "trace-kit"},
                   {"version", kVersion},
                   {"subcommand", sub},
                   {"parameters", params},
                   {"wallclock_seconds", took.count()},
                   {"digest", dig}};
  if (to_stderr) {
    std::cerr << manifest.dump() << '\n';
    return;
  }
  result["manifest"] = manifest;
  std::cout << result.dump(2) << '\n';
}

bool usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidElement:
    case ErrorCode::UnsupportedUniverse:
    case ErrorCode::UniverseTooLarge:
    case ErrorCode::InvalidParams:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

struct FamilyChoice {
  std::string kind;
  int n = 0, d = 0, c = 0;
};

// Builds a named family with the (s, m(s)) pair it is expected to realise.
std::tuple<Family, long, Rat> build_named(const FamilyChoice& ch) {
  if (ch.kind == "A") {
    return {build_construction_a(ch.n, ch.d, ch.c), (1L << (ch.d - 1)) - ch.c,
            rat((1L << ch.d) - ch.c, ch.d)};
  }
  if (ch.kind == "B") {
    return {build_construction_b(ch.n, ch.d), (1L << (ch.d - 1)) - ch.d, piles::frak_b(ch.d, ch.d)};
  }
  if (ch.kind == "appendixB0") return {appendix_b_s0(ch.d), 0, rat(1)};
  if (ch.kind == "appendixB1") return {appendix_b_s1(ch.d), 1, rat(3, 2)};
  throw Error(ErrorCode::InvalidParams, "unknown family " + ch.kind);
}

json family_summary(const Family& f) {
  json j = io::family_to_json(f);
  j["size"] = f.size();
  j["min_degree"] = min_degree(f);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hereditary family toolkit: constructions, exact searches and weight certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  const auto start = Clock::now();
  int status = kOk;

  // construct
  FamilyChoice choice;
  std::string base = "B", in_path;
  auto* construct = app.add_subcommand("construct", "build a named family and measure it");
  construct->add_option("--family", choice.kind, "A | B | dual | appendixB0 | appendixB1")
      ->required()
      ->check(CLI::IsMember({"A", "B", "dual", "appendixB0", "appendixB1"}));
  construct->add_option("--n", choice.n, "universe size");
  construct->add_option("--d", choice.d, "block size");
  construct->add_option("--c", choice.c, "deficiency (construction A)");
  construct->add_option("--base", base, "family to dualize: A | B | appendixB0 | appendixB1")
      ->check(CLI::IsMember({"A", "B", "appendixB0", "appendixB1"}));
  construct->add_option("--in", in_path, "dualize a family file instead");
  std::string format = "json";
  construct->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  // verify
  std::string verify_in;
  std::optional<long> verify_s;
  std::string verify_ms;
  auto* verify = app.add_subcommand("verify", "measure a family file");
  verify->add_option("--in", verify_in, "family file (JSON or text)")->required();
  verify->add_option("--s", verify_s, "check extremality for this s");
  verify->add_option("--ms", verify_ms, "with this m(s), e.g. 53/10");

  // certify-d5
  std::string cert_in;
  auto* certify = app.add_subcommand("certify-d5", "weight certificate for families with min degree 12");
  certify->add_option("--in", cert_in, "family file")->required();

  // search
  int search_n = 0;
  std::uint64_t search_s = 0;
  std::optional<double> budget;
  int threads = 1;
  bool no_prune = false, no_symmetry = false, no_warm = false;
  auto* search = app.add_subcommand("search", "exact m(n,s) by branch and bound");
  search->add_option("--n", search_n, "universe size (<= 14)")->required();
  search->add_option("--s", search_s, "degree parameter; families need min degree s+1")->required();
  search->add_option("--budget", budget, "seconds (default 60 or TRACEKIT_BUDGET_SECS)");
  search->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--no-prune", no_prune, "trivial lower bound only");
  search->add_flag("--no-symmetry", no_symmetry, "keep symmetric branches");
  search->add_flag("--no-warm-start", no_warm, "start from the power set");

  // piles
  std::string piles_in;
  int piles_d = 0, piles_c = 0;
  auto* pile_cmd = app.add_subcommand("piles", "pile decomposition and projection reports");
  pile_cmd->add_option("--in", piles_in, "family file")->required();
  pile_cmd->add_option("--d", piles_d, "block size d")->required();
  pile_cmd->add_option("--c", piles_c, "deficiency c in [1, d]")->required();

  // colex
  auto* colex = app.add_subcommand("colex", "colex prefixes and weights");
  colex->require_subcommand(1);
  std::uint64_t colex_m = 0;
  auto* colex_w = colex->add_subcommand("w", "W(m)");
  colex_w->add_option("--m", colex_m)->required();
  auto* colex_r = colex->add_subcommand("r", "R(m) as a family");
  colex_r->add_option("--m", colex_m)->required();
  int l25_d = 0;
  std::uint64_t l25_c = 0;
  auto* colex_l25 = colex->add_subcommand("lemma25", "W(2^{d-1}-c) against its lower bound");
  colex_l25->add_option("--d", l25_d)->required();
  colex_l25->add_option("--c", l25_c)->required();
  int sweep_from = 4, sweep_to = 14;
  auto* colex_sweep = colex->add_subcommand("sweep", "lemma25 over every c <= 2^{d-2}");
  colex_sweep->add_option("--from", sweep_from);
  colex_sweep->add_option("--to", sweep_to);

  // appendix-a
  int from = 50, to = 1024;
  auto* appendix = app.add_subcommand("appendix-a", "CSV of h(d) against 1/18");
  appendix->add_option("--from", from);
  appendix->add_option("--to", to);

  // reproduce
  std::string table;
  auto* repro = app.add_subcommand("reproduce", "run a bundled table of checks");
  repro->add_option("--table", table)->required()->check(CLI::IsMember(
      {"small-m", "theorem13", "theorem15", "appendixA", "fact62"}));
  repro->add_option("--threads", threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) {
      json params = {{"family", choice.kind}, {"n", choice.n}, {"d", choice.d}, {"c", choice.c}};
      json result;
      if (choice.kind == "dual") {
        Family f;
        std::optional<std::pair<long, Rat>> target;
        if (!in_path.empty()) {
          f = io::load_family(in_path);
          params["in"] = in_path;
        } else {
          FamilyChoice b = choice;
          b.kind = base;
          auto [fam, s, ms] = build_named(b);
          f = std::move(fam);
          target = std::make_pair(s, ms);
          params["base"] = base;
        }
        const Family dual = complement_dual(f);
        const Fact62Report fact = fact62_report(f);
        result = family_summary(dual);
        result["fact62"] = cli::to_json(fact);
        if (target) {
          const DualCandidate cand = dual_candidate(f.universe(), target->first, target->second);
          result["candidate"] = cli::to_json(cand);
          result["extremal"] = cli::to_json(is_extremal(dual, cand.s_star, cand.ms_star));
        }
        status = fact.all() ? kOk : kCheckFailed;
        if (format == "text") {
          std::cout << io::family_to_text(dual);
          return status;
        }
      } else {
        if (choice.kind.rfind("appendix", 0) == 0 && choice.n != 0 && choice.n != choice.d) {
          throw Error(ErrorCode::InvalidParams, "appendix families live on [d]; omit --n");
        }
        auto [f, s, ms] = build_named(choice);
        const ExtremalReport rep = is_extremal(f, s, ms);
        result = family_summary(f);
        result["extremal"] = cli::to_json(rep);
        result["expected"] = {{"s", s}, {"ms", cli::rat_json(ms)}};
        status = rep.hereditary && rep.size_matches && rep.degree_ok ? kOk : kCheckFailed;
        if (format == "text") {
          std::cout << io::family_to_text(f);
          return status;
        }
      }
      emit(result, "construct", params, start);
    } else if (*verify) {
      const Family f = io::load_family(verify_in);
      json result = family_summary(f);
      const bool hered = is_hereditary(f);
      result["hereditary"] = hered;
      result["degrees"] = degrees(f);
      json maximal = json::array();
      for (SubsetMask m : maximal_sets(f)) maximal.push_back(cli::mask_json(m));
      result["maximal_sets"] = maximal;
      if (hered && f.universe() <= kMaxMaterialized) result["fact62"] = cli::to_json(fact62_report(f));
      status = hered ? kOk : kCheckFailed;
      if (verify_s) {
        if (verify_ms.empty()) throw Error(ErrorCode::InvalidParams, "--s needs --ms");
        const ExtremalReport rep = is_extremal(f, *verify_s, parse_rat(verify_ms));
        result["extremal"] = cli::to_json(rep);
        if (!rep.matches_formula) status = kCheckFailed;
      }
      emit(result, "verify", {{"in", verify_in}}, start);
    } else if (*certify) {
      const Family f = io::load_family(cert_in);
      const Family reduced = d5::minimal_reduction(f);
      json result;
      result["reduced"] = reduced.size() != f.size();
      result["reduced_size"] = reduced.size();
      const auto key = d5::key_lemma_check(reduced);
      result["certificate"] = cli::to_json(key);
      const auto cls = d5::theorem31_classify(f);
      result["classification"] = cli::to_json(cls);
      status = key.ok() && cls.key_lemma_ok ? kOk : kCheckFailed;
      emit(result, "certify-d5", {{"in", cert_in}}, start);
    } else if (*search) {
      SearchConfig cfg;
      if (budget) cfg.time_budget = std::chrono::duration<double>(*budget);
      cfg.threads = threads;
      cfg.katona_pruning = !no_prune;
      cfg.symmetry_breaking = !no_symmetry;
      cfg.warm_start = !no_warm;
      const SearchResult r = m_exact(search_n, search_s, cfg);
      json result = cli::to_json(r, true);
      result = {{"n", search_n}, {"s", search_s}, {"m", result["m"]}, {"status", result["status"]},
                {"root_bound", result["root_bound"]}, {"nodes_explored", result["nodes_explored"]},
                {"witness", result["witness"]}};
      json params = {{"n", search_n},
                     {"s", search_s},
                     {"budget_seconds", cfg.time_budget.count()},
                     {"threads", threads},
                     {"prune", !no_prune},
                     {"symmetry", !no_symmetry},
                     {"warm_start", !no_warm}};
      emit(result, "search", params, start);
    } else if (*pile_cmd) {
      const Family f = io::load_family(piles_in);
      const auto dec = piles::find_piles(f, piles_d);
      json result = {{"decomposition", cli::to_json(dec)},
                     {"lemma43", cli::to_json(piles::lemma43_check(f, piles_d, piles_c))}};
      json reports = json::array();
      bool ok = true;
      for (const auto& p : dec.piles) {
        if (p.tag != piles::PileTag::Isolated) continue;
        const auto rep = piles::analyze_isolated_pile(f, p.set, piles_d, piles_c);
        ok = ok && rep.identities_hold();
        reports.push_back(cli::to_json(rep));
      }
      result["projections"] = reports;
      result["identities_hold"] = ok;
      status = ok ? kOk : kCheckFailed;
      emit(result, "piles", {{"in", piles_in}, {"d", piles_d}, {"c", piles_c}}, start);
    } else if (*colex) {
      if (*colex_w) {
        emit({{"m", colex_m}, {"W", cli::rat_json(colex_weight(colex_m))}}, "colex w", {{"m", colex_m}}, start);
      } else if (*colex_r) {
        emit(io::family_to_json(colex_prefix(colex_m)), "colex r", {{"m", colex_m}}, start);
      } else if (*colex_l25) {
        const auto r = lemma25_check(l25_d, l25_c);
        status = r.holds ? kOk : kCheckFailed;
        json result = cli::to_json(r);
        result["d"] = l25_d;
        result["c"] = l25_c;
        emit(result, "colex lemma25", {{"d", l25_d}, {"c", l25_c}}, start);
      } else {
        if (sweep_from < 2 || sweep_to > 20 || sweep_from > sweep_to) {
          throw Error(ErrorCode::InvalidParams, "sweep needs 2 <= from <= to <= 20");
        }
        std::uint64_t checked = 0, failed = 0;
        json failures = json::array();
        for (int d = sweep_from; d <= sweep_to; ++d) {
          for (std::uint64_t c = 1; c <= (std::uint64_t{1} << (d - 2)); ++c) {
            ++checked;
            if (!lemma25_check(d, c).holds) {
              ++failed;
              failures.push_back({{"d", d}, {"c", c}});
            }
          }
        }
        status = failed == 0 ? kOk : kCheckFailed;
        emit({{"checked", checked}, {"failed", failed}, {"failures", failures}}, "colex sweep",
             {{"from", sweep_from}, {"to", sweep_to}}, start);
      }
    } else if (*appendix) {
      const auto a = numerics::verify_appendix_a(from, to);
      json rows = json::array();
      std::cout << "d,h,decimal,holds\n";
      for (const auto& r : a.reports) {
        std::cout << r.d << ',' << to_string(r.h) << ',' << to_decimal(r.h, 6) << ','
                  << (r.holds ? "true" : "false") << '\n';
        rows.push_back({r.d, to_string(r.h), r.holds});
        if (!r.holds) status = kCheckFailed;
      }
      emit({{"rows", rows}}, "appendix-a", {{"from", from}, {"to", to}}, start, true);
    } else if (*repro) {
      const json result = cli::reproduce(table, threads);
      status = result["pass"].get<bool>() ? kOk : kCheckFailed;
      emit(result, "reproduce", {{"table", table}}, start);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_code(e.code()) ? kUsage : kCheckFailed;
  }
  return status;
}
