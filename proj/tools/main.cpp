#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "newred/claims.hpp"
#include "newred/factor.hpp"
#include "newred/families.hpp"
#include "newred/ffexplore.hpp"
#include "newred/jsonio.hpp"
#include "newred/parse.hpp"
#include "newred/search.hpp"

using namespace newred;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFail = 2;

template <class F>
std::string factorization_str(const Factorization<F>& fac) {
  std::string out;
  if (!fac.field->eq(fac.unit, fac.field->one()))
    out += "unit: " + fac.field->elem_str(fac.unit) + "\n";
  for (const auto& [g, e] : fac.factors) {
    out += "factor: " + poly_str(g);
    if (e > 1) out += "  ^" + std::to_string(e);
    out += "\n";
  }
  return out;
}

template <class F>
void print_witness(const Poly<F>& f, const NewlyReducibleWitness<F>& w, bool as_json) {
  if (as_json) {
    std::cout << json{{"newly_reducible", true}, {"witness", witness_json(w)}}.dump() << "\n";
    return;
  }
  std::cout << "newly reducible at n = " << w.n << "\n";
  for (size_t i = 0; i < w.chain.size(); ++i)
    std::cout << "f^" << (i + 1) << ": " << (w.chain[i] ? "irreducible" : "reducible") << "\n";
  std::cout << "f^" << w.n << " factors:\n" << factorization_str(w.factors);
  (void)f;
}

int run_iterate(const std::string& poly, int n, const FieldCtx& ctx, bool as_json) {
  if (ctx.is_rational()) {
    auto g = iterate(parse_poly<QQ>(poly, QQ::ctx()), n);
    if (as_json)
      std::cout << json{{"n", n}, {"poly", poly_json(g)}}.dump() << "\n";
    else
      std::cout << poly_str(g) << "\n";
  } else {
    auto g = iterate(parse_poly<GF>(poly, ctx.gf()), n);
    if (as_json)
      std::cout << json{{"field", ctx.describe()}, {"n", n}, {"poly", poly_json(g)}}.dump() << "\n";
    else
      std::cout << poly_str(g) << "\n";
  }
  return kOk;
}

int run_factor(const std::string& poly, const FieldCtx& ctx, bool as_json) {
  if (ctx.is_rational()) {
    auto fac = factor_over_q(parse_poly<QQ>(poly, QQ::ctx()));
    if (as_json)
      std::cout << factorization_json(fac).dump() << "\n";
    else
      std::cout << factorization_str(fac);
  } else {
    auto fac = factor_mod_p(parse_poly<GF>(poly, ctx.gf()));
    if (as_json)
      std::cout << factorization_json(fac).dump() << "\n";
    else
      std::cout << factorization_str(fac);
  }
  return kOk;
}

int run_check(const std::string& poly, int n, const FieldCtx& ctx, bool oracle, bool as_json) {
  bool engaged;
  if (ctx.is_rational()) {
    auto f = parse_poly<QQ>(poly, QQ::ctx());
    auto w = newly_reducible(f, n, !oracle);
    engaged = w.has_value();
    if (w) print_witness(f, *w, as_json);
  } else {
    auto f = parse_poly<GF>(poly, ctx.gf());
    auto w = newly_reducible(f, n, !oracle);
    engaged = w.has_value();
    if (w) print_witness(f, *w, as_json);
  }
  if (!engaged) {
    if (as_json)
      std::cout << json{{"newly_reducible", false}, {"n", n}}.dump() << "\n";
    else
      std::cout << "not newly reducible\n";
    return kVerifyFail;
  }
  return kOk;
}

int run_family(const std::string& name, const std::vector<std::string>& params, long count) {
  std::vector<Rational> values;
  for (const auto& p : params) values.emplace_back(p);
  std::vector<FamilyMember> members;
  if (name == "genbigd") {
    // streaming family: d, p, then --count members with k drawn from the stream
    if (values.size() != 2 || !values[0].is_integer() || !values[1].is_integer())
      throw std::invalid_argument("family genbigd takes integer parameters d and p");
    long d = values[0].num().to_ll();
    auto stream = genbigd_k_stream(d, values[1].num());
    for (long i = 0; i < count; ++i) members.push_back(highdeg_family(d, Rational(stream.next())));
  } else {
    members.push_back(family_by_name(name, values));
  }
  for (const auto& m : members) std::cout << family_member_json(m).dump() << "\n";
  return kOk;
}

void emit_hits(const std::vector<HitRecord>& hits, bool as_json, const std::string& out) {
  if (as_json) {
    std::cout << hits_jsonl(hits);
  } else {
    std::cout << hits.size() << " hit(s)\n";
    for (const auto& h : hits) {
      std::cout << "  x^2 + (" << h.a.str() << ")x + (" << h.b.str() << ")  n=" << h.n << "  "
                << h.provenance;
      if (h.surface_point)
        std::cout << " (r=" << h.surface_point->first.str()
                  << ", s=" << h.surface_point->second.str() << ")";
      std::cout << "\n";
    }
  }
  if (!out.empty()) {
    std::ofstream jl(out + ".jsonl", std::ios::trunc);
    jl << hits_jsonl(hits);
    std::ofstream csv(out + ".csv", std::ios::trunc);
    csv << hits_csv(hits);
    std::cerr << "wrote " << out << ".jsonl and " << out << ".csv\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide, construct and search for polynomials whose n-th iterate "
               "is newly reducible (exact arithmetic, Q and finite fields)"};
  app.require_subcommand(1);

  std::string poly, field_spec = "q", modulus;
  bool as_json = false, oracle = false;
  int n = 2;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_spec,
                    "coefficient field: q (rationals), p=<prime>, or q=<prime power>")
        ->capture_default_str();
    sub->add_option("--modulus", modulus,
                    "extension modulus as coefficients over F_p, e.g. \"x^4+x+1\"");
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "machine-readable output");
  };

  auto* c_iter = app.add_subcommand("iterate", "n-fold self-composition of a polynomial");
  c_iter->add_option("--poly", poly, "polynomial, e.g. \"x^2-x-1\"")->required();
  c_iter->add_option("--n", n, "iterate to compute")->required();
  add_field(c_iter);
  add_json(c_iter);

  auto* c_factor = app.add_subcommand("factor", "complete factorization into irreducibles");
  c_factor->add_option("--poly", poly)->required();
  add_field(c_factor);
  add_json(c_factor);

  auto* c_check = app.add_subcommand(
      "check", "decide whether the n-th iterate is newly reducible (exit 2 when it is not)");
  c_check->add_option("--poly", poly)->required();
  c_check->add_option("--n", n, "iterate to test")->required();
  c_check->add_flag("--oracle", oracle, "skip the cheap rejections, factor everything");
  add_field(c_check);
  add_json(c_check);

  std::string family_name;
  std::vector<std::string> family_params;
  long family_count = 3;
  auto* c_family = app.add_subcommand("family", "construct certified members, one JSON line each");
  c_family->add_option("name", family_name, "family name")->required();
  c_family->add_option("--params", family_params, "family parameters")->expected(-1);
  c_family->add_option("--count", family_count, "members to emit for streaming families")
      ->capture_default_str();

  auto* c_search = app.add_subcommand("search", "scan for newly reducible iterates");
  c_search->require_subcommand(1);
  std::string a_min, a_max, b_min, b_max, checkpoint, out_prefix;
  unsigned workers = 1;
  long chunk = 0, max_chunks = 0, height = 1;
  bool resume = false, allow_large = false;
  int box_n = 3;

  auto* c_box = c_search->add_subcommand("box", "integer (a, b) box, f = x^2 + a x + b");
  c_box->add_option("--a-min", a_min);
  c_box->add_option("--a-max", a_max);
  c_box->add_option("--b-min", b_min);
  c_box->add_option("--b-max", b_max);
  c_box->add_option("--n", box_n, "iterate to test (2..4)")->capture_default_str();
  c_box->add_option("--checkpoint", checkpoint, "progress file, written after every chunk");
  c_box->add_flag("--resume", resume, "continue from --checkpoint instead of starting fresh");
  c_box->add_option("--workers", workers, "worker threads")->capture_default_str();
  c_box->add_option("--chunk", chunk, "a-values per work unit (0 = 1)");
  c_box->add_option("--max-chunks", max_chunks, "stop after this many chunks (0 = run to the end)");
  c_box->add_flag("--oracle", oracle, "factorization-only mode, no cheap rejections");
  c_box->add_flag("--allow-large", allow_large, "permit boxes above 10^9 candidates");
  c_box->add_option("--out", out_prefix, "write <out>.jsonl and <out>.csv");
  add_json(c_box);

  auto* c_surface = c_search->add_subcommand(
      "surface", "rational surface points (r, s) whose quadratic has newly reducible f^3");
  c_surface->add_option("--height", height, "max |numerator| and denominator of r and s")
      ->required();
  c_surface->add_option("--a-min", a_min, "optional flag box for integral hits");
  c_surface->add_option("--a-max", a_max);
  c_surface->add_option("--b-min", b_min);
  c_surface->add_option("--b-max", b_max);
  c_surface->add_option("--out", out_prefix, "write <out>.jsonl and <out>.csv");
  add_json(c_surface);

  auto* c_ff = app.add_subcommand("ff", "finite-field scans");
  c_ff->require_subcommand(1);
  std::uint64_t ff_q = 2;
  int ff_d = 2, ff_n = 2;
  unsigned ff_workers = 0;
  bool monic_only = false, as_csv = false;

  auto* c_classify = c_ff->add_subcommand(
      "classify", "scan all monic degree-d polynomials over F_q for newly reducible f^n");
  c_classify->add_option("--q", ff_q, "field size (prime power)")->required();
  c_classify->add_option("--d", ff_d, "polynomial degree")->capture_default_str();
  c_classify->add_option("--n", ff_n, "iterate to test")->required();
  c_classify->add_option("--workers", ff_workers, "worker threads (0 = auto)");
  c_classify->add_flag("--csv", as_csv, "emit one CSV row (with header)");
  add_json(c_classify);

  auto* c_ahmadi = c_ff->add_subcommand(
      "ahmadi", "verify every quadratic over F_2^k has reducible third iterate (exit 2 on "
                "exceptions)");
  c_ahmadi->add_option("--q", ff_q, "field size, a power of 2")->required();
  c_ahmadi->add_flag("--monic-only", monic_only, "restrict the scan to monic quadratics");
  add_json(c_ahmadi);

  bool quick = false;
  auto* c_verify = app.add_subcommand(
      "verify-paper", "replay the bundled claim suite, one PASS/FAIL line per claim");
  c_verify->add_flag("--quick", quick, "shrink the heaviest sweeps");
  add_json(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_iter->parsed() || c_factor->parsed() || c_check->parsed()) {
      auto ctx = FieldCtx::parse(field_spec, modulus);
      if (c_iter->parsed()) return run_iterate(poly, n, ctx, as_json);
      if (c_factor->parsed()) return run_factor(poly, ctx, as_json);
      return run_check(poly, n, ctx, oracle, as_json);
    }
    if (c_family->parsed()) return run_family(family_name, family_params, family_count);
    if (c_box->parsed()) {
      SearchOptions opts;
      opts.workers = workers;
      opts.chunk = chunk;
      opts.checkpoint_path = checkpoint;
      opts.use_fast_paths = !oracle;
      opts.allow_large = allow_large;
      opts.max_chunks = max_chunks;
      std::vector<HitRecord> hits;
      if (resume) {
        if (checkpoint.empty()) throw std::invalid_argument("--resume needs --checkpoint");
        hits = resume_search(checkpoint, opts);
      } else {
        if (a_min.empty() || a_max.empty() || b_min.empty() || b_max.empty())
          throw std::invalid_argument("box search needs --a-min --a-max --b-min --b-max");
        SearchBox box{Integer(a_min), Integer(a_max), Integer(b_min), Integer(b_max), box_n};
        hits = box_search(box, opts);
      }
      emit_hits(hits, as_json, out_prefix);
      return kOk;
    }
    if (c_surface->parsed()) {
      std::optional<SearchBox> flag_box;
      bool any = !a_min.empty() || !a_max.empty() || !b_min.empty() || !b_max.empty();
      if (any) {
        if (a_min.empty() || a_max.empty() || b_min.empty() || b_max.empty())
          throw std::invalid_argument("flag box needs all four of --a-min --a-max --b-min --b-max");
        flag_box = SearchBox{Integer(a_min), Integer(a_max), Integer(b_min), Integer(b_max), 3};
      }
      auto hits = surface_search(height, flag_box ? &*flag_box : nullptr);
      emit_hits(hits, as_json, out_prefix);
      return kOk;
    }
    if (c_classify->parsed()) {
      auto rep = classify_membership(ff_q, ff_d, ff_n, ff_workers);
      if (as_csv) {
        std::cout << membership_csv_header() << "\n" << membership_csv_row(rep) << "\n";
      } else if (as_json) {
        json ws = json::array();
        for (const auto& f : rep.witnesses) ws.push_back(poly_json(f));
        std::cout << json{{"q", rep.q},       {"d", rep.d},
                          {"n", rep.n},       {"member", rep.member},
                          {"scanned", rep.scanned}, {"witnesses", ws}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "F_" << rep.q << ", degree " << rep.d << ", n = " << rep.n << ": "
                  << (rep.member ? "member" : "not a member") << " (" << rep.witnesses.size()
                  << " witness(es) among " << rep.scanned << " scanned)\n";
        size_t shown = 0;
        for (const auto& f : rep.witnesses) {
          if (shown++ == 5) {
            std::cout << "  ...\n";
            break;
          }
          std::cout << "  " << poly_str(f) << "\n";
        }
      }
      return kOk;
    }
    if (c_ahmadi->parsed()) {
      auto rep = verify_ahmadi(ff_q, monic_only);
      if (as_json) {
        json ex = json::array();
        for (const auto& f : rep.exceptions) ex.push_back(poly_json(f));
        std::cout << json{{"q", rep.q},
                          {"monic_only", rep.monic_only},
                          {"verified", rep.verified},
                          {"checked", rep.checked},
                          {"exceptions", ex}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "F_" << rep.q << ": " << (rep.verified ? "verified" : "REFUTED") << " over "
                  << rep.checked << " quadratics\n";
        for (const auto& f : rep.exceptions) std::cout << "  exception: " << poly_str(f) << "\n";
      }
      return rep.verified ? kOk : kVerifyFail;
    }
    if (c_verify->parsed()) {
      auto results = run_claims(quick);
      if (as_json) {
        json arr = json::array();
        for (const auto& r : results)
          arr.push_back({{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"seconds", r.seconds},
                         {"budget_seconds", r.budget_seconds},
                         {"detail", r.detail}});
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << claims_table(results);
      }
      return all_pass(results) ? kOk : kVerifyFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
