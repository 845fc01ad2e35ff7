#include "solcon/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "solcon/connection.hpp"
#include "solcon/graphs.hpp"
#include "solcon/groupio.hpp"
#include "solcon/liearith.hpp"
#include "solcon/structure.hpp"

namespace solcon::cli {

namespace {

using Json = nlohmann::ordered_json;

Json number(const BigInt& v) {
  if (fits_u64(v)) return to_u64(v);
  return v.get_str();
}

Json optional_number(const std::optional<BigInt>& v) { return v ? number(*v) : Json(nullptr); }

std::string source_label(const std::string& src) {
  const std::string prefix = "builtin:";
  if (src.rfind(prefix, 0) == 0) return src.substr(prefix.size());
  return std::filesystem::path(src).stem().string();
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json{{"a", w->first.to_string()}, {"b", w->second.to_string()}};
}

LieSpec spec_from(const std::string& family, unsigned dim, std::uint64_t q) {
  const auto f = parse_family(family);
  if (!f) throw ArgumentError("invalid-parameters", "unknown family", family);
  return LieSpec::make(*f, dim, q);
}

BigInt big_arg(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ArgumentError("invalid-parameters", "expected an integer", s);
  return v;
}

Json error_json(const std::string& code, const std::string& message, const std::string& context) {
  return Json{{"schema", 1}, {"error", {{"code", code}, {"message", message}, {"context", context}}}};
}

struct Output {
  Json json = Json::object();
  std::string quiet;
  std::optional<std::string> raw;
  Status status = Status::ok;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Soluble-connection and soluble-graph computations for permutation groups", "solcon"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("-h,--help");

  Budget budget;
  std::uint64_t seed = 0;
  bool quiet = false;
  app.add_option("--budget-order", budget.max_enumeration_order, "largest group order to enumerate");
  app.add_option("--budget-pairs", budget.max_pairs, "largest number of pair tests per loop");
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--jobs", budget.jobs, "worker threads (0 = all cores)");
  app.add_flag("--quiet", quiet, "print plain values instead of JSON");

  Output out;
  std::function<void()> action;

  // group info
  auto* group = app.add_subcommand("group", "group queries");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "order, solubility, derived length, radical order");
  std::string info_src;
  info->add_option("src", info_src, "builtin:NAME or generator file")->required();
  info->callback([&] {
    action = [&] {
      const auto g = load_group(info_src, budget);
      const auto series = derived_series(g);
      const bool sol = series.terms.back().is_trivial();
      const auto rad = soluble_radical(g, RadicalMethod::gkps, budget);
      out.json["order"] = number(g.order());
      out.json["degree"] = g.degree();
      out.json["soluble"] = sol;
      out.json["derived_length"] = sol ? Json(series.length()) : Json(nullptr);
      out.json["radical_order"] = number(rad.order());
      out.quiet = g.order().get_str();
    };
  });

  // radical
  auto* radical = app.add_subcommand("radical", "soluble radical");
  std::string rad_src, rad_method = "gkps";
  radical->add_option("src", rad_src)->required();
  radical->add_option("--method", rad_method)->check(CLI::IsMember({"gkps", "bruteforce", "both"}));
  radical->callback([&] {
    action = [&] {
      const auto g = load_group(rad_src, budget);
      auto emit = [&](const PermGroup& r) {
        auto gens = Json::array();
        for (const auto& s : r.generators()) gens.push_back(s.to_string());
        out.json["method"] = rad_method;
        out.json["order"] = number(r.order());
        out.json["generators"] = gens;
        out.quiet = r.order().get_str();
      };
      if (rad_method == "both") {
        const auto a = soluble_radical(g, RadicalMethod::gkps, budget);
        const auto b = soluble_radical(g, RadicalMethod::bruteforce, budget);
        emit(a);
        out.json["agree"] = a == b;
        if (!(a == b)) {
          throw TheoremViolation("radical methods disagree",
                                 a.order().get_str() + " vs " + b.order().get_str());
        }
        return;
      }
      emit(soluble_radical(g, rad_method == "gkps" ? RadicalMethod::gkps : RadicalMethod::bruteforce,
                           budget));
    };
  });

  // sconnect / maintheorem
  std::string fg_src, fa_src, fb_src, mode = "full";
  auto* sconnect = app.add_subcommand("sconnect", "check <a,b> soluble over A x B");
  sconnect->add_option("srcG", fg_src)->required();
  sconnect->add_option("--a", fa_src)->required();
  sconnect->add_option("--b", fb_src)->required();
  sconnect->add_option("--mode", mode)->check(CLI::IsMember({"full", "prime-pairs"}));
  auto load_factorized = [&] {
    return make_factorized(load_group(fg_src, budget), load_group(fa_src, budget),
                           load_group(fb_src, budget), budget);
  };
  sconnect->callback([&] {
    action = [&] {
      const auto f = load_factorized();
      const auto r = check_condition(f, mode == "full" ? ConnectionMode::full : ConnectionMode::prime_pairs,
                                     budget);
      out.json["mode"] = mode;
      out.json["holds"] = r.holds;
      out.json["witness"] = witness_json(r.witness);
      out.quiet = r.holds ? "true" : "false";
    };
  });
  auto* mainthm = app.add_subcommand("maintheorem", "conditions (1), (2), (3) and their agreement");
  mainthm->add_option("srcG", fg_src)->required();
  mainthm->add_option("--a", fa_src)->required();
  mainthm->add_option("--b", fb_src)->required();
  mainthm->callback([&] {
    action = [&] {
      const auto r = verify_main_theorem(load_factorized(), budget);
      out.json["c1"] = r.condition1;
      out.json["c2"] = r.condition2;
      out.json["c3"] = r.condition3;
      out.json["witness"] = witness_json(r.witness);
      out.json["radical_order"] = number(r.radical_order);
      out.quiet = std::string(r.condition1 ? "true" : "false");
    };
  });

  // graph
  auto* graph = app.add_subcommand("graph", "prime or soluble graph");
  std::string graph_kind, graph_src, graph_format = "json", graph_out;
  graph->add_option("kind", graph_kind)->required()->check(CLI::IsMember({"prime", "soluble"}));
  graph->add_option("src", graph_src)->required();
  graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", graph_out);
  graph->callback([&] {
    action = [&] {
      const auto g = load_group(graph_src, budget);
      const auto label = source_label(graph_src);
      const auto pg = graph_kind == "prime" ? prime_graph(g, label, budget) : soluble_graph(g, label, budget);
      std::string text;
      if (graph_format == "json") {
        auto j = Json::parse(export_graph(pg, GraphFormat::json));
        Json full{{"schema", 1}};
        for (auto& [k, v] : j.items()) full[k] = v;
        text = full.dump() + "\n";
      } else {
        text = export_graph(pg, GraphFormat::dot);
      }
      if (!graph_out.empty()) {
        std::ofstream f(graph_out);
        if (!f) throw ArgumentError("io-error", "cannot write output file", graph_out);
        f << text;
        out.json["out"] = graph_out;
        out.quiet = graph_out;
      } else {
        out.raw = text;
      }
    };
  });

  // independent
  auto* indep = app.add_subcommand("independent", "are p and q independent primes");
  std::string ind_src;
  std::uint64_t ind_p = 0, ind_q = 0;
  indep->add_option("src", ind_src)->required();
  indep->add_option("p", ind_p)->required();
  indep->add_option("q", ind_q)->required();
  indep->callback([&] {
    action = [&] {
      const bool r = are_independent(load_group(ind_src, budget), ind_p, ind_q, budget);
      out.json["independent"] = r;
      out.quiet = r ? "true" : "false";
    };
  });

  // zsigmondy
  auto* zs = app.add_subcommand("zsigmondy", "smallest primitive prime divisor of p^k - 1");
  std::uint64_t zs_p = 0;
  unsigned zs_k = 0;
  zs->add_option("p", zs_p)->required();
  zs->add_option("k", zs_k)->required();
  zs->callback([&] {
    action = [&] {
      const auto r = zsigmondy(zs_p, zs_k);
      out.json["prime"] = optional_number(r);
      if (!r) out.json["exception"] = "zsigmondy";
      out.quiet = r ? r->get_str() : "none";
    };
  });

  // lieorder / lieprimes / ackcert
  std::string family;
  unsigned dim = 0;
  std::uint64_t q = 0;
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("family", family)->required();
    sub->add_option("dim", dim)->required();
    sub->add_option("q", q)->required();
  };
  auto* lieorder = app.add_subcommand("lieorder", "|N| and |Out N| of a classical simple group");
  add_spec(lieorder);
  lieorder->callback([&] {
    action = [&] {
      const auto o = simple_group_order(spec_from(family, dim, q));
      out.json["order"] = number(o.order);
      out.json["out_order"] = o.out_order;
      out.quiet = o.order.get_str() + " " + std::to_string(o.out_order);
    };
  });
  auto* lieprimes = app.add_subcommand("lieprimes", "family primes r, s, t");
  add_spec(lieprimes);
  lieprimes->callback([&] {
    action = [&] {
      const auto f = family_primes(spec_from(family, dim, q));
      out.json["r"] = optional_number(f.r);
      out.json["s"] = optional_number(f.s);
      out.json["t"] = optional_number(f.t);
      auto str = [](const std::optional<BigInt>& v) { return v ? v->get_str() : std::string("-"); };
      out.quiet = str(f.r) + " " + str(f.s) + " " + str(f.t);
    };
  });
  auto* ack = app.add_subcommand("ackcert", "independence certificate for r and s");
  add_spec(ack);
  std::string ack_r, ack_s;
  bool substituted = false;
  ack->add_option("r", ack_r)->required();
  ack->add_option("s", ack_s)->required();
  ack->add_flag("--substituted", substituted, "accept an r other than the family prime");
  ack->callback([&] {
    action = [&] {
      const auto spec = spec_from(family, dim, q);
      const auto c = substituted ? ack_certificate_substituted(spec, big_arg(ack_r), big_arg(ack_s))
                                 : ack_certificate(spec, big_arg(ack_r), big_arg(ack_s));
      out.json["certified"] = c.certified;
      out.json["reason"] = c.reason;
      out.json["cases"] = c.cases;
      out.quiet = c.certified ? "certified" : "not_certified";
    };
  });

  // l1check
  auto* l1 = app.add_subcommand("l1check", "guaranteed p-power dividing |A n N|");
  std::string l1_p, l1_n, l1_b, l1_o;
  l1->add_option("p", l1_p)->required();
  l1->add_option("N-order", l1_n)->required();
  l1->add_option("Bcap-order", l1_b)->required();
  l1->add_option("Out-order", l1_o)->required();
  l1->callback([&] {
    action = [&] {
      const auto b = l1_bound(big_arg(l1_p), big_arg(l1_n), big_arg(l1_b), big_arg(l1_o));
      out.json["p"] = number(b.p);
      out.json["n_exp"] = b.n_exp;
      out.json["b_exp"] = b.b_exp;
      out.json["out_exp"] = b.out_exp;
      out.json["guaranteed_exp"] = b.guaranteed_exp;
      out.quiet = std::to_string(b.guaranteed_exp);
    };
  });

  // factorizations
  auto* facts = app.add_subcommand("factorizations", "all factorizations G = AB of a small group");
  std::string fac_src;
  bool check_main = false;
  facts->add_option("src", fac_src)->required();
  facts->add_flag("--check-maintheorem", check_main);
  facts->callback([&] {
    action = [&] {
      const auto g = load_group(fac_src, budget);
      const auto fs = enumerate_factorizations(g, budget);
      ConnectionContext ctx(g, budget);
      auto list = Json::array();
      std::size_t connected = 0, both_nontrivial_connected = 0;
      for (const auto& f : fs) {
        Json item{{"a_order", number(f.A.order())},
                  {"b_order", number(f.B.order())},
                  {"intersection_order", f.intersection_order}};
        if (check_main) {
          const auto r = verify_main_theorem(f, budget, &ctx);
          item["c1"] = r.condition1;
          item["c2"] = r.condition2;
          item["c3"] = r.condition3;
          if (r.condition2) {
            ++connected;
            if (!f.A.is_trivial() && !f.B.is_trivial()) ++both_nontrivial_connected;
          }
        }
        list.push_back(item);
      }
      out.json["count"] = fs.size();
      if (check_main) {
        out.json["connected"] = connected;
        out.json["connected_both_nontrivial"] = both_nontrivial_connected;
      }
      out.json["factorizations"] = list;
      out.quiet = std::to_string(fs.size());
    };
  });

  CommandResult result;
  auto finish = [&](Status status, int code, const Json& j) {
    result.status = status;
    result.exit_code = code;
    result.payload = quiet && status == Status::ok ? out.quiet + "\n" : j.dump() + "\n";
    return result;
  };
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    result.payload = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    return finish(Status::error, 1, error_json("usage", e.what(), ""));
  }
  try {
    if (!action) return finish(Status::error, 1, error_json("usage", "no command given", ""));
    action();
    if (out.raw) {
      result.payload = *out.raw;
      return result;
    }
    Json j{{"schema", 1}};
    for (auto& [k, v] : out.json.items()) j[k] = v;
    return finish(Status::ok, 0, j);
  } catch (const TheoremViolation& e) {
    return finish(Status::theorem_violation, 3, error_json(e.code(), e.what(), e.context()));
  } catch (const ResourceError& e) {
    return finish(Status::error, 2, error_json(e.code(), e.what(), e.context()));
  } catch (const Error& e) {
    return finish(Status::error, 1, error_json(e.code(), e.what(), e.context()));
  } catch (const std::exception& e) {
    return finish(Status::error, 1, error_json("internal", e.what(), ""));
  }
}

}  // namespace solcon::cli
