#include "shadowpack/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "shadowpack/bodies.hpp"
#include "shadowpack/constants.hpp"
#include "shadowpack/fixtures.hpp"
#include "shadowpack/io.hpp"
#include "shadowpack/search.hpp"

namespace shadowpack {

namespace {

std::string format_double(double v) {
  char buf[40];
  snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct Ctx {
  RunManifest manifest;
  Json report;
  int exit_code = 0;
};

Configuration resolve_config(const std::string& spec, RunManifest& m) {
  for (const auto& name : named_config_list())
    if (name == spec) {
      m.inputs.push_back({"builtin:" + name, digest_bytes(name)});
      return make_named_config(name);
    }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("unknown configuration: " + spec);
  Json j = Json::parse(in);
  m.inputs.push_back({spec, digest_file(spec)});
  return config_from_json(j);
}

Lattice resolve_lattice(const std::string& spec, RunManifest& m) {
  if (spec == "lambda1") {
    m.inputs.push_back({"builtin:lambda1", digest_bytes(spec)});
    return lattice_lambda1();
  }
  if (spec == "lambda2") {
    m.inputs.push_back({"builtin:lambda2", digest_bytes(spec)});
    return lattice_lambda2();
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("unknown lattice: " + spec);
  Json j = Json::parse(in);
  m.inputs.push_back({spec, digest_file(spec)});
  return lattice_from_json(j);
}

std::vector<Vec3> parse_directions(const std::string& spec) {
  std::vector<Vec3> dirs;
  size_t start = 0;
  while (start < spec.size()) {
    size_t stop = spec.find(',', start);
    // a bare axis list like e1,e2,e3 splits on commas; coordinate triples
    // are not accepted here
    std::string tok = spec.substr(start, stop - start);
    dirs.push_back(parse_direction(tok));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  if (dirs.empty()) throw std::invalid_argument("empty direction list");
  return dirs;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"shadowpack: exact shadow-region bounds for translative packings"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker cap (results are thread-count independent)");

  Ctx ctx;
  for (int i = 1; i < argc; ++i) ctx.manifest.args.push_back(argv[i]);
  std::function<void()> task;

  // ---- vol ----
  auto* vol = app.add_subcommand("vol", "volume of a body");
  {
    auto body = std::make_shared<std::string>();
    vol->add_option("--body", *body, "cube:r | cubocta | tetra | octa")->required();
    vol->callback([&, body] {
      ctx.manifest.command = "vol";
      task = [&, body] {
        ConvexPolytope p = make_body(*body);
        ctx.report["volume"] = rat_json(p.volume());
      };
    });
  }

  // ---- diffbody ----
  auto* diff = app.add_subcommand("diffbody", "difference body of a body");
  {
    auto body = std::make_shared<std::string>();
    diff->add_option("--body", *body)->required();
    diff->callback([&, body] {
      ctx.manifest.command = "diffbody";
      task = [&, body] {
        ConvexPolytope p = make_body(*body);
        ConvexPolytope d = difference_body(p);
        ctx.report["volume"] = rat_json(d.volume());
        ctx.report["ratio"] = rat_json(d.volume() / p.volume());
        ctx.report["body"] = polytope_json(d);
      };
    });
  }

  // ---- density ----
  auto* dens = app.add_subcommand("density", "lattice packing density");
  {
    auto body = std::make_shared<std::string>("cubocta");
    auto lattice = std::make_shared<std::string>();
    dens->add_option("--body", *body);
    dens->add_option("--lattice", *lattice, "lambda1 | lambda2 | file.json")->required();
    dens->callback([&, body, lattice] {
      ctx.manifest.command = "density";
      task = [&, body, lattice] {
        ConvexPolytope p = make_body(*body);
        Lattice lat = resolve_lattice(*lattice, ctx.manifest);
        ctx.report["volume"] = rat_json(p.volume());
        ctx.report["determinant"] = rat_json(lat.determinant().abs());
        ctx.report["density"] = rat_json(lattice_density(p, lat));
      };
    });
  }

  // ---- shadow ----
  auto* shadow = app.add_subcommand("shadow", "exact or sampled shadow-region volume");
  {
    auto config = std::make_shared<std::string>();
    auto dir = std::make_shared<std::string>("e1");
    auto anchor = std::make_shared<int>(0);
    auto quadrants = std::make_shared<bool>(false);
    auto mc = std::make_shared<std::uint64_t>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    shadow->add_option("--config", *config, "built-in name or file.json")->required();
    shadow->add_option("--dir", *dir, "e1 | e2 | e3 | x,y,z");
    shadow->add_option("--anchor", *anchor);
    shadow->add_flag("--quadrants", *quadrants);
    shadow->add_option("--mc", *mc, "Monte Carlo sample count (0 = exact engine)");
    shadow->add_option("--seed", *seed);
    shadow->callback([&, config, dir, anchor, quadrants, mc, seed] {
      ctx.manifest.command = "shadow";
      ctx.manifest.seed = *seed;
      ctx.manifest.has_seed = *mc > 0;
      task = [&, config, dir, anchor, quadrants, mc, seed] {
        Configuration cfg = resolve_config(*config, ctx.manifest);
        Vec3 v = parse_direction(*dir);
        if (*mc > 0) {
          MonteCarloResult r = shadow_volume_mc(cfg, *anchor, v, *mc, *seed);
          ctx.report["engine"] = "monte-carlo";
          ctx.report["estimate"] = format_double(r.estimate);
          ctx.report["stderr"] = format_double(r.stderr_est);
          ctx.report["samples"] = r.samples;
          ctx.report["seed"] = r.seed;
        } else {
          ShadowOptions opts;
          opts.quadrants = *quadrants;
          ShadowResult r = shadow_volume(cfg, *anchor, v, opts);
          ctx.report["engine"] = "exact";
          ctx.report["volume"] = rat_json(r.volume);
          ctx.report["cells"] = r.cell_count;
          if (r.has_quadrants) {
            Json q = Json::array();
            for (const auto& qq : r.quadrants) q.push_back(rat_json(qq));
            ctx.report["quadrants"] = q;
          }
        }
      };
    });
  }

  // ---- mu ----
  auto* mu = app.add_subcommand("mu", "shadow measures of a configuration");
  {
    auto config = std::make_shared<std::string>();
    auto dir = std::make_shared<std::string>();
    auto dirs = std::make_shared<std::string>();
    mu->add_option("--config", *config)->required();
    mu->add_option("--dir", *dir, "single direction: min over anchors");
    mu->add_option("--dirs", *dirs, "direction list: averaged measure");
    mu->callback([&, config, dir, dirs] {
      ctx.manifest.command = "mu";
      task = [&, config, dir, dirs] {
        Configuration cfg = resolve_config(*config, ctx.manifest);
        if (!dir->empty()) {
          ctx.report["mu"] = rat_json(mu_of_config(cfg, parse_direction(*dir)));
        } else if (!dirs->empty()) {
          ctx.report["mu_bar"] = rat_json(mu_bar_of_config(cfg, parse_directions(*dirs)));
        } else {
          throw std::invalid_argument("mu needs --dir or --dirs");
        }
      };
    });
  }

  // ---- bound ----
  auto* bound = app.add_subcommand("bound", "density upper bounds");
  {
    auto from_mu = std::make_shared<std::string>();
    auto from_mu_bar = std::make_shared<std::string>();
    auto from_quadrant = std::make_shared<std::string>();
    auto volume = std::make_shared<std::string>("20/3");
    auto main = std::make_shared<bool>(false);
    bound->add_option("--from-mu", *from_mu, "shadow measure as p/q");
    bound->add_option("--from-mu-bar", *from_mu_bar);
    bound->add_option("--from-quadrant", *from_quadrant, "one quadrant measure as p/q");
    bound->add_option("--volume", *volume, "body volume (default: the cuboctahedron)");
    bound->add_flag("--main-theorem", *main, "compose and certify the two closed-form bounds");
    bound->callback([&, from_mu, from_mu_bar, from_quadrant, volume, main] {
      ctx.manifest.command = "bound";
      task = [&, from_mu, from_mu_bar, from_quadrant, volume, main] {
        if (*main) {
          MainTheoremReport rep = main_theorem();
          ctx.report["cubocta"] = bound_report_json(rep.cubocta);
          ctx.report["tetra"] = bound_report_json(rep.tetra);
          return;
        }
        Rat vol = Rat::parse(*volume);
        if (!from_mu->empty()) {
          Scalar b = upper_bound_from_mu(vol, Scalar(Rat::parse(*from_mu)));
          ctx.report["bound"] = scalar_json(b);
          ctx.report["chain"] = Json::array({"density_from_mu"});
        } else if (!from_mu_bar->empty()) {
          Scalar b = upper_bound_from_mu_bar(vol, Scalar(Rat::parse(*from_mu_bar)));
          ctx.report["bound"] = scalar_json(b);
          ctx.report["chain"] = Json::array({"density_from_mu_bar"});
        } else if (!from_quadrant->empty()) {
          Scalar m = quadrant_combine(Scalar(Rat::parse(*from_quadrant)));
          Scalar b = upper_bound_from_mu(vol, m);
          ctx.report["mu"] = scalar_json(m);
          ctx.report["bound"] = scalar_json(b);
          ctx.report["chain"] = Json::array({"quadrant_combine", "density_from_mu"});
        } else {
          throw std::invalid_argument(
              "bound needs --from-mu, --from-mu-bar, --from-quadrant or --main-theorem");
        }
      };
    });
  }

  // ---- constants ----
  auto* consts = app.add_subcommand("constants", "certified enclosures of the named constants");
  {
    auto name = std::make_shared<std::string>("all");
    auto width = std::make_shared<std::string>();
    consts->add_option("--name", *name);
    consts->add_option("--width", *width, "target enclosure width (default 1e-12)");
    consts->callback([&, name, width] {
      ctx.manifest.command = "constants";
      task = [&, name, width] {
        Rat w = width->empty() ? default_width_target() : Rat::parse(*width);
        auto emit = [&](ConstantTag tag) {
          Interval iv = eval_constant(tag, w);
          Json j;
          j["value"] = interval_json(iv);
          j["residual"] = interval_json(defining_residual(tag, iv));
          ctx.report[constant_name(tag)] = j;
        };
        if (*name == "all")
          for (ConstantTag tag : all_constant_tags()) emit(tag);
        else
          emit(parse_constant_tag(*name));
      };
    });
  }

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "grid verification of the registered inequalities");
  {
    auto case_id = std::make_shared<std::string>("all");
    auto grid = std::make_shared<std::string>("1/100");
    auto out_csv = std::make_shared<std::string>();
    verify->add_option("--case", *case_id, "case id, group prefix, or all");
    verify->add_option("--grid", *grid, "grid step as a rational or decimal");
    verify->add_option("--out", *out_csv, "CSV sidecar of (params, value, margin) rows");
    verify->callback([&, case_id, grid, out_csv] {
      ctx.manifest.command = "verify";
      task = [&, case_id, grid, out_csv] {
        Rat h = Rat::parse(*grid);
        std::ofstream csv;
        std::uint64_t rows = 0, row_cap = 2000000;
        if (!out_csv->empty()) {
          csv.open(*out_csv);
          if (!csv) throw std::invalid_argument("cannot write: " + *out_csv);
          csv << "case,params,value,margin\n";
        }
        Json verdicts = Json::array();
        bool all_pass = true;
        for (const auto& id : resolve_case_ids(*case_id)) {
          GridRowSink sink = nullptr;
          if (csv.is_open()) {
            sink = [&, id](const std::vector<Rat>& pt, double value, double margin) {
              if (rows >= row_cap) return;
              if (++rows == row_cap) {
                csv << "# truncated at " << row_cap << " rows\n";
                return;
              }
              csv << id << ",\"";
              for (size_t i = 0; i < pt.size(); ++i)
                csv << pt[i].pretty() << (i + 1 < pt.size() ? ";" : "");
              csv << "\"," << format_double(value) << "," << format_double(margin) << "\n";
            };
          }
          Verdict v = verify_scalar_bound(id, h, sink);
          all_pass = all_pass && v.pass;
          verdicts.push_back(verdict_json(v));
        }
        ctx.report["verdicts"] = verdicts;
        ctx.report["pass"] = all_pass;
        if (!all_pass) ctx.exit_code = 1;
      };
    });
  }

  // ---- search ----
  auto* search = app.add_subcommand("search", "pattern-search probe of the averaged measure");
  {
    auto init = std::make_shared<std::string>();
    auto dirs = std::make_shared<std::string>("e1,e2,e3");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto steps = std::make_shared<std::string>("1/8,1/16,1/32");
    search->add_option("--init", *init, "built-in name, file.json, or perturbed-lambda1")
        ->required();
    search->add_option("--dirs", *dirs);
    search->add_option("--seed", *seed);
    search->add_option("--steps", *steps, "step schedule");
    search->callback([&, init, dirs, seed, steps] {
      ctx.manifest.command = "search";
      ctx.manifest.seed = *seed;
      ctx.manifest.has_seed = true;
      task = [&, init, dirs, seed, steps] {
        Configuration cfg;
        if (*init == "perturbed-lambda1") {
          cfg = perturbed_lambda1_config(*seed);
          ctx.manifest.inputs.push_back({"builtin:perturbed-lambda1", digest_bytes(*init)});
        } else {
          cfg = resolve_config(*init, ctx.manifest);
        }
        SearchOptions opts;
        opts.seed = *seed;
        opts.step_schedule.clear();
        size_t start = 0;
        while (start < steps->size()) {
          size_t stop = steps->find(',', start);
          opts.step_schedule.push_back(Rat::parse(steps->substr(start, stop - start)));
          if (stop == std::string::npos) break;
          start = stop + 1;
        }
        SearchReport rep = search_min_shadow(cfg, parse_directions(*dirs), opts);
        ctx.report["initial"] = rat_json(rep.initial_value);
        ctx.report["best"] = rat_json(rep.best_value);
        ctx.report["evaluations"] = rep.evaluations;
        ctx.report["accepted"] = rep.accepted;
        Json trace = Json::array();
        for (const auto& t : rep.trace) trace.push_back(rat_json(t));
        ctx.report["trace"] = trace;
        ctx.report["undercut_conjectured_minimum"] = rep.undercut_conjecture;
        ctx.report["interpretation"] =
            rep.undercut_conjecture
                ? "counterexample candidate: the averaged measure dropped below 16/27"
                : "no counterexample: consistency with the conjectured minimum 16/27, "
                  "not a verification of it";
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    task();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  auto t1 = std::chrono::steady_clock::now();
  ctx.manifest.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  Json full;
  full["manifest"] = manifest_json(ctx.manifest);
  for (auto& [key, value] : ctx.report.items()) full[key] = value;
  out << full.dump(2) << "\n";
  err << "# wall_ms=" << format_double(ctx.manifest.wall_ms) << "\n";
  return ctx.exit_code;
}

}  // namespace shadowpack
