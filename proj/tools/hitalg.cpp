#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hitalg/actions.hpp>
#include <hitalg/cache.hpp>
#include <hitalg/cohit.hpp>
#include <hitalg/dual.hpp>
#include <hitalg/kameko.hpp>
#include <hitalg/lambda.hpp>
#include <hitalg/textio.hpp>

using namespace hitalg;

namespace {

struct Global {
  std::string cache_dir;
  bool force = false;
  std::string format = "json";
};

void emit(const Global& g, const json& obj, const std::vector<std::string>& csv_header,
          const std::vector<std::string>& csv_row) {
  if (g.format == "csv") {
    std::string h, r;
    for (std::size_t i = 0; i < csv_header.size(); ++i) {
      if (i) {
        h += ',';
        r += ',';
      }
      h += csv_header[i];
      r += csv_row[i];
    }
    std::cout << h << "\n" << r << "\n";
  } else {
    std::cout << obj.dump(2) << "\n";
  }
}

CohitSummary cohit_summary(const Global& g, int h, int n) {
  Cache cache = Cache::from_flag(g.cache_dir);
  if (auto hit = cache.load(h, n)) return *hit;
  CohitBasis cb(h, n, kDefaultColumnCap, g.force);
  CohitSummary s = summarize(cb);
  cache.store(s);
  return s;
}

std::string dirname_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

std::string resolve(const std::string& base, const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  return base + "/" + path;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

struct ClaimOutcome {
  std::string id;
  std::string kind;
  bool pass = false;
  std::string expected, got;
  double seconds = 0;
};

json run_claim_value(const Global& g, const json& claim, const std::string& base) {
  const std::string kind = claim.at("kind").get<std::string>();
  const json& p = claim.at("params");
  if (kind == "dimension") {
    const int h = p.at("h").get<int>();
    const int n = p.at("n").get<int>();
    if (p.value("kernel", false)) {
      CohitBasis src(h, n, kDefaultColumnCap, g.force);
      CohitBasis dst(h, (n - h) / 2, kDefaultColumnCap, g.force);
      return static_cast<int>(kameko_kernel(kameko_pair(src, dst)).size());
    }
    if (p.contains("weight")) {
      CohitBasis cb(h, n, kDefaultColumnCap, g.force);
      return cb.weight_component(p.at("weight").get<std::vector<int>>()).dim_total;
    }
    return cohit_summary(g, h, n).dim();
  }
  if (kind == "invariant-dim") {
    const int h = p.at("h").get<int>();
    const int n = p.at("n").get<int>();
    if (p.value("coinvariants", false)) return coinvariants(h, n, kDefaultColumnCap, g.force).dim;
    Group grp = p.value("group", std::string("gl")) == "s" ? Group::S : Group::GL;
    CohitBasis cb(h, n, kDefaultColumnCap, g.force);
    if (p.contains("weight"))
      return static_cast<int>(invariants_weight(cb, p.at("weight").get<std::vector<int>>(), grp).size());
    return static_cast<int>(invariants(cb, grp).size());
  }
  if (kind == "ext-dim") return ExtGroup(p.at("s").get<int>(), p.at("t").get<int>()).dim();
  if (kind == "annihilation") {
    int n = 0;
    DualElement xi = read_dual_file(resolve(base, p.at("element").get<std::string>()), nullptr, &n);
    return annihilated(xi, n);
  }
  if (kind == "psi-identity") {
    int h = 0, n = 0;
    DualElement xi = read_dual_file(resolve(base, p.at("element").get<std::string>()), &h, &n);
    if (p.contains("target"))
      return psi(xi) == read_lambda_file(resolve(base, p.at("target").get<std::string>()));
    TransferImage ti = transfer_image(xi, h, n);
    bool ok = ti.cycle;
    if (p.contains("class")) ok = ok && ti.class_name == p.at("class").get<std::string>();
    if (p.contains("ext_dim")) ok = ok && ti.ext_dim == p.at("ext_dim").get<int>();
    return ok;
  }
  if (kind == "pairing") {
    std::string ftext = p.contains("f_file") ? read_text_file(resolve(base, p.at("f_file").get<std::string>()))
                                             : p.at("f").get<std::string>();
    DualElement xi = read_dual_file(resolve(base, p.at("element").get<std::string>()));
    return pairing(parse_poly(ftext), xi);
  }
  throw std::runtime_error("unknown claim kind: " + kind);
}

int cmd_reproduce(const Global& g, const std::string& manifest, const std::string& tier) {
  json doc = json::parse(read_text_file(manifest));
  const std::string base = dirname_of(manifest);
  std::vector<ClaimOutcome> outcomes;
  int failures = 0;
  for (const auto& claim : doc.at("claims")) {
    const std::string ctier = claim.value("tier", "fast");
    if (tier != "all" && ctier != tier) continue;
    ClaimOutcome oc;
    oc.id = claim.value("id", claim.at("kind").get<std::string>());
    oc.kind = claim.at("kind").get<std::string>();
    json expected = claim.at("expected");
    auto start = std::chrono::steady_clock::now();
    json got;
    try {
      got = run_claim_value(g, claim, base);
      oc.pass = (got == expected);
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
      oc.pass = false;
    }
    oc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    oc.expected = expected.dump();
    oc.got = got.dump();
    if (!oc.pass) ++failures;
    outcomes.push_back(std::move(oc));
  }
  if (g.format == "json") {
    json rep = json::array();
    for (const auto& oc : outcomes)
      rep.push_back(json{{"id", oc.id},
                         {"kind", oc.kind},
                         {"status", oc.pass ? "pass" : "FAIL"},
                         {"expected", oc.expected},
                         {"got", oc.got},
                         {"seconds", oc.seconds}});
    std::cout << json{{"tier", tier}, {"failures", failures}, {"claims", rep}}.dump(2) << "\n";
  } else {
    std::printf("%-28s %-14s %-6s %-12s %-12s %8s\n", "id", "kind", "status", "expected", "got", "secs");
    for (const auto& oc : outcomes)
      std::printf("%-28s %-14s %-6s %-12s %-12s %8.2f\n", oc.id.c_str(), oc.kind.c_str(),
                  oc.pass ? "pass" : "FAIL", oc.expected.c_str(), oc.got.c_str(), oc.seconds);
    std::printf("%d claim(s), %d failure(s)\n", static_cast<int>(outcomes.size()), failures);
  }
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hit problem / algebraic transfer calculator"};
  // --h is an option name here, so help gets no short alias anywhere
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  Global g;
  app.add_option("--cache-dir", g.cache_dir, "cache directory (overrides " + std::string(kCacheEnvVar) + ")");
  app.add_flag("--force", g.force, "run past the column capacity guard");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  int h = 0, n = 0, s = 0, t = 0;
  std::string weight, group = "gl", element, manifest = "manifests/claims.json", tier = "fast";
  bool kernel = false;

  auto add_sub = [&](const char* name, const char* desc) {
    auto* p = app.add_subcommand(name, desc);
    p->set_help_flag("--help", "print help and exit");
    return p;
  };

  auto* cohit = add_sub("cohit", "cohit basis of a polynomial degree");
  cohit->add_option("--h", h)->required();
  cohit->add_option("--n", n)->required();
  cohit->add_option("--weight", weight, "restrict to one weight component, e.g. 2,3");

  auto* inv = add_sub("invariants", "symmetric or general linear invariants of the cohits");
  inv->add_option("--h", h)->required();
  inv->add_option("--n", n)->required();
  inv->add_option("--group", group)->check(CLI::IsMember({"gl", "s"}));
  inv->add_option("--weight", weight, "restrict to one weight component");

  auto* kam = add_sub("kameko", "halving map between cohit degrees");
  kam->add_option("--h", h)->required();
  kam->add_option("--n", n)->required();
  kam->add_flag("--kernel", kernel, "also emit a kernel basis");

  auto* ext = add_sub("ext", "lambda algebra homology in one bidegree");
  ext->add_option("--s", s)->required();
  ext->add_option("--t", t)->required();

  auto* ann = add_sub("annihilated", "basis of the annihilated dual classes");
  ann->add_option("--h", h)->required();
  ann->add_option("--n", n)->required();

  auto* tr = add_sub("transfer", "transfer image of an annihilated dual class");
  tr->add_option("--h", h)->required();
  tr->add_option("--n", n)->required();
  tr->add_option("--element", element, "JSON file with {h, n, terms}")->required();

  auto* rep = add_sub("reproduce", "re-run the claims in a manifest");
  rep->add_option("--manifest", manifest);
  rep->add_option("--tier", tier)->check(CLI::IsMember({"fast", "slow", "all"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cohit) {
      if (!weight.empty()) {
        CohitBasis cb(h, n, kDefaultColumnCap, g.force);
        WeightComponent wc = cb.weight_component(parse_weight(weight));
        emit(g,
             json{{"h", h},
                  {"n", n},
                  {"weight", weight_key(parse_weight(weight))},
                  {"dim", wc.dim_total},
                  {"dim_zero", wc.dim_zero},
                  {"dim_positive", wc.dim_positive}},
             {"h", "n", "weight", "dim"},
             {std::to_string(h), std::to_string(n), "\"" + weight + "\"", std::to_string(wc.dim_total)});
      } else {
        CohitSummary sum = cohit_summary(g, h, n);
        emit(g, cohit_json(sum), {"h", "n", "dim"},
             {std::to_string(h), std::to_string(n), std::to_string(sum.dim())});
      }
    } else if (*inv) {
      CohitBasis cb(h, n, kDefaultColumnCap, g.force);
      Group grp = group == "s" ? Group::S : Group::GL;
      std::vector<gf2::Vec> basis = weight.empty() ? invariants(cb, grp)
                                                   : invariants_weight(cb, parse_weight(weight), grp);
      json vecs = json::array();
      for (const auto& v : basis) vecs.push_back(vec_bits(v));
      emit(g, json{{"h", h}, {"n", n}, {"group", group}, {"dim", static_cast<int>(basis.size())}, {"basis", vecs}},
           {"h", "n", "group", "dim"},
           {std::to_string(h), std::to_string(n), group, std::to_string(basis.size())});
    } else if (*kam) {
      if (n < h || (n - h) % 2 != 0)
        throw std::invalid_argument("the halving map needs n >= h with n-h even");
      CohitBasis src(h, n, kDefaultColumnCap, g.force);
      CohitBasis dst(h, (n - h) / 2, kDefaultColumnCap, g.force);
      KamekoPair kp = kameko_pair(src, dst);
      json out{{"h", h}, {"n", n},          {"src_dim", kp.src_dim},
               {"dst_dim", kp.dst_dim},     {"rank", kameko_rank(kp)}};
      std::vector<std::string> hdr = {"h", "n", "src_dim", "dst_dim", "rank"};
      std::vector<std::string> row = {std::to_string(h), std::to_string(n), std::to_string(kp.src_dim),
                                      std::to_string(kp.dst_dim), std::to_string(kameko_rank(kp))};
      if (kernel) {
        std::vector<gf2::Vec> kb = kameko_kernel(kp);
        json vecs = json::array();
        for (const auto& v : kb) vecs.push_back(vec_bits(v));
        out["kernel_dim"] = static_cast<int>(kb.size());
        out["kernel"] = vecs;
        out["cohit_key"] = "cohit-h" + std::to_string(h) + "-n" + std::to_string(n) + "-v" +
                           std::to_string(kCacheSchemaVersion);
        hdr.push_back("kernel_dim");
        row.push_back(std::to_string(kb.size()));
      }
      emit(g, out, hdr, row);
    } else if (*ext) {
      ExtGroup eg(s, t);
      emit(g, ext_json(eg), {"s", "t", "dim"},
           {std::to_string(s), std::to_string(t), std::to_string(eg.dim())});
    } else if (*ann) {
      AnnihilatedSpace sp = annihilated_space(h, n, kDefaultColumnCap, g.force);
      json basis = json::array();
      for (const auto& v : sp.basis) basis.push_back(terms_json(sp.element(v)));
      emit(g, json{{"h", h}, {"n", n}, {"dim", sp.dim()}, {"basis", basis}}, {"h", "n", "dim"},
           {std::to_string(h), std::to_string(n), std::to_string(sp.dim())});
    } else if (*tr) {
      int fh = 0, fn = 0;
      DualElement xi = read_dual_file(element, &fh, &fn);
      if ((fh && fh != h) || (fn && fn != n))
        throw std::invalid_argument("element file bidegree disagrees with --h/--n");
      TransferImage ti = transfer_image(xi, h, n);
      emit(g,
           json{{"cycle", ti.cycle},
                {"class", ti.class_name},
                {"coords", vec_bits(ti.coords)},
                {"ext_dim", ti.ext_dim},
                {"image", lambda_to_string(ti.image)}},
           {"cycle", "class", "ext_dim"},
           {ti.cycle ? "true" : "false", ti.class_name, std::to_string(ti.ext_dim)});
    } else if (*rep) {
      return cmd_reproduce(g, manifest, tier);
    }
  } catch (const CapacityError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
