// sclgap: command-line front end over the C interface.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sclgap/sclgap.h"

namespace {

  using Json = nlohmann::json;

  struct Failure {
    sclgap_status status;
    std::string   message;
  };

  // Turns a status into an exception carrying the library's message.
  void check(sclgap_status s) {
    if (s != SCLGAP_OK) {
      throw Failure{s, sclgap_last_error()};
    }
  }

  Json take(char* raw) {
    Json j = Json::parse(raw);
    sclgap_string_free(raw);
    return j;
  }

  class Group {
   public:
    explicit Group(std::string const& text) {
      check(sclgap_group_parse(text.c_str(), &_g));
    }
    ~Group() {
      sclgap_group_free(_g);
    }
    Group(Group const&)            = delete;
    Group& operator=(Group const&) = delete;
    sclgap_group const* get() const {
      return _g;
    }

   private:
    sclgap_group* _g = nullptr;
  };

  class Orbifold {
   public:
    explicit Orbifold(std::string const& text) {
      check(sclgap_orbifold_parse(text.c_str(), &_o));
    }
    ~Orbifold() {
      sclgap_orbifold_free(_o);
    }
    Orbifold(Orbifold const&)            = delete;
    Orbifold& operator=(Orbifold const&) = delete;
    sclgap_orbifold const* get() const {
      return _o;
    }

   private:
    sclgap_orbifold* _o = nullptr;
  };

  int exit_code(sclgap_status s) {
    switch (s) {
      case SCLGAP_PARSE:
      case SCLGAP_INVALID_ARGUMENT:
        return 2;
      case SCLGAP_DOMAIN:
        return 3;
      default:
        return 1;
    }
  }

  std::vector<int> parse_pqr(std::string const& text) {
    std::vector<int>  out;
    std::stringstream ss(text);
    std::string       item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) {
          throw std::invalid_argument(item);
        }
      } catch (std::exception const&) {
        throw Failure{SCLGAP_PARSE, "--pqr expects three comma-separated integers"};
      }
    }
    if (out.size() != 3) {
      throw Failure{SCLGAP_PARSE, "--pqr expects three comma-separated integers"};
    }
    return out;
  }

  int default_jobs() {
    if (char const* env = std::getenv("SCLGAP_JOBS")) {
      try {
        int const n = std::stoi(env);
        if (n >= 1) {
          return n;
        }
      } catch (std::exception const&) {
      }
      std::cerr << "sclgap: ignoring invalid SCLGAP_JOBS=" << env << '\n';
    }
    return 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified lower bounds for stable commutator length"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sclgap_version()));

  std::string format = "json";
  bool        timing = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--timing", timing, "Include wall-clock timing in the output");

  std::string group, word, base, input, chain, spec, w1, w2, pqr = "2,3,7", checkpoint;
  int         ball = 8, conj_ball = 6, maxlen = 6, vmaxlen = 12, jobs = default_jobs();
  std::int64_t  samples = 10000;
  std::uint64_t seed    = 42;

  std::string                 command;
  Json                        inputs;
  std::function<Json()>       run;

  auto leaf = [&](CLI::App* sub, std::string name, std::function<Json()> body) {
    sub->callback([&, name, body] {
      command = name;
      run     = body;
    });
  };

  auto* reduce = app.add_subcommand("reduce", "Reduced and cyclic forms of a word");
  reduce->add_option("--group", group, "Group spec, e.g. \"F2 * C3\"")->required();
  reduce->add_option("word", word, "Word")->required();
  leaf(reduce, "reduce", [&] {
    inputs = {{"group", group}, {"word", word}};
    Group g(group);
    char* out = nullptr;
    check(sclgap_reduce(g.get(), word.c_str(), &out));
    return take(out);
  });

  auto* qm = app.add_subcommand("qm", "Counting quasimorphisms");
  qm->require_subcommand(1);
  auto* qm_eval = qm->add_subcommand("eval", "Homogenized counting quasimorphism on a word or chain");
  qm_eval->add_option("--group", group)->required();
  qm_eval->add_option("--base", base, "Base word")->required();
  qm_eval->add_option("input", input, "Word, or chain such as \"2[x y] - [y]\"")->required();
  leaf(qm_eval, "qm eval", [&] {
    inputs = {{"group", group}, {"base", base}, {"input", input}};
    Group g(group);
    char* out = nullptr;
    check(sclgap_qm_eval(g.get(), base.c_str(), input.c_str(), &out));
    return take(out);
  });

  auto* gap = app.add_subcommand("gap", "Gap certificates in free products of cyclic groups");
  gap->require_subcommand(1);
  auto* gap_element = gap->add_subcommand("element", "Certificate for a single element");
  gap_element->add_option("--group", group)->required();
  gap_element->add_option("word", word)->required();
  leaf(gap_element, "gap element", [&] {
    inputs = {{"group", group}, {"word", word}};
    Group g(group);
    char* out = nullptr;
    check(sclgap_gap_element(g.get(), word.c_str(), &out));
    return take(out);
  });
  auto* gap_chain = gap->add_subcommand("chain", "Certificate for a rational chain");
  gap_chain->add_option("--group", group)->required();
  gap_chain->add_option("chain", chain)->required();
  leaf(gap_chain, "gap chain", [&] {
    inputs = {{"group", group}, {"chain", chain}};
    Group g(group);
    char* out = nullptr;
    check(sclgap_gap_chain(g.get(), chain.c_str(), &out));
    return take(out);
  });

  auto* orb = app.add_subcommand("orb", "Orbifold groups");
  orb->require_subcommand(1);
  auto* rel = orb->add_subcommand("rel-gap", "Relative gap for an orbifold with boundary");
  rel->add_option("--spec", spec, "orb(orientable=..., genus=..., boundary=..., cones=[...])")
      ->required();
  rel->add_option("word", word)->required();
  leaf(rel, "orb rel-gap", [&] {
    inputs = {{"spec", spec}, {"word", word}};
    Orbifold o(spec);
    char*    out = nullptr;
    check(sclgap_orb_rel_gap(o.get(), word.c_str(), &out));
    return take(out);
  });
  auto* closed = orb->add_subcommand("closed-gap", "Gap in a closed orbifold group");
  closed->add_option("--spec", spec)->required();
  closed->add_option("--ball", ball, "Edge-power ball for the conjugacy search")
      ->capture_default_str();
  closed->add_option("word", word)->required();
  leaf(closed, "orb closed-gap", [&] {
    inputs = {{"spec", spec}, {"word", word}, {"ball", ball}};
    Orbifold o(spec);
    char*    out = nullptr;
    check(sclgap_orb_closed_gap(o.get(), word.c_str(), ball, &out));
    return take(out);
  });
  auto* split = orb->add_subcommand("splitting", "Splitting over Z and acylindricity report");
  split->add_option("--spec", spec)->required();
  leaf(split, "orb splitting", [&] {
    inputs = {{"spec", spec}};
    Orbifold o(spec);
    char*    out = nullptr;
    check(sclgap_orb_splitting(o.get(), &out));
    return take(out);
  });

  auto* vd = app.add_subcommand("vondyck", "Von Dyck group numerics");
  vd->require_subcommand(1);
  auto* verify = vd->add_subcommand("verify", "Sample and enumerate traces of hyperbolic elements");
  verify->add_option("--pqr", pqr, "Orders p,q,r")->capture_default_str();
  verify->add_option("--samples", samples)->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--maxlen", vmaxlen, "Syllables per sampled word")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed)->capture_default_str();
  leaf(verify, "vondyck verify", [&] {
    inputs = {{"pqr", pqr}, {"samples", samples}, {"maxlen", vmaxlen}, {"seed", seed}};
    auto const v   = parse_pqr(pqr);
    char*      out = nullptr;
    check(sclgap_vondyck_verify(v[0], v[1], v[2], samples, vmaxlen, seed, &out));
    return take(out);
  });
  auto* constant = vd->add_subcommand("constant", "delta, the epsilon window and the gap constant");
  leaf(constant, "vondyck constant", [&] {
    inputs   = Json::object();
    char* out = nullptr;
    check(sclgap_vondyck_constant(&out));
    return take(out);
  });

  auto* orc = app.add_subcommand("oracle", "Brute-force checks");
  orc->require_subcommand(1);
  auto* defect = orc->add_subcommand("defect", "Exhaustive defect of a counting quasimorphism");
  defect->add_option("--group", group)->required();
  defect->add_option("--base", base)->required();
  defect->add_option("--maxlen", maxlen)->capture_default_str()->check(CLI::NonNegativeNumber);
  defect->add_option("--jobs", jobs, "Worker threads (default: SCLGAP_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  defect->add_option("--checkpoint", checkpoint, "Resume file");
  leaf(defect, "oracle defect", [&] {
    inputs = {{"group", group}, {"base", base}, {"maxlen", maxlen}};
    Group g(group);
    char* out = nullptr;
    check(sclgap_oracle_defect(g.get(), base.c_str(), maxlen, jobs,
                               checkpoint.empty() ? nullptr : checkpoint.c_str(), &out));
    return take(out);
  });
  auto* conj = orc->add_subcommand("conj", "Search for a conjugator in a ball");
  conj->add_option("--group", group)->required();
  conj->add_option("w1", w1)->required();
  conj->add_option("w2", w2)->required();
  conj->add_option("--ball", conj_ball)->capture_default_str()->check(CLI::NonNegativeNumber);
  leaf(conj, "oracle conj", [&] {
    inputs = {{"group", group}, {"w1", w1}, {"w2", w2}, {"ball", conj_ball}};
    Group g(group);
    char* out = nullptr;
    check(sclgap_oracle_conj(g.get(), w1.c_str(), w2.c_str(), conj_ball, &out));
    return take(out);
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto const start  = std::chrono::steady_clock::now();
    Json       result = run();
    Json       doc    = {{"schema_version", "1"},
                         {"command", command},
                         {"inputs", inputs},
                         {"result", std::move(result)}};
    if (timing) {
      doc["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                                 - start)
                                       .count()}};
    }
    if (format == "json") {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::function<void(Json const&, std::string const&)> walk = [&](Json const& j,
                                                                       std::string const& path) {
        if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den")) {
          std::string const den = j["den"].get<std::string>();
          std::cout << path << " = " << j["num"].get<std::string>() << (den == "1" ? "" : "/" + den)
                    << '\n';
        } else if (j.is_object()) {
          for (auto const& [k, v] : j.items()) {
            walk(v, path.empty() ? k : path + "." + k);
          }
        } else if (j.is_array()) {
          for (std::size_t i = 0; i < j.size(); ++i) {
            walk(j[i], path + "[" + std::to_string(i) + "]");
          }
        } else {
          std::cout << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
        }
      };
      walk(doc, "");
    }
    return 0;
  } catch (Failure const& f) {
    std::cerr << "sclgap: " << f.message << '\n';
    return exit_code(f.status);
  }
}
