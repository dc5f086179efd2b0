// tabkit command line front end. JSON in on stdin (or --input), JSON out on stdout.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tabkit/abtableau.hpp"
#include "tabkit/charverify.hpp"
#include "tabkit/coeffs.hpp"
#include "tabkit/duality.hpp"
#include "tabkit/errors.hpp"
#include "tabkit/insertion.hpp"
#include "tabkit/rational.hpp"
#include "tabkit/suites.hpp"
#include "tabkit/switching.hpp"

using nlohmann::json;
using namespace tabkit;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

struct Options {
  std::string input = "-";
  bool ascii = false;
  std::uint64_t seed = kDefaultSeed;
};

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::Usage, msg); }

json read_input(const Options& o) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(o.input);
    if (!f) usage("cannot open " + o.input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) usage("empty input");
  return json::parse(text);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json field(const json& j, const char* key, std::size_t index) {
  if (j.is_array() && j.size() > index) return j[index];
  if (j.is_object() && j.contains(key)) return j[key];
  usage(std::string("input is missing \"") + key + "\"");
}

GenPartition gen_arg(const std::string& s) { return gen_partition_from_json(json::parse(s)); }
Partition part_arg(const std::string& s) { return partition_from_json(json::parse(s)); }

// Output sorted by canonical JSON text.
json sorted(std::vector<json> v) {
  std::sort(v.begin(), v.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
  return json(std::move(v));
}

void ascii_block(const std::string& title, const std::string& body) { std::cout << title << ":\n" << body << '\n'; }

std::pair<int, int> window_arg(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stoi(s), -1};
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    usage("window must be D or D,E");
  }
}

void set_threads() {
  const char* env = std::getenv("TABKIT_THREADS");
  if (!env) return;
  int n = 0;
  try {
    n = std::stoi(env);
  } catch (const std::exception&) {
    usage("TABKIT_THREADS must be a positive integer");
  }
  if (n < 1) usage("TABKIT_THREADS must be a positive integer");
#ifdef _OPENMP
  omp_set_num_threads(n);
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tabkit: tableau insertion, switching and A/B duality"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--input", opt.input, "JSON input file, - for stdin");
  app.add_flag("--ascii", opt.ascii, "render tableaux as text instead of JSON");
  app.add_option("--seed", opt.seed, "seed for randomized suites");

  std::string mode = "col";
  auto* insert = app.add_subcommand("insert", "tableau insertion of [T, T']");
  insert->add_option("--mode", mode, "col or row")->check(CLI::IsMember({"col", "row"}));

  std::string order = "last-first";
  auto* sw = app.add_subcommand("switch", "switch_full on {\"s\":S,\"t\":T}");
  sw->add_option("--order", order)->check(CLI::IsMember({"last-first", "first-first"}));

  auto* jd = app.add_subcommand("jdt", "rectify a skew tableau");
  jd->add_option("--order", order)->check(CLI::IsMember({"last-first", "first-first"}));

  // three separate strings: CLI11 would split a bracketed vector argument
  std::vector<std::string> shapes(3);
  auto shape_args = [&](CLI::App* sub, int required) {
    const char* names[] = {"first", "second", "third"};
    for (int i = 0; i < 3; ++i) {
      auto* o = sub->add_option(names[i], shapes[i], "shape as a JSON array");
      if (i < required) o->required();
    }
  };
  bool list = false;
  auto* lrc = app.add_subcommand("lr-count", "N^lambda_{mu nu}");
  shape_args(lrc, 3);
  lrc->add_flag("--list", list, "print the LR tableaux");

  std::string which;
  bool witness = false;
  auto* co = app.add_subcommand("coeff", "c or c-hat of generalized partitions");
  co->add_option("kind", which)->required()->check(CLI::IsMember({"c", "chat"}));
  shape_args(co, 3);
  co->add_flag("--witness", witness, "dump representative LR tableaux");

  bool inverse = false;
  int extra = 0;
  auto* rsk = app.add_subcommand("rsk", "A/B RSK of level-one word pairs");
  rsk->add_flag("--inverse", inverse, "input {p, q}, output the word pairs");
  rsk->add_option("--extra", extra, "run that many columns wider")->check(CLI::NonNegativeNumber);

  auto* lrab = app.add_subcommand("lr-ab", "product of two A/B tableaux");
  lrab->add_flag("--inverse", inverse, "input {t, r, mu, nu}");
  lrab->add_option("--extra", extra)->check(CLI::NonNegativeNumber);

  auto* skew = app.add_subcommand("skew-jdt", "rectify a skew A/B tableau");
  skew->add_flag("--inverse", inverse, "input {lambda, mu, j, r}");
  skew->add_option("--extra", extra)->check(CLI::NonNegativeNumber);

  std::string char_mode = "super", window = "2";
  int trunc = 2;
  std::string lambda_s;
  auto* ch = app.add_subcommand("char", "windowed character of L(Lambda(lambda))");
  ch->add_option("--mode", char_mode)->check(CLI::IsMember({"super", "gl"}));
  ch->add_option("lambda", lambda_s)->required();
  ch->add_option("--trunc", trunc)->check(CLI::PositiveNumber);
  ch->add_option("--window", window, "D or D,E: x_B^-1 degree and x_A degree caps");

  std::string kind, alphabet_s = "N(3)", plus_s, minus_s, skew_s, inner_s = "[]";
  int bound = 2;
  bool count_only = false;
  auto* en = app.add_subcommand("enumerate", "list tableaux: sst, rational, ab, lr");
  en->add_option("kind", kind)->required()->check(CLI::IsMember({"sst", "rational", "ab", "lr"}));
  shape_args(en, 1);
  en->add_option("--inner", inner_s);
  en->add_option("--alphabet", alphabet_s, "builtin name or inline JSON");
  en->add_option("--plus", plus_s, "A alphabet for ab");
  en->add_option("--minus", minus_s, "B alphabet for ab");
  en->add_option("--skew", skew_s, "inner generalized shape for ab");
  en->add_option("--bound", bound, "|sh(T-)| cap for ab")->check(CLI::NonNegativeNumber);
  en->add_flag("--count", count_only);

  std::string suite;
  bool list_suites = false;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "suite name or all");
  ver->add_flag("--list", list_suites);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  auto alphabet_arg = [](const std::string& s) {
    if (s.empty()) usage("alphabet required");
    if (s.front() == '{') return alphabet_from_json(json::parse(s));
    return alphabet_from_json(json(s));
  };

  try {
    set_threads();

    if (*insert) {
      auto in = read_input(opt);
      auto t = tableau_from_json(field(in, "t", 0)), tp = tableau_from_json(field(in, "tp", 1));
      auto r = mode == "col" ? col_insert_tableau(t, tp) : row_insert_tableau(tp, t);
      if (opt.ascii) {
        ascii_block("result", to_ascii(r.result));
        ascii_block("recording", to_ascii(r.recording));
      } else {
        emit({{"result", to_json(r.result)}, {"recording", to_json(r.recording)}});
      }
    } else if (*sw) {
      auto in = read_input(opt);
      auto r = switch_full(tableau_from_json(field(in, "s", 0)), tableau_from_json(field(in, "t", 1)),
                           order == "last-first" ? ScanOrder::LastFirst : ScanOrder::FirstFirst);
      if (opt.ascii) {
        ascii_block("tprime", to_ascii(r.tprime));
        ascii_block("sprime", to_ascii(r.sprime));
      } else {
        emit({{"tprime", to_json(r.tprime)}, {"sprime", to_json(r.sprime)}});
      }
    } else if (*jd) {
      auto in = read_input(opt);
      auto r = jdt(tableau_from_json(in), order == "last-first" ? ScanOrder::LastFirst : ScanOrder::FirstFirst);
      if (opt.ascii) {
        ascii_block("rect", to_ascii(r.rect));
        ascii_block("rec", to_ascii(r.rec));
      } else {
        emit({{"rect", to_json(r.rect)}, {"rec", to_json(r.rec)}});
      }
    } else if (*lrc) {
      auto lam = part_arg(shapes[0]), mu = part_arg(shapes[1]), nu = part_arg(shapes[2]);
      if (!list) {
        std::cout << lr_count(lam, mu, nu) << '\n';
      } else {
        std::vector<json> v;
        for (const auto& q : enumerate_LR(lam, mu, nu)) v.push_back(to_json(q));
        emit(sorted(std::move(v)));
      }
    } else if (*co) {
      auto lam = gen_arg(shapes[0]), mu = gen_arg(shapes[1]), nu = gen_arg(shapes[2]);
      const bool hat = which == "chat";
      auto v = hat ? c_hat(lam, mu, nu) : c(lam, mu, nu);
      if (!witness) {
        std::cout << v << '\n';
      } else {
        std::vector<json> w;
        for (const auto& q : hat ? lr_class_product(lam, mu, nu) : lr_class_slash(lam, mu, nu)) w.push_back(to_json(q));
        emit({{"value", v}, {"witnesses", sorted(std::move(w))}});
      }
    } else if (*rsk) {
      auto in = read_input(opt);
      if (inverse) {
        auto p = ab_from_json(field(in, "p", 0));
        auto q = rational_from_json(field(in, "q", 1));
        json out = json::array();
        for (const auto& w : kappa_inv(p, q)) out.push_back(to_json(w));
        emit(out);
      } else {
        auto a = alphabet_from_json(field(in, "a", 0)), b = alphabet_from_json(field(in, "b", 1));
        auto pairs = field(in, "pairs", 2);
        if (!pairs.is_array() || pairs.empty()) usage("rsk needs at least one word pair");
        std::vector<WordPair> w;
        for (const auto& x : pairs) w.push_back(word_pair_from_json(x, a, b));
        auto [p, q] = kappa(w, a, b, extra);
        if (opt.ascii) {
          ascii_block("P", to_ascii(p));
          ascii_block("Q", to_ascii(q));
        } else {
          emit({{"p", to_json(p)}, {"q", to_json(q)}});
        }
      }
    } else if (*lrab) {
      auto in = read_input(opt);
      if (inverse) {
        auto [t1, t2] = rho_ab_inv(ab_from_json(field(in, "t", 0)), tableau_from_json(field(in, "r", 1)),
                                   gen_partition_from_json(field(in, "mu", 2)),
                                   gen_partition_from_json(field(in, "nu", 3)));
        emit({{"t1", to_json(t1)}, {"t2", to_json(t2)}});
      } else {
        auto [t, r] = rho_ab(ab_from_json(field(in, "t1", 0)), ab_from_json(field(in, "t2", 1)), extra);
        if (opt.ascii) {
          ascii_block("T", to_ascii(t));
          ascii_block("R", to_ascii(r));
        } else {
          emit({{"t", to_json(t)}, {"r", to_json(r)}});
        }
      }
    } else if (*skew) {
      auto in = read_input(opt);
      if (inverse) {
        auto x = skew_jdt_ab_inv(gen_partition_from_json(field(in, "lambda", 0)),
                                 gen_partition_from_json(field(in, "mu", 1)), ab_from_json(field(in, "j", 2)),
                                 tableau_from_json(field(in, "r", 3)));
        emit(to_json(x));
      } else {
        auto [j, r] = skew_jdt_ab(ab_from_json(in), extra);
        if (opt.ascii) {
          ascii_block("J", to_ascii(j));
          ascii_block("R", to_ascii(r));
        } else {
          emit({{"j", to_json(j)}, {"r", to_json(r)}});
        }
      }
    } else if (*ch) {
      auto lam = gen_arg(lambda_s);
      auto [d, e] = window_arg(window);
      if (d < 0) usage("window must be non-negative");
      const auto m = char_mode == "super" ? CharMode::Super : CharMode::Gl;
      auto a = mode_plus(m, trunc), b = mode_minus(m, trunc);
      auto p = super_character_window(lam, m, trunc, d);
      if (e >= 0) {
        LaurentPoly capped(p.nvars());
        for (const auto& [x, k] : p.terms()) {
          int deg = 0;
          for (int i = 0; i < a->size(); ++i) deg += x[i];
          if (deg <= e) capped.add(x, k);
        }
        p = capped;
      }
      auto names = variable_names(a, b);
      if (opt.ascii) {
        std::cout << to_string(p) << '\n';
        for (std::size_t i = 0; i < names.size(); ++i) std::cout << "x" << i + 1 << " = " << names[i] << '\n';
      } else {
        auto hw = m == CharMode::Super ? highest_weight_super(lam) : highest_weight_gl(lam);
        emit({{"lambda", to_json(lam)},
              {"mode", char_mode},
              {"highest_weight", to_json(hw)},
              {"character", to_json(p, names)}});
      }
    } else if (*en) {
      std::vector<json> out;
      std::vector<std::string> text;
      if (kind == "sst") {
        if (!shapes[1].empty()) usage("enumerate sst takes one shape");
        auto a = alphabet_arg(alphabet_s);
        for (const auto& t : enumerate_sst({part_arg(shapes[0]), part_arg(inner_s)}, a)) {
          out.push_back(to_json(t));
          text.push_back(to_ascii(t));
        }
      } else if (kind == "rational") {
        if (!shapes[1].empty()) usage("enumerate rational takes one shape");
        for (const auto& t : enumerate_rational(gen_arg(shapes[0]))) {
          out.push_back(to_json(t));
          text.push_back(to_ascii(t));
        }
      } else if (kind == "ab") {
        if (!shapes[1].empty()) usage("enumerate ab takes one shape");
        std::optional<GenPartition> mu;
        if (!skew_s.empty()) mu = gen_arg(skew_s);
        for (const auto& x :
             enumerate_ab(gen_arg(shapes[0]), mu, alphabet_arg(plus_s), alphabet_arg(minus_s), bound)) {
          out.push_back(to_json(x));
          text.push_back(to_ascii(x));
        }
      } else {
        if (shapes[2].empty()) usage("enumerate lr takes lambda mu nu");
        for (const auto& q : enumerate_LR(part_arg(shapes[0]), part_arg(shapes[1]), part_arg(shapes[2]))) {
          out.push_back(to_json(q));
          text.push_back(to_ascii(q));
        }
      }
      if (count_only) {
        std::cout << out.size() << '\n';
      } else if (opt.ascii) {
        std::sort(text.begin(), text.end());
        for (const auto& t : text) std::cout << t << '\n';
      } else {
        emit(sorted(std::move(out)));
      }
    } else if (*ver) {
      if (list_suites) {
        for (const auto& s : suite_names()) std::cout << s << '\n';
        return kOk;
      }
      if (suite.empty()) usage("verify needs a suite name (see --list)");
      std::vector<std::string> run;
      if (suite == "all")
        run = suite_names();
      else if (is_suite(suite))
        run = {suite};
      else
        usage("unknown suite " + suite);
      bool all_ok = true;
      json out = json::array();
      for (const auto& s : run) {
        auto r = run_suite(s, opt.seed);
        all_ok = all_ok && r.ok();
        if (opt.ascii) {
          for (const auto& c : r.cases)
            std::cout << (c.ok ? "PASS " : "FAIL ") << s << ": " << c.key << (c.ok ? "" : " (" + c.detail + ")")
                      << '\n';
        } else {
          out.push_back(to_json(r));
        }
      }
      if (!opt.ascii) emit(run.size() == 1 ? out[0] : out);
      return all_ok ? kOk : kVerifyFailed;
    }
    return kOk;
  } catch (const Error& e) {
    const bool internal = e.kind() == ErrorKind::Invariant || e.kind() == ErrorKind::StabilityViolation;
    std::cerr << json{{"error", e.what()}, {"kind", to_string(e.kind())}, {"argv", std::vector<std::string>(argv, argv + argc)}}
                     .dump(2)
              << '\n';
    return internal ? kInternal : kUsage;
  } catch (const json::exception& e) {
    std::cerr << "tabkit: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "internal"}, {"argv", std::vector<std::string>(argv, argv + argc)}}
                     .dump(2)
              << '\n';
    return kInternal;
  }
}
