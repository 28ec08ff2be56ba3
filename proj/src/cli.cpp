#include "kconj/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kconj/characters.hpp"
#include "kconj/differentials.hpp"
#include "kconj/errors.hpp"
#include "kconj/homological.hpp"
#include "kconj/json_io.hpp"
#include "kconj/ktheory.hpp"
#include "kconj/parser.hpp"
#include "kconj/verify.hpp"

namespace kconj {

namespace {

struct Options {
  bool json = false;
  int window = 2;
  int padding = 1;
  std::optional<int> degree;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string group;
  std::string expr;
};

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

int cmd_present(const Options& o, std::ostream& out) {
  auto g = build_group(o.group);
  Presentation p = present(*g);
  if (o.json)
    print_json(out, p.to_json());
  else
  {
    std::string text = p.to_text();
    out << text << (text.empty() || text.back() != '\n' ? "\n" : "");
  }
  return kExitOk;
}

int cmd_beta(const Options& o, std::ostream& out) {
  auto g = build_group(o.group);
  RingElement rho = parse_ring_element(o.expr, g->ring());
  KClass b = beta_ad(rho, g);
  IntegralClass f = forgetful(b);
  if (o.json)
    print_json(out, {{"group", g->name()},
                     {"element", rho.to_string()},
                     {"beta", to_json(b)},
                     {"forgetful", to_json(f)},
                     {"indecomposable", to_json(indecomposable_coordinates(rho))}});
  else
    out << b.to_string() << "; forgetful: " << f.to_string() << "\n";
  return kExitOk;
}

int cmd_diff(const Options& o, std::ostream& out) {
  auto g = build_group(o.group);
  RingElement rho = parse_ring_element(o.expr, g->ring());
  DiffForm w = d(rho, g);
  KClass k = phi(w);
  if (o.json)
    print_json(out, {{"group", g->name()}, {"element", rho.to_string()}, {"d", to_json(w)}, {"phi", to_json(k)}});
  else
    out << w.to_string() << "; phi: " << k.to_string() << "\n";
  return kExitOk;
}

int cmd_char(const std::string& direction, const Options& o, std::ostream& out) {
  auto g = build_group(o.group);
  if (direction == "to-gen") {
    SymmetricLaurent s = parse_character(o.expr, torus_model(*g));
    RingElement a = from_character(s, *g);
    if (o.json)
      print_json(out, {{"group", g->name()}, {"character", to_json(s)}, {"element", a.to_string()}, {"terms", to_json(a)}});
    else
      out << a.to_string() << "\n";
  } else {
    RingElement a = parse_ring_element(o.expr, g->ring());
    SymmetricLaurent s = to_character(a, *g);
    if (o.json)
      print_json(out, {{"group", g->name()}, {"element", a.to_string()}, {"character", to_json(s)}});
    else
      out << s.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto g = build_group(o.group);
  VerifyConfig c;
  c.window = o.window;
  c.padding = o.padding;
  c.degree = o.degree;
  c.seed = o.seed;
  c.threads = o.threads;
  VerifyReport r = run_verify(g, c);
  if (o.json)
    print_json(out, r.to_json());
  else
    out << r.to_text();
  return r.passed() ? kExitOk : kExitVerify;
}

int cmd_tor(const Options& o, std::ostream& out) {
  auto g = build_group(o.group);
  TorTable t = tor_ranks(*g);
  if (o.json) {
    print_json(out, t.to_json());
    return kExitOk;
  }
  out << "Tor ranks for " << g->name() << " (rank " << t.rank << ")\n";
  out << "degree  RG-bimodule  Z-augmentation\n";
  for (std::size_t k = 0; k <= t.rank; ++k) {
    std::string deg = "-" + std::to_string(k);
    if (k == 0) deg = "0";
    out << std::string(6 - std::min<std::size_t>(6, deg.size()), ' ') << deg << "  " << std::setw(11)
        << t.bimodule[k] << "  " << std::setw(14) << t.augmentation[k] << "\n";
  }
  out << (t.cross_checked ? "window cross-check: ok" : "window cross-check: MISMATCH") << " (" << t.checked_degrees
      << " degrees)\n";
  return t.cross_checked ? kExitOk : kExitVerify;
}

void report_parse_error(const ParseError& e, const std::string& input, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (!input.empty() && e.position() <= input.size()) err << "  " << input << "\n  " << std::string(e.position(), ' ') << "^\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant K-theory of G acting on itself by conjugation"};
  app.require_subcommand(1);
  Options o;
  std::string direction;
  app.add_flag("--json", o.json, "emit JSON instead of text");

  auto group_arg = [&](CLI::App* sub) { sub->add_option("group", o.group, "group descriptor, e.g. \"SU(2) x T^1\"")->required(); };
  auto expr_arg = [&](CLI::App* sub, const char* what) { sub->add_option("expr", o.expr, what)->required(); };

  auto* present_cmd = app.add_subcommand("present", "presentation and Poincaré ranks");
  group_arg(present_cmd);
  auto* beta_cmd = app.add_subcommand("beta", "adjoint class of an element and its forgetful image");
  group_arg(beta_cmd);
  expr_arg(beta_cmd, "element of R(G)");
  auto* diff_cmd = app.add_subcommand("diff", "Kähler differential and its image under phi");
  group_arg(diff_cmd);
  expr_arg(diff_cmd, "element of R(G)");
  auto* char_cmd = app.add_subcommand("char", "character conversions");
  char_cmd->add_option("direction", direction, "to-gen or from-gen")->required()->check(CLI::IsMember({"to-gen", "from-gen"}));
  group_arg(char_cmd);
  expr_arg(char_cmd, "character (to-gen) or element of R(G) (from-gen)");
  auto* verify_cmd = app.add_subcommand("verify", "run every registered invariant check");
  group_arg(verify_cmd);
  auto* tor_cmd = app.add_subcommand("tor", "graded Tor rank tables");
  group_arg(tor_cmd);

  for (auto* sub : {present_cmd, beta_cmd, diff_cmd, char_cmd, verify_cmd, tor_cmd}) {
    sub->add_flag("--json", o.json, "emit JSON instead of text");
    sub->add_option("--window", o.window, "uniform exponent bound")->check(CLI::Range(0, 64));
    sub->add_option("--padding", o.padding, "extra exponent room for boundaries")->check(CLI::Range(0, 64));
    sub->add_option("--degree", o.degree, "single homological degree");
    sub->add_option("--seed", o.seed, "seed for randomized sweeps");
    sub->add_option("--threads", o.threads, "worker threads for verify")->check(CLI::Range(1, 256));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*present_cmd) return cmd_present(o, out);
    if (*beta_cmd) return cmd_beta(o, out);
    if (*diff_cmd) return cmd_diff(o, out);
    if (*char_cmd) return cmd_char(direction, o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*tor_cmd) return cmd_tor(o, out);
  } catch (const ParseError& e) {
    // Positions refer to whichever string was being parsed.
    std::string input = o.expr;
    if (std::string(e.what()).find("descriptor") != std::string::npos || o.expr.empty()) input = o.group;
    report_parse_error(e, input, err);
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace kconj
