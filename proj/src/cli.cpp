#include "wilflab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wilflab/classes.hpp"
#include "wilflab/clusters.hpp"
#include "wilflab/embedding.hpp"
#include "wilflab/enumeration.hpp"
#include "wilflab/equivalence.hpp"
#include "wilflab/errors.hpp"
#include "wilflab/genfun.hpp"
#include "wilflab/tree.hpp"
#include "wilflab/word.hpp"

namespace wilflab::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, dot };

Json word_array(const std::vector<Permutation>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

Json distances_json(const DistanceMultiset& d) {
  return Json(std::vector<std::size_t>(d.values().begin(), d.values().end()));
}

std::string join(std::span<const std::size_t> xs, char sep = ',') {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += sep;
    out += std::to_string(xs[k]);
  }
  return out;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_words(std::ostream& out, const std::vector<Permutation>& ps) {
  for (const auto& p : ps) out << to_string(p) << '\n';
}

/// Everything a subcommand may read after parsing.
struct Request {
  Format format = Format::text;
  std::string u;
  std::string v;
  std::string set;
  std::string set2;
  std::size_t number = 0;
  std::optional<std::size_t> letter;
  std::optional<std::size_t> length;
  std::optional<std::uint64_t> norm;
  std::size_t max_shifts = 2;
  std::string relation = "ss";
  std::string series = "F";
  std::string compare;
  std::string output_dir;
  bool extended = false;
  bool tableau = false;
  bool stats = false;
  bool force = false;
};

Json info_json(const Word& w) {
  Json j;
  j["word"] = to_string(w);
  j["length"] = w.size();
  j["norm"] = w.norm();
  const LetterStats stats = letter_stats(w);
  j["alphabet"] = std::vector<Letter>(stats.alphabet.begin(), stats.alphabet.end());
  Json mult = Json::object();
  for (const auto& [a, c] : stats.multiplicities) mult[std::to_string(a)] = c;
  j["multiplicities"] = std::move(mult);
  j["reversal"] = to_string(reversal(w));
  j["shift_up"] = to_string(shift_up(w));
  j["permutation"] = Permutation::is_permutation(w);
  if (Permutation::is_permutation(w) && !w.empty()) {
    const Permutation p(w);
    j["inverse"] = to_string(inverse(p));
    j["reversal_class_kind"] = std::string(to_string(reversal_class_kind(p)));
  }
  return j;
}

int cmd_info(const Request& r, std::ostream& out) {
  const Word w = parse_word(r.u);
  const Json j = info_json(w);
  if (r.format == Format::json) {
    print_json(out, j);
    return ok;
  }
  out << "word " << j["word"].get<std::string>() << '\n';
  out << "length " << w.size() << '\n';
  out << "norm " << w.norm() << '\n';
  out << "alphabet";
  for (const auto& a : j["alphabet"]) out << ' ' << a.get<Letter>();
  out << '\n' << "multiplicities";
  for (const auto& [a, c] : j["multiplicities"].items()) out << ' ' << a << ':' << c.get<std::size_t>();
  out << '\n';
  out << "reversal " << j["reversal"].get<std::string>() << '\n';
  out << "shift_up " << j["shift_up"].get<std::string>() << '\n';
  if (j.contains("inverse")) {
    out << "inverse " << j["inverse"].get<std::string>() << '\n';
    out << "reversal_class_kind " << j["reversal_class_kind"].get<std::string>() << '\n';
  }
  return ok;
}

int cmd_embed(const Request& r, std::ostream& out) {
  const Word u = parse_word(r.u);
  const Word w = parse_word(r.v);
  const auto em = embedding_set(u, w);
  if (r.format == Format::json) {
    print_json(out, Json{{"u", to_string(u)}, {"w", to_string(w)}, {"embedding_set", em},
                         {"leq", !em.empty()}});
  } else {
    out << positions_to_string(em) << '\n';
  }
  return ok;
}

int cmd_cluster(const Request& r, std::ostream& out) {
  const Word u = parse_word(r.u);
  const EmbeddingSet e = parse_embedding_set(r.set);
  Word m;
  std::optional<PreCluster> pre;
  if (r.extended) {
    if (!r.length) throw UsageError("--extended needs --length");
    const Permutation p(u);
    m = extended_minimal_cluster(p, e, *r.length);
  } else {
    pre = pre_cluster(u, e);
    m = pre->fold();
  }
  if (r.format == Format::json) {
    Json j{{"u", to_string(u)}, {"set", to_string(e)}, {"extended", r.extended},
           {"cluster", to_string(m)}, {"length", m.size()}, {"norm", m.norm()}};
    print_json(out, j);
  } else if (r.tableau && pre) {
    out << pre->render();
  } else {
    out << to_string(m) << '\n';
  }
  return ok;
}

int cmd_compose(const Request& r, std::ostream& out) {
  const EmbeddingSet e = compose_embeddings(parse_embedding_set(r.set), parse_embedding_set(r.set2));
  if (r.format == Format::json) {
    print_json(out, Json{{"composed", std::vector<Position>(e.begin(), e.end())}});
  } else {
    out << to_string(e) << '\n';
  }
  return ok;
}

int cmd_blocked(const Request& r, std::ostream& out) {
  const Permutation u = parse_permutation(r.u);
  const EmbeddingSet e = parse_embedding_set(r.set);
  std::vector<Letter> letters;
  if (r.letter) {
    letters.push_back(static_cast<Letter>(*r.letter));
  } else {
    for (Letter i = 1; i <= u.n(); ++i) letters.push_back(i);
  }
  Json j = Json::object();
  for (Letter i : letters) j[std::to_string(i)] = blocked_count(u, e, i);
  if (r.format == Format::json) {
    print_json(out, Json{{"u", to_string(u)}, {"set", to_string(e)}, {"blocked", j}});
  } else if (r.letter) {
    out << j.begin().value().get<std::size_t>() << '\n';
  } else {
    for (const auto& [i, c] : j.items()) out << i << ' ' << c.get<std::size_t>() << '\n';
  }
  return ok;
}

int cmd_plus(const Request& r, std::ostream& out) {
  const Permutation u = parse_permutation(r.u);
  std::vector<Letter> letters;
  if (r.letter) {
    letters.push_back(static_cast<Letter>(*r.letter));
  } else {
    for (Letter i = 1; i < u.n(); ++i) letters.push_back(i);
  }
  Json j = Json::object();
  for (Letter i : letters) j[std::to_string(i)] = distances_json(plus_multiset(u, i));
  if (r.format == Format::json) {
    print_json(out, Json{{"u", to_string(u)}, {"plus", j}});
    return ok;
  }
  for (Letter i : letters) out << i << ' ' << to_string(plus_multiset(u, i)) << '\n';
  return ok;
}

int cmd_profile(const Request& r, std::ostream& out) {
  const Permutation u = parse_permutation(r.u);
  const DifferenceProfile profile = difference_profile(u);
  if (r.format == Format::json) {
    Json deltas = Json::object();
    for (std::size_t i = u.n() >= 2 ? u.n() - 1 : 0; i >= 2; --i) {
      auto d = profile.delta(i);
      deltas[std::to_string(i)] = std::vector<std::size_t>(d.begin(), d.end());
    }
    print_json(out, Json{{"u", to_string(u)}, {"inverse", to_string(inverse(u))}, {"deltas", deltas}});
    return ok;
  }
  for (std::size_t i = u.n() >= 2 ? u.n() - 1 : 0; i >= 2; --i) {
    out << i << " (" << join(profile.delta(i)) << ")\n";
  }
  return ok;
}

int cmd_pair_test(const Request& r, std::ostream& out, bool ss) {
  const Permutation u = parse_permutation(r.u);
  const Permutation v = parse_permutation(r.v);
  const bool result = ss ? ss_equivalent(u, v) : cross_equivalent(u, v);
  if (r.format == Format::json) {
    print_json(out, Json{{"u", to_string(u)}, {"v", to_string(v)},
                         {ss ? "ss_equivalent" : "cross_equivalent", result}});
  } else {
    out << (result ? "true" : "false") << '\n';
  }
  return ok;
}

int cmd_class(const Request& r, std::ostream& out, bool ss) {
  const Permutation u = parse_permutation(r.u);
  const auto members = ss ? ss_class(u) : cross_class(u);
  if (r.format == Format::json) {
    print_json(out, word_array(members));
  } else {
    print_words(out, members);
  }
  return ok;
}

int cmd_swap(const Request& r, std::ostream& out) {
  const Permutation v = adjacent_top_swap(parse_permutation(r.u));
  if (r.format == Format::json) {
    print_json(out, Json{{"u", r.u}, {"swapped", to_string(v)}});
  } else {
    out << to_string(v) << '\n';
  }
  return ok;
}

int cmd_mcrt(const Request& r, std::ostream& out) {
  const Word u = parse_word(r.u);
  const Word v = parse_word(r.v);
  const EmbeddingSet e = parse_embedding_set(r.set);
  const bool pass = mcrt_check(u, v, e);
  if (r.format == Format::json) {
    print_json(out, Json{{"u", to_string(u)}, {"v", to_string(v)}, {"set", to_string(e)},
                         {"u_cluster", to_string(minimal_cluster(u, e))},
                         {"v_cluster", to_string(minimal_cluster(v, e))},
                         {"rearrangements", pass}});
  } else {
    out << to_string(minimal_cluster(u, e)) << '\n'
        << to_string(minimal_cluster(v, e)) << '\n'
        << (pass ? "true" : "false") << '\n';
  }
  return ok;
}

int cmd_witness(const Request& r, std::ostream& out) {
  const Word u = parse_word(r.u);
  const Word v = parse_word(r.v);
  const Verdict verdict = mcrt_witness_search(u, v, r.max_shifts);
  if (r.format == Format::json) {
    Json j{{"u", to_string(u)}, {"v", to_string(v)}, {"max_shifts", r.max_shifts},
           {"verdict", std::string(to_string(verdict.kind))}};
    j["witness"] = verdict.witness ? Json(to_string(*verdict.witness)) : Json(nullptr);
    print_json(out, j);
  } else {
    out << to_string(verdict.kind);
    if (verdict.witness) out << ' ' << to_string(*verdict.witness);
    out << '\n';
  }
  return ok;
}

int cmd_tree(const Request& r, std::ostream& out) {
  const CrossTree tree = label_levels(build_tree(parse_permutation(r.u)));
  if (r.format == Format::dot) {
    out << export_tree(tree, TreeFormat::dot);
    return ok;
  }
  if (r.format == Format::json) {
    out << export_tree(tree, TreeFormat::json);
    return ok;
  }
  for (std::size_t i = 0; i <= tree.n; ++i) {
    out << "level " << i;
    if (i < tree.n) {
      out << " children " << tree.child_count[i];
      if (tree.labels[i]) out << " label " << *tree.labels[i];
    }
    out << ':';
    for (const auto& node : tree.levels[i]) out << ' ' << to_string(node.word);
    out << '\n';
  }
  out << "k " << tree.k << "\nl " << tree.l << '\n';
  for (const auto& c : partition_leaves(tree).classes) {
    out << "class";
    for (const auto& m : c.members) out << ' ' << to_string(m);
    out << '\n';
  }
  return ok;
}

void print_stats(std::ostream& out, const ClassStatistics& s) {
  out << "classes " << s.class_count << '\n';
  out << "total " << s.total << '\n';
  out << "min " << s.min_size << '\n';
  out << "max " << s.max_size << '\n';
  out << "histogram";
  for (auto it = s.histogram.rbegin(); it != s.histogram.rend(); ++it) {
    out << ' ' << it->first << ':' << it->second;
  }
  out << '\n';
}

int cmd_enumerate(const Request& r, std::ostream& out) {
  const Relation relation = parse_relation(r.relation);
  const ClassPartition p = enumerate_classes(r.number, relation, {r.force, 0});
  if (!r.output_dir.empty()) {
    const auto path = std::filesystem::path(r.output_dir) / partition_file_name(r.number, relation);
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write " + path.string());
    file << partition_to_json(p);
  }
  if (r.stats) {
    const ClassStatistics s = class_statistics(p);
    if (r.format == Format::json) {
      Json h = Json::object();
      for (const auto& [size, count] : s.histogram) h[std::to_string(size)] = count;
      print_json(out, Json{{"n", p.n}, {"relation", std::string(to_string(relation))},
                           {"classes", s.class_count}, {"total", s.total}, {"min", s.min_size},
                           {"max", s.max_size}, {"histogram", h}});
    } else {
      print_stats(out, s);
    }
    return ok;
  }
  if (r.format == Format::json) {
    out << partition_to_json(p);
    return ok;
  }
  for (const auto& c : p.classes) {
    out << to_string(c.representative) << ':';
    for (const auto& m : c.members) out << ' ' << to_string(m);
    out << '\n';
  }
  return ok;
}

int cmd_genfun(const Request& r, std::ostream& out) {
  const Word u = parse_word(r.u);
  const SeriesBounds defaults = default_bounds(u);
  const std::size_t max_len = r.length.value_or(defaults.max_length);
  const std::uint64_t max_norm = r.norm.value_or(defaults.max_norm);
  auto series_of = [&](const Word& w) {
    if (r.series == "F") return series_F(w, max_len, max_norm);
    if (r.series == "A") return series_A(w, max_len, max_norm);
    if (r.series == "M") return series_M(w, max_len, max_norm);
    throw UsageError("unknown series '" + r.series + "' (expected F, A or M)");
  };
  const TruncatedSeries mine = series_of(u);
  if (!r.compare.empty()) {
    const Word v = parse_word(r.compare);
    if (std::max(u.size(), v.size()) > max_len || std::max(u.norm(), v.norm()) > max_norm) {
      throw DomainError("truncation bounds must cover the weights of both words");
    }
    const auto diff = first_discrepancy(mine, series_of(v));
    if (r.format == Format::json) {
      Json j{{"u", to_string(u)}, {"v", to_string(v)}, {"series", r.series},
             {"max_len", max_len}, {"max_norm", max_norm}, {"discrepancy", nullptr}};
      if (diff) {
        j["discrepancy"] = Json{{"exponents", diff->exponents},
                                {"u", diff->left.str()}, {"v", diff->right.str()}};
      }
      j["result"] = diff ? "discrepancy" : "no discrepancy found";
      print_json(out, j);
    } else if (diff) {
      out << "discrepancy at";
      for (auto e : diff->exponents) out << ' ' << e;
      out << ": " << diff->left << " vs " << diff->right << '\n';
    } else {
      out << "no discrepancy found\n";
    }
    return ok;
  }
  if (r.format == Format::json) {
    Json terms = Json::array();
    for (const auto& [exponents, count] : mine.coefficients) {
      terms.push_back(Json{{"exponents", exponents}, {"count", count.str()}});
    }
    print_json(out, Json{{"u", to_string(u)}, {"series", r.series}, {"max_len", max_len},
                         {"max_norm", max_norm}, {"terms", terms}});
  } else {
    out << mine.dump();
  }
  return ok;
}

int cmd_count(const Request& r, std::ostream& out) {
  const Word u = parse_word(r.u);
  if (!r.length || !r.norm) throw UsageError("count needs --length and --norm");
  Json j{{"u", to_string(u)}, {"length", *r.length}, {"norm", *r.norm}};
  j["geq"] = count_geq(u, *r.length, *r.norm).str();
  Json dist = Json::object();
  for (const auto& [k, c] : em_count_distribution(u, *r.length, *r.norm)) {
    dist[std::to_string(k)] = c.str();
  }
  j["distribution"] = dist;
  if (!r.set.empty()) {
    const EmbeddingSet t = parse_embedding_set(r.set);
    j["set"] = to_string(t);
    j["U"] = count_U(u, *r.norm, *r.length, t).str();
    j["W"] = count_W(u, *r.norm, *r.length, t).str();
  }
  if (r.format == Format::json) {
    print_json(out, j);
    return ok;
  }
  out << "geq " << j["geq"].get<std::string>() << '\n';
  out << "distribution";
  for (const auto& [k, c] : dist.items()) out << ' ' << k << ':' << c.get<std::string>();
  out << '\n';
  if (j.contains("U")) {
    out << "U " << j["U"].get<std::string>() << '\n';
    out << "W " << j["W"].get<std::string>() << '\n';
  }
  return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wilf, cross and super-strong Wilf equivalence of words and permutations",
               "wilflab"};
  app.require_subcommand(1);
  app.fallthrough();
  Request r;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* info = app.add_subcommand("info", "Weight, letter statistics, reversal, inverse");
  info->add_option("word", r.u)->required();

  auto* embed = app.add_subcommand("embed", "Embedding set Em(u, w)");
  embed->add_option("u", r.u)->required();
  embed->add_option("w", r.v)->required();

  auto* cluster = app.add_subcommand("cluster", "Minimal cluster m(u, E)");
  cluster->add_option("u", r.u)->required();
  cluster->add_option("--set", r.set, "Embedding set, e.g. 1,2,4")->required();
  cluster->add_flag("--extended", r.extended, "Extended minimal cluster of a permutation");
  cluster->add_option("--length", r.length, "Prescribed length for --extended");
  cluster->add_flag("--tableau", r.tableau, "Render the row-shifted pre-cluster");

  auto* compose = app.add_subcommand("compose", "Compose two embedding sets");
  compose->add_option("e1", r.set)->required();
  compose->add_option("e2", r.set2)->required();

  auto* blocked = app.add_subcommand("blocked", "Blocked counts of letters in a pre-cluster");
  blocked->add_option("u", r.u)->required();
  blocked->add_option("--set", r.set)->required();
  blocked->add_option("--letter", r.letter);

  auto* plus = app.add_subcommand("plus", "Distance multisets i+(u)");
  plus->add_option("u", r.u)->required();
  plus->add_option("--letter", r.letter);

  auto* profile = app.add_subcommand("profile", "Consecutive-difference profile");
  profile->add_option("u", r.u)->required();

  auto* sstest = app.add_subcommand("sstest", "Super-strong Wilf equivalence test");
  sstest->add_option("u", r.u)->required();
  sstest->add_option("v", r.v)->required();

  auto* crosstest = app.add_subcommand("crosstest", "Cross equivalence test");
  crosstest->add_option("u", r.u)->required();
  crosstest->add_option("v", r.v)->required();

  auto* ssclass = app.add_subcommand("ssclass", "Super-strong Wilf class of u");
  ssclass->add_option("u", r.u)->required();

  auto* crossclass = app.add_subcommand("crossclass", "Cross class of u");
  crossclass->add_option("u", r.u)->required();

  auto* swap = app.add_subcommand("swap", "Exchange the letters n-1 and n");
  swap->add_option("u", r.u)->required();

  auto* mcrt = app.add_subcommand("mcrt", "Compare minimal clusters of u and v on E");
  mcrt->add_option("u", r.u)->required();
  mcrt->add_option("v", r.v)->required();
  mcrt->add_option("--set", r.set)->required();

  auto* witness = app.add_subcommand("witness", "Search for an embedding set refuting u ~ss v");
  witness->add_option("u", r.u)->required();
  witness->add_option("v", r.v)->required();
  witness->add_option("--max-shifts", r.max_shifts)->check(CLI::PositiveNumber);

  auto* tree = app.add_subcommand("tree", "Cross tree T^n(u)");
  tree->add_option("u", r.u)->required();

  auto* enumerate = app.add_subcommand("enumerate", "All classes of S_n");
  enumerate->add_option("n", r.number)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--relation", r.relation)->check(CLI::IsMember({"ss", "cross"}));
  enumerate->add_flag("--stats", r.stats, "Print class statistics only");
  enumerate->add_flag("--force", r.force, "Allow n above the size guard");
  enumerate->add_option("--output", r.output_dir, "Also write classes-n{n}-{relation}.json here");

  auto* genfun = app.add_subcommand("genfun", "Truncated generating-function coefficients");
  genfun->add_option("u", r.u)->required();
  genfun->add_option("--series", r.series)->check(CLI::IsMember({"F", "A", "M"}));
  genfun->add_option("--max-len", r.length);
  genfun->add_option("--max-norm", r.norm);
  genfun->add_option("--compare", r.compare, "Second word; report the first discrepancy");

  auto* count = app.add_subcommand("count", "Word counts above u at a fixed weight");
  count->add_option("u", r.u)->required();
  count->add_option("--length", r.length);
  count->add_option("--norm", r.norm);
  count->add_option("--set", r.set, "Position set T for the U and W counts");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  }

  r.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;
  try {
    if (r.format == Format::dot && !tree->parsed()) {
      throw UsageError("--format dot is only available for the tree command");
    }
    if (info->parsed()) return cmd_info(r, out);
    if (embed->parsed()) return cmd_embed(r, out);
    if (cluster->parsed()) return cmd_cluster(r, out);
    if (compose->parsed()) return cmd_compose(r, out);
    if (blocked->parsed()) return cmd_blocked(r, out);
    if (plus->parsed()) return cmd_plus(r, out);
    if (profile->parsed()) return cmd_profile(r, out);
    if (sstest->parsed()) return cmd_pair_test(r, out, true);
    if (crosstest->parsed()) return cmd_pair_test(r, out, false);
    if (ssclass->parsed()) return cmd_class(r, out, true);
    if (crossclass->parsed()) return cmd_class(r, out, false);
    if (swap->parsed()) return cmd_swap(r, out);
    if (mcrt->parsed()) return cmd_mcrt(r, out);
    if (witness->parsed()) return cmd_witness(r, out);
    if (tree->parsed()) return cmd_tree(r, out);
    if (enumerate->parsed()) return cmd_enumerate(r, out);
    if (genfun->parsed()) return cmd_genfun(r, out);
    if (count->parsed()) return cmd_count(r, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return domain_error;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return domain_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return domain_error;
  }
  err << "usage error: no command given\n";
  return usage_error;
}

} // namespace wilflab::cli
