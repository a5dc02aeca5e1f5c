#include "ulw/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "ulw/core.hpp"
#include "ulw/enumerate.hpp"
#include "ulw/jackson.hpp"
#include "ulw/lexcode.hpp"
#include "ulw/ulw.hpp"

#include "json.hpp"

namespace ulw::cli {

namespace {

constexpr const char* kUsage = R"(usage: ulw <command> [options]

commands:
  verify <word> [--mode definitional|order-defining|counting] [--degree n] [--json]
  orders <word> [--degree n] [--json]
  mt <word> [--degree n]
  canon <word> [--iso] [--degree n]
  jackson --degree n [--all] [--dot]
  lexcode build --script FILE [--degree n] [--check-hamiltonian] [--synthesize] [--dot]
  lexcode search --degree n [--max-word-len L] [--synthesize]
  enumerate --degree n [--classify] [--jsonl] [--threads k] [--progress]

words are digit strings for degree <= 9 ("212313") and comma-separated
integers for larger degrees ("1,2,10,3"); the degree is inferred from the
largest letter unless --degree is given. ULW_THREADS is the fallback for
--threads. exit codes: 0 ok, 1 domain/validation failure, 2 usage error.
)";

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;  // value flags
  std::set<std::string> flags;                 // boolean flags

  bool has(const std::string& name) const { return flags.count(name) > 0; }
  std::optional<std::string> value(const std::string& name) const {
    auto it = options.find(name);
    if (it == options.end()) return std::nullopt;
    return it->second;
  }
};

Args parse_args(const std::vector<std::string>& raw, std::size_t begin,
                const std::set<std::string>& value_flags, const std::set<std::string>& bool_flags) {
  Args out;
  for (std::size_t i = begin; i < raw.size(); ++i) {
    const std::string& arg = raw[i];
    if (arg.rfind("--", 0) == 0) {
      if (bool_flags.count(arg)) {
        out.flags.insert(arg);
      } else if (value_flags.count(arg)) {
        if (i + 1 >= raw.size()) throw usage_error("missing value for " + arg);
        out.options[arg] = raw[++i];
      } else {
        throw usage_error("unknown flag " + arg);
      }
    } else {
      out.positional.push_back(arg);
    }
  }
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw usage_error("bad " + what + " \"" + text + "\"");
  }
  if (used != text.size()) throw usage_error("bad " + what + " \"" + text + "\"");
  return value;
}

Word parse_word_arg(const Args& args, const std::string& text) {
  int degree = 0;
  if (auto d = args.value("--degree")) degree = parse_int(*d, "degree");
  return Word::parse(text, degree);
}

unsigned thread_count(const Args& args) {
  if (auto t = args.value("--threads")) return static_cast<unsigned>(parse_int(*t, "thread count"));
  if (const char* env = std::getenv("ULW_THREADS")) return static_cast<unsigned>(parse_int(env, "ULW_THREADS"));
  return 0;
}

int cmd_verify(const Args& args, std::ostream& out, std::ostream& err) {
  if (args.positional.size() != 1) throw usage_error("verify expects exactly one word");
  UlwMode mode = UlwMode::order_defining;
  if (auto m = args.value("--mode")) {
    if (*m == "definitional") mode = UlwMode::definitional;
    else if (*m == "order-defining") mode = UlwMode::order_defining;
    else if (*m == "counting") mode = UlwMode::counting;
    else throw usage_error("unknown mode \"" + *m + "\"");
  }
  Word w = parse_word_arg(args, args.positional[0]);
  UlwReport report = is_ulw(w, mode);
  if (args.has("--json")) {
    out << report.to_json().dump() << '\n';
  } else if (report.is_ulw) {
    out << "ULW: yes (degree " << report.degree << ")\n";
  } else {
    out << "ULW: no (degree " << report.degree << ")\n";
    const UlwWitness& witness = *report.witness;
    out << "  reason: " << witness.reason << '\n';
    if (witness.conjugate)
      out << "  witness: conjugate " << witness.conjugate_index << " = "
          << witness.conjugate->str() << '\n';
    if (witness.factor) out << "  witness: factor " << witness.factor->str() << " occurs "
                            << witness.count << " times, expected " << witness.expected << '\n';
    if (witness.failing_conjugates.size() > 1) {
      out << "  failing conjugates:\n";
      for (std::size_t i = 0; i < witness.failing_conjugates.size(); ++i)
        out << "    " << witness.failing_conjugates[i] << ": "
            << witness.failing_conjugate_words[i].str() << '\n';
    }
  }
  (void)err;
  return report.is_ulw ? 0 : 1;
}

int cmd_orders(const Args& args, std::ostream& out) {
  if (args.positional.size() != 1) throw usage_error("orders expects exactly one word");
  Word w = parse_word_arg(args, args.positional[0]);
  std::vector<TotalOrder> orders = lyndon_orders(w);
  if (args.has("--json")) {
    nlohmann::json j = nlohmann::json::array();
    for (const TotalOrder& o : orders) j.push_back(o.str());
    out << j.dump() << '\n';
  } else {
    for (const TotalOrder& o : orders) out << o.str() << '\n';
  }
  return 0;
}

int cmd_mt(const Args& args, std::ostream& out) {
  if (args.positional.size() != 1) throw usage_error("mt expects exactly one word");
  Word w = parse_word_arg(args, args.positional[0]);
  for (const Word& x : mt(w)) out << x.str() << '\n';
  return 0;
}

int cmd_canon(const Args& args, std::ostream& out) {
  if (args.positional.size() != 1) throw usage_error("canon expects exactly one word");
  Word w = parse_word_arg(args, args.positional[0]);
  out << canonicalize(w, args.has("--iso")).canonical.str() << '\n';
  return 0;
}

int cmd_jackson(const Args& args, std::ostream& out) {
  auto d = args.value("--degree");
  if (!d) throw usage_error("jackson requires --degree");
  int degree = parse_int(*d, "degree");
  JacksonGraph graph = build_jackson_graph(degree);
  if (args.has("--dot")) {
    out << graph.dot();
    return 0;
  }
  if (args.has("--all")) {
    std::set<Word> canonical;
    for (const EdgeCycle& cycle : enumerate_eulerian_cycles(graph))
      canonical.insert(canonicalize(word_from_cycle(cycle)).canonical);
    for (const Word& w : canonical) out << w.str() << '\n';
    return 0;
  }
  out << word_from_cycle(find_eulerian_cycle(graph)).str() << '\n';
  return 0;
}

int cmd_lexcode(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  if (raw.size() < 2) throw usage_error("lexcode expects a subcommand: build or search");
  const std::string& sub = raw[1];
  if (sub == "build") {
    Args args = parse_args(raw, 2, {"--script", "--degree", "--threads"},
                           {"--check-hamiltonian", "--synthesize", "--dot"});
    auto script_path = args.value("--script");
    if (!script_path) throw usage_error("lexcode build requires --script FILE");
    std::ifstream in(*script_path);
    if (!in) throw std::domain_error("cannot open script file \"" + *script_path + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    int degree = 0;
    if (auto d = args.value("--degree")) {
      degree = parse_int(*d, "degree");
    } else {
      // infer from the largest letter mentioned anywhere in the script
      for (char c : text)
        if (c >= '1' && c <= '9') degree = std::max(degree, c - '0');
      if (degree == 0) throw std::domain_error("cannot infer degree from script; use --degree");
    }
    RefinementScript script = RefinementScript::parse_text(text, degree);
    LexCode code = refine_lex_code(degree, script);
    if (args.has("--dot")) {
      out << sx_digraph(code).dot();
      return 0;
    }
    for (const Word& w : code.words) out << w.str() << '\n';
    if (args.has("--check-hamiltonian") || args.has("--synthesize")) {
      auto cycle = find_hamiltonian_cycle(sx_digraph(code));
      if (args.has("--check-hamiltonian"))
        out << "hamiltonian: " << (cycle ? "yes" : "no") << '\n';
      if (args.has("--synthesize")) {
        if (!cycle) throw std::domain_error("lex-code is not Hamiltonian; nothing to synthesize");
        out << "ulw: " << synthesize_ulw(code, *cycle).str() << '\n';
      }
    }
    (void)err;
    return 0;
  }
  if (sub == "search") {
    // --threads is accepted for interface stability; the search is
    // sequential at the guarded degrees
    Args args = parse_args(raw, 2, {"--degree", "--max-word-len", "--threads"},
                           {"--synthesize", "--progress"});
    auto d = args.value("--degree");
    if (!d) throw usage_error("lexcode search requires --degree");
    int degree = parse_int(*d, "degree");
    std::size_t max_len = factorial(degree);
    if (auto m = args.value("--max-word-len"))
      max_len = static_cast<std::size_t>(parse_int(*m, "max word length"));
    if (args.has("--progress")) err << "progress: searching lex-codes of degree " << degree << '\n';
    std::vector<LexCode> codes = search_hamiltonian_lex_codes(degree, max_len);
    if (args.has("--progress")) err << "progress: " << codes.size() << " Hamiltonian codes found\n";
    for (const LexCode& code : codes) {
      out << "code:";
      for (const Word& w : code.words) out << ' ' << w.str();
      out << '\n';
    }
    out << "codes=" << codes.size() << '\n';
    if (args.has("--synthesize")) {
      std::set<Word> canonical;
      for (const LexCode& code : codes)
        for (const HamiltonianCycle& cycle : all_hamiltonian_cycles(sx_digraph(code)))
          canonical.insert(canonicalize(synthesize_ulw(code, cycle)).canonical);
      out << "synthesized_labeled=" << canonical.size() << '\n';
    }
    return 0;
  }
  throw usage_error("unknown lexcode subcommand \"" + sub + "\"");
}

int cmd_enumerate(const Args& args, std::ostream& out, std::ostream& err) {
  auto d = args.value("--degree");
  if (!d) throw usage_error("enumerate requires --degree");
  int degree = parse_int(*d, "degree");
  EnumerateOptions options;
  options.threads = thread_count(args);
  if (args.has("--progress")) options.progress = &err;
  UlwCensus census = enumerate_ulws(degree, options);
  if (args.has("--jsonl")) {
    census_jsonl(census, out);
    return 0;
  }
  for (const Word& w : census.canonical_words) out << w.str() << '\n';
  if (args.has("--classify")) {
    std::vector<IsoClass> classes = classify_ulws(census);
    for (std::size_t id = 0; id < classes.size(); ++id) {
      out << "class " << id << ": rep=" << classes[id].representative.str()
          << " jackson=" << (classes[id].jackson ? "yes" : "no")
          << " size=" << classes[id].members.size() << '\n';
    }
  }
  out << "labeled=" << census.labeled_count << " iso=" << census.iso_class_count
      << " jackson=" << census.jackson_count << " non_jackson=" << census.non_jackson_count
      << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return 2;
  }
  const std::string& command = args[0];
  try {
    if (command == "verify") {
      return cmd_verify(parse_args(args, 1, {"--mode", "--degree"}, {"--json"}), out, err);
    } else if (command == "orders") {
      return cmd_orders(parse_args(args, 1, {"--degree"}, {"--json"}), out);
    } else if (command == "mt") {
      return cmd_mt(parse_args(args, 1, {"--degree"}, {}), out);
    } else if (command == "canon") {
      return cmd_canon(parse_args(args, 1, {"--degree"}, {"--iso"}), out);
    } else if (command == "jackson") {
      return cmd_jackson(parse_args(args, 1, {"--degree", "--threads"}, {"--all", "--dot", "--progress"}), out);
    } else if (command == "lexcode") {
      return cmd_lexcode(args, out, err);
    } else if (command == "enumerate") {
      return cmd_enumerate(
          parse_args(args, 1, {"--degree", "--threads"}, {"--classify", "--jsonl", "--progress"}),
          out, err);
    } else if (command == "help" || command == "--help" || command == "-h") {
      out << kUsage;
      return 0;
    }
    err << "unknown command \"" << command << "\"\n" << kUsage;
    return 2;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n' << kUsage;
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ulw::cli
