#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opgb/buchberger.hpp"
#include "opgb/text.hpp"

using json = nlohmann::ordered_json;
using namespace opgb;

namespace {

struct CommonFlags {
  std::string ordering;  // empty: use the file's ordering (or the default)
  std::optional<int> max_arity;
  std::optional<int> max_rounds;
  int threads = 1;
  bool as_json = false;
  std::string output_path;  // empty: stdout
};

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.as_json, "Emit a JSON document instead of text");
  cmd->add_option("--output", flags.output_path, "Write the report to a file instead of stdout");
}

void add_groebner_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--ordering", flags.ordering,
                  "Monomial ordering (overrides the presentation file)");
  cmd->add_option("--max-arity", flags.max_arity,
                  "Skip S-polynomials whose common multiple exceeds this arity")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-rounds", flags.max_rounds, "Stop after this many completion rounds")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--threads", flags.threads, "Worker threads for each completion round")
      ->check(CLI::PositiveNumber);
  add_output_flags(cmd, flags);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open output file: " + output_path);
  out << text;
}

PresentationFile load(const std::string& path, const std::string& ordering_override) {
  PresentationFile file = parse_presentation_file(path);
  for (const auto& w : file.warnings) std::cerr << "warning: " << w << "\n";
  if (!ordering_override.empty()) {
    OrderingSpec spec = ordering_from_name(ordering_override);
    file.presentation.spec = spec;
    for (auto& f : file.presentation.relations) {
      std::vector<std::pair<TreeMonomial, Rational>> terms;
      terms.reserve(f.terms().size());
      for (const auto& t : f.terms()) terms.emplace_back(t.monomial, t.coefficient);
      f = OperadPolynomial::from_terms(spec, std::move(terms));
    }
  }
  return file;
}

struct Prepared {
  Presentation presentation;
  size_t input_relations = 0;
  bool symmetrized = false;
};

// Presentations with action lines describe a symmetric operad; close the
// relations under the symmetric-group action to get the shuffle presentation.
Prepared prepare(PresentationFile file) {
  Prepared out;
  out.input_relations = file.presentation.relations.size();
  if (!file.actions.empty()) {
    file.presentation.relations = orbit_closure(file.presentation.relations, file.actions,
                                                file.presentation.generators);
    out.symmetrized = true;
  }
  out.presentation = std::move(file.presentation);
  return out;
}

GroebnerResult run_buchberger(const Presentation& p, const CommonFlags& flags) {
  BuchbergerOptions options;
  options.max_arity = flags.max_arity;
  options.max_rounds = flags.max_rounds;
  options.threads = flags.threads;
  return buchberger(p, options);
}

json basis_strings(const GroebnerResult& result, const Alphabet& alphabet) {
  json arr = json::array();
  for (const auto& g : result.basis) arr.push_back(format_element(g, alphabet));
  return arr;
}

void describe_status(std::ostream& s, const GroebnerResult& result) {
  if (result.complete)
    s << "status: complete\n";
  else if (result.rounds_exhausted)
    s << "status: incomplete (round budget exhausted)\n";
  else
    s << "status: complete up to arity " << *result.truncation_arity << " (truncated)\n";
}

int cmd_groebner(const std::string& path, const CommonFlags& flags) {
  Prepared prep = prepare(load(path, flags.ordering));
  const Alphabet& alphabet = prep.presentation.generators;
  GroebnerResult result = run_buchberger(prep.presentation, flags);

  std::string text;
  if (flags.as_json) {
    json j;
    j["ordering"] = ordering_name(prep.presentation.spec);
    j["relations"] = prep.input_relations;
    if (prep.symmetrized) j["symmetrized_relations"] = prep.presentation.relations.size();
    j["complete"] = result.complete;
    j["truncation_arity"] =
        result.truncation_arity ? json(*result.truncation_arity) : json(nullptr);
    j["rounds_exhausted"] = result.rounds_exhausted;
    j["rounds"] = result.rounds;
    j["stats"] = {{"s_polynomials_formed", result.stats.s_polynomials_formed},
                  {"reductions_to_zero", result.stats.reductions_to_zero}};
    j["quadratic"] = result.quadratic;
    j["pbw"] = result.complete ? json(result.quadratic) : json(nullptr);
    j["basis"] = basis_strings(result, alphabet);
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "ordering: " << ordering_name(prep.presentation.spec) << "\n";
    s << "relations: " << prep.input_relations;
    if (prep.symmetrized) s << " (" << prep.presentation.relations.size() << " after symmetrization)";
    s << "\n";
    describe_status(s, result);
    s << "rounds: " << result.rounds << "\n";
    s << "s-polynomials formed: " << result.stats.s_polynomials_formed << "\n";
    s << "reductions to zero: " << result.stats.reductions_to_zero << "\n";
    s << "quadratic: " << (result.quadratic ? "yes" : "no") << "\n";
    if (result.complete && result.quadratic)
      s << "pbw: yes (quadratic groebner basis: the operad is Koszul)\n";
    else if (result.complete)
      s << "pbw: no (the reduced groebner basis for this ordering is not quadratic)\n";
    else
      s << "pbw: undetermined (basis incomplete)\n";
    s << "groebner basis (" << result.basis.size()
      << (result.basis.size() == 1 ? " element" : " elements") << "):\n";
    for (const auto& g : result.basis) s << "  " << format_element(g, alphabet) << "\n";
    text = s.str();
  }
  emit(text, flags.output_path);
  return 0;
}

int cmd_dims(const std::string& path, const CommonFlags& flags) {
  if (!flags.max_arity) throw std::runtime_error("dims requires --max-arity");
  Prepared prep = prepare(load(path, flags.ordering));
  const Alphabet& alphabet = prep.presentation.generators;
  GroebnerResult result = run_buchberger(prep.presentation, flags);
  bool exact = !result.rounds_exhausted;
  if (!exact)
    std::cerr << "warning: round budget exhausted; dimensions are upper bounds\n";

  std::string text;
  if (flags.as_json) {
    json j;
    j["ordering"] = ordering_name(prep.presentation.spec);
    j["exact"] = exact;
    json dims = json::array();
    for (int n = 1; n <= *flags.max_arity; ++n)
      dims.push_back({{"arity", n}, {"dim", dimension(result, alphabet, n)}});
    j["dims"] = dims;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    for (int n = 1; n <= *flags.max_arity; ++n)
      s << "arity " << n << ": " << dimension(result, alphabet, n) << "\n";
    text = s.str();
  }
  emit(text, flags.output_path);
  return 0;
}

int cmd_basis(const std::string& path, int arity, CommonFlags flags) {
  Prepared prep = prepare(load(path, flags.ordering));
  const Alphabet& alphabet = prep.presentation.generators;
  flags.max_arity = std::max(arity, flags.max_arity.value_or(arity));
  GroebnerResult result = run_buchberger(prep.presentation, flags);
  if (result.rounds_exhausted)
    std::cerr << "warning: round budget exhausted; the monomial list is an upper bound\n";
  std::vector<TreeMonomial> monomials = normal_monomials(result, alphabet, arity);

  std::string text;
  if (flags.as_json) {
    json j;
    j["ordering"] = ordering_name(prep.presentation.spec);
    j["arity"] = arity;
    j["count"] = monomials.size();
    json arr = json::array();
    for (const auto& m : monomials) arr.push_back(format_tree(m, alphabet));
    j["monomials"] = arr;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    for (const auto& m : monomials) s << format_tree(m, alphabet) << "\n";
    text = s.str();
  }
  emit(text, flags.output_path);
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& element, CommonFlags flags) {
  Prepared prep = prepare(load(path, flags.ordering));
  const Alphabet& alphabet = prep.presentation.generators;
  OperadPolynomial f = parse_element(element, alphabet, prep.presentation.spec);
  std::string formatted;
  bool exact = true;
  if (f.is_zero()) {
    formatted = "0";
  } else {
    if (!flags.max_arity) flags.max_arity = f.arity();
    GroebnerResult result = run_buchberger(prep.presentation, flags);
    exact = result.complete ||
            (!result.rounds_exhausted && result.truncation_arity &&
             *result.truncation_arity >= f.arity());
    if (!exact)
      std::cerr << "warning: basis incomplete at this arity; the result may not be fully "
                   "reduced\n";
    formatted = format_element(normal_form(f, result.basis), alphabet);
  }

  std::string text;
  if (flags.as_json) {
    json j;
    j["input"] = element;
    j["normal_form"] = formatted;
    j["exact"] = exact;
    text = j.dump(2) + "\n";
  } else {
    text = formatted + "\n";
  }
  emit(text, flags.output_path);
  return 0;
}

int cmd_divide(const std::string& path, const std::string& dividend, const std::string& divisor,
               const CommonFlags& flags) {
  PresentationFile file = load(path, "");
  const Alphabet& alphabet = file.presentation.generators;
  TreeMonomial alpha = parse_tree(dividend, alphabet);
  TreeMonomial beta = parse_tree(divisor, alphabet);
  std::vector<Embedding> occurrences = all_embeddings(alpha, beta);

  std::string text;
  if (flags.as_json) {
    json j;
    j["dividend"] = format_tree(alpha, alphabet);
    j["divisor"] = format_tree(beta, alphabet);
    json arr = json::array();
    for (const auto& e : occurrences)
      arr.push_back({{"path", format_path(e.root_path)},
                     {"context", format_hole_tree(e.tree, alphabet)}});
    j["occurrences"] = arr;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "occurrences: " << occurrences.size() << "\n";
    for (const auto& e : occurrences)
      s << "at " << format_path(e.root_path) << ": " << format_hole_tree(e.tree, alphabet)
        << "\n";
    text = s.str();
  }
  emit(text, flags.output_path);
  return 0;
}

int cmd_scm(const std::string& path, const std::string& first, const std::string& second,
            const CommonFlags& flags) {
  PresentationFile file = load(path, "");
  const Alphabet& alphabet = file.presentation.generators;
  TreeMonomial alpha = parse_tree(first, alphabet);
  TreeMonomial beta = parse_tree(second, alphabet);
  std::vector<SmallCommonMultiple> records = small_common_multiples(alpha, beta);

  std::string text;
  if (flags.as_json) {
    json j;
    j["first"] = format_tree(alpha, alphabet);
    j["second"] = format_tree(beta, alphabet);
    json arr = json::array();
    for (const auto& r : records)
      arr.push_back({{"multiple", format_tree(r.multiple, alphabet)},
                     {"first_at", format_path(r.emb_a.root_path)},
                     {"second_at", format_path(r.emb_b.root_path)}});
    j["records"] = arr;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "records: " << records.size() << "\n";
    for (const auto& r : records)
      s << format_tree(r.multiple, alphabet) << " (first at " << format_path(r.emb_a.root_path)
        << ", second at " << format_path(r.emb_b.root_path) << ")\n";
    text = s.str();
  }
  emit(text, flags.output_path);
  return 0;
}

int cmd_symmetrize(const std::string& path, const CommonFlags& flags) {
  PresentationFile file = load(path, flags.ordering);
  if (file.actions.empty())
    throw std::runtime_error("the presentation declares no action lines to symmetrize with");
  const Alphabet& alphabet = file.presentation.generators;
  std::vector<OperadPolynomial> closure =
      orbit_closure(file.presentation.relations, file.actions, alphabet);

  std::string text;
  if (flags.as_json) {
    json j;
    json gens = json::array();
    for (const auto& g : alphabet) gens.push_back({{"name", g.name}, {"arity", g.arity}});
    j["generators"] = gens;
    j["ordering"] = ordering_name(file.presentation.spec);
    json arr = json::array();
    for (const auto& f : closure) arr.push_back(format_element(f, alphabet));
    j["relations"] = arr;
    text = j.dump(2) + "\n";
  } else {
    PresentationFile shuffled;
    shuffled.presentation.generators = alphabet;
    shuffled.presentation.spec = file.presentation.spec;
    shuffled.presentation.relations = std::move(closure);
    text = format_presentation(shuffled);
  }
  emit(text, flags.output_path);
  return 0;
}

int cmd_orderings(const CommonFlags& flags) {
  std::string text;
  if (flags.as_json) {
    json arr = json::array();
    for (const auto& [name, spec] : named_orderings()) arr.push_back(name);
    text = arr.dump(2) + "\n";
  } else {
    std::ostringstream s;
    for (const auto& [name, spec] : named_orderings()) s << name << "\n";
    text = s.str();
  }
  emit(text, flags.output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases for finitely presented shuffle operads"};
  app.require_subcommand(1);

  std::string file, element, first, second;
  int arity = 0;

  CommonFlags groebner_flags;
  auto* groebner_cmd =
      app.add_subcommand("groebner", "Run Buchberger completion on a presentation");
  groebner_cmd->add_option("file", file, "Presentation file")->required();
  add_groebner_flags(groebner_cmd, groebner_flags);

  CommonFlags dims_flags;
  auto* dims_cmd = app.add_subcommand("dims", "Dimensions of the quotient by arity");
  dims_cmd->add_option("file", file, "Presentation file")->required();
  add_groebner_flags(dims_cmd, dims_flags);

  CommonFlags basis_flags;
  auto* basis_cmd = app.add_subcommand("basis", "Normal monomials spanning one arity component");
  basis_cmd->add_option("file", file, "Presentation file")->required();
  basis_cmd->add_option("--arity", arity, "Arity component to list")
      ->required()
      ->check(CLI::PositiveNumber);
  add_groebner_flags(basis_cmd, basis_flags);

  CommonFlags reduce_flags;
  auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of an element");
  reduce_cmd->add_option("file", file, "Presentation file")->required();
  reduce_cmd->add_option("element", element, "Element to reduce")->required();
  add_groebner_flags(reduce_cmd, reduce_flags);

  CommonFlags divide_flags;
  auto* divide_cmd = app.add_subcommand("divide", "Occurrences of one tree monomial in another");
  divide_cmd->add_option("file", file, "Presentation file naming the generators")->required();
  divide_cmd->add_option("dividend", first, "Ambient tree monomial")->required();
  divide_cmd->add_option("divisor", second, "Tree monomial to locate")->required();
  add_output_flags(divide_cmd, divide_flags);

  CommonFlags scm_flags;
  auto* scm_cmd = app.add_subcommand("scm", "Small common multiples of two tree monomials");
  scm_cmd->add_option("file", file, "Presentation file naming the generators")->required();
  scm_cmd->add_option("first", first, "First tree monomial")->required();
  scm_cmd->add_option("second", second, "Second tree monomial")->required();
  add_output_flags(scm_cmd, scm_flags);

  CommonFlags symmetrize_flags;
  auto* symmetrize_cmd =
      app.add_subcommand("symmetrize", "Shuffle relations generated by the symmetric action");
  symmetrize_cmd->add_option("file", file, "Presentation file")->required();
  symmetrize_cmd->add_option("--ordering", symmetrize_flags.ordering,
                             "Monomial ordering (overrides the presentation file)");
  add_output_flags(symmetrize_cmd, symmetrize_flags);

  CommonFlags orderings_flags;
  auto* orderings_cmd = app.add_subcommand("orderings", "List the supported monomial orderings");
  add_output_flags(orderings_cmd, orderings_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (groebner_cmd->parsed()) return cmd_groebner(file, groebner_flags);
    if (dims_cmd->parsed()) return cmd_dims(file, dims_flags);
    if (basis_cmd->parsed()) return cmd_basis(file, arity, basis_flags);
    if (reduce_cmd->parsed()) return cmd_reduce(file, element, reduce_flags);
    if (divide_cmd->parsed()) return cmd_divide(file, first, second, divide_flags);
    if (scm_cmd->parsed()) return cmd_scm(file, first, second, scm_flags);
    if (symmetrize_cmd->parsed()) return cmd_symmetrize(file, symmetrize_flags);
    if (orderings_cmd->parsed()) return cmd_orderings(orderings_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
