#include "mbasis/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "mbasis/algebra.hpp"
#include "mbasis/certifier.hpp"
#include "mbasis/errors.hpp"
#include "mbasis/ideals.hpp"
#include "mbasis/io.hpp"

namespace mbasis::cli {

namespace {

enum class Command { validate, info, ideals, search, certify, verify_basis, example };

struct RunConfig {
  Command command = Command::validate;
  std::string input_path;
  bool json_output = false;
  bool find_all = false;
  std::uint64_t element_limit = kDefaultElementLimit;
  unsigned threads = 1;
  bool allow_nonassociative = false;
  std::string semigroup_field;
  std::vector<std::string> params;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FieldSpec parse_field_token(const std::string& token) {
  if (token == "q" || token == "Q") return FieldSpec::rational();
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(token, &used);
    if (used != token.size()) throw InvalidInput("");
  } catch (const std::exception&) {
    throw InvalidInput("field must be 'q' or a prime, got '" + token + "'");
  }
  return FieldSpec::prime(p);
}

std::size_t parse_count(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(token, &used);
    if (used == token.size() && token.front() != '-') return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw InvalidInput(std::string(what) + " must be a non-negative integer, got '" + token + "'");
}

std::string format_indices(std::initializer_list<std::size_t> idx, std::size_t offset) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ',';
    s += std::to_string(i + offset);
    first = false;
  }
  return s + ")";
}

class Runner {
public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  int dispatch() {
    switch (cfg_.command) {
    case Command::validate: return validate();
    case Command::info: return info();
    case Command::ideals: return ideals();
    case Command::search: return search();
    case Command::certify: return certify_cmd();
    case Command::verify_basis: return verify_basis();
    case Command::example: return example();
    }
    return kInternalError;
  }

private:
  Json load_document() const { return parse_json(read_file(cfg_.input_path)); }

  StructureAlgebra load_algebra(bool check_assoc = true) const {
    const Json doc = load_document();
    if (looks_like_semigroup(doc)) {
      if (cfg_.semigroup_field.empty()) throw InvalidInput("semigroup files need --field to build an algebra");
      return semigroup_algebra(semigroup_from_json(doc), parse_field_token(cfg_.semigroup_field));
    }
    StructureAlgebra a = algebra_from_json(doc);
    if (check_assoc && !cfg_.allow_nonassociative) {
      if (auto bad = check_associativity(a)) {
        throw InvalidInput("algebra is not associative at (i,j,l) = " + format_indices({bad->i, bad->j, bad->l}, 1) +
                           "; rerun with --allow-nonassociative to proceed");
      }
    }
    return a;
  }

  void emit(const Json& j) const { out_ << canonical_dump(j) << '\n'; }

  int validate() {
    const Json doc = load_document();
    if (looks_like_semigroup(doc)) {
      const SemigroupTable s = semigroup_from_json(doc);
      const auto bad = validate_semigroup(s);
      if (cfg_.json_output) {
        Json j{{"kind", "semigroup"}, {"ok", !bad}, {"violation", nullptr}};
        if (bad) j["violation"] = Json{{"indices", {bad->s, bad->t, bad->u}}, {"lhs", bad->lhs}, {"rhs", bad->rhs}};
        emit(j);
      } else if (bad) {
        out_ << "associativity violated at (s,t,u) = " << format_indices({bad->s, bad->t, bad->u}, 0)
             << ": (st)u = " << s.elements()[bad->lhs] << " but s(tu) = " << s.elements()[bad->rhs] << '\n';
      } else {
        out_ << "ok: semigroup of order " << s.order() << '\n';
      }
      return bad ? kNegative : kOk;
    }
    const StructureAlgebra a = algebra_from_json(doc);
    const auto bad = check_associativity(a);
    if (cfg_.json_output) {
      Json j{{"kind", "algebra"}, {"ok", !bad}, {"violation", nullptr}};
      if (bad) {
        j["violation"] = Json{{"indices", {bad->i, bad->j, bad->l}},
                              {"lhs", vector_to_json(bad->lhs)},
                              {"rhs", vector_to_json(bad->rhs)}};
      }
      emit(j);
    } else if (bad) {
      out_ << "associativity violated at (i,j,l) = " << format_indices({bad->i, bad->j, bad->l}, 1)
           << ": (e_i e_j) e_l = " << to_string(bad->lhs) << " but e_i (e_j e_l) = " << to_string(bad->rhs) << '\n';
    } else {
      out_ << "ok: associative algebra of dimension " << a.dim() << " over " << a.field().name() << '\n';
    }
    return bad ? kNegative : kOk;
  }

  int info() {
    const StructureAlgebra a = load_algebra();
    const auto identity = find_identity(a);
    const Subspace square = algebra_square(a);
    const SimplicityVerdict simple = is_simple(a, cfg_.element_limit);
    if (cfg_.json_output) {
      emit(Json{{"dim", a.dim()},
                {"field", field_to_json(a.field())},
                {"identity", identity ? vector_to_json(*identity) : Json(nullptr)},
                {"square_dim", square.dim()},
                {"simplicity", to_string(simple.kind)},
                {"witness", simple.witness ? subspace_to_json(*simple.witness) : Json(nullptr)}});
      return kOk;
    }
    out_ << "dim " << a.dim() << ", " << (identity ? "unital" : "non-unital") << ", ";
    if (square.dim() == a.dim()) {
      out_ << "A^2=A";
    } else {
      out_ << "dim A^2=" << square.dim();
    }
    out_ << ", ";
    switch (simple.kind) {
    case SimplicityVerdict::Kind::simple: out_ << "simple"; break;
    case SimplicityVerdict::Kind::not_simple: out_ << "not simple"; break;
    case SimplicityVerdict::Kind::unknown:
      out_ << (a.field().is_finite() ? "simplicity unknown (limit exceeded)" : "simplicity unknown (rational field)");
      break;
    }
    out_ << '\n';
    if (identity) out_ << "identity: " << to_string(*identity) << '\n';
    if (simple.generator) out_ << "proper ideal generated by " << to_string(*simple.generator) << '\n';
    return kOk;
  }

  void print_report(const Codim1Report& r) const {
    out_ << r.ideals.size() << " codimension-one ideal(s), " << (r.complete ? "complete" : "incomplete") << " ("
         << to_string(r.method);
    if (r.method == Codim1Method::finite_enumeration) out_ << ", " << r.hyperplanes_scanned << " hyperplanes scanned";
    out_ << ")\n";
    for (const auto& c : r.ideals) {
      out_ << "  [" << to_string(c.origin) << "]";
      for (std::size_t i = 0; i < c.subspace.dim(); ++i) out_ << ' ' << to_string(c.subspace.basis().row(i));
      out_ << '\n';
    }
  }

  int ideals() {
    const StructureAlgebra a = load_algebra();
    const Codim1Report r = enumerate_codim1_ideals(a, cfg_.element_limit);
    if (cfg_.json_output) {
      emit(codim1_report_to_json(r));
    } else {
      print_report(r);
    }
    return r.ideals.empty() ? kNegative : kOk;
  }

  int search() {
    const StructureAlgebra a = load_algebra();
    SearchOptions opts;
    opts.find_all = cfg_.find_all;
    opts.element_limit = cfg_.element_limit;
    opts.threads = cfg_.threads;
    const auto found = search_multiplicative_basis(a, opts);
    if (cfg_.json_output) {
      Json bases = Json::array();
      for (const auto& h : found) bases.push_back(basis_to_json(h));
      emit(Json{{"algebra_digest", algebra_digest(a)},
                {"find_all", cfg_.find_all},
                {"count", found.size()},
                {"bases", std::move(bases)}});
    } else {
      if (found.empty()) out_ << "no basis closed under multiplication\n";
      for (const auto& h : found) {
        out_ << "closed basis:";
        for (const auto& v : h.vectors()) out_ << ' ' << to_string(v);
        out_ << '\n';
      }
    }
    return found.empty() ? kNegative : kOk;
  }

  int report_certificate(const TheoremCertificate& cert) const {
    if (cfg_.json_output) {
      emit(certificate_to_json(cert));
    } else {
      out_ << "verdict: " << to_string(cert.verdict) << '\n';
      out_ << "algebra digest: " << cert.algebra_digest << '\n';
      if (cert.basis) {
        out_ << "basis H:";
        for (const auto& v : cert.basis->vectors()) out_ << ' ' << to_string(v);
        out_ << '\n';
      }
      if (cert.functional) out_ << "f = " << to_string(*cert.functional) << '\n';
      if (cert.kernel) {
        out_ << "ker f (codim " << cert.kernel->codim << "):";
        for (std::size_t i = 0; i < cert.kernel->subspace.dim(); ++i) {
          out_ << ' ' << to_string(cert.kernel->subspace.basis().row(i));
        }
        out_ << '\n';
      }
      print_report(cert.codim1_report);
    }
    if (cert.verdict == Verdict::inconsistent) {
      err_ << "error: found a closed basis but the codimension-one report contradicts it\n";
      return kInternalError;
    }
    return kOk;
  }

  CertifyOptions certify_options() const {
    CertifyOptions opts;
    opts.search.element_limit = cfg_.element_limit;
    opts.search.threads = cfg_.threads;
    opts.allow_nonassociative = cfg_.allow_nonassociative;
    return opts;
  }

  int certify_cmd() {
    const StructureAlgebra a = load_algebra();
    return report_certificate(certify(a, certify_options()));
  }

  int verify_basis() {
    const StructureAlgebra a = load_algebra();
    std::vector<Vector> vectors;
    for (const auto& token : cfg_.params) {
      Vector v;
      std::stringstream ss(token);
      std::string part;
      while (std::getline(ss, part, ',')) v.push_back(a.field().parse(part));
      vectors.push_back(std::move(v));
    }
    if (vectors.size() != a.dim()) {
      err_ << "error: expected " << a.dim() << " basis vectors, got " << vectors.size() << '\n';
      return kInvalidInput;
    }
    const BasisCandidate h = BasisCandidate::make(a.field(), a.dim(), std::move(vectors));
    if (!is_basis(a, h)) {
      err_ << "error: the vectors are linearly dependent\n";
      return kInvalidInput;
    }
    if (auto bad = is_closed_under_multiplication(a, h)) {
      if (cfg_.json_output) {
        emit(Json{{"closed", false},
                  {"violation", Json{{"left", vector_to_json(bad->left)},
                                     {"right", vector_to_json(bad->right)},
                                     {"product", vector_to_json(bad->product)}}}});
      } else {
        out_ << "not closed: " << to_string(bad->left) << " * " << to_string(bad->right) << " = "
             << to_string(bad->product) << " is not in H\n";
      }
      return kNegative;
    }
    CertifyOptions opts = certify_options();
    opts.supplied_basis = h;
    return report_certificate(certify(a, opts));
  }

  int example() {
    const auto& p = cfg_.params;
    auto arg = [&](std::size_t i) -> const std::string& {
      if (i >= p.size()) throw InvalidInput("example '" + cfg_.input_path + "' needs more parameters");
      return p[i];
    };
    auto expect_params = [&](std::size_t lo, std::size_t hi) {
      if (p.size() < lo || p.size() > hi) {
        throw InvalidInput("wrong number of parameters for example '" + cfg_.input_path + "'");
      }
    };
    const std::string& name = cfg_.input_path;
    std::optional<StructureAlgebra> a;
    if (name == "matrix") {
      expect_params(2, 2);
      a = matrix_algebra(parse_count(arg(0), "n"), parse_field_token(arg(1)));
    } else if (name == "product") {
      expect_params(2, 2);
      a = product_algebra(parse_count(arg(0), "n"), parse_field_token(arg(1)));
    } else if (name == "quaternion") {
      expect_params(1, 1);
      a = quaternion_algebra(parse_field_token(arg(0)));
    } else if (name == "gf") {
      expect_params(2, 2);
      const FieldSpec f = parse_field_token(arg(0));
      if (!f.is_finite()) throw InvalidInput("gf needs a prime");
      const std::size_t m = parse_count(arg(1), "m");
      const auto modulus = default_modulus(f.modulus(), m);
      a = finite_field_extension(f.modulus(), m, modulus);
    } else if (name == "semigroup-leftzero") {
      expect_params(1, 2);
      const FieldSpec f = p.size() > 1 ? parse_field_token(arg(1)) : FieldSpec::prime(2);
      a = semigroup_algebra(left_zero_semigroup(parse_count(arg(0), "n")), f);
    } else if (name == "group-cyclic") {
      expect_params(2, 2);
      a = semigroup_algebra(cyclic_group(parse_count(arg(0), "n")), parse_field_token(arg(1)));
    } else if (name == "zero") {
      expect_params(2, 2);
      a = zero_algebra(parse_count(arg(0), "n"), parse_field_token(arg(1)));
    } else {
      throw InvalidInput("unknown example '" + name + "'");
    }
    emit(algebra_to_json(*a));
    return kOk;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplicative bases and codimension-one ideals of finite-dimensional algebras", "mbasis"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool search_flags) {
    sub->add_flag("--json", cfg.json_output, "Emit canonical JSON");
    sub->add_option("--limit", cfg.element_limit, "Element limit for exhaustive scans")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--allow-nonassociative", cfg.allow_nonassociative, "Skip the associativity check");
    sub->add_option("--field", cfg.semigroup_field, "Base field (q or a prime) for semigroup input files");
    if (search_flags) sub->add_option("--threads", cfg.threads, "Worker threads for the basis search")->check(CLI::Range(1u, 256u));
  };

  struct Spec {
    const char* name;
    Command command;
    const char* help;
  };
  const Spec specs[] = {
      {"validate", Command::validate, "Check associativity of an algebra or semigroup file"},
      {"info", Command::info, "Dimension, identity, A^2 and simplicity"},
      {"ideals", Command::ideals, "Enumerate codimension-one ideals"},
      {"search", Command::search, "Search for bases closed under multiplication"},
      {"certify", Command::certify, "Search, build f and ker f, scan ideals, report a verdict"},
      {"verify-basis", Command::verify_basis, "Check a supplied basis and certify it"},
      {"example", Command::example, "Print a built-in example algebra as JSON"},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    const Command command = s.command;
    sub->callback([&cfg, command] { cfg.command = command; });
    if (command == Command::example) {
      sub->add_option("name", cfg.input_path, "matrix | product | quaternion | gf | semigroup-leftzero | group-cyclic | zero")
          ->required();
      sub->add_option("params", cfg.params, "Example parameters");
      continue;
    }
    sub->add_option("path", cfg.input_path, "Algebra or semigroup JSON file")->required();
    if (command == Command::verify_basis) {
      sub->add_option("vectors", cfg.params, "Basis vectors as comma-separated scalars, e.g. 1,0,1/2");
    }
    add_common(sub, command == Command::search || command == Command::certify || command == Command::verify_basis);
    if (command == Command::search) sub->add_flag("--all", cfg.find_all, "Report every closed basis");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    Runner runner(cfg, out, err);
    return runner.dispatch();
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

} // namespace mbasis::cli
