#include "dqalg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "dqalg/io.hpp"

namespace dq::cli {

namespace {

struct Options {
  // construct
  std::vector<int> type;
  std::vector<std::string> blocks;
  std::string field = "rational";
  std::uint64_t p = 101;
  std::string example;
  std::string output;
  // enumerate
  int n = 0;
  int q = 0;
  bool ordered = false;
  bool count_classes = false;
  // analyze, classify, verify, conjugate
  std::vector<std::string> inputs;
  bool brute_force = false;
  std::optional<std::uint64_t> budget;
  std::string by;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

FieldSpec field_option(const Options& o) {
  if (o.field == "rational") return FieldSpec::rational();
  if (o.field == "prime") return FieldSpec::prime(o.p);
  throw Error(ErrorCode::InvalidInput, "--field must be 'rational' or 'prime'");
}

std::optional<int> as_index(const std::string& token) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  return std::stoi(token);
}

template <class S>
MatSubalgebra<S> load_as(const std::string& path, const FieldSpec& field) {
  const AnyAlgebra any = algebra_from_json(read_json_file(path));
  const auto* a = std::get_if<MatSubalgebra<S>>(&any);
  if (!a || a->field() != field) {
    throw Error(ErrorCode::InvalidInput, "'" + path + "' is not over " + field.describe());
  }
  return *a;
}

template <class S>
MatSubalgebra<S> construct_algebra(const Options& o, const FieldSpec& field, Json& metadata) {
  if (!o.example.empty()) {
    metadata["name"] = o.example;
    if (o.example == "m2-dual-numbers") return named_example<S>(field, NamedExample::M2DualNumbers);
    if (o.example == "nine-by-nine") return named_example<S>(field, NamedExample::NineByNine);
    throw Error(ErrorCode::InvalidInput, "unknown example '" + o.example + "'");
  }
  if (o.type.empty()) throw Error(ErrorCode::InvalidInput, "construct needs --type or --example");
  const BlockType type(o.type);
  metadata["type"] = block_type_to_json(type);
  if (o.blocks.empty()) return full_type_algebra<S>(field, type);
  if (static_cast<int>(o.blocks.size()) != type.q()) {
    throw Error(ErrorCode::ShapeMismatch, "--blocks needs one entry per part of --type");
  }
  std::vector<MatSubalgebra<S>> blocks;
  Json names = Json::array();
  for (int i = 0; i < type.q(); ++i) {
    const std::string& token = o.blocks[i];
    if (token == "full") {
      blocks.push_back(full_matrix_algebra<S>(field, type.part(i)));
    } else if (const auto k = as_index(token)) {
      blocks.push_back(canonical_commutative<S>(field, {type.part(i), *k}));
    } else {
      blocks.push_back(load_as<S>(token, field));
    }
    names.push_back(token);
  }
  metadata["blocks"] = std::move(names);
  return block_type_algebra<S>(type, blocks);
}

int do_construct(const Options& o, std::ostream& out) {
  const FieldSpec field = field_option(o);
  return visit_field(field, [&]<class S>(ScalarTag<S>) {
    Json metadata;
    const auto a = construct_algebra<S>(o, field, metadata);
    const Json doc = algebra_to_json(a, metadata);
    if (o.output.empty()) {
      emit(out, doc);
    } else {
      write_json_file(o.output, doc);
      emit(out, Json{{"output", o.output}, {"n", a.n()}, {"dim", a.dim()}});
    }
    return int{kOk};
  });
}

template <class Fn>
int with_algebra(const std::string& path, Fn&& fn) {
  const AnyAlgebra any = algebra_from_json(read_json_file(path));
  return std::visit([&](const auto& a) { return fn(a); }, any);
}

int do_analyze(const Options& o, std::ostream& out) {
  return with_algebra(o.inputs.at(0), [&](const auto& a) {
    emit(out, report_to_json(analyze(a), a.field()));
    return int{kOk};
  });
}

int do_enumerate(const Options& o, std::ostream& out) {
  const auto e = enumerate_max_types(o.n, o.q, o.ordered);
  Json j = enumeration_to_json(e, o.ordered);
  if (o.count_classes) j["classes"] = count_iso_classes(o.n, o.q);
  emit(out, j);
  return kOk;
}

int do_classify(const Options& o, std::ostream& out) {
  if (o.inputs.size() != 2) throw Error(ErrorCode::InvalidInput, "classify needs two algebra documents");
  const AnyAlgebra first = algebra_from_json(read_json_file(o.inputs[0]));
  const AnyAlgebra second = algebra_from_json(read_json_file(o.inputs[1]));
  return std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        const auto* b = std::get_if<A>(&second);
        if (!b) throw Error(ErrorCode::InvalidInput, "algebras are over different fields");
        const auto verdict = is_isomorphic_maxdim(a, *b);
        const auto ia = iso_invariants(a);
        const auto ib = iso_invariants(*b);
        Json j;
        j["isomorphic"] = verdict.isomorphic;
        j["certificate"] = verdict.certificate ? matrix_to_json(*verdict.certificate) : Json(nullptr);
        j["types"] = Json::array({block_type_to_json(*ia.block_type), block_type_to_json(*ib.block_type)});
        j["block_ids"] = Json::array({block_ids_to_json(*ia.block_ids), block_ids_to_json(*ib.block_ids)});
        j["field_caveat"] = verdict.field_caveat;
        emit(out, j);
        return int{kOk};
      },
      first);
}

std::uint64_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv(kBudgetEnv)) {
    const std::string text(env);
    if (!as_index(text)) throw Error(ErrorCode::InvalidInput, std::string(kBudgetEnv) + " must be a non-negative integer");
    return std::stoull(text);
  }
  return kDefaultBruteForceBudget;
}

int do_verify(const Options& o, std::ostream& out) {
  if (o.q < 1) throw Error(ErrorCode::InvalidQ, "--q must be at least 1");
  return with_algebra(o.inputs.at(0), [&](const auto& a) {
    const auto min_q = min_dq(a);
    Json j;
    j["q"] = o.q;
    j["dim"] = a.dim();
    j["min_q"] = min_q ? Json(*min_q) : Json("not-Dq");
    j["structural"] = min_q.has_value() && *min_q <= o.q;
    if (o.brute_force) {
      const std::uint64_t budget = resolve_budget(o);
      j["brute_force"] = check_dq_bruteforce(a, o.q, budget);
      j["budget"] = budget;
    }
    emit(out, j);
    return int{kOk};
  });
}

int do_conjugate(const Options& o, std::ostream& out) {
  const Json by = read_json_file(o.by);
  const Json& grid = by.is_object() && by.contains("matrix") ? by["matrix"] : by;
  return with_algebra(o.inputs.at(0), [&](const auto& a) {
    using S = typename std::decay_t<decltype(a)>::Scalar;
    const Matrix<S> x = matrix_from_json<S>(a.field(), grid, a.n());
    const Json doc = algebra_to_json(conjugate_algebra(a, x));
    if (o.output.empty()) {
      emit(out, doc);
    } else {
      write_json_file(o.output, doc);
      emit(out, Json{{"output", o.output}, {"n", a.n()}, {"dim", a.dim()}});
    }
    return int{kOk};
  });
}

Json error_object(std::string_view code, const std::string& message) {
  return Json{{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for D_q subalgebras of M_n(K)", "dqalg"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a block-type or example algebra");
  construct->add_option("--type", o.type, "Block sizes, e.g. 2,3")->delimiter(',');
  construct->add_option("--blocks", o.blocks, "Per block: canonical index k, 'full', or an algebra document path")
      ->delimiter(',');
  construct->add_option("--field", o.field, "rational or prime")->check(CLI::IsMember({"rational", "prime"}));
  construct->add_option("--p", o.p, "Prime modulus for --field prime");
  construct->add_option("--example", o.example, "m2-dual-numbers or nine-by-nine");
  construct->add_option("-o,--output", o.output, "Write the document here instead of stdout");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full structural report for an algebra document");
  analyze_cmd->add_option("algebra", o.inputs, "Algebra document")->required()->expected(1);

  auto* enumerate = app.add_subcommand("enumerate", "Maximum-dimension types for (n, q)");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--q", o.q)->required();
  enumerate->add_flag("--ordered", o.ordered, "Also list every ordered tuple");
  enumerate->add_flag("--count-classes", o.count_classes, "Add the isomorphism class count");

  auto* classify = app.add_subcommand("classify", "Decide isomorphism of two maximal block-type algebras");
  classify->add_option("algebras", o.inputs, "Two algebra documents")->required()->expected(2);

  auto* verify = app.add_subcommand("verify", "Check the D_q identity");
  verify->add_option("algebra", o.inputs, "Algebra document")->required()->expected(1);
  verify->add_option("--q", o.q)->required();
  verify->add_flag("--brute-force", o.brute_force, "Also evaluate every basis tuple");
  verify->add_option("--budget", o.budget, "Tuple budget for --brute-force");

  auto* conjugate = app.add_subcommand("conjugate", "Conjugate an algebra by an invertible matrix");
  conjugate->add_option("algebra", o.inputs, "Algebra document")->required()->expected(1);
  conjugate->add_option("--by", o.by, "Matrix document: a grid, or an object with \"matrix\"")->required();
  conjugate->add_option("-o,--output", o.output, "Write the document here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    emit(out, error_object("ParseError", e.what()));
    return kInputError;
  }

  try {
    if (construct->parsed()) return do_construct(o, out);
    if (analyze_cmd->parsed()) return do_analyze(o, out);
    if (enumerate->parsed()) return do_enumerate(o, out);
    if (classify->parsed()) return do_classify(o, out);
    if (verify->parsed()) return do_verify(o, out);
    if (conjugate->parsed()) return do_conjugate(o, out);
  } catch (const Error& e) {
    emit(out, error_object(to_string(e.code()), e.detail()));
    err << "dqalg: " << e.what() << '\n';
    const bool input = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::IoError;
    return input ? kInputError : kDomainError;
  }
  return kInputError;
}

}  // namespace dq::cli
