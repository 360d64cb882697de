#ifndef ORB_CLI_HPP_
#define ORB_CLI_HPP_

// Command-line front end. Exit codes: 0 success, 1 validation/input error,
// 2 usage error, 3 internal inconsistency.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orb/report_json.hpp"

namespace orb {

namespace cli_detail {

struct Options {
  std::string signature;
  std::string action_literal;
  std::string format = "text";
  std::string coefficients = "Zu";
  int degree = 2;
  Int max_complexity = 6;
};

inline CoeffKind parse_coeff(const std::string& s) {
  if (s == "Zu") return CoeffKind::Zu;
  if (s == "F2") return CoeffKind::F2;
  if (s == "Z") return CoeffKind::ZTrivial;
  throw std::invalid_argument("coefficients must be one of Zu, F2, Z");
}

// Action classes for a base, honoring --u: with an explicit literal that
// single action is used; otherwise every class is reported (a single class
// is selected automatically).
inline std::vector<ActionClass> select_classes(const OrbifoldSignature& sig,
                                               const Presentation& pres,
                                               const std::string& literal) {
  if (!literal.empty()) {
    Action a = parse_action_literal(pres, literal);
    if (!action_satisfies_relators(pres, a))
      throw std::invalid_argument("action literal violates a relator of the orbifold group");
    for (int i = 0; i < pres.generator_count(); ++i)
      if (pres.is_torsion_generator(i) && a.value(i) > 0)
        throw std::invalid_argument("action literal gives +1 to a torsion generator; "
                                    "the kernel would contain torsion");
    ActionClass cls;
    cls.representative = a;
    cls.members = {a};
    cls.kernel = kernel_double_cover(sig, pres, a);
    cls.twists = classify_reflector_curves(pres, a);
    return {cls};
  }
  return dedup_actions(sig, pres, enumerate_actions(pres));
}

inline void print_report_text(std::ostream& out, const ClassificationReport& rep,
                              const Presentation* pres) {
  out << "signature:            " << print_signature(rep.signature) << "\n";
  out << "geometry:             " << rep.geometry << "\n";
  if (rep.catalog_entry) {
    out << "bundles over base:    " << rep.catalog_entry->bundle_count << "\n";
    for (const auto& d : rep.catalog_entry->descriptions) out << "  - " << d << "\n";
  } else {
    if (rep.action && pres) out << "action:               " << rep.action->to_string(*pres) << "\n";
    out << "homotopy types:       " << rep.homotopy_type_count << "\n";
    out << "standard twist:       geometric, v2 = " << to_string(rep.standard_twist.wu)
        << ", k1 = " << rep.standard_twist.k_invariant << "\n";
    out << "gluck twist:          " << (rep.twists_coincide ? "same bundle, " : "")
        << (rep.gluck_twist.geometric ? "geometric" : "not geometric") << ", v2 = "
        << to_string(rep.gluck_twist.wu) << ", k1 = " << rep.gluck_twist.k_invariant << "\n";
    if (rep.kernel) out << "kernel double cover:  " << rep.kernel->name() << "\n";
    if (rep.h2_zu) out << "H^2(pi; Z^u):         " << rep.h2_zu->to_string() << "\n";
    if (rep.h3_zu) out << "H^3(pi; Z^u):         " << rep.h3_zu->to_string() << "\n";
    if (!rep.reflector_twists.empty()) {
      out << "reflector curves:     ";
      for (size_t i = 0; i < rep.reflector_twists.size(); ++i)
        out << (i ? ", " : "") << to_string(rep.reflector_twists[i]);
      out << "\n";
    }
  }
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
  out << "citations:            ";
  for (size_t i = 0; i < rep.citations.size(); ++i) out << (i ? "; " : "") << rep.citations[i];
  out << "\n";
}

inline void print_census_text(std::ostream& out, const CensusReport& rep) {
  for (const auto& e : rep.entries) {
    out << "  " << e.label;
    if (e.action_class) {
      out << "  [kernel " << e.action_class->kernel.name();
      if (!e.action_class->twists.empty()) {
        out << "; curves";
        for (auto t : e.action_class->twists) out << " " << to_string(t);
      }
      out << "]";
    }
    out << "  types " << e.homotopy_types << ", geometric " << e.geometric << "\n";
    for (const auto& n : e.notes) out << "      note: " << n << "\n";
  }
  for (const auto& [k, v] : rep.totals) out << k << " = " << v << "\n";
  out << "grand_total = " << rep.grand_total << "\n";
}

inline int run_classify(const Options& opt, std::ostream& out) {
  OrbifoldSignature sig = parse_signature(opt.signature);
  ValidationResult vr = validate_bundle_base(sig);
  if (!vr.valid) {
    if (opt.format == "json") out << validation_json(sig, vr).dump(2) << "\n";
    else
      for (const auto& v : vr.violations)
        out << "invalid base: " << v.message << " [" << v.citation << "]\n";
    return 1;
  }
  if (euler_characteristic(sig).sign() > 0 || has_trivial_group(sig)) {
    Presentation pres = presentation(sig);
    Action trivial;  // catalog entries do not need an action
    trivial.values.assign(static_cast<size_t>(pres.generator_count()), 1);
    ClassificationReport rep;
    auto actions = enumerate_actions(pres);
    rep = classify(sig, pres, actions.empty() ? trivial : actions.front());
    if (opt.format == "json") out << report_json(rep, nullptr).dump(2) << "\n";
    else print_report_text(out, rep, nullptr);
    return 0;
  }
  Presentation pres = presentation(sig);
  auto classes = cli_detail::select_classes(sig, pres, opt.action_literal);
  json all = json::array();
  for (const auto& cls : classes) {
    ClassificationReport rep = classify(sig, pres, cls.representative);
    if (opt.format == "json") {
      json jr = report_json(rep, &pres);
      jr["action_class_size"] = cls.members.size();
      if (!cls.distinctness_certified)
        jr["notes"].push_back("distinct up to implemented symmetries");
      all.push_back(jr);
    } else {
      if (classes.size() > 1) out << "--- action class ---\n";
      print_report_text(out, rep, &pres);
    }
  }
  if (opt.format == "json") out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return 0;
}

// H^2 of a closed-surface group: coinvariants of the coefficients twisted by
// the orientation character.
inline AbelianGroup surface_group_h2(const OrbifoldSignature& sig, const Presentation& pres,
                                     CoeffKind kind, const std::string& literal) {
  std::vector<int> u(static_cast<size_t>(pres.generator_count()), 1);
  if (kind == CoeffKind::Zu) {
    auto classes = cli_detail::select_classes(sig, pres, literal);
    if (classes.size() != 1)
      throw std::invalid_argument("several action classes; pass --u to pick one");
    for (int i = 0; i < pres.generator_count(); ++i)
      u[static_cast<size_t>(i)] = classes[0].representative.value(i);
  }
  if (kind == CoeffKind::F2) return AbelianGroup::elementary_two(1);
  // w1 is trivial for orientable surfaces and the crosscap character else.
  IntMatrix rels(1, pres.generator_count());
  for (int i = 0; i < pres.generator_count(); ++i) {
    int w1 = (!sig.orientable && pres.generators[static_cast<size_t>(i)].role ==
                                     GeneratorRole::Crosscap)
                 ? -1
                 : 1;
    rels.at(0, i) = w1 * u[static_cast<size_t>(i)] - 1;
  }
  return AbelianGroup::from_quotient(1, rels);
}

inline int run_cohomology(const Options& opt, std::ostream& out) {
  OrbifoldSignature sig = parse_signature(opt.signature);
  Presentation pres = presentation(sig);
  CoeffKind kind = parse_coeff(opt.coefficients);
  if (opt.degree < 0 || opt.degree > 3)
    throw std::invalid_argument("degree must be between 0 and 3");

  AbelianGroup value;
  if (opt.degree <= 1) {
    CoefficientModule coeff;
    if (kind == CoeffKind::F2) coeff = CoefficientModule::f2(pres);
    else if (kind == CoeffKind::ZTrivial) coeff = CoefficientModule::trivial_z(pres);
    else {
      Action act;
      if (euler_characteristic(sig).sign() > 0) {
        auto actions = enumerate_actions(pres);
        if (actions.empty())
          throw std::invalid_argument("no action with torsion-free kernel exists");
        act = opt.action_literal.empty() ? actions.front()
                                         : parse_action_literal(pres, opt.action_literal);
      } else {
        auto classes = cli_detail::select_classes(sig, pres, opt.action_literal);
        if (classes.size() != 1)
          throw std::invalid_argument("several action classes; pass --u to pick one");
        act = classes[0].representative;
      }
      coeff = CoefficientModule::twisted_z(
          pres, std::vector<int>(act.values.begin(), act.values.end()));
    }
    value = opt.degree == 0 ? h0(pres, coeff) : h1(pres, coeff);
  } else {
    if (sig.singular_locus_empty()) {
      // Surface group: cd 2, top cohomology by Poincare duality.
      if (opt.degree == 3) {
        value = AbelianGroup();
      } else {
        value = surface_group_h2(sig, pres, kind, opt.action_literal);
      }
    } else {
      if (euler_characteristic(sig).sign() > 0)
        throw std::invalid_argument(
            "degree >= 2 with a spherical base: see the spherical catalog");
      Action act;
      if (kind == CoeffKind::Zu) {
        auto classes = cli_detail::select_classes(sig, pres, opt.action_literal);
        if (classes.size() != 1)
          throw std::invalid_argument("several action classes; pass --u to pick one");
        act = classes[0].representative;
      } else {
        auto actions = enumerate_actions(pres);
        if (actions.empty()) throw std::invalid_argument("no admissible action");
        act = actions.front();  // Z and F2 values do not depend on the action
      }
      value = mv_cohomology(decompose(sig, pres, act), kind, opt.degree);
    }
  }
  if (opt.format == "json") out << cohomology_json(opt.degree, kind, value).dump(2) << "\n";
  else
    out << "H^" << opt.degree << "(pi^orb(" << print_signature(sig) << "); "
        << to_string(kind) << ") = " << value.to_string() << "\n";
  return 0;
}


inline int run_cover(const Options& opt, std::ostream& out) {
  OrbifoldSignature sig = parse_signature(opt.signature);
  ValidationResult vr = validate_bundle_base(sig);
  if (!vr.valid) {
    if (opt.format == "json") out << validation_json(sig, vr).dump(2) << "\n";
    else out << "invalid base: " << vr.violations.front().message << "\n";
    return 1;
  }
  if (euler_characteristic(sig).sign() > 0)
    throw std::invalid_argument(
        "kernel double covers apply to aspherical bases; spherical bases are catalog "
        "entries");
  Presentation pres = presentation(sig);
  auto classes = cli_detail::select_classes(sig, pres, opt.action_literal);
  json all = json::array();
  for (const auto& cls : classes) {
    RestrictionData rd = restriction_h1(pres, cls.representative);
    if (opt.format == "json") {
      json j{{"schema_version", 1},
             {"signature", print_signature(sig)},
             {"action", action_json(pres, cls.representative)},
             {"kernel", surface_json(cls.kernel)},
             {"restriction",
              json{{"theta_kernel_dim", rd.theta_kernel_dim},
                   {"theta_image_dim", rd.theta_image_dim},
                   {"h1_pi_dim", rd.pi_basis.size()},
                   {"h1_kappa_dim", rd.kappa_basis.size()}}}};
      json tw = json::array();
      for (auto t : cls.twists) tw.push_back(to_string(t));
      j["reflector_curves"] = tw;
      all.push_back(j);
    } else {
      out << print_signature(sig) << "  u: " << cls.representative.to_string(pres) << "\n";
      out << "  kernel double cover: " << cls.kernel.name() << "\n";
      if (!cls.twists.empty()) {
        out << "  reflector curves:";
        for (auto t : cls.twists) out << " " << to_string(t);
        out << "\n";
      }
      out << "  restriction: dim H^1(pi;F2) = " << rd.pi_basis.size()
          << ", dim H^1(kappa;F2) = " << rd.kappa_basis.size()
          << ", ker(theta+1) = " << rd.theta_kernel_dim
          << ", im(theta+1) = " << rd.theta_image_dim << "\n";
    }
  }
  if (opt.format == "json") out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return 0;
}

inline int run_validate(const Options& opt, std::ostream& out) {
  OrbifoldSignature sig = parse_signature(opt.signature);
  ValidationResult vr = validate_bundle_base(sig);
  if (opt.format == "json") {
    out << validation_json(sig, vr).dump(2) << "\n";
  } else if (vr.valid) {
    out << print_signature(sig) << " is a valid S2-orbifold bundle base\n";
    for (const auto& n : vr.notes) out << "note: " << n << "\n";
  } else {
    for (const auto& v : vr.violations)
      out << "reject (" << v.clause << "): " << v.message << " [" << v.citation << "]\n";
  }
  return vr.valid ? 0 : 1;
}

}  // namespace cli_detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"classification of S2-orbifold bundles over closed 2-orbifolds"};
  app.require_subcommand(1);
  cli_detail::Options opt;

  auto add_common = [&](CLI::App* sub, bool with_action) {
    sub->add_option("signature", opt.signature, "orbifold signature, e.g. \"S2(2,2,2,2)[]\"")
        ->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_action)
      sub->add_option("--u", opt.action_literal,
                      "action literal, e.g. c1=-1,c2=-1,z=+1 (omitted torsion "
                      "generators default to -1)");
  };

  auto* c_classify = app.add_subcommand("classify", "classification report for a base");
  add_common(c_classify, true);

  auto* c_census = app.add_subcommand("census", "counting reports");
  auto* census_flat = c_census->add_subcommand("flat", "the 23 flat homotopy types");
  census_flat->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  auto* census_hyp = c_census->add_subcommand("hyperbolic", "bounded hyperbolic census");
  census_hyp->add_option("--max", opt.max_complexity, "complexity bound")->required();
  census_hyp->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  c_census->require_subcommand(1);

  auto* c_cohomology = app.add_subcommand("cohomology", "twisted group cohomology of the base");
  add_common(c_cohomology, true);
  c_cohomology->add_option("--degree", opt.degree, "cohomological degree 0..3");
  c_cohomology->add_option("--coefficients", opt.coefficients, "Zu, F2 or Z")
      ->check(CLI::IsMember({"Zu", "F2", "Z"}));

  auto* c_cover = app.add_subcommand("cover", "kernel double cover and restriction data");
  add_common(c_cover, true);

  auto* c_validate = app.add_subcommand("validate", "check a signature as a bundle base");
  add_common(c_validate, false);

  std::vector<const char*> argv;
  argv.push_back("orb");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_classify->parsed()) return cli_detail::run_classify(opt, out);
    if (c_census->parsed()) {
      CensusReport rep =
          census_flat->parsed() ? flat_census() : hyperbolic_census(opt.max_complexity);
      std::string kind = census_flat->parsed() ? "flat" : "hyperbolic";
      if (opt.format == "json") out << census_json(rep, kind).dump(2) << "\n";
      else cli_detail::print_census_text(out, rep);
      return 0;
    }
    if (c_cohomology->parsed()) return cli_detail::run_cohomology(opt, out);
    if (c_cover->parsed()) return cli_detail::run_cover(opt, out);
    if (c_validate->parsed()) return cli_detail::run_validate(opt, out);
  } catch (const InternalError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const SignatureParseError& e) {
    err << "signature error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace orb

#endif  // ORB_CLI_HPP_
