#ifndef LIEMULT_TOOLS_CLI_HPP
#define LIEMULT_TOOLS_CLI_HPP

// Command-line front end. Exit status: 0 success, 1 verification mismatch,
// 2 usage, parse or precondition error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "liemult/liemult.hpp"

namespace liemult::cli {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2 };

namespace detail {

struct Input {
  std::string name;
  LieAlgebra algebra;
};

inline Input load(const std::string& file, const std::string& entry) {
  if (!entry.empty()) return {entry, get(entry)};
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  return {std::filesystem::path(file).stem().string(), parse_algebra(buf.str())};
}

/// Key/value output: "key=value" lines, or report records in machine mode.
class Printer {
 public:
  Printer(std::ostream& out, bool machine, std::string name) : out_(out), machine_(machine), name_(std::move(name)) {}

  void operator()(const std::string& key, const std::string& value) {
    if (machine_)
      out_ << name_ << '\t' << key << "\t-\t" << value << "\tinfo\t-\n";
    else
      out_ << key << "=" << value << "\n";
  }
  void operator()(const std::string& key, long long value) { (*this)(key, std::to_string(value)); }

 private:
  std::ostream& out_;
  bool machine_;
  std::string name_;
};

inline std::string basis_text(const Subspace& s) {
  std::string out = "{";
  for (std::size_t r = 0; r < s.basis().size(); ++r) {
    out += r ? ", " : "";
    std::string v;
    for (std::size_t k = 0; k < s.basis()[r].size(); ++k) {
      const Scalar& c = s.basis()[r][k];
      if (sgn(c) == 0) continue;
      std::string term = "x" + std::to_string(k + 1);
      if (c == -1)
        term = "-" + term;
      else if (c != 1)
        term = c.get_str() + "*" + term;
      v += v.empty() ? term : (term[0] == '-' ? term : "+" + term);
    }
    out += v;
  }
  return out + "}";
}

inline std::vector<Scalar> parse_scalars(const std::string& list) {
  std::vector<Scalar> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    Scalar q;
    if (q.set_str(item, 10) != 0 || item.empty()) throw Error("bad rational in list: " + item);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur multiplier invariants of nilpotent Lie algebras over Q", "liemult"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "Tab-separated records instead of text");

  std::string file, entry;
  auto add_input = [&](CLI::App* sub) {
    auto* f = sub->add_option("file", file, "Algebra file");
    auto* e = sub->add_option("-e,--entry", entry, "Catalogue name instead of a file (e.g. 37B, L_{5,8}+A(2))");
    f->excludes(e);
    e->excludes(f);
  };

  auto* info = app.add_subcommand("info", "Dimension, derived algebra, center, central series");
  auto* mult = app.add_subcommand("multiplier", "dim M(L), s(L), t(L) via cohomology");
  auto* oracle = app.add_subcommand("oracle", "Cross-check dim M(L) with the free presentation");
  auto* exact = app.add_subcommand("exact-sequence", "Map g : L^2 (x) L^ab -> M(L) for class-two algebras");
  auto* capab = app.add_subcommand("capability", "Cover, epicenter and capability");
  auto* classify = app.add_subcommand("classify", "Fingerprint and matching members of the s(L)=5 list");
  for (auto* sub : {info, mult, oracle, exact, capab, classify}) {
    add_input(sub);
    sub->callback([sub, &file, &entry] {
      if (file.empty() && entry.empty()) throw CLI::RequiredError(sub->get_name() + ": file or --entry");
    });
  }

  auto* cat = app.add_subcommand("catalogue", "Catalogue of named algebras");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List entries");
  std::string show_name;
  auto* show = cat->add_subcommand("show", "Show one entry");
  show->add_option("name", show_name)->required();
  cat->add_subcommand("export", "All entries in the algebra file format");

  auto* vt = app.add_subcommand("verify-tables", "Recompute every recorded invariant");
  std::string eps_list;
  bool use_oracle = false;
  std::vector<std::string> tables;
  vt->add_option("--epsilon", eps_list, "Comma-separated parameter values to sample");
  vt->add_flag("--oracle", use_oracle, "Also compute dim M through free presentations");
  vt->add_option("--table", tables, "Restrict to a source, e.g. \"Table 4\"");

  auto* lemmas = app.add_subcommand("lemmas", "Check the structural statements");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const long long cap = basis_cap_from_env();
  try {
    if (cat->parsed()) {
      if (cat->get_subcommand("list")->parsed()) {
        for (const auto& e : list_entries()) {
          const LieAlgebra l = get(e.name);
          std::string where;
          for (const auto& w : e.listed_in) where += (where.empty() ? "" : ", ") + w;
          if (machine)
            out << e.name << '\t' << l.dim() << '\t' << where << '\n';
          else
            out << e.name << "  (dim " << l.dim() << (where.empty() ? "" : "; " + where) << ")\n";
        }
      } else if (show->parsed()) {
        const CatalogueEntry* e = find_entry(show_name);
        if (!e) throw UnknownName(show_name);
        out << "# " << e->name;
        for (const auto& a : e->aliases) out << " = " << a;
        out << "\n" << serialize(spec_for(e->name));
        for (const auto& x : e->expectations)
          out << "# expect " << invariant_name(x.kind) << " = " << x.expected_text() << "  [" << x.source << "]\n";
      } else {
        out << export_catalogue();
      }
      return kOk;
    }

    if (vt->parsed() || lemmas->parsed()) {
      VerificationReport rep;
      if (vt->parsed()) {
        VerifyOptions opt;
        opt.oracle = use_oracle;
        opt.sources = tables;
        opt.basis_cap = cap;
        if (!eps_list.empty()) opt.epsilon_samples = detail::parse_scalars(eps_list);
        rep = verify_tables(opt);
      } else {
        rep = lemma_suite(cap);
      }
      if (machine) {
        out << format_machine(rep);
      } else {
        out << format_text(rep);
        if (rep.ok()) out << (vt->parsed() ? "all expectations pass\n" : "all checks pass\n");
      }
      return rep.ok() ? kOk : kMismatch;
    }

    const detail::Input in = detail::load(file, entry);
    const LieAlgebra& l = in.algebra;
    detail::Printer print(out, machine, in.name);

    if (info->parsed()) {
      const SeriesReport s = central_series(l);
      const Subspace d = derived_subalgebra(l);
      const Subspace z = center(l);
      print("n", l.dim());
      print("dim L^2", d.dim());
      print("dim Z", z.dim());
      print("class", s.nilpotency_class);
      std::string lower, upper;
      for (const auto& t : s.lower) lower += (lower.empty() ? "" : ",") + std::to_string(t.dim());
      for (const auto& t : s.upper) upper += (upper.empty() ? "" : ",") + std::to_string(t.dim());
      print("lower central series dims", lower);
      print("upper central series dims", upper);
      const GeneralizedHeisenberg gh = is_generalized_heisenberg(l);
      print("generalized Heisenberg", gh.holds ? "yes (rank " + std::to_string(gh.rank) + ")" : "no");
      if (!machine) {
        print("L^2", detail::basis_text(d));
        print("Z", detail::basis_text(z));
      }
      return kOk;
    }
    if (mult->parsed()) {
      const MultiplierReport r = multiplier_report(l);
      print("n", r.n);
      print("dim Z^2", r.dim_Z2);
      print("dim B^2", r.dim_B2);
      print("dim M", r.dim_M);
      print("s", r.s ? std::to_string(*r.s) : "undefined (abelian)");
      print("t", r.t);
      return kOk;
    }
    if (oracle->parsed()) {
      const int ce = schur_multiplier_dim(l);
      const Presentation p = presentation(l, cap);
      const int hopf = hopf_multiplier_dim(p);
      print("dim M (cohomology)", ce);
      print("dim M (free presentation)", hopf);
      print("generators", p.generators);
      print("dim F", p.free_dim());
      print("dim R", static_cast<long long>(p.relations.size()));
      print("dim [R,F]", p.commutator_relations.rank());
      print("agree", ce == hopf ? "yes" : "no");
      return ce == hopf ? kOk : kMismatch;
    }
    if (exact->parsed()) {
      const GaneaData g = ganea_data(l, cap);
      print("dim L^2 (x) L^ab", g.tensor_dim);
      print("rank g", g.g_rank);
      print("dim ker g", g.ker_g_dim);
      print("dim K", g.k_dim);
      print("K in ker g", g.k_in_ker_g ? "yes" : "no");
      print("dim M(L)", g.multiplier_dim);
      print("dim M(L^ab)", g.abelian_multiplier_dim);
      print("dim L^2", g.derived_dim);
      print("alternating sum", g.alternating_sum());
      return g.k_in_ker_g && g.alternating_sum() == 0 ? kOk : kMismatch;
    }
    if (capab->parsed()) {
      const CoverReport c = cover_and_epicenter(l, cap);
      print("dim L", l.dim());
      print("dim M", c.multiplier_dim);
      print("dim cover", c.cover.dim());
      print("dim Z(cover)", c.cover_center.dim());
      print("dim epicenter", c.epicenter.dim());
      if (!machine) print("epicenter", detail::basis_text(c.epicenter));
      print("capable", c.is_capable ? "yes" : "no");
      return kOk;
    }
    if (classify->parsed()) {
      const Fingerprint f = fingerprint(l);
      print("fingerprint (n, dim L^2, dim Z, class, dim M, s)", f.str());
      std::string names;
      for (const auto& n : classify_s5(l)) names += (names.empty() ? "" : ", ") + n;
      print("s=5 candidates", names.empty() ? "none" : names);
      return kOk;
    }
  } catch (const Error& e) {
    err << "liemult: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace liemult::cli

#endif  // LIEMULT_TOOLS_CLI_HPP
