#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "twistbv/bv.hpp"
#include "twistbv/comparison.hpp"
#include "twistbv/examples.hpp"
#include "twistbv/io.hpp"

namespace twistbv::cli {

namespace {

using algebra::Degree;
using algebra::GradedAlgebra;
using hochschild::BarComplex;
using hochschild::Cochain;
using hochschild::CohomologyGroup;

enum class Format { Text, Records };

struct Common {
  std::string format = "text";
  std::size_t size_cap = hochschild::kDefaultSizeCap;
  Format fmt() const { return format == "records" ? Format::Records : Format::Text; }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// "q" or "q11,q12;q21,q22".
algebra::Bicharacter parse_bichar(const std::string& text) {
  std::vector<Vector> rows;
  for (const auto& r : split(text, ';')) {
    Vector row;
    for (const auto& e : split(r, ',')) row.push_back(parse_scalar(e));
    if (!rows.empty() && row.size() != rows.front().size()) throw InputError("bicharacter rows differ in length");
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) throw InputError("empty bicharacter");
  algebra::Bicharacter t{linalg::Matrix::from_rows(rows)};
  algebra::validate_bicharacter(t);
  return t;
}

Degree parse_degree(const std::string& text) {
  Degree d;
  for (const auto& e : split(text, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(e, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != e.size()) throw InputError("bad degree component '" + e + "'");
    d.push_back(v);
  }
  return d;
}

frobenius::FrobeniusStructure require_frobenius(const io::AlgebraFile& f, const std::string& what) {
  if (!f.gram) throw InputError(what + ": the algebra file has no gram block");
  auto rep = algebra::check_algebra(f.algebra);
  if (!rep.ok()) throw InputError(what + ": " + rep.violations.front().message);
  try {
    return frobenius::validate_frobenius(f.algebra, *f.gram);
  } catch (const frobenius::ValidationError& e) {
    throw InputError(what + ": " + e.what());
  }
}

// "2*x^2 - 1/2*x"; "0" for the zero vector.
std::string format_element(const std::vector<std::string>& names, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Scalar c = v[i];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) out += format_scalar(c) + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

// "c0 - 2*c3" over global class labels.
std::string format_coords(const Vector& v, std::size_t offset) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v.size(); ++i) names.push_back("c" + std::to_string(offset + i));
  return format_element(names, v);
}

std::string format_vector(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_scalar(v[i]);
  return out + "]";
}

std::string tuple_label(const BarComplex& cx, std::size_t level, std::size_t tuple) {
  if (level == 0) return "()";
  const auto& alg = cx.algebra();
  std::string out;
  for (std::size_t slot : cx.decode(level, tuple)) out += (out.empty() ? "" : "|") + alg.names()[alg.reduced_basis()[slot]];
  return "(" + out + ")";
}

// Sparse tuple -> element map of a cochain.
std::string format_cochain(const BarComplex& cx, const Cochain& f) {
  const std::size_t dm = cx.module().dim;
  const auto& names = cx.algebra().names();
  std::string out;
  for (std::size_t t = 0; t < cx.tuple_count(f.level); ++t) {
    Vector val(f.values.begin() + static_cast<long>(t * dm), f.values.begin() + static_cast<long>((t + 1) * dm));
    if (is_zero(val)) continue;
    out += (out.empty() ? "" : "; ") + tuple_label(cx, f.level, t) + " -> " + format_element(names, val);
  }
  return out.empty() ? "0" : out;
}

// Refuse before building any level above the cap.
void ensure_size(const BarComplex& cx, std::size_t top_level) {
  for (std::size_t p = 0; p <= top_level; ++p) (void)cx.space_size(p);
}

// Classes of levels 0..P with global labels c0, c1, ... in level then representative order.
struct ClassTable {
  std::vector<CohomologyGroup> groups;
  std::vector<std::size_t> offsets;
  std::size_t size() const { return offsets.empty() ? 0 : offsets.back() + groups.back().dimension; }
  std::pair<std::size_t, std::size_t> locate(std::size_t label) const {
    for (std::size_t p = groups.size(); p-- > 0;)
      if (label >= offsets[p]) return {p, label - offsets[p]};
    throw InputError("class label out of range");
  }
};

ClassTable class_table(const BarComplex& cx, std::size_t max_level) {
  ClassTable t;
  std::size_t off = 0;
  for (std::size_t p = 0; p <= max_level; ++p) {
    t.offsets.push_back(off);
    t.groups.push_back(hochschild::cohomology(cx, p));
    off += t.groups.back().dimension;
  }
  return t;
}

int cmd_check(const std::string& path, const Common& c, std::ostream& out) {
  io::AlgebraFile f = io::load_algebra(path);
  const auto& alg = f.algebra;
  const bool text = c.fmt() == Format::Text;
  if (text)
    out << "algebra: dim " << alg.dim() << ", grading rank " << alg.grading_rank() << ", unit " << alg.names()[alg.unit_index()] << "\n";
  else
    out << "algebra dim=" << alg.dim() << " rank=" << alg.grading_rank() << " unit=" << alg.names()[alg.unit_index()] << "\n";
  auto rep = algebra::check_algebra(alg);
  for (const auto& v : rep.violations) out << (text ? "violation: " : "violation message=\"") << v.message << (text ? "\n" : "\"\n");
  if (!rep.ok()) {
    out << (text ? "algebra laws: FAIL\n" : "verdict check=algebra pass=0\n");
    return kVerificationFailure;
  }
  out << (text ? "algebra laws: ok\n" : "verdict check=algebra pass=1\n");
  if (!f.gram) {
    out << (text ? "frobenius: no gram block\n" : "verdict check=frobenius pass=absent\n");
    return kSuccess;
  }
  frobenius::FrobeniusStructure fr;
  try {
    fr = frobenius::validate_frobenius(alg, *f.gram);
  } catch (const frobenius::ValidationError& e) {
    if (text)
      out << "frobenius: FAIL: " << e.what() << "\n";
    else
      out << "verdict check=frobenius pass=0 message=\"" << e.what() << "\"\n";
    return kVerificationFailure;
  }
  const bool ss = frobenius::nakayama_semisimple(fr);
  if (text) {
    out << "frobenius: ok\n";
    out << "sigma: " << algebra::format_degree(fr.sigma) << "\n";
    out << "nakayama:\n";
    for (std::size_t i = 0; i < alg.dim(); ++i)
      out << "  nu(" << alg.names()[i] << ") = " << format_element(alg.names(), fr.nakayama.column(i)) << "\n";
    out << "nakayama semisimple: " << (ss ? "yes" : "no") << "\n";
  } else {
    out << "verdict check=frobenius pass=1\n";
    out << "sigma value=" << algebra::format_degree(fr.sigma) << "\n";
    for (std::size_t i = 0; i < alg.dim(); ++i)
      out << "nakayama basis=" << alg.names()[i] << " image=" << format_vector(fr.nakayama.column(i)) << "\n";
    out << "semisimple value=" << (ss ? 1 : 0) << "\n";
  }
  return kSuccess;
}

struct TwistArgs {
  std::string side = "none";
  std::string degree;
  std::string bichar;
};

int cmd_hh(const std::string& path, std::size_t max_level, const TwistArgs& ta, bool reps, const Common& c,
           std::ostream& out) {
  io::AlgebraFile f = io::load_algebra(path);
  auto rep = algebra::check_algebra(f.algebra);
  if (!rep.ok()) throw InputError("algebra laws fail: " + rep.violations.front().message);
  algebra::TwistedBimodule module = algebra::regular_bimodule(f.algebra);
  if (ta.side != "none") {
    algebra::Bicharacter t = !ta.bichar.empty() ? parse_bichar(ta.bichar)
                             : f.bichar        ? *f.bichar
                                               : throw InputError("a twist needs --bichar or a bichar block");
    Degree d = parse_degree(ta.degree);
    module = ta.side == "right" ? algebra::twisted_bimodule_right(f.algebra, t, d)
                                : algebra::twisted_bimodule_left(f.algebra, t, d);
  }
  BarComplex cx(f.algebra, module, c.size_cap);
  ensure_size(cx, max_level + 1);
  const bool text = c.fmt() == Format::Text;
  for (std::size_t p = 0; p <= max_level; ++p) {
    auto g = hochschild::cohomology(cx, p);
    if (text) {
      out << "HH^" << p << ": " << g.dimension << "\n";
      for (const auto& [d, k] : g.graded_dims) out << "  degree " << algebra::format_degree(d) << ": " << k << "\n";
    } else {
      out << "total level=" << p << " dim=" << g.dimension << "\n";
      for (const auto& [d, k] : g.graded_dims)
        out << "dim level=" << p << " degree=" << algebra::format_degree(d) << " value=" << k << "\n";
    }
    if (reps)
      for (std::size_t i = 0; i < g.representatives.size(); ++i) {
        const auto& r = g.representatives[i];
        if (text)
          out << "  rep " << i << " degree " << algebra::format_degree(*r.degree) << ": " << format_cochain(cx, r) << "\n";
        else
          out << "rep level=" << p << " index=" << i << " degree=" << algebra::format_degree(*r.degree) << " map=\""
              << format_cochain(cx, r) << "\"\n";
      }
  }
  return kSuccess;
}

int cmd_bv(const std::string& path, std::size_t max_level, bool axioms, const Common& c, std::ostream& out) {
  auto fr = require_frobenius(io::load_algebra(path), "bv");
  bv::BVContext ctx(fr, hochschild::Twist::none(), c.size_cap);
  ensure_size(ctx.complex(), max_level + 1);
  ClassTable tab = class_table(ctx.complex(), max_level);
  const bool text = c.fmt() == Format::Text;
  for (std::size_t p = 0; p <= max_level; ++p)
    for (std::size_t i = 0; i < tab.groups[p].dimension; ++i) {
      const std::size_t label = tab.offsets[p] + i;
      const Cochain& rep = tab.groups[p].representatives[i];
      std::string delta = "0";
      if (p > 0) {
        Cochain d = bv::bv_delta(ctx, ctx.invariant_representative(rep));
        delta = format_coords(hochschild::class_coordinates(ctx.complex(), tab.groups[p - 1], d), tab.offsets[p - 1]);
      }
      if (text)
        out << "c" << label << ": HH^" << p << " degree " << algebra::format_degree(*rep.degree) << ", Delta = " << delta
            << "\n";
      else
        out << "class label=c" << label << " level=" << p << " degree=" << algebra::format_degree(*rep.degree)
            << " delta=\"" << delta << "\"\n";
    }
  if (!axioms) return kSuccess;
  auto rep = bv::check_bv_axioms(ctx, max_level);
  if (text) {
    out << "axioms: " << rep.instances_checked << " instances on " << rep.classes_checked << " classes, "
        << rep.failures.size() << " failures\n";
    for (const auto& f : rep.failures) out << "  FAIL " << f.axiom << ": " << f.witness << "\n";
  } else {
    out << "verdict check=bv-axioms pass=" << (rep.ok() ? 1 : 0) << " instances=" << rep.instances_checked
        << " failures=" << rep.failures.size() << "\n";
    for (const auto& f : rep.failures) out << "failure axiom=" << f.axiom << " witness=\"" << f.witness << "\"\n";
  }
  return rep.ok() ? kSuccess : kVerificationFailure;
}

int cmd_bracket(const std::string& path, std::size_t max_level, const std::string& classes, const std::string& sign,
                const Common& c, std::ostream& out) {
  auto fr = require_frobenius(io::load_algebra(path), "bracket");
  auto parts = split(classes, ',');
  if (parts.size() != 2) throw InputError("--classes expects two labels i,j");
  std::size_t ij[2];
  for (int k = 0; k < 2; ++k) {
    std::string s = parts[k];
    if (!s.empty() && s[0] == 'c') s.erase(0, 1);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad class label '" + parts[k] + "'");
    ij[k] = std::stoul(s);
  }
  bv::BVContext ctx(fr, hochschild::Twist::none(), c.size_cap);
  ensure_size(ctx.complex(), max_level + 1);
  ClassTable tab = class_table(ctx.complex(), max_level);
  if (ij[0] >= tab.size() || ij[1] >= tab.size()) throw InputError("class label out of range (see the bv command)");
  auto [p, a] = tab.locate(ij[0]);
  auto [q, b] = tab.locate(ij[1]);
  const auto convention = sign == "tradler" ? bv::BracketSign::Tradler : bv::BracketSign::Definition;
  auto br = bv::gerstenhaber_bracket(ctx, ctx.invariant_representative(tab.groups[p].representatives[a]),
                                     ctx.invariant_representative(tab.groups[q].representatives[b]), {}, convention);
  std::string value = "0";
  if (br) {
    const std::size_t level = p + q - 1;
    if (level > max_level) throw InputError("bracket lands above --max-degree; raise it");
    value = format_coords(hochschild::class_coordinates(ctx.complex(), tab.groups[level], *br), tab.offsets[level]);
  }
  if (c.fmt() == Format::Text)
    out << "[c" << ij[0] << ", c" << ij[1] << "] = " << value << "\n";
  else
    out << "bracket left=c" << ij[0] << " right=c" << ij[1] << " convention=" << sign << " value=\"" << value << "\"\n";
  return kSuccess;
}

algebra::Bicharacter pair_bichar(const io::AlgebraFile& l, const io::AlgebraFile& r, const std::string& text) {
  if (!text.empty()) return parse_bichar(text);
  if (l.bichar) return *l.bichar;
  return algebra::Bicharacter::trivial(l.algebra.grading_rank(), r.algebra.grading_rank());
}

int cmd_twist(const std::string& lp, const std::string& rp, const std::string& bichar, const std::string& output,
              std::ostream& out) {
  io::AlgebraFile l = io::load_algebra(lp), r = io::load_algebra(rp);
  algebra::Bicharacter t = pair_bichar(l, r, bichar);
  io::AlgebraFile prod;
  if (l.gram && r.gram) {
    auto fp = frobenius::twisted_frobenius_product(require_frobenius(l, "left"), require_frobenius(r, "right"), t);
    prod.algebra = fp.algebra;
    prod.gram = fp.gram;
  } else {
    prod.algebra = algebra::twisted_tensor(l.algebra, r.algebra, t);
  }
  const std::string text = io::serialize_algebra(prod);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) throw InputError("cannot write '" + output + "'");
    f << text;
  }
  return kSuccess;
}

void print_decomposition(const comparison::DecompositionTable& tab, Format fmt, std::ostream& out) {
  for (const auto& row : tab.rows) {
    const std::string bideg = algebra::format_degree(row.left_degree) + "," + algebra::format_degree(row.right_degree);
    if (fmt == Format::Text)
      out << "  level " << row.level << " bidegree " << bideg << ": product " << row.product_dim << ", components "
          << row.component_sum << (row.product_dim == row.component_sum ? "" : "  MISMATCH") << "\n";
    else
      out << "dim level=" << row.level << " bidegree=" << bideg << " value=" << row.product_dim
          << " components=" << row.component_sum << "\n";
  }
}

void print_theorem(const comparison::MainTheoremReport& rep, Format fmt, std::ostream& out) {
  for (const auto& p : rep.precondition_failures)
    out << (fmt == Format::Text ? "  precondition failed: " : "precondition message=\"") << p
        << (fmt == Format::Text ? "\n" : "\"\n");
  for (const auto& r : rep.pairs) {
    if (fmt == Format::Text)
      out << "  (n,m)=(" << r.n << "," << r.m << ") d=" << algebra::format_degree(r.d) << " c=" << algebra::format_degree(r.c)
          << " (f" << r.f_index << ", g" << r.g_index << "): " << (r.pass ? "pass" : "FAIL")
          << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    else
      out << "verdict check=main-theorem n=" << r.n << " m=" << r.m << " d=" << algebra::format_degree(r.d)
          << " c=" << algebra::format_degree(r.c) << " f=" << r.f_index << " g=" << r.g_index << " pass=" << (r.pass ? 1 : 0)
          << "\n";
  }
}

int cmd_verify(const std::string& lp, const std::string& rp, const std::string& bichar, std::size_t max_level,
               const Common& c, std::ostream& out) {
  io::AlgebraFile l = io::load_algebra(lp), r = io::load_algebra(rp);
  algebra::Bicharacter t = pair_bichar(l, r, bichar);
  comparison::ProductSetup ps(require_frobenius(l, "left"), require_frobenius(r, "right"), t, c.size_cap);
  ensure_size(ps.product_context().complex(), max_level + 1);
  const Format fmt = c.fmt();
  auto dims = comparison::decomposition_dims(ps, max_level);
  if (fmt == Format::Text) out << "decomposition:\n";
  print_decomposition(dims, fmt, out);
  auto rep = comparison::verify_main_theorem(ps, max_level);
  std::size_t passed = 0;
  for (const auto& p : rep.pairs) passed += p.pass ? 1 : 0;
  if (fmt == Format::Text) out << "BV product formula: " << passed << "/" << rep.pairs.size() << " pairs pass\n";
  print_theorem(rep, fmt, out);
  const bool ok = rep.ok() && dims.ok();
  if (fmt == Format::Records) out << "verdict check=all pass=" << (ok ? 1 : 0) << "\n";
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_example_qci(std::size_t m, std::size_t n, const std::string& q, std::size_t max_level, const Common& c,
                    std::ostream& out) {
  auto rep = examples::qci_report(m, n, parse_scalar(q), max_level, c.size_cap);
  const Format fmt = c.fmt();
  const std::string u = format_scalar(rep.bracket_vu_definition), ut = format_scalar(rep.bracket_vu_tradler);
  if (fmt == Format::Text) {
    out << "quantum complete intersection k[x]/(x^" << m << ") (x)^q k[y]/(y^" << n << "), q = " << format_scalar(rep.q)
        << "\n";
    out << "HH dimensions through level " << max_level << ":";
    for (auto d : rep.dims.level_totals) out << " " << d;
    out << "\n";
    print_decomposition(rep.dims, fmt, out);
    for (const auto* cl : {&rep.u, &rep.v, &rep.w})
      out << cl->name << " = " << cl->description << ", level " << cl->rep.level << ", degree "
          << algebra::format_degree(*cl->rep.degree) << "\n";
    out << "Delta(U) = " << (rep.delta_u_zero ? "0" : "nonzero") << "\n";
    out << "Delta(V) = " << format_scalar(rep.delta_v) << "\n";
    out << "Delta(W) = " << format_scalar(rep.delta_w) << "\n";
    out << "[V,U] = " << u << "*U (definition sign), " << ut << "*U (Tradler sign)\n";
    std::size_t passed = 0;
    for (const auto& p : rep.theorem.pairs) passed += p.pass ? 1 : 0;
    out << "BV product formula: " << passed << "/" << rep.theorem.pairs.size() << " pairs pass\n";
    print_theorem(rep.theorem, fmt, out);
  } else {
    out << "example kind=qci m=" << m << " n=" << n << " q=" << format_scalar(rep.q) << " max_level=" << max_level << "\n";
    for (std::size_t p = 0; p < rep.dims.level_totals.size(); ++p)
      out << "total level=" << p << " dim=" << rep.dims.level_totals[p] << "\n";
    print_decomposition(rep.dims, fmt, out);
    for (const auto* cl : {&rep.u, &rep.v, &rep.w})
      out << "named name=" << cl->name << " level=" << cl->rep.level << " degree=" << algebra::format_degree(*cl->rep.degree)
          << " description=\"" << cl->description << "\"\n";
    out << "delta name=U value=" << (rep.delta_u_zero ? "0" : "nonzero") << "\n";
    out << "delta name=V value=" << format_scalar(rep.delta_v) << "\n";
    out << "delta name=W value=" << format_scalar(rep.delta_w) << "\n";
    out << "bracket left=V right=U convention=definition value=" << u << "\n";
    out << "bracket left=V right=U convention=tradler value=" << ut << "\n";
    print_theorem(rep.theorem, fmt, out);
  }
  const bool ok = rep.theorem.ok() && rep.dims.ok();
  if (fmt == Format::Records) out << "verdict check=all pass=" << (ok ? 1 : 0) << "\n";
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild cohomology, BV operators and twisted tensor products over Q", "twistbv"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--size-cap", common.size_cap, "Largest cochain space (entries) a command may build");

  std::string path, left, right, bichar, output, classes, sign = "definition", kind, q = "2";
  std::size_t max_level = 3, m = 2, n = 2;
  bool reps = false, axioms = false;
  TwistArgs twist;

  auto* check = app.add_subcommand("check", "Validate an algebra file and its Frobenius form");
  check->add_option("file", path, "Algebra file")->required();

  auto* hh = app.add_subcommand("hh", "Graded dimensions of Hochschild cohomology");
  hh->add_option("--module", path, "Algebra file")->required();
  hh->add_option("--max-degree", max_level, "Highest cohomological level");
  hh->add_option("--twist", twist.side, "Coefficient twist")->check(CLI::IsMember({"none", "right", "left"}));
  hh->add_option("--twist-degree", twist.degree, "Twisting degree, comma separated");
  hh->add_option("--bichar", twist.bichar, "Bicharacter matrix, rows ';' and entries ','");
  hh->add_flag("--representatives", reps, "List class representatives");

  auto* bvc = app.add_subcommand("bv", "BV operator on Hochschild cohomology classes");
  bvc->add_option("--module", path, "Algebra file with gram block")->required();
  bvc->add_option("--max-degree", max_level, "Highest cohomological level");
  bvc->add_flag("--axioms", axioms, "Also check the BV axioms");

  auto* br = app.add_subcommand("bracket", "Gerstenhaber bracket of two classes");
  br->add_option("--module", path, "Algebra file with gram block")->required();
  br->add_option("--max-degree", max_level, "Highest cohomological level");
  br->add_option("--classes", classes, "Two class labels from the bv command, e.g. 1,3")->required();
  br->add_option("--convention", sign, "Bracket sign")->check(CLI::IsMember({"definition", "tradler"}));

  auto* tw = app.add_subcommand("twist", "Write the twisted tensor product of two algebra files");
  tw->add_option("--left", left, "Left factor")->required();
  tw->add_option("--right", right, "Right factor")->required();
  tw->add_option("--bichar", bichar, "Bicharacter matrix");
  tw->add_option("--output", output, "Output file (default stdout)");

  auto* vt = app.add_subcommand("verify-bv-tensor", "Verify the BV formula on a twisted tensor product");
  vt->add_option("--left", left, "Left factor")->required();
  vt->add_option("--right", right, "Right factor")->required();
  vt->add_option("--bichar", bichar, "Bicharacter matrix");
  vt->add_option("--max-degree", max_level, "Highest total level");

  auto* ex = app.add_subcommand("example", "Built-in examples");
  ex->add_option("kind", kind, "truncated or qci")->required()->check(CLI::IsMember({"truncated", "qci"}));
  ex->add_option("--m", m, "Truncation of the first factor");
  ex->add_option("--n", n, "Truncation (truncated) or of the second factor (qci)");
  ex->add_option("--q", q, "Quantum parameter p or p/q");
  ex->add_option("--max-degree", max_level, "Highest cohomological level");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*check) return cmd_check(path, common, out);
    if (*hh) return cmd_hh(path, max_level, twist, reps, common, out);
    if (*bvc) return cmd_bv(path, max_level, axioms, common, out);
    if (*br) return cmd_bracket(path, max_level, classes, sign, common, out);
    if (*tw) return cmd_twist(left, right, bichar, output, out);
    if (*vt) return cmd_verify(left, right, bichar, max_level, common, out);
    if (kind == "truncated") {
      io::AlgebraFile f;
      auto fr = examples::build_truncated(n);
      f.algebra = fr.algebra;
      f.gram = fr.gram;
      out << io::serialize_algebra(f);
      return kSuccess;
    }
    return cmd_example_qci(m, n, q, max_level, common, out);
  } catch (const SizeError& e) {
    err << "size refusal: " << e.what() << "\n";
    return kSizeRefusal;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const frobenius::ValidationError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace twistbv::cli
