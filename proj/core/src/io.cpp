#include "twistbv/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace twistbv::io {

ParseError::ParseError(std::size_t line_no, std::string field_name, const std::string& message)
    : InputError(line_no ? "line " + std::to_string(line_no) + " (" + field_name + "): " + message
                         : "(" + field_name + "): " + message),
      line(line_no),
      field(std::move(field_name)) {}

namespace {

struct Record {
  std::size_t line;
  std::string keyword;
  std::vector<std::string> args;
};

std::size_t parse_index(const Record& r, const std::string& tok) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(r.line, r.keyword, "expected a nonnegative integer, got '" + tok + "'");
  try {
    return std::stoul(tok);
  } catch (const std::exception&) {
    throw ParseError(r.line, r.keyword, "integer out of range: '" + tok + "'");
  }
}

long parse_long(const Record& r, const std::string& tok) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty()) throw ParseError(r.line, r.keyword, "expected an integer, got '" + tok + "'");
  return v;
}

Scalar parse_value(const Record& r, const std::string& tok) {
  try {
    return parse_scalar(tok);
  } catch (const InputError& e) {
    throw ParseError(r.line, r.keyword, std::string("bad rational '") + tok + "': " + e.what());
  }
}

void expect_args(const Record& r, std::size_t n) {
  if (r.args.size() != n)
    throw ParseError(r.line, r.keyword,
                     "expected " + std::to_string(n) + " arguments, got " + std::to_string(r.args.size()));
}

const Record* single(const std::map<std::string, std::vector<Record>>& recs, const std::string& key, bool required) {
  auto it = recs.find(key);
  if (it == recs.end()) {
    if (required) throw ParseError(0, key, "missing required record");
    return nullptr;
  }
  if (it->second.size() > 1) throw ParseError(it->second[1].line, key, "record given more than once");
  return &it->second.front();
}

// Rows indexed 0..rows-1, each given exactly once with cols values.
linalg::Matrix parse_rows(const std::vector<Record>& rows, std::size_t nrows, std::size_t ncols,
                          const std::string& key) {
  linalg::Matrix m(nrows, ncols);
  std::vector<bool> seen(nrows, false);
  for (const auto& r : rows) {
    expect_args(r, ncols + 1);
    std::size_t i = parse_index(r, r.args[0]);
    if (i >= nrows) throw ParseError(r.line, key, "row index " + std::to_string(i) + " out of range");
    if (seen[i]) throw ParseError(r.line, key, "row " + std::to_string(i) + " given twice");
    seen[i] = true;
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = parse_value(r, r.args[j + 1]);
  }
  for (std::size_t i = 0; i < nrows; ++i)
    if (!seen[i]) throw ParseError(rows.empty() ? 0 : rows.back().line, key, "row " + std::to_string(i) + " missing");
  return m;
}

}  // namespace

AlgebraFile parse_algebra(const std::string& text) {
  static const std::set<std::string> known{"field", "rank",  "basis",       "degree", "unit",
                                           "const", "gram",  "bichar_dims", "bichar"};
  std::map<std::string, std::vector<Record>> recs;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Record r{line_no, {}, {}};
    if (!(ls >> r.keyword)) continue;
    if (!known.count(r.keyword)) throw ParseError(line_no, r.keyword, "unknown record keyword");
    for (std::string tok; ls >> tok;) r.args.push_back(tok);
    recs[r.keyword].push_back(std::move(r));
  }

  const Record* field = single(recs, "field", true);
  expect_args(*field, 1);
  if (field->args[0] != "Q") throw ParseError(field->line, "field", "only the rationals 'Q' are supported");

  const Record* rank_rec = single(recs, "rank", true);
  expect_args(*rank_rec, 1);
  const std::size_t rank = parse_index(*rank_rec, rank_rec->args[0]);

  const Record* basis = single(recs, "basis", true);
  if (basis->args.empty()) throw ParseError(basis->line, "basis", "empty basis");
  std::vector<std::string> names = basis->args;
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    throw ParseError(basis->line, "basis", "duplicate basis name");
  const std::size_t dim = names.size();

  std::vector<algebra::Degree> degrees(dim);
  std::vector<bool> has_degree(dim, false);
  for (const auto& r : recs["degree"]) {
    expect_args(r, rank + 1);
    std::size_t i = parse_index(r, r.args[0]);
    if (i >= dim) throw ParseError(r.line, "degree", "basis index " + std::to_string(i) + " out of range");
    if (has_degree[i]) throw ParseError(r.line, "degree", "degree of basis element " + std::to_string(i) + " given twice");
    has_degree[i] = true;
    for (std::size_t g = 0; g < rank; ++g) degrees[i].push_back(parse_long(r, r.args[g + 1]));
  }
  for (std::size_t i = 0; i < dim; ++i)
    if (!has_degree[i]) throw ParseError(basis->line, "degree", "missing degree for basis element " + std::to_string(i));

  const Record* unit = single(recs, "unit", true);
  expect_args(*unit, 1);
  const std::size_t unit_index = parse_index(*unit, unit->args[0]);
  if (unit_index >= dim) throw ParseError(unit->line, "unit", "unit index out of range");

  AlgebraFile out;
  try {
    out.algebra = algebra::GradedAlgebra(rank, names, degrees, unit_index);
  } catch (const InputError& e) {
    throw ParseError(basis->line, "basis", e.what());
  }
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen_const;
  for (const auto& r : recs["const"]) {
    expect_args(r, 4);
    std::size_t i = parse_index(r, r.args[0]), j = parse_index(r, r.args[1]), k = parse_index(r, r.args[2]);
    if (i >= dim || j >= dim || k >= dim) throw ParseError(r.line, "const", "basis index out of range");
    if (!seen_const.insert({i, j, k}).second) throw ParseError(r.line, "const", "structure constant given twice");
    out.algebra.set_constant(i, j, k, parse_value(r, r.args[3]));
  }

  if (recs.count("gram")) out.gram = parse_rows(recs["gram"], dim, dim, "gram");

  const Record* bdims = single(recs, "bichar_dims", false);
  if (bdims) {
    expect_args(*bdims, 2);
    std::size_t rows = parse_index(*bdims, bdims->args[0]), cols = parse_index(*bdims, bdims->args[1]);
    algebra::Bicharacter t{parse_rows(recs["bichar"], rows, cols, "bichar")};
    try {
      algebra::validate_bicharacter(t);
    } catch (const InputError& e) {
      throw ParseError(bdims->line, "bichar", e.what());
    }
    out.bichar = std::move(t);
  } else if (recs.count("bichar")) {
    throw ParseError(recs["bichar"].front().line, "bichar", "bichar rows given without bichar_dims");
  }
  return out;
}

AlgebraFile load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "file", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string serialize_algebra(const AlgebraFile& file) {
  const auto& alg = file.algebra;
  std::ostringstream os;
  os << "field Q\n";
  os << "rank " << alg.grading_rank() << "\n";
  os << "basis";
  for (const auto& n : alg.names()) os << ' ' << n;
  os << "\n";
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    os << "degree " << i;
    for (long g : alg.degree(i)) os << ' ' << g;
    os << "\n";
  }
  os << "unit " << alg.unit_index() << "\n";
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      for (const auto& term : alg.product(i, j))
        os << "const " << i << ' ' << j << ' ' << term.index << ' ' << format_scalar(term.coeff) << "\n";
  auto rows = [&os](const char* key, const linalg::Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << key << ' ' << i;
      for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << format_scalar(m(i, j));
      os << "\n";
    }
  };
  if (file.gram) rows("gram", *file.gram);
  if (file.bichar) {
    os << "bichar_dims " << file.bichar->q.rows() << ' ' << file.bichar->q.cols() << "\n";
    rows("bichar", file.bichar->q);
  }
  return os.str();
}

}  // namespace twistbv::io
