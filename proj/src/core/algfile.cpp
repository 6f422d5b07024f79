#include "algfile.hpp"

#include <fstream>
#include <sstream>

namespace algint {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  raise(errc::parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

int parse_int(const std::string& tok, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) parse_fail(line, "bad integer '" + tok + "'");
    return v;
  } catch (const std::exception&) {
    parse_fail(line, "bad integer '" + tok + "'");
  }
}

} // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  AlgebraFile f;
  bool saw_name = false, saw_mode = false, saw_dim = false, saw_labels = false;
  bool saw_entries = false, saw_group = false, saw_catalog = false;

  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    auto tok = split_tokens(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    if (kw == "algebra") {
      if (tok.size() != 2) parse_fail(lineno, "expected: algebra NAME");
      if (saw_name) parse_fail(lineno, "duplicate 'algebra' line");
      f.name = tok[1];
      saw_name = true;
    } else if (kw == "mode") {
      if (tok.size() != 2 || (tok[1] != "exact" && tok[1] != "approx"))
        parse_fail(lineno, "expected: mode exact|approx");
      if (saw_mode) parse_fail(lineno, "duplicate 'mode' line");
      f.mode = tok[1] == "exact" ? Mode::exact : Mode::approx;
      saw_mode = true;
    } else if (kw == "dim") {
      if (tok.size() != 2) parse_fail(lineno, "expected: dim N");
      if (saw_dim) parse_fail(lineno, "duplicate 'dim' line");
      f.dim = parse_int(tok[1], lineno);
      if (f.dim <= 0) parse_fail(lineno, "dimension must be positive");
      saw_dim = true;
    } else if (kw == "labels") {
      if (tok.size() < 2) parse_fail(lineno, "expected: labels l0 l1 ...");
      if (saw_labels) parse_fail(lineno, "duplicate 'labels' line");
      f.labels.assign(tok.begin() + 1, tok.end());
      saw_labels = true;
    } else if (kw == "identity") {
      if (f.identity_label || f.identity_coeffs)
        parse_fail(lineno, "duplicate 'identity' line");
      if (tok.size() == 2) {
        f.identity_label = tok[1];
      } else if (tok.size() >= 3 && tok[1] == "coeffs") {
        f.identity_coeffs = std::vector<std::string>(tok.begin() + 2, tok.end());
      } else {
        parse_fail(lineno, "expected: identity LABEL | identity coeffs c0 ...");
      }
    } else if (kw == "entry") {
      if (tok.size() != 5)
        parse_fail(lineno, "expected: entry li lj lk SCALAR");
      f.entries.push_back({tok[1], tok[2], tok[3], tok[4], lineno});
      saw_entries = true;
    } else if (kw == "group") {
      if (tok.size() < 2) parse_fail(lineno, "incomplete 'group' line");
      saw_group = true;
      const std::string& sub = tok[1];
      if (sub == "elements") {
        if (tok.size() < 3) parse_fail(lineno, "expected: group elements n1 ...");
        if (!f.group_elements.empty())
          parse_fail(lineno, "duplicate 'group elements' line");
        f.group_elements.assign(tok.begin() + 2, tok.end());
      } else if (sub == "mul") {
        if (tok.size() != 5) parse_fail(lineno, "expected: group mul a b c");
        f.group_mul.push_back({tok[2], tok[3], tok[4], lineno});
      } else if (sub == "cocycle") {
        if (tok.size() != 5)
          parse_fail(lineno, "expected: group cocycle a b SCALAR");
        f.group_cocycle.push_back({tok[2], tok[3], tok[4], lineno});
      } else {
        parse_fail(lineno, "unknown group directive '" + sub + "'");
      }
    } else if (kw == "catalog") {
      if (saw_catalog) parse_fail(lineno, "duplicate 'catalog' line");
      if (tok.size() < 2) parse_fail(lineno, "expected: catalog FAMILY [key=value ...]");
      saw_catalog = true;
      f.catalog_family = tok[1];
      for (size_t i = 2; i < tok.size(); ++i) {
        auto eq = tok[i].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tok[i].size())
          parse_fail(lineno, "expected key=value, got '" + tok[i] + "'");
        f.catalog_params[tok[i].substr(0, eq)] = tok[i].substr(eq + 1);
      }
    } else {
      parse_fail(lineno, "unknown directive '" + kw + "'");
    }
  }

  if (!saw_name) raise(errc::parse, "line 1: missing 'algebra NAME' line");
  int bodies = (saw_entries ? 1 : 0) + (saw_group ? 1 : 0) + (saw_catalog ? 1 : 0);
  if (bodies != 1)
    raise(errc::parse,
          "exactly one of {entry lines, group block, catalog block} must be present");
  f.body = saw_entries ? AlgebraFile::Body::entries
           : saw_group ? AlgebraFile::Body::group
                       : AlgebraFile::Body::catalog;

  if (f.body == AlgebraFile::Body::entries) {
    if (!saw_dim) raise(errc::parse, "explicit algebra needs a 'dim' line");
    if (!saw_labels) raise(errc::parse, "explicit algebra needs a 'labels' line");
    if (static_cast<int>(f.labels.size()) != f.dim)
      raise(errc::parse, "label count does not match dim");
    if (!f.identity_label && !f.identity_coeffs)
      raise(errc::parse, "explicit algebra needs an 'identity' line");
  }
  // catalog mode=... parameter overrides the file-level mode line.
  if (f.body == AlgebraFile::Body::catalog) {
    auto it = f.catalog_params.find("mode");
    if (it != f.catalog_params.end()) {
      if (it->second == "exact")
        f.mode = Mode::exact;
      else if (it->second == "approx")
        f.mode = Mode::approx;
      else
        raise(errc::parse, "catalog mode must be exact or approx");
    }
  }
  return f;
}

namespace {

int label_index(const std::vector<std::string>& labels, const std::string& l,
                int line) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return static_cast<int>(i);
  parse_fail(line, "reference to undeclared label '" + l + "'");
}

AlgebraPtr realize_entries(const AlgebraFile& f) {
  std::vector<FEntry> entries;
  for (const auto& e : f.entries) {
    int i = label_index(f.labels, e.i, e.line);
    int j = label_index(f.labels, e.j, e.line);
    int k = label_index(f.labels, e.k, e.line);
    Scalar v;
    try {
      v = Scalar::parse(e.scalar, f.mode);
    } catch (const error& err) {
      parse_fail(e.line, err.what());
    }
    entries.push_back({i, j, k, v});
  }
  StructureConstants sc(f.dim, f.mode, entries);
  if (f.identity_label) {
    int id = label_index(f.labels, *f.identity_label, 0);
    return Algebra::create(f.name, f.labels, std::move(sc), id, f.mode);
  }
  if (static_cast<int>(f.identity_coeffs->size()) != f.dim)
    raise(errc::parse, "identity coefficient count does not match dim");
  Vec id = zero_vec(f.dim, f.mode);
  for (int i = 0; i < f.dim; ++i) id[i] = Scalar::parse((*f.identity_coeffs)[i], f.mode);
  return Algebra::create_with_identity_element(f.name, f.labels, std::move(sc), id,
                                               f.mode);
}

AlgebraPtr realize_group(const AlgebraFile& f) {
  const auto& names = f.group_elements;
  const int n = static_cast<int>(names.size());
  if (n == 0) raise(errc::parse, "group body needs a 'group elements' line");

  std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
  for (const auto& m : f.group_mul) {
    int a = label_index(names, m.a, m.line);
    int b = label_index(names, m.b, m.line);
    int c = label_index(names, m.c, m.line);
    if (mul[a][b] != -1)
      parse_fail(m.line, "duplicate product for (" + m.a + ", " + m.b + ")");
    mul[a][b] = c;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul[a][b] < 0)
        raise(errc::parse, "group table is missing the product " + names[a] +
                               " * " + names[b]);
  GroupTable table = GroupTable::from_table(names, std::move(mul));

  Matrix phases(n, n, f.mode);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) phases.at(a, b) = Scalar::one(f.mode);
  for (const auto& c : f.group_cocycle) {
    int a = label_index(names, c.a, c.line);
    int b = label_index(names, c.b, c.line);
    try {
      phases.at(a, b) = Scalar::parse(c.phase, f.mode);
    } catch (const error& err) {
      parse_fail(c.line, err.what());
    }
  }
  auto alg = group_algebra(table, Cocycle::from_phases(table, std::move(phases)),
                           f.mode);
  // Keep the user's chosen name.
  std::vector<FEntry> entries = alg->f().entries();
  return Algebra::create(f.name, alg->labels(),
                         StructureConstants(alg->dim(), f.mode, entries),
                         alg->identity_index(), f.mode);
}

int require_int_param(const AlgebraFile& f, const std::string& key) {
  auto it = f.catalog_params.find(key);
  if (it == f.catalog_params.end())
    raise(errc::parse, "catalog " + f.catalog_family + " needs " + key + "=...");
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    raise(errc::parse, "bad integer for catalog parameter " + key);
  }
}

AlgebraPtr realize_catalog(const AlgebraFile& f) {
  const std::string& fam = f.catalog_family;
  AlgebraPtr alg;
  if (fam == "paragrassmann") {
    alg = paragrassmann(require_int_param(f, "p"), f.mode);
  } else if (fam == "matrix") {
    alg = matrix_algebra(require_int_param(f, "n"), f.mode);
  } else if (fam == "grassmann") {
    alg = grassmann(require_int_param(f, "n"), f.mode);
  } else if (fam == "cyclic") {
    int n = require_int_param(f, "n");
    auto g = cyclic_group(n);
    auto it = f.catalog_params.find("cocycle");
    if (it != f.catalog_params.end() && it->second == "roots") {
      if (f.mode != Mode::approx)
        raise(errc::parse, "cocycle=roots requires mode=approx");
      alg = group_algebra(g, root_of_unity_cocycle(g, n), f.mode);
    } else if (it == f.catalog_params.end() || it->second == "trivial") {
      alg = group_algebra(g, f.mode);
    } else {
      raise(errc::parse, "unknown cocycle '" + it->second + "' for cyclic");
    }
  } else if (fam == "s3") {
    alg = group_algebra(symmetric3(), f.mode);
  } else if (fam == "klein4") {
    auto g = klein4();
    auto it = f.catalog_params.find("cocycle");
    if (it != f.catalog_params.end() && it->second == "pauli")
      alg = group_algebra(g, pauli_cocycle(g, f.mode), f.mode);
    else if (it == f.catalog_params.end() || it->second == "trivial")
      alg = group_algebra(g, f.mode);
    else
      raise(errc::parse, "unknown cocycle '" + it->second + "' for klein4");
  } else {
    raise(errc::parse, "unknown catalog family '" + fam + "'");
  }
  return alg;
}

} // namespace

AlgebraPtr realize(const AlgebraFile& f) {
  switch (f.body) {
    case AlgebraFile::Body::entries:
      return realize_entries(f);
    case AlgebraFile::Body::group:
      return realize_group(f);
    case AlgebraFile::Body::catalog:
      return realize_catalog(f);
  }
  raise(errc::internal, "unreachable");
}

AlgebraPtr load_algebra_text(const std::string& text) {
  return realize(parse_algebra_file(text));
}

AlgebraPtr load_algebra_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_algebra_text(buf.str());
}

std::string emit_algebra(const Algebra& a) {
  std::ostringstream os;
  os << "algebra " << (a.name().empty() ? "unnamed" : a.name()) << "\n";
  os << "mode " << to_string(a.mode()) << "\n";
  os << "dim " << a.dim() << "\n";
  os << "labels";
  for (const auto& l : a.labels()) os << " " << l;
  os << "\n";
  os << "identity " << a.label(a.identity_index()) << "\n";
  for (const auto& e : a.f().entries())
    os << "entry " << a.label(e.i) << " " << a.label(e.j) << " " << a.label(e.k)
       << " " << e.value.to_string() << "\n";
  return os.str();
}

} // namespace algint
