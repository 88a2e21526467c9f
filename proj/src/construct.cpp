#include "cuspcodes/construct.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "cuspcodes/rng.hpp"

namespace cuspcodes {

unsigned PartitionType::degree() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0u); }

std::string PartitionType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out;
}

std::string PartitionType::label() const {
  for (auto d : parts)
    if (d > 9) return to_string();
  std::string out;
  for (auto d : parts) out += static_cast<char>('0' + d);
  return out;
}

namespace {

std::vector<unsigned> parse_uint_list(std::string_view text, std::string_view what) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::SyntaxError, "bad " + std::string(what) + " list '" + std::string(text) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

PartitionType PartitionType::parse(std::string_view text) {
  PartitionType t{parse_uint_list(text, "partition")};
  for (auto d : t.parts)
    if (d == 0) throw Error(ErrorCode::PartitionMismatch, "parts must be positive");
  return t;
}

std::vector<std::pair<unsigned, unsigned>> pair_order(std::size_t k) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned j = 1; j < k; ++j)
    for (unsigned i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

unsigned CuspCounts::count_for(unsigned i, unsigned j) const {
  if (i > j) std::swap(i, j);
  for (const auto& pc : pairs)
    if (pc.i == i && pc.j == j) return pc.n;
  throw Error(ErrorCode::PartitionMismatch, "no pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

CuspCounts count_direct(unsigned d, const PartitionType& parts) {
  if (d % 3 != 0) throw Error(ErrorCode::DegreeNotDivisibleBy3, "degree " + std::to_string(d));
  if (parts.parts.empty() || parts.degree() != d)
    throw Error(ErrorCode::PartitionMismatch, "parts " + parts.to_string() + " do not sum to " + std::to_string(d));
  for (auto x : parts.parts)
    if (x == 0) throw Error(ErrorCode::PartitionMismatch, "parts must be positive");
  CuspCounts out;
  out.degree = d;
  for (auto [i, j] : pair_order(parts.size())) {
    const unsigned n = parts.parts[i] * parts.parts[j] * d / 3;
    out.pairs.push_back({i, j, n});
    out.total += n;
  }
  return out;
}

CuspCounts count_residual(const std::vector<unsigned>& c, unsigned b) {
  if (c.empty()) throw Error(ErrorCode::PartitionMismatch, "no residual parts");
  const unsigned csum = std::accumulate(c.begin(), c.end(), 0u);
  for (auto ci : c)
    if (ci == 0 || 3 * ci < b)
      throw Error(ErrorCode::DegreeConstraintViolated, "need 3c_i >= b with c_i >= 1, got c_i=" + std::to_string(ci) +
                                                           " b=" + std::to_string(b));
  if (csum < b || b == 0)
    throw Error(ErrorCode::DegreeConstraintViolated, "need c >= b >= 1, got c=" + std::to_string(csum) + " b=" + std::to_string(b));
  CuspCounts out;
  out.degree = 3 * csum - b;
  for (auto [i, j] : pair_order(c.size())) {
    const unsigned n = 3 * c[i] * c[j] * (out.degree - b);
    out.pairs.push_back({i, j, n});
    out.total += n;
  }
  return out;
}

unsigned miyaoka_bound(unsigned d) { return d * (d - 1) * (d - 1) / 4; }

const std::vector<PartitionType>& tabulated_direct_types(unsigned d) {
  static const std::vector<PartitionType> six = [] {
    std::vector<PartitionType> v;
    for (const char* s : {"1,5", "2,4", "3,3", "1,1,4", "1,2,3", "2,2,2", "1,1,1,3", "1,1,2,2", "1,1,1,1,2", "1,1,1,1,1,1"})
      v.push_back(PartitionType::parse(s));
    return v;
  }();
  static const std::vector<PartitionType> nine = [] {
    std::vector<PartitionType> v;
    for (const char* s :
         {"1,8", "2,7", "1,1,7", "3,6", "4,5", "1,2,6", "1,1,1,6", "1,3,5", "1,4,4", "2,2,5", "1,1,2,5", "2,3,4",
          "1,1,1,1,5", "3,3,3", "1,1,3,4", "1,2,2,4", "1,2,3,3", "1,1,1,2,4", "2,2,2,3", "1,1,1,3,3", "1,1,1,1,1,4",
          "1,1,1,1,2,3", "1,1,1,1,1,1,3", "1,1,1,1,1,1,1,2", "1,1,1,1,1,1,1,1,1"})
      v.push_back(PartitionType::parse(s));
    return v;
  }();
  static const std::vector<PartitionType> none;
  return d == 6 ? six : d == 9 ? nine : none;
}

const std::vector<ResidualRow>& tabulated_residual_rows() {
  static const std::vector<ResidualRow> rows{
      {{1, 1}, 2}, {{1, 1}, 1}, {{1, 2}, 3}, {{1, 2}, 2}, {{1, 2}, 1}, {{1, 1, 1}, 3}, {{1, 1, 1}, 2}, {{1, 1, 1}, 1},
  };
  return rows;
}

std::string_view kind_name(RecipeKind k) {
  switch (k) {
    case RecipeKind::Direct: return "direct";
    case RecipeKind::Residual: return "residual";
    case RecipeKind::Fermat: return "fermat";
  }
  return "?";
}

CuspCounts SurfaceRecipe::expected_counts() const {
  switch (kind) {
    case RecipeKind::Direct: return count_direct(parts.degree(), parts);
    case RecipeKind::Residual: return count_residual(c, b);
    case RecipeKind::Fermat: return count_residual({1, 1, 1}, 3);
  }
  throw Error(ErrorCode::Unsupported, "unknown recipe kind");
}

SurfaceRecipe build_direct(const PartitionType& parts, const Field& field, std::uint64_t seed) {
  const unsigned d = parts.degree();
  count_direct(d, parts);  // validates
  SurfaceRecipe rec;
  rec.kind = RecipeKind::Direct;
  rec.field = field;
  rec.seed = seed;
  rec.parts = parts;
  MPoly prod = MPoly::constant(field, 1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    rec.s.push_back(random_homogeneous(field, parts.parts[i], derive_seed(seed, {1, i})));
    prod = prod * rec.s.back();
  }
  rec.shared = random_homogeneous(field, d / 3, derive_seed(seed, {2}));
  rec.f = prod - rec.shared.pow(3);
  return rec;
}

SurfaceRecipe build_residual(const std::vector<unsigned>& c, unsigned b, const Field& field, std::uint64_t seed) {
  count_residual(c, b);  // validates
  const unsigned csum = std::accumulate(c.begin(), c.end(), 0u);
  SurfaceRecipe rec;
  rec.kind = RecipeKind::Residual;
  rec.field = field;
  rec.seed = seed;
  rec.c = c;
  rec.b = b;
  rec.r = random_homogeneous(field, b, derive_seed(seed, {3}));
  rec.t = random_homogeneous(field, csum - b, derive_seed(seed, {4}));
  MPoly prod_r = MPoly::constant(field, 1);
  MPoly prod_s = MPoly::constant(field, 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    rec.parts.parts.push_back(3 * c[i]);
    rec.r_parts.push_back(random_homogeneous(field, c[i], derive_seed(seed, {5, i})));
    rec.t_parts.push_back(random_homogeneous(field, 3 * c[i] - b, derive_seed(seed, {6, i})));
    rec.s.push_back(rec.r_parts[i].pow(3) + rec.r * rec.t_parts[i]);
    prod_r = prod_r * rec.r_parts[i];
    prod_s = prod_s * rec.s[i];
  }
  rec.shared = prod_r + rec.r * rec.t;
  rec.f = mp_divide_exact(prod_s - rec.shared.pow(3), rec.r);
  return rec;
}

MPoly fermat_expanded(const std::array<Fel, 3>& lambda, const Field& field) {
  auto cube = [&](int i) {
    Exponent e{0, 0, 0, 0};
    e[static_cast<std::size_t>(i)] = 3;
    return MPoly::monomial(Fel::one(field), e);
  };
  MPoly r(field);
  for (int i = 0; i < kVars; ++i) r += cube(i);
  const Fel l1 = lambda[0].embed(field), l2 = lambda[1].embed(field), l3 = lambda[2].embed(field);
  const MPoly x1 = cube(1), x2 = cube(2), x3 = cube(3);
  MPoly f = x2 * x3 * l1 + x1 * x3 * l2 + x1 * x2 * l3;
  f += (x3 * (l1 * l2) + x2 * (l1 * l3) + x1 * (l2 * l3)) * r;
  f += r * r * (l1 * l2 * l3);
  return f;
}

SurfaceRecipe fermat_family(const std::array<Fel, 3>& lambda, const Field& field) {
  for (int i = 0; i < 3; ++i)
    if (lambda[i].is_zero()) throw Error(ErrorCode::ZeroLambda, "lambda_" + std::to_string(i + 1) + " = 0");
  SurfaceRecipe rec;
  rec.kind = RecipeKind::Fermat;
  rec.field = field;
  rec.c = {1, 1, 1};
  rec.b = 3;
  rec.parts = PartitionType{{3, 3, 3}};
  rec.r = MPoly(field);
  for (int i = 0; i < kVars; ++i) {
    Exponent e{0, 0, 0, 0};
    e[static_cast<std::size_t>(i)] = 3;
    rec.r.add_term(e, Fel::one(field));
  }
  rec.shared = MPoly::monomial(Fel::one(field), Exponent{0, 1, 1, 1});
  rec.t = MPoly(field);
  MPoly prod = MPoly::constant(field, 1);
  for (int i = 0; i < 3; ++i) {
    rec.lambda.push_back(lambda[i].embed(field));
    rec.r_parts.push_back(MPoly::variable(field, i + 1));
    rec.t_parts.push_back(MPoly::constant(rec.lambda.back()));
    rec.s.push_back(rec.r_parts.back().pow(3) + rec.r * rec.lambda.back());
    prod = prod * rec.s.back();
  }
  rec.f = mp_divide_exact(prod - rec.shared.pow(3), rec.r);
  if (!(rec.f == fermat_expanded(lambda, field)))
    throw Error(ErrorCode::Unsupported, "Fermat quotient disagrees with its expanded form");
  return rec;
}

// ---------------------------------------------------------------------------

namespace {

void write_poly(const std::filesystem::path& path, const MPoly& f) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::Unsupported, "cannot write " + path.string());
  os << "# coeff e0 e1 e2 e3\n" << mp_format(f);
}

MPoly read_poly(const std::filesystem::path& path, const Field& field) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::Unsupported, "cannot read " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return mp_parse(ss.str(), field);
}

std::string join(const std::vector<unsigned>& v) { return PartitionType{v}.to_string(); }

}  // namespace

void write_recipe(const SurfaceRecipe& rec, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream m(dir / "manifest.txt");
  if (!m) throw Error(ErrorCode::Unsupported, "cannot write manifest in " + dir.string());
  m << "kind=" << kind_name(rec.kind) << '\n';
  m << "parts=" << rec.parts.to_string() << '\n';
  if (rec.kind != RecipeKind::Direct) {
    m << "c=" << join(rec.c) << '\n';
    m << "b=" << rec.b << '\n';
  }
  m << "prime=" << rec.field->characteristic() << '\n';
  m << "extension=" << rec.field->degree() << '\n';
  m << "seed=" << rec.seed << '\n';
  m << "degree=" << rec.degree() << '\n';
  if (!rec.lambda.empty()) {
    m << "lambda=";
    for (std::size_t i = 0; i < rec.lambda.size(); ++i) m << (i ? "," : "") << rec.lambda[i].residue();
    m << '\n';
  }
  write_poly(dir / "f.poly", rec.f);
  write_poly(dir / "s.poly", rec.shared);
  for (std::size_t i = 0; i < rec.s.size(); ++i) write_poly(dir / ("s" + std::to_string(i + 1) + ".poly"), rec.s[i]);
  if (rec.kind != RecipeKind::Direct) {
    write_poly(dir / "r.poly", rec.r);
    write_poly(dir / "t.poly", rec.t);
    for (std::size_t i = 0; i < rec.r_parts.size(); ++i) {
      write_poly(dir / ("r" + std::to_string(i + 1) + ".poly"), rec.r_parts[i]);
      write_poly(dir / ("t" + std::to_string(i + 1) + ".poly"), rec.t_parts[i]);
    }
  }
}

SurfaceRecipe read_recipe(const std::filesystem::path& dir) {
  std::ifstream is(dir / "manifest.txt");
  if (!is) throw Error(ErrorCode::Unsupported, "no manifest in " + dir.string());
  std::map<std::string, std::string> kv;
  for (std::string line; std::getline(is, line);) {
    const auto eq = line.find('=');
    if (eq == std::string::npos || line.empty() || line[0] == '#') continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto need = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorCode::SyntaxError, "manifest lacks '" + key + "'");
    return it->second;
  };
  if (need("extension") != "1") throw Error(ErrorCode::Unsupported, "recipes over extension fields");
  SurfaceRecipe rec;
  rec.field = FieldCtx::make(std::stoull(need("prime")));
  rec.seed = std::stoull(need("seed"));
  const std::string& kind = need("kind");
  rec.kind = kind == "direct" ? RecipeKind::Direct : kind == "residual" ? RecipeKind::Residual : RecipeKind::Fermat;
  rec.parts = PartitionType::parse(need("parts"));
  if (rec.kind != RecipeKind::Direct) {
    rec.c = parse_uint_list(need("c"), "c");
    rec.b = static_cast<unsigned>(std::stoul(need("b")));
  }
  if (auto it = kv.find("lambda"); it != kv.end())
    for (auto v : parse_uint_list(it->second, "lambda")) rec.lambda.push_back(Fel::from_residue(rec.field, v));
  rec.f = read_poly(dir / "f.poly", rec.field);
  rec.shared = read_poly(dir / "s.poly", rec.field);
  for (std::size_t i = 0; i < rec.parts.size(); ++i)
    rec.s.push_back(read_poly(dir / ("s" + std::to_string(i + 1) + ".poly"), rec.field));
  if (rec.kind != RecipeKind::Direct) {
    rec.r = read_poly(dir / "r.poly", rec.field);
    rec.t = read_poly(dir / "t.poly", rec.field);
    for (std::size_t i = 0; i < rec.c.size(); ++i) {
      rec.r_parts.push_back(read_poly(dir / ("r" + std::to_string(i + 1) + ".poly"), rec.field));
      rec.t_parts.push_back(read_poly(dir / ("t" + std::to_string(i + 1) + ".poly"), rec.field));
    }
  }
  return rec;
}

}  // namespace cuspcodes
