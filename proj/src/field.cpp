#include "dtheta/field.hpp"

#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include "dtheta/constants.hpp"
#include "dtheta/error.hpp"
#include "dtheta/gamma.hpp"
#include "dtheta/zeta.hpp"

namespace dtheta {

struct FieldDescriptor::Cache {
  std::once_flag once;
  FieldConstants constants;
};

const std::vector<std::int64_t>& FieldDescriptor::file_coefficients() const {
  if (!table_) throw UnsupportedError("field has no coefficient table");
  return *table_;
}

const FieldConstants& FieldDescriptor::constants() const {
  require_abelian("field constants");
  std::call_once(cache_->once, [this] {
    cache_->constants.h = residue_constant(*this);
    cache_->constants.c = laurent_constant(*this);
  });
  return cache_->constants;
}

void FieldDescriptor::require_abelian(const char* operation) const {
  if (!is_abelian())
    throw UnsupportedError(std::string(operation) +
                           " needs analytic continuation; coefficient-file fields are limited to Re(s) > 1.5");
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string strip_comment(std::string line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

long long parse_integer(const std::string& token, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
  if (used != token.size()) throw ParseError("expected an integer, got '" + token + "'", line);
  return v;
}

}  // namespace

std::vector<DirichletCharacter> parse_characters(const std::string& text) {
  std::vector<DirichletCharacter> out;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag, q_tok, m_tok, table_tok, extra;
    ls >> tag >> q_tok >> m_tok >> table_tok;
    if (tag != "char") throw ParseError("expected 'char <q> <m> <e_1>,...,<e_q>'", line_no);
    if (table_tok.empty()) throw ParseError("truncated character line", line_no);
    if (ls >> extra) throw ParseError("trailing data after exponent table", line_no);
    const long long q = parse_integer(q_tok, line_no);
    const long long m = parse_integer(m_tok, line_no);
    if (q < 1 || q > 1000000) throw ParseError("modulus out of range", line_no);
    if (m < 1 || m > 1000000) throw ParseError("order out of range", line_no);
    std::vector<int> ex;
    std::size_t pos = 0;
    while (pos <= table_tok.size()) {
      const auto comma = table_tok.find(',', pos);
      const std::string tok =
          table_tok.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw ParseError("empty exponent entry", line_no);
      const long long e = parse_integer(tok, line_no);
      if (e < -1 || e >= m) throw ParseError("exponent " + tok + " outside [-1, m)", line_no);
      ex.push_back(static_cast<int>(e));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (static_cast<long long>(ex.size()) != q)
      throw ParseError("expected " + std::to_string(q) + " exponents, got " + std::to_string(ex.size()),
                       line_no);
    try {
      out.emplace_back(static_cast<int>(q), static_cast<int>(m), std::move(ex));
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")");
    }
  }
  if (out.empty()) throw ParseError("no characters found", 0);
  return out;
}

std::vector<DirichletCharacter> load_characters(const std::string& path) {
  return parse_characters(read_file(path));
}

std::vector<std::int64_t> parse_coefficients(const std::string& text) {
  std::vector<std::int64_t> table{0};
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  long long last = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string n_tok, a_tok, extra;
    ls >> n_tok >> a_tok;
    if (a_tok.empty()) throw ParseError("expected '<n> <a_n>'", line_no);
    if (ls >> extra) throw ParseError("trailing data", line_no);
    const long long n = parse_integer(n_tok, line_no);
    const long long a = parse_integer(a_tok, line_no);
    if (last == 0 && n != 1) throw ParseError("coefficients must start at n = 1", line_no);
    if (n <= last) throw ParseError("n must be strictly increasing", line_no);
    if (n > 50000000) throw ParseError("n too large", line_no);
    if (a < 0) throw ParseError("ideal counts must be non-negative", line_no);
    table.resize(n + 1, 0);
    table[n] = a;
    last = n;
  }
  if (last == 0) throw ParseError("empty coefficient file", 0);
  if (table[1] != 1) throw ValidationError("coefficient file must have a(1) = 1");
  return table;
}

FieldDescriptor make_field_abelian(std::vector<DirichletCharacter> characters, std::string name) {
  if (characters.empty()) throw ValidationError("field needs at least one character");
  for (auto& chi : characters) chi = chi.primitive();
  int principal = 0, odd = 0;
  for (const auto& chi : characters) {
    if (chi.is_principal()) ++principal;
    if (!chi.is_even()) ++odd;
  }
  if (principal != 1) throw ValidationError("field needs exactly one principal character");
  auto contains = [&](const DirichletCharacter& x) {
    for (const auto& chi : characters)
      if (chi.same_primitive(x)) return true;
    return false;
  };
  for (std::size_t i = 0; i < characters.size(); ++i) {
    for (std::size_t j = i + 1; j < characters.size(); ++j)
      if (characters[i].same_primitive(characters[j])) throw ValidationError("duplicate character");
    if (!contains(characters[i].conjugate())) throw ValidationError("characters not closed under conjugation");
    for (std::size_t j = 0; j <= i; ++j)
      if (!contains(characters[i] * characters[j]))
        throw ValidationError("characters do not form a group (product missing)");
  }
  const int d = static_cast<int>(characters.size());
  if (odd != 0 && 2 * odd != d)
    throw ValidationError("odd-character count must be 0 (totally real) or d/2 (totally complex)");

  FieldDescriptor f;
  f.r2_ = odd;
  f.r1_ = d - 2 * f.r2_;
  std::int64_t disc = 1;
  for (const auto& chi : characters) disc *= chi.modulus();
  f.disc_ = disc;
  f.name_ = std::move(name);
  f.characters_ = std::move(characters);
  f.cache_ = std::make_shared<FieldDescriptor::Cache>();
  return f;
}

FieldDescriptor make_field_from_table(std::vector<std::int64_t> table, int r1, int r2, std::int64_t disc,
                                      std::string name) {
  if (r1 < 0 || r2 < 0 || r1 + 2 * r2 < 1) throw ValidationError("invalid signature");
  if (disc < 1) throw ValidationError("discriminant must be positive");
  if (table.size() < 2 || table[1] != 1) throw ValidationError("coefficient table must have a(1) = 1");
  FieldDescriptor f;
  f.r1_ = r1;
  f.r2_ = r2;
  f.disc_ = disc;
  f.name_ = std::move(name);
  f.table_ = std::make_shared<const std::vector<std::int64_t>>(std::move(table));
  f.cache_ = std::make_shared<FieldDescriptor::Cache>();
  return f;
}

FieldDescriptor make_field_from_coeffs(const std::string& path, int r1, int r2, std::int64_t disc) {
  return make_field_from_table(parse_coefficients(read_file(path)), r1, r2, disc, path);
}

FieldDescriptor field_rationals() { return make_field_abelian({DirichletCharacter::principal()}, "Q"); }

FieldDescriptor field_quadratic(std::int64_t disc) {
  return make_field_abelian({DirichletCharacter::principal(), DirichletCharacter::quadratic(disc)},
                            "quad:" + std::to_string(disc));
}

FieldDescriptor field_cubic7() {
  return make_field_abelian({DirichletCharacter::principal(), DirichletCharacter::power_residue(7, 3, 1),
                             DirichletCharacter::power_residue(7, 3, 2)},
                            "cubic7");
}

FieldDescriptor field_cyclotomic5() {
  std::vector<DirichletCharacter> chars{DirichletCharacter::principal()};
  for (int t = 1; t < 4; ++t) chars.push_back(DirichletCharacter::power_residue(5, 4, t));
  return make_field_abelian(std::move(chars), "zeta5");
}

FieldDescriptor field_quartic16() {
  // (Z/16)^* = <-1> x <5>; even characters send -1 to 1 and 5 to i^t.
  std::vector<DirichletCharacter> chars;
  for (int t = 0; t < 4; ++t) {
    std::vector<int> ex(16, DirichletCharacter::kZero);
    std::int64_t g = 1;
    for (int j = 0; j < 4; ++j) {
      ex[g - 1] = (j * t) % 4;
      ex[16 - g - 1] = (j * t) % 4;
      g = g * 5 % 16;
    }
    chars.emplace_back(16, 4, std::move(ex));
  }
  return make_field_abelian(std::move(chars), "quartic16");
}

FieldDescriptor resolve_field(const std::string& spec) {
  if (spec == "Q") return field_rationals();
  if (spec == "cubic7") return field_cubic7();
  if (spec == "zeta5") return field_cyclotomic5();
  if (spec == "quartic16") return field_quartic16();
  auto quad_from_squarefree = [](long long m) -> std::int64_t {
    if (m == 0 || m == 1) throw ValidationError("sqrt<m>: m must be a squarefree integer other than 0, 1");
    for (long long p = 2; p * p <= std::llabs(m); ++p)
      if (m % (p * p) == 0) throw ValidationError("sqrt<m>: m must be squarefree");
    const long long r = ((m % 4) + 4) % 4;
    return r == 1 ? m : 4 * m;
  };
  if (spec.rfind("sqrt", 0) == 0 && spec.size() > 4) {
    const auto f = field_quadratic(quad_from_squarefree(parse_integer(spec.substr(4), 0)));
    return make_field_abelian(f.characters(), spec);
  }
  if (spec.rfind("quad:", 0) == 0) return field_quadratic(parse_integer(spec.substr(5), 0));
  auto chars = load_characters(spec);
  return make_field_abelian(std::move(chars), spec);
}

cplx dedekind_zeta(cplx s, const FieldDescriptor& field) {
  if (field.is_abelian()) {
    cplx prod = 1.0;
    for (const auto& chi : field.characters()) prod *= dirichlet_l(s, chi);
    return prod;
  }
  if (!(s.real() > 1.5))
    throw UnsupportedError("dedekind_zeta: coefficient-file fields are limited to Re(s) > 1.5");
  const auto& a = field.file_coefficients();
  cplx sum = 0.0;
  for (std::size_t n = 1; n < a.size(); ++n)
    if (a[n] != 0) sum += static_cast<double>(a[n]) * std::exp(-s * std::log(static_cast<double>(n)));
  return sum;
}

cplx log_gamma_factor(const FieldDescriptor& field, cplx s) {
  const double d = field.degree();
  const double log_a =
      std::log(static_cast<double>(field.disc())) - field.r2() * std::log(4.0) - d * std::log(kPi);
  cplx v = 0.5 * s * log_a;
  if (field.r1() > 0) v += static_cast<double>(field.r1()) * log_gamma(0.5 * s);
  if (field.r2() > 0) v += static_cast<double>(field.r2()) * log_gamma(s);
  return v;
}

cplx completed_zeta(const FieldDescriptor& field, cplx s) {
  field.require_abelian("completed_zeta");
  return std::exp(log_gamma_factor(field, s)) * dedekind_zeta(s, field);
}

}  // namespace dtheta
