#include "wlp/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "wlp/errors.hpp"
#include "wlp/indpoly.hpp"
#include "wlp/rank.hpp"

namespace wlp {

// --- Monomial ----------------------------------------------------------------

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  std::vector<Exponent> out;
  out.reserve(exponents.size());
  for (unsigned e : exponents) {
    if (e > 255) throw DomainError("exponent " + std::to_string(e) + " exceeds 255");
    out.push_back(static_cast<Exponent>(e));
  }
  return Monomial(std::move(out));
}

unsigned Monomial::degree() const noexcept {
  unsigned total = 0;
  for (Exponent e : exponents_) total += e;
  return total;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (other.exponents_.size() != exponents_.size()) return false;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (exponents_[j] > other.exponents_[j]) return false;
  }
  return true;
}

Monomial Monomial::times_variable(std::size_t j) const {
  if (j >= exponents_.size()) throw DomainError("variable index out of range");
  if (exponents_[j] == 255) throw DomainError("exponent would exceed 255");
  Monomial out = *this;
  ++out.exponents_[j];
  return out;
}

std::optional<std::size_t> Monomial::pure_power_variable() const noexcept {
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (exponents_[j] == 0) continue;
    if (found) return std::nullopt;
    found = j;
  }
  return found;
}

std::string Monomial::to_string(std::span<const std::string> labels) const {
  std::string out;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (exponents_[j] == 0) continue;
    if (!out.empty()) out += " ";
    out += j < labels.size() ? labels[j] : "x_" + std::to_string(j + 1);
    if (exponents_[j] > 1) out += "^" + std::to_string(exponents_[j]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 32));
}

bool canonical_before(const Monomial& a, const Monomial& b) noexcept {
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

// --- MonomialAlgebra ---------------------------------------------------------

MonomialAlgebra::MonomialAlgebra(std::size_t num_vars, std::vector<Monomial> generators,
                                 std::vector<std::string> labels,
                                 std::vector<std::vector<Monomial>> bases)
    : num_vars_(num_vars),
      generators_(std::move(generators)),
      labels_(std::move(labels)),
      bases_(std::move(bases)) {
  if (labels_.empty()) {
    for (std::size_t j = 1; j <= num_vars_; ++j) labels_.push_back("x_" + std::to_string(j));
  }
  if (labels_.size() != num_vars_) throw DomainError("label count differs from variable count");
  index_.resize(bases_.size());
  for (std::size_t d = 0; d < bases_.size(); ++d) {
    index_[d].reserve(bases_[d].size());
    for (std::size_t k = 0; k < bases_[d].size(); ++k) index_[d].emplace(bases_[d][k], k);
  }
}

const std::vector<Monomial>& MonomialAlgebra::basis(std::size_t d) const noexcept {
  static const std::vector<Monomial> kEmpty;
  return d < bases_.size() ? bases_[d] : kEmpty;
}

std::optional<std::size_t> MonomialAlgebra::index_of(const Monomial& m) const {
  if (m.num_vars() != num_vars_) return std::nullopt;
  const unsigned d = m.degree();
  if (d >= index_.size()) return std::nullopt;
  if (auto it = index_[d].find(m); it != index_[d].end()) return it->second;
  return std::nullopt;
}

bool MonomialAlgebra::is_standard(const Monomial& m) const noexcept {
  if (m.num_vars() != num_vars_) return false;
  return std::none_of(generators_.begin(), generators_.end(),
                      [&](const Monomial& g) { return g.divides(m); });
}

MonomialAlgebra from_graph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < n; ++v) {
    Monomial square(n);
    gens.push_back(square.times_variable(v).times_variable(v));
  }
  for (const auto& [u, v] : g.edges()) {
    gens.push_back(Monomial(n).times_variable(u).times_variable(v));
  }

  std::vector<std::vector<Monomial>> bases;
  for (const auto& sets : independent_sets_by_size(g)) {
    std::vector<Monomial> degree_basis;
    degree_basis.reserve(sets.size());
    for (const auto& s : sets) {
      std::vector<Monomial::Exponent> e(n, 0);
      s.for_each([&](std::size_t v) { e[v] = 1; });
      degree_basis.emplace_back(std::move(e));
    }
    bases.push_back(std::move(degree_basis));
  }

  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back(g.label(v));
  return MonomialAlgebra(n, std::move(gens), std::move(labels), std::move(bases));
}

MonomialAlgebra from_generators(std::size_t num_vars, std::vector<Monomial> gens,
                                std::vector<std::string> labels) {
  if (num_vars == 0) throw DomainError("from_generators needs at least one variable");
  if (gens.empty()) throw EmptyGeneratorsError();
  if (!labels.empty() && labels.size() != num_vars) {
    throw DomainError("label count differs from variable count");
  }
  for (const auto& g : gens) {
    if (g.num_vars() != num_vars) {
      throw DomainError("generator has " + std::to_string(g.num_vars()) +
                        " exponents, expected " + std::to_string(num_vars));
    }
    if (g.degree() == 0) throw DomainError("the unit monomial generates the whole ring");
  }

  // minimal generating set, kept in first-seen order
  std::vector<Monomial> minimal;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool redundant = false;
    for (std::size_t other = 0; other < gens.size() && !redundant; ++other) {
      if (other == k || !gens[other].divides(gens[k])) continue;
      // equal generators: keep the first occurrence only
      redundant = gens[other] != gens[k] || other < k;
    }
    if (!redundant) minimal.push_back(gens[k]);
  }

  std::vector<bool> has_pure_power(num_vars, false);
  for (const auto& g : minimal) {
    if (auto j = g.pure_power_variable()) has_pure_power[*j] = true;
  }
  for (std::size_t j = 0; j < num_vars; ++j) {
    if (!has_pure_power[j]) {
      throw NotArtinianError(j, labels.empty() ? "x_" + std::to_string(j + 1) : labels[j]);
    }
  }

  auto standard = [&](const Monomial& m) {
    return std::none_of(minimal.begin(), minimal.end(),
                        [&](const Monomial& g) { return g.divides(m); });
  };

  std::vector<std::vector<Monomial>> bases{{Monomial(num_vars)}};
  while (true) {
    std::unordered_set<Monomial, MonomialHash> next;
    for (const auto& m : bases.back()) {
      for (std::size_t j = 0; j < num_vars; ++j) {
        Monomial candidate = m.times_variable(j);
        if (standard(candidate)) next.insert(std::move(candidate));
      }
    }
    if (next.empty()) break;
    std::vector<Monomial> sorted(next.begin(), next.end());
    std::sort(sorted.begin(), sorted.end(), canonical_before);
    bases.push_back(std::move(sorted));
  }
  return MonomialAlgebra(num_vars, std::move(minimal), std::move(labels), std::move(bases));
}

IntPolynomial hilbert_series(const MonomialAlgebra& a) {
  std::vector<Integer> dims;
  for (std::size_t d = 0; d <= a.socle_degree(); ++d) {
    dims.emplace_back(static_cast<unsigned long>(a.dimension(d)));
  }
  return IntPolynomial(std::move(dims));
}

// --- LinearForm / GradedMap --------------------------------------------------

LinearForm::LinearForm(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (!coefficients_.empty() &&
      std::all_of(coefficients_.begin(), coefficients_.end(),
                  [](const Integer& c) { return c == 0; })) {
    throw DomainError("linear form must have a nonzero coefficient");
  }
}

LinearForm LinearForm::all_ones(std::size_t num_vars) {
  return LinearForm(std::vector<Integer>(num_vars, Integer(1)));
}

bool LinearForm::is_all_ones() const noexcept {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Integer& c) { return c == 1; });
}

std::string LinearForm::to_string(std::span<const std::string> labels) const {
  std::string out;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    const Integer& c = coefficients_[j];
    if (c == 0) continue;
    const std::string name = j < labels.size() ? labels[j] : "x_" + std::to_string(j + 1);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Integer magnitude = abs(c);
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += name;
  }
  return out.empty() ? "0" : out;
}

GradedMap::GradedMap(std::size_t source_degree, std::size_t power, IntMatrix matrix)
    : source_degree_(source_degree),
      power_(power),
      matrix_(std::move(matrix)),
      rank_cache_(std::make_shared<std::atomic<std::int64_t>>(-1)) {}

std::size_t GradedMap::rank() const {
  std::int64_t cached = rank_cache_->load(std::memory_order_acquire);
  if (cached < 0) {
    cached = static_cast<std::int64_t>(exact_rank(matrix_));
    rank_cache_->store(cached, std::memory_order_release);
  }
  return static_cast<std::size_t>(cached);
}

namespace {

IntMatrix degree_one_matrix(const MonomialAlgebra& a, const LinearForm& ell, std::size_t d) {
  const auto& source = a.basis(d);
  const auto& target = a.basis(d + 1);
  IntMatrix m(target.size(), source.size());
  if (target.empty()) return m;
  for (std::size_t c = 0; c < source.size(); ++c) {
    IntMatrix::Column column;
    for (std::size_t j = 0; j < a.num_vars(); ++j) {
      const Integer& coeff = ell.coefficients()[j];
      if (coeff == 0) continue;
      if (auto row = a.index_of(source[c].times_variable(j))) column.push_back({*row, coeff});
    }
    m.set_column(c, std::move(column));
  }
  return m;
}

}  // namespace

GradedMap multiplication_map(const MonomialAlgebra& a, const LinearForm& ell, std::size_t i,
                             std::size_t t) {
  if (t == 0) throw DomainError("multiplication_map needs a positive power");
  if (ell.num_vars() != a.num_vars()) {
    throw DomainError("linear form has " + std::to_string(ell.num_vars()) +
                      " coefficients for an algebra in " + std::to_string(a.num_vars()) +
                      " variables");
  }
  IntMatrix product = degree_one_matrix(a, ell, i);
  for (std::size_t step = 1; step < t; ++step) {
    product = degree_one_matrix(a, ell, i + step) * product;
  }
  return GradedMap(i, t, std::move(product));
}

// --- generator files ----------------------------------------------------------

namespace {

struct NameKey {
  std::string prefix;
  unsigned long number = 0;
  bool has_number = false;
  std::string full;

  explicit NameKey(const std::string& name) : full(name) {
    std::size_t cut = name.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
    prefix = name.substr(0, cut);
    if (cut < name.size() && name.size() - cut < 10) {
      has_number = true;
      number = std::stoul(name.substr(cut));
    }
  }
  friend bool operator<(const NameKey& a, const NameKey& b) {
    return std::tie(a.prefix, a.has_number, a.number, a.full) <
           std::tie(b.prefix, b.has_number, b.number, b.full);
  }
};

bool valid_name(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

}  // namespace

GeneratorSystem parse_generators(std::istream& in) {
  std::vector<std::string> declared;
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::string, unsigned>>>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;
    if (token == "vars") {
      if (!declared.empty() || !rows.empty()) {
        throw ParseError("`vars` must be the first line and appear once", line_no);
      }
      while (tokens >> token) {
        if (!valid_name(token)) throw ParseError("bad variable name `" + token + "`", line_no);
        if (std::find(declared.begin(), declared.end(), token) != declared.end()) {
          throw ParseError("variable `" + token + "` declared twice", line_no);
        }
        declared.push_back(token);
      }
      if (declared.empty()) throw ParseError("`vars` line lists no variables", line_no);
      continue;
    }
    std::vector<std::pair<std::string, unsigned>> factors;
    do {
      std::string name = token;
      unsigned exponent = 1;
      if (auto caret = token.find('^'); caret != std::string::npos) {
        name = token.substr(0, caret);
        const std::string digits = token.substr(caret + 1);
        if (digits.empty() || digits.size() > 3 ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
          throw ParseError("bad exponent in `" + token + "`", line_no);
        }
        exponent = static_cast<unsigned>(std::stoul(digits));
        if (exponent == 0 || exponent > 255) {
          throw ParseError("exponent must lie in 1..255 in `" + token + "`", line_no);
        }
      }
      if (!valid_name(name)) throw ParseError("bad variable name `" + name + "`", line_no);
      factors.emplace_back(name, exponent);
    } while (tokens >> token);
    rows.emplace_back(line_no, std::move(factors));
  }
  if (rows.empty()) throw ParseError("no generators", line_no);

  std::vector<std::string> labels = declared;
  if (labels.empty()) {
    std::map<NameKey, std::string> ordered;
    for (const auto& [no, factors] : rows) {
      for (const auto& [name, e] : factors) ordered.emplace(NameKey(name), name);
    }
    for (const auto& [key, name] : ordered) labels.push_back(name);
  }

  GeneratorSystem system;
  system.num_vars = labels.size();
  system.labels = labels;
  for (const auto& [no, factors] : rows) {
    std::vector<unsigned> exps(labels.size(), 0);
    for (const auto& [name, e] : factors) {
      auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end()) throw ParseError("undeclared variable `" + name + "`", no);
      auto& slot = exps[static_cast<std::size_t>(it - labels.begin())];
      if (slot + e > 255) throw ParseError("exponent of `" + name + "` exceeds 255", no);
      slot += e;
    }
    system.generators.push_back(Monomial::from_exponents(exps));
  }
  return system;
}

GeneratorSystem read_generators(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open generator file " + file.string());
  return parse_generators(in);
}

MonomialAlgebra from_generator_system(const GeneratorSystem& system) {
  return from_generators(system.num_vars, system.generators, system.labels);
}

}  // namespace wlp
