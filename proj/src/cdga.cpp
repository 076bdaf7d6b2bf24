#include "immdec/cdga.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "immdec/errors.hpp"

namespace immdec {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void require_same_gens(const Element& a, const Element& b, const char* op) {
  if (a.gens_ptr() == b.gens_ptr()) return;
  if (a.gens() == b.gens()) return;
  throw input_error(std::string("generator set mismatch in ") + op);
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (!valid_identifier(g.name))
      throw input_error("generator name '" + g.name + "' is not an identifier");
    if (!seen.insert(g.name).second)
      throw input_error("duplicate generator name '" + g.name + "'");
    if (g.degree == 1)
      throw input_error("generator '" + g.name +
                        "' has degree 1; only simply connected models are supported "
                        "(generator degrees must be >= 2)");
    if (g.degree < 2)
      throw input_error("generator '" + g.name + "' has degree " +
                        std::to_string(g.degree) + "; degrees must be >= 2");
  }
}

int GeneratorSet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

GenSetPtr make_generator_set(std::vector<Generator> gens) {
  return std::make_shared<const GeneratorSet>(std::move(gens));
}

int monomial_degree(const GeneratorSet& gens, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < gens.size(); ++i)
    d += gens[i].degree * static_cast<int>(m.exps[static_cast<std::size_t>(i)]);
  return d;
}

std::string monomial_to_string(const GeneratorSet& gens, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < gens.size(); ++i) {
    const auto e = m.exps[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!first) os << "*";
    os << gens[i].name;
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) return "1";
  return os.str();
}

Element::Element(GenSetPtr gens) : gens_(std::move(gens)) {
  if (!gens_) throw std::logic_error("element over null generator set");
}

Element Element::unit(GenSetPtr gens, const Rational& c) {
  Element e(std::move(gens));
  Monomial one;
  one.exps.assign(static_cast<std::size_t>(e.gens().size()), 0);
  e.add_term(one, c);
  return e;
}

Element Element::generator(GenSetPtr gens, int index) {
  Element e(std::move(gens));
  if (index < 0 || index >= e.gens().size())
    throw std::logic_error("generator index out of range");
  Monomial m;
  m.exps.assign(static_cast<std::size_t>(e.gens().size()), 0);
  m.exps[static_cast<std::size_t>(index)] = 1;
  e.add_term(m, 1);
  return e;
}

Element Element::from_monomial(GenSetPtr gens, Monomial m, const Rational& c) {
  Element e(std::move(gens));
  if (static_cast<int>(m.exps.size()) != e.gens().size())
    throw std::logic_error("monomial width does not match generator set");
  for (int i = 0; i < e.gens().size(); ++i)
    if (e.gens()[i].degree % 2 != 0 && m.exps[static_cast<std::size_t>(i)] > 1)
      throw input_error("odd-degree generator '" + e.gens()[i].name +
                        "' with exponent > 1");
  e.add_term(m, c);
  return e;
}

std::optional<int> Element::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    const int d = monomial_degree(*gens_, m);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  require_same_gens(*this, o, "addition");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_gens(*this, o, "subtraction");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator-() const { return scaled(Rational(-1)); }

Element Element::scaled(const Rational& c) const {
  Element r(gens_);
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

bool Element::operator==(const Element& o) const {
  if (!(gens_ == o.gens_ || *gens_ == *o.gens_)) return false;
  return terms_ == o.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  // Display groups terms by degree, low to high, canonical order inside.
  std::vector<std::pair<int, const Monomial*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(monomial_degree(*gens_, m), &m);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, mp] : order) {
    (void)deg;
    const Rational& c = terms_.at(*mp);
    const std::string ms = monomial_to_string(*gens_, *mp);
    std::string cs = rational_to_string(c < 0 ? Rational(-c) : c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (ms == "1")
      os << cs;
    else if (cs == "1")
      os << ms;
    else
      os << cs << "*" << ms;
  }
  return os.str();
}

namespace {

// Parity of the number of odd-letter transpositions needed to interleave b
// into a (b's letters slide left past a's higher-indexed odd letters).
int koszul_sign(const GeneratorSet& gens, const Monomial& a, const Monomial& b) {
  int swaps = 0;
  // odd_suffix[i] = number of odd letters of a at indices >= i.
  std::vector<int> odd_suffix(static_cast<std::size_t>(gens.size()) + 1, 0);
  for (int i = gens.size() - 1; i >= 0; --i) {
    odd_suffix[static_cast<std::size_t>(i)] =
        odd_suffix[static_cast<std::size_t>(i) + 1] +
        ((gens[i].degree % 2 != 0 && a.exps[static_cast<std::size_t>(i)] > 0) ? 1 : 0);
  }
  for (int i = 0; i < gens.size(); ++i) {
    if (gens[i].degree % 2 != 0 && b.exps[static_cast<std::size_t>(i)] > 0)
      swaps += odd_suffix[static_cast<std::size_t>(i) + 1];
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

}  // namespace

Element mul(const Element& a, const Element& b) {
  require_same_gens(a, b, "multiplication");
  Element r(a.gens_ptr());
  const GeneratorSet& gens = a.gens();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      bool vanishes = false;
      Monomial prod;
      prod.exps.resize(ma.exps.size());
      for (std::size_t i = 0; i < ma.exps.size(); ++i) {
        const auto e = ma.exps[i] + mb.exps[i];
        if (gens[static_cast<int>(i)].degree % 2 != 0 && e > 1) {
          vanishes = true;  // odd square
          break;
        }
        prod.exps[i] = e;
      }
      if (vanishes) continue;
      const int sign = koszul_sign(gens, ma, mb);
      r.add_term(prod, ca * cb * sign);
    }
  }
  return r;
}

namespace {

void enumerate_basis(const GeneratorSet& gens, int idx, int remaining, Monomial& cur,
                     std::vector<Monomial>& out) {
  if (idx == gens.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int d = gens[idx].degree;
  int max_e = remaining / d;
  if (d % 2 != 0) max_e = std::min(max_e, 1);
  for (int e = max_e; e >= 0; --e) {
    cur.exps[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(e);
    enumerate_basis(gens, idx + 1, remaining - e * d, cur, out);
  }
  cur.exps[static_cast<std::size_t>(idx)] = 0;
}

}  // namespace

std::vector<Monomial> basis_of_degree(const GeneratorSet& gens, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  Monomial cur;
  cur.exps.assign(static_cast<std::size_t>(gens.size()), 0);
  enumerate_basis(gens, 0, k, cur, out);
  return out;
}

QVec coordinates(const Element& a, const std::vector<Monomial>& basis) {
  QVec v = zero_vec(static_cast<int>(basis.size()));
  if (a.is_zero()) return v;
  const auto deg = a.homogeneous_degree();
  if (!deg) throw input_error("coordinates of an inhomogeneous element");
  std::map<Monomial, std::size_t, MonomialLexGreater> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  for (const auto& [m, c] : a.terms()) {
    auto it = index.find(m);
    if (it == index.end())
      throw std::logic_error("monomial " + monomial_to_string(a.gens(), m) +
                             " missing from basis (enumeration bug)");
    v[it->second] = c;
  }
  return v;
}

Element element_from_coordinates(const GenSetPtr& gens,
                                 const std::vector<Monomial>& basis, const QVec& v) {
  if (v.size() != basis.size())
    throw input_error("coordinate vector length does not match basis size");
  Element e(gens);
  for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], v[i]);
  return e;
}

FreeCDGA::FreeCDGA(GenSetPtr gens, std::vector<Element> gen_diffs)
    : gens_(std::move(gens)), diffs_(std::move(gen_diffs)) {
  if (!gens_) throw std::logic_error("free CDGA over null generator set");
  if (static_cast<int>(diffs_.size()) != gens_->size())
    throw input_error("differential must assign one image per generator");
  for (int i = 0; i < gens_->size(); ++i) {
    const Element& d = diffs_[static_cast<std::size_t>(i)];
    if (!(d.gens_ptr() == gens_ || d.gens() == *gens_))
      throw input_error("differential image of '" + (*gens_)[i].name +
                        "' lives over a different generator set");
    if (d.is_zero()) continue;
    const auto deg = d.homogeneous_degree();
    if (!deg || *deg != (*gens_)[i].degree + 1)
      throw input_error("differential image of '" + (*gens_)[i].name +
                        "' is not homogeneous of degree " +
                        std::to_string((*gens_)[i].degree + 1));
  }
  for (int i = 0; i < gens_->size(); ++i) {
    if (!apply_diff(diffs_[static_cast<std::size_t>(i)]).is_zero())
      throw input_error("differential does not square to zero on generator '" +
                        (*gens_)[i].name + "'");
  }
}

bool FreeCDGA::has_zero_differential() const {
  for (const auto& d : diffs_)
    if (!d.is_zero()) return false;
  return true;
}

Element FreeCDGA::apply_diff(const Element& a) const {
  if (!(a.gens_ptr() == gens_ || a.gens() == *gens_))
    throw input_error("differential applied to element over a different generator set");
  Element result(gens_);
  const GeneratorSet& gens = *gens_;
  for (const auto& [m, coef] : a.terms()) {
    int prefix_degree = 0;
    for (int i = 0; i < gens.size(); ++i) {
      const auto e = m.exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      const Element& dg = diffs_[static_cast<std::size_t>(i)];
      if (!dg.is_zero()) {
        // m = prefix * g_i^e * suffix; the term is
        // (-1)^{|prefix|} e * prefix * g_i^{e-1} * d(g_i) * suffix.
        Monomial prefix, suffix;
        prefix.exps.assign(m.exps.size(), 0);
        suffix.exps.assign(m.exps.size(), 0);
        for (int j = 0; j < i; ++j)
          prefix.exps[static_cast<std::size_t>(j)] = m.exps[static_cast<std::size_t>(j)];
        prefix.exps[static_cast<std::size_t>(i)] = e - 1;
        for (int j = i + 1; j < gens.size(); ++j)
          suffix.exps[static_cast<std::size_t>(j)] = m.exps[static_cast<std::size_t>(j)];
        const int sign = (prefix_degree % 2 == 0) ? 1 : -1;
        Element term = Element::from_monomial(gens_, prefix, coef * sign * int(e));
        term = mul(term, dg);
        term = mul(term, Element::from_monomial(gens_, suffix, 1));
        result += term;
      }
      prefix_degree += gens[i].degree * static_cast<int>(e);
    }
  }
  return result;
}

RationalMatrix diff_matrix(const FreeCDGA& a, int k) {
  const auto src = basis_of_degree(a.generators(), k);
  const auto dst = basis_of_degree(a.generators(), k + 1);
  RationalMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Element img =
        a.apply_diff(Element::from_monomial(a.generators_ptr(), src[j], 1));
    const QVec col = coordinates(img, dst);
    for (std::size_t i = 0; i < dst.size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
  }
  return m;
}

AffineSubspaceQ cocycles(const FreeCDGA& a, int k) {
  const RationalMatrix d = diff_matrix(a, k);
  return solve_affine(d, zero_vec(d.rows()));
}

std::optional<Element> is_exact(const FreeCDGA& a, const Element& x) {
  if (x.is_zero()) return Element::zero(x.gens_ptr());
  if (!(x.gens_ptr() == a.generators_ptr() || x.gens() == a.generators()))
    throw input_error("exactness test for an element over a different generator set");
  const auto deg = x.homogeneous_degree();
  if (!deg) throw input_error("exactness test requires a homogeneous element");
  if (!a.apply_diff(x).is_zero())
    throw input_error("exactness test requires a closed element");
  const int k = *deg;
  const auto target = basis_of_degree(a.generators(), k);
  const auto sol = solve_affine(diff_matrix(a, k - 1), coordinates(x, target));
  if (sol.empty()) return std::nullopt;
  return element_from_coordinates(a.generators_ptr(),
                                  basis_of_degree(a.generators(), k - 1), sol.point());
}

int cohomology_dim(const FreeCDGA& a, int k) {
  if (k < 0) return 0;
  const int dim_k = static_cast<int>(basis_of_degree(a.generators(), k).size());
  const int r_k = rank(diff_matrix(a, k));
  const int r_prev = (k == 0) ? 0 : rank(diff_matrix(a, k - 1));
  return dim_k - r_k - r_prev;
}

}  // namespace immdec
