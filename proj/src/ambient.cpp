#include "immdec/ambient.hpp"

#include <cctype>
#include <sstream>

#include "immdec/errors.hpp"

namespace immdec {

QVec Ambient::unit() const {
  if (dim(0) != 1) throw std::logic_error("degree-0 piece is not one-dimensional");
  return QVec{Rational(1)};
}

RationalMatrix Ambient::diff_matrix_at(int k) const {
  const int src = (k < 0) ? 0 : dim(k);
  const int dst = dim(k + 1);
  RationalMatrix m(dst, src);
  for (int j = 0; j < src; ++j) {
    QVec e = zero_vec(src);
    e[static_cast<std::size_t>(j)] = 1;
    const QVec col = diff(k, e);
    for (int i = 0; i < dst; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

RationalMatrix Ambient::mul_matrix(int ka, const QVec& a, int kb) const {
  const int src = dim(kb);
  const int dst = dim(ka + kb);
  RationalMatrix m(dst, src);
  for (int j = 0; j < src; ++j) {
    QVec e = zero_vec(src);
    e[static_cast<std::size_t>(j)] = 1;
    const QVec col = mul(ka, a, kb, e);
    for (int i = 0; i < dst; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

std::string Ambient::describe(int k, const QVec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Rational c = v[i];
    std::string cs = rational_to_string(c < 0 ? Rational(-c) : c);
    const std::string label = basis_label(k, static_cast<int>(i));
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (cs == "1" && label != "1")
      os << label;
    else if (label == "1")
      os << cs;
    else
      os << cs << "*" << label;
  }
  if (first) return "0";
  return os.str();
}

bool degree_enumerable(const Ambient& a, int k) {
  return a.vanishes_above_top() || k <= a.top_degree() + 1;
}

int checked_dim(const Ambient& a, int k) {
  if (k < 0) return 0;
  if (!degree_enumerable(a, k))
    throw input_error("degree " + std::to_string(k) +
                      " exceeds the enumeration cap (" +
                      std::to_string(a.top_degree()) +
                      "); raise the maximum degree");
  return a.dim(k);
}

std::optional<QVec> is_exact(const Ambient& a, int k, const QVec& v) {
  if (static_cast<int>(v.size()) != a.dim(k))
    throw input_error("class vector length does not match the degree-" +
                      std::to_string(k) + " piece");
  if (!is_zero_vec(v) && !is_zero_vec(a.diff(k, v)))
    throw input_error("exactness test requires a closed class");
  const int below = (k - 1 < 0) ? 0 : a.dim(k - 1);
  if (is_zero_vec(v)) return zero_vec(below);
  const auto sol = solve_affine(a.diff_matrix_at(k - 1), v);
  if (sol.empty()) return std::nullopt;
  return sol.point();
}

bool Ambient::zero_differential_through(int k) const {
  for (int d = 0; d <= k; ++d) {
    const int n = dim(d);
    QVec e = zero_vec(n);
    for (int j = 0; j < n; ++j) {
      e[static_cast<std::size_t>(j)] = 1;
      if (!is_zero_vec(diff(d, e))) return false;
      e[static_cast<std::size_t>(j)] = 0;
    }
  }
  return true;
}

FreeCdgaAmbient::FreeCdgaAmbient(const FreeCDGA& algebra, int max_degree)
    : algebra_(&algebra), max_degree_(max_degree) {
  if (max_degree < 0) throw input_error("maximum degree must be nonnegative");
  bases_.reserve(static_cast<std::size_t>(max_degree) + 2);
  for (int k = 0; k <= max_degree + 1; ++k)
    bases_.push_back(basis_of_degree(algebra.generators(), k));
}

const std::vector<Monomial>& FreeCdgaAmbient::basis(int k) const {
  if (k < 0 || k > max_degree_ + 1)
    throw std::logic_error("basis request beyond enumeration cap");
  return bases_[static_cast<std::size_t>(k)];
}

int FreeCdgaAmbient::dim(int k) const {
  if (k < 0) return 0;
  if (k > max_degree_ + 1)
    throw std::logic_error("dimension request beyond enumeration cap");
  return static_cast<int>(bases_[static_cast<std::size_t>(k)].size());
}

std::string FreeCdgaAmbient::basis_label(int k, int i) const {
  return monomial_to_string(algebra_->generators(), basis(k)[static_cast<std::size_t>(i)]);
}

Element FreeCdgaAmbient::to_element(int k, const QVec& v) const {
  return element_from_coordinates(algebra_->generators_ptr(), basis(k), v);
}

QVec FreeCdgaAmbient::to_coords(const Element& e, int expected_degree) const {
  return coordinates(e, basis(expected_degree));
}

QVec FreeCdgaAmbient::mul(int ka, const QVec& a, int kb, const QVec& b) const {
  const Element prod = immdec::mul(to_element(ka, a), to_element(kb, b));
  return to_coords(prod, ka + kb);
}

QVec FreeCdgaAmbient::diff(int k, const QVec& a) const {
  return to_coords(algebra_->apply_diff(to_element(k, a)), k + 1);
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

FinitePresentation::FinitePresentation(Data data) : data_(std::move(data)) {
  top_ = 0;
  for (const auto& [deg, names] : data_.basis) {
    if (deg <= 0)
      throw input_error("presentation basis degrees must be positive "
                        "(the unit spans degree 0 implicitly)");
    if (names.empty())
      throw input_error("presentation lists degree " + std::to_string(deg) +
                        " with an empty basis; omit the degree instead");
    top_ = std::max(top_, deg);
  }
  dims_.assign(static_cast<std::size_t>(top_) + 1, 0);
  dims_[0] = 1;
  for (const auto& [deg, names] : data_.basis)
    dims_[static_cast<std::size_t>(deg)] = static_cast<int>(names.size());

  gid_offset_.assign(static_cast<std::size_t>(top_) + 1, 0);
  int next = 0;
  for (int k = 0; k <= top_; ++k) {
    gid_offset_[static_cast<std::size_t>(k)] = next;
    next += dims_[static_cast<std::size_t>(k)];
  }

  if (data_.unit_name.empty()) throw input_error("empty unit name");
  by_name_[data_.unit_name] = {0, 0};
  for (const auto& [deg, names] : data_.basis) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!valid_identifier(names[i]))
        throw input_error("basis name '" + names[i] + "' is not an identifier");
      if (!by_name_.emplace(names[i], std::make_pair(deg, static_cast<int>(i))).second)
        throw input_error("duplicate basis name '" + names[i] + "'");
    }
  }

  // Product table: one entry per unordered pair, stored with the smaller
  // global id on the left; the flipped orientation carries the Koszul sign.
  for (const auto& e : data_.products) {
    const auto [dl, il] = locate(e.left);
    const auto [dr, ir] = locate(e.right);
    if (dl == 0 || dr == 0)
      throw input_error("product entries must not involve the unit ('" + e.left +
                        "' * '" + e.right + "')");
    const int target = dl + dr;
    if (target > top_) {
      if (!e.value.empty() && !is_zero_vec(e.value))
        throw input_error("product '" + e.left + "' * '" + e.right +
                          "' lands above the top degree and must vanish; omit it");
      continue;
    }
    if (static_cast<int>(e.value.size()) != dims_[static_cast<std::size_t>(target)])
      throw input_error("product '" + e.left + "' * '" + e.right +
                        "' has a value of the wrong length for degree " +
                        std::to_string(target));
    const int gl = global_id(dl, il);
    const int gr = global_id(dr, ir);
    const int sign = (dl % 2 != 0 && dr % 2 != 0) ? -1 : 1;
    if (gl == gr && sign < 0 && !is_zero_vec(e.value))
      throw input_error("graded commutativity forces '" + e.left + "' * '" + e.left +
                        "' = 0 in odd degree");
    std::pair<int, int> key(std::min(gl, gr), std::max(gl, gr));
    QVec value = e.value;
    if (gl > gr) {
      // Entry given as right*left of the canonical order.
      for (auto& c : value) c *= sign;
    }
    auto it = table_.find(key);
    if (it == table_.end()) {
      table_.emplace(key, std::move(value));
    } else if (it->second != value) {
      throw input_error("product entries for '" + e.left + "' and '" + e.right +
                        "' are inconsistent with graded commutativity");
    }
  }

  // Differential matrices.
  for (const auto& [k, m] : data_.differential) {
    if (k < 0 || k > top_)
      throw input_error("differential given for degree " + std::to_string(k) +
                        " outside the presented range");
    const int src = dims_[static_cast<std::size_t>(k)];
    const int dst = (k + 1 <= top_) ? dims_[static_cast<std::size_t>(k) + 1] : 0;
    if (m.rows() != dst || m.cols() != src)
      throw input_error("differential matrix at degree " + std::to_string(k) +
                        " must be " + std::to_string(dst) + "x" + std::to_string(src));
    bool all_zero = true;
    for (int i = 0; i < m.rows() && all_zero; ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != 0) {
          all_zero = false;
          break;
        }
    if (k == 0 && !all_zero)
      throw input_error("the unit must be closed (nonzero differential at degree 0)");
    if (!all_zero) {
      zero_diff_ = false;
      diffs_.emplace(k, m);
    }
  }

  // d^2 = 0.
  for (const auto& [k, m] : diffs_) {
    auto it = diffs_.find(k + 1);
    if (it == diffs_.end()) continue;
    for (int j = 0; j < m.cols(); ++j) {
      QVec col(static_cast<std::size_t>(m.rows()));
      for (int i = 0; i < m.rows(); ++i) col[static_cast<std::size_t>(i)] = m.at(i, j);
      if (!is_zero_vec(it->second.apply(col)))
        throw input_error("differential does not square to zero at degree " +
                          std::to_string(k));
    }
  }

  // Associativity on basis triples, and the Leibniz rule on basis pairs.
  struct Pb {
    int deg, idx;
  };
  std::vector<Pb> pos;
  for (const auto& [deg, names] : data_.basis)
    for (std::size_t i = 0; i < names.size(); ++i)
      pos.push_back({deg, static_cast<int>(i)});
  auto unit_vec_of = [&](int deg, int idx) {
    QVec v = zero_vec(dims_[static_cast<std::size_t>(deg)]);
    v[static_cast<std::size_t>(idx)] = 1;
    return v;
  };
  for (const auto& a : pos) {
    for (const auto& b : pos) {
      const QVec va = unit_vec_of(a.deg, a.idx);
      const QVec vb = unit_vec_of(b.deg, b.idx);
      if (!zero_diff_ && a.deg + b.deg <= top_) {
        // d(ab) = da*b + (-1)^{|a|} a*db
        const QVec lhs = diff(a.deg + b.deg, mul(a.deg, va, b.deg, vb));
        QVec rhs = mul(a.deg + 1, diff(a.deg, va), b.deg, vb);
        const QVec adb = mul(a.deg, va, b.deg + 1, diff(b.deg, vb));
        for (std::size_t i = 0; i < rhs.size(); ++i)
          rhs[i] += (a.deg % 2 == 0) ? adb[i] : -adb[i];
        if (lhs != rhs)
          throw input_error("Leibniz rule fails on '" +
                            data_.basis.at(a.deg)[static_cast<std::size_t>(a.idx)] +
                            "' * '" +
                            data_.basis.at(b.deg)[static_cast<std::size_t>(b.idx)] + "'");
      }
      for (const auto& c : pos) {
        if (a.deg + b.deg + c.deg > top_) continue;
        const QVec vc = unit_vec_of(c.deg, c.idx);
        const QVec left = mul(a.deg + b.deg, mul(a.deg, va, b.deg, vb), c.deg, vc);
        const QVec right = mul(a.deg, va, b.deg + c.deg, mul(b.deg, vb, c.deg, vc));
        if (left != right)
          throw input_error(
              "product table is not associative on ('" +
              data_.basis.at(a.deg)[static_cast<std::size_t>(a.idx)] + "', '" +
              data_.basis.at(b.deg)[static_cast<std::size_t>(b.idx)] + "', '" +
              data_.basis.at(c.deg)[static_cast<std::size_t>(c.idx)] + "')");
      }
    }
  }
}

int FinitePresentation::global_id(int degree, int index) const {
  return gid_offset_[static_cast<std::size_t>(degree)] + index;
}

std::pair<int, int> FinitePresentation::locate(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw input_error("unknown basis name '" + name + "'");
  return it->second;
}

int FinitePresentation::dim(int k) const {
  if (k < 0 || k > top_) return 0;
  return dims_[static_cast<std::size_t>(k)];
}

std::string FinitePresentation::basis_label(int k, int i) const {
  if (k == 0) return data_.unit_name;
  const auto& names = data_.basis.at(k);
  return names[static_cast<std::size_t>(i)];
}

QVec FinitePresentation::mul(int ka, const QVec& a, int kb, const QVec& b) const {
  if (static_cast<int>(a.size()) != dim(ka) || static_cast<int>(b.size()) != dim(kb))
    throw input_error("product operands do not match their degree pieces");
  const int target = ka + kb;
  QVec out = zero_vec(dim(target));
  if (out.empty() && target > top_) return out;
  if (ka == 0) {
    if (a.empty()) return out;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[0] * b[i];
    return out;
  }
  if (kb == 0) {
    if (b.empty()) return out;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[0];
    return out;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const int gl = global_id(ka, static_cast<int>(i));
      const int gr = global_id(kb, static_cast<int>(j));
      int sign = 1;
      std::pair<int, int> key(gl, gr);
      if (gl > gr) {
        key = {gr, gl};
        sign = (ka % 2 != 0 && kb % 2 != 0) ? -1 : 1;
      } else if (gl == gr && ka % 2 != 0) {
        continue;  // odd square vanishes
      }
      auto it = table_.find(key);
      if (it == table_.end()) continue;
      const Rational f = a[i] * b[j] * sign;
      for (std::size_t t = 0; t < out.size(); ++t) out[t] += f * it->second[t];
    }
  }
  return out;
}

QVec FinitePresentation::diff(int k, const QVec& a) const {
  if (static_cast<int>(a.size()) != dim(k))
    throw input_error("differential operand does not match its degree piece");
  QVec out = zero_vec(dim(k + 1));
  auto it = diffs_.find(k);
  if (it == diffs_.end()) return out;
  return it->second.apply(a);
}

int FinitePresentation::cohomology_dim(int k) const {
  if (k < 0 || k > top_) return 0;
  auto rank_at = [&](int d) -> int {
    auto it = diffs_.find(d);
    if (it == diffs_.end()) return 0;
    return rank(it->second);
  };
  return dim(k) - rank_at(k) - ((k == 0) ? 0 : rank_at(k - 1));
}

}  // namespace immdec
