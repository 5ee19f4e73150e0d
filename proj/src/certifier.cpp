#include "mbasis/certifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "mbasis/errors.hpp"
#include "mbasis/io.hpp"

namespace mbasis {

bool canonical_less(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (!a.empty() && a.front().field().is_finite()) {
    // ascending integer encoding: the last coordinate is most significant
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

BasisCandidate BasisCandidate::make(const FieldSpec& field, std::size_t dim, std::vector<Vector> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != dim) throw InvalidInput("basis vector " + to_string(v) + " does not have length " + std::to_string(dim));
    for (const auto& c : v) {
      if (c.field() != field) throw InvalidInput("basis vector entry outside " + field.name());
    }
    if (is_zero(v)) throw InvalidInput("a basis cannot contain the zero vector");
  }
  std::sort(vectors.begin(), vectors.end(),
            [](const Vector& x, const Vector& y) { return canonical_less(x, y); });
  if (std::adjacent_find(vectors.begin(), vectors.end()) != vectors.end()) {
    throw InvalidInput("basis vectors must be pairwise distinct");
  }
  Matrix m = Matrix::from_rows(field, dim, vectors);
  return BasisCandidate(std::move(vectors), std::move(m));
}

bool is_basis(const StructureAlgebra& a, std::span<const Vector> vectors) {
  const std::size_t n = a.dim();
  if (vectors.size() != n) {
    throw InvalidInput("a basis of this algebra has " + std::to_string(n) + " vectors, got " +
                       std::to_string(vectors.size()));
  }
  return rank(Matrix::from_rows(a.field(), n, vectors)) == n;
}

std::optional<ClosureViolation> is_closed_under_multiplication(const StructureAlgebra& a, const BasisCandidate& h) {
  const auto& hv = h.vectors();
  for (const auto& u : hv) {
    for (const auto& v : hv) {
      Vector uv = multiply(a, u, v);
      if (std::find(hv.begin(), hv.end(), uv) == hv.end()) return ClosureViolation{u, v, std::move(uv)};
    }
  }
  return std::nullopt;
}

Vector coefficient_sum_functional(const StructureAlgebra& a, const BasisCandidate& h) {
  if (!is_basis(a, h)) throw InvalidInput("coefficient-sum functional needs a basis");
  const Vector ones(h.size(), a.field().one());
  auto f = solve_row(a.field(), h.matrix(), ones);
  if (!f) throw InternalError("basis matrix reported invertible but f(h) = 1 has no solution");
  return *std::move(f);
}

bool verify_multiplicative(const StructureAlgebra& a, std::span<const Scalar> f) {
  const std::size_t n = a.dim();
  if (f.size() != n) throw InvalidInput("functional dimension does not match the algebra");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dot(f, a.product(i, j)) != f[i] * f[j]) return false;
    }
  }
  return true;
}

IdealCertificate kernel_ideal_certificate(const StructureAlgebra& a, std::span<const Scalar> f) {
  if (f.size() != a.dim()) throw InvalidInput("functional dimension does not match the algebra");
  if (is_zero(f)) throw InvalidInput("the zero functional has no codimension-one kernel");
  if (!verify_multiplicative(a, f)) throw InvalidInput("functional is not multiplicative");

  Subspace ker = functional_kernel(a.field(), f);
  const IdealClosure closure = is_ideal(a, ker);
  if (!closure.two_sided()) {
    throw InternalError("kernel of a multiplicative functional failed ideal verification");
  }
  const std::size_t codim = codimension(ker);
  if (codim != 1) throw InternalError("kernel of a nonzero functional has codimension " + std::to_string(codim));
  return {std::move(ker), codim, closure.left_closed, closure.right_closed, IdealOrigin::functional_kernel};
}

namespace {

using Code = std::uint64_t;

// Depth-first enumeration of independent sets closed under multiplication,
// over vectors identified by their integer encodings.
//
// A node holds the chosen set S, the set R of products of S that are not yet
// in S, and `floor`, the most recent free choice. Members of R are added
// smallest first. When R is empty a free choice v > floor with v not in S is
// made, so every closed set H is reached along exactly one path: each free
// choice is min(H \ S). A product that lands below `floor` outside S can then
// never be part of the set being built, and the branch is pruned, as it is for
// zero products, |S u R| > n and dependent S u R.
class BasisSearch {
public:
  BasisSearch(const StructureAlgebra& a, std::uint64_t total) : a_(a), n_(a.dim()), total_(total) {}

  /// All closed bases whose smallest element is `root`.
  std::vector<std::vector<Code>> run_root(Code root) {
    std::vector<std::vector<Code>> found;
    State st;
    st.floor = root;
    if (add(st, root)) expand(st, found);
    for (auto& h : found) std::sort(h.begin(), h.end());
    std::sort(found.begin(), found.end());
    return found;
  }

private:
  struct State {
    std::vector<Code> chosen;
    std::set<Code> required;
    Code floor = 0;
  };

  const Vector& vec(Code c) {
    auto it = vectors_.find(c);
    if (it == vectors_.end()) it = vectors_.emplace(c, decode(a_.field(), n_, c)).first;
    return it->second;
  }

  Code product(Code x, Code y) {
    const Code key = x * total_ + y;
    if (auto it = products_.find(key); it != products_.end()) return it->second;
    const Code p = encode(multiply(a_, vec(x), vec(y)));
    products_.emplace(key, p);
    return p;
  }

  bool contains(const std::vector<Code>& s, Code c) const { return std::find(s.begin(), s.end(), c) != s.end(); }

  // Adds v to S and queues the new products; false when the branch is dead.
  bool add(State& st, Code v) {
    st.chosen.push_back(v);
    auto queue = [&](Code p) {
      if (p == 0) return false;
      if (contains(st.chosen, p) || st.required.count(p)) return true;
      if (p < st.floor) return false;
      st.required.insert(p);
      return true;
    };
    for (Code c : st.chosen) {
      if (!queue(product(v, c)) || !queue(product(c, v))) return false;
    }
    const std::size_t size = st.chosen.size() + st.required.size();
    if (size > n_) return false;

    std::vector<Vector> rows;
    rows.reserve(size);
    for (Code c : st.chosen) rows.push_back(vec(c));
    for (Code c : st.required) rows.push_back(vec(c));
    return rank(Matrix::from_rows(a_.field(), n_, rows)) == size;
  }

  void expand(State& st, std::vector<std::vector<Code>>& found) {
    if (!st.required.empty()) {
      const Code next = *st.required.begin();
      st.required.erase(st.required.begin());
      if (add(st, next)) expand(st, found);
      return;
    }
    if (st.chosen.size() == n_) {
      found.push_back(st.chosen);
      return;
    }
    for (Code v = st.floor + 1; v < total_; ++v) {
      if (contains(st.chosen, v)) continue;
      State child = st;
      child.floor = v;
      if (add(child, v)) expand(child, found);
    }
  }

  const StructureAlgebra& a_;
  std::size_t n_;
  Code total_;
  std::unordered_map<Code, Vector> vectors_;
  std::unordered_map<Code, Code> products_;
};

} // namespace

std::vector<BasisCandidate> search_multiplicative_basis(const StructureAlgebra& a, const SearchOptions& options) {
  if (!a.field().is_finite()) throw Unsupported("basis search needs a finite field; supply a basis instead");
  if (options.element_limit == std::numeric_limits<std::uint64_t>::max()) {
    throw InvalidInput("element limit too large");
  }
  const Code total = space_size(a.field(), a.dim(), options.element_limit + 1);
  if (total > (Code{1} << 32)) throw LimitExceeded("search space too large for product memoization");
  const Code roots = total - 1;

  std::vector<std::vector<std::vector<Code>>> per_root(roots);
  std::atomic<Code> next_root{1};
  std::atomic<Code> best_root{std::numeric_limits<Code>::max()};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    BasisSearch search(a, total);
    try {
      for (Code root = next_root++; root < total; root = next_root++) {
        if (!options.find_all && root > best_root.load()) continue;
        auto found = search.run_root(root);
        if (!found.empty() && !options.find_all) {
          Code cur = best_root.load();
          while (root < cur && !best_root.compare_exchange_weak(cur, root)) {
          }
        }
        per_root[root - 1] = std::move(found);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<BasisCandidate> out;
  for (const auto& bucket : per_root) {
    for (const auto& codes : bucket) {
      std::vector<Vector> vs;
      for (Code c : codes) vs.push_back(decode(a.field(), a.dim(), c));
      out.push_back(BasisCandidate::make(a.field(), a.dim(), std::move(vs)));
      if (!options.find_all) return out;
    }
  }
  return out;
}

BasisCandidate known_product_basis(std::size_t n, const FieldSpec& field) {
  if (n == 0) throw InvalidInput("product basis needs n >= 1");
  std::vector<Vector> vs;
  for (std::size_t k = 1; k <= n; ++k) {
    Vector v = zero_vector(field, n);
    for (std::size_t i = 0; i < k; ++i) v[i] = field.one();
    vs.push_back(std::move(v));
  }
  return BasisCandidate::make(field, n, std::move(vs));
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
  case Verdict::basis_found_ideal_certified: return "basis_found_ideal_certified";
  case Verdict::no_basis_no_codim1: return "no_basis_no_codim1";
  case Verdict::no_basis_but_codim1: return "no_basis_but_codim1";
  case Verdict::search_skipped: return "search_skipped";
  case Verdict::inconsistent: return "inconsistent";
  }
  return "inconsistent";
}

TheoremCertificate certify(const StructureAlgebra& a, const CertifyOptions& options) {
  if (!options.allow_nonassociative) {
    if (auto bad = check_associativity(a)) {
      throw InvalidInput("algebra is not associative at (" + std::to_string(bad->i) + "," + std::to_string(bad->j) +
                         "," + std::to_string(bad->l) + ")");
    }
  }

  TheoremCertificate cert{algebra_digest(a), std::nullopt, std::nullopt, std::nullopt, {}, Verdict::search_skipped};
  bool searched = false;
  if (options.supplied_basis) {
    const BasisCandidate& h = *options.supplied_basis;
    if (!is_basis(a, h)) throw InvalidInput("supplied vectors are not a basis");
    if (auto bad = is_closed_under_multiplication(a, h)) {
      throw InvalidInput("supplied basis is not closed under multiplication: " + to_string(bad->left) + " * " +
                         to_string(bad->right) + " = " + to_string(bad->product));
    }
    cert.basis = h;
  } else if (a.field().is_finite()) {
    SearchOptions search = options.search;
    search.find_all = false;
    auto found = search_multiplicative_basis(a, search);
    searched = true;
    if (!found.empty()) cert.basis = std::move(found.front());
  }

  bool pipeline_ok = true;
  if (cert.basis) {
    cert.functional = coefficient_sum_functional(a, *cert.basis);
    if (verify_multiplicative(a, *cert.functional)) {
      cert.kernel = kernel_ideal_certificate(a, *cert.functional);
    } else {
      pipeline_ok = false;
    }
  }

  cert.codim1_report = enumerate_codim1_ideals(a, options.search.element_limit);
  const Codim1Report& report = cert.codim1_report;

  if (cert.basis) {
    bool consistent = pipeline_ok;
    if (consistent && report.complete) {
      consistent = std::any_of(report.ideals.begin(), report.ideals.end(),
                               [&](const IdealCertificate& c) { return c.subspace == cert.kernel->subspace; });
    }
    cert.verdict = consistent ? Verdict::basis_found_ideal_certified : Verdict::inconsistent;
  } else if (!searched) {
    cert.verdict = Verdict::search_skipped;
  } else {
    cert.verdict = report.ideals.empty() ? Verdict::no_basis_no_codim1 : Verdict::no_basis_but_codim1;
  }
  return cert;
}

} // namespace mbasis
