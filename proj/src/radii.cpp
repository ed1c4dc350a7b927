#include "gencover/radii.hpp"

#include <algorithm>
#include <limits>

#include "gencover/planner.hpp"
#include "gencover/random.hpp"

namespace gencover {

namespace {

constexpr std::uint8_t kUnseen = 0xFF;

// Digit-wise addition of base-p integers, processed in chunks of c digits so
// that a p^c x p^c lookup table covers one chunk. p = 2 is handled by XOR
// at the call site.
class ChunkAdder {
 public:
  ChunkAdder(std::uint32_t p, std::size_t digits) : p_(p) {
    std::size_t c = 1;
    std::uint64_t base = p;
    while (base * p <= 256 && c < digits) {
      base *= p;
      ++c;
    }
    base_ = base;
    chunks_ = digits == 0 ? 0 : (digits + c - 1) / c;
    pow_.resize(chunks_);
    std::uint64_t w = 1;
    for (std::size_t i = 0; i < chunks_; ++i, w *= base_) pow_[i] = w;
    if (base_ <= 256) {
      table_.resize(base_ * base_);
      for (std::uint64_t a = 0; a < base_; ++a)
        for (std::uint64_t b = 0; b < base_; ++b) {
          std::uint64_t x = a, y = b, out = 0, scale = 1;
          for (std::size_t d = 0; d < c; ++d) {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
          }
          table_[a * base_ + b] = static_cast<std::uint32_t>(out);
        }
    }
  }

  std::size_t chunks() const { return chunks_; }

  void split(std::uint64_t idx, std::uint32_t* out) const {
    for (std::size_t i = 0; i < chunks_; ++i) {
      out[i] = static_cast<std::uint32_t>(idx % base_);
      idx /= base_;
    }
  }

  std::uint64_t add(const std::uint32_t* a, const std::uint32_t* b) const {
    std::uint64_t out = 0;
    if (!table_.empty()) {
      for (std::size_t i = 0; i < chunks_; ++i) out += table_[a[i] * base_ + b[i]] * pow_[i];
    } else {
      for (std::size_t i = 0; i < chunks_; ++i) {
        std::uint64_t s = std::uint64_t{a[i]} + b[i];
        if (s >= p_) s -= p_;
        out += s * pow_[i];
      }
    }
    return out;
  }

 private:
  std::uint32_t p_;
  std::uint64_t base_ = 1;
  std::size_t chunks_ = 0;
  std::vector<std::uint64_t> pow_;
  std::vector<std::uint32_t> table_;
};

std::uint64_t encode_vec(std::span<const Elem> v, std::uint64_t Q) {
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * Q + v[i];
  return idx;
}

Vec decode_vec(std::uint64_t idx, std::uint64_t Q, std::size_t len) {
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = static_cast<Elem>(idx % Q);
    idx /= Q;
  }
  return v;
}

// Coset-leader BFS on an explicit full-rank parity-check matrix.
CoveringResult bfs_covering(const Matrix& H, const SearchLimits& limits) {
  const Field& f = H.f();
  const std::uint64_t Q = f.order();
  const std::size_t r = H.rows();
  const std::uint64_t states = saturating_pow(Q, r);
  if (states > limits.state_cap)
    throw Error(Errc::SyndromeSpaceTooLarge,
                std::to_string(Q) + "^" + std::to_string(r) + " syndromes exceed the cap of " +
                    std::to_string(limits.state_cap));
  if (r + 1 >= kUnseen) throw Error(Errc::SyndromeSpaceTooLarge, "redundancy too large for BFS");

  CoveringResult out;
  if (r == 0) {
    out.coset_weights = {1};
    return out;
  }

  // Every nonzero multiple of every column.
  std::vector<std::uint64_t> deltas;
  for (std::size_t j = 0; j < H.cols(); ++j) {
    const Vec h = H.column(j);
    for (Elem a = 1; a < Q; ++a) {
      Vec v(r);
      for (std::size_t i = 0; i < r; ++i) v[i] = f.mul(a, h[i]);
      const std::uint64_t d = encode_vec(v, Q);
      if (d != 0) deltas.push_back(d);
    }
  }
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());

  std::vector<std::uint8_t> dist(states, kUnseen);
  dist[0] = 0;
  out.coset_weights.push_back(1);
  std::uint64_t seen = 1;

  const std::uint32_t p = f.characteristic();
  const std::size_t digits = static_cast<std::size_t>(f.degree()) * r;
  ChunkAdder adder(p, digits);
  std::vector<std::uint32_t> delta_chunks(deltas.size() * adder.chunks());
  for (std::size_t d = 0; d < deltas.size(); ++d)
    adder.split(deltas[d], delta_chunks.data() + d * adder.chunks());
  std::vector<std::uint32_t> cur(adder.chunks());

  for (std::uint8_t w = 0; seen < states; ++w) {
    std::uint64_t added = 0;
    const std::uint8_t next = static_cast<std::uint8_t>(w + 1);
    for (std::uint64_t s = 0; s < states; ++s) {
      if (dist[s] != w) continue;
      if (p == 2) {
        for (auto d : deltas) {
          const std::uint64_t nx = s ^ d;
          if (dist[nx] == kUnseen) {
            dist[nx] = next;
            ++added;
          }
        }
      } else {
        adder.split(s, cur.data());
        for (std::size_t d = 0; d < deltas.size(); ++d) {
          const std::uint64_t nx = adder.add(cur.data(), delta_chunks.data() + d * adder.chunks());
          if (dist[nx] == kUnseen) {
            dist[nx] = next;
            ++added;
          }
        }
      }
    }
    if (added == 0)
      throw Error(Errc::PropertyViolation, "parity-check matrix is not of full row rank");
    out.coset_weights.push_back(added);
    seen += added;
  }
  out.radius = out.coset_weights.size() - 1;
  for (std::uint64_t s = 0; s < states; ++s)
    if (dist[s] == out.radius) {
      out.deep_hole = decode_vec(s, Q, r);
      break;
    }
  return out;
}

std::vector<std::size_t> minimal_columns(const Matrix& H, const std::vector<Vec>& syndromes,
                                         const SearchLimits& limits) {
  return plan_exact(H, syndromes, PlanLimits{limits.state_cap}).columns;
}

// First lexicographic I of size r with every target inside span(H_I).
std::optional<std::vector<std::size_t>> cover_with(const std::vector<Vec>& cols,
                                                   const FieldPtr& field, std::size_t dim,
                                                   const std::vector<Vec>& targets, std::size_t r) {
  std::optional<std::vector<std::size_t>> found;
  for_each_combination(cols.size(), r, [&](std::span<const std::size_t> I) {
    EchelonBasis basis(field, dim);
    for (auto c : I) basis.insert(cols[c]);
    for (const auto& t : targets)
      if (!basis.contains(t)) return true;
    found.emplace(I.begin(), I.end());
    return false;
  });
  return found;
}

RadiusEntry lifted_radius(const LinearCode& code, std::size_t t, const SearchLimits& limits) {
  const FieldPtr& base = code.field();
  if (t > 1 && !base->is_prime())
    throw Error(Errc::MethodInfeasible,
                "lifted method needs a prime base field, got q = " + std::to_string(base->order()));
  const Matrix& H = code.parity_check();
  // The base-field H, read over F_{q^t}, is a parity-check matrix of the
  // lifted code: G H^T = 0 and the row rank survive the embedding.
  FieldPtr ext = t == 1 ? base : Field::create(base->characteristic(), static_cast<unsigned>(t));
  const Matrix H_ext(ext, H.rows(), H.cols(), H.data());
  CoveringResult cr;
  try {
    cr = bfs_covering(H_ext, limits);
  } catch (const Error& e) {
    if (e.code() == Errc::SyndromeSpaceTooLarge) throw Error(Errc::MethodInfeasible, e.what());
    throw;
  }

  RadiusEntry entry;
  entry.t = t;
  entry.value = cr.radius;
  entry.method = Method::Lifted;
  if (H.rows() == 0) return entry;
  if (t == 1) {
    entry.witness_syndromes = {cr.deep_hole};
  } else {
    const Matrix rows = xi_inv(cr.deep_hole, ext, base);
    for (std::size_t i = 0; i < rows.rows(); ++i)
      entry.witness_syndromes.emplace_back(rows.row(i).begin(), rows.row(i).end());
  }
  entry.witness_columns = minimal_columns(H, entry.witness_syndromes, limits);
  return entry;
}

RadiusEntry ball_cover_radius(const LinearCode& code, std::size_t t, const SearchLimits& limits) {
  const std::uint64_t q = code.field()->order();
  const std::size_t n = code.n();
  const std::uint64_t Q = saturating_pow(q, t);
  const std::uint64_t points = saturating_pow(Q, n);
  const std::uint64_t tuples = saturating_pow(q, t * code.k());
  if (points > limits.state_cap)
    throw Error(Errc::MethodInfeasible, "ball cover needs " + std::to_string(points) +
                                            " matrix-space points, above the cap");
  if (tuples > limits.state_cap)
    throw Error(Errc::MethodInfeasible,
                "ball cover needs " + std::to_string(tuples) + " codeword tuples, above the cap");

  // Column codes of every tuple in C^t: column j -> sum_i c_i[j] q^i.
  const auto words = code.codewords(limits.state_cap);
  const std::uint64_t W = words.size();
  std::vector<std::uint32_t> tuple_cols(tuples * n);
  for (std::uint64_t T = 0; T < tuples; ++T) {
    std::uint64_t rest = T;
    std::vector<std::uint64_t> pick(t);
    for (std::size_t i = 0; i < t; ++i) {
      pick[i] = rest % W;
      rest /= W;
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t v = 0;
      for (std::size_t i = t; i-- > 0;) v = v * q + words[pick[i]][j];
      tuple_cols[T * n + j] = static_cast<std::uint32_t>(v);
    }
  }

  std::vector<std::uint32_t> point(n, 0);
  std::vector<std::uint32_t> deepest(n, 0);
  std::size_t best = 0;
  auto distance_to = [&](std::uint64_t T, std::size_t bound) {
    const std::uint32_t* c = tuple_cols.data() + T * n;
    std::size_t d = 0;
    for (std::size_t j = 0; j < n && d < bound; ++j) d += point[j] != c[j];
    return d;
  };
  // Successive points differ in few columns, so the tuple that last settled
  // a point is tried first.
  std::uint64_t hint = 0;
  for (std::uint64_t P = 0; P < points; ++P) {
    std::size_t closest = distance_to(hint, n + 1);
    for (std::uint64_t T = 0; T < tuples && closest > best; ++T) {
      const std::size_t d = distance_to(T, closest);
      if (d < closest) {
        closest = d;
        hint = T;
      }
    }
    if (closest > best) {
      best = closest;
      deepest = point;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (++point[j] < Q) break;
      point[j] = 0;
    }
  }

  RadiusEntry entry;
  entry.t = t;
  entry.value = best;
  entry.method = Method::BallCover;
  const Matrix& H = code.parity_check();
  if (H.rows() == 0) return entry;
  Matrix v(code.field(), t, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t x = deepest[j];
    for (std::size_t i = 0; i < t; ++i) {
      v(i, j) = static_cast<Elem>(x % q);
      x /= q;
    }
  }
  for (std::size_t i = 0; i < t; ++i) entry.witness_syndromes.push_back(H * v.row(i));
  entry.witness_columns = minimal_columns(H, entry.witness_syndromes, limits);
  return entry;
}

RadiusEntry trivial_entry(const Matrix& H, std::size_t t, Method method) {
  RadiusEntry e;
  e.t = t;
  e.value = H.rows();
  e.method = method;
  e.trivial = true;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    Vec unit(H.rows(), 0);
    unit[i] = 1;
    e.witness_syndromes.push_back(std::move(unit));
  }
  e.witness_columns = rref(H).pivot_cols;
  return e;
}

}  // namespace

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::Lifted: return "lifted";
    case Method::SpanCover: return "span";
    case Method::BallCover: return "ball";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "lifted") return Method::Lifted;
  if (name == "span" || name == "span_cover") return Method::SpanCover;
  if (name == "ball" || name == "ball_cover") return Method::BallCover;
  return std::nullopt;
}

std::vector<std::size_t> RadiiReport::values() const {
  std::vector<std::size_t> out;
  for (const auto& e : entries) out.push_back(e.value);
  return out;
}

std::size_t t_weight(const Matrix& v) {
  std::size_t w = 0;
  for (std::size_t j = 0; j < v.cols(); ++j)
    for (std::size_t i = 0; i < v.rows(); ++i)
      if (v(i, j) != 0) {
        ++w;
        break;
      }
  return w;
}

std::size_t t_distance(const Matrix& u, const Matrix& v) {
  require_same_field(u.field(), v.field(), "t_distance");
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw Error(Errc::DimensionMismatch, "t_distance needs equal shapes");
  // Column j of u - v vanishes iff the columns agree.
  std::size_t d = 0;
  for (std::size_t j = 0; j < u.cols(); ++j)
    for (std::size_t i = 0; i < u.rows(); ++i)
      if (u(i, j) != v(i, j)) {
        ++d;
        break;
      }
  return d;
}

BigInt ball_volume(std::size_t t, std::size_t r, std::size_t n, std::uint64_t q) {
  if (r > n) throw Error(Errc::RadiusOutOfRange, "radius exceeds length");
  if (q < 2) throw Error(Errc::DomainError, "alphabet size must be at least 2");
  BigInt qt = 1;
  for (std::size_t i = 0; i < t; ++i) qt *= q;
  const BigInt base = qt - 1;
  BigInt total = 0, binom = 1, power = 1;
  for (std::size_t i = 0; i <= r; ++i) {
    total += binom * power;
    binom = binom * (n - i) / (i + 1);
    power *= base;
  }
  return total;
}

CoveringResult covering_radius(const LinearCode& code, const SearchLimits& limits) {
  return bfs_covering(code.parity_check(), limits);
}

RadiusEntry span_cover_radius(const Matrix& H, std::size_t t, const SearchLimits& limits,
                              const SpanCoverOptions& options) {
  if (t < 1) throw Error(Errc::TOutOfRange, "t must be at least 1");
  const std::size_t dim = H.rows();
  const FieldPtr& field = H.field();
  const std::uint64_t q = field->order();
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < H.cols(); ++j) cols.push_back(H.column(j));

  RadiusEntry entry;
  entry.t = t;
  entry.method = Method::SpanCover;
  bool have = false;

  auto consider = [&](std::vector<Vec> targets, std::size_t lower) {
    if (have && cover_with(cols, field, dim, targets, entry.value)) return;
    for (std::size_t s = have ? std::max(entry.value + 1, lower) : lower; s <= cols.size(); ++s) {
      if (auto I = cover_with(cols, field, dim, targets, s)) {
        entry.value = s;
        entry.witness_syndromes = std::move(targets);
        entry.witness_columns = std::move(*I);
        have = true;
        return;
      }
    }
    throw Error(Errc::Infeasible, "parity-check columns do not span the syndrome space");
  };

  if (options.independent_only) {
    const std::size_t d = std::min(t, dim);
    const std::uint64_t count = gaussian_binomial(dim, d, q);
    if (count > limits.state_cap)
      throw Error(Errc::MethodInfeasible,
                  "span cover needs " + std::to_string(count) + " subspaces, above the cap");
    for_each_subspace(field, dim, d, [&](const Matrix& basis) {
      std::vector<Vec> targets;
      for (std::size_t i = 0; i < basis.rows(); ++i)
        targets.emplace_back(basis.row(i).begin(), basis.row(i).end());
      consider(std::move(targets), d);
      return true;
    });
  } else {
    const std::uint64_t space = saturating_pow(q, dim);
    const std::uint64_t count = binomial(space, t);
    if (space < t)
      throw Error(Errc::MethodInfeasible, "no syndrome set of size " + std::to_string(t) + " exists");
    if (count > limits.state_cap)
      throw Error(Errc::MethodInfeasible,
                  "span cover needs " + std::to_string(count) + " syndrome sets, above the cap");
    std::vector<Vec> all;
    for_each_vector(field, dim, [&](std::span<const Elem> v) {
      all.emplace_back(v.begin(), v.end());
      return true;
    });
    for_each_combination(all.size(), t, [&](std::span<const std::size_t> pick) {
      std::vector<Vec> targets;
      EchelonBasis b(field, dim);
      for (auto i : pick) {
        targets.push_back(all[i]);
        b.insert(all[i]);
      }
      consider(std::move(targets), b.rank());
      return true;
    });
  }
  return entry;
}

RadiusEntry generalized_radius(const LinearCode& code, std::size_t t, Method method,
                               const SearchLimits& limits, const SpanCoverOptions& options) {
  if (t < 1) throw Error(Errc::TOutOfRange, "t must be at least 1");
  switch (method) {
    case Method::Lifted: return lifted_radius(code, t, limits);
    case Method::SpanCover: return span_cover_radius(code.parity_check(), t, limits, options);
    case Method::BallCover: return ball_cover_radius(code, t, limits);
  }
  throw Error(Errc::DomainError, "unknown method");
}

RadiiReport radii_hierarchy(const LinearCode& code, std::size_t t_max, Method method,
                            const SearchLimits& limits) {
  RadiiReport report;
  report.n = code.n();
  report.k = code.k();
  report.q = code.field()->order();
  report.method = method;
  const std::size_t r = code.redundancy();
  for (std::size_t t = 1; t <= t_max; ++t) {
    if (t >= r)
      report.entries.push_back(trivial_entry(code.parity_check(), t, method));
    else
      report.entries.push_back(generalized_radius(code, t, method, limits));
    if (t > 1 && report.entries[t - 1].value < report.entries[t - 2].value)
      throw Error(Errc::PropertyViolation, "hierarchy is not nondecreasing at t = " + std::to_string(t));
  }
  return report;
}

bool check_parity_invariance(const LinearCode& code, std::size_t t_max, std::size_t trials,
                             std::uint64_t seed, const SearchLimits& limits) {
  if (trials < 1) throw Error(Errc::DomainError, "trials must be at least 1");
  const Matrix& H = code.parity_check();
  const std::size_t r = H.rows();
  if (r == 0) return true;
  std::vector<std::size_t> reference;
  for (std::size_t t = 1; t <= t_max; ++t)
    reference.push_back(span_cover_radius(H, t, limits).value);
  std::uint64_t draw = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Matrix A(code.field(), r, r);
    do {
      A = random_matrix(r, r, code.field(), derive_seed(seed, draw++));
    } while (rank(A) < r);
    const Matrix AH = A * H;
    for (std::size_t t = 1; t <= t_max; ++t)
      if (span_cover_radius(AH, t, limits).value != reference[t - 1]) return false;
  }
  return true;
}

}  // namespace gencover
