#include "regyb/search.hpp"

#include <chrono>
#include <thread>

namespace regyb {

std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                         std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return std::nullopt;
    out *= base;
  }
  return out;
}

Mat<GFElem> index_to_matrix(std::uint64_t index, std::size_t rows,
                            std::size_t cols, const GFElem::Ctx& ctx) {
  const std::size_t n = rows * cols;
  std::vector<GFElem> entries(n, GFElem::zero(ctx));
  for (std::size_t k = n; k-- > 0;) {
    entries[k] = GFElem(index % ctx.p, ctx);
    index /= ctx.p;
  }
  return Mat<GFElem>(rows, cols, ctx, std::move(entries));
}

std::uint64_t matrix_to_index(const Mat<GFElem>& m) {
  std::uint64_t index = 0;
  for (const GFElem& e : m.entries()) {
    index = index * m.ctx().p + e.value();
  }
  return index;
}

namespace {

// The hot path works on flat residue vectors so candidate filtering stays
// allocation-light; this is deliberately a separate code path from the
// Mat-based verification the tests re-run on every cataloged solution.
struct RawOps {
  std::uint64_t p;

  std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a,
                                 const std::vector<std::uint64_t>& b,
                                 std::size_t n) const {
    std::vector<std::uint64_t> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t aik = a[i * n + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % p;
        }
      }
    return c;
  }

  std::vector<std::uint64_t> kron(const std::vector<std::uint64_t>& a,
                                  std::size_t na,
                                  const std::vector<std::uint64_t>& b,
                                  std::size_t nb) const {
    const std::size_t n = na * nb;
    std::vector<std::uint64_t> c(n * n, 0);
    for (std::size_t i1 = 0; i1 < na; ++i1)
      for (std::size_t j1 = 0; j1 < na; ++j1) {
        const std::uint64_t v = a[i1 * na + j1];
        if (v == 0) continue;
        for (std::size_t i2 = 0; i2 < nb; ++i2)
          for (std::size_t j2 = 0; j2 < nb; ++j2) {
            c[(i1 * nb + i2) * n + (j1 * nb + j2)] =
                (v * b[i2 * nb + j2]) % p;
          }
      }
    return c;
  }
};

std::vector<std::uint64_t> flatten(const Mat<GFElem>& m) {
  std::vector<std::uint64_t> out;
  out.reserve(m.entries().size());
  for (const GFElem& e : m.entries()) out.push_back(e.value());
  return out;
}

void decode_candidate(std::uint64_t index, std::uint64_t p,
                      std::vector<std::uint64_t>& out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = index % p;
    index /= p;
  }
}

bool passes_filters(const std::vector<std::uint64_t>& r,
                    const std::vector<std::uint64_t>& e,
                    const std::vector<std::uint64_t>& ee,
                    const SearchSpec& spec, const RawOps& ops) {
  const std::size_t d = spec.dim;
  const std::size_t d2 = d * d;
  if (spec.constraints.commute_with_obstructor) {
    if (ops.mul(r, ee, d2) != ops.mul(ee, r, d2)) return false;
  }
  if (spec.constraints.regular_ybe) {
    const std::vector<std::uint64_t> er = ops.kron(e, d, r, d2);
    const std::vector<std::uint64_t> re = ops.kron(r, d2, e, d);
    const std::size_t d3 = d * d2;
    const std::vector<std::uint64_t> lhs =
        ops.mul(er, ops.mul(re, er, d3), d3);
    const std::vector<std::uint64_t> rhs =
        ops.mul(re, ops.mul(er, re, d3), d3);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

SolutionCatalog search_regular_ybe(const SearchSpec& spec) {
  const auto& ctx = spec.field;
  if (!is_prime(ctx.p)) {
    throw Error("search_regular_ybe: field characteristic must be prime");
  }
  if (spec.obstructor.rows() != spec.dim || !spec.obstructor.is_square()) {
    throw Error("search_regular_ybe: obstructor must be dim x dim");
  }
  if (spec.obstructor.ctx() != ctx) {
    throw Error("search_regular_ybe: obstructor field mismatch");
  }
  if (!is_idempotent(spec.obstructor)) {
    throw Error("search_regular_ybe: obstructor is not idempotent");
  }
  const std::size_t entry_count = spec.dim * spec.dim * spec.dim * spec.dim;
  const std::optional<std::uint64_t> total = checked_pow(ctx.p, entry_count);
  if (!total || *total > spec.cap) {
    const std::string count =
        total ? std::to_string(*total)
              : std::to_string(ctx.p) + "^" + std::to_string(entry_count);
    throw Error("search_regular_ybe: candidate count " + count +
                " exceeds cap of " + std::to_string(spec.cap));
  }

  const auto start = std::chrono::steady_clock::now();
  const RawOps ops{ctx.p};
  const std::vector<std::uint64_t> e = flatten(spec.obstructor);
  const std::vector<std::uint64_t> ee =
      ops.kron(e, spec.dim, e, spec.dim);

  const unsigned workers = spec.workers == 0 ? 1 : spec.workers;
  std::vector<std::vector<std::uint64_t>> found(workers);
  auto scan = [&](unsigned w) {
    const auto chunk = [&](unsigned i) {
      return static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(*total) * i / workers);
    };
    const std::uint64_t lo = chunk(w);
    const std::uint64_t hi = chunk(w + 1);
    std::vector<std::uint64_t> cand(spec.dim * spec.dim * spec.dim * spec.dim);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      decode_candidate(idx, ctx.p, cand);
      if (passes_filters(cand, e, ee, spec, ops)) {
        found[w].push_back(idx);
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (std::thread& t : pool) t.join();
  }

  SolutionCatalog cat;
  cat.task = "regular-ybe";
  cat.spec = spec;
  cat.spec->workers = 1;  // scheduling detail, not part of the result identity
  cat.examined = *total;
  for (unsigned w = 0; w < workers; ++w) {
    for (std::uint64_t idx : found[w]) {
      SolutionEntry entry;
      entry.level = 1;
      entry.matrix = index_to_matrix(idx, spec.dim * spec.dim,
                                     spec.dim * spec.dim, ctx);
      if (spec.constraints.commute_with_obstructor) {
        entry.axioms.push_back("operator-obstructor-commute");
      }
      if (spec.constraints.regular_ybe) {
        entry.axioms.push_back("regular-ybe");
      }
      if (spec.constraints.star_exists) {
        Mat<GFElem> star = reflexive_ginverse(entry.matrix);
        const Mat<GFElem>& r = entry.matrix;
        if (mat_mul(r, mat_mul(star, r)) != r ||
            mat_mul(star, mat_mul(r, star)) != star) {
          continue;  // cannot happen: the reflexive g-inverse always exists
        }
        entry.axioms.push_back("operator-star");
        entry.axioms.push_back("operator-star-reflexive");
        entry.star = std::move(star);
      }
      cat.solutions.push_back(std::move(entry));
    }
  }
  cat.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return cat;
}

std::vector<Mat<GFElem>> find_star_partner(const Mat<GFElem>& r,
                                           bool reflexive,
                                           std::uint64_t cap) {
  return solve_inner_inverses(r, reflexive, cap);
}

std::vector<Mat<Rational>> find_star_partner(const Mat<Rational>& r,
                                             bool reflexive) {
  (void)reflexive;  // the deterministic answer is reflexive by construction
  return {reflexive_ginverse(r)};
}

SolutionCatalog search_regular_antipodes(const Bialgebra<GFElem>& h,
                                         std::uint64_t cap) {
  const auto start = std::chrono::steady_clock::now();
  SolutionCatalog cat;
  cat.task = "regular-antipode";
  for (std::size_t n = 0; n < h.levels(); ++n) {
    const std::size_t d = h.dim(n);
    const std::optional<std::uint64_t> total =
        checked_pow(h.ctx().p, d * d);
    if (!total || *total > cap) {
      throw Error("search_regular_antipodes: candidate count exceeds cap of " +
                  std::to_string(cap));
    }
    const Mat<GFElem>& e = h.obstructor(n);
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
      Mat<GFElem> s = index_to_matrix(idx, d, d, h.ctx());
      const Mat<GFElem> ese = convolution(h, n, convolution(h, n, e, s), e);
      if (ese != e) continue;
      const Mat<GFElem> ses = convolution(h, n, convolution(h, n, s, e), s);
      if (ses != s) continue;
      SolutionEntry entry;
      entry.level = n + 1;
      entry.matrix = std::move(s);
      entry.axioms = {"antipode-regularity", "antipode-reflexivity"};
      cat.solutions.push_back(std::move(entry));
    }
    cat.examined += *total;
  }
  cat.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return cat;
}

}  // namespace regyb
