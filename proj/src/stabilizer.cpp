#include "covdbl/stabilizer.hpp"

#include <map>
#include <thread>

namespace covdbl {

namespace {

using Flat = std::vector<std::uint32_t>;

Flat flatten(const FpMatrix& m) {
  Flat out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

// One enumerated block element with everything needed to write l and l^{-1}.
struct BlockElem {
  Flat fwd, inv, mirror_fwd, mirror_inv;
};

struct Placement {
  int offset = 0;
  int size = 0;
  int mirror_offset = -1;  // -1: no mirrored copy
  const std::vector<BlockElem>* elems = nullptr;
};

struct Entry {
  int row, col;
  std::uint32_t value;
};

struct TestElement {
  std::vector<Entry> nilpotent;  // u - I
  std::uint32_t target;          // psi(u)
};

void write_block(Flat& dst, int n, int off, int size, const Flat& src) {
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      dst[static_cast<std::size_t>((off + i) * n + off + j)] = src[static_cast<std::size_t>(i * size + j)];
}

}  // namespace

Integer levi_order(const ParabolicSpec& par, std::uint32_t p) {
  Integer order(1);
  for (int c : par.gl_blocks) order *= group_order(GroupSpec(Family::GL, c), p);
  if (is_classical(par.ambient.family) && par.central > 0) {
    order *= group_order(GroupSpec(par.ambient.family, par.central), p);
  }
  return order;
}

StabilizerCount count_levi_stabilizer(const ParabolicSpec& par, const CharacterFunctional& psi, std::uint32_t p,
                                      unsigned threads, std::uint64_t budget) {
  const PrimeField fp(p);
  const Integer order = levi_order(par, p);
  if (order > Integer(static_cast<unsigned long>(budget))) {
    throw std::length_error("Levi enumeration needs budget " + order.get_str() + ", limit is " +
                            std::to_string(budget));
  }
  const bool classical = is_classical(par.ambient.family);
  const int n = par.ambient.size;

  // GL_c(F_p) is enumerated once per distinct size; mirrored blocks depend on
  // the block position through the form, so they are built per block.
  std::map<int, std::vector<FpMatrix>> gl_groups;
  std::vector<std::vector<BlockElem>> block_lists(par.gl_blocks.size());
  std::vector<Placement> places;
  for (std::size_t bi = 0; bi < par.gl_blocks.size(); ++bi) {
    const int c = par.gl_blocks[bi];
    if (!gl_groups.count(c)) gl_groups[c] = enumerate_group(GroupSpec(Family::GL, c), fp, budget);
    auto& list = block_lists[bi];
    list.reserve(gl_groups[c].size());
    for (const auto& h : gl_groups[c]) {
      const FpMatrix hinv = inverse_or_throw(h);
      BlockElem e{flatten(h), flatten(hinv), {}, {}};
      if (classical) {
        e.mirror_fwd = flatten(mirror_block(par, bi, h));
        e.mirror_inv = flatten(mirror_block(par, bi, hinv));
      }
      list.push_back(std::move(e));
    }
    Placement pl;
    pl.offset = par.block_offsets[bi];
    pl.size = c;
    pl.elems = &list;
    if (classical) pl.mirror_offset = par.block_offsets[par.mirror(bi)];
    places.push_back(pl);
  }
  std::vector<BlockElem> central_list;
  if (classical && par.central > 0) {
    for (const auto& s : enumerate_group(GroupSpec(par.ambient.family, par.central), fp, budget)) {
      central_list.push_back({flatten(s), flatten(inverse_or_throw(s)), {}, {}});
    }
    Placement pl;
    pl.offset = par.block_offsets[par.gl_blocks.size()];
    pl.size = par.central;
    pl.elems = &central_list;
    places.push_back(pl);
  }

  std::vector<std::pair<std::size_t, std::uint32_t>> terms;  // flat index, coefficient
  for (const auto& t : psi.terms) {
    terms.emplace_back(static_cast<std::size_t>(t.row * n + t.col), fp.from_rational(t.coef));
  }
  std::vector<TestElement> tests;
  for (Coord c : par.layer_coords()) {
    const FpMatrix u = root_element(par.ambient, c, fp.one(), fp);
    TestElement te;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto v = u(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (i == j) v = fp.sub(v, 1);
        if (v != 0) te.nilpotent.push_back({i, j, v});
      }
    te.target = psi.value(u);
    tests.push_back(std::move(te));
  }

  std::uint64_t total = 1;
  for (const auto& pl : places) total *= pl.elems->size();

  auto worker = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    Flat l(static_cast<std::size_t>(n * n), 0), linv(static_cast<std::size_t>(n * n), 0);
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (const auto& pl : places) {
        const auto& e = (*pl.elems)[rest % pl.elems->size()];
        rest /= pl.elems->size();
        write_block(l, n, pl.offset, pl.size, e.fwd);
        write_block(linv, n, pl.offset, pl.size, e.inv);
        if (pl.mirror_offset >= 0) {
          write_block(l, n, pl.mirror_offset, pl.size, e.mirror_fwd);
          write_block(linv, n, pl.mirror_offset, pl.size, e.mirror_inv);
        }
      }
      bool fixed = true;
      for (const auto& te : tests) {
        std::uint32_t val = 0;
        for (const auto& [flat, coef] : terms) {
          const std::size_t r = flat / static_cast<std::size_t>(n);
          const std::size_t c = flat % static_cast<std::size_t>(n);
          std::uint32_t entry = 0;
          for (const auto& nz : te.nilpotent) {
            const std::uint32_t left = l[r * static_cast<std::size_t>(n) + static_cast<std::size_t>(nz.row)];
            if (left == 0) continue;
            const std::uint32_t right = linv[static_cast<std::size_t>(nz.col * n) + c];
            entry = fp.add(entry, fp.mul(fp.mul(left, nz.value), right));
          }
          val = fp.add(val, fp.mul(coef, entry));
        }
        if (val != te.target) {
          fixed = false;
          break;
        }
      }
      if (fixed) ++count;
    }
    return count;
  };

  const unsigned workers = std::max(1u, threads);
  std::vector<std::uint64_t> partial(workers, 0);
  if (workers == 1) {
    partial[0] = worker(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min(total, chunk * w);
      const std::uint64_t e = std::min(total, b + chunk);
      pool.emplace_back([&, w, b, e] { partial[w] = worker(b, e); });
    }
    for (auto& t : pool) t.join();
  }
  StabilizerCount out;
  out.levi_order = total;
  for (auto c : partial) out.stabilizer_order += c;
  return out;
}

}  // namespace covdbl
