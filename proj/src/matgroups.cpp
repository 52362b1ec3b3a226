#include "covdbl/matgroups.hpp"

#include <numeric>
#include <unordered_set>

namespace covdbl {

GroupSpec::GroupSpec(Family fam, int n) : family(fam), size(n) {
  if (n < 1) throw std::invalid_argument("group size must be positive");
  if ((fam == Family::Sp || fam == Family::SOeven) && n % 2 != 0) {
    throw std::invalid_argument(family_name(fam) + " needs an even size, got " + std::to_string(n));
  }
  if (fam == Family::SOodd && n % 2 == 0) {
    throw std::invalid_argument("SOodd needs an odd size, got " + std::to_string(n));
  }
}

long GroupSpec::dimension() const {
  const long n = size;
  switch (family) {
    case Family::GL: return n * n;
    case Family::SL: return n * n - 1;
    case Family::Sp: return n * (n + 1) / 2;
    case Family::SOodd:
    case Family::SOeven: return n * (n - 1) / 2;
  }
  return 0;
}

int GroupSpec::epsilon(int i) const {
  if (family == Family::Sp) return 2 * i < size ? 1 : -1;
  if (is_orthogonal(family)) return 1;
  return 0;
}

ParabolicSpec parabolic(const GroupSpec& spec, std::vector<int> gl_blocks, int central) {
  ParabolicSpec par;
  par.ambient = spec;
  par.gl_blocks = std::move(gl_blocks);
  par.central = central;
  for (int c : par.gl_blocks)
    if (c < 1) throw std::invalid_argument("Levi block sizes must be positive");
  if (central < 0) throw std::invalid_argument("central block size must be >= 0");

  const long gl_sum = std::accumulate(par.gl_blocks.begin(), par.gl_blocks.end(), 0L);
  if (is_classical(spec.family)) {
    if (2 * gl_sum + central != spec.size) {
      throw std::invalid_argument("blocks 2*" + std::to_string(gl_sum) + " + " + std::to_string(central) +
                                  " do not tile size " + std::to_string(spec.size));
    }
    if (spec.family == Family::Sp && central % 2 != 0) throw std::invalid_argument("central Sp block must be even");
    par.block_sizes = par.gl_blocks;
    if (central > 0) par.block_sizes.push_back(central);
    par.block_sizes.insert(par.block_sizes.end(), par.gl_blocks.rbegin(), par.gl_blocks.rend());
  } else {
    if (central != 0) throw std::invalid_argument("GL/SL parabolics take no central block");
    if (gl_sum != spec.size) {
      throw std::invalid_argument("blocks sum to " + std::to_string(gl_sum) + ", not size " + std::to_string(spec.size));
    }
    par.block_sizes = par.gl_blocks;
  }
  int off = 0;
  for (int c : par.block_sizes) {
    par.block_offsets.push_back(off);
    off += c;
  }

  const int n = spec.size;
  std::vector<int> block_index(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) block_index[static_cast<std::size_t>(i)] = par.block_of(i);
  for (int i = 0; i < n; ++i) {
    const int bi = block_index[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (block_index[static_cast<std::size_t>(j)] <= bi) continue;
      if (is_classical(spec.family)) {
        if (i + j > n - 1) continue;
        if (i + j == n - 1 && is_orthogonal(spec.family)) continue;
      }
      par.radical_coords.push_back({i, j});
    }
  }
  par.radical_dim = static_cast<long>(par.radical_coords.size());
  return par;
}

int ParabolicSpec::block_of(int index) const {
  auto it = std::upper_bound(block_offsets.begin(), block_offsets.end(), index);
  return static_cast<int>(it - block_offsets.begin()) - 1;
}

std::size_t ParabolicSpec::mirror(std::size_t block) const {
  return is_classical(ambient.family) ? block_sizes.size() - 1 - block : block;
}

long ParabolicSpec::levi_dimension() const {
  long d = 0;
  for (int c : gl_blocks) d += static_cast<long>(c) * c;
  if (is_classical(ambient.family) && central > 0) d += GroupSpec(ambient.family, central).dimension();
  if (ambient.family == Family::SL) d -= 1;
  return d;
}

std::vector<Coord> ParabolicSpec::layer_coords() const {
  std::vector<Coord> out;
  for (Coord c : radical_coords)
    if (block_of(c.col) == block_of(c.row) + 1) out.push_back(c);
  return out;
}

std::vector<Coord> root_positions(const GroupSpec& spec) {
  std::vector<Coord> out;
  const int n = spec.size;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (is_classical(spec.family)) {
        const Coord partner{n - 1 - j, n - 1 - i};
        const Coord self{i, j};
        if (partner < self) continue;
        if (partner == self && is_orthogonal(spec.family)) continue;
      }
      out.push_back({i, j});
    }
  }
  return out;
}

bool root_needs_half(const GroupSpec& spec, Coord pos) {
  if (spec.family != Family::SOodd) return false;
  const int mid = spec.size / 2;
  return pos.row == mid || pos.col == mid;
}

Integer group_order(const GroupSpec& spec, std::uint64_t q) {
  const Integer qq(static_cast<unsigned long>(q));
  auto qpow = [&](unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), qq.get_mpz_t(), e);
    return r;
  };
  const auto n = static_cast<unsigned long>(spec.size);
  switch (spec.family) {
    case Family::GL:
    case Family::SL: {
      Integer order(1);
      for (unsigned long i = 0; i < n; ++i) order *= qpow(n) - qpow(i);
      if (spec.family == Family::SL) order /= qq - 1;
      return order;
    }
    case Family::Sp: {
      const unsigned long h = n / 2;
      Integer order = qpow(h * h);
      for (unsigned long i = 1; i <= h; ++i) order *= qpow(2 * i) - 1;
      return order;
    }
    default: break;
  }
  throw std::invalid_argument("group order not available for " + family_name(spec.family));
}

namespace {

std::uint32_t primitive_root(const PrimeField& f) {
  const std::uint32_t p = f.characteristic();
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint32_t q : factors) {
      std::uint32_t e = (p - 1) / q, r = 1, b = g;
      while (e) {
        if (e & 1) r = f.mul(r, b);
        b = f.mul(b, b);
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

}  // namespace

std::vector<FpMatrix> enumerate_group(const GroupSpec& spec, const PrimeField& f, std::uint64_t budget) {
  const Integer order = group_order(spec, f.characteristic());
  if (order > Integer(static_cast<unsigned long>(budget))) {
    throw std::length_error("group of order " + order.get_str() + " exceeds enumeration budget " +
                            std::to_string(budget));
  }
  const auto n = static_cast<std::size_t>(spec.size);
  const std::uint64_t p = f.characteristic();
  // base-p code of the entries must fit in 64 bits
  {
    long double cap = 1;
    for (std::size_t i = 0; i < n * n; ++i) cap *= static_cast<long double>(p);
    if (cap > 1.8e19L) throw std::invalid_argument("matrices too large to encode for enumeration");
  }
  auto encode = [&](const FpMatrix& m) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code = code * p + m(i, j);
    return code;
  };

  std::vector<FpMatrix> gens;
  for (Coord c : root_positions(spec)) {
    if (characteristic_two(f) && root_needs_half(spec, c)) continue;
    gens.push_back(root_element(spec, c, f.one(), f));
  }
  const std::uint32_t g = primitive_root(f);
  std::vector<PrimeField::Elem> params(n, 1);
  params[0] = g;
  if (spec.family == Family::GL || g != 1) gens.push_back(torus_element(spec, params, f));

  std::vector<FpMatrix> elems;
  std::unordered_set<std::uint64_t> seen;
  const auto target = static_cast<std::size_t>(order.get_ui());
  elems.reserve(target);
  seen.reserve(target * 2);
  elems.push_back(FpMatrix::identity(f, n));
  seen.insert(encode(elems.back()));
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : gens) {
      FpMatrix next = elems[head] * gen;
      if (seen.insert(encode(next)).second) elems.push_back(std::move(next));
    }
  }
  if (elems.size() != target) {
    throw std::logic_error("closure produced " + std::to_string(elems.size()) + " elements, expected " +
                           order.get_str());
  }
  return elems;
}

}  // namespace covdbl
