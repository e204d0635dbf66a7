#include "soclekit/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include "soclekit/errors.hpp"
#include "soclekit/parallel.hpp"

namespace soclekit {

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
  if (a.nvars() != b.nvars())
    throw dimension_mismatch("operands live over rings with " + std::to_string(a.nvars()) +
                             " and " + std::to_string(b.nvars()) + " variables");
}

uint64_t support_mask(const std::vector<int64_t>& e) {
  uint64_t m = 0;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m |= uint64_t(1) << (i & 63);
  return m;
}

uint64_t support_mask(const int64_t* e, int64_t n) {
  uint64_t m = 0;
  for (int64_t i = 0; i < n; ++i)
    if (e[i] > 0) m |= uint64_t(1) << (i & 63);
  return m;
}

bool row_divides(const int64_t* a, const int64_t* b, int64_t n) {
  for (int64_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// --- socle machinery -------------------------------------------------------
//
// colon_maximal(J) = J + (C_1 cap ... cap C_n) where C_i is generated by the
// shifted generators g - e_i over g in G(J) with g_i >= 1: intersecting the n
// monomial colons (J : x_i) = J + C_i distributes over the common summand J.
// The intersection of the C_i is folded in pairwise, and any intermediate lcm
// that falls into J is dropped immediately: all of its multiples land in J as
// well, and the J part is re-added at the end. What survives the last fold is
// exactly the set of minimal generators of (J : m) outside J.

constexpr int64_t kByteTableCap = int64_t(1) << 28;  // dense byte table
constexpr int64_t kBitTableCap = int64_t(1) << 31;   // bit-packed table, 256 MB peak

// Decides membership in a fixed ideal for monomials that fit the componentwise
// generator bound ("box"). Boxes up to the caps get a dense upward-closure
// table with O(1) queries (bytes while small, packed bits beyond); anything
// larger falls back to scanning the generator list.
class MembershipTester {
 public:
  MembershipTester(const MonomialIdeal& ideal, std::vector<int64_t> box)
      : nvars_(ideal.ring().nvars()), box_(std::move(box)), gens_(&ideal.gens()) {
    int64_t cells = 1;
    for (int64_t b : box_) {
      if (b >= kBitTableCap || b + 1 > kBitTableCap / cells) return;  // stay in list mode
      cells *= b + 1;
    }
    strides_.assign(static_cast<size_t>(nvars_), 1);
    for (int64_t j = nvars_ - 2; j >= 0; --j)
      strides_[static_cast<size_t>(j)] =
          strides_[static_cast<size_t>(j + 1)] * (box_[static_cast<size_t>(j + 1)] + 1);

    const bool packed = cells > kByteTableCap;
    if (packed)
      bits_.assign(static_cast<size_t>((cells + 63) / 64), 0);
    else
      table_.assign(static_cast<size_t>(cells), 0);

    auto get = [&](int64_t idx) -> bool {
      return packed ? ((bits_[static_cast<size_t>(idx >> 6)] >> (idx & 63)) & 1) != 0
                    : table_[static_cast<size_t>(idx)] != 0;
    };
    auto set = [&](int64_t idx) {
      if (packed)
        bits_[static_cast<size_t>(idx >> 6)] |= uint64_t(1) << (idx & 63);
      else
        table_[static_cast<size_t>(idx)] = 1;
    };

    for (const auto& g : *gens_) {
      int64_t idx = 0;
      for (int64_t j = 0; j < nvars_; ++j) idx += g.exponent(j) * strides_[static_cast<size_t>(j)];
      set(idx);
    }
    // upward closure, one axis sweep per variable
    for (int64_t j = 0; j < nvars_; ++j) {
      const int64_t s = strides_[static_cast<size_t>(j)];
      const int64_t dim = box_[static_cast<size_t>(j)] + 1;
      const int64_t block = s * dim;
      for (int64_t base = 0; base < cells; base += block)
        for (int64_t off = 0; off < s; ++off) {
          int64_t idx = base + off + s;
          for (int64_t t = 1; t < dim; ++t, idx += s)
            if (!get(idx) && get(idx - s)) set(idx);
        }
    }
  }

  bool contains(const int64_t* e) const {
    if (!strides_.empty()) {
      int64_t idx = 0;
      for (int64_t j = 0; j < nvars_; ++j)
        idx += std::min(e[j], box_[static_cast<size_t>(j)]) * strides_[static_cast<size_t>(j)];
      if (!table_.empty()) return table_[static_cast<size_t>(idx)] != 0;
      return ((bits_[static_cast<size_t>(idx >> 6)] >> (idx & 63)) & 1) != 0;
    }
    for (const auto& g : *gens_) {
      bool div = true;
      for (int64_t j = 0; j < nvars_; ++j)
        if (g.exponent(j) > e[j]) {
          div = false;
          break;
        }
      if (div) return true;
    }
    return false;
  }

 private:
  int64_t nvars_;
  std::vector<int64_t> box_;
  std::vector<int64_t> strides_;
  std::vector<uint8_t> table_;
  std::vector<uint64_t> bits_;
  const std::vector<Monomial>* gens_;
};

struct RowBuf {
  int64_t width = 0;
  std::vector<int64_t> data;

  explicit RowBuf(int64_t w) : width(w) {}
  size_t rows() const { return width == 0 ? 0 : data.size() / static_cast<size_t>(width); }
  const int64_t* row(size_t i) const { return data.data() + i * static_cast<size_t>(width); }
  void push(const int64_t* r) { data.insert(data.end(), r, r + width); }
  bool empty() const { return data.empty(); }
};

int64_t row_degree(const int64_t* r, int64_t n) {
  int64_t d = 0;
  for (int64_t i = 0; i < n; ++i) d = checked_add(d, r[i]);
  return d;
}

// Keeps the rows that are not proper multiples of another row. Input rows must
// be distinct; output keeps (degree, lex) order.
RowBuf antichain_rows(const RowBuf& in) {
  const int64_t n = in.width;
  const size_t count = in.rows();
  std::vector<size_t> order(count);
  std::iota(order.begin(), order.end(), size_t{0});
  std::vector<int64_t> deg(count);
  for (size_t i = 0; i < count; ++i) deg[i] = row_degree(in.row(i), n);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (deg[a] != deg[b]) return deg[a] < deg[b];
    return std::lexicographical_compare(in.row(a), in.row(a) + n, in.row(b), in.row(b) + n);
  });

  RowBuf out(n);
  std::vector<int64_t> odeg;
  std::vector<uint64_t> omask;
  for (size_t oi : order) {
    const int64_t* r = in.row(oi);
    const uint64_t mask = support_mask(r, n);
    bool keep = true;
    for (size_t k = 0; k < odeg.size(); ++k) {
      if (odeg[k] == deg[oi]) break;  // equal degree cannot strictly divide
      if ((omask[k] & ~mask) != 0) continue;
      if (row_divides(out.row(k), r, n)) {
        keep = false;
        break;
      }
    }
    if (keep) {
      out.push(r);
      odeg.push_back(deg[oi]);
      omask.push_back(mask);
    }
  }
  return out;
}

// One fold of the intersection: gens(E) x gens(C) lcms, minus everything that
// already lies in J, reduced to an antichain.
RowBuf merge_intersect(const RowBuf& e_rows, const RowBuf& c_rows,
                       const MembershipTester& tester, const std::vector<int64_t>& box) {
  const int64_t n = e_rows.width;

  int64_t total_bits = 0;
  std::vector<int> width_bits(static_cast<size_t>(n));
  for (int64_t j = 0; j < n; ++j) {
    width_bits[static_cast<size_t>(j)] = std::max(
        1, static_cast<int>(std::bit_width(static_cast<uint64_t>(box[static_cast<size_t>(j)]))));
    total_bits += width_bits[static_cast<size_t>(j)];
  }

  std::vector<int64_t> scratch(static_cast<size_t>(n));
  RowBuf survivors(n);

  if (total_bits <= 120) {
    using Key = unsigned __int128;
    std::vector<Key> keys;
    for (size_t ei = 0; ei < e_rows.rows(); ++ei) {
      const int64_t* e = e_rows.row(ei);
      for (size_t ci = 0; ci < c_rows.rows(); ++ci) {
        const int64_t* c = c_rows.row(ci);
        Key key = 0;
        for (int64_t j = 0; j < n; ++j) {
          const int64_t v = std::max(e[j], c[j]);
          scratch[static_cast<size_t>(j)] = v;
          key = (key << width_bits[static_cast<size_t>(j)]) | static_cast<Key>(v);
        }
        if (!tester.contains(scratch.data())) keys.push_back(key);
      }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (Key key : keys) {
      for (int64_t j = n - 1; j >= 0; --j) {
        const int bits = width_bits[static_cast<size_t>(j)];
        scratch[static_cast<size_t>(j)] = static_cast<int64_t>(key & ((Key(1) << bits) - 1));
        key >>= bits;
      }
      survivors.push(scratch.data());
    }
  } else {
    RowBuf raw(n);
    for (size_t ei = 0; ei < e_rows.rows(); ++ei) {
      const int64_t* e = e_rows.row(ei);
      for (size_t ci = 0; ci < c_rows.rows(); ++ci) {
        const int64_t* c = c_rows.row(ci);
        for (int64_t j = 0; j < n; ++j) scratch[static_cast<size_t>(j)] = std::max(e[j], c[j]);
        if (!tester.contains(scratch.data())) raw.push(scratch.data());
      }
    }
    std::vector<size_t> order(raw.rows());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return std::lexicographical_compare(raw.row(a), raw.row(a) + n, raw.row(b), raw.row(b) + n);
    });
    for (size_t k = 0; k < order.size(); ++k) {
      if (k > 0 && std::equal(raw.row(order[k]), raw.row(order[k]) + n, raw.row(order[k - 1])))
        continue;
      survivors.push(raw.row(order[k]));
    }
  }

  return antichain_rows(survivors);
}

}  // namespace

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
  for (const auto& g : generators)
    if (g.nvars() != ring_.nvars())
      throw dimension_mismatch("generator has " + std::to_string(g.nvars()) +
                               " exponents over a ring with " + std::to_string(ring_.nvars()) +
                               " variables");
  if (generators.empty()) return;

  struct Entry {
    int64_t deg;
    Monomial mono;
  };
  std::vector<Entry> entries;
  entries.reserve(generators.size());
  for (auto& g : generators) {
    int64_t d = g.degree();
    entries.push_back(Entry{d, std::move(g)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.mono < b.mono;
  });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) { return a.mono == b.mono; }),
                entries.end());

  if (entries.front().deg == entries.back().deg) {
    // same degree everywhere: distinct monomials are already an antichain
    gens_.reserve(entries.size());
    for (auto& e : entries) gens_.push_back(std::move(e.mono));
  } else {
    std::vector<int64_t> adeg;
    std::vector<uint64_t> amask;
    for (auto& e : entries) {
      const uint64_t mask = support_mask(e.mono.exponents());
      bool keep = true;
      for (size_t k = 0; k < gens_.size(); ++k) {
        if (adeg[k] == e.deg) break;
        if ((amask[k] & ~mask) != 0) continue;
        if (gens_[k].divides(e.mono)) {
          keep = false;
          break;
        }
      }
      if (keep) {
        gens_.push_back(std::move(e.mono));
        adeg.push_back(e.deg);
        amask.push_back(mask);
      }
    }
  }
  std::sort(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(Ring ring) {
  const int64_t n = ring.nvars();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.nvars() != ring_.nvars()) throw dimension_mismatch("monomial over wrong ring");
  for (const auto& g : gens_)
    if (g.divides(u)) return true;
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::optional<int64_t> MonomialIdeal::generated_degree() const {
  if (gens_.empty()) return std::nullopt;
  const int64_t d = gens_.front().degree();
  for (const auto& g : gens_)
    if (g.degree() != d) return std::nullopt;
  return d;
}

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens) {
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ring());

  const auto& ga = a.gens();
  const auto& gb = b.gens();
  std::vector<std::vector<Monomial>> per_row(ga.size());
  parallel_chunks(static_cast<int64_t>(ga.size()), [&](int64_t begin, int64_t end) {
    for (int64_t i = begin; i < end; ++i) {
      auto& out = per_row[static_cast<size_t>(i)];
      out.reserve(gb.size());
      for (const auto& h : gb) out.push_back(ga[static_cast<size_t>(i)].times(h));
    }
  });
  std::vector<Monomial> products;
  products.reserve(ga.size() * gb.size());
  for (auto& row : per_row)
    for (auto& m : row) products.push_back(std::move(m));
  return MonomialIdeal(a.ring(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& ideal, int64_t exponent) {
  if (exponent < 0) throw domain_error("negative ideal power");
  MonomialIdeal result = MonomialIdeal::unit(ideal.ring());
  for (int64_t i = 0; i < exponent; ++i) result = multiply(result, ideal);
  return result;
}

MonomialIdeal colon_monomial(const MonomialIdeal& numerator, const Monomial& g) {
  if (g.nvars() != numerator.ring().nvars()) throw dimension_mismatch("monomial over wrong ring");
  std::vector<Monomial> quotients;
  quotients.reserve(numerator.gens().size());
  for (const auto& h : numerator.gens()) quotients.push_back(h.colon_by(g));
  return MonomialIdeal(numerator.ring(), std::move(quotients));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ring());
  std::vector<Monomial> lcms;
  lcms.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) lcms.push_back(g.lcm_with(h));
  return MonomialIdeal(a.ring(), std::move(lcms));
}

MonomialIdeal colon_ideal(const MonomialIdeal& numerator, const MonomialIdeal& denominator) {
  require_same_ring(numerator.ring(), denominator.ring());
  if (denominator.is_zero()) throw domain_error("colon by the zero ideal is undefined");
  MonomialIdeal acc = colon_monomial(numerator, denominator.gens().front());
  for (size_t i = 1; i < denominator.gens().size(); ++i)
    acc = intersect(acc, colon_monomial(numerator, denominator.gens()[i]));
  return acc;
}

MonomialIdeal colon_maximal(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens = ideal.gens();
  for (auto& u : socle_monomials(ideal)) gens.push_back(std::move(u));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

std::vector<Monomial> socle_monomials(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return {};
  const int64_t n = ideal.ring().nvars();
  const auto& gens = ideal.gens();

  std::vector<int64_t> box(static_cast<size_t>(n), 0);
  for (const auto& g : gens)
    for (int64_t j = 0; j < n; ++j)
      box[static_cast<size_t>(j)] = std::max(box[static_cast<size_t>(j)], g.exponent(j));

  std::vector<RowBuf> cols;
  cols.reserve(static_cast<size_t>(n));
  for (int64_t j = 0; j < n; ++j) {
    RowBuf c(n);
    for (const auto& g : gens) {
      if (g.exponent(j) == 0) continue;
      std::vector<int64_t> row = g.exponents();
      row[static_cast<size_t>(j)] -= 1;
      c.push(row.data());
    }
    if (c.empty()) return {};  // (J : x_j) = J, no socle element exists
    cols.push_back(std::move(c));
  }

  MembershipTester tester(ideal, box);

  std::vector<int64_t> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), int64_t{0});
  std::sort(order.begin(), order.end(), [&](int64_t a, int64_t b) {
    const size_t ra = cols[static_cast<size_t>(a)].rows(), rb = cols[static_cast<size_t>(b)].rows();
    if (ra != rb) return ra < rb;
    return a < b;
  });

  // shifted generators of the smallest colon, minus those already in J
  RowBuf current(n);
  {
    const RowBuf& first = cols[static_cast<size_t>(order[0])];
    for (size_t i = 0; i < first.rows(); ++i)
      if (!tester.contains(first.row(i))) current.push(first.row(i));
  }

  const bool trace = std::getenv("SOCLEKIT_TRACE_SOCLE") != nullptr;
  for (size_t oi = 1; oi < order.size() && !current.empty(); ++oi) {
    if (trace)
      std::fprintf(stderr, "fold %zu: |E| = %zu, |C| = %zu\n", oi, current.rows(),
                   cols[static_cast<size_t>(order[oi])].rows());
    current = merge_intersect(current, cols[static_cast<size_t>(order[oi])], tester, box);
  }
  if (trace) std::fprintf(stderr, "fold done: |E| = %zu\n", current.rows());

  std::vector<Monomial> out;
  out.reserve(current.rows());
  for (size_t i = 0; i < current.rows(); ++i)
    out.push_back(Monomial(std::vector<int64_t>(current.row(i), current.row(i) + n)));
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal join_disjoint(const MonomialIdeal& a, const MonomialIdeal& b) {
  const int64_t na = a.ring().nvars();
  const int64_t nb = b.ring().nvars();

  std::vector<std::string> names = a.ring().names();
  names.insert(names.end(), b.ring().names().begin(), b.ring().names().end());
  bool distinct = true;
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  Ring joined = distinct ? Ring(std::move(names)) : Ring(na + nb);

  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() + b.gens().size());
  for (const auto& g : a.gens()) {
    std::vector<int64_t> e = g.exponents();
    e.resize(static_cast<size_t>(na + nb), 0);
    gens.push_back(Monomial(std::move(e)));
  }
  for (const auto& g : b.gens()) {
    std::vector<int64_t> e(static_cast<size_t>(na), 0);
    e.insert(e.end(), g.exponents().begin(), g.exponents().end());
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(std::move(joined), std::move(gens));
}

}  // namespace soclekit
