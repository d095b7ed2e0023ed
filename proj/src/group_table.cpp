#include "qset/group_table.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "qset/errors.hpp"

namespace qset {

namespace {

using Perm = std::vector<std::uint8_t>;  // 0-based one-line images

struct RawGroup {
  std::string spec;
  std::size_t order = 0;
  std::vector<Element> mul;
  std::vector<std::string> names;
};

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base, std::size_t line)
      : text_(text), base_(base), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t pos() const noexcept { return pos_; }

  [[noreturn]] void fail(std::string const& msg, std::size_t at) const {
    throw SpecError(msg, line_, base_ + at + 1);
  }
  [[noreturn]] void fail(std::string const& msg) {
    skip_ws();
    fail(msg, pos_);
  }

  std::string_view word() {
    skip_ws();
    auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a keyword", start);
    return text_.substr(start, pos_ - start);
  }

  std::size_t integer(char const* what) {
    skip_ws();
    auto start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000'000) fail(fmt::format("{} is too large", what), start);
      ++pos_;
    }
    if (start == pos_) fail(fmt::format("expected {} (a non-negative integer)", what), start);
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(fmt::format("expected '{}'", c), pos_);
    ++pos_;
  }
  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t base_;
  std::size_t line_;
};

void check_cap(std::size_t order, std::size_t cap, std::string_view spec) {
  if (order > cap)
    throw CapExceeded(fmt::format("group '{}' has order {} above the cap {}", spec, order, cap));
}

std::string power_name(char const* gen, std::size_t i) {
  if (i == 0) return "1";
  if (i == 1) return gen;
  return fmt::format("{}^{}", gen, i);
}

RawGroup make_cyclic(std::size_t n) {
  RawGroup g{fmt::format("cyclic {}", n), n, std::vector<Element>(n * n), {}};
  for (std::size_t x = 0; x < n; ++x) {
    g.names.push_back(std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) g.mul[x * n + y] = static_cast<Element>((x + y) % n);
  }
  return g;
}

// r^i s^j with s r = r^-1 s and s^2 = 1.
RawGroup make_dihedral(std::size_t n) {
  auto const order = 2 * n;
  RawGroup g{fmt::format("dihedral {}", n), order, std::vector<Element>(order * order), {}};
  for (std::size_t x = 0; x < order; ++x) {
    auto i = x % n;
    bool refl = x >= n;
    if (!refl) {
      g.names.push_back(power_name("r", i));
    } else {
      g.names.push_back(i == 0 ? std::string("s") : power_name("r", i) + " s");
    }
    for (std::size_t y = 0; y < order; ++y) {
      auto k = y % n;
      bool refl_y = y >= n;
      auto rot = refl ? (i + n - k) % n : (i + k) % n;
      bool out_refl = refl != refl_y;
      g.mul[x * order + y] = static_cast<Element>(rot + (out_refl ? n : 0));
    }
  }
  return g;
}

// a^i x^j with a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1.
RawGroup make_dicyclic(std::size_t m) {
  auto const half = 2 * m;
  auto const order = 4 * m;
  RawGroup g{fmt::format("dicyclic {}", m), order, std::vector<Element>(order * order), {}};
  for (std::size_t x = 0; x < order; ++x) {
    auto i = x % half;
    bool xj = x >= half;
    if (!xj) {
      g.names.push_back(power_name("a", i));
    } else {
      g.names.push_back(i == 0 ? std::string("x") : power_name("a", i) + " x");
    }
    for (std::size_t y = 0; y < order; ++y) {
      auto k = y % half;
      bool xl = y >= half;
      std::size_t out;
      if (!xj) {
        out = (i + k) % half + (xl ? half : 0);
      } else if (!xl) {
        out = (i + half - k) % half + half;
      } else {
        out = (i + half - k + m) % half;
      }
      g.mul[x * order + y] = static_cast<Element>(out);
    }
  }
  return g;
}

std::string cycle_notation(Perm const& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string perm_spec(std::size_t degree, std::vector<Perm> const& gens) {
  std::string out = fmt::format("perm degree={} gens=[", degree);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k > 0) out += ",";
    out += "(";
    for (std::size_t i = 0; i < gens[k].size(); ++i) {
      if (i > 0) out += " ";
      out += std::to_string(gens[k][i] + 1);
    }
    out += ")";
  }
  return out + "]";
}

// Breadth-first closure from the identity; generators are tried in order.
RawGroup close_permutations(std::string spec, std::size_t degree, std::vector<Perm> const& gens,
                            std::size_t cap) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  std::map<Perm, Element> index{{id, 0}};
  std::vector<Perm> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto const& s : gens) {
      Perm next(degree);
      for (std::size_t i = 0; i < degree; ++i) next[i] = s[elems[head][i]];
      if (index.emplace(next, static_cast<Element>(elems.size())).second) {
        elems.push_back(std::move(next));
        check_cap(elems.size(), cap, spec);
      }
    }
  }
  auto const n = elems.size();
  RawGroup g{std::move(spec), n, std::vector<Element>(n * n), {}};
  Perm prod(degree);
  for (std::size_t x = 0; x < n; ++x) {
    g.names.push_back(cycle_notation(elems[x]));
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < degree; ++i) prod[i] = elems[y][elems[x][i]];
      g.mul[x * n + y] = index.at(prod);
    }
  }
  return g;
}

RawGroup make_symmetric(std::size_t k, std::size_t cap) {
  std::vector<Perm> gens;
  if (k >= 2) {
    Perm swap(k), cycle(k);
    for (std::size_t i = 0; i < k; ++i) {
      swap[i] = static_cast<std::uint8_t>(i);
      cycle[i] = static_cast<std::uint8_t>((i + 1) % k);
    }
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
    gens.push_back(cycle);
  }
  auto g = close_permutations(fmt::format("symmetric {}", k), k, gens, cap);
  return g;
}

RawGroup direct_product(RawGroup const& a, RawGroup const& b, std::string spec) {
  auto const n = a.order * b.order;
  RawGroup g{std::move(spec), n, std::vector<Element>(n * n), {}};
  for (std::size_t x = 0; x < n; ++x) {
    auto xa = x / b.order, xb = x % b.order;
    g.names.push_back(fmt::format("({}, {})", a.names[xa], b.names[xb]));
    for (std::size_t y = 0; y < n; ++y) {
      auto ya = y / b.order, yb = y % b.order;
      g.mul[x * n + y] = static_cast<Element>(a.mul[xa * a.order + ya] * b.order + b.mul[xb * b.order + yb]);
    }
  }
  return g;
}

constexpr std::size_t kMaxDegree = 64;

RawGroup parse_perm(Cursor& cur, std::size_t cap) {
  if (cur.word() != "degree") cur.fail("expected 'degree='");
  cur.expect('=');
  auto degree_at = cur.pos();
  auto degree = cur.integer("degree");
  if (degree < 1 || degree > kMaxDegree) cur.fail(fmt::format("degree must be in 1..{}", kMaxDegree), degree_at);
  if (cur.word() != "gens") cur.fail("expected 'gens='");
  cur.expect('=');
  cur.expect('[');
  std::vector<Perm> gens;
  if (!cur.consume(']')) {
    do {
      cur.skip_ws();
      auto gen_at = cur.pos();
      cur.expect('(');
      Perm p;
      std::vector<bool> hit(degree, false);
      while (!cur.consume(')')) {
        cur.skip_ws();
        auto at = cur.pos();
        auto v = cur.integer("point");
        if (v < 1 || v > degree) cur.fail(fmt::format("point {} outside 1..{}", v, degree), at);
        if (hit[v - 1]) cur.fail(fmt::format("generator images are not a permutation: {} repeats", v), at);
        hit[v - 1] = true;
        p.push_back(static_cast<std::uint8_t>(v - 1));
        cur.consume(',');
      }
      if (p.size() != degree)
        cur.fail(fmt::format("generator has {} images, expected {}", p.size(), degree), gen_at);
      gens.push_back(std::move(p));
    } while (cur.consume(','));
    cur.expect(']');
  }
  return close_permutations(perm_spec(degree, gens), degree, gens, cap);
}

RawGroup parse_family(std::string_view text, std::size_t base, std::size_t line, std::size_t cap,
                      bool allow_product) {
  Cursor cur(text, base, line);
  cur.skip_ws();
  auto word_at = cur.pos();
  auto family = cur.word();
  auto positive = [&](char const* what, std::size_t min) {
    cur.skip_ws();
    auto at = cur.pos();
    if (cur.consume('-')) cur.fail(fmt::format("{} must be a positive integer", what), at);
    auto v = cur.integer(what);
    if (v < min) cur.fail(fmt::format("{} must be at least {}", what, min), at);
    return v;
  };

  RawGroup g;
  if (family == "cyclic") {
    auto n = positive("n", 1);
    check_cap(n, cap, text);
    g = make_cyclic(n);
  } else if (family == "dihedral") {
    auto n = positive("n", 1);
    check_cap(2 * n, cap, text);
    g = make_dihedral(n);
  } else if (family == "dicyclic") {
    auto m = positive("m", 2);
    check_cap(4 * m, cap, text);
    g = make_dicyclic(m);
  } else if (family == "symmetric") {
    auto at = cur.pos();
    auto k = positive("k", 1);
    if (k > 5) cur.fail("symmetric groups are limited to k <= 5", at);
    g = make_symmetric(k, cap);
  } else if (family == "perm") {
    g = parse_perm(cur, cap);
  } else if (family == "product") {
    if (!allow_product) cur.fail("nested 'product' is not supported; list all factors in one product", word_at);
    auto rest = text.substr(cur.pos());
    auto rest_base = base + cur.pos();
    std::vector<RawGroup> factors;
    std::size_t start = 0;
    while (true) {
      auto semi = rest.find(';', start);
      auto piece = rest.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
      factors.push_back(parse_family(piece, rest_base + start, line, cap, false));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    if (factors.size() < 2) cur.fail("product needs at least two factors separated by ';'", word_at);
    std::string spec = "product " + factors[0].spec;
    for (std::size_t i = 1; i < factors.size(); ++i) spec += " ; " + factors[i].spec;
    std::size_t total = 1;
    for (auto const& f : factors) {
      total *= f.order;
      check_cap(total, cap, spec);
    }
    g = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i], spec);
    g.spec = spec;
    return g;
  } else {
    cur.fail(fmt::format("unknown group family '{}'", family), word_at);
  }
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return g;
}

}  // namespace

class GroupBuilder {
 public:
  static GroupTable make(std::string spec, std::size_t order, std::vector<Element> const& mul,
                         std::vector<std::string> names) {
    GroupTable g;
    g.order_ = order;
    g.spec_ = std::move(spec);
    g.mul_.resize(order * order);
    for (std::size_t i = 0; i < mul.size() && i < g.mul_.size(); ++i) g.mul_[i] = static_cast<std::uint16_t>(mul[i]);
    g.inv_.assign(order, 0);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        if (g.mul_[x * order + y] == 0) {
          g.inv_[x] = static_cast<std::uint16_t>(y);
          break;
        }
      }
    }
    if (names.size() != order) {
      names.clear();
      for (std::size_t x = 0; x < order; ++x) names.push_back(std::to_string(x));
    }
    g.names_ = std::move(names);
    return g;
  }
};

GroupTable GroupTable::from_table(std::string spec, std::size_t order, std::vector<Element> const& mul,
                                  std::vector<std::string> names) {
  if (order == 0 || order > 0xFFFF || mul.size() != order * order)
    throw PreconditionError("table size does not match the stated order");
  return GroupBuilder::make(std::move(spec), order, mul, std::move(names));
}

std::vector<Element> GroupTable::mul_table() const { return {mul_.begin(), mul_.end()}; }

GroupTable build_group(std::string_view spec, std::size_t order_cap, std::size_t line) {
  auto trimmed = spec;
  if (auto hash = trimmed.find('#'); hash != std::string_view::npos) trimmed = trimmed.substr(0, hash);
  if (trimmed.find_first_not_of(" \t\r\n") == std::string_view::npos) throw SpecError("empty group spec", line, 1);
  auto raw = parse_family(trimmed, 0, line, order_cap, true);
  return GroupBuilder::make(std::move(raw.spec), raw.order, raw.mul, std::move(raw.names));
}

CheckReport verify_group_axioms(GroupTable const& g) {
  CheckReport rep;
  rep.subject = g.spec();
  auto const n = static_cast<Element>(g.order());

  {
    std::string witness;
    for (Element x = 0; x < n && witness.empty(); ++x)
      if (g.mul(0, x) != x || g.mul(x, 0) != x) witness = fmt::format("x={}", x);
    rep.expect(witness.empty(), "identity", witness);
  }
  {
    std::string witness;
    for (Element x = 0; x < n && witness.empty(); ++x) {
      auto y = g.inv(x);
      if (y >= n || g.mul(x, y) != 0 || g.mul(y, x) != 0) witness = fmt::format("x={} inv={}", x, y);
    }
    rep.expect(witness.empty(), "inverses", witness);
  }
  {
    std::string witness;
    for (Element x = 0; x < n && witness.empty(); ++x)
      for (Element y = 0; y < n && witness.empty(); ++y)
        for (Element z = 0; z < n; ++z) {
          if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
            witness = fmt::format("(x,y,z)=({},{},{})", x, y, z);
            break;
          }
        }
    rep.expect(witness.empty(), "associativity", witness);
  }
  {
    std::string witness;
    std::vector<char> seen(n);
    for (Element x = 0; x < n && witness.empty(); ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Element y = 0; y < n; ++y) {
        auto v = g.mul(x, y);
        if (v >= n || seen[v]) {
          witness = fmt::format("row {} repeats {} at column {}", x, v, y);
          break;
        }
        seen[v] = 1;
      }
    }
    for (Element y = 0; y < n && witness.empty(); ++y) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Element x = 0; x < n; ++x) {
        auto v = g.mul(x, y);
        if (v >= n || seen[v]) {
          witness = fmt::format("column {} repeats {} at row {}", y, v, x);
          break;
        }
        seen[v] = 1;
      }
    }
    rep.expect(witness.empty(), "latin_square", witness);
  }
  return rep;
}

}  // namespace qset
