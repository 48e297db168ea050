#include "dgk/finite_ring.hpp"

#include <algorithm>

namespace dgk {

int FiniteRing::neg(int x) const {
  for (int y = 0; y < size(); ++y)
    if (add[x][y] == zero) return y;
  throw PreconditionError("ring '" + name + "': no additive inverse for " + names[x]);
}

int FiniteRing::element_index(const std::string& id) const {
  auto it = std::find(names.begin(), names.end(), id);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

ValidationReport validate_ring(const FiniteRing& r) {
  ValidationReport rep;
  const int n = r.size();
  if (n == 0) {
    rep.add_structural("empty", "ring has no elements");
    return rep;
  }
  bool shape = static_cast<int>(r.add.size()) == n && static_cast<int>(r.mul.size()) == n;
  for (const auto& row : r.add) shape = shape && static_cast<int>(row.size()) == n;
  for (const auto& row : r.mul) shape = shape && static_cast<int>(row.size()) == n;
  if (!shape || r.zero < 0 || r.zero >= n || r.one < 0 || r.one >= n) {
    rep.add_structural("table-shape", "add/mul tables or zero/one malformed");
    return rep;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r.add[x][y] < 0 || r.add[x][y] >= n || r.mul[x][y] < 0 || r.mul[x][y] >= n) {
        rep.add_structural("table-range", r.names[x] + "," + r.names[y]);
        return rep;
      }

  auto id2 = [&](int x, int y) { return r.names[x] + "," + r.names[y]; };
  for (int x = 0; x < n; ++x) {
    if (r.add[x][r.zero] != x) rep.add_axiom("add-identity", r.names[x]);
    bool has_neg = false;
    for (int y = 0; y < n; ++y) has_neg = has_neg || r.add[x][y] == r.zero;
    if (!has_neg) rep.add_axiom("add-inverse", r.names[x]);
    if (r.mul[x][r.one] != x || r.mul[r.one][x] != x) rep.add_axiom("mul-identity", r.names[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (r.add[x][y] != r.add[y][x]) rep.add_axiom("add-commutative", id2(x, y));
      for (int z = 0; z < n; ++z) {
        if (r.add[r.add[x][y]][z] != r.add[x][r.add[y][z]]) rep.add_axiom("add-associative", id2(x, y) + "," + r.names[z]);
        if (r.mul[r.mul[x][y]][z] != r.mul[x][r.mul[y][z]]) rep.add_axiom("mul-associative", id2(x, y) + "," + r.names[z]);
        if (r.mul[x][r.add[y][z]] != r.add[r.mul[x][y]][r.mul[x][z]])
          rep.add_axiom("left-distributive", id2(x, y) + "," + r.names[z]);
        if (r.mul[r.add[x][y]][z] != r.add[r.mul[x][z]][r.mul[y][z]])
          rep.add_axiom("right-distributive", id2(x, y) + "," + r.names[z]);
      }
    }
  rep.canonicalize();
  return rep;
}

FiniteRing zmod(int n) {
  if (n < 2) throw PreconditionError("zmod: n must be >= 2");
  FiniteRing r;
  r.name = "zmod:" + std::to_string(n);
  for (int i = 0; i < n; ++i) r.names.push_back(std::to_string(i));
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.add[i][j] = (i + j) % n;
      r.mul[i][j] = (i * j) % n;
    }
  r.zero = 0;
  r.one = 1;
  return r;
}

FiniteRing matrix_ring(const FiniteRing& r, int k) {
  if (k < 1) throw PreconditionError("matrix_ring: k must be >= 1");
  const int b = r.size();
  long long count = 1;
  for (int i = 0; i < k * k; ++i) {
    count *= b;
    if (count > 100000) throw PreconditionError("matrix_ring: too many elements for table form");
  }
  const int n = static_cast<int>(count);

  // element index <-> k*k digits base b, row-major
  auto digits = [&](int ix) {
    std::vector<int> d(k * k);
    for (int i = 0; i < k * k; ++i) {
      d[i] = ix % b;
      ix /= b;
    }
    return d;
  };
  auto index_of = [&](const std::vector<int>& d) {
    long long ix = 0;
    for (int i = k * k - 1; i >= 0; --i) ix = ix * b + d[i];
    return static_cast<int>(ix);
  };

  FiniteRing m;
  m.name = "mat:" + std::to_string(k) + ":" + r.name;
  m.add.assign(n, std::vector<int>(n));
  m.mul.assign(n, std::vector<int>(n));
  for (int ix = 0; ix < n; ++ix) {
    auto d = digits(ix);
    std::string nm = "[";
    for (int i = 0; i < k; ++i) {
      if (i) nm += ";";
      for (int j = 0; j < k; ++j) {
        if (j) nm += ",";
        nm += r.names[d[i * k + j]];
      }
    }
    nm += "]";
    m.names.push_back(nm);
  }
  for (int x = 0; x < n; ++x) {
    auto dx = digits(x);
    for (int y = 0; y < n; ++y) {
      auto dy = digits(y);
      std::vector<int> sum(k * k), prod(k * k);
      for (int i = 0; i < k * k; ++i) sum[i] = r.add[dx[i]][dy[i]];
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          int acc = r.zero;
          for (int t = 0; t < k; ++t)
            acc = r.add[acc][r.mul[dx[i * k + t]][dy[t * k + j]]];
          prod[i * k + j] = acc;
        }
      m.add[x][y] = index_of(sum);
      m.mul[x][y] = index_of(prod);
    }
  }
  std::vector<int> z(k * k, r.zero), e(k * k, r.zero);
  for (int i = 0; i < k; ++i) e[i * k + i] = r.one;
  m.zero = index_of(z);
  m.one = index_of(e);
  return m;
}

FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b) {
  FiniteRing p;
  p.name = "prod:" + a.name + "," + b.name;
  const int na = a.size(), nb = b.size();
  const int n = na * nb;
  auto ix = [nb](int x, int y) { return x * nb + y; };
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) p.names.push_back("(" + a.names[x] + "," + b.names[y] + ")");
  p.add.assign(n, std::vector<int>(n));
  p.mul.assign(n, std::vector<int>(n));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          p.add[ix(x1, y1)][ix(x2, y2)] = ix(a.add[x1][x2], b.add[y1][y2]);
          p.mul[ix(x1, y1)][ix(x2, y2)] = ix(a.mul[x1][x2], b.mul[y1][y2]);
        }
  p.zero = ix(a.zero, b.zero);
  p.one = ix(a.one, b.one);
  return p;
}

UnitGroup units(const FiniteRing& r) {
  UnitGroup u;
  u.inverse_of.assign(r.size(), -1);
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      if (r.mul[x][y] == r.one && r.mul[y][x] == r.one) {
        u.inverse_of[x] = y;
        break;
      }
  for (int x = 0; x < r.size(); ++x)
    if (u.inverse_of[x] >= 0) u.units.push_back(x);
  return u;
}

FiniteRing parse_ring_spec(const std::string& spec) {
  if (spec.rfind("zmod:", 0) == 0) {
    int n;
    try {
      n = std::stoi(spec.substr(5));
    } catch (...) {
      throw ParseError("bad ring spec '" + spec + "'");
    }
    if (n < 2) throw ParseError("bad ring spec '" + spec + "': modulus must be >= 2");
    return zmod(n);
  }
  if (spec.rfind("mat:", 0) == 0) {
    auto rest = spec.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw ParseError("bad ring spec '" + spec + "'");
    int k;
    try {
      k = std::stoi(rest.substr(0, colon));
    } catch (...) {
      throw ParseError("bad ring spec '" + spec + "'");
    }
    return matrix_ring(parse_ring_spec(rest.substr(colon + 1)), k);
  }
  if (spec.rfind("prod:", 0) == 0) {
    auto rest = spec.substr(5);
    // split at a top-level comma (components contain no "prod:" nesting commas
    // except their own; scan for the comma that leaves a parseable left part)
    for (size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] != ',') continue;
      try {
        FiniteRing left = parse_ring_spec(rest.substr(0, i));
        FiniteRing right = parse_ring_spec(rest.substr(i + 1));
        return product_ring(left, right);
      } catch (const ParseError&) {
        continue;
      }
    }
    throw ParseError("bad ring spec '" + spec + "'");
  }
  throw ParseError("unknown ring spec '" + spec + "'");
}

std::vector<FiniteRing> default_ring_corpus() {
  std::vector<FiniteRing> out;
  for (int n = 2; n <= 7; ++n) out.push_back(zmod(n));
  out.push_back(matrix_ring(zmod(2), 2));
  out.push_back(product_ring(zmod(2), zmod(3)));
  return out;
}

}  // namespace dgk
