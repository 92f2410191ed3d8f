#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {
namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

Affine identity() {
  Affine a;
  for (int i = 0; i < 3; ++i) a.m[i][i] = 1;
  return a;
}

Affine letter(char c, int n) {
  Affine a;
  switch (c) {
    case 'P':  // (x, y, 1-z)
      a.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
      a.t = {0, 0, 1};
      break;
    case 'Q':  // (z, y, x)
      a.m = {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
      break;
    case 'R':  // (y, x, z)
      a.m = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
      break;
    case 'S':  // (x, -y, z)
      a.m = {{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
      break;
    default:
      throw std::invalid_argument("oracle: bad letter");
  }
  for (auto& t : a.t) t = mod(t, n);
  return a;
}

Affine multiply(const Affine& a, const Affine& b, int n) {
  Affine c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      c.m[i][j] = s;
    }
    int s = a.t[i];
    for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.t[k];
    c.t[i] = mod(s, n);
  }
  return c;
}

Affine from_letters(std::string_view letters, int n) {
  Affine g = identity();
  for (char c : letters) g = multiply(g, letter(c, n), n);
  return g;
}

V act(const Affine& g, const V& v, int n) {
  V out{};
  for (int i = 0; i < 3; ++i) {
    int s = g.t[i];
    for (int k = 0; k < 3; ++k) s += g.m[i][k] * v[k];
    out[i] = mod(s, n);
  }
  return out;
}

std::vector<Affine> closure(const std::vector<Affine>& gens, int n) {
  std::set<Affine> seen{identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Affine> current(seen.begin(), seen.end());
    for (const auto& a : current) {
      for (const auto& g : gens) {
        if (seen.insert(multiply(a, g, n)).second) grew = true;
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Affine> subgroup(const std::vector<std::string>& letter_words, int n) {
  std::vector<Affine> gens;
  for (const auto& w : letter_words) gens.push_back(from_letters(w, n));
  return closure(gens, n);
}

std::vector<V> vertices(int n) {
  std::vector<V> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) out.push_back({x, y, z});
  return out;
}

std::vector<std::set<V>> orbits(const std::vector<Affine>& h, int n) {
  std::vector<std::set<V>> out;
  std::set<V> done;
  for (const V& v : vertices(n)) {
    if (done.count(v)) continue;
    std::set<V> orbit;
    for (const auto& g : h) orbit.insert(act(g, v, n));
    done.insert(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Affine> stabilizer(const std::vector<Affine>& h, const V& x, int n) {
  std::vector<Affine> out;
  for (const auto& g : h) {
    if (act(g, x, n) == x) out.push_back(g);
  }
  return out;
}

std::vector<std::set<Affine>> left_cosets(const std::vector<Affine>& h,
                                          const std::vector<Affine>& j, int n) {
  std::vector<std::set<Affine>> out;
  std::set<Affine> covered;
  for (const auto& g : h) {
    if (covered.count(g)) continue;
    std::set<Affine> coset;
    for (const auto& k : j) coset.insert(multiply(g, k, n));
    covered.insert(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

std::vector<std::set<V>> coset_classes(const std::vector<Affine>& h,
                                       const std::vector<Affine>& j, const V& x, int n) {
  std::vector<std::set<V>> out;
  for (const auto& coset : left_cosets(h, j, n)) {
    std::set<V> cls;
    for (const auto& g : coset) cls.insert(act(g, x, n));
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Affine> color_preserving(const std::vector<Affine>& all,
                                     const std::vector<std::set<V>>& classes, int n) {
  std::vector<Affine> out;
  for (const auto& g : all) {
    bool ok = true;
    for (const auto& cls : classes) {
      std::set<V> image;
      for (const V& v : cls) image.insert(act(g, v, n));
      ok = ok && std::find(classes.begin(), classes.end(), image) != classes.end();
      if (!ok) break;
    }
    if (ok) out.push_back(g);
  }
  return out;
}

}  // namespace oracle
