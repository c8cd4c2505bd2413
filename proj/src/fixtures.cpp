#include "indres/fixtures.hpp"

#include <array>
#include <map>
#include <regex>

#include "indres/errors.hpp"

namespace indres {

namespace {

using Mat = std::vector<std::vector<int>>;

// Action of matrices over F_p (p prime) on nonzero row vectors v -> vM.
std::vector<Permutation> act_on_vectors(int p, int n, const std::vector<Mat>& mats) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  auto decode = [&](int code) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = code % p, code /= p;
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * p + v[i];
    return code;
  };
  std::vector<Permutation> out;
  for (const auto& m : mats) {
    std::vector<long long> img(total - 1);
    for (int code = 1; code < total; ++code) {
      auto v = decode(code);
      std::vector<int> w(n, 0);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) w[j] = (w[j] + v[i] * m[i][j]) % p;
      img[code - 1] = encode(w) - 1;
    }
    out.push_back(Permutation::from_images(img, false));
  }
  return out;
}

// F_9 = F_3[i]/(i^2 + 1); element a + b i stored as a + 3b.
struct F9 {
  static int add(int x, int y) { return (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3); }
  static int neg(int x) { return (3 - x % 3) % 3 + 3 * ((3 - x / 3) % 3); }
  static int mul(int x, int y) {
    const int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
    return ((a * c - b * d) % 3 + 3) % 3 + 3 * ((a * d + b * c) % 3);
  }
  static int conj(int x) { return x % 3 + 3 * ((3 - x / 3) % 3); }
  static int inv(int x) {
    for (int y = 1; y < 9; ++y)
      if (mul(x, y) == 1) return y;
    throw InternalError("zero has no inverse");
  }
};

}  // namespace

GroupSpec symmetric_group(int n) {
  GroupSpec s{"S" + std::to_string(n), static_cast<std::size_t>(n), {}};
  if (n < 2) return s;
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i + 1;
  s.gens.push_back(Permutation::from_cycles(n, {cyc}));
  s.gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
  return s;
}

GroupSpec alternating_group(int n) {
  GroupSpec s{"A" + std::to_string(n), static_cast<std::size_t>(n), {}};
  if (n < 3) return s;
  s.gens.push_back(Permutation::from_cycles(n, {{1, 2, 3}}));
  std::vector<int> cyc;
  for (int i = (n % 2 ? 1 : 2); i <= n; ++i) cyc.push_back(i);
  if (cyc.size() > 1) s.gens.push_back(Permutation::from_cycles(n, {cyc}));
  return s;
}

GroupSpec cyclic_group(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i + 1;
  GroupSpec s{"C" + std::to_string(n), static_cast<std::size_t>(n), {}};
  if (n > 1) s.gens.push_back(Permutation::from_cycles(n, {cyc}));
  return s;
}

GroupSpec dihedral_group(int n) {
  GroupSpec s = cyclic_group(n);
  s.name = "D" + std::to_string(2 * n);
  std::vector<long long> img(n);
  for (int i = 0; i < n; ++i) img[i] = (n - i) % n;
  s.gens.push_back(Permutation::from_images(img, false));
  return s;
}

GroupSpec quaternion_group() {
  // elements +-1, +-i, +-j, +-k as 0..7: (sign, unit) -> 2*unit + sign
  static const int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto mul = [&](int x, int y) {
    const int ux = x / 2, uy = y / 2;
    int s = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sgn[ux][uy];
    int u = table[ux][uy];
    return 2 * u + (s < 0 ? 1 : 0);
  };
  GroupSpec s{"Q8", 8, {}};
  for (int g : {2, 4}) {
    std::vector<long long> img(8);
    for (int x = 0; x < 8; ++x) img[x] = mul(x, g);
    s.gens.push_back(Permutation::from_images(img, false));
  }
  return s;
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec s{a.name + "x" + b.name, a.degree + b.degree, {}};
  for (const auto& g : a.gens) {
    std::vector<long long> img(s.degree);
    for (std::size_t i = 0; i < a.degree; ++i) img[i] = g[i];
    for (std::size_t i = 0; i < b.degree; ++i) img[a.degree + i] = static_cast<long long>(a.degree + i);
    s.gens.push_back(Permutation::from_images(img, false));
  }
  for (const auto& g : b.gens) {
    std::vector<long long> img(s.degree);
    for (std::size_t i = 0; i < a.degree; ++i) img[i] = static_cast<long long>(i);
    for (std::size_t i = 0; i < b.degree; ++i) img[a.degree + i] = static_cast<long long>(a.degree + g[i]);
    s.gens.push_back(Permutation::from_images(img, false));
  }
  return s;
}

GroupSpec sl2(int q) {
  GroupSpec s{"SL2(" + std::to_string(q) + ")", static_cast<std::size_t>(q * q - 1), {}};
  s.gens = act_on_vectors(q, 2, {Mat{{1, 1}, {0, 1}}, Mat{{1, 0}, {1, 1}}});
  return s;
}

GroupSpec sl3_3() {
  GroupSpec s{"SL3(3)", 26, {}};
  s.gens = act_on_vectors(3, 3, {Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, Mat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
  return s;
}

GroupSpec su3_3() {
  // hermitian form x1 y3^ + x2 y2^ + x3 y1^; projective isotropic points
  using V = std::array<int, 3>;
  auto herm = [](const V& x, const V& y) {
    int r = 0;
    for (int i = 0; i < 3; ++i) r = F9::add(r, F9::mul(x[i], F9::conj(y[2 - i])));
    return r;
  };
  auto normalize = [](V v) {
    int lead = 0;
    for (int i = 0; i < 3; ++i)
      if (v[i]) {
        lead = F9::inv(v[i]);
        break;
      }
    for (auto& x : v) x = F9::mul(x, lead);
    return v;
  };
  std::vector<V> pts;
  std::map<V, int> index;
  for (int code = 1; code < 729; ++code) {
    V v{code % 9, code / 9 % 9, code / 81};
    if (normalize(v) != v || herm(v, v) != 0) continue;
    index[v] = static_cast<int>(pts.size());
    pts.push_back(v);
  }
  auto unitary = [&](const std::array<V, 3>& m) {
    // rows of M; v -> vM preserves the form iff h(e_i M, e_j M) = h(e_i, e_j)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (herm(m[i], m[j]) != (i + j == 2 ? 1 : 0)) return false;
    return true;
  };
  GroupSpec s{"PSU3(3)", pts.size(), {}};
  auto add_gen = [&](const std::array<V, 3>& m) {
    std::vector<long long> img(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
      V w{0, 0, 0};
      for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) w[j] = F9::add(w[j], F9::mul(pts[k][i], m[i][j]));
      img[k] = index.at(normalize(w));
    }
    s.gens.push_back(Permutation::from_images(img, false));
  };
  // all upper and lower unitriangular unitary matrices
  for (int code = 1; code < 729; ++code) {
    const int a = code % 9, b = code / 9 % 9, c = code / 81;
    std::array<V, 3> up{V{1, a, b}, V{0, 1, c}, V{0, 0, 1}};
    std::array<V, 3> lo{V{1, 0, 0}, V{a, 1, 0}, V{b, c, 1}};
    if (unitary(up)) add_gen(up);
    if (unitary(lo)) add_gen(lo);
  }
  return s;
}

GroupSpec mathieu11() {
  GroupSpec s{"M11", 11, {}};
  s.gens.push_back(Permutation::from_cycles(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}));
  s.gens.push_back(Permutation::from_cycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}}));
  return s;
}

GroupSpec mathieu12() {
  GroupSpec s{"M12", 12, {}};
  s.gens.push_back(Permutation::from_cycles(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}));
  s.gens.push_back(Permutation::from_cycles(12, {{3, 7, 11, 8}, {4, 10, 5, 6}}));
  s.gens.push_back(Permutation::from_cycles(12, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}}));
  return s;
}

namespace {

// (a, b, c) * (a', b', c') = (a + a', b + b', c + c' + 3(ab' - ba')) mod 5
int heis_code(int a, int b, int c) { return ((a % 5 + 5) % 5) + 5 * ((b % 5 + 5) % 5) + 25 * ((c % 5 + 5) % 5); }

Permutation heis_translation(int a2, int b2) {
  std::vector<long long> img(125);
  for (int x = 0; x < 125; ++x) {
    const int a = x % 5, b = x / 5 % 5, c = x / 25;
    img[x] = heis_code(a + a2, b + b2, c + 3 * (a * b2 - b * a2));
  }
  return Permutation::from_images(img, false);
}

Permutation heis_automorphism(int m00, int m01, int m10, int m11) {
  std::vector<long long> img(125);
  for (int x = 0; x < 125; ++x) {
    const int a = x % 5, b = x / 5 % 5, c = x / 25;
    img[x] = heis_code(m00 * a + m01 * b, m10 * a + m11 * b, c);
  }
  return Permutation::from_images(img, false);
}

}  // namespace

std::vector<Permutation> heisenberg_q8_complement() {
  return {heis_automorphism(2, 0, 0, 3), heis_automorphism(0, 1, -1, 0)};
}

GroupSpec heisenberg_q8() {
  GroupSpec s{"5^(1+2):Q8", 125, {}};
  s.gens.push_back(heis_translation(1, 0));
  s.gens.push_back(heis_translation(0, 1));
  for (auto& g : heisenberg_q8_complement()) s.gens.push_back(g);
  return s;
}

GroupSpec named_group(const std::string& name) {
  std::smatch m;
  if (std::regex_match(name, m, std::regex(R"(S(\d+))"))) return symmetric_group(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex(R"(A(\d+))"))) return alternating_group(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex(R"(C(\d+))"))) return cyclic_group(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex(R"(D(\d+))"))) {
    const int k = std::stoi(m[1]);
    if (k % 2 || k < 4) throw DomainError("dihedral order must be even and at least 4");
    return dihedral_group(k / 2);
  }
  if (name == "Q8") return quaternion_group();
  if (std::regex_match(name, m, std::regex(R"(SL2\((\d+)\))"))) {
    const int q = std::stoi(m[1]);
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) throw DomainError("SL2(q) fixture needs q prime");
    return sl2(q);
  }
  if (name == "SL3(3)") return sl3_3();
  if (name == "PSU3(3)" || name == "SU3(3)") return su3_3();
  if (name == "M11") return mathieu11();
  if (name == "M12") return mathieu12();
  if (name == "5^(1+2):Q8") return heisenberg_q8();
  if (name == "D8xC3") return direct_product(dihedral_group(4), cyclic_group(3));
  if (name == "C2xA4") return direct_product(cyclic_group(2), alternating_group(4));
  if (name == "S3xS3") return direct_product(symmetric_group(3), symmetric_group(3));
  if (name == "C3xS3") return direct_product(cyclic_group(3), symmetric_group(3));
  throw DomainError("unknown group name: " + name);
}

std::vector<std::string> corpus_names() {
  return {"S3",     "S4",     "S5",     "S6",      "S7",     "S8",      "A4",      "A5",     "A6",
          "A7",     "A8",     "C6",     "D8",      "D10",    "D12",     "Q8",      "SL2(3)", "D8xC3",
          "C2xA4",  "S3xS3",  "C3xS3",  "SL2(11)", "SL2(13)", "SL2(17)", "SL2(19)", "SL3(3)", "PSU3(3)",
          "M11",    "M12",    "5^(1+2):Q8"};
}

}  // namespace indres
