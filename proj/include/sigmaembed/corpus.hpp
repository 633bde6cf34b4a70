#ifndef SIGMAEMBED_CORPUS_HPP
#define SIGMAEMBED_CORPUS_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sigma.hpp"
#include "subgroup.hpp"

namespace sigmaembed {

inline Group cyclic_group(unsigned n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  if (n == 1) return Group::from_generators(1, {}, 1);
  std::vector<uint32_t> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Group::from_generators(n, {Perm::from_images(img)}, n);
}

inline Group elementary_abelian_group(unsigned p, unsigned k) {
  if (!is_prime(p) || k == 0) throw ValidationError("bad elementary abelian params");
  unsigned degree = p * k;
  std::vector<Perm> gens;
  for (unsigned b = 0; b < k; ++b) {
    std::vector<uint32_t> img(degree);
    for (unsigned i = 0; i < degree; ++i) img[i] = i;
    for (unsigned i = 0; i < p; ++i) img[b * p + i] = b * p + (i + 1) % p;
    gens.push_back(Perm::from_images(std::move(img)));
  }
  uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) order *= p;
  return Group::from_generators(degree, std::move(gens), order);
}

/// Dihedral group of the given (even) order.
inline Group dihedral_group(unsigned order) {
  if (order < 2 || order % 2) throw ValidationError("dihedral order must be even >= 2");
  if (order == 2) return cyclic_group(2);
  if (order == 4) return elementary_abelian_group(2, 2);
  unsigned n = order / 2;
  std::vector<uint32_t> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return Group::from_generators(
      n, {Perm::from_images(rot), Perm::from_images(refl)}, order);
}

inline Group symmetric_group(unsigned n) {
  if (n == 0) throw ValidationError("symmetric degree must be positive");
  if (n == 1) return Group::from_generators(1, {}, 1);
  std::vector<Perm> gens{Perm::from_cycles(n, "(0 1)")};
  if (n > 2) {
    std::vector<uint32_t> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
    gens.push_back(Perm::from_images(img));
  }
  uint64_t order = 1;
  for (unsigned i = 2; i <= n; ++i) order *= i;
  return Group::from_generators(n, std::move(gens), order);
}

inline Group alternating_group(unsigned n) {
  if (n < 3) throw ValidationError("alternating degree must be >= 3");
  std::vector<Perm> gens{Perm::from_cycles(n, "(0 1 2)")};
  if (n > 3) {
    std::vector<uint32_t> img(n);
    if (n % 2) {
      for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
    } else {
      img[0] = 0;
      for (unsigned i = 1; i < n; ++i) img[i] = 1 + (i % (n - 1));
    }
    gens.push_back(Perm::from_images(img));
  }
  uint64_t order = 1;
  for (unsigned i = 3; i <= n; ++i) order *= i;
  return Group::from_generators(n, std::move(gens), order);
}

/// Q8 as the left-regular action on {1,-1,i,-i,j,-j,k,-k}.
inline Group quaternion8_group() {
  Perm i = Perm::from_images({2, 3, 1, 0, 6, 7, 5, 4});
  Perm j = Perm::from_images({4, 5, 7, 6, 1, 0, 2, 3});
  return Group::from_generators(8, {i, j}, 8);
}

inline Group direct_product(const Group& a, const Group& b) {
  unsigned da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<uint32_t> img(da + db);
    for (unsigned i = 0; i < da; ++i) img[i] = g[i];
    for (unsigned i = 0; i < db; ++i) img[da + i] = da + i;
    gens.push_back(Perm::from_images(std::move(img)));
  }
  for (const Perm& g : b.generators()) {
    std::vector<uint32_t> img(da + db);
    for (unsigned i = 0; i < da; ++i) img[i] = i;
    for (unsigned i = 0; i < db; ++i) img[da + i] = da + g[i];
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return Group::from_generators(da + db, std::move(gens), a.order() * b.order());
}

/// Nonabelian C_r ⋊ C_t for primes r, t with t | r-1, t > 1, acting on r points.
inline Group metacyclic_group(uint64_t r, uint64_t t) {
  if (!is_prime(r) || !is_prime(t) || t < 2 || (r - 1) % t != 0)
    throw ValidationError("metacyclic params need primes with t | r-1");
  std::vector<uint32_t> rot(r), mul(r);
  // smallest u of multiplicative order t mod r
  uint64_t u = 0;
  for (uint64_t c = 2; c < r; ++c) {
    uint64_t x = 1;
    unsigned ord = 0;
    do {
      x = x * c % r;
      ++ord;
    } while (x != 1);
    if (ord == t) {
      u = c;
      break;
    }
  }
  for (uint64_t i = 0; i < r; ++i) {
    rot[i] = static_cast<uint32_t>((i + 1) % r);
    mul[i] = static_cast<uint32_t>(i * u % r);
  }
  return Group::from_generators(static_cast<unsigned>(r),
                                {Perm::from_images(rot), Perm::from_images(mul)},
                                r * t);
}

namespace detail132 {

// arithmetic in F_q[x]/(f), elements as coefficient vectors
inline std::vector<unsigned> poly_mul_mod(const std::vector<unsigned>& a,
                                          const std::vector<unsigned>& b,
                                          const std::vector<unsigned>& f,
                                          unsigned q) {
  unsigned d = static_cast<unsigned>(f.size()) - 1;
  std::vector<unsigned> prod(2 * d, 0);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
  for (int k = static_cast<int>(2 * d) - 2; k >= static_cast<int>(d); --k) {
    unsigned c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < d; ++i)
      prod[k - d + i] = (prod[k - d + i] + c * (q - f[i] % q)) % q;
  }
  prod.resize(d);
  return prod;
}

inline bool poly_irreducible(const std::vector<unsigned>& f, unsigned q) {
  // trial division by all monic polynomials of degree 1..d/2
  unsigned d = static_cast<unsigned>(f.size()) - 1;
  for (unsigned dd = 1; dd <= d / 2; ++dd) {
    uint64_t count = 1;
    for (unsigned i = 0; i < dd; ++i) count *= q;
    for (uint64_t code = 0; code < count; ++code) {
      std::vector<unsigned> g(dd + 1, 0);
      uint64_t c = code;
      for (unsigned i = 0; i < dd; ++i) {
        g[i] = static_cast<unsigned>(c % q);
        c /= q;
      }
      g[dd] = 1;
      // long division remainder of f by g
      std::vector<unsigned> r(f);
      for (int k = static_cast<int>(d); k >= static_cast<int>(dd); --k) {
        unsigned lead = r[k];
        if (!lead) continue;
        for (unsigned i = 0; i <= dd; ++i) {
          unsigned sub = lead * g[i] % q;
          r[k - dd + i] = (r[k - dd + i] + q - sub) % q;
        }
      }
      bool zero = true;
      for (unsigned i = 0; i < dd; ++i)
        if (r[i]) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace detail132

/// The direct factors and marked subgroups of the Example-1.3(ii)-style
/// construction G = (Q ⋊ C_p) × (C_r ⋊ C_t).
struct Example132 {
  Group group;
  unsigned module_dim;           // d = multiplicative order of q mod p
  std::vector<Perm> q_gens;      // translations spanning Q
  Perm p_gen;                    // order-p module automorphism
  Perm r_gen;                    // r-cycle
  Perm t_gen;                    // generator of A = C_t
  Perm t_gen_conjugate;          // generator of a C_t distinct from A

  Subgroup sub_Q() const { return Subgroup::generated_by_perms(group, q_gens); }
  Subgroup sub_V() const {  // Q ⋊ C_p
    std::vector<Perm> g = q_gens;
    g.push_back(p_gen);
    return Subgroup::generated_by_perms(group, g);
  }
  Subgroup sub_Cr() const { return Subgroup::generated_by_perms(group, {r_gen}); }
  Subgroup sub_A() const { return Subgroup::generated_by_perms(group, {t_gen}); }
  Subgroup sub_T() const {
    return Subgroup::generated_by_perms(group, {t_gen_conjugate});
  }
  Subgroup sub_B() const { return Subgroup::generated_by_perms(group, {q_gens[0]}); }
  Subgroup sub_H() const {  // A × B
    return Subgroup::generated_by_perms(group, {t_gen, q_gens[0]});
  }
};

/// Builds G = (Q ⋊ C_p) × (C_r ⋊ C_t) with Q a faithful simple F_qC_p-module.
/// Q is realized as the additive group of F_{q^d} with C_p acting as
/// multiplication by an element of order p; the metacyclic factor acts on r
/// points, so the degree is q^d + r.
inline Example132 build_example_132(uint64_t p, uint64_t q, uint64_t r, uint64_t t,
                                    bool require_q_divides_p_minus_1 = true) {
  for (uint64_t v : {p, q, r, t})
    if (!is_prime(v)) throw ValidationError("example-132 params must be prime");
  if (p == q || p == r || p == t || q == r || q == t || r == t)
    throw ValidationError("example-132 params must be distinct primes");
  if (require_q_divides_p_minus_1 && (p - 1) % q != 0)
    throw ValidationError("example-132 requires q | p-1");
  if (t < 2 || (r - 1) % t != 0)
    throw ValidationError("example-132 requires t | r-1");

  // d = multiplicative order of q mod p
  unsigned d = 1;
  {
    uint64_t x = q % p;
    while (x != 1) {
      x = x * q % p;
      ++d;
    }
  }
  uint64_t module_size = 1;
  for (unsigned i = 0; i < d; ++i) module_size *= q;
  if (module_size > 4096) throw BudgetError("example-132 module too large");

  // find an irreducible monic f of degree d over F_q (smallest by code)
  std::vector<unsigned> f;
  {
    uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    for (uint64_t code = 0; code < count; ++code) {
      std::vector<unsigned> cand(d + 1, 0);
      uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        cand[i] = static_cast<unsigned>(c % q);
        c /= q;
      }
      cand[d] = 1;
      if (d == 1 || detail132::poly_irreducible(cand, static_cast<unsigned>(q))) {
        f = cand;
        break;
      }
    }
  }

  auto encode = [&](const std::vector<unsigned>& v) {
    uint64_t code = 0;
    for (unsigned i = d; i-- > 0;) code = code * q + v[i];
    return static_cast<uint32_t>(code);
  };
  auto decode = [&](uint64_t code) {
    std::vector<unsigned> v(d);
    for (unsigned i = 0; i < d; ++i) {
      v[i] = static_cast<unsigned>(code % q);
      code /= q;
    }
    return v;
  };

  // element g of multiplicative order p in F_{q^d}: a^((q^d-1)/p) for the
  // first a that gives g != 1
  std::vector<unsigned> gelt;
  {
    uint64_t exp = (module_size - 1) / p;
    for (uint64_t a = 2; a < module_size; ++a) {
      std::vector<unsigned> base = decode(a);
      std::vector<unsigned> acc(d, 0);
      acc[0] = 1;
      uint64_t e = exp;
      std::vector<unsigned> sq = base;
      while (e) {
        if (e & 1) acc = detail132::poly_mul_mod(acc, sq, f, static_cast<unsigned>(q));
        sq = detail132::poly_mul_mod(sq, sq, f, static_cast<unsigned>(q));
        e >>= 1;
      }
      bool is_one = acc[0] == 1;
      for (unsigned i = 1; i < d; ++i)
        if (acc[i]) is_one = false;
      if (!is_one) {
        gelt = acc;
        break;
      }
    }
  }

  unsigned module_points = static_cast<unsigned>(module_size);
  unsigned degree = module_points + static_cast<unsigned>(r);
  auto pad = [&](std::vector<uint32_t> img_module) {
    std::vector<uint32_t> img(degree);
    for (unsigned i = 0; i < module_points; ++i) img[i] = img_module[i];
    for (unsigned i = module_points; i < degree; ++i) img[i] = i;
    return Perm::from_images(std::move(img));
  };

  std::vector<Perm> q_gens;
  for (unsigned b = 0; b < d; ++b) {
    std::vector<uint32_t> img(module_points);
    for (uint32_t v = 0; v < module_points; ++v) {
      std::vector<unsigned> vec = decode(v);
      vec[b] = (vec[b] + 1) % q;
      img[v] = encode(vec);
    }
    q_gens.push_back(pad(std::move(img)));
  }
  std::vector<uint32_t> mul_img(module_points);
  for (uint32_t v = 0; v < module_points; ++v)
    mul_img[v] = encode(
        detail132::poly_mul_mod(decode(v), gelt, f, static_cast<unsigned>(q)));
  Perm p_gen = pad(std::move(mul_img));

  Group rt = metacyclic_group(r, t);
  auto lift = [&](const Perm& g) {
    std::vector<uint32_t> img(degree);
    for (unsigned i = 0; i < module_points; ++i) img[i] = i;
    for (unsigned i = 0; i < r; ++i) img[module_points + i] = module_points + g[i];
    return Perm::from_images(std::move(img));
  };
  Perm r_gen = lift(rt.generators()[0]);
  Perm t_gen = lift(rt.generators()[1]);
  Perm t_conj = lift(rt.generators()[1].conjugate_by(rt.generators()[0]));

  std::vector<Perm> gens = q_gens;
  gens.push_back(p_gen);
  gens.push_back(r_gen);
  gens.push_back(t_gen);
  uint64_t order = module_size * p * r * t;
  Group g = Group::from_generators(degree, gens, order);
  if (g.order() != order)
    throw ValidationError("example-132 construction has unexpected order");
  return Example132{std::move(g), d, std::move(q_gens), std::move(p_gen),
                    std::move(r_gen), std::move(t_gen), std::move(t_conj)};
}

// ---- catalog files ----

struct CatalogEntry {
  std::string name;
  unsigned degree = 0;
  std::vector<std::string> generator_words;
  std::vector<std::string> tags;
  std::optional<uint64_t> expected_order;
};

inline std::string serialize_catalog_entry(const CatalogEntry& e) {
  std::string out = e.name + "; " + std::to_string(e.degree) + "; ";
  for (size_t i = 0; i < e.generator_words.size(); ++i) {
    if (i) out += ", ";
    out += e.generator_words[i];
  }
  if (e.expected_order) out += "; " + std::to_string(*e.expected_order);
  return out;
}

inline CatalogEntry serialize_group(const std::string& name, const Group& g) {
  CatalogEntry e;
  e.name = name;
  e.degree = g.degree();
  for (const Perm& gen : g.generators()) e.generator_words.push_back(gen.to_cycles());
  e.expected_order = g.order();
  return e;
}

/// One entry per line: `name; degree; gen1, gen2, ...; [expected_order]`.
/// '#' starts a comment; blank lines ignored.
inline std::vector<std::pair<CatalogEntry, Group>> parse_catalog(
    std::istream& in, uint64_t order_cap = kDefaultOrderCap) {
  std::vector<std::pair<CatalogEntry, Group>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string fld;
    while (std::getline(ss, fld, ';')) fields.push_back(fld);
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    if (fields.size() < 3)
      throw ValidationError("catalog line " + std::to_string(lineno) +
                            ": expected `name; degree; gens[; order]`");
    CatalogEntry e;
    e.name = strip(fields[0]);
    try {
      e.degree = static_cast<unsigned>(std::stoul(strip(fields[1])));
    } catch (const std::exception&) {
      throw ValidationError("catalog line " + std::to_string(lineno) + ": bad degree");
    }
    // generators: split at commas that sit between cycles
    std::string gens = fields[2];
    std::string cur;
    int depth = 0;
    for (char c : gens) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        e.generator_words.push_back(strip(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!strip(cur).empty()) e.generator_words.push_back(strip(cur));
    if (fields.size() > 3 && !strip(fields[3]).empty())
      e.expected_order = std::stoull(strip(fields[3]));
    std::vector<Perm> perms;
    for (const std::string& w : e.generator_words) {
      try {
        perms.push_back(Perm::from_cycles(e.degree, w));
      } catch (const ValidationError& err) {
        throw ValidationError("catalog line " + std::to_string(lineno) + ": " +
                              err.what());
      }
    }
    Group g = Group::from_generators(e.degree, std::move(perms), order_cap);
    if (e.expected_order && g.order() != *e.expected_order)
      throw ValidationError("catalog entry '" + e.name + "': order " +
                            std::to_string(g.order()) + " != expected " +
                            std::to_string(*e.expected_order));
    out.emplace_back(std::move(e), std::move(g));
  }
  return out;
}

inline std::vector<std::pair<CatalogEntry, Group>> load_catalog(
    const std::string& path, uint64_t order_cap = kDefaultOrderCap) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open catalog file: " + path);
  return parse_catalog(in, order_cap);
}

struct NamedGroup {
  std::string name;
  Group group;
};

/// Built-in corpus: cyclic, dihedral and small abelian families up to the
/// given order, plus the named groups the verification targets exercise.
inline std::vector<NamedGroup> default_corpus(uint64_t max_order = 100) {
  std::vector<NamedGroup> out;
  for (unsigned n = 1; n <= max_order && n <= 200; ++n)
    out.push_back({"C" + std::to_string(n), cyclic_group(n)});
  for (unsigned m = 6; m <= max_order && m <= 200; m += 2)
    out.push_back({"D" + std::to_string(m), dihedral_group(m)});
  auto add = [&](const std::string& name, Group g) {
    if (g.order() <= max_order) out.push_back({name, std::move(g)});
  };
  add("C2xC2", elementary_abelian_group(2, 2));
  add("C2xC2xC2", elementary_abelian_group(2, 3));
  add("C3xC3", elementary_abelian_group(3, 2));
  add("C5xC5", elementary_abelian_group(5, 2));
  add("C7xC7", elementary_abelian_group(7, 2));
  add("C2xC4", direct_product(cyclic_group(2), cyclic_group(4)));
  add("C3xC9", direct_product(cyclic_group(3), cyclic_group(9)));
  add("C2xC6", direct_product(cyclic_group(2), cyclic_group(6)));
  add("Q8", quaternion8_group());
  add("A4", alternating_group(4));
  add("S4", symmetric_group(4));
  add("A5", alternating_group(5));
  add("D8xC3", direct_product(dihedral_group(8), cyclic_group(3)));
  add("S3xC5", direct_product(symmetric_group(3), cyclic_group(5)));
  add("Q8xC3", direct_product(quaternion8_group(), cyclic_group(3)));
  add("A4xC5", direct_product(alternating_group(4), cyclic_group(5)));
  add("C7:C3", metacyclic_group(7, 3));
  add("C13:C3", metacyclic_group(13, 3));
  add("C5:C4", [] {
    // holomorph-style F20: x -> x+1, x -> 2x mod 5
    std::vector<uint32_t> rot{1, 2, 3, 4, 0}, mul{0, 2, 4, 1, 3};
    return Group::from_generators(
        5, {Perm::from_images(rot), Perm::from_images(mul)}, 20);
  }());
  return out;
}

/// Resolves a builder expression: catalog names like A4, S4, A5, Cn, Dn, Q8,
/// Sn, CrxCt style products are intentionally not a full parser; the forms
/// used by the CLI are An, Sn, Cn, Dn, Q8, ex132(p,q,r,t), and names from
/// default_corpus().
inline Group build_group_expr(const std::string& expr) {
  if (expr.rfind("ex132(", 0) == 0 && expr.back() == ')') {
    std::stringstream ss(expr.substr(6, expr.size() - 7));
    std::vector<uint64_t> v;
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoull(tok));
    if (v.size() != 4) throw ValidationError("ex132 expects 4 primes");
    return build_example_132(v[0], v[1], v[2], v[3]).group;
  }
  for (const NamedGroup& ng : default_corpus(5000))
    if (ng.name == expr) return ng.group;
  if (expr.size() > 1 && (expr[0] == 'A' || expr[0] == 'S' || expr[0] == 'C' ||
                          expr[0] == 'D')) {
    unsigned n = static_cast<unsigned>(std::stoul(expr.substr(1)));
    switch (expr[0]) {
      case 'A':
        return alternating_group(n);
      case 'S':
        return symmetric_group(n);
      case 'C':
        return cyclic_group(n);
      case 'D':
        return dihedral_group(n);
    }
  }
  throw ValidationError("unknown group expression: " + expr);
}

}  // namespace sigmaembed

#endif
