#include "pronorm/constructions.hpp"

#include <algorithm>

#include "pronorm/errors.hpp"
#include "pronorm/normalizer.hpp"
#include "pronorm/subgroup_ops.hpp"
#include "pronorm/sylow.hpp"

namespace pronorm {

namespace {

Integer factorial(std::uint64_t n) {
  Integer f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer int_pow(Integer b, std::uint64_t e) {
  Integer r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<Perm> sym_gens(std::uint64_t n) {
  if (n < 2) return {};
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<Point> img(n);
    for (Point i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(img));
  }
  return gens;
}

std::vector<Perm> alt_gens(std::uint64_t n) {
  if (n < 3) return {};
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<Point> img(n);
    if (n % 2 == 1) {
      for (Point i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    } else {
      img[0] = 0;
      for (Point i = 1; i < n; ++i) img[i] = static_cast<Point>(1 + (i % (n - 1)));
    }
    gens.emplace_back(std::move(img));
  }
  return gens;
}

// Lifts a permutation of block `b` (block size d) to the full wreath domain.
Perm shift_to_block(const Perm& p, std::size_t b, std::size_t d, std::size_t degree) {
  std::vector<Point> img(degree);
  for (Point x = 0; x < degree; ++x) img[x] = x;
  for (Point x = 0; x < d; ++x) img[b * d + x] = static_cast<Point>(b * d + p[x]);
  return Perm(std::move(img));
}

// Permutation of the wreath domain induced by a block permutation.
Perm block_perm(const Perm& sigma, std::size_t nblocks, std::size_t d) {
  std::vector<Point> img(nblocks * d);
  for (std::size_t b = 0; b < nblocks; ++b)
    for (std::size_t x = 0; x < d; ++x)
      img[b * d + x] = static_cast<Point>(std::size_t(sigma[static_cast<Point>(b)]) * d + x);
  return Perm(std::move(img));
}

void check_order(const PermGroup& g, const Integer& want, const char* what) {
  if (g.order() != want)
    throw Error(std::string(what) + ": order check failed (got " + g.order().str() +
                ", want " + want.str() + ")");
}

BuiltGroup realize_wreath(const GroupSpec& spec, const Caps& caps) {
  BuiltGroup inner = realize(spec.children[0], caps);
  std::uint64_t n = spec.n;
  std::size_t d = inner.group.degree();
  std::size_t degree = static_cast<std::size_t>(n) * d;
  if (degree > caps.max_degree) throw CapExceeded("wreath degree exceeds cap");

  std::vector<Perm> gens;
  std::vector<std::vector<Perm>> factor_gens(n);
  for (std::size_t b = 0; b < n; ++b)
    for (const Perm& g : inner.group.generators()) {
      Perm lifted = shift_to_block(g, b, d, degree);
      factor_gens[b].push_back(lifted);
      gens.push_back(std::move(lifted));
    }
  std::vector<Perm> top_gens;
  for (const Perm& s : sym_gens(n)) top_gens.push_back(block_perm(s, n, d));
  for (const Perm& t : top_gens) gens.push_back(t);

  BuiltGroup out;
  out.group = PermGroup(degree, std::move(gens));
  Integer an = int_pow(inner.group.order(), n);
  check_order(out.group, an * factorial(n), "wreath product");

  auto sub = [&](std::vector<Perm> g) {
    PermGroup::Options opts;
    opts.parent = share(out.group);
    opts.trust_parent_membership = true;
    return PermGroup(degree, std::move(g), std::move(opts));
  };

  std::vector<Perm> base_gens;
  for (std::size_t b = 0; b < n; ++b) {
    for (const Perm& g : factor_gens[b]) base_gens.push_back(g);
    out.handles.emplace("factor" + std::to_string(b), sub(factor_gens[b]));
  }
  PermGroup base = sub(base_gens);
  check_order(base, an, "wreath base");
  PermGroup top = sub(top_gens);
  check_order(top, factorial(n), "wreath top");
  out.handles.emplace("base", std::move(base));
  out.handles.emplace("top", std::move(top));
  out.provenance = spec;
  return out;
}

BuiltGroup realize_regular(const GroupSpec& spec, const Caps& caps) {
  BuiltGroup inner = realize(spec.children[0], caps);
  if (inner.group.order() > caps.max_degree)
    throw CapExceeded("regular action degree exceeds cap");
  std::vector<Perm> elems = inner.group.elements(caps.max_elements);
  std::sort(elems.begin(), elems.end());
  std::size_t degree = elems.size();
  std::unordered_map<Perm, Point, PermHash> at;
  for (std::size_t i = 0; i < degree; ++i) at.emplace(elems[i], static_cast<Point>(i));

  std::vector<Perm> gens;
  for (const Perm& g : inner.group.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = at.at(elems[i] * g);
    gens.emplace_back(std::move(img));
  }
  BuiltGroup out;
  out.group = PermGroup(degree == 0 ? 1 : degree, std::move(gens));
  check_order(out.group, inner.group.order(), "regular action");
  out.provenance = spec;
  return out;
}

BuiltGroup realize_quotient(const GroupSpec& spec, const Caps& caps) {
  BuiltGroup inner = realize(spec.children[0], caps);
  PermGroup N = PermGroup::trivial(inner.group.degree());
  switch (spec.tag) {
    case GroupSpec::RadicalTag::O2: N = p_radical(inner.group, 2); break;
    case GroupSpec::RadicalTag::Odd: N = odd_radical(inner.group); break;
    case GroupSpec::RadicalTag::Center: N = center(inner.group); break;
  }
  Epimorphism epi = quotient(inner.group, N, caps.max_coset_index);
  BuiltGroup out;
  out.group = epi.target();
  out.provenance = spec;
  return out;
}

}  // namespace

const PermGroup& BuiltGroup::handle(const std::string& name) const {
  auto it = handles.find(name);
  if (it == handles.end()) throw PreconditionError("no such handle: " + name);
  return it->second;
}

BuiltGroup realize(const GroupSpec& spec, const Caps& caps) {
  spec.validate();
  BuiltGroup out;
  switch (spec.kind) {
    case GroupSpec::Kind::Sym: {
      std::size_t deg = std::max<std::uint64_t>(spec.n, 1);
      out.group = PermGroup(deg, sym_gens(spec.n));
      check_order(out.group, factorial(spec.n), "Sym");
      break;
    }
    case GroupSpec::Kind::Alt: {
      std::size_t deg = std::max<std::uint64_t>(spec.n, 1);
      out.group = PermGroup(deg, alt_gens(spec.n));
      check_order(out.group, spec.n < 3 ? Integer(1) : factorial(spec.n) / 2, "Alt");
      if (spec.n >= 5) out.handles.emplace("socle", out.group);
      break;
    }
    case GroupSpec::Kind::Cyclic: {
      std::size_t deg = std::max<std::uint64_t>(spec.n, 1);
      std::vector<Perm> gens;
      if (spec.n >= 2) {
        std::vector<Point> img(deg);
        for (Point i = 0; i < deg; ++i) img[i] = static_cast<Point>((i + 1) % deg);
        gens.emplace_back(std::move(img));
      }
      out.group = PermGroup(deg, std::move(gens));
      check_order(out.group, Integer(spec.n), "Cyclic");
      break;
    }
    case GroupSpec::Kind::Dihedral: {
      std::size_t deg = spec.n;
      std::vector<Point> rot(deg), refl(deg);
      for (Point i = 0; i < deg; ++i) {
        rot[i] = static_cast<Point>((i + 1) % deg);
        refl[i] = static_cast<Point>((deg - i) % deg);
      }
      out.group = PermGroup(deg, {Perm(rot), Perm(refl)});
      check_order(out.group, Integer(2) * spec.n, "Dihedral");
      break;
    }
    case GroupSpec::Kind::ElemAbelian: {
      std::size_t deg = static_cast<std::size_t>(spec.p) * spec.n;
      std::vector<Perm> gens;
      for (std::uint64_t b = 0; b < spec.n; ++b) {
        std::vector<Point> img(deg);
        for (Point i = 0; i < deg; ++i) img[i] = i;
        for (std::uint64_t i = 0; i < spec.p; ++i)
          img[b * spec.p + i] = static_cast<Point>(b * spec.p + (i + 1) % spec.p);
        gens.emplace_back(std::move(img));
      }
      out.group = PermGroup(deg, std::move(gens));
      check_order(out.group, int_pow(Integer(spec.p), spec.n), "ElemAbelian");
      break;
    }
    case GroupSpec::Kind::Quaternion8: {
      // Regular action on {1,-1,i,-i,j,-j,k,-k}; right multiplication by i, j.
      Perm mi(std::vector<Point>{2, 3, 1, 0, 7, 6, 4, 5});
      Perm mj(std::vector<Point>{4, 5, 6, 7, 1, 0, 3, 2});
      out.group = PermGroup(8, {mi, mj});
      check_order(out.group, 8, "Quaternion8");
      break;
    }
    case GroupSpec::Kind::Frobenius73: {
      Perm a = Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
      Perm b = Perm::from_cycles(7, {{1, 2, 4}, {3, 6, 5}});  // x -> 2x mod 7
      out.group = PermGroup(7, {a, b});
      check_order(out.group, 21, "Frobenius73");
      PermGroup::Options opts;
      opts.parent = share(out.group);
      opts.trust_parent_membership = true;
      PermGroup kernel(7, {a}, opts);
      out.handles.emplace("kernel", kernel);
      out.handles.emplace("socle", std::move(kernel));
      out.handles.emplace("complement", PermGroup(7, {b}, opts));
      break;
    }
    case GroupSpec::Kind::SL2:
      return vector_action(symplectic_group(1, static_cast<std::uint32_t>(spec.q)), caps);
    case GroupSpec::Kind::Sp:
      return vector_action(
          symplectic_group(static_cast<std::uint32_t>(spec.n),
                           static_cast<std::uint32_t>(spec.q)),
          caps);
    case GroupSpec::Kind::DirectProduct: {
      std::vector<BuiltGroup> factors;
      for (const auto& c : spec.children) factors.push_back(realize(c, caps));
      out = direct_product(factors);
      break;
    }
    case GroupSpec::Kind::WreathNatural:
      return realize_wreath(spec, caps);
    case GroupSpec::Kind::RegularAction:
      return realize_regular(spec, caps);
    case GroupSpec::Kind::Quotient:
      return realize_quotient(spec, caps);
  }
  if (!out.provenance) out.provenance = spec;
  return out;
}

BuiltGroup direct_product(const std::vector<BuiltGroup>& factors) {
  if (factors.empty()) throw PreconditionError("product needs at least one factor");
  std::size_t degree = 0;
  std::vector<std::size_t> offset;
  for (const auto& f : factors) {
    offset.push_back(degree);
    degree += f.group.degree();
  }

  auto lift = [&](const Perm& p, std::size_t fi) {
    std::vector<Point> img(degree);
    for (Point x = 0; x < degree; ++x) img[x] = x;
    for (Point x = 0; x < factors[fi].group.degree(); ++x)
      img[offset[fi] + x] = static_cast<Point>(offset[fi] + p[x]);
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  std::vector<std::vector<Perm>> lifted(factors.size());
  for (std::size_t fi = 0; fi < factors.size(); ++fi)
    for (const Perm& g : factors[fi].group.generators()) {
      Perm l = lift(g, fi);
      lifted[fi].push_back(l);
      gens.push_back(std::move(l));
    }

  BuiltGroup out;
  out.group = PermGroup(degree, std::move(gens));
  Integer want = 1;
  for (const auto& f : factors) want *= f.group.order();
  check_order(out.group, want, "direct product");

  auto sub = [&](std::vector<Perm> g) {
    PermGroup::Options opts;
    opts.parent = share(out.group);
    opts.trust_parent_membership = true;
    return PermGroup(degree, std::move(g), std::move(opts));
  };

  bool all_socles = true;
  std::vector<Perm> socle_gens;
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    out.handles.emplace("factor" + std::to_string(fi), sub(lifted[fi]));
    for (const auto& [name, h] : factors[fi].handles) {
      std::vector<Perm> hg;
      for (const Perm& g : h.generators()) hg.push_back(lift(g, fi));
      out.handles.emplace("factor" + std::to_string(fi) + "." + name, sub(std::move(hg)));
    }
    if (factors[fi].has_handle("socle")) {
      for (const Perm& g : factors[fi].handle("socle").generators())
        socle_gens.push_back(lift(g, fi));
    } else {
      all_socles = false;
    }
  }
  if (all_socles) out.handles.emplace("socle", sub(std::move(socle_gens)));

  // Projections pi_i with the complementary factors as kernel.
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    std::vector<Perm> others;
    for (std::size_t fj = 0; fj < factors.size(); ++fj)
      if (fj != fi)
        for (const Perm& g : lifted[fj]) others.push_back(g);
    out.projections.push_back(Epimorphism::domain_restriction(
        out.group, static_cast<Point>(offset[fi]), factors[fi].group.degree(),
        sub(std::move(others))));
  }
  return out;
}

PermGroup diagonal_subgroup(const BuiltGroup& product, std::size_t factor_i,
                            std::size_t factor_j, const std::vector<Perm>& gens_i,
                            const std::vector<Perm>& gens_j) {
  if (factor_i == factor_j) throw PreconditionError("diagonal needs distinct factors");
  if (gens_i.size() != gens_j.size())
    throw PreconditionError("generator pairing must align");
  std::size_t nf = product.projections.size();
  if (nf == 0) throw PreconditionError("not a product: no projection metadata");
  if (factor_i >= nf || factor_j >= nf) throw PreconditionError("factor index out of range");

  // The product layout concatenates factor windows in order.
  std::vector<std::size_t> degs(nf), offsets(nf);
  std::size_t acc = 0;
  for (std::size_t k = 0; k < nf; ++k) {
    degs[k] = product.projections[k].target().degree();
    offsets[k] = acc;
    acc += degs[k];
  }
  if (acc != product.group.degree()) throw Error("factor windows do not tile the domain");

  std::size_t degree = product.group.degree();
  std::vector<Perm> diag;
  for (std::size_t t = 0; t < gens_i.size(); ++t) {
    if (gens_i[t].degree() != degs[factor_i] || gens_j[t].degree() != degs[factor_j])
      throw DegreeMismatch("pairing generators must be in factor-local coordinates");
    std::vector<Point> img(degree);
    for (Point x = 0; x < degree; ++x) img[x] = x;
    for (Point x = 0; x < degs[factor_i]; ++x)
      img[offsets[factor_i] + x] = static_cast<Point>(offsets[factor_i] + gens_i[t][x]);
    for (Point x = 0; x < degs[factor_j]; ++x)
      img[offsets[factor_j] + x] = static_cast<Point>(offsets[factor_j] + gens_j[t][x]);
    diag.emplace_back(std::move(img));
  }
  PermGroup::Options opts;
  opts.parent = share(product.group);
  opts.trust_parent_membership = true;
  PermGroup D(degree, std::move(diag), std::move(opts));
  // Relation check: the pairing extends to an isomorphism iff the graph
  // subgroup matches both sides' orders.
  Integer oi = PermGroup(degs[factor_i], gens_i).order();
  Integer oj = PermGroup(degs[factor_j], gens_j).order();
  if (D.order() != oi || D.order() != oj)
    throw PreconditionError("generator pairing is not an isomorphism");
  return D;
}

BuiltGroup vector_action(const MatrixGroupSpec& mspec, const Caps& caps) {
  PrimeField F(mspec.q);
  Integer npoints = 1;
  for (std::uint32_t i = 0; i < mspec.dimension; ++i) npoints *= mspec.q;
  npoints -= 1;
  if (npoints > caps.max_degree) throw CapExceeded("vector action degree exceeds cap");

  bool symplectic = mspec.form.n == mspec.dimension && mspec.dimension > 0;
  for (const Mat& g : mspec.generators) {
    if (!mat_invertible(F, g)) throw PreconditionError("singular generator matrix");
    if (symplectic && !preserves_form(F, g, mspec.form))
      throw PreconditionError("generator does not preserve the symplectic form");
  }

  std::vector<Perm> gens;
  for (const Mat& g : mspec.generators) gens.push_back(matrix_to_perm(F, g));
  BuiltGroup out;
  out.group = PermGroup(static_cast<std::size_t>(npoints.convert_to<std::uint64_t>()),
                        std::move(gens));
  if (symplectic)
    check_order(out.group, symplectic_order(mspec.dimension / 2, Integer(mspec.q)),
                "symplectic vector action");
  return out;
}

EmbeddingReport block_embedding(std::uint32_t m, std::uint32_t k, std::uint32_t q,
                                const Caps& caps) {
  if (m < 1 || k < 1) throw PreconditionError("block embedding needs m, k >= 1");
  PrimeField F(q);
  std::uint32_t d = 2 * (m + k);
  BuiltGroup ambient = vector_action(symplectic_group(m + k, q), caps);

  auto embed = [&](const MatrixGroupSpec& part, std::uint32_t coord_offset) {
    std::vector<Mat> out;
    for (const Mat& g : part.generators) {
      Mat big = Mat::identity(d);
      for (std::uint32_t i = 0; i < part.dimension; ++i)
        for (std::uint32_t j = 0; j < part.dimension; ++j)
          big.at(coord_offset + i, coord_offset + j) = g.at(i, j);
      out.push_back(std::move(big));
    }
    return out;
  };

  std::vector<Perm> gens;
  for (const Mat& g : embed(symplectic_group(m, q), 0))
    gens.push_back(matrix_to_perm(F, g));
  for (const Mat& g : embed(symplectic_group(k, q), 2 * m))
    gens.push_back(matrix_to_perm(F, g));

  PermGroup::Options opts;
  opts.parent = share(ambient.group);
  PermGroup sub(ambient.group.degree(), std::move(gens), std::move(opts));

  EmbeddingReport rep{sub, ambient.group, sub.order(), ambient.group.order(),
                      ambient.group.order() / sub.order(), false};
  if (rep.subgroup_order !=
      symplectic_order(m, Integer(q)) * symplectic_order(k, Integer(q)))
    throw Error("block embedding order check failed");
  rep.index_odd = is_odd(rep.index);
  return rep;
}

WreathEmbedding symplectic_wreath_embedding(std::uint32_t m, std::uint32_t t,
                                            std::uint32_t q, const Caps& caps) {
  if (m < 1 || t < 1) throw PreconditionError("wreath embedding needs m, t >= 1");
  PrimeField F(q);
  std::uint32_t d = 2 * m * t;
  BuiltGroup ambient = vector_action(symplectic_group(m * t, q), caps);

  // Image generators: Sp_{2m} in chunk 0, then chunk permutations.
  std::vector<Mat> mats;
  for (const Mat& g : symplectic_group(m, q).generators) {
    Mat big = Mat::identity(d);
    for (std::uint32_t i = 0; i < 2 * m; ++i)
      for (std::uint32_t j = 0; j < 2 * m; ++j) big.at(i, j) = g.at(i, j);
    mats.push_back(std::move(big));
  }
  if (t >= 2) {
    Mat swap01 = Mat::zero(d);
    for (std::uint32_t i = 4 * m; i < d; ++i) swap01.at(i, i) = 1;
    for (std::uint32_t i = 0; i < 2 * m; ++i) {
      swap01.at(i, 2 * m + i) = 1;
      swap01.at(2 * m + i, i) = 1;
    }
    mats.push_back(std::move(swap01));
  }
  if (t >= 3) {
    Mat cyc = Mat::zero(d);
    for (std::uint32_t c = 0; c < t; ++c) {
      std::uint32_t nc = (c + 1) % t;
      for (std::uint32_t i = 0; i < 2 * m; ++i) cyc.at(c * 2 * m + i, nc * 2 * m + i) = 1;
    }
    mats.push_back(std::move(cyc));
  }

  std::vector<Perm> image_gens;
  for (const Mat& g : mats) {
    if (!preserves_form(F, g, symplectic_form(F, d)))
      throw Error("wreath embedding generator breaks the form");
    image_gens.push_back(matrix_to_perm(F, g));
  }

  PermGroup::Options opts;
  opts.parent = share(ambient.group);
  PermGroup image(ambient.group.degree(), std::move(image_gens), std::move(opts));
  Integer want = int_pow(symplectic_order(m, Integer(q)), t) * factorial(t);
  if (image.order() != want) throw Error("wreath embedding order check failed");

  // Abstract wreath with matching generator order.
  BuiltGroup wreath = realize(GroupSpec::wreath(GroupSpec::sp(m, q), t), caps);
  std::size_t blk = (std::size_t)1;
  for (std::uint32_t i = 0; i < 2 * m; ++i) blk *= q;
  blk -= 1;
  std::size_t wdeg = wreath.group.degree();
  std::vector<Perm> target_gens;
  {
    BuiltGroup base = vector_action(symplectic_group(m, q), caps);
    for (const Perm& g : base.group.generators())
      target_gens.push_back(shift_to_block(g, 0, blk, wdeg));
    if (t >= 2) target_gens.push_back(block_perm(Perm::from_cycles(t, {{0, 1}}), t, blk));
    if (t >= 3) {
      std::vector<Point> img(t);
      for (Point i = 0; i < t; ++i) img[i] = static_cast<Point>((i + 1) % t);
      target_gens.push_back(block_perm(Perm(img), t, blk));
    }
  }
  PermGroup target_check(wdeg, target_gens);
  if (!target_check.same_group_as(wreath.group))
    throw Error("reduced wreath generators disagree with the natural wreath");

  Epimorphism iso = Epimorphism::generator_map(
      image, wdeg, target_gens, PermGroup::trivial(image.degree()));

  WreathEmbedding out{std::move(image), ambient.group, std::move(wreath), std::move(iso),
                      Integer(0), false};
  out.index = out.ambient.order() / out.image.order();
  out.index_odd = is_odd(out.index);
  return out;
}

PermGroup psl2_projective(std::uint32_t q) {
  PrimeField F(q);
  // Points: x in F_q at index x, infinity = [1:0] at index q.
  std::size_t degree = q + 1;
  auto act = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    std::vector<Point> img(degree);
    auto image_of = [&](std::uint32_t vx, std::uint32_t vy) {
      std::uint32_t wx = F.add(F.mul(vx, a), F.mul(vy, c));
      std::uint32_t wy = F.add(F.mul(vx, b), F.mul(vy, d));
      if (wy == 0) return static_cast<Point>(q);
      return static_cast<Point>(F.mul(wx, F.inv(wy)));
    };
    for (std::uint32_t x = 0; x < q; ++x) img[x] = image_of(x, 1);
    img[q] = image_of(1, 0);
    return Perm(std::move(img));
  };
  PermGroup g(degree, {act(1, 1, 0, 1), act(0, 1, F.neg(1), 0)});
  Integer want = Integer(q) * (Integer(q) * q - 1);
  if (q % 2 == 1) want /= 2;
  check_order(g, want, "PSL2 projective action");
  return g;
}

PermGroup gl3_2_vector_action() {
  PrimeField F(2);
  Mat A = Mat::identity(3);
  A.at(1, 0) = 1;  // transvection
  Mat C = Mat::zero(3);
  C.at(0, 1) = 1;
  C.at(1, 2) = 1;
  C.at(2, 0) = 1;
  C.at(2, 1) = 1;  // companion of x^3 + x + 1 (Singer element of order 7)
  PermGroup g(7, {matrix_to_perm(F, A), matrix_to_perm(F, C)});
  check_order(g, 168, "GL3(2)");
  return g;
}

PermGroup gl3_2_hyperplane_pointwise_stabilizer() {
  PrimeField F(2);
  // Fix e1, e2 pointwise; e3 -> e3 + a e1 + b e2.
  std::vector<Perm> gens;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (!a && !b) continue;
      Mat M = Mat::identity(3);
      M.at(2, 0) = a;
      M.at(2, 1) = b;
      gens.push_back(matrix_to_perm(F, M));
    }
  PermGroup g(7, gens);
  check_order(g, 4, "hyperplane pointwise stabilizer");
  return g;
}

BuiltGroup affine_frobenius_168() {
  // Points: F_2^3 little-endian in [0,8). Multiplication by t and squaring
  // in F_8 = F_2[t]/(t^3+t+1) are F_2-linear; translation by e_1 is x^=1.
  auto mul_t = [](Point v) -> Point {
    unsigned b0 = v & 1, b1 = (v >> 1) & 1, b2 = (v >> 2) & 1;
    unsigned n0 = b2, n1 = b0 ^ b2, n2 = b1;
    return static_cast<Point>(n0 | (n1 << 1) | (n2 << 2));
  };
  auto square = [](Point v) -> Point {
    unsigned b0 = v & 1, b1 = (v >> 1) & 1, b2 = (v >> 2) & 1;
    unsigned n0 = b0, n1 = b2, n2 = b1 ^ b2;
    return static_cast<Point>(n0 | (n1 << 1) | (n2 << 2));
  };
  std::vector<Point> timg(8), simg(8), xorimg(8);
  for (Point v = 0; v < 8; ++v) {
    timg[v] = mul_t(v);
    simg[v] = square(v);
    xorimg[v] = v ^ 1;
  }
  Perm sigma(timg), mu(simg), trans(xorimg);
  BuiltGroup out;
  out.group = PermGroup(8, {trans, sigma, mu});
  check_order(out.group, 168, "affine frobenius group");
  PermGroup::Options opts;
  opts.parent = share(out.group);
  opts.trust_parent_membership = true;
  out.handles.emplace("o2", normal_closure(out.group, {trans}));
  out.handles.emplace("frobenius", PermGroup(8, {sigma, mu}, opts));
  return out;
}

}  // namespace pronorm
