#include "pronorm/epimorphism.hpp"

#include <algorithm>

#include "pronorm/cosets.hpp"
#include "pronorm/errors.hpp"
#include "pronorm/rng.hpp"
#include "pronorm/subgroup_ops.hpp"

namespace pronorm {

bool is_normal_in(const PermGroup& G, const PermGroup& N) {
  if (!G.contains_group(N)) return false;
  for (const Perm& n : N.generators())
    for (const Perm& g : G.generators())
      if (!N.contains(n.conjugated_by(g))) return false;
  return true;
}

Epimorphism::Epimorphism(PermGroup source, PermGroup target, PermGroup kernel,
                         std::vector<std::pair<Perm, Perm>> gen_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      kernel_(std::move(kernel)),
      gen_images_(std::move(gen_images)) {
  std::vector<Elt> fwd, bwd;
  fwd.reserve(gen_images_.size());
  bwd.reserve(gen_images_.size());
  for (const auto& [g, img] : gen_images_) {
    fwd.push_back(Elt{g, img});
    bwd.push_back(Elt{img, g});
  }
  forward_ = std::make_shared<const StabChain>(
      StabChain::build(source_.degree(), fwd));
  if (forward_->shadow_violation())
    throw PreconditionError("generator images do not define a homomorphism");
  backward_ = std::make_shared<const StabChain>(
      StabChain::build(target_.degree(), bwd));
  if (forward_->order() != source_.order() || backward_->order() != target_.order())
    throw Error("epimorphism chain orders disagree with source/target");
  if (target_.order() * kernel_.order() != source_.order())
    throw Error("kernel order does not account for the index");
}

Perm Epimorphism::apply(const Perm& g) const {
  auto elt = forward_->factorize(g);
  if (!elt) throw NotASubgroup("applying epimorphism to a non-member");
  return elt->shadow;
}

Perm Epimorphism::lift(const Perm& k) const {
  auto elt = backward_->factorize(k);
  if (!elt) throw NotASubgroup("lifting an element outside the target");
  return elt->shadow;
}

PermGroup Epimorphism::image(const PermGroup& H) const {
  std::vector<Perm> imgs;
  imgs.reserve(H.generators().size());
  for (const Perm& h : H.generators()) imgs.push_back(apply(h));
  PermGroup::Options opts;
  opts.parent = share(target_);
  opts.trust_parent_membership = true;
  return PermGroup(target_.degree(), std::move(imgs), std::move(opts));
}

PermGroup Epimorphism::preimage(const PermGroup& Kbar) const {
  std::vector<Perm> gens = kernel_.generators();
  for (const Perm& k : Kbar.generators()) gens.push_back(lift(k));
  PermGroup::Options opts;
  opts.parent = share(source_);
  opts.trust_parent_membership = true;
  PermGroup pre(source_.degree(), std::move(gens), std::move(opts));
  if (pre.order() != Kbar.order() * kernel_.order())
    throw Error("preimage order mismatch");
  return pre;
}

Epimorphism Epimorphism::quotient_map(const PermGroup& G, const PermGroup& N,
                                      std::uint64_t coset_cap) {
  if (!is_normal_in(G, N)) throw PreconditionError("subgroup is not normal");
  CosetTable table(G, N, coset_cap);
  std::size_t index = table.size();
  std::vector<std::pair<Perm, Perm>> gen_images;
  std::vector<Perm> target_gens;
  for (const Perm& g : G.generators()) {
    std::vector<Point> img(index);
    for (std::size_t i = 0; i < index; ++i)
      img[i] = static_cast<Point>(table.index_of(table.rep(i) * g));
    Perm q(std::move(img));
    gen_images.emplace_back(g, q);
    target_gens.push_back(std::move(q));
  }
  PermGroup target(index == 0 ? 1 : index, std::move(target_gens));
  if (target.order() * N.order() != G.order())
    throw Error("coset action is not faithful for G/N");
  return Epimorphism(G, std::move(target), N, std::move(gen_images));
}

Epimorphism quotient(const PermGroup& G, const PermGroup& N, std::uint64_t coset_cap) {
  return Epimorphism::quotient_map(G, N, coset_cap);
}

Epimorphism Epimorphism::domain_restriction(const PermGroup& G, Point lo,
                                            std::size_t width, PermGroup kernel) {
  if (lo + width > G.degree()) throw PreconditionError("window outside the domain");
  std::vector<std::pair<Perm, Perm>> gen_images;
  std::vector<Perm> target_gens;
  for (const Perm& g : G.generators()) {
    std::vector<Point> img(width);
    for (std::size_t i = 0; i < width; ++i) {
      Point y = g[lo + static_cast<Point>(i)];
      if (y < lo || y >= lo + width)
        throw PreconditionError("generator does not preserve the factor window");
      img[i] = y - lo;
    }
    Perm q(std::move(img));
    gen_images.emplace_back(g, q);
    target_gens.push_back(std::move(q));
  }
  PermGroup target(width, std::move(target_gens));
  return Epimorphism(G, std::move(target), std::move(kernel), std::move(gen_images));
}

Epimorphism Epimorphism::generator_map(const PermGroup& G, std::size_t target_degree,
                                       const std::vector<Perm>& images,
                                       std::optional<PermGroup> kernel,
                                       std::uint64_t seed) {
  if (images.size() != G.generators().size())
    throw PreconditionError("one image per generator required");
  std::vector<std::pair<Perm, Perm>> gen_images;
  std::vector<Perm> target_gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree() != target_degree)
      throw DegreeMismatch("image degree mismatch");
    gen_images.emplace_back(G.generators()[i], images[i]);
    target_gens.push_back(images[i]);
  }
  PermGroup target(target_degree, std::move(target_gens));

  PermGroup ker = PermGroup::trivial(G.degree());
  if (kernel) {
    ker = std::move(*kernel);
  } else if (target.order() != G.order()) {
    if (G.order() % target.order() != 0)
      throw PreconditionError("target order does not divide source order");
    Integer want = G.order() / target.order();
    // Kernel elements arise as r * lift(phi(r))^-1 for random r; a uniform
    // r yields a uniform kernel element, and the normal closure of the
    // collected elements reaches the full kernel. The order account makes
    // the result exact.
    std::vector<Elt> fwd, bwd;
    for (const auto& [g, img] : gen_images) {
      fwd.push_back(Elt{g, img});
      bwd.push_back(Elt{img, g});
    }
    StabChain fchain = StabChain::build(G.degree(), fwd);
    if (fchain.shadow_violation())
      throw PreconditionError("generator images do not define a homomorphism");
    StabChain bchain = StabChain::build(target_degree, bwd);
    Rng rng(seed);
    std::vector<Perm> seeds;
    for (int tries = 0; tries < 4096 && ker.order() != want; ++tries) {
      Elt r = fchain.random_element(rng);
      auto lifted = bchain.factorize(r.shadow);
      if (!lifted) throw Error("image element failed to lift");
      Perm k = r.p * lifted->shadow.inverse();
      if (k.is_identity() || ker.contains(k)) continue;
      seeds.push_back(std::move(k));
      ker = normal_closure(G, seeds);
    }
    if (ker.order() != want) throw Error("kernel generation did not converge");
  }
  return Epimorphism(G, std::move(target), std::move(ker), std::move(gen_images));
}

}  // namespace pronorm
