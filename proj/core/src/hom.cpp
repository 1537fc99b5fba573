#include "mspec/hom.hpp"

#include "mspec/error.hpp"

namespace mspec {

Mask mask_image(const Homomorphism& h, Mask s) {
  Mask out = 0;
  for_each_bit(s, [&](int i) { out |= bit(h(i)); });
  return out;
}

HomReport check_homomorphism(const SpecStructure& src,
                             const SpecStructure& dst,
                             const Homomorphism& h) {
  const int n = src.size();
  if (h.map.size() != static_cast<std::size_t>(n))
    throw InputError(ErrorKind::Schema, "map must be total on the source");
  for (int v : h.map)
    if (v < 0 || v >= dst.size())
      throw InputError(ErrorKind::UnknownElement, "map value out of range");

  HomReport rep;
  for (int a = 0; a < n && !rep.join_violation; ++a)
    for (int b = 0; b < n; ++b)
      if (h(src.lattice.join(a, b)) != dst.lattice.join(h(a), h(b))) {
        rep.join_violation = {a, b};
        break;
      }
  src.rel.for_each([&](int a, Mask m) {
    if (!rep.rel_violation && !dst.rel.contains(h(a), mask_image(h, m)))
      rep.rel_violation = {a, m};
  });
  rep.ok = !rep.join_violation && !rep.rel_violation;

  rep.injective = true;
  for (int a = 0; a < n && rep.injective; ++a)
    for (int b = a + 1; b < n; ++b)
      if (h(a) == h(b)) {
        rep.injective = false;
        break;
      }
  for (int a = 0; a < n && !rep.order_reflect_violation; ++a)
    for (int b = 0; b < n; ++b)
      if (dst.lattice.leq(h(a), h(b)) && !src.lattice.leq(a, b)) {
        rep.order_reflect_violation = {a, b};
        break;
      }
  const Mask full = (Mask{1} << n) - 1;
  for (int a = 0; a < n && !rep.rel_reflect_violation; ++a)
    for (Mask m = 1; m <= full; ++m)
      if (dst.rel.contains(h(a), mask_image(h, m)) && !src.rel.contains(a, m)) {
        rep.rel_reflect_violation = {a, m};
        break;
      }
  rep.embedding = rep.ok && rep.injective && !rep.order_reflect_violation &&
                  !rep.rel_reflect_violation;
  return rep;
}

}  // namespace mspec
