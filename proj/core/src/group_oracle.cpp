#include "owf/group_oracle.hpp"

namespace owf {

std::shared_ptr<const GroupOracle> free_group_oracle() {
  static const auto oracle = std::make_shared<const FreeGroupOracle>();
  return oracle;
}

Word Homomorphism::image(Generator g) const {
  switch (g) {
    case Generator::a: return image_a;
    case Generator::a_inv: return image_a.inverse();
    case Generator::b: return image_b;
    case Generator::b_inv: return image_b.inverse();
  }
  return {};
}

Word Homomorphism::apply(const Word& w) const {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out = out * image(w[i]);
  return out;
}

Word Homomorphism::apply(const GroupOracle& group, const Word& w) const {
  Word out = group.identity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Generator g = w[i];
    const Word base = (g == Generator::a || g == Generator::a_inv) ? image_a : image_b;
    const bool inverted = (g == Generator::a_inv || g == Generator::b_inv);
    out = group.multiply(out, inverted ? group.invert(base) : base);
  }
  return out;
}

}  // namespace owf
