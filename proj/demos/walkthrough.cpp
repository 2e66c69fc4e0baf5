// Computes H^1 of the polynomial module for (p, n) = (3, 2) and (5, 2) and
// prints computed structure next to the closed-form predictions.

#include <subrao/harness.hpp>

#include <iostream>

using namespace subrao;
using harness::to_reference;

namespace {

std::string blocks(const predict::Blocks& b) { return JordanProfile(b).to_string(); }

void show(std::uint32_t p, std::size_t n) {
    auto P = std::make_shared<const PolyModule<RationalFunction>>(exact_poly_module(p, n));
    const auto h = build_h1(P);
    std::cout << "p=" << p << " n=" << n << "\n"
              << "  dim Der = " << h.der->dim() << ", dim H^1 = " << h.dim() << "\n"
              << "  H^1 as K[A]-module: " << jordan_profile(h.sigma_A, p).to_string()
              << "   predicted " << blocks(predict::predict_KA(p, n).blocks) << "\n"
              << "  Der as K[A]-module: " << jordan_profile(h.der_A, p).to_string()
              << "   predicted " << blocks(predict::predict_der(p, n).blocks) << "\n";

    const RankProfile rp = rank_profile(h.sigma_A, h.sigma_B, p);
    const auto kg = predict::predict_KG(p, n);
    std::cout << "  K[G] free summands: " << rp.at(p - 1, p - 1) << "   predicted "
              << predict::predicted_free_rank(p, n) << ", decomposition "
              << (match_decomposition(rp, h.dim(), to_reference(kg.summands), p) ? "matches" : "differs") << "\n"
              << "  invariants: A " << invariants_dimension(h, Subgroup::A) << ", G "
              << invariants_dimension(h, Subgroup::G) << "\n"
              << "  stalk: " << stalk_profile(p, n).to_string() << "\n";
}

}  // namespace

int main() {
    show(3, 2);
    show(5, 2);
}
