#include "gsdet/multipartition.hpp"

#include <stdexcept>

namespace gsdet {

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    for (const Partition& p : components_) n_ += p.n();
}

Composition Multipartition::underlying() const {
    std::vector<unsigned> sizes;
    sizes.reserve(components_.size());
    for (const Partition& p : components_) sizes.push_back(p.n());
    return Composition(std::move(sizes));
}

Multipartition apply_permutation(const Multipartition& lambda, std::span<const unsigned> image) {
    const unsigned r = lambda.r();
    if (image.size() != r)
        throw std::invalid_argument("permutation size must match component count");
    std::vector<Partition> moved(r);
    std::vector<bool> hit(r, false);
    for (unsigned i = 0; i < r; ++i) {
        unsigned j = image[i];
        if (j >= r || hit[j])
            throw std::invalid_argument("image is not a permutation");
        hit[j] = true;
        moved[j] = lambda[i];
    }
    return Multipartition(std::move(moved));
}

Multipartition apply_conjugation(const Multipartition& lambda) {
    std::vector<Partition> conj;
    conj.reserve(lambda.r());
    for (const Partition& p : lambda.components()) conj.push_back(conjugate(p));
    return Multipartition(std::move(conj));
}

} // namespace gsdet
