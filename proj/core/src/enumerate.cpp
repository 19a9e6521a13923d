#include "gsdet/enumerate.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "gsdet/multinomial.hpp"
#include "gsdet/partition.hpp"

namespace gsdet {

ResourceCapError::ResourceCapError(BigInt est, std::uint64_t c)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "enumeration size " << est << " exceeds cap " << c;
          return os.str();
      }()),
      estimate(std::move(est)),
      cap(c) {}

void DetAccumulator::merge(const DetAccumulator& o) {
    for (std::size_t i = 0; i < y_even.size(); ++i) {
        y_even[i] += o.y_even[i];
        y_odd[i] += o.y_odd[i];
    }
}

std::uint64_t DetAccumulator::total() const {
    std::uint64_t t = 0;
    for (std::uint64_t v : y_even) t += v;
    for (std::uint64_t v : y_odd) t += v;
    return t;
}

const std::vector<PartitionClass>& partition_classes(unsigned m, unsigned r) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::vector<PartitionClass>> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(m, r);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<PartitionClass> classes;
        for (const Partition& lambda : partitions_of(m)) {
            const BigInt f = dim_sym(lambda);
            const BigInt g = chirality(lambda);
            classes.push_back(PartitionClass{residue(f, r), static_cast<std::uint8_t>(residue(f, 2)),
                                             static_cast<std::uint8_t>(residue(g, 2))});
        }
        it = cache.emplace(key, std::move(classes)).first;
    }
    return it->second;
}

BigInt multipartitions_on_ordering(const Composition& a) {
    BigInt prod = 1;
    for (unsigned e : a.entries()) prod *= partition_count(e);
    return prod;
}

void accumulate_dets(const Composition& ordered, unsigned r, DetAccumulator& out) {
    const unsigned slots = ordered.r();
    const long long n = ordered.n();

    // Composition-level data: x = S(a) * prod f mod r, and the two parity
    // ingredients of y.
    const unsigned s_mod_r = residue(x_sum(ordered), r);
    const unsigned orbit_parity = residue(orbit_count(ordered), 2);
    std::vector<std::uint8_t> dec2_parity(slots);
    for (unsigned k = 0; k < slots; ++k) {
        std::vector<long long> b(ordered.entries().begin(), ordered.entries().end());
        b[k] -= 2;
        dec2_parity[k] = static_cast<std::uint8_t>(residue(multinomial_exact(n - 2, b), 2));
    }

    std::vector<const std::vector<PartitionClass>*> lists(slots);
    for (unsigned k = 0; k < slots; ++k) lists[k] = &partition_classes(ordered[k], r);

    // Odometer over one component partition per slot.
    std::vector<std::size_t> idx(slots, 0);
    for (;;) {
        unsigned fprod_r = 1 % r;
        unsigned even_dims = 0;
        unsigned lone_even_slot = 0;
        for (unsigned k = 0; k < slots; ++k) {
            const PartitionClass& c = (*lists[k])[idx[k]];
            fprod_r = (fprod_r * c.f_mod_r) % r;
            if (c.f_mod2 == 0) {
                ++even_dims;
                lone_even_slot = k;
            }
        }
        // T2 = sum_k g_k * fhat_k * C(n-2; .., a_k-2, ..) mod 2: fhat_k is
        // odd only when every other slot has odd dimension.
        unsigned t2 = 0;
        if (even_dims == 0) {
            for (unsigned k = 0; k < slots; ++k) {
                const PartitionClass& c = (*lists[k])[idx[k]];
                t2 ^= static_cast<unsigned>(c.g_mod2 & dec2_parity[k]);
            }
        } else if (even_dims == 1) {
            const PartitionClass& c = (*lists[lone_even_slot])[idx[lone_even_slot]];
            t2 = static_cast<unsigned>(c.g_mod2 & dec2_parity[lone_even_slot]);
        }
        const unsigned t1 = (even_dims == 0) ? orbit_parity : 0;
        const unsigned x = (s_mod_r * fprod_r) % r;
        const unsigned y = t1 ^ t2;
        (y == 0 ? out.y_even : out.y_odd)[x] += 1;

        // advance
        unsigned k = slots;
        while (k > 0) {
            --k;
            if (++idx[k] < lists[k]->size()) break;
            idx[k] = 0;
            if (k == 0) return;
        }
        if (slots == 0) return;
    }
}

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

DetAccumulator accumulate_over(const std::vector<Composition>& ordered, unsigned r,
                               unsigned workers) {
    DetAccumulator total(r);
    const unsigned k = std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(ordered.size(), 1));
    if (k <= 1) {
        for (const Composition& a : ordered) accumulate_dets(a, r, total);
        return total;
    }
    std::vector<DetAccumulator> partial(k, DetAccumulator(r));
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (unsigned w = 0; w < k; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < ordered.size(); i += k)
                accumulate_dets(ordered[i], r, partial[w]);
        });
    }
    for (std::thread& t : pool) t.join();
    for (const DetAccumulator& p : partial) total.merge(p);
    return total;
}

} // namespace gsdet
