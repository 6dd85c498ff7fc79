#include "qalg/groebner.hpp"

#include <map>

namespace qalg::detail {

namespace {

using Poly = std::vector<Rat>;  // constant coefficient first

void add_shifted(Poly& a, const Poly& b, size_t shift) {
    if (b.size() + shift > a.size()) a.resize(b.size() + shift, Rat(0));
    for (size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
}

// Drop duplicates and any generator another generator divides.
void minimalize(std::vector<Mono>& gens) {
    std::sort(gens.begin(), gens.end(), [](Mono a, Mono b) { return a.bits < b.bits; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Mono> out;
    for (size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (size_t b = 0; b < gens.size() && !redundant; ++b)
            if (b != a && gens[b].divides(gens[a])) redundant = true;
        if (!redundant) out.push_back(gens[a]);
    }
    gens = std::move(out);
}

using Memo = std::map<std::vector<uint64_t>, Poly>;

Poly numerator(std::vector<Mono> gens, Memo& memo) {
    minimalize(gens);
    if (!gens.empty() && gens[0].bits == 0) return {};  // unit ideal
    if (gens.empty()) return {Rat(1)};

    std::vector<uint64_t> key;
    for (const auto& g : gens) key.push_back(g.bits);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    // Pure powers of distinct variables form a complete intersection:
    // numerator = product of (1 - t^e).
    int pivot = -1, pivot_count = 0;
    bool all_pure = true;
    for (int v = 0; v < Mono::max_vars; ++v) {
        int count = 0, mixed = 0;
        for (const auto& g : gens) {
            if (g.exp(v) == 0) continue;
            ++count;
            if (g.exp(v) < g.total_deg()) ++mixed;
        }
        if (mixed > 0) all_pure = false;
        if (mixed > 0 && count > pivot_count) {
            pivot = v;
            pivot_count = count;
        }
    }
    Poly result;
    if (all_pure) {
        result = {Rat(1)};
        for (const auto& g : gens) {
            Poly next(result.size() + g.total_deg(), Rat(0));
            for (size_t k = 0; k < result.size(); ++k) {
                next[k] += result[k];
                next[k + g.total_deg()] -= result[k];
            }
            result = std::move(next);
        }
    } else {
        // N(I) = N(I + (x)) + t * N(I : x) on a variable x from a mixed
        // generator.
        std::vector<Mono> plus, colon;
        plus.push_back(Mono::var(pivot));
        for (const auto& g : gens) {
            if (g.exp(pivot) == 0) plus.push_back(g);
            Mono h = g;
            if (unsigned e = g.exp(pivot); e > 0) h.set_exp(pivot, e - 1);
            colon.push_back(h);
        }
        result = numerator(std::move(plus), memo);
        add_shifted(result, numerator(std::move(colon), memo), 1);
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

std::vector<Rat> hs_numerator(std::vector<Mono> gens) {
    Memo memo;
    return numerator(std::move(gens), memo);
}

}  // namespace qalg::detail
