#include <boson/diagrams.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace boson {

std::vector<SetPartition> all_set_partitions(unsigned n) {
    std::vector<SetPartition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<unsigned> rgs(n, 0);
    while (true) {
        unsigned nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        SetPartition p(nblocks);
        for (unsigned i = 0; i < n; ++i) p[rgs[i]].push_back(i + 1);
        out.push_back(std::move(p));

        // advance
        int i = static_cast<int>(n) - 1;
        for (; i > 0; --i) {
            unsigned maxprev = 0;
            for (int j = 0; j < i; ++j) maxprev = std::max(maxprev, rgs[j]);
            if (rgs[i] <= maxprev) break;
        }
        if (i == 0) return out;
        ++rgs[i];
        for (unsigned j = i + 1; j < n; ++j) rgs[j] = 0;
    }
}

unsigned enumeration_cap() {
    if (const char* env = std::getenv("BOSON_ENUM_CAP")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return kDefaultEnumerationCap;
}

void enumerate(unsigned n, const std::function<void(const LineDiagram&)>& visit) {
    if (n > enumeration_cap()) throw std::invalid_argument("enumerate: n exceeds enumeration cap");
    auto partitions = all_set_partitions(n);
    LineDiagram d;
    d.n = n;
    for (const auto& origins : partitions) {
        d.origins = origins;
        for (const auto& vertices : partitions) {
            d.vertices = vertices;
            visit(d);
        }
    }
}

Rational diagram_weight(const LineDiagram& d, const ModelSpec& model) {
    Rational w = 1;
    for (const auto& block : d.origins) {
        if (block.size() > model.L.size())
            throw std::invalid_argument("diagram_weight: origin block exceeds model truncation");
        w *= model.L[block.size() - 1];
        if (w == 0) return w;
    }
    for (const auto& block : d.vertices) {
        if (block.size() > model.V.size())
            throw std::invalid_argument("diagram_weight: vertex block exceeds model truncation");
        w *= model.V[block.size() - 1];
        if (w == 0) return w;
    }
    return w;
}

Rational weighted_total(unsigned n, const ModelSpec& model) {
    Rational total = 0;
    enumerate(n, [&](const LineDiagram& d) { total += diagram_weight(d, model); });
    return total;
}

std::vector<std::array<unsigned, 3>> diagram_signature(const LineDiagram& d) {
    std::vector<std::array<unsigned, 3>> sig;
    for (const auto& ob : d.origins) {
        for (const auto& vb : d.vertices) {
            unsigned shared = 0;
            for (unsigned x : ob)
                if (std::binary_search(vb.begin(), vb.end(), x)) ++shared;
            if (shared > 0)
                sig.push_back({static_cast<unsigned>(ob.size()),
                               static_cast<unsigned>(vb.size()), shared});
        }
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

std::vector<DiagramClass> diagram_classes(unsigned n, const ModelSpec& model) {
    std::map<std::vector<std::array<unsigned, 3>>, DiagramClass> by_sig;
    enumerate(n, [&](const LineDiagram& d) {
        auto sig = diagram_signature(d);
        auto [it, inserted] = by_sig.try_emplace(sig);
        if (inserted) {
            it->second.signature = sig;
            it->second.weight = diagram_weight(d, model);
        }
        ++it->second.multiplicity;
    });
    std::vector<DiagramClass> out;
    out.reserve(by_sig.size());
    for (auto& [sig, cls] : by_sig) out.push_back(std::move(cls));
    return out;
}

}  // namespace boson
