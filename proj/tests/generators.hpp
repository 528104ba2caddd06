#pragma once

// Random colour diagrams for property tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "birdtrack/tensor.hpp"

namespace birdtrack::gen {

struct DiagramSpec {
    int atoms = 4;
    int max_quark_ends = 2;  ///< per orientation
    int max_gluon_ends = 2;
    bool with_fd = true;
    bool with_bars = true;
};

/// A random product of atoms glued at random; unpaired slots become ports.
inline TensorExpr random_diagram(std::mt19937& rng, const DiagramSpec& spec) {
    std::vector<AtomKind> kinds{AtomKind::Gen, AtomKind::Gen, AtomKind::Delta, AtomKind::GluonDelta};
    if (spec.with_fd) {
        kinds.push_back(AtomKind::F);
        kinds.push_back(AtomKind::D);
    }
    if (spec.with_bars) {
        kinds.push_back(AtomKind::Sym);
        kinds.push_back(AtomKind::Asym);
    }
    std::vector<Atom> atoms;
    for (int i = 0; i < spec.atoms; ++i) {
        const AtomKind k = kinds[rng() % kinds.size()];
        std::size_t slots = 3;
        if (k == AtomKind::Delta || k == AtomKind::GluonDelta) slots = 2;
        if (k == AtomKind::Sym || k == AtomKind::Asym) slots = 4;
        atoms.push_back({k, std::vector<int>(slots, -1)});
    }
    using Slot = std::pair<std::size_t, std::size_t>;
    std::vector<Slot> up, low, glu;
    for (std::size_t a = 0; a < atoms.size(); ++a)
        for (std::size_t s = 0; s < atoms[a].idx.size(); ++s) {
            switch (slot_kind(atoms[a], s)) {
            case SlotKind::Upper: up.emplace_back(a, s); break;
            case SlotKind::Lower: low.emplace_back(a, s); break;
            case SlotKind::Gluon: glu.emplace_back(a, s); break;
            }
        }
    std::shuffle(up.begin(), up.end(), rng);
    std::shuffle(low.begin(), low.end(), rng);
    std::shuffle(glu.begin(), glu.end(), rng);
    // Leave a few ends open, glue the rest.
    int label = 1000;
    std::vector<std::pair<Slot, PortKind>> open;
    const std::size_t qpairs = std::min(up.size(), low.size());
    std::size_t keep_q = qpairs == 0 ? 0 : rng() % (std::min<std::size_t>(qpairs, static_cast<std::size_t>(spec.max_quark_ends)) + 1);
    for (std::size_t i = 0; i < qpairs; ++i) {
        if (i < keep_q) {
            open.push_back({up[i], PortKind::QuarkOut});
            open.push_back({low[i], PortKind::QuarkIn});
        } else {
            atoms[up[i].first].idx[up[i].second] = label;
            atoms[low[i].first].idx[low[i].second] = label++;
        }
    }
    for (std::size_t i = qpairs; i < up.size(); ++i) open.push_back({up[i], PortKind::QuarkOut});
    for (std::size_t i = qpairs; i < low.size(); ++i) open.push_back({low[i], PortKind::QuarkIn});
    std::size_t g = 0;
    const std::size_t odd = glu.size() % 2;
    std::size_t keep_g = odd + 2 * (rng() % (static_cast<std::size_t>(spec.max_gluon_ends) / 2 + 1));
    keep_g = std::min(keep_g, glu.size());
    for (; g < keep_g; ++g) open.push_back({glu[g], PortKind::Gluon});
    for (; g + 1 < glu.size(); g += 2) {
        atoms[glu[g].first].idx[glu[g].second] = label;
        atoms[glu[g + 1].first].idx[glu[g + 1].second] = label++;
    }
    std::vector<Port> ports;
    for (std::size_t p = 0; p < open.size(); ++p) {
        atoms[open[p].first.first].idx[open[p].first.second] = static_cast<int>(p);
        ports.push_back({"p" + std::to_string(p), open[p].second});
    }
    TensorExpr e{ExternalSignature(ports, static_cast<int>(ports.size()))};
    e.add_term(atoms, RationalFunction(1));
    return e;
}

}  // namespace birdtrack::gen
