#include "og10lat/catalog.hpp"

#include <cassert>
#include <stdexcept>

namespace og10lat::catalog {

IntegralLattice make_u(const Int& n) {
    if (n == 0)
        throw precondition_error("U(n) requires n != 0");
    IntMatrix g(2, 2);
    g(0, 1) = n;
    g(1, 0) = n;
    std::string label = (n == 1) ? "U" : "U(" + n.get_str() + ")";
    return IntegralLattice(std::move(g), std::move(label));
}

IntegralLattice make_a2() {
    return IntegralLattice(IntMatrix{{2, -1}, {-1, 2}}, "A2");
}

IntegralLattice make_e8_neg() {
    // Dynkin diagram E8, Bourbaki node order (node 2 is the branch),
    // negated Cartan matrix
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        g(i, i) = -2;
    const std::pair<int, int> edges[] = {{0, 2}, {1, 3}, {2, 3}, {3, 4},
                                         {4, 5}, {5, 6}, {6, 7}};
    for (auto [a, b] : edges) {
        g(a, b) = 1;
        g(b, a) = 1;
    }
    return IntegralLattice(std::move(g), "E8(-1)");
}

IntegralLattice make_span(const Int& n) {
    IntMatrix g(1, 1);
    g(0, 0) = n;
    return IntegralLattice(std::move(g), "<" + n.get_str() + ">");
}

namespace {

IntegralLattice mukai_gram() {
    IntegralLattice l = make_u();
    for (int i = 0; i < 3; ++i)
        l = direct_sum(l, make_u());
    l = direct_sum(l, make_e8_neg());
    l = direct_sum(l, make_e8_neg());
    return l;
}

} // namespace

Sublattice MarkedMukaiLattice::marked_a2() const {
    return Sublattice(lattice, IntMatrix::from_rows({lambda1, lambda2}, lattice.rank()));
}

MarkedMukaiLattice mukai_kuznetsov() {
    IntegralLattice l = mukai_gram();
    l.set_label("mukai-kuznetsov");
    RowVec lambda1(24), lambda2(24);
    lambda1[0] = 1; // e1 + f1
    lambda1[1] = 1;
    lambda2[0] = -1; // e2 + f2 - e1
    lambda2[2] = 1;
    lambda2[3] = 1;
    MarkedMukaiLattice m{std::move(l), std::move(lambda1), std::move(lambda2)};
    assert(m.lattice.pairing(m.lambda1, m.lambda1) == 2);
    assert(m.lattice.pairing(m.lambda2, m.lambda2) == 2);
    assert(m.lattice.pairing(m.lambda1, m.lambda2) == -1);
    assert(saturation(m.marked_a2()).index == 1);
    return m;
}

RowVec K3MukaiLattice::vector_rs(const Int& r, const Int& s) const {
    RowVec v(lattice.rank());
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = r * h0[j] + s * h4[j];
    return v;
}

K3MukaiLattice mukai_k3() {
    IntegralLattice l = mukai_gram();
    l.set_label("mukai-k3");
    // (h0, h4) = -1 matches the sign of the Mukai pairing on the
    // rank/degree components
    RowVec h0(24), h4(24);
    h0[0] = 1;
    h4[1] = -1;
    K3MukaiLattice m{std::move(l), std::move(h0), std::move(h4)};
    assert(m.lattice.pairing(m.h0, m.h4) == -1);
    assert(m.lattice.pairing(m.h0, m.h0) == 0);
    assert(m.lattice.pairing(m.h4, m.h4) == 0);
    return m;
}

std::optional<IntegralLattice> by_name(const std::string& name) {
    if (name == "U")
        return make_u();
    if (name == "A2")
        return make_a2();
    if (name == "E8-")
        return make_e8_neg();
    if (name == "mukai-kuznetsov")
        return mukai_kuznetsov().lattice;
    if (name == "mukai-k3")
        return mukai_k3().lattice;
    auto scaled = [&](const std::string& prefix,
                      const std::string& suffix) -> std::optional<Int> {
        if (name.size() <= prefix.size() + suffix.size())
            return std::nullopt;
        if (name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        if (name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
            return std::nullopt;
        std::string inner = name.substr(prefix.size(),
                                        name.size() - prefix.size() - suffix.size());
        try {
            return Int(inner);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    };
    if (auto n = scaled("U(", ")"))
        return make_u(*n);
    if (auto n = scaled("<", ">"))
        return make_span(*n);
    return std::nullopt;
}

} // namespace og10lat::catalog
