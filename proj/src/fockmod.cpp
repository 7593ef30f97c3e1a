#include "fbzhu/fockmod.hpp"

namespace fbz {

ModVec zero_mode(const FockVec& u, const ModVec& w) {
    auto& T = MonoTable::instance();
    ModVec out;
    // split u by weight; o is linear with o(u) = u_{wt u - 1}
    std::map<int, FockVec> by_weight;
    for (auto& [mid, c] : u.terms()) by_weight[T.weight(mid)].add(mid, c);
    for (auto& [wt, part] : by_weight) out += mode_product_module(part, wt - 1, w);
    return out;
}

ModVec omega_vector(int which) {
    ModVec vl = ModVec::vacuum();
    switch (which) {
        case 0: return vl;
        case 1: return apply_mode(-1, vl);
        case 2: return apply_mode(-1, apply_mode(-1, vl));
        case 3: return apply_mode(-2, vl);
    }
    throw std::out_of_range("omega_vector");
}

std::string omega_vector_name(int which) {
    switch (which) {
        case 0: return "|λ>";
        case 1: return "a(-1)|λ>";
        case 2: return "a(-1)^2|λ>";
        case 3: return "a(-2)|λ>";
    }
    throw std::out_of_range("omega_vector_name");
}

std::optional<Witness> nonmembership_witness(const FockVec& v, int n) {
    (void)n;  // the window lies in Omega_n for every n >= 2; zero modes of O_n kill it
    for (int i = 0; i < 4; ++i) {
        ModVec img = zero_mode(v, omega_vector(i));
        if (!img.is_zero()) {
            Witness w;
            w.vector_index = i;
            w.image = img;
            w.text = "acts as " + print_module_element(img) + " on " + omega_vector_name(i);
            return w;
        }
    }
    return std::nullopt;
}

std::optional<Witness> nonmembership_witness(const GenPoly& p, int n) {
    return nonmembership_witness(eval_genpoly(p, std::max(n, 2)), n);
}

}  // namespace fbz
