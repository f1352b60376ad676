// Checks Sylvester's identity for a 3x3 q-Cartier-Foata matrix bordered at
// n = 1, then prints C and the truncated det(I - C).

#include <iostream>

#include <ncsylv/ncsylv.hpp>

using namespace ncsylv;

int main() {
    auto inst = SylvesterInstance::make(Regime::q_cf, 3, 1, 3);

    auto r = verify_sylvester(inst);
    std::cout << to_text(r);

    auto red = make_reducer(inst.sys);
    auto c = build_C(inst, CForm::path, red);
    for (const auto& [letter, e] : c.embedding)
        std::cout << "c[" << letter.row() << "," << letter.col() << "] = " << e.to_string() << "\n";
    std::cout << "det(I - C) = " << det_I_minus_C(c, inst.scheme(), inst.order, red).to_string() << "\n";
    return r.pass ? 0 : 1;
}
