// A short walk through the three models of T and the membership tests.

#include "thompson/thompson.hpp"

#include <iostream>

int main() {
    using namespace thompson;

    NormalWord w = parse_word("babab");
    TreePairDiagram d = word_to_diagram(w);
    std::cout << "word " << w.str() << " has diagram " << d.str() << "\n";

    PLMap f = plmap_from_diagram(d);
    std::cout << "as a PL circle map: " << f.str() << "\n";

    PLMap g = inn_question(ppmap_from_word(w));
    std::cout << "conjugating the projective map by ? gives the same map: " << (f == g ? "yes" : "no") << "\n";

    SeqS s = seq_from_plmap(f);
    std::cout << "slope sequence " << seq_str(s) << " is " << (is_k_good(s) ? "good" : "not good") << "\n";

    const TreePairDiagram& B = generators().B;
    std::cout << "generator B = " << B.str() << " lies in PSL2(Z): " << (is_member(B) ? "yes" : "no") << "\n";

    return f == g && is_member(d) && !is_member(B) ? 0 : 1;
}
