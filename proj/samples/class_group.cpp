// Class group of a discriminant and a cube for every pair of classes.
#include <cstdlib>
#include <iostream>

#include <cubecomp/cubecomp.hpp>

int main(int argc, char ** argv)
{
    using namespace cubecomp;
    BigInt D = argc > 1 ? BigInt(argv[1]) : BigInt(-23);
    ClassGroup G = class_group(D);
    std::cout << "h(" << D << ") = " << G.h() << "\n";
    for (std::size_t i = 0; i < G.h(); ++i) {
        for (std::size_t j = 0; j < G.h(); ++j) {
            Cube A = cube_from_pair(G.reps[i], G.reps[j]);
            std::cout << G.reps[i] << " " << G.reps[j] << " -> " << A << "  Q1 ~ " << reduced(oriented_form(qform(A, 1)))
                      << (triple_law_check(A) ? "  ok" : "  FAILED") << "\n";
        }
    }
    return EXIT_SUCCESS;
}
