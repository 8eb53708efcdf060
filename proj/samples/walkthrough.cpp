// Walks one problem file through the pipeline and prints each stage:
//   walkthrough [problem.json]   (defaults to the A5 fixture)

#include <iostream>
#include <string>

#include "galois_equiv/galois_equiv.hpp"
#include "galois_equiv/io.hpp"

namespace ge = galois_equiv;

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : std::string(FIXTURE_DIR) + "/a5_3dim.json";
    try {
        const auto problem = ge::io::load_problem(path);
        const auto& rep = problem.rep;
        std::cout << "problem " << problem.name << ": dimension " << rep.dim() << " over a field of degree "
                  << problem.ext->degree() << "\n";

        const ge::Mat x = ge::compute_X(rep);
        std::cout << "\nX (first nonzero entry 1):\n" << x << "\n";
        const auto inv = ge::lambda_invariant(rep, std::nullopt);
        std::cout << "\nN(X) = " << inv.lambda_rep << " I, class representative " << inv.lambda_canonical
                  << (inv.is_trivial ? " (a norm)\n" : " (not a norm)\n");

        const auto cert = ge::equivariant_form(rep);
        if (cert.outcome == ge::EquivarianceCertificate::Outcome::Constructed) {
            std::cout << "\nrescale X by mu = " << *cert.witness << "\n\nY:\n" << *cert.Y << "\n\nrho':\n";
            for (std::size_t i = 0; i < rep.group().generator_count(); ++i)
                std::cout << rep.group().gen_names()[i] << " ->\n" << cert.rho_prime->images()[i] << "\n";
        } else {
            std::cout << "\n" << cert.note << "\n";
        }

        const auto schur = ge::schur_index(rep);
        std::cout << "\ninduced representation: End has dimension " << ge::endomorphism_dim(rep)
                  << ", Schur index " << schur.index;
        if (schur.division_algebra)
            std::cout << ", division algebra (" << schur.division_algebra->first << ", " << schur.division_algebra->second << ")";
        std::cout << "\n";
    } catch (const ge::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
