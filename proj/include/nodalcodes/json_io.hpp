#pragma once

#include <string>

#include "nodalcodes/classify.hpp"
#include "nodalcodes/covers.hpp"
#include "nodalcodes/gf2code.hpp"
#include "nodalcodes/lattice.hpp"

namespace nodal {

// Exact rationals serialize as an integer when integral, else as "p/q".
Json rational_to_json(const Rational& r);

Json weight_enumerator_to_json(const WeightEnumerator& we);
// {length, dim, generators: [bitstrings], weight_enumerator}
Json code_to_json(const BinaryCode& code);
BinaryCode code_from_json(const Json& j);
Json permutation_to_json(const CoordinatePermutation& p);

// {rank, doubled_gram: [[...]], scaling}
Json lattice_to_json(const GramLattice& lattice);
GramLattice lattice_from_json(const Json& j);
// {root_count, components: ["D6"], full_rank, ...}
Json root_report_to_json(const RootSystemReport& report);

Json invariants_to_json(const SurfaceInvariants& s);
SurfaceInvariants invariants_from_json(const Json& j);

Json derivation_to_json(const Derivation& derivation);
Json involution_data_to_json(const InvolutionData& d);
Json involution_case_to_json(const InvolutionCase& c);
Json fiber_configuration_to_json(const FiberConfiguration& c);

}  // namespace nodal
