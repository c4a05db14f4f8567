#pragma once

#include <map>

#include "cicalc/artin_rees.hpp"

namespace cicalc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentParams {
    int i_max = 9;
    int n_max = 8;
    int cutoff = 10;
    int burn_in_n = 2;
    int burn_in_i = 3;
    uint64_t seed = 0;
    int jobs = 1;

    bool operator==(const ExperimentParams&) const = default;
};

// A parsed instance description: ring, module, ideal, experiment parameters.
struct InstanceSpec {
    uint32_t p = 101;
    // either an explicit ring or a family shorthand
    std::vector<std::string> vars;
    std::vector<std::string> ring_relations;
    bool has_family = false;
    int family_d = 0, family_c = 0;
    std::vector<int> family_a;

    // module construction
    std::string module_kind;                 // free | residue-field | quotient-by |
                                             // cyclic | syzygy-k | presentation
    std::vector<std::string> module_args;    // polynomials or the syzygy index
    std::vector<int> module_degrees;         // for presentation
    std::vector<std::vector<std::string>> module_relations;  // columns, for presentation

    // ideal
    std::string ideal_kind;                  // maximal | parameter | m-parameter | generators
    std::vector<std::string> ideal_gens;

    ExperimentParams params;

    bool operator==(const InstanceSpec&) const = default;
};

InstanceSpec parse_instance(const std::string& text);
std::string emit_instance(const InstanceSpec& spec);

struct BuiltInstance {
    CIRingPtr ring;
    ModulePresentation module;
    IdealPtr ideal;
    std::vector<Poly> parameter_sequence;  // the degree-1 system used for "parameter"
};

BuiltInstance build_instance(const InstanceSpec& spec);

// shipped fixtures, name -> instance text
const std::map<std::string, std::string>& builtin_fixtures();

}  // namespace cicalc
