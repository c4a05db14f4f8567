#include "cicalc/instance.hpp"

#include <sstream>

namespace cicalc {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            std::string t = trim(cur);
            if (!t.empty()) out.push_back(t);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
    return out;
}

int to_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + s +
                         "'");
    }
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
    InstanceSpec spec;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    bool saw_ring = false, saw_module = false, saw_ideal = false;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("line " + std::to_string(lineno) + ": malformed section header");
            section = line.substr(1, line.size() - 2);
            if (section != "ring" && section != "module" && section != "ideal" &&
                section != "params")
                throw ParseError("line " + std::to_string(lineno) + ": unknown section [" +
                                 section + "]");
            if (section == "ring") saw_ring = true;
            if (section == "module") saw_module = true;
            if (section == "ideal") saw_ideal = true;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ParseError("line " + std::to_string(lineno) + ": key outside any section");
        if (section == "ring") {
            if (key == "p") {
                spec.p = uint32_t(to_int(value, lineno));
            } else if (key == "vars") {
                spec.vars = split(value, ' ');
            } else if (key == "relations") {
                spec.ring_relations = split(value, ',');
            } else if (key == "family") {
                spec.has_family = true;
                for (const std::string& part : split(value, ' ')) {
                    size_t e = part.find('=');
                    if (e == std::string::npos)
                        throw ParseError("line " + std::to_string(lineno) +
                                         ": family needs d=, c=, a=");
                    std::string k = part.substr(0, e), v = part.substr(e + 1);
                    if (k == "d") spec.family_d = to_int(v, lineno);
                    else if (k == "c") spec.family_c = to_int(v, lineno);
                    else if (k == "a") {
                        for (const std::string& x : split(v, ','))
                            spec.family_a.push_back(to_int(x, lineno));
                    } else
                        throw ParseError("line " + std::to_string(lineno) +
                                         ": unknown family key '" + k + "'");
                }
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": unknown ring key '" +
                                 key + "'");
            }
        } else if (section == "module") {
            if (key == "construction") {
                std::vector<std::string> parts = split(value, ' ');
                if (parts.empty())
                    throw ParseError("line " + std::to_string(lineno) + ": empty construction");
                spec.module_kind = parts[0];
                spec.module_args.assign(parts.begin() + 1, parts.end());
                if (spec.module_kind == "quotient-by" || spec.module_kind == "cyclic") {
                    // arguments may contain commas inside; re-split on comma
                    std::string rest = trim(value.substr(spec.module_kind.size()));
                    spec.module_args = split(rest, ',');
                }
            } else if (key == "degrees") {
                spec.module_kind = "presentation";
                for (const std::string& d : split(value, ' '))
                    spec.module_degrees.push_back(to_int(d, lineno));
            } else if (key == "relation") {
                spec.module_relations.push_back(split(value, ','));
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": unknown module key '" +
                                 key + "'");
            }
        } else if (section == "ideal") {
            if (key == "kind") {
                spec.ideal_kind = value;
                if (value != "maximal" && value != "parameter" && value != "m-parameter")
                    throw ParseError("line " + std::to_string(lineno) + ": unknown ideal kind '" +
                                     value + "'");
            } else if (key == "generators") {
                spec.ideal_kind = "generators";
                spec.ideal_gens = split(value, ',');
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": unknown ideal key '" +
                                 key + "'");
            }
        } else if (section == "params") {
            if (key == "imax") spec.params.i_max = to_int(value, lineno);
            else if (key == "nmax") spec.params.n_max = to_int(value, lineno);
            else if (key == "cutoff") spec.params.cutoff = to_int(value, lineno);
            else if (key == "burn-in-n") spec.params.burn_in_n = to_int(value, lineno);
            else if (key == "burn-in-i") spec.params.burn_in_i = to_int(value, lineno);
            else if (key == "seed") spec.params.seed = uint64_t(std::stoll(value));
            else if (key == "jobs") spec.params.jobs = to_int(value, lineno);
            else
                throw ParseError("line " + std::to_string(lineno) + ": unknown params key '" +
                                 key + "'");
        }
    }
    if (!saw_ring) throw ParseError("missing [ring] section");
    if (!saw_module) throw ParseError("missing [module] section");
    if (!saw_ideal) throw ParseError("missing [ideal] section");
    if (spec.module_kind.empty()) throw ParseError("module construction not specified");
    if (spec.ideal_kind.empty()) throw ParseError("ideal not specified");
    return spec;
}

std::string emit_instance(const InstanceSpec& spec) {
    std::ostringstream os;
    os << "[ring]\n";
    os << "p = " << spec.p << "\n";
    if (spec.has_family) {
        os << "family = d=" << spec.family_d << " c=" << spec.family_c << " a=";
        for (size_t i = 0; i < spec.family_a.size(); ++i) {
            if (i) os << ",";
            os << spec.family_a[i];
        }
        os << "\n";
    } else {
        os << "vars =";
        for (const std::string& v : spec.vars) os << " " << v;
        os << "\n";
        if (!spec.ring_relations.empty()) {
            os << "relations = ";
            for (size_t i = 0; i < spec.ring_relations.size(); ++i) {
                if (i) os << ", ";
                os << spec.ring_relations[i];
            }
            os << "\n";
        }
    }
    os << "\n[module]\n";
    if (spec.module_kind == "presentation") {
        os << "degrees =";
        for (int d : spec.module_degrees) os << " " << d;
        os << "\n";
        for (const auto& col : spec.module_relations) {
            os << "relation = ";
            for (size_t i = 0; i < col.size(); ++i) {
                if (i) os << ", ";
                os << col[i];
            }
            os << "\n";
        }
    } else {
        os << "construction = " << spec.module_kind;
        for (size_t i = 0; i < spec.module_args.size(); ++i)
            os << (i == 0 ? " " : ", ") << spec.module_args[i];
        os << "\n";
    }
    os << "\n[ideal]\n";
    if (spec.ideal_kind == "generators") {
        os << "generators = ";
        for (size_t i = 0; i < spec.ideal_gens.size(); ++i) {
            if (i) os << ", ";
            os << spec.ideal_gens[i];
        }
        os << "\n";
    } else {
        os << "kind = " << spec.ideal_kind << "\n";
    }
    os << "\n[params]\n";
    os << "imax = " << spec.params.i_max << "\n";
    os << "nmax = " << spec.params.n_max << "\n";
    os << "cutoff = " << spec.params.cutoff << "\n";
    os << "burn-in-n = " << spec.params.burn_in_n << "\n";
    os << "burn-in-i = " << spec.params.burn_in_i << "\n";
    os << "seed = " << spec.params.seed << "\n";
    os << "jobs = " << spec.params.jobs << "\n";
    return os.str();
}

BuiltInstance build_instance(const InstanceSpec& spec) {
    BuiltInstance out;
    RingPtr P;
    int family_d = 0;
    if (spec.has_family) {
        if (spec.family_d < 1 || spec.family_c < 0 ||
            int(spec.family_a.size()) != spec.family_c)
            throw ParseError("family requires d >= 1 and one exponent per z-variable");
        std::vector<std::string> names;
        for (int i = 1; i <= spec.family_d; ++i) names.push_back("x" + std::to_string(i));
        for (int i = 1; i <= spec.family_c; ++i) names.push_back("z" + std::to_string(i));
        P = Ring::make(spec.p, names);
        std::vector<Poly> f;
        for (int i = 0; i < spec.family_c; ++i) {
            Poly z = Poly::variable(P, spec.family_d + i);
            Poly pw = Poly::constant(P, 1);
            for (int k = 0; k < spec.family_a[size_t(i)]; ++k) pw = pw * z;
            f.push_back(pw);
        }
        out.ring = CIRing::make(P, f);
        family_d = spec.family_d;
    } else {
        if (spec.vars.empty()) throw ParseError("ring variables not specified");
        P = Ring::make(spec.p, spec.vars);
        std::vector<Poly> f;
        for (const std::string& s : spec.ring_relations) f.push_back(parse_poly(P, s));
        out.ring = CIRing::make(P, f);
    }
    const CIRingPtr& A = out.ring;
    // module
    if (spec.module_kind == "free") {
        out.module = ModulePresentation::free_module(A);
    } else if (spec.module_kind == "residue-field") {
        out.module = ModulePresentation::residue_field(A);
    } else if (spec.module_kind == "quotient-by" || spec.module_kind == "cyclic") {
        std::vector<Poly> gens;
        for (const std::string& s : spec.module_args) gens.push_back(parse_poly(P, s));
        if (gens.empty()) throw ParseError("quotient construction needs generators");
        out.module = ModulePresentation::cyclic(A, gens);
    } else if (spec.module_kind == "syzygy-k") {
        if (spec.module_args.size() != 1) throw ParseError("syzygy-k needs one index");
        int idx = std::stoi(spec.module_args[0]);
        ModulePresentation k = ModulePresentation::residue_field(A);
        FreeResolution res = minimal_resolution(k, idx + 1);
        out.module = res.syzygy_module(idx).minimalized();
    } else if (spec.module_kind == "presentation") {
        std::vector<VecPoly> cols;
        for (const auto& col : spec.module_relations) {
            if (col.size() != spec.module_degrees.size())
                throw ParseError("relation column length differs from the generator count");
            VecPoly v;
            for (const std::string& s : col) v.push_back(parse_poly(P, s));
            cols.push_back(std::move(v));
        }
        out.module = ModulePresentation(A, spec.module_degrees, cols);
    } else {
        throw ParseError("unknown module construction '" + spec.module_kind + "'");
    }
    // the degree-1 parameter system: family x-variables, or for explicit
    // rings the variables not appearing in any ring relation lead
    std::vector<Poly> params;
    if (spec.has_family) {
        for (int i = 0; i < family_d; ++i) params.push_back(Poly::variable(P, i));
    } else {
        // graded Noether normalization guess: variables that are regular
        for (int v = 0; v < P->nvars() && int(params.size()) < A->dim(); ++v) {
            Poly x = Poly::variable(P, v);
            if (ModulePresentation::free_module(A).is_regular_element(x))
                params.push_back(x);
        }
    }
    out.parameter_sequence = params;
    // ideal
    if (spec.ideal_kind == "maximal") {
        out.ideal = irrelevant_ideal(A);
    } else if (spec.ideal_kind == "parameter") {
        if (int(params.size()) != A->dim())
            throw ParseError("no graded parameter system available for this ring");
        out.ideal = std::make_shared<IdealData>(A, params);
    } else if (spec.ideal_kind == "m-parameter") {
        if (int(params.size()) != A->dim())
            throw ParseError("no graded parameter system available for this ring");
        std::vector<Poly> gens;
        for (int v = 0; v < P->nvars(); ++v)
            for (const Poly& q : params) gens.push_back(Poly::variable(P, v) * q);
        out.ideal = std::make_shared<IdealData>(A, gens);
    } else if (spec.ideal_kind == "generators") {
        std::vector<Poly> gens;
        for (const std::string& s : spec.ideal_gens) gens.push_back(parse_poly(P, s));
        out.ideal = std::make_shared<IdealData>(A, gens);
    } else {
        throw ParseError("unknown ideal kind '" + spec.ideal_kind + "'");
    }
    return out;
}

const std::map<std::string, std::string>& builtin_fixtures() {
    static const std::map<std::string, std::string> fixtures = {
        {"A1_M1_m1",
         "[ring]\np = 101\nvars = x z\nrelations = z^2\n\n[module]\nconstruction = "
         "quotient-by z\n\n[ideal]\nkind = maximal\n\n[params]\n"},
        {"A1_M1_J1",
         "[ring]\np = 101\nvars = x z\nrelations = z^2\n\n[module]\nconstruction = "
         "quotient-by z\n\n[ideal]\nkind = parameter\n\n[params]\n"},
        {"A1_M1_mJ1",
         "[ring]\np = 101\nvars = x z\nrelations = z^2\n\n[module]\nconstruction = "
         "quotient-by z\n\n[ideal]\nkind = m-parameter\n\n[params]\n"},
        {"A1_free_m1",
         "[ring]\np = 101\nvars = x z\nrelations = z^2\n\n[module]\nconstruction = "
         "free\n\n[ideal]\nkind = maximal\n\n[params]\n"},
        {"A1_k_m1",
         "[ring]\np = 101\nvars = x z\nrelations = z^2\n\n[module]\nconstruction = "
         "residue-field\n\n[ideal]\nkind = maximal\n\n[params]\n"},
        {"A2_M2_m2",
         "[ring]\np = 101\nfamily = d=1 c=2 a=2,2\n\n[module]\nconstruction = quotient-by "
         "z1\n\n[ideal]\nkind = maximal\n\n[params]\n"},
        {"A2_k_m2",
         "[ring]\np = 101\nfamily = d=1 c=2 a=2,2\n\n[module]\nconstruction = "
         "residue-field\n\n[ideal]\nkind = maximal\n\n[params]\n"},
        {"A2_M2_x",
         "[ring]\np = 101\nfamily = d=1 c=2 a=2,2\n\n[module]\nconstruction = quotient-by "
         "z1\n\n[ideal]\nkind = parameter\n\n[params]\n"},
        {"A2_k_mx",
         "[ring]\np = 101\nfamily = d=1 c=2 a=2,2\n\n[module]\nconstruction = "
         "residue-field\n\n[ideal]\nkind = m-parameter\n\n[params]\n"},
        {"A2_free_m2",
         "[ring]\np = 101\nfamily = d=1 c=2 a=2,2\n\n[module]\nconstruction = "
         "free\n\n[ideal]\nkind = maximal\n\n[params]\n"},
        {"D2_ring_m",
         "[ring]\np = 101\nfamily = d=2 c=1 a=2\n\n[module]\nconstruction = "
         "free\n\n[ideal]\nkind = maximal\n\n[params]\n"},
        {"D2_ring_q",
         "[ring]\np = 101\nfamily = d=2 c=1 a=2\n\n[module]\nconstruction = "
         "free\n\n[ideal]\ngenerators = x1^2, x2^2, z1\n\n[params]\n"},
    };
    return fixtures;
}

}  // namespace cicalc
