#pragma once

#include "diocone/dual.hpp"
#include "diocone/shelling.hpp"

#include <map>
#include <string>

namespace diocone {

enum class InputMode { generators, hyperplanes, equations };
enum class Algorithm { primal, dual };

struct ProblemInput {
    InputMode mode = InputMode::generators;
    IntMatrix matrix;
    LatticeMode lattice_mode = LatticeMode::ambient_lattice;
    struct Options {
        Algorithm algorithm = Algorithm::primal;
        bool compute_hvector = false;
        std::string output_prefix;
    } options;
};

// Grammar: row count, column count, the rows, then a mode keyword
// (generators | hyperplanes | equations).  '#' starts a comment, blank lines
// are ignored.  Throws ParseError with a 1-based line number.
ProblemInput parse_input(const std::string& text);

struct Report {
    std::size_t dim = 0;
    bool pointed = true;
    IntMatrix hilbert_basis;
    IntMatrix extreme_rays;
    IntMatrix support_forms;
    IntMatrix unit_basis; // nonempty iff not pointed (dual algorithm only)
    bool have_triangulation = false;
    std::size_t triangulation_cells = 0;
    Int total_multiplicity = 0;
    bool hvector_requested = false;
    std::optional<HVector> hvector; // absent if not requested or not graded
    std::optional<std::vector<Rat>> hilbert_polynomial;
    std::vector<std::pair<std::string, double>> timings; // phase, seconds
};

Report run(const ProblemInput& problem);

std::string report_to_json(const Report& report);

// Writes prefix.hilb / prefix.ext / prefix.supp / prefix.hvec / prefix.json;
// with json_only only the .json file.  Throws IoError on unwritable paths.
void emit(const Report& report, const std::string& output_prefix, bool json_only = false);

} // namespace diocone
