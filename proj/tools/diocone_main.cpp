#include "diocone/errors.hpp"
#include "diocone/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string default_prefix(const std::string& input_path) {
    auto slash = input_path.find_last_of('/');
    auto dot = input_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return input_path;
    return input_path.substr(0, dot);
}

void print_summary(const diocone::Report& rep) {
    std::cout << "dim " << rep.dim << ", " << (rep.pointed ? "pointed" : "not pointed") << "\n";
    std::cout << "hilbert basis: " << rep.hilbert_basis.size() << " elements\n";
    std::cout << "extreme rays: " << rep.extreme_rays.size() << "\n";
    std::cout << "support hyperplanes: " << rep.support_forms.size() << "\n";
    if (!rep.unit_basis.empty()) std::cout << "unit group rank: " << rep.unit_basis.size() << "\n";
    if (rep.have_triangulation)
        std::cout << "triangulation: " << rep.triangulation_cells << " cells, multiplicity "
                  << rep.total_multiplicity.get_str() << "\n";
    if (rep.hvector) {
        std::cout << "h-vector:";
        for (const auto& c : rep.hvector->coefficients) std::cout << " " << c.get_str();
        std::cout << "\n";
    } else if (rep.hvector_requested) {
        std::cout << "h-vector: unavailable (input not homogeneous)\n";
    }
    for (const auto& [phase, secs] : rep.timings)
        std::cout << "time " << phase << ": " << secs << " s\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert bases of rational pointed cones"};
    std::string input_path, algorithm = "primal", lattice = "ambient", output_prefix;
    bool hvector = false, json_only = false;
    app.add_option("input", input_path, "input file")->required();
    app.add_option("--algorithm", algorithm, "primal|dual")
        ->check(CLI::IsMember({"primal", "dual"}));
    app.add_flag("--hvector", hvector, "compute the h-vector and Hilbert polynomial");
    app.add_option("--lattice", lattice, "ambient|generated (generators mode only)")
        ->check(CLI::IsMember({"ambient", "generated"}));
    app.add_option("--output", output_prefix, "output file prefix");
    app.add_flag("--json-only", json_only, "write only the .json report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "error: cannot read " << input_path << "\n";
        return 3;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    try {
        diocone::ProblemInput problem = diocone::parse_input(buffer.str());
        problem.options.algorithm =
            algorithm == "dual" ? diocone::Algorithm::dual : diocone::Algorithm::primal;
        problem.options.compute_hvector = hvector;
        if (problem.mode == diocone::InputMode::generators && lattice == "generated")
            problem.lattice_mode = diocone::LatticeMode::generated_lattice;
        problem.options.output_prefix =
            output_prefix.empty() ? default_prefix(input_path) : output_prefix;

        diocone::Report rep = diocone::run(problem);
        diocone::emit(rep, problem.options.output_prefix, json_only);
        if (json_only)
            std::cout << diocone::report_to_json(rep);
        else
            print_summary(rep);
        return 0;
    } catch (const diocone::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const diocone::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const diocone::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
