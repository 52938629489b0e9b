#include "diocone/io.hpp"

#include "diocone/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace diocone {

namespace {

bool integer_token(const std::string& t) {
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

Int parse_int(const std::string& t, std::size_t line) {
    if (!integer_token(t)) throw ParseError(line, "expected an integer, got '" + t + "'");
    return Int(t);
}

std::size_t parse_count(const std::string& t, std::size_t line, const char* what) {
    Int v = parse_int(t, line);
    if (v < 1) throw ParseError(line, std::string(what) + " must be positive");
    if (!v.fits_ulong_p()) throw ParseError(line, std::string(what) + " out of range");
    return v.get_ui();
}

} // namespace

ProblemInput parse_input(const std::string& text) {
    // meaningful lines with their 1-based line numbers
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0, last_line = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        last_line = lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string t;
        while (ls >> t) tokens.push_back(t);
        if (!tokens.empty()) lines.emplace_back(lineno, std::move(tokens));
    }

    std::size_t pos = 0;
    auto next_line = [&](const char* what) -> const std::pair<std::size_t, std::vector<std::string>>& {
        if (pos >= lines.size())
            throw ParseError(last_line ? last_line : 1, std::string("missing ") + what);
        return lines[pos++];
    };

    const auto& mline = next_line("row count");
    if (mline.second.size() != 1) throw ParseError(mline.first, "expected a single row count");
    std::size_t m = parse_count(mline.second[0], mline.first, "row count");

    const auto& dline = next_line("column count");
    if (dline.second.size() != 1) throw ParseError(dline.first, "expected a single column count");
    std::size_t d = parse_count(dline.second[0], dline.first, "column count");

    ProblemInput problem;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = next_line("matrix row");
        if (row.second.size() != d)
            throw ParseError(row.first, "expected " + std::to_string(d) + " entries, got " +
                                            std::to_string(row.second.size()));
        IntVector v;
        v.reserve(d);
        for (const auto& tok : row.second) v.push_back(parse_int(tok, row.first));
        problem.matrix.push_back(std::move(v));
    }

    const auto& mode = next_line("mode keyword");
    if (mode.second.size() != 1) throw ParseError(mode.first, "expected a single mode keyword");
    const std::string& kw = mode.second[0];
    if (kw == "generators") problem.mode = InputMode::generators;
    else if (kw == "hyperplanes") problem.mode = InputMode::hyperplanes;
    else if (kw == "equations") problem.mode = InputMode::equations;
    else throw ParseError(mode.first, "unknown mode keyword '" + kw + "'");

    if (pos < lines.size()) throw ParseError(lines[pos].first, "trailing input after mode keyword");
    if (problem.mode != InputMode::generators)
        problem.lattice_mode = LatticeMode::ambient_lattice;
    return problem;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

IntMatrix forms_to_matrix(const std::vector<SupportForm>& forms) {
    IntMatrix m;
    for (const auto& f : forms) m.push_back(f.coeffs);
    return m;
}

std::vector<SupportForm> rows_to_forms(const IntMatrix& rows) {
    std::vector<SupportForm> forms;
    for (const auto& r : rows) {
        if (is_zero(r)) continue;
        forms.push_back({primitive_part(r), SupportForm::Role::support});
    }
    return forms;
}

void fill_from_result(Report& rep, const HilbertResult& res) {
    rep.dim = res.dim;
    rep.pointed = res.pointed;
    rep.hilbert_basis = res.hilbert_basis;
    rep.extreme_rays = res.extreme_rays;
    rep.support_forms = res.support_forms;
    rep.unit_basis = res.unit_basis;
    if (!res.triangulation.cells.empty()) {
        rep.have_triangulation = true;
        rep.triangulation_cells = res.triangulation.cells.size();
        rep.total_multiplicity = res.total_multiplicity;
    }
}

// maps a result computed in embedded coordinates back to the original space
void map_result_back(HilbertResult& res, const LatticeEmbedding& emb) {
    for (auto& v : res.hilbert_basis) v = emb.backward(v);
    for (auto& v : res.extreme_rays) v = emb.backward(v);
    for (auto& v : res.unit_basis) v = emb.backward(v);
    for (auto& f : res.support_forms) f = emb.backward_form(f);
    std::sort(res.hilbert_basis.begin(), res.hilbert_basis.end(), lex_less);
    std::sort(res.extreme_rays.begin(), res.extreme_rays.end(), lex_less);
    std::sort(res.support_forms.begin(), res.support_forms.end(), lex_less);
}

} // namespace

Report run(const ProblemInput& problem) {
    if (problem.matrix.empty()) throw MathError("EmptyInput", "no input rows");
    const std::size_t d = problem.matrix[0].size();

    Report rep;
    rep.hvector_requested = problem.options.compute_hvector;
    auto t0 = Clock::now();

    // working-space generators for the primal run and for the h-vector
    IntMatrix working_gens;
    LatticeMode working_mode = LatticeMode::ambient_lattice;
    std::optional<LatticeEmbedding> eq_embedding; // equations mode only

    switch (problem.mode) {
    case InputMode::generators:
        working_gens = problem.matrix;
        working_mode = problem.lattice_mode;
        break;
    case InputMode::hyperplanes: {
        if (rank(problem.matrix) < d)
            throw MathError("NotPointed", "hyperplanes leave a nonzero linear subspace");
        for (const auto& f : dual_cone(problem.matrix)) working_gens.push_back(f.coeffs);
        break;
    }
    case InputMode::equations: {
        IntMatrix kernel = integer_kernel_basis(problem.matrix);
        if (kernel.empty()) {
            rep.timings.emplace_back("convert", seconds_since(t0));
            return rep; // only the zero solution
        }
        eq_embedding = embedding_from_basis(kernel, d, LatticeMode::ambient_lattice);
        IntMatrix constraint_rows = transpose(kernel); // x_j >= 0 in kernel coordinates
        IntMatrix nonzero;
        for (auto& r : constraint_rows)
            if (!is_zero(r)) nonzero.push_back(std::move(r));
        for (const auto& f : dual_cone(nonzero)) working_gens.push_back(f.coeffs);
        break;
    }
    }
    rep.timings.emplace_back("convert", seconds_since(t0));

    auto t1 = Clock::now();
    HilbertResult res;
    if (problem.options.algorithm == Algorithm::primal) {
        res = primal_hilbert_basis(working_gens, working_mode);
    } else {
        switch (problem.mode) {
        case InputMode::generators: {
            FullDimResult full =
                to_full_dimensional(ingest_generators(problem.matrix), problem.lattice_mode);
            res = dual_hilbert_basis(dual_cone(full.transformed), {});
            map_result_back(res, full.embedding);
            break;
        }
        case InputMode::hyperplanes:
            res = dual_hilbert_basis(rows_to_forms(problem.matrix), {});
            break;
        case InputMode::equations: {
            std::vector<SupportForm> coords;
            for (std::size_t j = 0; j < d; ++j)
                coords.push_back({unit_vector(d, j), SupportForm::Role::support});
            res = dual_hilbert_basis(coords, problem.matrix);
            eq_embedding.reset(); // results already in original coordinates
            break;
        }
        }
    }
    if (eq_embedding) map_result_back(res, *eq_embedding);
    fill_from_result(rep, res);
    if (problem.mode == InputMode::equations) {
        // the equations support the cone as well; each contributes both signs
        for (const auto& row : problem.matrix) {
            if (is_zero(row)) continue;
            IntVector e = primitive_part(row);
            rep.support_forms.push_back(negate(e));
            rep.support_forms.push_back(std::move(e));
        }
        std::sort(rep.support_forms.begin(), rep.support_forms.end(), lex_less);
    }
    rep.timings.emplace_back("hilbert", seconds_since(t1));

    if (problem.options.compute_hvector && rep.pointed) {
        auto t2 = Clock::now();
        FullDimResult full = to_full_dimensional(ingest_generators(working_gens), working_mode);
        HullState hull(full.embedding.rank);
        for (const auto& g : full.transformed) hull.insert_generator(g);
        ConeState cone = make_cone_state(full.transformed, hull.support_forms(), full.embedding);
        if (auto series = compute_graded_series(cone)) {
            rep.hvector = series->h;
            rep.hilbert_polynomial = series->polynomial;
            if (!rep.have_triangulation) {
                rep.have_triangulation = true;
                rep.triangulation_cells = series->triangulation_cells;
                rep.total_multiplicity = 0;
                for (const Int& h : series->h.coefficients) rep.total_multiplicity += h;
            }
        }
        rep.timings.emplace_back("hvector", seconds_since(t2));
    }
    rep.timings.emplace_back("total", seconds_since(t0));
    return rep;
}

namespace {

nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m) {
        nlohmann::json row = nlohmann::json::array();
        for (const Int& x : r) row.push_back(x.get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void write_matrix_file(const std::string& path, const IntMatrix& m) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << m.size() << "\n" << (m.empty() ? 0 : m[0].size()) << "\n";
    for (const auto& r : m) {
        for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j].get_str();
        out << "\n";
    }
    if (!out) throw IoError("cannot write " + path);
}

} // namespace

std::string report_to_json(const Report& report) {
    nlohmann::json j;
    j["dim"] = report.dim;
    j["pointed"] = report.pointed;
    j["hilbert_basis"] = matrix_to_json(report.hilbert_basis);
    j["extreme_rays"] = matrix_to_json(report.extreme_rays);
    j["support_forms"] = matrix_to_json(report.support_forms);
    j["unit_basis"] = matrix_to_json(report.unit_basis);
    if (report.have_triangulation) {
        j["triangulation"] = {{"cells", report.triangulation_cells},
                              {"total_multiplicity", report.total_multiplicity.get_str()}};
    } else {
        j["triangulation"] = nullptr;
    }
    if (report.hvector) {
        nlohmann::json h = nlohmann::json::array();
        for (const Int& c : report.hvector->coefficients) h.push_back(c.get_str());
        j["h_vector"] = std::move(h);
        nlohmann::json p = nlohmann::json::array();
        for (const Rat& c : *report.hilbert_polynomial) p.push_back(rat_str(c));
        j["hilbert_polynomial"] = std::move(p);
    } else {
        j["h_vector"] = nullptr;
        j["hilbert_polynomial"] = nullptr;
    }
    nlohmann::json timings = nlohmann::json::object();
    for (const auto& [phase, secs] : report.timings) timings[phase] = secs;
    j["timings"] = std::move(timings);
    return j.dump(2) + "\n";
}

void emit(const Report& report, const std::string& output_prefix, bool json_only) {
    {
        std::ofstream out(output_prefix + ".json");
        if (!out) throw IoError("cannot write " + output_prefix + ".json");
        out << report_to_json(report);
        if (!out) throw IoError("cannot write " + output_prefix + ".json");
    }
    if (json_only) return;
    write_matrix_file(output_prefix + ".hilb", report.hilbert_basis);
    write_matrix_file(output_prefix + ".ext", report.extreme_rays);
    write_matrix_file(output_prefix + ".supp", report.support_forms);
    if (report.hvector) {
        const std::string path = output_prefix + ".hvec";
        std::ofstream out(path);
        if (!out) throw IoError("cannot write " + path);
        for (std::size_t i = 0; i < report.hvector->coefficients.size(); ++i)
            out << (i ? " " : "") << report.hvector->coefficients[i].get_str();
        out << "\n";
        for (std::size_t i = 0; i < report.hilbert_polynomial->size(); ++i)
            out << (i ? " " : "") << rat_str((*report.hilbert_polynomial)[i]);
        out << "\n";
        if (!out) throw IoError("cannot write " + path);
    }
}

} // namespace diocone
