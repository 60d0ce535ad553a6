#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "barymorph/embedder.hpp"
#include "barymorph/error.hpp"
#include "barymorph/families.hpp"
#include "barymorph/io.hpp"
#include "barymorph/morph.hpp"
#include "experiments.hpp"

namespace barymorph::cli {

namespace fs = std::filesystem;

namespace {

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return parse_error;
        case ErrorKind::SingularSystem:
        case ErrorKind::ResidualTooLarge:
        case ErrorKind::StepStalled: return solver_error;
        default: return validation_error;
    }
}

std::shared_ptr<const PlaneGraph> load_graph(const fs::path& p) {
    std::istringstream in(io::read_text_file(p));
    return io::read_graph(in);
}

Drawing load_drawing(const fs::path& p, std::shared_ptr<const PlaneGraph> g) {
    std::istringstream in(io::read_text_file(p));
    return io::read_drawing(in, std::move(g));
}

CoefficientMatrix load_coefficients(const fs::path& p, std::shared_ptr<const PlaneGraph> g) {
    std::istringstream in(io::read_text_file(p));
    return io::read_coefficients(in, std::move(g));
}

template <typename Writer, typename T>
std::string render(Writer w, const T& value) {
    std::ostringstream s;
    w(s, value);
    return s.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        io::write_text_file(path, text);
}

Triangle parse_triangle(const std::vector<double>& v) {
    if (v.empty()) return Triangle::make({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
    return Triangle::make({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
}

std::vector<std::size_t> parse_range(const std::string& spec) {
    std::vector<std::size_t> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        std::size_t pos = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size())
            throw Error(ErrorKind::ParseError, fmt::format("bad n-range '{}', expected a:b or a:b:step", spec));
        parts.push_back(value);
    }
    if (parts.size() < 2 || parts.size() > 3 || parts[0] > parts[1] || (parts.size() == 3 && parts[2] == 0))
        throw Error(ErrorKind::ParseError, fmt::format("bad n-range '{}', expected a:b or a:b:step", spec));
    const std::size_t step = parts.size() == 3 ? parts[2] : 1;
    std::vector<std::size_t> ns;
    for (std::size_t n = parts[0]; n <= parts[1]; n += step) ns.push_back(n);
    return ns;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
    std::string family;
    std::size_t n = 0;
    double lambda = 0.25;
    double r = std::sqrt(3.0) / 2.0;
    std::uint64_t seed = 1;
    double min_weight = 0.2;
    std::string prefix;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
    auto write = [&](const std::string& suffix, const std::string& text) {
        io::write_text_file(a.prefix + suffix, text);
        err << "wrote " << a.prefix << suffix << '\n';
    };
    if (a.family == "eg") {
        const auto inst = eades_garvan(a.n, a.lambda, a.r);
        write(".graph", render(io::write_graph, *inst.graph));
        write(".coef", render(io::write_coefficients, inst.matrix));
        const auto& c = inst.outer.corners();
        out << fmt::format("--triangle {:.17g} {:.17g} {:.17g} {:.17g} {:.17g} {:.17g}\n", c[0].x, c[0].y, c[1].x,
                           c[1].y, c[2].x, c[2].y);
    } else if (a.family == "nested") {
        const auto inst = nested_triangles(a.n);
        write(".graph", render(io::write_graph, *inst.graph));
        write(".gamma0", render(io::write_drawing, inst.gamma0));
        write(".gamma1", render(io::write_drawing, inst.gamma1));
    } else {
        std::mt19937_64 rng(a.seed);
        const auto g = random_stacked_triangulation(a.n, rng);
        write(".graph", render(io::write_graph, *g));
        write(".coef", render(io::write_coefficients, random_coefficients(g, rng, a.min_weight)));
    }
    return ok;
}

struct DrawArgs {
    std::string graph, coef, out, svg;
    bool tutte = false;
    std::vector<double> triangle;
};

int cmd_draw(const DrawArgs& a, std::ostream& out, std::ostream& err) {
    const auto g = load_graph(a.graph);
    const Triangle outer = parse_triangle(a.triangle);
    const CoefficientMatrix m = a.tutte ? uniform_coefficients(g) : load_coefficients(a.coef, g);
    const Embedding e = solve_f_drawing(m, outer);
    if (const auto rep = verify_planar_straight_line(e.drawing); !rep.planar())
        throw Error(ErrorKind::PlanarityViolation, rep.summary());
    emit(a.out, render(io::write_drawing, e.drawing), out);
    if (!a.svg.empty()) io::write_text_file(a.svg, io::svg_frame(e.drawing, outer));

    const auto res = separated_object_extremes(e.drawing);
    err << fmt::format("residual {:.3e}  log resolution {:.12f}  floor {:.12f}\n",
                       std::max(e.diagnostics.residual_x, e.diagnostics.residual_y), res.log_resolution(),
                       resolution_log_floor(triangle_resolution(outer), m.min_positive(), g->vertex_count()));
    return ok;
}

struct RecoverArgs {
    std::string graph, drawing, out;
    bool trace = false;
};

int cmd_recover(const RecoverArgs& a, std::ostream& out, std::ostream& err) {
    const auto g = load_graph(a.graph);
    const Drawing d = load_drawing(a.drawing, g);
    if (const auto rep = verify_planar_straight_line(d); !rep.planar())
        throw Error(ErrorKind::PlanarityViolation, rep.summary());
    const Recovery rec = recover_coefficients(d);
    emit(a.out, render(io::write_coefficients, rec.matrix), out);

    const auto res = separated_object_extremes(d);
    const double bound = res.resolution / static_cast<double>(g->vertex_count());
    err << fmt::format("min lambda {:.12g}  resolution / n {:.12g}  {}\n", rec.matrix.min_positive(), bound,
                       rec.matrix.min_positive() > bound ? "bound holds" : "BOUND VIOLATED");
    if (a.trace)
        for (const auto& vr : rec.trace.vertices)
            for (const auto& h : vr.rays)
                err << fmt::format("ray v={} k={} hits {} {} mu=({:.6g}, {:.6g}, {:.6g})\n", vr.v, h.k,
                                   h.kind == RayHit::Kind::vertex ? "vertex" : "edge", h.i, h.mu_self, h.mu_i,
                                   h.mu_next);
    return ok;
}

struct MorphArgs {
    std::string graph, from, to, out, frames;
    bool discretize = false;
    double min_step = 1e-9;
    std::size_t samples = 10;
};

int cmd_morph(const MorphArgs& a, std::ostream& out, std::ostream& err) {
    const auto g = load_graph(a.graph);
    const Drawing d0 = load_drawing(a.from, g);
    const Drawing d1 = load_drawing(a.to, g);
    for (const Drawing* d : {&d0, &d1})
        if (const auto rep = verify_planar_straight_line(*d); !rep.planar())
            throw Error(ErrorKind::PlanarityViolation, rep.summary());
    const FGMorph morph = morph_between(d0, d1);

    const auto n = static_cast<double>(g->vertex_count());
    for (const auto& [label, m, d] : {std::tuple{"from", &morph.m0(), &d0}, std::tuple{"to", &morph.m1(), &d1}}) {
        const double r = separated_object_extremes(*d).resolution;
        err << fmt::format("{}: min lambda {:.12g}, resolution / n {:.12g} ({})\n", label, m->min_positive(), r / n,
                           m->min_positive() > r / n ? "bound holds" : "BOUND VIOLATED");
    }

    MorphSchedule sched;
    if (a.discretize) {
        DiscretizeOptions opts;
        opts.min_step = a.min_step;
        sched = discretize_morph(morph, opts);
    } else {
        if (a.samples < 1) throw Error(ErrorKind::ParameterOutOfRange, "need at least one sample step");
        for (std::size_t j = 0; j <= a.samples; ++j) {
            const double t = static_cast<double>(j) / static_cast<double>(a.samples);
            sched.checkpoints.push_back({t, morph_at(morph, t)});
        }
        for (std::size_t j = 0; j < a.samples; ++j)
            sched.step_radii.push_back(separated_object_extremes(sched.checkpoints[j].drawing).min_dist / 3.0);
    }
    err << fmt::format("k = {}\n", sched.steps());
    for (const auto& cp : sched.checkpoints) {
        const auto f = morph_resolution_floor(morph, cp.t);
        err << fmt::format("t {:.17g}  lambda_min {:.12g}  log floor {:.12f}  log resolution {:.12f}\n", cp.t,
                           f.lambda_min, f.log_floor, separated_object_extremes(cp.drawing).log_resolution());
    }
    emit(a.out, render(io::write_schedule, sched), out);

    if (!a.frames.empty()) {
        fs::create_directories(a.frames);
        const auto& cps = sched.checkpoints;
        for (std::size_t j = 0; j < cps.size(); ++j) {
            io::write_text_file(fs::path(a.frames) / fmt::format("frame_{:05}.svg", j),
                                io::svg_frame(cps[j].drawing, morph.outer()));
            if (j + 1 < cps.size())
                io::write_text_file(fs::path(a.frames) / fmt::format("frame_{:05}_mid.svg", j),
                                    io::svg_frame(lerp(cps[j].drawing, cps[j + 1].drawing, 0.5), morph.outer()));
        }
    }
    return ok;
}

struct DecayArgs {
    std::string family = "eg";
    std::string range;
    double lambda = 0.25;
    double r = std::sqrt(3.0) / 2.0;
    unsigned threads = 1;
    bool timing = false;
    std::string out;
};

int cmd_decay(const DecayArgs& a, std::ostream& out, std::ostream& err) {
    experiments::DecayParams p;
    p.family = a.family == "eg" ? experiments::Family::eades_garvan : experiments::Family::nested;
    p.ns = parse_range(a.range);
    p.lambda = a.lambda;
    p.r = a.r;
    p.threads = a.threads;
    const auto rep = experiments::run_decay(p);
    emit(a.out, experiments::decay_csv(rep, a.timing), out);

    err << fmt::format("slope of log2(resolution) per unit n: {:.12f}\n", rep.slope_log2_per_n);
    if (p.family == experiments::Family::nested)
        err << fmt::format("fitted c (min n * delta) {:.12f}, c' (min n^2 * resolution) {:.12f}\n", rep.fitted_c,
                           rep.fitted_c_prime);
    if (a.timing)
        for (const auto& row : rep.rows) err << fmt::format("n {} runtime {:.3f} ms\n", row.n, row.runtime_ms);

    int code = ok;
    for (const auto& row : rep.rows)
        if (!row.sandwich_holds()) {
            err << fmt::format("n {}: floor <= measured <= ceiling fails\n", row.n);
            code = validation_error;
        }
    return code;
}

struct ValidateArgs {
    std::string graph, drawing, coef, schedule, from, to;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream&) {
    const auto g = load_graph(a.graph);
    out << fmt::format("graph: n = {}, m = {}, internal faces = {}\n", g->vertex_count(), g->edge_count(),
                       g->faces().size());
    bool good = true;
    if (!a.drawing.empty()) {
        const Drawing d = load_drawing(a.drawing, g);
        const auto rep = verify_planar_straight_line(d);
        out << "drawing: " << rep.summary() << '\n';
        good = good && rep.planar();
        if (rep.planar()) {
            const auto ext = separated_object_extremes(d);
            const auto w = min_distance_internal_face_witness(d);
            out << fmt::format("resolution {:.12g} (min {:.17g} at {} / {}, max {:.17g})\n", ext.resolution,
                               ext.min_dist, ext.min_witness.first.str(), ext.min_witness.second.str(), ext.max_dist);
            out << fmt::format("face witness: vertex {} edge ({}, {}) distance {:.17g} ({})\n", w.vertex, w.edge.a,
                               w.edge.b, w.distance, w.distance == ext.min_dist ? "matches" : "MISMATCH");
            good = good && w.distance == ext.min_dist;
        }
    }
    if (!a.coef.empty()) {
        std::istringstream in(io::read_text_file(a.coef));
        const auto m = io::read_coefficients(in, g, false);
        const auto rep = validate_coefficients(m);
        out << "coefficients: " << rep.summary() << '\n';
        good = good && rep.valid();
    }
    if (!a.schedule.empty()) {
        if (a.from.empty() || a.to.empty())
            throw Error(ErrorKind::ParseError, "--schedule needs --from and --to to rebuild the morph");
        const FGMorph morph = morph_between(load_drawing(a.from, g), load_drawing(a.to, g));
        std::istringstream in(io::read_text_file(a.schedule));
        const auto sched = io::read_schedule(in, g);
        const auto chk = validate_schedule(morph, sched);
        out << fmt::format("schedule: k = {}, worst motion / radius {:.12f}\n", sched.steps(),
                           chk.worst_motion_ratio);
        for (const auto& p : chk.problems) out << "  " << p << '\n';
        good = good && chk.ok();
    }
    out << (good ? "valid\n" : "INVALID\n");
    return good ? ok : validation_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convex-combination drawings, morphs and resolution audits of maximal plane graphs"};
    app.name("barymorph");
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a family instance to files");
    generate->add_option("family", gen.family, "eg, nested or stacked")
        ->required()
        ->check(CLI::IsMember({"eg", "nested", "stacked"}));
    generate->add_option("--n", gen.n, "Vertex count")->required();
    generate->add_option("--lambda", gen.lambda, "Chain coefficient (eg)");
    generate->add_option("--r", gen.r, "Outer triangle resolution (eg)");
    generate->add_option("--seed", gen.seed, "RNG seed (stacked)");
    generate->add_option("--min-weight", gen.min_weight, "Smallest unnormalized weight (stacked)");
    generate->add_option("--prefix", gen.prefix, "Output path prefix")->required();

    DrawArgs draw;
    auto* draw_cmd = app.add_subcommand("draw", "Compute an F-drawing");
    draw_cmd->add_option("--graph", draw.graph)->required();
    auto* coef_opt = draw_cmd->add_option("--coef", draw.coef, "Coefficient file");
    auto* tutte_opt = draw_cmd->add_flag("--tutte", draw.tutte, "Uniform coefficients");
    coef_opt->excludes(tutte_opt);
    draw_cmd->add_option("--triangle", draw.triangle, "x0 y0 x1 y1 x2 y2, counter-clockwise")->expected(6);
    draw_cmd->add_option("--out", draw.out, "Drawing file (default stdout)");
    draw_cmd->add_option("--svg", draw.svg, "SVG file");

    RecoverArgs rec;
    auto* recover = app.add_subcommand("recover", "Recover coefficients from a drawing");
    recover->add_option("--graph", rec.graph)->required();
    recover->add_option("--drawing", rec.drawing)->required();
    recover->add_option("--out", rec.out, "Coefficient file (default stdout)");
    recover->add_flag("--trace", rec.trace, "Log every ray hit");

    MorphArgs mor;
    auto* morph = app.add_subcommand("morph", "Morph between two drawings with the same outer triangle");
    morph->add_option("--graph", mor.graph)->required();
    morph->add_option("--from", mor.from)->required();
    morph->add_option("--to", mor.to)->required();
    morph->add_flag("--discretize", mor.discretize, "Emit a planar piecewise-linear schedule");
    morph->add_option("--min-step", mor.min_step, "Smallest t-progress per step");
    morph->add_option("--samples", mor.samples, "Uniform steps without --discretize");
    morph->add_option("--out", mor.out, "Schedule file (default stdout)");
    morph->add_option("--frames", mor.frames, "Directory for SVG frames");

    DecayArgs dec;
    auto* decay = app.add_subcommand("decay", "Resolution decay sweep");
    decay->add_option("--family", dec.family)->check(CLI::IsMember({"eg", "nested"}));
    decay->add_option("--n-range", dec.range, "a:b or a:b:step")->required();
    decay->add_option("--lambda", dec.lambda);
    decay->add_option("--r", dec.r);
    decay->add_option("--threads", dec.threads);
    decay->add_flag("--timing", dec.timing, "Fill runtime_ms (output no longer reproducible)");
    decay->add_option("--out", dec.out, "CSV file (default stdout)");

    ValidateArgs val;
    auto* validate = app.add_subcommand("validate", "Check a graph and optional drawing, coefficients, schedule");
    validate->add_option("--graph", val.graph)->required();
    validate->add_option("--drawing", val.drawing);
    validate->add_option("--coef", val.coef);
    validate->add_option("--schedule", val.schedule);
    validate->add_option("--from", val.from);
    validate->add_option("--to", val.to);

    std::vector<std::string> argv_storage{"barymorph"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : parse_error;
    }

    try {
        if (*draw_cmd && !draw.tutte && draw.coef.empty())
            throw Error(ErrorKind::ParseError, "draw needs --coef or --tutte");
        if (*generate) return cmd_generate(gen, out, err);
        if (*draw_cmd) return cmd_draw(draw, out, err);
        if (*recover) return cmd_recover(rec, out, err);
        if (*morph) return cmd_morph(mor, out, err);
        if (*decay) return cmd_decay(dec, out, err);
        return cmd_validate(val, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
}

}  // namespace barymorph::cli
