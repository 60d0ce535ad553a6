#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>

#include "barymorph/coefficients.hpp"
#include "barymorph/geometry.hpp"
#include "barymorph/morph.hpp"
#include "barymorph/plane_graph.hpp"

// Plain-text formats. Tokens are whitespace separated and `#` starts a
// comment. Reals are written with 17 significant digits so a write/read cycle
// reproduces every double exactly. Malformed input throws `ParseError` with a
// line number; structurally invalid content throws the validating module's
// error.
//
//   graph          n <count> / outer a b c / f a b c ...
//   drawing        v <id> <x> <y>, one line per vertex
//   coefficients   w <v> <u> <lambda>, one line per positive entry
//   schedule       schedule k <steps>, then per checkpoint `t <value>`
//                  followed by its drawing lines

namespace barymorph::io {

[[nodiscard]] std::shared_ptr<const PlaneGraph> read_graph(std::istream& in);
void write_graph(std::ostream& out, const PlaneGraph& g);

[[nodiscard]] Drawing read_drawing(std::istream& in, std::shared_ptr<const PlaneGraph> graph);
void write_drawing(std::ostream& out, const Drawing& d);

[[nodiscard]] CoefficientMatrix read_coefficients(std::istream& in, std::shared_ptr<const PlaneGraph> graph,
                                                  bool validate = true);
void write_coefficients(std::ostream& out, const CoefficientMatrix& m);

/// Step radii are recomputed from the checkpoint drawings.
[[nodiscard]] MorphSchedule read_schedule(std::istream& in, std::shared_ptr<const PlaneGraph> graph);
void write_schedule(std::ostream& out, const MorphSchedule& s);

struct SvgStyle {
    double width_px = 600.0;
    double margin = 0.05;  // fraction of the larger triangle extent
};

/// One frame. The viewBox depends only on `view`, so frames of a morph with a
/// fixed outer triangle share it.
[[nodiscard]] std::string svg_frame(const Drawing& d, const Triangle& view, SvgStyle style = {});

[[nodiscard]] std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& text);

}  // namespace barymorph::io
