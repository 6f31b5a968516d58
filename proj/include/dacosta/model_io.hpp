#ifndef DACOSTA_MODEL_IO_HPP
#define DACOSTA_MODEL_IO_HPP

#include <string>
#include <vector>

#include "dacosta/algebra.hpp"
#include "dacosta/polarity.hpp"

namespace dacosta {

// Model files:
//   elements: 0 m 1
//   order: 0<m m<1
//   neg: 0->1 m->1 1->m
// Frame files:
//   worlds: a b
//   order: a<b
//   R: (a,b) (b,b)
// A key may repeat; its entries accumulate. '#' starts a comment.

/// Throws ModelFormatError, NotALattice, NotDistributive.
NegationModel parse_model(const std::string& text);
/// Canonical text: every element, the covering pairs, the full table.
std::string write_model(const NegationModel& m);

/// Throws ModelFormatError.
FrameSpec parse_frame_spec(const std::string& text);
/// Throws ModelFormatError, NotAPoset, NotHereditary.
PolarityFrame parse_frame(const std::string& text);
std::string write_frame(const PolarityFrame& f);

/// True iff the text has a `worlds:` section.
bool looks_like_frame(const std::string& text);

const std::vector<std::string>& builtin_names();
bool is_builtin_frame(const std::string& name);
/// Throws UnknownBuiltin. Frame builtins yield their induced model.
NegationModel builtin_model(const std::string& name);
/// Throws UnknownBuiltin, also for model builtins.
PolarityFrame builtin_frame(const std::string& name);
/// Canonical description file of a builtin. Throws UnknownBuiltin.
std::string emit_builtin(const std::string& name);

/// `builtin:NAME` or a path to a model file or a frame file (converted to its
/// up-set model). Throws ModelFormatError when the file cannot be read.
NegationModel load_model(const std::string& arg);
/// `builtin:NAME` or a path to a frame file.
PolarityFrame load_frame(const std::string& arg);

std::string read_text_file(const std::string& path);

}  // namespace dacosta

#endif  // DACOSTA_MODEL_IO_HPP
