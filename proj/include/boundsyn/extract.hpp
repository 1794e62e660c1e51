#pragma once

#include "boundsyn/encode.hpp"
#include "boundsyn/solve.hpp"
#include "boundsyn/system.hpp"

namespace boundsyn {

/// From a full assignment of a basic encoding. The successor of (t, i) is the
/// least t' whose transition variable is true.
TransitionSystem extract_basic(const Model& model, const VarDirectory& dir);

/// From Skolem tables of an input-symbolic encoding (outer-block values may
/// come from the plain assignment).
TransitionSystem extract_input_symbolic(const Model& model, const VarDirectory& dir);

/// From Skolem tables of a state-symbolic or fully symbolic encoding.
TransitionSystem extract_state_symbolic(const Model& model, const VarDirectory& dir);

/// Dispatches on dir.kind.
TransitionSystem extract(const Model& model, const VarDirectory& dir);

}  // namespace boundsyn
