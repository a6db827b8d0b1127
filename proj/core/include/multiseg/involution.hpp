#pragma once

#include <vector>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// One step of the end-descending algorithm: the segment it produced, the
/// segments consumed (one per stage, ends descending by exactly 1) and the
/// multisegment left for the following step.
struct StepTrace {
    Segment produced;
    std::vector<Segment> used;
    Multisegment remainder;
};

/// One step of the end-descending algorithm on a nonempty single-line
/// multisegment. Stage 1 picks the segment with maximal end (tie: maximal
/// beginning); each following stage picks, among segments ending one lower
/// that precede the previous pick, the one with maximal beginning. The
/// consumed segments are truncated at the right; empties are dropped.
StepTrace mwa_left_step(const Multisegment& a);

/// Dual step: stage 1 picks minimal beginning (tie: minimal end), stages
/// ascend beginnings by 1, consumed segments are truncated at the left.
StepTrace mwa_right_step(const Multisegment& a);

/// The involution a -> a^t by iterated end-descending steps, run per line.
/// Pass `traces` to record every step.
Multisegment mwa_left(const Multisegment& a, std::vector<StepTrace>* traces = nullptr);

/// The involution by the dual beginning-ascending algorithm. Agrees with
/// mwa_left on every input.
Multisegment mwa_right(const Multisegment& a, std::vector<StepTrace>* traces = nullptr);

/// JSON form of step traces: [{"produced": [b,e], "used": [[b,e],...]}, ...]
std::string traces_to_json(const std::vector<StepTrace>& traces);

}  // namespace multiseg
