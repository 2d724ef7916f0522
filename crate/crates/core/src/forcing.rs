//! Zero forcing closure, zero forcing number, failed zero forcing number,
//! forts and true-blue analysis.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// One application of the rule: `forcer` was blue with `forced` as its only
/// white neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
    pub round: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ForcingTrace {
    pub steps: Vec<Force>,
}

impl ForcingTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the trace from `initial`, checking that each force was legal
    /// against the blue set at the start of its round. Returns the final set.
    pub fn replay(&self, g: &Graph, initial: VertexSet) -> Option<VertexSet> {
        let mut blue = initial;
        let mut round_start = initial;
        let mut round = 0;
        for step in &self.steps {
            if step.round != round {
                if step.round != round + 1 {
                    return None;
                }
                round = step.round;
                round_start = blue;
            }
            let white = g.neighbors(step.forcer) - round_start;
            if !round_start.contains(step.forcer)
                || white.len() != 1
                || !white.contains(step.forced)
                || blue.contains(step.forced)
            {
                return None;
            }
            blue.insert(step.forced);
        }
        Some(blue)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub final_set: VertexSet,
    pub trace: ForcingTrace,
    /// No force fired in the first round.
    pub stalled_immediately: bool,
}

/// Runs the forcing rule to its fixed point in synchronous rounds. Within a
/// round every blue vertex is examined in ascending order against the blue
/// set as it stood when the round began; a vertex targeted by several
/// forcers is credited to the smallest one.
pub fn closure(g: &Graph, s: VertexSet) -> ClosureResult {
    let mut blue = s & g.vertices();
    let mut trace = ForcingTrace::default();
    let mut round = 0;
    loop {
        round += 1;
        let start = blue;
        for v in start {
            let white = g.neighbors(v) - start;
            if white.len() == 1 {
                let u = white.first().unwrap();
                if !blue.contains(u) {
                    blue.insert(u);
                    trace.steps.push(Force {
                        forcer: v,
                        forced: u,
                        round,
                    });
                }
            }
        }
        if blue == start {
            break;
        }
    }
    let stalled_immediately = trace.steps.first().is_none_or(|f| f.round != 1);
    ClosureResult {
        final_set: blue,
        trace,
        stalled_immediately,
    }
}

/// Final closure set only. Forces take effect immediately, which reaches
/// the same fixed point because the closure is order independent.
pub fn closure_set(g: &Graph, s: VertexSet) -> VertexSet {
    let mut blue = s & g.vertices();
    loop {
        let before = blue;
        for v in before {
            let white = g.neighbors(v) - blue;
            if white.len() == 1 {
                blue = blue | white;
            }
        }
        if blue == before {
            return blue;
        }
    }
}

/// No blue vertex has exactly one white neighbor.
pub fn is_stalled(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| (g.neighbors(v) - s).len() != 1)
}

pub fn is_failed_set(g: &Graph, s: VertexSet) -> bool {
    closure_set(g, s) != g.vertices()
}

/// Smallest size of a forcing set; plain ascending subset search.
pub fn zero_forcing_number(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&k| VertexSet::combinations(n, k).any(|s| closure_set(g, s) == g.vertices()))
        .unwrap_or(n)
}

/// A minimum forcing set, lexicographically least among those of minimum size.
pub fn minimum_forcing_set(g: &Graph) -> VertexSet {
    let n = g.order();
    (0..=n)
        .find_map(|k| VertexSet::combinations(n, k).find(|&s| closure_set(g, s) == g.vertices()))
        .unwrap_or(g.vertices())
}

/// Nonempty `t` such that no vertex outside `t` has exactly one neighbor in `t`.
pub fn is_fort(g: &Graph, t: VertexSet) -> bool {
    !t.is_empty()
        && t.is_subset(g.vertices())
        && (g.vertices() - t)
            .iter()
            .all(|v| (g.neighbors(v) & t).len() != 1)
}

/// A minimum fort, lexicographically least among the minimum ones.
pub fn min_fort(g: &Graph) -> VertexSet {
    let n = g.order();
    (1..=n)
        .find_map(|k| VertexSet::combinations(n, k).find(|&t| is_fort(g, t)))
        .expect("the whole vertex set is a fort")
}

/// Largest size of a set that does not force the whole graph, computed as
/// `n - |min_fort(g)|`.
pub fn failed_zero_forcing_number(g: &Graph) -> usize {
    g.order() - min_fort(g).len()
}

/// Same quantity by descending search over blue sets. Used as the oracle for
/// the fort-based value.
pub fn failed_zero_forcing_number_brute_force(g: &Graph) -> usize {
    maximum_failed_set(g).len()
}

/// A largest failed set, lexicographically least among those of that size.
pub fn maximum_failed_set(g: &Graph) -> VertexSet {
    let n = g.order();
    (0..n)
        .rev()
        .find_map(|k| VertexSet::combinations(n, k).find(|&s| is_failed_set(g, s)))
        .expect("the empty set never forces a graph")
}

/// Blue vertices whose neighbors are all blue.
pub fn true_blue(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().filter(|&v| g.neighbors(v).is_subset(s)).collect()
}

/// Lexicographically least `size`-set that is its own closure, optionally
/// with no true-blue member.
pub fn find_stalled_set(g: &Graph, size: usize, forbid_true_blue: bool) -> Option<VertexSet> {
    VertexSet::combinations(g.order(), size)
        .find(|&s| is_stalled(g, s) && (!forbid_true_blue || true_blue(g, s).is_empty()))
}
