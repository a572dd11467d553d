//! Replayable log of the reductions a solve performed.
//!
//! Each record stores the vertices removed from the instance it fired on, the
//! attachment vertices it kept, and the id map from the reduced instance back
//! to the instance it was derived from. Replaying the records in reverse
//! rebuilds the original vertex set from the final one.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone)]
pub struct TraceEntry {
    pub rule: &'static str,
    /// Vertices deleted from the instance this rule fired on (its own ids).
    pub removed: Vec<usize>,
    /// Vertices the extension anchors to (ids of the firing instance).
    pub attachments: Vec<usize>,
    /// Map reduced-instance id -> firing-instance id. Empty when the rule did
    /// not recurse on a reduced instance.
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct ReductionTrace {
    pub entries: Vec<TraceEntry>,
}

impl ReductionTrace {
    pub fn new() -> Self {
        ReductionTrace::default()
    }

    pub fn record(
        &mut self,
        rule: &'static str,
        removed: Vec<usize>,
        attachments: Vec<usize>,
        map: Vec<usize>,
    ) {
        self.entries.push(TraceEntry {
            rule,
            removed,
            attachments,
            map,
        });
    }

    /// Replays the removals backwards: starting from the vertex id set of the
    /// final reduced instance, undoes each map and re-adds removed vertices.
    /// Returns the reconstructed vertex set of the original instance.
    pub fn replay_vertex_set(&self, final_vertices: usize) -> BTreeSet<usize> {
        let mut current: BTreeSet<usize> = (0..final_vertices).collect();
        for entry in self.entries.iter().rev() {
            if !entry.map.is_empty() {
                current = current.iter().map(|&v| entry.map[v]).collect();
            }
            current.extend(entry.removed.iter().copied());
        }
        current
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            writeln!(
                f,
                "{:3} {} removed={:?} attach={:?}",
                i, e.rule, e.removed, e.attachments
            )?;
        }
        Ok(())
    }
}
