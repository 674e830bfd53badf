//! Pattern-growth miner over a prefix tree of output sequences.
//!
//! Each tree node corresponds to one candidate output prefix `S` and owns a
//! projected database: the posting list of snapshots at which some run of
//! the machine has produced exactly `S` so far. Expanding a node resumes
//! every snapshot by exactly one *emitting* step (ε-moves are followed
//! transparently and deduplicated with a visited grid), which partitions
//! the snapshots among child nodes keyed by the emitted item. Support
//! counting and pruning both happen on the posting lists:
//!
//! * a sequence counts toward the node's support when a resumed run sits
//!   in a final accepting configuration;
//! * a child whose posting list touches fewer than σ sequences cannot lead
//!   to any frequent output (its descendants' lists only shrink), so it is
//!   pruned without expansion;
//! * emissions of items with document frequency below σ are dropped
//!   immediately, since any output containing them is infrequent.

use std::collections::BTreeMap;

use crate::dictionary::{Dictionary, Fid};
use crate::fst::{for_each_output, CFst, OutputLabel, StateId};
use crate::matcher::MatchMode;
use crate::mine::posting::{PostingList, Snapshot};
use crate::mine::PatternSet;
use crate::seqdb::SequenceDatabase;

/// Receives one callback per prefix-tree node in depth-first order
/// (parents before children, children in ascending emitted-item order).
/// Pruned children are reported with `expanded == false` and are not
/// recursed into. Intended for tests and diagnostics.
pub trait DfsObserver {
    fn node(&mut self, info: &NodeInfo<'_>);
}

pub struct NodeInfo<'a> {
    /// The output prefix of this node (empty at the root).
    pub prefix: &'a [Fid],
    /// The node's projected database, decoded.
    pub snapshots: &'a [Snapshot],
    /// Distinct sequences in the projected database.
    pub prefix_support: u32,
    /// Sequences accepted with output exactly `prefix` (0 if unexpanded).
    pub support: u32,
    /// False when the node was pruned by the prefix-support bound.
    pub expanded: bool,
}

pub fn mine(
    db: &SequenceDatabase,
    fst: &CFst,
    dict: &Dictionary,
    sigma: u64,
    mode: MatchMode,
) -> PatternSet {
    run(db, fst, dict, sigma, mode, None)
}

pub fn mine_observed(
    db: &SequenceDatabase,
    fst: &CFst,
    dict: &Dictionary,
    sigma: u64,
    mode: MatchMode,
    observer: &mut dyn DfsObserver,
) -> PatternSet {
    run(db, fst, dict, sigma, mode, Some(observer))
}

fn run(
    db: &SequenceDatabase,
    fst: &CFst,
    dict: &Dictionary,
    sigma: u64,
    mode: MatchMode,
    observer: Option<&mut dyn DfsObserver>,
) -> PatternSet {
    debug_assert!(!fst.has_epsilons());
    let mut miner = Miner {
        db,
        fst,
        dict,
        sigma,
        mode,
        n_states: fst.num_states(),
        stamps: Vec::new(),
        generation: 0,
        prefix: Vec::new(),
        results: PatternSet::new(),
        observer,
    };
    let mut root = PostingList::new();
    for seq in 0..db.len() as u32 {
        root.push(Snapshot { seq, pos: 1, state: fst.initial() });
    }
    miner.expand(root);
    miner.results
}

struct Miner<'a, 'o> {
    db: &'a SequenceDatabase,
    fst: &'a CFst,
    dict: &'a Dictionary,
    sigma: u64,
    mode: MatchMode,
    n_states: usize,
    /// Visited grid indexed `pos * n_states + state`, valid while the cell
    /// holds the current generation stamp; one generation per
    /// (node, sequence-group) scan, so the grid is never cleared.
    stamps: Vec<u32>,
    generation: u32,
    prefix: Vec<Fid>,
    results: PatternSet,
    observer: Option<&'o mut dyn DfsObserver>,
}

impl Miner<'_, '_> {
    fn expand(&mut self, list: PostingList) {
        let prefix_support = list.prefix_support();
        let mut children: BTreeMap<Fid, PostingList> = BTreeMap::new();
        let mut support = 0u32;
        let mut counted_seq = None;
        let mut current_seq = None;
        let mut work: Vec<(u32, StateId)> = Vec::new();
        for snap in &list {
            if current_seq != Some(snap.seq) {
                current_seq = Some(snap.seq);
                self.next_generation(snap.seq);
            }
            self.resume(snap, &mut children, &mut support, &mut counted_seq, &mut work);
        }
        if !self.prefix.is_empty() && u64::from(support) >= self.sigma {
            self.results.insert(self.prefix.clone(), u64::from(support));
        }
        if self.observer.is_some() {
            self.observe(&list, prefix_support, support, true);
        }
        while let Some((item, child)) = children.pop_first() {
            let child_prefix_support = child.prefix_support();
            debug_assert!(child_prefix_support <= prefix_support);
            self.prefix.push(item);
            if u64::from(child_prefix_support) >= self.sigma {
                self.expand(child);
            } else if self.observer.is_some() {
                self.observe(&child, child_prefix_support, 0, false);
            }
            self.prefix.pop();
        }
    }

    /// Advances one snapshot by every possible single emitting step,
    /// following ε-moves in between. Identical intermediate configurations
    /// reached along different ε-paths are visited once.
    fn resume(
        &mut self,
        snap: Snapshot,
        children: &mut BTreeMap<Fid, PostingList>,
        support: &mut u32,
        counted_seq: &mut Option<u32>,
        work: &mut Vec<(u32, StateId)>,
    ) {
        let db = self.db;
        let fst = self.fst;
        let dict = self.dict;
        let sigma = self.sigma;
        let mode = self.mode;
        let n = self.n_states;
        let generation = self.generation;
        let stamps = &mut self.stamps;
        let prefix_empty = self.prefix.is_empty();
        let seq = db.get(snap.seq as usize);
        let len = seq.len() as u32;
        let visit = |stamps: &mut Vec<u32>, pos: u32, state: StateId| -> bool {
            let cell = &mut stamps[pos as usize * n + state as usize];
            if *cell == generation {
                false
            } else {
                *cell = generation;
                true
            }
        };
        work.clear();
        if visit(stamps, snap.pos, snap.state) {
            work.push((snap.pos, snap.state));
        }
        while let Some((pos, state)) = work.pop() {
            if fst.is_final(state)
                && !prefix_empty
                && (mode == MatchMode::Partial || pos > len)
                && *counted_seq != Some(snap.seq)
            {
                *counted_seq = Some(snap.seq);
                *support += 1;
            }
            if pos > len {
                continue;
            }
            let t = seq[(pos - 1) as usize];
            for tr in fst.transitions(state) {
                if !tr.input.matches(t, dict) {
                    continue;
                }
                if tr.output == OutputLabel::Eps {
                    if visit(stamps, pos + 1, tr.to) {
                        work.push((pos + 1, tr.to));
                    }
                    continue;
                }
                for_each_output(tr.output, t, dict, |o| {
                    let w = o.expect("non-ε label always produces an item");
                    if dict.frequency(w) >= sigma {
                        children
                            .entry(w)
                            .or_default()
                            .push(Snapshot { seq: snap.seq, pos: pos + 1, state: tr.to });
                    }
                });
            }
        }
    }

    /// Grows the visited grid to cover `seq` and starts a fresh generation.
    fn next_generation(&mut self, seq: u32) {
        let needed = (self.db.get(seq as usize).len() + 2) * self.n_states;
        if self.stamps.len() < needed {
            self.stamps.resize(needed, self.generation);
        }
        if self.generation == u32::MAX {
            self.stamps.fill(0);
            self.generation = 0;
        }
        self.generation += 1;
    }

    fn observe(&mut self, list: &PostingList, prefix_support: u32, support: u32, expanded: bool) {
        let snapshots: Vec<Snapshot> = list.iter().collect();
        if let Some(obs) = self.observer.as_deref_mut() {
            obs.node(&NodeInfo {
                prefix: &self.prefix,
                snapshots: &snapshots,
                prefix_support,
                support,
                expanded,
            });
        }
    }
}
