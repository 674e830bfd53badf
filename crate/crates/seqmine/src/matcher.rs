//! Generates, for one input sequence, the set of subsequences a compiled
//! pattern machine produces — the building block shared by all miners.
//!
//! Matching runs the transducer over the sequence with an explicit
//! backtracking stack (no recursion, so deeply nested patterns and long
//! sequences cannot overflow). Outputs form a *set*: the same subsequence
//! produced along two different runs counts once. The empty output is never
//! reported.

use std::collections::BTreeSet;

use crate::dictionary::{Dictionary, Fid};
use crate::fst::{for_each_output, CFst, OutputLabel, StateId};
use crate::seqdb::Sequence;

/// Whether a match must consume the whole sequence or may stop early.
///
/// `Full` reports outputs only when the machine reaches a final state at
/// the end of the input; a pattern is anchored on both sides unless it
/// contains explicit leading/trailing context such as `.*`. `Partial`
/// reports an output as soon as a final state is reached, which together
/// with a `.*`-prefixed machine yields "match anywhere" semantics without
/// paying for a trailing wildcard scan.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatchMode {
    Full,
    Partial,
}

/// The symbolic transition function: all `(output, next-state)` moves of
/// state `q` on input item `w`.
pub fn delta(fst: &CFst, q: StateId, w: Fid, dict: &Dictionary) -> Vec<(OutputLabel, StateId)> {
    fst.transitions(q)
        .iter()
        .filter(|tr| tr.input.matches(w, dict))
        .map(|tr| (tr.output, tr.to))
        .collect()
}

/// All subsequences the machine generates from `seq`.
pub fn generate(fst: &CFst, seq: &[Fid], dict: &Dictionary, mode: MatchMode) -> BTreeSet<Sequence> {
    run(fst, seq, dict, mode, None)
}

/// Like [`generate`], but moves that would emit an item whose stored
/// document frequency is below `sigma` are pruned immediately. Outputs that
/// would contain an infrequent item cannot be frequent themselves, so the
/// surviving set is exactly the frequent-capable subset of [`generate`].
pub fn generate_filtered(
    fst: &CFst,
    seq: &[Fid],
    dict: &Dictionary,
    mode: MatchMode,
    sigma: u64,
) -> BTreeSet<Sequence> {
    run(fst, seq, dict, mode, Some(sigma))
}

struct Frame {
    /// 1-based position of the next input item; `len + 1` = input consumed.
    pos: u32,
    /// Output length on entry; restored on backtrack.
    out_len: usize,
    moves: Vec<(StateId, Option<Fid>)>,
    next: usize,
}

fn run(
    fst: &CFst,
    seq: &[Fid],
    dict: &Dictionary,
    mode: MatchMode,
    min_freq: Option<u64>,
) -> BTreeSet<Sequence> {
    debug_assert!(!fst.has_epsilons());
    let len = seq.len() as u32;
    let mut results = BTreeSet::new();
    let mut buf: Vec<Fid> = Vec::new();
    let mut stack = vec![frame(fst, seq, dict, mode, min_freq, 1, fst.initial(), &buf, &mut results)];
    while let Some(top) = stack.last_mut() {
        if top.next >= top.moves.len() {
            stack.pop();
            continue;
        }
        let out_len = top.out_len;
        let pos = top.pos;
        let (to, emit) = top.moves[top.next];
        top.next += 1;
        buf.truncate(out_len);
        if let Some(w) = emit {
            buf.push(w);
        }
        debug_assert!(pos <= len);
        stack.push(frame(fst, seq, dict, mode, min_freq, pos + 1, to, &buf, &mut results));
    }
    results
}

/// Builds the frame for arriving at `(pos, state)`, recording the emitted
/// output if this arrival qualifies, and precomputing the outgoing moves.
fn frame(
    fst: &CFst,
    seq: &[Fid],
    dict: &Dictionary,
    mode: MatchMode,
    min_freq: Option<u64>,
    pos: u32,
    state: StateId,
    buf: &[Fid],
    results: &mut BTreeSet<Sequence>,
) -> Frame {
    let len = seq.len() as u32;
    if fst.is_final(state) && !buf.is_empty() && (mode == MatchMode::Partial || pos > len) {
        results.insert(buf.to_vec());
    }
    let mut moves = Vec::new();
    if pos <= len {
        let t = seq[(pos - 1) as usize];
        for tr in fst.transitions(state) {
            if !tr.input.matches(t, dict) {
                continue;
            }
            for_each_output(tr.output, t, dict, |o| {
                if let (Some(w), Some(sigma)) = (o, min_freq) {
                    if dict.frequency(w) < sigma {
                        return;
                    }
                }
                moves.push((tr.to, o));
            });
        }
    }
    Frame { pos, out_len: buf.len(), moves, next: 0 }
}
