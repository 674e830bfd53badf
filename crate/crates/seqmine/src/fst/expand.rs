use crate::dictionary::{Dictionary, Fid};
use crate::fst::{for_each_output, CFst, InputLabel, StateId};

/// A transition whose labels are concrete items: consume `input`, emit
/// `output` (or nothing).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExpandedTransition {
    pub input: Fid,
    pub output: Option<Fid>,
    pub to: StateId,
}

/// The item-by-item form of a compact machine. Size grows with the
/// hierarchy (a `.` transition fans out to the whole vocabulary), so this
/// representation is for reference implementations and inspection, not for
/// mining.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncompressedFst {
    initial: StateId,
    finals: Vec<bool>,
    trans: Vec<Vec<ExpandedTransition>>,
}

impl UncompressedFst {
    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q as usize]
    }

    pub fn transitions(&self, q: StateId) -> &[ExpandedTransition] {
        &self.trans[q as usize]
    }

    pub fn num_transitions(&self) -> usize {
        self.trans.iter().map(Vec::len).sum()
    }
}

/// Rewrites every symbolic transition into its concrete item transitions:
/// the input label is enumerated against the dictionary (`.` → every item,
/// a descendant label → the stored descendant set, an exact label → the
/// item alone) and the output label is evaluated per concrete input.
pub fn expand(fst: &CFst, dict: &Dictionary) -> UncompressedFst {
    debug_assert!(!fst.has_epsilons());
    let mut trans = Vec::with_capacity(fst.num_states());
    for q in 0..fst.num_states() as StateId {
        let mut rows: Vec<ExpandedTransition> = Vec::new();
        for tr in fst.transitions(q) {
            let mut push_for = |t: Fid| {
                for_each_output(tr.output, t, dict, |output| {
                    rows.push(ExpandedTransition { input: t, output, to: tr.to });
                });
            };
            match tr.input {
                InputLabel::Dot => dict.fids().for_each(&mut push_for),
                InputLabel::Descendants(w) => dict.descendants(w).iter().copied().for_each(&mut push_for),
                InputLabel::Exact(w) => push_for(w),
            }
        }
        rows.sort();
        rows.dedup();
        trans.push(rows);
    }
    UncompressedFst {
        initial: fst.initial(),
        finals: (0..fst.num_states() as StateId).map(|q| fst.is_final(q)).collect(),
        trans,
    }
}
