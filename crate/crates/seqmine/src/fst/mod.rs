//! Compact finite-state transducers compiled from pattern expressions.
//!
//! Transitions carry symbolic labels. The input label selects a *set* of
//! items (any item, the descendants of an item, or one exact item); the
//! output label says what a matched input item produces: nothing, a
//! constant, the item itself, the item generalized upward to some bound, or
//! the item together with all its ancestors. Keeping labels symbolic means
//! the machine size is independent of the hierarchy size; [`expand`] rewrites
//! a machine into concrete item-to-item transitions when a plain FST is
//! needed.
//!
//! The usual pipeline is [`compile`] (may produce ε-transitions), then
//! [`eliminate_epsilon`], then [`normalize`] (trim, merge, canonically
//! renumber); [`build`] runs all three.

mod compile;
mod dot;
mod expand;
mod normalize;

pub use compile::compile;
pub use dot::to_dot;
pub use expand::{expand, ExpandedTransition, UncompressedFst};
pub use normalize::{eliminate_epsilon, normalize};

use crate::dictionary::{Dictionary, Fid};
use crate::error::Result;
use crate::patex::{quote_gid, PatternAst};

pub type StateId = u32;

/// Which input items a transition consumes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum InputLabel {
    /// Any item.
    Dot,
    /// Any descendant of the item (including itself).
    Descendants(Fid),
    /// Exactly the item.
    Exact(Fid),
}

impl InputLabel {
    pub fn matches(self, w: Fid, dict: &Dictionary) -> bool {
        match self {
            InputLabel::Dot => true,
            InputLabel::Descendants(v) => dict.is_ancestor_of(v, w),
            InputLabel::Exact(v) => v == w,
        }
    }

    fn render(self, dict: &Dictionary) -> String {
        match self {
            InputLabel::Dot => ".".to_string(),
            InputLabel::Descendants(v) => quote_gid(dict.gid(v)),
            InputLabel::Exact(v) => format!("{}=", quote_gid(dict.gid(v))),
        }
    }
}

/// What a matched input item produces.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum OutputLabel {
    /// Nothing.
    Eps,
    /// A fixed item, regardless of the matched input.
    Const(Fid),
    /// The matched item itself.
    SelfItem,
    /// The matched item and its ancestors up to (and including) the bound.
    SelfUpTo(Fid),
    /// The matched item and all of its ancestors.
    SelfAll,
}

impl OutputLabel {
    fn render(self, dict: &Dictionary) -> String {
        match self {
            OutputLabel::Eps => "-".to_string(),
            OutputLabel::Const(v) => quote_gid(dict.gid(v)),
            OutputLabel::SelfItem => "$".to_string(),
            OutputLabel::SelfUpTo(v) => format!("$-{}", quote_gid(dict.gid(v))),
            OutputLabel::SelfAll => "$-top".to_string(),
        }
    }
}

/// Calls `f` once per produced item for `label` on matched input `t`
/// (`None` when the label produces nothing). Ancestor enumeration follows
/// the dictionary's fixed upward BFS order so traces are reproducible.
pub fn for_each_output(
    label: OutputLabel,
    t: Fid,
    dict: &Dictionary,
    mut f: impl FnMut(Option<Fid>),
) {
    match label {
        OutputLabel::Eps => f(None),
        OutputLabel::Const(w) => f(Some(w)),
        OutputLabel::SelfItem => f(Some(t)),
        OutputLabel::SelfUpTo(b) => {
            for &a in dict.ancestors(t) {
                if dict.is_ancestor_of(b, a) {
                    f(Some(a));
                }
            }
        }
        OutputLabel::SelfAll => {
            for &a in dict.ancestors(t) {
                f(Some(a));
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Transition {
    pub input: InputLabel,
    pub output: OutputLabel,
    pub to: StateId,
}

/// A transducer over symbolic labels, plus (before normalization) plain
/// ε-transitions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CFst {
    initial: StateId,
    finals: Vec<bool>,
    trans: Vec<Vec<Transition>>,
    eps: Vec<Vec<StateId>>,
}

impl CFst {
    /// An empty machine; add states before use. State 0 is initial unless
    /// changed via [`CFst::set_initial`].
    pub fn new() -> CFst {
        CFst::default()
    }

    pub fn add_state(&mut self) -> StateId {
        let q = self.trans.len() as StateId;
        self.finals.push(false);
        self.trans.push(Vec::new());
        self.eps.push(Vec::new());
        q
    }

    pub fn set_initial(&mut self, q: StateId) {
        self.initial = q;
    }

    pub fn set_final(&mut self, q: StateId, is_final: bool) {
        self.finals[q as usize] = is_final;
    }

    pub fn add_transition(&mut self, from: StateId, input: InputLabel, output: OutputLabel, to: StateId) {
        self.trans[from as usize].push(Transition { input, output, to });
    }

    pub fn add_epsilon(&mut self, from: StateId, to: StateId) {
        self.eps[from as usize].push(to);
    }

    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q as usize]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(q, &f)| f.then_some(q as StateId))
    }

    pub fn transitions(&self, q: StateId) -> &[Transition] {
        &self.trans[q as usize]
    }

    pub fn epsilons(&self, q: StateId) -> &[StateId] {
        &self.eps[q as usize]
    }

    pub fn has_epsilons(&self) -> bool {
        self.eps.iter().any(|v| !v.is_empty())
    }

    pub fn num_transitions(&self) -> usize {
        self.trans.iter().map(Vec::len).sum()
    }

    /// Textual form for golden tests: `states`/`initial`/`final` headers,
    /// then one `from<TAB>in<TAB>out<TAB>to` line per transition in sorted
    /// order. `-` stands for ε.
    pub fn dump(&self, dict: &Dictionary) -> String {
        let mut out = format!("states\t{}\n", self.num_states());
        out.push_str(&format!("initial\t{}\n", self.initial));
        for q in self.finals() {
            out.push_str(&format!("final\t{q}\n"));
        }
        // ε-edges sort before labeled transitions within a state.
        let mut rows: Vec<(StateId, Option<Transition>, StateId)> = Vec::new();
        for q in 0..self.num_states() as StateId {
            for tr in self.transitions(q) {
                rows.push((q, Some(*tr), tr.to));
            }
            for &to in self.epsilons(q) {
                rows.push((q, None, to));
            }
        }
        rows.sort();
        for (q, tr, to) in rows {
            let (i, o) = match tr {
                Some(tr) => (tr.input.render(dict), tr.output.render(dict)),
                None => ("-".to_string(), "-".to_string()),
            };
            out.push_str(&format!("{q}\t{i}\t{o}\t{to}\n"));
        }
        out
    }
}

/// Parses nothing; compiles an already-parsed pattern all the way to a
/// normalized ε-free machine.
pub fn build(ast: &PatternAst, dict: &Dictionary) -> Result<CFst> {
    Ok(normalize(&eliminate_epsilon(&compile(ast, dict)?)))
}
