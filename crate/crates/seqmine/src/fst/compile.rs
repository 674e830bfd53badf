use crate::dictionary::Dictionary;
use crate::error::{Error, Result};
use crate::fst::{CFst, InputLabel, OutputLabel, StateId};
use crate::patex::PatternAst;

/// Translates a parsed pattern into a transducer by structural recursion.
/// Each sub-pattern becomes a fragment with one entry and one exit state,
/// glued together with ε-transitions; the result is correct but not small
/// — run [`super::eliminate_epsilon`] and [`super::normalize`] afterwards,
/// or use [`super::build`].
pub fn compile(ast: &PatternAst, dict: &Dictionary) -> Result<CFst> {
    let mut c = Compiler { fst: CFst::new(), dict };
    let (start, end) = c.fragment(ast, false)?;
    c.fst.set_initial(start);
    c.fst.set_final(end, true);
    Ok(c.fst)
}

struct Compiler<'a> {
    fst: CFst,
    dict: &'a Dictionary,
}

impl Compiler<'_> {
    fn fragment(&mut self, ast: &PatternAst, captured: bool) -> Result<(StateId, StateId)> {
        match ast {
            PatternAst::Item { gid, exact, generalize } => {
                let w = self
                    .dict
                    .fid(gid)
                    .ok_or_else(|| Error::UnknownPatternItem { gid: gid.clone() })?;
                debug_assert!(captured || !generalize);
                let (input, output) = match (captured, exact, generalize) {
                    (false, true, _) => (InputLabel::Exact(w), OutputLabel::Eps),
                    (false, false, _) => (InputLabel::Descendants(w), OutputLabel::Eps),
                    (true, true, false) => (InputLabel::Exact(w), OutputLabel::Const(w)),
                    (true, false, false) => (InputLabel::Descendants(w), OutputLabel::SelfItem),
                    (true, false, true) => (InputLabel::Descendants(w), OutputLabel::SelfUpTo(w)),
                    (true, true, true) => (InputLabel::Descendants(w), OutputLabel::Const(w)),
                };
                Ok(self.leaf(input, output))
            }
            PatternAst::Wildcard { generalize } => {
                debug_assert!(captured || !generalize);
                let output = match (captured, generalize) {
                    (false, _) => OutputLabel::Eps,
                    (true, false) => OutputLabel::SelfItem,
                    (true, true) => OutputLabel::SelfAll,
                };
                Ok(self.leaf(InputLabel::Dot, output))
            }
            PatternAst::Capture(inner) => self.fragment(inner, true),
            PatternAst::Concat(parts) => {
                let frags = parts
                    .iter()
                    .map(|p| self.fragment(p, captured))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.chain(&frags))
            }
            PatternAst::Union(alts) => {
                let start = self.fst.add_state();
                let end = self.fst.add_state();
                for alt in alts {
                    let (s, e) = self.fragment(alt, captured)?;
                    self.fst.add_epsilon(start, s);
                    self.fst.add_epsilon(e, end);
                }
                Ok((start, end))
            }
            PatternAst::Optional(inner) => {
                let f = self.fragment(inner, captured)?;
                Ok(self.optional(f))
            }
            PatternAst::Star(inner) => {
                let f = self.fragment(inner, captured)?;
                Ok(self.star(f))
            }
            PatternAst::Plus(inner) => {
                let (s, e) = self.fragment(inner, captured)?;
                let start = self.fst.add_state();
                let end = self.fst.add_state();
                self.fst.add_epsilon(start, s);
                self.fst.add_epsilon(e, s);
                self.fst.add_epsilon(e, end);
                Ok((start, end))
            }
            PatternAst::Repeat { child, min, max } => self.repeat(child, *min, *max, captured),
        }
    }

    fn leaf(&mut self, input: InputLabel, output: OutputLabel) -> (StateId, StateId) {
        let s = self.fst.add_state();
        let e = self.fst.add_state();
        self.fst.add_transition(s, input, output, e);
        (s, e)
    }

    fn epsilon_leaf(&mut self) -> (StateId, StateId) {
        let s = self.fst.add_state();
        let e = self.fst.add_state();
        self.fst.add_epsilon(s, e);
        (s, e)
    }

    fn optional(&mut self, (s, e): (StateId, StateId)) -> (StateId, StateId) {
        let start = self.fst.add_state();
        let end = self.fst.add_state();
        self.fst.add_epsilon(start, s);
        self.fst.add_epsilon(e, end);
        self.fst.add_epsilon(start, end);
        (start, end)
    }

    fn star(&mut self, (s, e): (StateId, StateId)) -> (StateId, StateId) {
        let start = self.fst.add_state();
        let end = self.fst.add_state();
        self.fst.add_epsilon(start, s);
        self.fst.add_epsilon(e, s);
        self.fst.add_epsilon(e, end);
        self.fst.add_epsilon(start, end);
        (start, end)
    }

    fn chain(&mut self, frags: &[(StateId, StateId)]) -> (StateId, StateId) {
        match frags {
            [] => self.epsilon_leaf(),
            [first, rest @ ..] => {
                let mut end = first.1;
                for &(s, e) in rest {
                    self.fst.add_epsilon(end, s);
                    end = e;
                }
                (first.0, end)
            }
        }
    }

    /// `{n}` / `{n,}` / `{n,m}` unroll into `n` mandatory copies followed by
    /// `m - n` independently skippable copies (or an ε-loop when unbounded).
    /// Copies are compiled separately, so each iteration may take a
    /// different branch of the repeated sub-pattern.
    fn repeat(
        &mut self,
        child: &PatternAst,
        min: u32,
        max: Option<u32>,
        captured: bool,
    ) -> Result<(StateId, StateId)> {
        let mut frags = Vec::new();
        for _ in 0..min {
            frags.push(self.fragment(child, captured)?);
        }
        match max {
            None => {
                // min mandatory copies followed by a starred copy.
                let f = self.fragment(child, captured)?;
                let starred = self.star(f);
                frags.push(starred);
                Ok(self.chain(&frags))
            }
            Some(m) => {
                for _ in min..m {
                    let f = self.fragment(child, captured)?;
                    let opt = self.optional(f);
                    frags.push(opt);
                }
                // chain() of zero fragments ({0,0}) is the ε machine.
                Ok(self.chain(&frags))
            }
        }
    }
}
