//! Brute-force reference implementations for checking the main crate.
//!
//! Everything here favors obviousness over speed: exhaustive recursion over
//! the *uncompressed* machine, no pruning, no sharing, no projected
//! databases. Tests compare the fast engines against these level by level;
//! keep this crate decoupled from the main crate's matching and mining code
//! paths so the comparison stays meaningful.

pub mod corpus;
pub mod enumerate;

use std::collections::{BTreeMap, BTreeSet};

use seqmine::fst::UncompressedFst;
use seqmine::{Dictionary, Fid, SequenceDatabase};

/// All non-empty outputs of full runs of the machine over `seq`, by plain
/// exhaustive recursion.
pub fn oracle_generate(fst: &UncompressedFst, seq: &[Fid]) -> BTreeSet<Vec<Fid>> {
    let mut out = BTreeSet::new();
    let mut buf = Vec::new();
    walk(fst, seq, 0, fst.initial(), &mut buf, false, &mut out);
    out
}

/// Like [`oracle_generate`], but an output is recorded whenever a final
/// state is reached, not only after consuming the whole sequence.
pub fn oracle_generate_partial(fst: &UncompressedFst, seq: &[Fid]) -> BTreeSet<Vec<Fid>> {
    let mut out = BTreeSet::new();
    let mut buf = Vec::new();
    walk(fst, seq, 0, fst.initial(), &mut buf, true, &mut out);
    out
}

fn walk(
    fst: &UncompressedFst,
    seq: &[Fid],
    at: usize,
    state: u32,
    buf: &mut Vec<Fid>,
    partial: bool,
    out: &mut BTreeSet<Vec<Fid>>,
) {
    if fst.is_final(state) && !buf.is_empty() && (partial || at == seq.len()) {
        out.insert(buf.clone());
    }
    if at == seq.len() {
        return;
    }
    for tr in fst.transitions(state) {
        if tr.input != seq[at] {
            continue;
        }
        match tr.output {
            Some(w) => {
                buf.push(w);
                walk(fst, seq, at + 1, tr.to, buf, partial, out);
                buf.pop();
            }
            None => walk(fst, seq, at + 1, tr.to, buf, partial, out),
        }
    }
}

/// Definition-level mining: count, for every output of every sequence, the
/// number of supporting sequences, and keep counts reaching `sigma`.
pub fn oracle_mine(
    db: &SequenceDatabase,
    fst: &UncompressedFst,
    sigma: u64,
) -> BTreeMap<Vec<Fid>, u64> {
    oracle_mine_mode(db, fst, sigma, false)
}

pub fn oracle_mine_mode(
    db: &SequenceDatabase,
    fst: &UncompressedFst,
    sigma: u64,
    partial: bool,
) -> BTreeMap<Vec<Fid>, u64> {
    let mut counts: BTreeMap<Vec<Fid>, u64> = BTreeMap::new();
    for t in db.iter() {
        let set = if partial { oracle_generate_partial(fst, t) } else { oracle_generate(fst, t) };
        for s in set {
            *counts.entry(s).or_insert(0) += 1;
        }
    }
    counts.retain(|_, n| *n >= sigma);
    counts
}

/// Checks that `s` embeds into `t` with generalization: some strictly
/// increasing choice of positions in `t` where each chosen item of `t` is
/// equal to or a descendant of the corresponding item of `s`. Ancestor
/// checks walk the raw parent edges directly.
pub fn is_generalized_subseq(s: &[Fid], t: &[Fid], dict: &Dictionary) -> bool {
    embed(s, t, dict, 0, 0)
}

fn embed(s: &[Fid], t: &[Fid], dict: &Dictionary, si: usize, ti: usize) -> bool {
    if si == s.len() {
        return true;
    }
    for at in ti..t.len() {
        if generalizes_to(dict, t[at], s[si]) && embed(s, t, dict, si + 1, at + 1) {
            return true;
        }
    }
    false
}

/// True when `target` is reachable from `from` by walking parent edges
/// upward zero or more times.
fn generalizes_to(dict: &Dictionary, from: Fid, target: Fid) -> bool {
    if from == target {
        return true;
    }
    dict.parents(from)
        .iter()
        .any(|&p| generalizes_to(dict, p, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use seqmine::fst::{build, expand};
    use seqmine::patex::parse;

    const HIER: &str = "a1\tA\na2\tA\nb1\tB\nb2\tB\nb11\tb1\nb12\tb1\n";
    const DATA: &str =
        "c a1 b12 e\na1 b2 e\nd a2 a1 a2 b11 e\nd a1 B e\ne a1 b2 d\nc a1 a1 a1 b2 e\n";

    fn example() -> (Dictionary, SequenceDatabase) {
        let mut dict = Dictionary::load_hierarchy(HIER, []).unwrap();
        let mut db = SequenceDatabase::load(DATA, &mut dict).unwrap();
        dict.compute_flist(&mut db);
        (dict, db)
    }

    fn machine(dict: &Dictionary) -> UncompressedFst {
        expand(&build(&parse("[c|d]([A^|B=^]+)e").unwrap(), dict).unwrap(), dict)
    }

    fn render(dict: &Dictionary, set: &BTreeSet<Vec<Fid>>) -> BTreeSet<String> {
        set.iter().map(|s| dict.render_items(s)).collect()
    }

    #[test]
    fn generates_the_expected_outputs_per_sequence() {
        let (dict, db) = example();
        let fst = machine(&dict);
        assert_eq!(
            render(&dict, &oracle_generate(&fst, db.get(0))),
            ["a1 B", "A B"].map(String::from).into()
        );
        assert!(oracle_generate(&fst, db.get(1)).is_empty());
        assert_eq!(oracle_generate(&fst, db.get(2)).len(), 8);
        assert_eq!(oracle_generate(&fst, db.get(5)).len(), 8);
    }

    #[test]
    fn mines_the_expected_result() {
        let (dict, db) = example();
        let fst = machine(&dict);
        let result = oracle_mine(&db, &fst, 2);
        let rendered: BTreeMap<String, u64> = result
            .iter()
            .map(|(s, &n)| (dict.render_items(s), n))
            .collect();
        let want: BTreeMap<String, u64> = [
            ("A A A B", 2),
            ("A B", 2),
            ("A a1 A B", 2),
            ("a1 B", 2),
        ]
        .map(|(s, n)| (s.to_string(), n))
        .into();
        assert_eq!(rendered, want);
        assert_eq!(oracle_mine(&db, &fst, 1).len(), 16);
        assert!(oracle_mine(&db, &fst, 3).is_empty());
    }

    #[test]
    fn subsequence_check_respects_order_and_hierarchy() {
        let (dict, db) = example();
        let f = |gid: &str| dict.fid(gid).unwrap();
        let t1 = db.get(0); // c a1 b12 e
        assert!(is_generalized_subseq(&[f("a1"), f("B")], t1, &dict));
        assert!(is_generalized_subseq(&[f("A"), f("b1")], t1, &dict));
        assert!(is_generalized_subseq(&[f("c"), f("e")], t1, &dict));
        assert!(!is_generalized_subseq(&[f("b1"), f("a1")], t1, &dict)); // order
        assert!(!is_generalized_subseq(&[f("b11")], t1, &dict)); // b12 ⋢ b11
        assert!(is_generalized_subseq(&[], t1, &dict));
        // Items only generalize upward: B in the data matches pattern B,
        // not the other way around.
        let t4 = db.get(3); // d a1 B e
        assert!(is_generalized_subseq(&[f("B")], t4, &dict));
        assert!(!is_generalized_subseq(&[f("b1")], t4, &dict));
    }

    #[test]
    fn partial_generation_stops_at_any_accepting_state() {
        let (dict, db) = example();
        let fst = expand(&build(&parse(".*(A^)").unwrap(), &dict).unwrap(), &dict);
        // Full runs must end at the end of the sequence; T1 ends with e,
        // so nothing is generated in full mode from a machine without
        // trailing context.
        assert!(oracle_generate(&fst, db.get(0)).is_empty());
        assert_eq!(
            render(&dict, &oracle_generate_partial(&fst, db.get(0))),
            ["a1", "A"].map(String::from).into()
        );
    }
}
