//! Frequent-subsequence miners. All three produce identical results; they
//! differ in how much work they avoid:
//!
//! * [`mine_naive`] generates every output of every sequence and counts;
//! * [`mine_count`] additionally prunes emissions of infrequent items
//!   while generating, shrinking the intermediate sets;
//! * [`mine_dfs`] never materializes per-sequence output sets at all — it
//!   grows outputs item by item over a shared prefix tree and prunes whole
//!   subtrees by a support upper bound.
//!
//! Support is per-sequence: a subsequence counts once per input sequence
//! that generates it, and a result is reported when that count reaches σ.

mod dfs;
mod posting;

pub use dfs::{mine_observed as mine_dfs_observed, DfsObserver, NodeInfo};
pub use posting::Snapshot;

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::dictionary::Dictionary;
use crate::fst::CFst;
use crate::matcher::{generate, generate_filtered, MatchMode};
use crate::seqdb::{Sequence, SequenceDatabase};

/// Mining result: each frequent subsequence with its support.
pub type PatternSet = BTreeMap<Sequence, u64>;

pub fn mine_naive(
    db: &SequenceDatabase,
    fst: &CFst,
    dict: &Dictionary,
    sigma: u64,
    mode: MatchMode,
) -> PatternSet {
    let mut counts: HashMap<Sequence, u64> = HashMap::new();
    for t in db.iter() {
        for s in generate(fst, t, dict, mode) {
            *counts.entry(s).or_insert(0) += 1;
        }
    }
    counts.into_iter().filter(|&(_, n)| n >= sigma).collect()
}

pub fn mine_count(
    db: &SequenceDatabase,
    fst: &CFst,
    dict: &Dictionary,
    sigma: u64,
    mode: MatchMode,
) -> PatternSet {
    let mut counts: HashMap<Sequence, u64> = HashMap::new();
    for t in db.iter() {
        for s in generate_filtered(fst, t, dict, mode, sigma) {
            *counts.entry(s).or_insert(0) += 1;
        }
    }
    counts.into_iter().filter(|&(_, n)| n >= sigma).collect()
}

pub fn mine_dfs(
    db: &SequenceDatabase,
    fst: &CFst,
    dict: &Dictionary,
    sigma: u64,
    mode: MatchMode,
) -> PatternSet {
    dfs::mine(db, fst, dict, sigma, mode)
}

/// One `pattern<TAB>support` line per result, most frequent first, ties in
/// lexicographic order of the rendered pattern.
pub fn render_patterns(patterns: &PatternSet, dict: &Dictionary) -> String {
    let mut rows: Vec<(String, u64)> = patterns
        .iter()
        .map(|(s, &n)| (dict.render_items(s), n))
        .collect();
    rows.sort_by(|(pa, na), (pb, nb)| nb.cmp(na).then_with(|| pa.cmp(pb)));
    let mut out = String::new();
    for (pattern, n) in rows {
        out.push_str(&format!("{pattern}\t{n}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fst::build;
    use crate::patex::parse;
    use crate::testutil::{example, seq_of};

    fn ex_machine(dict: &Dictionary) -> CFst {
        build(&parse("[c|d]([A^|B=^]+)e").unwrap(), dict).unwrap()
    }

    fn rendered(result: &PatternSet, dict: &Dictionary) -> BTreeMap<String, u64> {
        result
            .iter()
            .map(|(s, &n)| (dict.render_items(s), n))
            .collect()
    }

    fn all_miners(
        db: &SequenceDatabase,
        fst: &CFst,
        dict: &Dictionary,
        sigma: u64,
        mode: MatchMode,
    ) -> PatternSet {
        let naive = mine_naive(db, fst, dict, sigma, mode);
        let count = mine_count(db, fst, dict, sigma, mode);
        let dfs = mine_dfs(db, fst, dict, sigma, mode);
        assert_eq!(naive, count, "naive vs count");
        assert_eq!(naive, dfs, "naive vs dfs");
        naive
    }

    #[test]
    fn running_example_at_sigma_two() {
        let (dict, db) = example();
        let fst = ex_machine(&dict);
        let result = all_miners(&db, &fst, &dict, 2, MatchMode::Full);
        let want: BTreeMap<String, u64> = [
            ("A A A B", 2),
            ("A B", 2),
            ("A a1 A B", 2),
            ("a1 B", 2),
        ]
        .map(|(s, n)| (s.to_string(), n))
        .into();
        assert_eq!(rendered(&result, &dict), want);
    }

    #[test]
    fn running_example_at_sigma_one() {
        let (dict, db) = example();
        let fst = ex_machine(&dict);
        let result = all_miners(&db, &fst, &dict, 1, MatchMode::Full);
        let want: BTreeMap<String, u64> = [
            ("A A A B", 2),
            ("A B", 2),
            ("A a1 A B", 2),
            ("a1 B", 2),
            ("A A a2 B", 1),
            ("A a1 a2 B", 1),
            ("a2 A A B", 1),
            ("a2 A a2 B", 1),
            ("a2 a1 A B", 1),
            ("a2 a1 a2 B", 1),
            ("a1 a1 a1 B", 1),
            ("a1 a1 A B", 1),
            ("a1 A a1 B", 1),
            ("a1 A A B", 1),
            ("A a1 a1 B", 1),
            ("A A a1 B", 1),
        ]
        .map(|(s, n)| (s.to_string(), n))
        .into();
        assert_eq!(rendered(&result, &dict), want);
    }

    #[test]
    fn running_example_at_sigma_three_is_empty() {
        let (dict, db) = example();
        let fst = ex_machine(&dict);
        assert!(all_miners(&db, &fst, &dict, 3, MatchMode::Full).is_empty());
    }

    #[test]
    fn supporting_sequences_follow_from_generation() {
        // "A a1 A B" is generated exactly by the third and sixth sequence.
        let (dict, db) = example();
        let fst = ex_machine(&dict);
        let target = seq_of(&dict, "A a1 A B");
        let holders: Vec<usize> = (0..db.len())
            .filter(|&i| generate(&fst, db.get(i), &dict, MatchMode::Full).contains(&target))
            .collect();
        assert_eq!(holders, vec![2, 5]);
    }

    #[test]
    fn partial_mode_counts_hits_anywhere() {
        let (dict, db) = example();
        // A single generalizing capture, allowed to start after a prefix:
        // item occurrences anywhere in each sequence.
        let fst = build(&parse(".*(A)").unwrap(), &dict).unwrap();
        let result = all_miners(&db, &fst, &dict, 2, MatchMode::Partial);
        let want: BTreeMap<String, u64> = [("a1", 6)].map(|(s, n)| (s.to_string(), n)).into();
        assert_eq!(rendered(&result, &dict), want);
    }

    #[test]
    fn rendering_orders_by_support_then_pattern() {
        let (dict, db) = example();
        let fst = ex_machine(&dict);
        let result = mine_dfs(&db, &fst, &dict, 1, MatchMode::Full);
        let text = render_patterns(&result, &dict);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 16);
        assert_eq!(lines[0], "A A A B\t2");
        assert_eq!(lines[1], "A B\t2");
        assert_eq!(lines[2], "A a1 A B\t2");
        assert_eq!(lines[3], "a1 B\t2");
        assert!(lines[4..].iter().all(|l| l.ends_with("\t1")));
    }

    struct Recorder<'d> {
        dict: &'d Dictionary,
        nodes: BTreeMap<String, (Vec<Snapshot>, u32, u32, bool)>,
    }

    impl DfsObserver for Recorder<'_> {
        fn node(&mut self, info: &NodeInfo<'_>) {
            self.nodes.insert(
                self.dict.render_items(info.prefix),
                (
                    info.snapshots.to_vec(),
                    info.prefix_support,
                    info.support,
                    info.expanded,
                ),
            );
        }
    }

    fn snaps(triples: &[(u32, u32, u32)]) -> Vec<Snapshot> {
        triples
            .iter()
            .map(|&(seq, pos, state)| Snapshot { seq, pos, state })
            .collect()
    }

    #[test]
    fn dfs_trace_matches_the_worked_expansion() {
        let (dict, db) = example();
        let fst = ex_machine(&dict);
        let mut rec = Recorder { dict: &dict, nodes: BTreeMap::new() };
        let result = mine_dfs_observed(&db, &fst, &dict, 2, MatchMode::Full, &mut rec);
        assert_eq!(result.len(), 4);

        // Every prefix-tree node visited, including the four pruned ones.
        let visited: Vec<&str> = rec.nodes.keys().map(String::as_str).collect();
        assert_eq!(
            visited,
            vec![
                "", "A", "A A", "A A A", "A A A B", "A A a1", "A B", "A a1", "A a1 A",
                "A a1 A B", "A a1 a1", "a1", "a1 A", "a1 B", "a1 a1",
            ]
        );

        // The root holds one initial snapshot per input sequence.
        let root = &rec.nodes[""];
        assert_eq!(root.0, snaps(&[(0, 1, 0), (1, 1, 0), (2, 1, 0), (3, 1, 0), (4, 1, 0), (5, 1, 0)]));
        assert_eq!((root.1, root.2, root.3), (6, 0, true));

        // "a1" is reachable in three sequences, never accepted on its own.
        let a1 = &rec.nodes["a1"];
        assert_eq!(a1.0, snaps(&[(0, 3, 2), (3, 3, 2), (5, 3, 2)]));
        assert_eq!((a1.1, a1.2, a1.3), (3, 0, true));

        // "a1 B" is accepted by the first and fourth sequence.
        let a1b = &rec.nodes["a1 B"];
        assert_eq!(a1b.0, snaps(&[(0, 4, 2), (3, 4, 2)]));
        assert_eq!((a1b.1, a1b.2, a1b.3), (2, 2, true));

        // Children whose projected database touches one sequence are
        // pruned without expansion.
        for pruned in ["a1 A", "a1 a1", "A A a1", "A a1 a1"] {
            let node = &rec.nodes[pruned];
            assert_eq!(node.1, 1, "{pruned}");
            assert_eq!(node.3, false, "{pruned}");
        }
        assert_eq!(rec.nodes["a1 A"].0, snaps(&[(5, 4, 2)]));

        // Expanded but infrequent interior nodes report support 0.
        let aa = &rec.nodes["A A"];
        assert_eq!(aa.0, snaps(&[(2, 4, 2), (5, 4, 2)]));
        assert_eq!((aa.1, aa.2, aa.3), (2, 0, true));

        // The accepted leaves count exactly their supporting sequences.
        let aaab = &rec.nodes["A A A B"];
        assert_eq!(aaab.0, snaps(&[(2, 6, 2), (5, 6, 2)]));
        assert_eq!((aaab.1, aaab.2, aaab.3), (2, 2, true));
    }

    #[test]
    fn dfs_prunes_monotonically() {
        // Child prefix support never exceeds the parent's.
        struct Check {
            stack: Vec<(usize, u32)>,
        }
        impl DfsObserver for Check {
            fn node(&mut self, info: &NodeInfo<'_>) {
                let depth = info.prefix.len();
                while self.stack.last().is_some_and(|&(d, _)| d >= depth) {
                    self.stack.pop();
                }
                if let Some(&(_, parent)) = self.stack.last() {
                    assert!(info.prefix_support <= parent);
                }
                self.stack.push((depth, info.prefix_support));
            }
        }
        let (dict, db) = example();
        for pattern in ["[c|d]([A^|B=^]+)e", "(.){1,4}", "(A^)*(B^)"] {
            let fst = build(&parse(pattern).unwrap(), &dict).unwrap();
            let mut check = Check { stack: Vec::new() };
            mine_dfs_observed(&db, &fst, &dict, 1, MatchMode::Full, &mut check);
        }
    }
}
