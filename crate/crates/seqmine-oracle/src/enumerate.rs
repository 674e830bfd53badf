//! Direct enumerators for constraint families that have closed-form
//! definitions, written without any automaton: acceptance tests check that
//! pattern-built machines produce exactly these sets.

use std::collections::BTreeSet;

use seqmine::{Dictionary, Fid};

/// All contiguous runs of `t` with length in `min ..= max`.
pub fn contiguous_ngrams(t: &[Fid], min: usize, max: usize) -> BTreeSet<Vec<Fid>> {
    let mut out = BTreeSet::new();
    for start in 0..t.len() {
        for len in min..=max {
            if start + len > t.len() {
                break;
            }
            if len == 0 {
                continue;
            }
            out.insert(t[start..start + len].to_vec());
        }
    }
    out
}

/// All subsequences of `t` with 2 to `max_len` items in which consecutive
/// picks are at most `gap + 1` positions apart (i.e. at most `gap` items
/// skipped between picks).
pub fn gap_bounded_subsequences(t: &[Fid], gap: usize, max_len: usize) -> BTreeSet<Vec<Fid>> {
    let mut out = BTreeSet::new();
    let mut picks = Vec::new();
    for start in 0..t.len() {
        picks.push(t[start]);
        extend_gap_bounded(t, start, gap, max_len, &mut picks, &mut out);
        picks.pop();
    }
    out
}

fn extend_gap_bounded(
    t: &[Fid],
    last: usize,
    gap: usize,
    max_len: usize,
    picks: &mut Vec<Fid>,
    out: &mut BTreeSet<Vec<Fid>>,
) {
    if picks.len() >= 2 {
        out.insert(picks.clone());
    }
    if picks.len() == max_len {
        return;
    }
    for next in last + 1..=(last + 1 + gap).min(t.len().saturating_sub(1)) {
        picks.push(t[next]);
        extend_gap_bounded(t, next, gap, max_len, picks, out);
        picks.pop();
    }
}

/// All length-`n` contiguous runs of `t` with every item independently
/// replaced by itself or any of its ancestors.
pub fn generalized_ngrams(t: &[Fid], dict: &Dictionary, n: usize) -> BTreeSet<Vec<Fid>> {
    let mut out = BTreeSet::new();
    if n == 0 || t.len() < n {
        return out;
    }
    for start in 0..=t.len() - n {
        let mut buf = Vec::new();
        product(&t[start..start + n], dict, &mut buf, &mut out);
    }
    out
}

fn product(window: &[Fid], dict: &Dictionary, buf: &mut Vec<Fid>, out: &mut BTreeSet<Vec<Fid>>) {
    if buf.len() == window.len() {
        out.insert(buf.clone());
        return;
    }
    for a in upward_closure(dict, window[buf.len()]) {
        buf.push(a);
        product(window, dict, buf, out);
        buf.pop();
    }
}

/// All items of `t` lifted through their ancestor sets (helper for the
/// cartesian products above).
fn upward_closure(dict: &Dictionary, w: Fid) -> Vec<Fid> {
    let mut seen = vec![w];
    let mut i = 0;
    while i < seen.len() {
        for &p in dict.parents(seen[i]) {
            if !seen.contains(&p) {
                seen.push(p);
            }
        }
        i += 1;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use seqmine::SequenceDatabase;

    fn ids(v: &[u32]) -> Vec<Fid> {
        v.iter().map(|&x| Fid(x)).collect()
    }

    #[test]
    fn ngrams_cover_all_windows() {
        let t = ids(&[1, 2, 3]);
        let got = contiguous_ngrams(&t, 2, 3);
        let want: BTreeSet<Vec<Fid>> =
            [ids(&[1, 2]), ids(&[2, 3]), ids(&[1, 2, 3])].into_iter().collect();
        assert_eq!(got, want);
        assert!(contiguous_ngrams(&t, 4, 9).is_empty());
    }

    #[test]
    fn gap_bound_limits_the_distance_between_picks() {
        let t = ids(&[1, 2, 3, 4]);
        let got = gap_bounded_subsequences(&t, 1, 2);
        let want: BTreeSet<Vec<Fid>> = [
            ids(&[1, 2]),
            ids(&[1, 3]),
            ids(&[2, 3]),
            ids(&[2, 4]),
            ids(&[3, 4]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn generalized_windows_take_each_item_upward_independently() {
        let mut dict = Dictionary::load_hierarchy("x\tP\ny\tP\n", []).unwrap();
        let mut db = SequenceDatabase::load("x y", &mut dict).unwrap();
        dict.compute_flist(&mut db);
        let t = db.get(0);
        let f = |g: &str| dict.fid(g).unwrap();
        let got = generalized_ngrams(t, &dict, 2);
        let want: BTreeSet<Vec<Fid>> = [
            vec![f("x"), f("y")],
            vec![f("x"), f("P")],
            vec![f("P"), f("y")],
            vec![f("P"), f("P")],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }
}
