//! Mines the bundled database for frequent pattern-constrained
//! subsequences with all three algorithms and shows that they agree.
//!
//! `naive` generates every output of every sequence and counts;
//! `count` prunes infrequent items while generating, then counts;
//! `dfs` grows outputs item by item, projecting the database onto each
//! prefix and pruning whole subtrees that can no longer reach the
//! support threshold.
//!
//! Run with: `cargo run -p seqmine --example mining [PATTERN] [SIGMA]`

use seqmine::fst::build;
use seqmine::matcher::MatchMode;
use seqmine::mine::{mine_count, mine_dfs, mine_naive, render_patterns};
use seqmine::patex::parse;
use seqmine::{Dictionary, SequenceDatabase};

const HIER: &str = include_str!("../data/example.hier");
const DATA: &str = include_str!("../data/example.dat");

fn main() -> seqmine::Result<()> {
    let mut args = std::env::args().skip(1);
    let pattern = args.next().unwrap_or_else(|| "[c|d]([A^|B=^]+)e".to_string());
    let sigma: u64 = args.next().map(|s| s.parse().expect("SIGMA must be a number")).unwrap_or(2);

    let mut dict = Dictionary::load_hierarchy(HIER, [])?;
    let mut db = SequenceDatabase::load(DATA, &mut dict)?;
    dict.compute_flist(&mut db);

    let fst = build(&parse(&pattern)?, &dict)?;

    let naive = mine_naive(&db, &fst, &dict, sigma, MatchMode::Full);
    let count = mine_count(&db, &fst, &dict, sigma, MatchMode::Full);
    let dfs = mine_dfs(&db, &fst, &dict, sigma, MatchMode::Full);
    assert_eq!(naive, count);
    assert_eq!(naive, dfs);

    println!("pattern: {pattern}, threshold: {sigma}");
    println!("{} frequent sequences (all three algorithms agree)", dfs.len());
    println!();
    print!("{}", render_patterns(&dfs, &dict));
    Ok(())
}
