//! Watches the dfs miner work: an observer receives every node of the
//! prefix-growth search, including its projected database (sequence,
//! resume position, machine state), how many sequences it still touches,
//! and whether it was expanded or pruned.
//!
//! Run with: `cargo run -p seqmine --example projection [PATTERN] [SIGMA]`

use seqmine::fst::build;
use seqmine::matcher::MatchMode;
use seqmine::mine::{mine_dfs_observed, DfsObserver, NodeInfo};
use seqmine::patex::parse;
use seqmine::{Dictionary, SequenceDatabase};

const HIER: &str = include_str!("../data/example.hier");
const DATA: &str = include_str!("../data/example.dat");

struct Printer<'d> {
    dict: &'d Dictionary,
    nodes: usize,
    pruned: usize,
}

impl DfsObserver for Printer<'_> {
    fn node(&mut self, info: &NodeInfo<'_>) {
        self.nodes += 1;
        let name = if info.prefix.is_empty() {
            "(root)".to_string()
        } else {
            self.dict.render_items(info.prefix)
        };
        let verdict = if info.expanded {
            format!("expanded, accepted by {}", info.support)
        } else {
            self.pruned += 1;
            "pruned".to_string()
        };
        let snapshots: Vec<String> = info
            .snapshots
            .iter()
            .map(|s| format!("(T{} pos {} q{})", s.seq + 1, s.pos, s.state))
            .collect();
        println!(
            "{:indent$}{name}: {} sequences, {verdict}",
            "",
            info.prefix_support,
            indent = 2 * info.prefix.len()
        );
        println!("{:indent$}  {}", "", snapshots.join(" "), indent = 2 * info.prefix.len());
    }
}

fn main() -> seqmine::Result<()> {
    let mut args = std::env::args().skip(1);
    let pattern = args.next().unwrap_or_else(|| "[c|d]([A^|B=^]+)e".to_string());
    let sigma: u64 = args.next().map(|s| s.parse().expect("SIGMA must be a number")).unwrap_or(2);

    let mut dict = Dictionary::load_hierarchy(HIER, [])?;
    let mut db = SequenceDatabase::load(DATA, &mut dict)?;
    dict.compute_flist(&mut db);

    let fst = build(&parse(&pattern)?, &dict)?;

    println!("pattern: {pattern}, threshold: {sigma}");
    println!();
    let mut printer = Printer { dict: &dict, nodes: 0, pruned: 0 };
    let result = mine_dfs_observed(&db, &fst, &dict, sigma, MatchMode::Full, &mut printer);

    println!();
    println!(
        "{} nodes visited, {} pruned, {} frequent sequences:",
        printer.nodes,
        printer.pruned,
        result.len()
    );
    for (s, n) in &result {
        println!("  {} ({n})", dict.render_items(s));
    }
    Ok(())
}
