//! Classic subsequence constraints are all just pattern expressions.
//! This example mines the bundled database under several well-known
//! constraint families by writing each one as a pattern:
//!
//! - contiguous n-grams:            `(.){1,3}`
//! - bounded-gap subsequences:      `(.)[.{0,1}(.)]{1,2}`
//! - unbounded-gap subsequences:    `[.*(.)]{1,3}`
//! - generalized bigrams:           `(.^){2}`
//! - items in a fixed context:      `c[.*(A)]+e`
//!
//! Every pattern is matched anywhere in a sequence by prepending an
//! uncaptured `.*` and stopping at any accepting state (partial mode).
//!
//! Run with: `cargo run -p seqmine --example constraints`

use seqmine::fst::build;
use seqmine::matcher::MatchMode;
use seqmine::mine::{mine_dfs, render_patterns};
use seqmine::patex::{parse, PatternAst};
use seqmine::{Dictionary, SequenceDatabase};

const HIER: &str = include_str!("../data/example.hier");
const DATA: &str = include_str!("../data/example.dat");

fn main() -> seqmine::Result<()> {
    let mut dict = Dictionary::load_hierarchy(HIER, [])?;
    let mut db = SequenceDatabase::load(DATA, &mut dict)?;
    dict.compute_flist(&mut db);

    let families = [
        ("contiguous n-grams, n ≤ 3", "(.){1,3}", 3u64),
        ("pairs and triples, gap ≤ 1", "(.)[.{0,1}(.)]{1,2}", 3),
        ("subsequences, any gaps, ≤ 3 items", "[.*(.)]{1,3}", 4),
        ("generalized bigrams", "(.^){2}", 4),
        ("occurrences of A between c and e", "c[.*(A)]+e", 2),
    ];

    for (name, pattern, sigma) in families {
        // `.*` + partial mode turn an anchored pattern into
        // match-anywhere.
        let ast = PatternAst::Concat(vec![
            PatternAst::Star(Box::new(PatternAst::Wildcard { generalize: false })),
            parse(pattern)?,
        ]);
        let fst = build(&ast, &dict)?;
        let result = mine_dfs(&db, &fst, &dict, sigma, MatchMode::Partial);

        println!("== {name}: pattern `{pattern}`, threshold {sigma}");
        print!("{}", render_patterns(&result, &dict));
        println!();
    }
    Ok(())
}
