//! Shows what a pattern generates from each sequence of the bundled
//! database: the captured, possibly generalized subsequences that the
//! pattern's transducer outputs for that input.
//!
//! Run with: `cargo run -p seqmine --example matching [PATTERN]`

use seqmine::fst::build;
use seqmine::matcher::{generate, MatchMode};
use seqmine::patex::parse;
use seqmine::{Dictionary, SequenceDatabase};

const HIER: &str = include_str!("../data/example.hier");
const DATA: &str = include_str!("../data/example.dat");

fn main() -> seqmine::Result<()> {
    let pattern =
        std::env::args().nth(1).unwrap_or_else(|| "[c|d]([A^|B=^]+)e".to_string());

    let mut dict = Dictionary::load_hierarchy(HIER, [])?;
    let mut db = SequenceDatabase::load(DATA, &mut dict)?;
    dict.compute_flist(&mut db);

    let fst = build(&parse(&pattern)?, &dict)?;

    println!("pattern: {pattern}");
    println!();
    for (i, t) in db.iter().enumerate() {
        println!("T{}: {}", i + 1, dict.render_items(t));
        let outputs = generate(&fst, t, &dict, MatchMode::Full);
        if outputs.is_empty() {
            println!("    (no match)");
        }
        for s in outputs {
            println!("    -> {}", dict.render_items(&s));
        }
    }
    Ok(())
}
