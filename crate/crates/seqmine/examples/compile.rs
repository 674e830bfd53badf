//! Compiles a pattern expression into its finite-state transducer and
//! prints the machine twice: as a tab-separated transition table and as
//! Graphviz DOT (pipe the second part into `dot -Tsvg` to draw it).
//!
//! Run with: `cargo run -p seqmine --example compile [PATTERN]`

use seqmine::fst::{build, to_dot};
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

    // Parse → compile → ε-eliminate → trim, merge, and renumber. The
    // resulting machine is compact: transition labels stand for whole
    // families of items ("any descendant of A, output the matched item
    // generalized to A") instead of one edge per item.
    let ast = parse(&pattern)?;
    let fst = build(&ast, &dict)?;

    println!("pattern: {pattern}");
    println!();
    println!("{}", fst.dump(&dict));
    println!("{}", to_dot(&fst, &dict));
    Ok(())
}
