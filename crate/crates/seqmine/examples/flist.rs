//! Loads the bundled item hierarchy and sequence database, computes
//! document frequencies, and prints the dictionary in frequency order.
//!
//! Run with: `cargo run -p seqmine --example flist`

use seqmine::{Dictionary, SequenceDatabase};

const HIER: &str = include_str!("../data/example.hier");
const DATA: &str = include_str!("../data/example.dat");

fn main() -> seqmine::Result<()> {
    // Hierarchy lines are `child<TAB>parent`; items seen only in the data
    // are registered on the fly while the database loads.
    let mut dict = Dictionary::load_hierarchy(HIER, [])?;
    let mut db = SequenceDatabase::load(DATA, &mut dict)?;

    // Freeze the dictionary: count each item once per sequence it occurs
    // in (an occurrence of an item also counts for all its ancestors) and
    // assign dense integer ids in descending frequency order.
    dict.compute_flist(&mut db);

    println!("{} sequences, {} distinct items", db.len(), dict.len());
    println!();
    println!("item\tfrequency\tancestors");
    for f in dict.fids() {
        let ancestors: Vec<&str> =
            dict.ancestors(f).iter().filter(|&&a| a != f).map(|&a| dict.gid(a)).collect();
        println!("{}\t{}\t\t{}", dict.gid(f), dict.frequency(f), ancestors.join(" "));
    }
    Ok(())
}
