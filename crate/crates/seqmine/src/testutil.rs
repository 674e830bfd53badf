//! Shared fixtures for in-crate tests.

use crate::dictionary::{Dictionary, Fid};
use crate::seqdb::SequenceDatabase;

pub(crate) const EX_HIER: &str = include_str!("../data/example.hier");
pub(crate) const EX_DATA: &str = include_str!("../data/example.dat");

/// The bundled example database, loaded and frozen.
pub(crate) fn example() -> (Dictionary, SequenceDatabase) {
    let mut dict = Dictionary::load_hierarchy(EX_HIER, []).unwrap();
    let mut db = SequenceDatabase::load(EX_DATA, &mut dict).unwrap();
    dict.compute_flist(&mut db);
    (dict, db)
}

pub(crate) fn fid_of(dict: &Dictionary, gid: &str) -> Fid {
    dict.fid(gid).unwrap_or_else(|| panic!("unknown gid {gid}"))
}

/// Encodes a space-separated gid string.
pub(crate) fn seq_of(dict: &Dictionary, text: &str) -> Vec<Fid> {
    text.split_whitespace().map(|g| fid_of(dict, g)).collect()
}
