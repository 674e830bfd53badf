//! Sequence database: one input sequence per line, items as
//! whitespace-separated gids.

use std::collections::HashSet;

use crate::dictionary::{Dictionary, Fid};
use crate::error::{Error, Result};

/// A sequence of items, encoded as fids.
pub type Sequence = Vec<Fid>;

/// Summary statistics of a database.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DbStats {
    pub sequences: usize,
    pub total_items: usize,
    pub max_len: usize,
    pub distinct_items: usize,
}

impl DbStats {
    /// Mean sequence length; 0 for an empty database.
    pub fn avg_len(&self) -> f64 {
        if self.sequences == 0 {
            0.0
        } else {
            self.total_items as f64 / self.sequences as f64
        }
    }
}

/// In-memory list of sequences. Sequence ids are ingestion order (0-based).
#[derive(Clone, Debug, Default)]
pub struct SequenceDatabase {
    sequences: Vec<Sequence>,
}

impl SequenceDatabase {
    /// Loads one sequence per line. Empty lines are retained as empty
    /// sequences. Unknown gids are auto-registered as hierarchy roots while
    /// `dict` is unfrozen and rejected (naming line and token) once frozen.
    pub fn load(text: &str, dict: &mut Dictionary) -> Result<SequenceDatabase> {
        let mut sequences = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let mut seq = Sequence::new();
            for token in line.split_whitespace() {
                let f = match dict.fid(token) {
                    Some(f) => f,
                    None if !dict.is_frozen() => dict.intern(token),
                    None => {
                        return Err(Error::UnknownItem { line: i + 1, token: token.to_string() })
                    }
                };
                seq.push(f);
            }
            sequences.push(seq);
        }
        Ok(SequenceDatabase { sequences })
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn get(&self, i: usize) -> &[Fid] {
        &self.sequences[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Sequence> {
        self.sequences.iter()
    }

    pub(crate) fn recode(&mut self, new_fid: &[Fid]) {
        for seq in &mut self.sequences {
            for item in seq {
                *item = new_fid[item.get() as usize - 1];
            }
        }
    }

    pub fn stats(&self) -> DbStats {
        let mut distinct: HashSet<Fid> = HashSet::new();
        let mut total = 0;
        let mut max = 0;
        for seq in &self.sequences {
            total += seq.len();
            max = max.max(seq.len());
            distinct.extend(seq.iter().copied());
        }
        DbStats {
            sequences: self.sequences.len(),
            total_items: total,
            max_len: max,
            distinct_items: distinct.len(),
        }
    }
}
