//! Byte-packed projected databases.
//!
//! A posting list stores `(sequence, position, state)` snapshots grouped by
//! sequence, as LEB128 varints: the first group opens with `seq + 1`, later
//! groups with a `0` terminator followed by the gap to the previous
//! sequence id, and inside a group each snapshot is `state + 1` then `pos`.
//! Snapshots must be appended in nondecreasing sequence order; duplicates
//! within a group are dropped on append.

use crate::fst::StateId;

pub(crate) fn write_varint(buf: &mut Vec<u8>, mut v: u32) {
    while v >= 0x80 {
        buf.push((v as u8 & 0x7f) | 0x80);
        v >>= 7;
    }
    buf.push(v as u8);
}

pub(crate) fn read_varint(bytes: &[u8], pos: &mut usize) -> u32 {
    let mut v = 0u32;
    let mut shift = 0;
    loop {
        let b = bytes[*pos];
        *pos += 1;
        v |= u32::from(b & 0x7f) << shift;
        if b < 0x80 {
            return v;
        }
        shift += 7;
    }
}

/// A resumable match state: sequence `seq` (0-based database index) was
/// consumed up to position `pos` (1-based, next unread item) with the
/// machine in `state`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Snapshot {
    pub seq: u32,
    pub pos: u32,
    pub state: StateId,
}

#[derive(Clone, Debug, Default)]
pub struct PostingList {
    bytes: Vec<u8>,
    groups: u32,
    last_seq: Option<u32>,
    /// (pos, state) pairs of the currently open group, for deduplication.
    current: Vec<(u32, StateId)>,
}

impl PostingList {
    pub fn new() -> PostingList {
        PostingList::default()
    }

    /// Appends a snapshot; returns false if it was already present in the
    /// open group. Panics in debug builds if `seq` decreases.
    pub fn push(&mut self, snap: Snapshot) -> bool {
        match self.last_seq {
            Some(prev) if prev == snap.seq => {
                if self.current.contains(&(snap.pos, snap.state)) {
                    return false;
                }
            }
            Some(prev) => {
                debug_assert!(snap.seq > prev);
                write_varint(&mut self.bytes, 0);
                write_varint(&mut self.bytes, snap.seq - prev);
                self.groups += 1;
                self.current.clear();
            }
            None => {
                write_varint(&mut self.bytes, snap.seq + 1);
                self.groups = 1;
            }
        }
        self.last_seq = Some(snap.seq);
        self.current.push((snap.pos, snap.state));
        write_varint(&mut self.bytes, snap.state + 1);
        write_varint(&mut self.bytes, snap.pos);
        true
    }

    /// Number of distinct sequences with at least one snapshot — an upper
    /// bound on how often the associated prefix can still be counted.
    pub fn prefix_support(&self) -> u32 {
        self.groups
    }

    pub fn is_empty(&self) -> bool {
        self.groups == 0
    }

    pub fn byte_size(&self) -> usize {
        self.bytes.len()
    }

    pub fn iter(&self) -> PostingIter<'_> {
        PostingIter { bytes: &self.bytes, at: 0, seq: 0, opened: false }
    }
}

impl<'a> IntoIterator for &'a PostingList {
    type Item = Snapshot;
    type IntoIter = PostingIter<'a>;

    fn into_iter(self) -> PostingIter<'a> {
        self.iter()
    }
}

pub struct PostingIter<'a> {
    bytes: &'a [u8],
    at: usize,
    seq: u32,
    opened: bool,
}

impl Iterator for PostingIter<'_> {
    type Item = Snapshot;

    fn next(&mut self) -> Option<Snapshot> {
        loop {
            if self.at >= self.bytes.len() {
                return None;
            }
            let v = read_varint(self.bytes, &mut self.at);
            if !self.opened {
                self.seq = v - 1;
                self.opened = true;
                continue;
            }
            if v == 0 {
                self.seq += read_varint(self.bytes, &mut self.at);
                continue;
            }
            let pos = read_varint(self.bytes, &mut self.at);
            return Some(Snapshot { seq: self.seq, pos, state: v - 1 });
        }
    }
}
