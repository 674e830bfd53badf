//! Item dictionary: gid/fid mapping, the item hierarchy, and document
//! frequencies.
//!
//! Items are identified externally by string *gids* and internally by dense
//! numeric *fids* `1..=n`. Fids are provisional (registration order) until
//! [`Dictionary::compute_flist`] freezes the dictionary, after which
//! `fid(u) < fid(v)` iff `u` is more frequent than `v`, ties broken by
//! lexicographic gid. The hierarchy is a DAG of `child -> parent` edges;
//! `ancestors`/`descendants` are reflexive-transitive closures, memoized on
//! first use.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::seqdb::SequenceDatabase;

/// Dense 1-based item id. Ordering is meaningful only after
/// [`Dictionary::compute_flist`]: smaller fid means more frequent.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fid(pub u32);

impl Fid {
    pub fn get(self) -> u32 {
        self.0
    }

    fn idx(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Debug for Fid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fid({})", self.0)
    }
}

#[derive(Debug)]
struct ItemData {
    gid: String,
    parents: Vec<Fid>,
    children: Vec<Fid>,
    frequency: u64,
    anc: OnceLock<Box<[Fid]>>,
    desc: OnceLock<Box<[Fid]>>,
}

impl ItemData {
    fn new(gid: String) -> Self {
        ItemData {
            gid,
            parents: Vec::new(),
            children: Vec::new(),
            frequency: 0,
            anc: OnceLock::new(),
            desc: OnceLock::new(),
        }
    }
}

/// Item vocabulary plus hierarchy plus (after freezing) the frequency list.
///
/// Construction is single-threaded; after `compute_flist` the dictionary is
/// immutable and safe to share read-only across threads.
#[derive(Debug)]
pub struct Dictionary {
    items: Vec<ItemData>,
    index: HashMap<String, Fid>,
    frozen: bool,
}

impl Default for Dictionary {
    fn default() -> Self {
        Self::new()
    }
}

impl Dictionary {
    pub fn new() -> Self {
        Dictionary { items: Vec::new(), index: HashMap::new(), frozen: false }
    }

    /// Parses `child<TAB>parent` lines. Lines starting with `#` and blank
    /// lines are skipped; duplicate edges are ignored; items named only in
    /// `vocabulary` are registered without edges. Rejects cyclic hierarchies.
    pub fn load_hierarchy<'a, I>(text: &str, vocabulary: I) -> Result<Dictionary>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut dict = Dictionary::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split('\t');
            let (child, parent) = match (fields.next(), fields.next(), fields.next()) {
                (Some(c), Some(p), None) if !c.is_empty() && !p.is_empty() => (c, p),
                _ => {
                    return Err(Error::HierarchyFormat {
                        line: i + 1,
                        msg: format!("expected child<TAB>parent, got '{line}'"),
                    })
                }
            };
            let c = dict.intern(child);
            let p = dict.intern(parent);
            dict.add_edge(c, p);
        }
        for gid in vocabulary {
            dict.intern(gid);
        }
        dict.check_acyclic()?;
        Ok(dict)
    }

    /// Registers `gid` if absent and returns its (provisional) fid.
    pub(crate) fn intern(&mut self, gid: &str) -> Fid {
        debug_assert!(!self.frozen, "cannot add items to a frozen dictionary");
        if let Some(&f) = self.index.get(gid) {
            return f;
        }
        let f = Fid(self.items.len() as u32 + 1);
        self.items.push(ItemData::new(gid.to_string()));
        self.index.insert(gid.to_string(), f);
        f
    }

    fn add_edge(&mut self, child: Fid, parent: Fid) {
        if self.items[child.idx()].parents.contains(&parent) {
            return;
        }
        self.items[child.idx()].parents.push(parent);
        self.items[parent.idx()].children.push(child);
    }

    fn check_acyclic(&self) -> Result<()> {
        // Iterative 3-color DFS over parent edges; a gray hit names the item.
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = vec![WHITE; self.items.len()];
        for start in 0..self.items.len() {
            if color[start] != WHITE {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = GRAY;
            while let Some(&mut (node, ref mut next)) = stack.last_mut() {
                if let Some(&p) = self.items[node].parents.get(*next) {
                    *next += 1;
                    match color[p.idx()] {
                        WHITE => {
                            color[p.idx()] = GRAY;
                            stack.push((p.idx(), 0));
                        }
                        GRAY => {
                            return Err(Error::HierarchyCycle {
                                gid: self.items[p.idx()].gid.clone(),
                            })
                        }
                        _ => {}
                    }
                } else {
                    color[node] = BLACK;
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    /// Counts per-item document frequencies over `db` (an occurrence of any
    /// descendant counts, each sequence at most once per item), reassigns
    /// fids in descending-frequency order (ties: lexicographic gid), recodes
    /// `db` to the new fids, and freezes the dictionary.
    pub fn compute_flist(&mut self, db: &mut SequenceDatabase) {
        let n = self.items.len();
        let mut freq = vec![0u64; n];
        let mut stamp = vec![0u32; n];
        let mut gen = 0u32;
        for seq in db.iter() {
            gen += 1;
            for &t in seq {
                for &a in self.ancestors(t) {
                    if stamp[a.idx()] != gen {
                        stamp[a.idx()] = gen;
                        freq[a.idx()] += 1;
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            freq[b].cmp(&freq[a]).then_with(|| self.items[a].gid.cmp(&self.items[b].gid))
        });
        let mut new_fid = vec![Fid(0); n];
        for (rank, &old) in order.iter().enumerate() {
            new_fid[old] = Fid(rank as u32 + 1);
        }

        let old_items = std::mem::take(&mut self.items);
        let mut new_items: Vec<ItemData> = Vec::with_capacity(n);
        let remap = |v: &[Fid]| {
            let mut out: Vec<Fid> = v.iter().map(|f| new_fid[f.idx()]).collect();
            out.sort_unstable();
            out
        };
        for &old in &order {
            let item = &old_items[old];
            new_items.push(ItemData {
                gid: item.gid.clone(),
                parents: remap(&item.parents),
                children: remap(&item.children),
                frequency: freq[old],
                anc: OnceLock::new(),
                desc: OnceLock::new(),
            });
        }
        self.items = new_items;
        self.index = self
            .items
            .iter()
            .enumerate()
            .map(|(i, it)| (it.gid.clone(), Fid(i as u32 + 1)))
            .collect();
        db.recode(&new_fid);
        self.frozen = true;
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn is_frozen(&self) -> bool {
        self.frozen
    }

    pub fn fid(&self, gid: &str) -> Option<Fid> {
        self.index.get(gid).copied()
    }

    pub fn gid(&self, w: Fid) -> &str {
        &self.items[w.idx()].gid
    }

    /// Document frequency of `w`; zero until the dictionary is frozen.
    pub fn frequency(&self, w: Fid) -> u64 {
        self.items[w.idx()].frequency
    }

    pub fn parents(&self, w: Fid) -> &[Fid] {
        &self.items[w.idx()].parents
    }

    /// All fids in ascending order.
    pub fn fids(&self) -> impl Iterator<Item = Fid> {
        (1..=self.items.len() as u32).map(Fid)
    }

    /// Reflexive-transitive upward closure of `w` in BFS order starting at
    /// `w` itself. The order is fixed so that traces are reproducible.
    pub fn ancestors(&self, w: Fid) -> &[Fid] {
        self.items[w.idx()].anc.get_or_init(|| self.closure(w, |d, f| d.parents(f)))
    }

    /// Reflexive-transitive downward closure of `w` in BFS order.
    pub fn descendants(&self, w: Fid) -> &[Fid] {
        self.items[w.idx()]
            .desc
            .get_or_init(|| self.closure(w, |d, f| &d.items[f.idx()].children))
    }

    /// True iff `anc` generalizes `item` (reflexively).
    pub fn is_ancestor_of(&self, anc: Fid, item: Fid) -> bool {
        self.ancestors(item).contains(&anc)
    }

    fn closure(&self, w: Fid, step: impl Fn(&Self, Fid) -> &[Fid]) -> Box<[Fid]> {
        let mut order = vec![w];
        let mut i = 0;
        while i < order.len() {
            let cur = order[i];
            for &nxt in step(self, cur) {
                if !order.contains(&nxt) {
                    order.push(nxt);
                }
            }
            i += 1;
        }
        order.into_boxed_slice()
    }

    /// Frequency list as `gid<TAB>frequency` lines in descending frequency
    /// (ties: lexicographic gid).
    pub fn export_flist(&self) -> String {
        let mut out = String::new();
        for f in self.fids() {
            out.push_str(self.gid(f));
            out.push('\t');
            out.push_str(&self.frequency(f).to_string());
            out.push('\n');
        }
        out
    }

    /// Renders a fid sequence as space-separated gids.
    pub fn render_items(&self, seq: &[Fid]) -> String {
        let gids: Vec<&str> = seq.iter().map(|&f| self.gid(f)).collect();
        gids.join(" ")
    }
}
