use std::collections::BTreeMap;

use crate::fst::{CFst, StateId, Transition};

/// Removes ε-transitions without changing the generated output sets. Each
/// state absorbs the labeled transitions of everything in its ε-closure and
/// becomes final if its closure contains a final state. State ids are
/// preserved; unreachable leftovers are dropped later by [`normalize`].
pub fn eliminate_epsilon(fst: &CFst) -> CFst {
    let n = fst.num_states();
    let mut out = CFst::new();
    for _ in 0..n {
        out.add_state();
    }
    out.set_initial(fst.initial());
    for q in 0..n as StateId {
        let mut is_final = false;
        let mut trans = Vec::new();
        for p in closure(fst, q) {
            is_final |= fst.is_final(p);
            trans.extend_from_slice(fst.transitions(p));
        }
        trans.sort();
        trans.dedup();
        out.set_final(q, is_final);
        for tr in trans {
            out.add_transition(q, tr.input, tr.output, tr.to);
        }
    }
    out
}

/// The ε-closure of `q` (including `q`), in BFS order.
fn closure(fst: &CFst, q: StateId) -> Vec<StateId> {
    let mut seen = vec![false; fst.num_states()];
    let mut order = vec![q];
    seen[q as usize] = true;
    let mut i = 0;
    while i < order.len() {
        for &to in fst.epsilons(order[i]) {
            if !seen[to as usize] {
                seen[to as usize] = true;
                order.push(to);
            }
        }
        i += 1;
    }
    order
}

/// Shrinks an ε-free machine into a canonical form:
///
/// 1. drop states that are unreachable from the initial state or from which
///    no final state can be reached (the initial state is always kept);
/// 2. repeatedly merge states with identical finality and identical outgoing
///    transition sets;
/// 3. renumber states in BFS discovery order from the initial state,
///    following transitions in sorted label order, and store each state's
///    transitions sorted and deduplicated.
///
/// Two machines that generate the same outputs state-for-state therefore
/// compare equal after normalization, which makes golden tests on the
/// [`CFst::dump`] text meaningful.
pub fn normalize(fst: &CFst) -> CFst {
    debug_assert!(!fst.has_epsilons());
    let trimmed = trim(fst);
    let merged = merge_equivalent(&trimmed);
    renumber(&merged)
}

fn trim(fst: &CFst) -> CFst {
    let n = fst.num_states();
    let mut reach = vec![false; n];
    let mut stack = vec![fst.initial()];
    reach[fst.initial() as usize] = true;
    while let Some(q) = stack.pop() {
        for tr in fst.transitions(q) {
            if !reach[tr.to as usize] {
                reach[tr.to as usize] = true;
                stack.push(tr.to);
            }
        }
    }
    let mut coreach = vec![false; n];
    let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for q in 0..n as StateId {
        for tr in fst.transitions(q) {
            rev[tr.to as usize].push(q);
        }
    }
    let mut stack: Vec<StateId> = fst.finals().collect();
    for &q in &stack {
        coreach[q as usize] = true;
    }
    while let Some(q) = stack.pop() {
        for &p in &rev[q as usize] {
            if !coreach[p as usize] {
                coreach[p as usize] = true;
                stack.push(p);
            }
        }
    }

    let mut remap = vec![u32::MAX; n];
    let mut out = CFst::new();
    for q in 0..n {
        if (reach[q] && coreach[q]) || q == fst.initial() as usize {
            remap[q] = out.add_state();
        }
    }
    out.set_initial(remap[fst.initial() as usize]);
    for q in 0..n {
        if remap[q] == u32::MAX {
            continue;
        }
        out.set_final(remap[q], fst.is_final(q as StateId));
        for tr in fst.transitions(q as StateId) {
            if remap[tr.to as usize] != u32::MAX {
                out.add_transition(remap[q], tr.input, tr.output, remap[tr.to as usize]);
            }
        }
    }
    out
}

fn merge_equivalent(fst: &CFst) -> CFst {
    let mut cur = fst.clone();
    loop {
        let n = cur.num_states();
        // Signature → lowest state id carrying it; non-representative
        // states are dropped and every edge re-targeted, which can make
        // further states identical — hence the fixpoint loop. Each round
        // removes at least one state, so it terminates.
        let mut reps: BTreeMap<(bool, Vec<Transition>), StateId> = BTreeMap::new();
        let mut rep_of = vec![0 as StateId; n];
        for q in 0..n as StateId {
            let mut sig = cur.transitions(q).to_vec();
            sig.sort();
            sig.dedup();
            rep_of[q as usize] = *reps.entry((cur.is_final(q), sig)).or_insert(q);
        }
        if reps.len() == n {
            return cur;
        }
        let mut compact = vec![u32::MAX; n];
        let mut next = CFst::new();
        for q in 0..n {
            if rep_of[q] == q as StateId {
                compact[q] = next.add_state();
            }
        }
        let renamed = |q: StateId| compact[rep_of[q as usize] as usize];
        next.set_initial(renamed(cur.initial()));
        for q in 0..n as StateId {
            if rep_of[q as usize] != q {
                continue;
            }
            next.set_final(renamed(q), cur.is_final(q));
            for tr in cur.transitions(q) {
                next.add_transition(renamed(q), tr.input, tr.output, renamed(tr.to));
            }
        }
        cur = next;
    }
}

/// Canonical BFS renumbering; drops states no longer reachable (merging can
/// orphan the non-representative copies).
fn renumber(fst: &CFst) -> CFst {
    let n = fst.num_states();
    let mut remap = vec![u32::MAX; n];
    let mut order = vec![fst.initial()];
    remap[fst.initial() as usize] = 0;
    let mut i = 0;
    while i < order.len() {
        let mut trans = fst.transitions(order[i]).to_vec();
        trans.sort();
        for tr in trans {
            if remap[tr.to as usize] == u32::MAX {
                remap[tr.to as usize] = order.len() as StateId;
                order.push(tr.to);
            }
        }
        i += 1;
    }
    let mut out = CFst::new();
    for _ in 0..order.len() {
        out.add_state();
    }
    out.set_initial(0);
    for (new_q, &old_q) in order.iter().enumerate() {
        out.set_final(new_q as StateId, fst.is_final(old_q));
        let mut trans: Vec<_> = fst
            .transitions(old_q)
            .iter()
            .map(|tr| (tr.input, tr.output, remap[tr.to as usize]))
            .collect();
        trans.sort();
        trans.dedup();
        for (input, output, to) in trans {
            out.add_transition(new_q as StateId, input, output, to);
        }
    }
    out
}
