use crate::dictionary::Dictionary;
use crate::fst::{CFst, StateId};

/// Renders the machine as a Graphviz digraph. States appear in id order
/// and edges in sorted label order, so output is byte-stable for a given
/// machine. Edge labels read `input:output`, with `-` for ε.
pub fn to_dot(fst: &CFst, dict: &Dictionary) -> String {
    let mut out = String::from("digraph fst {\n    rankdir=LR;\n    start [shape=point];\n");
    for q in 0..fst.num_states() as StateId {
        let shape = if fst.is_final(q) { "doublecircle" } else { "circle" };
        out.push_str(&format!("    q{q} [shape={shape}];\n"));
    }
    out.push_str(&format!("    start -> q{};\n", fst.initial()));
    for q in 0..fst.num_states() as StateId {
        let mut trans = fst.transitions(q).to_vec();
        trans.sort();
        trans.dedup();
        for tr in trans {
            out.push_str(&format!(
                "    q{q} -> q{} [label=\"{}\"];\n",
                tr.to,
                escape(&format!("{}:{}", tr.input.render(dict), tr.output.render(dict)))
            ));
        }
        let mut eps = fst.epsilons(q).to_vec();
        eps.sort();
        eps.dedup();
        for to in eps {
            out.push_str(&format!("    q{q} -> q{to} [label=\"-\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}
