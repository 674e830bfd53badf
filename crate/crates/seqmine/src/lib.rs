/*!
Frequent sequence mining with pattern-expression constraints.

This crate mines frequent subsequences from a database of sequences whose
items are organized in a hierarchy (for example `a1` is-a `A`). Which
subsequences qualify is controlled by a *pattern expression*, a small
regex-like language over items:

* `A` matches any item that is-a `A`, `A=` matches exactly `A`,
* `.` matches any item,
* `(...)` captures output (only captured positions produce output items),
* `A^` additionally generalizes the matched item upward in the hierarchy,
  `A=^` forces generalization to `A` itself,
* `[...]` groups, `|` alternates, and `?`, `*`, `+`, `{n,m}` repeat.

A pattern expression is compiled into a compact finite-state transducer
whose transitions carry symbolic labels (`descendants-of-A : matched item
generalized up to A`), so the machine stays small even for large
hierarchies. Three interchangeable miners run over that machine:

* `naive`: generate every qualifying subsequence of every input sequence
  and count them,
* `count`: like `naive` but prunes any generated item that is globally
  infrequent,
* `dfs`: a pattern-growth search that expands a prefix tree of outputs and
  resumes partial machine runs stored in compressed projected databases.

All three produce identical results; the oracle crate in this workspace
re-derives them by brute force over the expanded (symbol-free) machine.

# Quick start

```
use seqmine::{Dictionary, SequenceDatabase, matcher::MatchMode, mine};

let hier = "a1\tA\na2\tA\nb1\tB\nb2\tB\nb11\tb1\nb12\tb1\n";
let data = "c a1 b12 e\na1 b2 e\nd a2 a1 a2 b11 e\nd a1 B e\ne a1 b2 d\nc a1 a1 a1 b2 e\n";

let mut dict = Dictionary::load_hierarchy(hier, []).unwrap();
let mut db = SequenceDatabase::load(data, &mut dict).unwrap();
dict.compute_flist(&mut db);

let ast = seqmine::patex::parse("[c|d]([A^|B=^]+)e").unwrap();
let fst = seqmine::fst::build(&ast, &dict).unwrap();
let found = mine::mine_dfs(&db, &fst, &dict, 2, MatchMode::Full);
assert_eq!(found.len(), 4);
```

Runnable end-to-end programs live in `examples/`; the `seqmine` binary
exposes the same pipeline as `mine`, `match`, `compile` and `stats`
subcommands.
*/

pub mod cli;
pub mod dictionary;
mod error;
pub mod fst;
pub mod matcher;
pub mod mine;
pub mod patex;
pub mod seqdb;
#[cfg(test)]
mod testutil;

pub use dictionary::{Dictionary, Fid};
pub use error::{Error, Result};
pub use seqdb::{Sequence, SequenceDatabase};
