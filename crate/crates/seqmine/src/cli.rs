//! Shared pipeline behind the command-line binary: load hierarchy and data,
//! freeze the dictionary, compile the pattern, run one of the engines, and
//! format the output. Kept in the library so integration tests and the
//! examples can drive exactly what the binary does.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::dictionary::Dictionary;
use crate::error::{Error, Result};
use crate::fst::{self, CFst};
use crate::matcher::{self, MatchMode};
use crate::mine;
use crate::patex::{self, PatternAst};
use crate::seqdb::SequenceDatabase;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Algorithm {
    Naive,
    Count,
    #[default]
    Dfs,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Naive => "naive",
            Algorithm::Count => "count",
            Algorithm::Dfs => "dfs",
        })
    }
}

/// Everything a command needs; commands ignore fields that do not apply.
#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    /// Sequence database (one whitespace-separated sequence per line).
    pub data: Option<PathBuf>,
    /// Hierarchy edges (`child<TAB>parent` per line); optional — items
    /// then come from the data alone, with no generalization structure.
    pub hierarchy: Option<PathBuf>,
    pub pattern: Option<String>,
    pub sigma: Option<u64>,
    pub algorithm: Algorithm,
    /// Allow matches to start and end anywhere inside a sequence.
    pub partial: bool,
    /// Where to write the Graphviz rendering (compile only).
    pub dot: Option<PathBuf>,
}

/// Mines frequent subsequences. Output: a `#` header naming the inputs
/// (pattern, σ, algorithm, SHA-256 of the data file) followed by
/// `pattern<TAB>support` lines, most frequent first.
pub fn cmd_mine(cfg: &RunConfig) -> Result<String> {
    let pattern = required(&cfg.pattern, "pattern")?;
    let sigma = cfg.sigma.ok_or_else(|| usage("--sigma is required"))?;
    if sigma == 0 {
        return Err(usage("--sigma must be at least 1"));
    }
    let data_path = required(&cfg.data, "data")?;
    let (dict, db, data_text) = load_dataset(Some(data_path.as_path()), cfg.hierarchy.as_deref())?;
    let machine = build_machine(pattern, &dict, cfg.partial)?;
    let mode = mode_of(cfg);
    let result = match cfg.algorithm {
        Algorithm::Naive => mine::mine_naive(&db, &machine, &dict, sigma, mode),
        Algorithm::Count => mine::mine_count(&db, &machine, &dict, sigma, mode),
        Algorithm::Dfs => mine::mine_dfs(&db, &machine, &dict, sigma, mode),
    };
    let mut out = format!(
        "# pattern={} sigma={} algorithm={} data-sha256={}\n",
        pattern,
        sigma,
        cfg.algorithm,
        short_sha256(&data_text)
    );
    out.push_str(&mine::render_patterns(&result, &dict));
    Ok(out)
}

/// Prints, for every input sequence that generates at least one
/// subsequence, one `subsequence<TAB>line-number` row (line numbers are
/// 1-based; rows for one line are sorted).
pub fn cmd_match(cfg: &RunConfig) -> Result<String> {
    let pattern = required(&cfg.pattern, "pattern")?;
    let data_path = required(&cfg.data, "input")?;
    let (dict, db, _) = load_dataset(Some(data_path.as_path()), cfg.hierarchy.as_deref())?;
    let machine = build_machine(pattern, &dict, cfg.partial)?;
    let mode = mode_of(cfg);
    let mut out = String::new();
    for (i, t) in db.iter().enumerate() {
        let set = match cfg.sigma {
            Some(sigma) => matcher::generate_filtered(&machine, t, &dict, mode, sigma),
            None => matcher::generate(&machine, t, &dict, mode),
        };
        for s in set {
            out.push_str(&format!("{}\t{}\n", dict.render_items(&s), i + 1));
        }
    }
    Ok(out)
}

/// Compiles the pattern and prints the machine in its textual form;
/// optionally also writes a Graphviz rendering.
pub fn cmd_compile(cfg: &RunConfig) -> Result<String> {
    let pattern = required(&cfg.pattern, "pattern")?;
    let (dict, _, _) = load_dataset(cfg.data.as_deref(), cfg.hierarchy.as_deref())?;
    let machine = build_machine(pattern, &dict, cfg.partial)?;
    if let Some(path) = &cfg.dot {
        fs::write(path, fst::to_dot(&machine, &dict))?;
    }
    Ok(machine.dump(&dict))
}

/// Prints database statistics as `name<TAB>value` lines.
pub fn cmd_stats(cfg: &RunConfig) -> Result<String> {
    let data_path = required(&cfg.data, "data")?;
    let (_, db, _) = load_dataset(Some(data_path.as_path()), cfg.hierarchy.as_deref())?;
    let stats = db.stats();
    Ok(format!(
        "sequences\t{}\ntotal items\t{}\navg length\t{:.1}\nmax length\t{}\ndistinct items\t{}\n",
        stats.sequences,
        stats.total_items,
        stats.avg_len(),
        stats.max_len,
        stats.distinct_items
    ))
}

fn mode_of(cfg: &RunConfig) -> MatchMode {
    if cfg.partial {
        MatchMode::Partial
    } else {
        MatchMode::Full
    }
}

fn usage(msg: &str) -> Error {
    Error::Usage(msg.to_string())
}

fn required<'a, T>(field: &'a Option<T>, name: &str) -> Result<&'a T> {
    field.as_ref().ok_or_else(|| usage(&format!("--{name} is required")))
}

/// Loads and freezes the dataset. Items mentioned only in the hierarchy or
/// only in the data are both fine; frequencies and item ids come from the
/// data via the hierarchy.
fn load_dataset(
    data: Option<&Path>,
    hierarchy: Option<&Path>,
) -> Result<(Dictionary, SequenceDatabase, String)> {
    let hier_text = match hierarchy {
        Some(p) => fs::read_to_string(p)?,
        None => String::new(),
    };
    let data_text = match data {
        Some(p) => fs::read_to_string(p)?,
        None => String::new(),
    };
    let mut dict = Dictionary::load_hierarchy(&hier_text, [])?;
    let mut db = SequenceDatabase::load(&data_text, &mut dict)?;
    dict.compute_flist(&mut db);
    Ok((dict, db, data_text))
}

/// Parses the pattern; in partial mode the machine gets an uncaptured
/// any-item prefix so matches may start anywhere (the matcher's partial
/// mode supplies "end anywhere").
fn build_machine(pattern: &str, dict: &Dictionary, partial: bool) -> Result<CFst> {
    let ast = patex::parse(pattern)?;
    let ast = if partial {
        PatternAst::Concat(vec![
            PatternAst::Star(Box::new(PatternAst::Wildcard { generalize: false })),
            ast,
        ])
    } else {
        ast
    };
    fst::build(&ast, dict)
}

fn short_sha256(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    let mut out = String::with_capacity(16);
    for b in &digest[..8] {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    fn write_temp(name: &str, contents: &str) -> PathBuf {
        static COUNTER: AtomicUsize = AtomicUsize::new(0);
        let dir = std::env::temp_dir().join(format!("seqmine-test-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("{}-{name}", COUNTER.fetch_add(1, Ordering::Relaxed)));
        fs::write(&path, contents).unwrap();
        path
    }

    fn example_cfg() -> RunConfig {
        RunConfig {
            data: Some(write_temp("cli.dat", include_str!("../data/example.dat"))),
            hierarchy: Some(write_temp("cli.hier", include_str!("../data/example.hier"))),
            pattern: Some("[c|d]([A^|B=^]+)e".to_string()),
            sigma: Some(2),
            ..RunConfig::default()
        }
    }

    #[test]
    fn mine_produces_header_and_sorted_rows() {
        let out = cmd_mine(&example_cfg()).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("# pattern=[c|d]([A^|B=^]+)e sigma=2 algorithm=dfs data-sha256="));
        assert_eq!(
            &lines[1..],
            &["A A A B\t2", "A B\t2", "A a1 A B\t2", "a1 B\t2"]
        );
    }

    #[test]
    fn mine_output_is_algorithm_independent_modulo_header() {
        let strip = |s: String| -> String {
            s.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n")
        };
        let mut cfg = example_cfg();
        cfg.algorithm = Algorithm::Naive;
        let naive = strip(cmd_mine(&cfg).unwrap());
        cfg.algorithm = Algorithm::Count;
        let count = strip(cmd_mine(&cfg).unwrap());
        cfg.algorithm = Algorithm::Dfs;
        let dfs = strip(cmd_mine(&cfg).unwrap());
        assert_eq!(naive, count);
        assert_eq!(naive, dfs);
    }

    #[test]
    fn match_lists_sequences_with_line_numbers() {
        let mut cfg = example_cfg();
        cfg.sigma = None;
        let out = cmd_match(&cfg).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "A B\t1");
        assert_eq!(lines[1], "a1 B\t1");
        assert_eq!(lines.len(), 2 + 8 + 2 + 8);
        assert!(lines.iter().all(|l| !l.ends_with("\t2")), "no output for line 2");
    }

    #[test]
    fn compile_dumps_the_machine_and_writes_dot() {
        let mut cfg = example_cfg();
        let dot_path = write_temp("cli.dot", "");
        cfg.dot = Some(dot_path.clone());
        let out = cmd_compile(&cfg).unwrap();
        assert!(out.starts_with("states\t4\ninitial\t0\nfinal\t3\n"));
        let dot = fs::read_to_string(&dot_path).unwrap();
        assert!(dot.starts_with("digraph fst {"));
        assert!(dot.contains("doublecircle"));
    }

    #[test]
    fn compile_works_without_any_data() {
        let cfg = RunConfig {
            hierarchy: Some(write_temp("only.hier", "a1\tA\n")),
            pattern: Some("(A^)".to_string()),
            ..RunConfig::default()
        };
        let out = cmd_compile(&cfg).unwrap();
        assert!(out.contains("$-A"));
    }

    #[test]
    fn stats_reports_the_database_shape() {
        let cfg = example_cfg();
        assert_eq!(
            cmd_stats(&cfg).unwrap(),
            "sequences\t6\ntotal items\t27\navg length\t4.5\nmax length\t6\ndistinct items\t9\n"
        );
    }

    #[test]
    fn missing_required_arguments_are_usage_errors() {
        let cfg = RunConfig::default();
        assert!(matches!(cmd_mine(&cfg), Err(Error::Usage(_))));
        assert!(matches!(cmd_match(&cfg), Err(Error::Usage(_))));
        assert!(matches!(cmd_stats(&cfg), Err(Error::Usage(_))));
        let mut zero = example_cfg();
        zero.sigma = Some(0);
        assert!(matches!(cmd_mine(&zero), Err(Error::Usage(_))));
    }

    #[test]
    fn unknown_data_item_without_hierarchy_is_fine_but_unknown_pattern_item_errors() {
        let cfg = RunConfig {
            data: Some(write_temp("free.dat", "x y z\nx y\n")),
            pattern: Some("(q)".to_string()),
            sigma: Some(1),
            ..RunConfig::default()
        };
        assert!(matches!(cmd_mine(&cfg), Err(Error::UnknownPatternItem { .. })));
        let ok = RunConfig { pattern: Some("(x)".to_string()), partial: true, ..cfg };
        assert_eq!(cmd_mine(&ok).unwrap().lines().nth(1), Some("x\t2"));
    }

    #[test]
    fn partial_flag_relaxes_anchoring() {
        let mut cfg = example_cfg();
        cfg.pattern = Some("(A^)(B^)".to_string());
        cfg.sigma = Some(4);
        let anchored = cmd_mine(&cfg).unwrap();
        assert_eq!(anchored.lines().count(), 1, "full matches must span the sequence");
        cfg.partial = true;
        let relaxed = cmd_mine(&cfg).unwrap();
        // Adjacent generalized pairs now count anywhere in the sequence;
        // every input contains an A-descendant directly before a
        // B-descendant.
        assert_eq!(
            relaxed.lines().skip(1).collect::<Vec<_>>(),
            vec!["A B\t6", "a1 B\t5"]
        );
    }
}
