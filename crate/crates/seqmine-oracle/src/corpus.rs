//! Seeded random test instances: small hierarchies, small databases, and
//! pattern expressions drawn from the constraint families the engine is
//! meant to serve, plus a larger Zipf-distributed corpus for performance
//! comparisons. All generation is deterministic given the caller's RNG.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Zipf};

use seqmine::{Dictionary, SequenceDatabase};

pub struct Instance {
    pub hierarchy: String,
    pub data: String,
    pub pattern: String,
    pub dict: Dictionary,
    pub db: SequenceDatabase,
}

impl std::fmt::Debug for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Instance {{ pattern: {:?}, hierarchy: {:?}, data: {:?} }}",
            self.pattern, self.hierarchy, self.data
        )
    }
}

/// A full random instance: hierarchy (≤ 12 items, ≤ 2 parents each, depth
/// ≤ 3), database (≤ 30 sequences of ≤ 10 items), and one pattern.
pub fn random_instance<R: Rng>(rng: &mut R) -> Instance {
    let (hierarchy, gids) = random_hierarchy(rng);
    let data = random_data(rng, &gids);
    let pattern = random_pattern(rng, &gids);
    let mut dict = Dictionary::load_hierarchy(&hierarchy, gids.iter().map(String::as_str))
        .expect("generated hierarchy is well-formed");
    let mut db = SequenceDatabase::load(&data, &mut dict).expect("generated data uses known items");
    dict.compute_flist(&mut db);
    Instance { hierarchy, data, pattern, dict, db }
}

/// Hierarchy text plus the generated item names. Parents always precede
/// children in creation order, so the result is acyclic by construction.
fn random_hierarchy<R: Rng>(rng: &mut R) -> (String, Vec<String>) {
    let n = rng.random_range(4..=12);
    let gids: Vec<String> = (0..n).map(|k| format!("i{k}")).collect();
    let mut depth = vec![1u32; n];
    let mut text = String::new();
    for k in 1..n {
        let n_parents = match rng.random_range(0..10) {
            0..=2 => 0,
            3..=7 => 1,
            _ => 2,
        };
        let candidates: Vec<usize> = (0..k).filter(|&p| depth[p] < 3).collect();
        for _ in 0..n_parents {
            if candidates.is_empty() {
                break;
            }
            let p = candidates[rng.random_range(0..candidates.len())];
            depth[k] = depth[k].max(depth[p] + 1);
            text.push_str(&format!("{}\t{}\n", gids[k], gids[p]));
        }
    }
    (text, gids)
}

fn random_data<R: Rng>(rng: &mut R, gids: &[String]) -> String {
    let n_seqs = rng.random_range(1..=30);
    let mut text = String::new();
    for _ in 0..n_seqs {
        let len = if rng.random_range(0..20) == 0 { 0 } else { rng.random_range(1..=10) };
        let line: Vec<&str> = (0..len)
            .map(|_| gids[rng.random_range(0..gids.len())].as_str())
            .collect();
        text.push_str(&line.join(" "));
        text.push('\n');
    }
    text
}

/// One pattern from a rotating set of shapes: bounded and unbounded
/// wildcard n-grams, gap-constrained picks, generalized runs, anchored
/// context patterns, and free-form compositions of the item forms.
pub fn random_pattern<R: Rng>(rng: &mut R, gids: &[String]) -> String {
    let pick = |rng: &mut R| gids[rng.random_range(0..gids.len())].clone();
    match rng.random_range(0..9) {
        0 => {
            let n = rng.random_range(1..=3);
            let m = rng.random_range(n..=n + 2);
            format!("(.){{{n},{m}}}")
        }
        1 => {
            let n = rng.random_range(1..=2);
            let m = rng.random_range(n..=3);
            format!("[.*(.)]{{{n},{m}}}")
        }
        2 => "(.)[.*(.)]*".to_string(),
        3 => {
            let g = rng.random_range(0..=2);
            let k = rng.random_range(1..=3);
            format!("(.)[.{{0,{g}}}(.)]{{1,{k}}}")
        }
        4 => {
            let n = rng.random_range(1..=2);
            format!("({}^){{{n}}}", pick(rng))
        }
        5 => format!(
            "({}|{})[.*({})]*.*({})",
            pick(rng),
            pick(rng),
            pick(rng),
            pick(rng)
        ),
        6 => format!("([{}|{}] {}* {})", pick(rng), pick(rng), pick(rng), pick(rng)),
        7 => format!(
            "({a})[.?.?({b})|.?({b}).?|({b}).?.?]({c})",
            a = pick(rng),
            b = pick(rng),
            c = pick(rng)
        ),
        _ => random_composite(rng, gids),
    }
}

/// Free-form concatenation of decorated atoms, with the blow-up knobs kept
/// in check: at most two unbounded repetitions per pattern and none around
/// generalizing atoms (reference implementations enumerate exhaustively).
fn random_composite<R: Rng>(rng: &mut R, gids: &[String]) -> String {
    let pick = |rng: &mut R| gids[rng.random_range(0..gids.len())].clone();
    let mut unbounded_left = 2;
    let mut units = Vec::new();
    for _ in 0..rng.random_range(1..=4) {
        let (atom, repeatable) = match rng.random_range(0..10) {
            0 => (".".to_string(), true),
            1 => ("(.)".to_string(), true),
            2 => (pick(rng), true),
            3 => (format!("{}=", pick(rng)), true),
            4 => (format!("({})", pick(rng)), true),
            5 => (format!("({}=)", pick(rng)), true),
            6 => (format!("({}^)", pick(rng)), false),
            7 => (format!("({}=^)", pick(rng)), false),
            8 => ("(.^)".to_string(), false),
            _ => (format!("[{}|{}]", pick(rng), pick(rng)), true),
        };
        let postfix = match rng.random_range(0..6) {
            0 => "?",
            1 if repeatable && unbounded_left > 0 => {
                unbounded_left -= 1;
                "*"
            }
            2 if repeatable && unbounded_left > 0 => {
                unbounded_left -= 1;
                "+"
            }
            3 => "{1,2}",
            4 => "{2}",
            _ => "",
        };
        units.push(format!("{atom}{postfix}"));
    }
    units.join(" ")
}

/// A larger corpus for timing comparisons: 10 000 leaf items under 1 000
/// mid-level and 100 top-level categories, with item occurrences drawn from
/// a Zipf distribution (exponent 1) and sequence lengths uniform in
/// 15..=25.
pub fn zipf_corpus(seed: u64, sequences: usize) -> (Dictionary, SequenceDatabase) {
    let mut hierarchy = String::with_capacity(220_000);
    for i in 0..10_000 {
        hierarchy.push_str(&format!("w{i:04}\tp{:03}\n", i / 10));
    }
    for i in 0..1_000 {
        hierarchy.push_str(&format!("p{i:03}\tr{:02}\n", i / 10));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zipf = Zipf::new(10_000.0, 1.0).expect("valid Zipf parameters");
    let mut data = String::new();
    for _ in 0..sequences {
        let len = rng.random_range(15..=25);
        for i in 0..len {
            if i > 0 {
                data.push(' ');
            }
            let rank = zipf.sample(&mut rng) as u32 - 1;
            data.push_str(&format!("w{rank:04}"));
        }
        data.push('\n');
    }
    let mut dict = Dictionary::load_hierarchy(&hierarchy, []).expect("well-formed hierarchy");
    let mut db = SequenceDatabase::load(&data, &mut dict).expect("data items are in the hierarchy");
    dict.compute_flist(&mut db);
    (dict, db)
}
