use std::collections::BTreeSet;

use clap::{Args, ValueEnum};
use rayon::prelude::*;

use stanley_core::conjectures::verify_2ze_relation;
use stanley_core::conversion::{convert_inward, convert_outward, primed_to_signed, signed_to_primed};
use stanley_core::coxeter::all_elements;
use stanley_core::crystal::{
    crystal_component, lower, lower_bar, lower_bar_word, lower_word, raise, raise_bar,
    raise_bar_word, raise_word,
};
use stanley_core::factorization::enumerate_factorizations;
use stanley_core::insertion::{eg_tableaux, inverse_primed_recording, mixed_insert, primed_recording};
use stanley_core::stanley::{
    double, double_via_crystal, double_via_super, double_via_tableaux, super_schur, tableau_gf,
    type_a, type_c, DEFAULT_LENGTH_CAP,
};
use stanley_core::tableau::{enumerate_marked, enumerate_primed};
use stanley_core::{Entry, FactorKind, Partition, SignedPermutation, Tableau};

use crate::config::Config;
use crate::Failure;

const GOLDEN_COMPONENT: &str = include_str!("../../core/tests/data/three_level_component.dot");

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,

    /// Symmetric-group rank n; elements carry windows of n+1 entries.
    #[arg(long)]
    rank: Option<usize>,

    /// Only elements of at most this length are swept.
    #[arg(long = "max-length")]
    max_length: Option<usize>,

    /// Worker threads; output is identical for every setting.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Routes,
    Symmetry,
    Bijections,
    Crystal,
    Conversion,
    Identities,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Symmetry => "symmetry",
            Suite::Bijections => "bijections",
            Suite::Crystal => "crystal",
            Suite::Conversion => "conversion",
            Suite::Identities => "identities",
        }
    }
}

type Task = Box<dyn Fn() -> Result<String, String> + Send + Sync>;

struct Check {
    name: String,
    task: Task,
}

impl Check {
    fn new(name: impl Into<String>, task: impl Fn() -> Result<String, String> + Send + Sync + 'static) -> Check {
        Check { name: name.into(), task: Box::new(task) }
    }
}

pub fn run(args: VerifyArgs, cfg: &Config) -> Result<(), Failure> {
    let rank = args.rank.or(cfg.rank).unwrap_or(3);
    let max_length = args.max_length.or(cfg.max_length).unwrap_or(6);
    let k = cfg.k.unwrap_or(3);
    let cap = cfg.cap.unwrap_or(DEFAULT_LENGTH_CAP);
    let checks = match args.suite {
        Suite::Routes => routes_checks(rank, max_length, k, cap),
        Suite::Symmetry => symmetry_checks(rank, max_length, k, cap),
        Suite::Bijections => bijection_checks(rank, max_length, k, cap),
        Suite::Crystal => crystal_checks(),
        Suite::Conversion => conversion_checks(),
        Suite::Identities => identities_checks(rank, max_length, k, cap),
    };

    let results = execute(checks, args.jobs.or(cfg.jobs))?;
    let mut failed = 0usize;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("{}/{name}: PASS {detail}", args.suite.name()),
            Err(message) => {
                failed += 1;
                println!("{}/{name}: FAIL {message}", args.suite.name());
            }
        }
    }
    println!("{}: {} checks, {failed} failed", args.suite.name(), results.len());
    if failed > 0 {
        Err(Failure::Verify(format!(
            "{failed} of {} checks failed in suite {}",
            results.len(),
            args.suite.name()
        )))
    } else {
        Ok(())
    }
}

/// Run every check, in parallel when requested; results keep the
/// canonical build order no matter how workers interleave.
fn execute(
    checks: Vec<Check>,
    jobs: Option<usize>,
) -> Result<Vec<(String, Result<String, String>)>, Failure> {
    let run_all = |checks: Vec<Check>| {
        checks
            .into_par_iter()
            .map(|c| {
                let outcome = (c.task)();
                (c.name, outcome)
            })
            .collect::<Vec<_>>()
    };
    match jobs {
        None => Ok(run_all(checks)),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Failure::Resource(format!("cannot build thread pool: {e}")))?;
            Ok(pool.install(|| run_all(checks)))
        }
    }
}

fn type_a_elements(rank: usize, max_length: usize) -> Vec<SignedPermutation> {
    all_elements(rank + 1, false, max_length)
}

fn reproducer(w: &SignedPermutation, k: usize) -> String {
    format!("reproduce: stanley compute --type d --window \"{w}\" --k {k}")
}

fn routes_checks(rank: usize, max_length: usize, k: usize, cap: usize) -> Vec<Check> {
    type_a_elements(rank, max_length)
        .into_iter()
        .map(|w| {
            let name = w.to_string();
            Check::new(name, move || {
                let direct = double(&w, k, cap).map_err(|e| e.to_string())?;
                for (label, route) in [
                    ("tableau", double_via_tableaux(&w, k)),
                    ("super", double_via_super(&w, k)),
                    ("crystal", double_via_crystal(&w, k)),
                ] {
                    let poly = route.map_err(|e| e.to_string())?;
                    if poly != direct {
                        return Err(format!("{label} route disagrees; {}", reproducer(&w, k)));
                    }
                }
                Ok(format!("({} terms)", direct.num_terms()))
            })
        })
        .collect()
}

fn symmetry_checks(rank: usize, max_length: usize, k: usize, cap: usize) -> Vec<Check> {
    type_a_elements(rank, max_length)
        .into_iter()
        .map(|w| {
            let name = w.to_string();
            Check::new(name, move || {
                let d = double(&w, k, cap).map_err(|e| e.to_string())?;
                d.check_symmetric()
                    .map_err(|e| format!("{e}; {}", reproducer(&w, k)))?;
                Ok(String::new())
            })
        })
        .collect()
}

fn bijection_checks(rank: usize, max_length: usize, k: usize, cap: usize) -> Vec<Check> {
    type_a_elements(rank, max_length)
        .into_iter()
        .map(|w| {
            let name = w.to_string();
            Check::new(name, move || {
                let insertion_tableaux = eg_tableaux(&w).map_err(|e| e.to_string())?;
                let factorizations = enumerate_factorizations(&w, FactorKind::D, k, cap)
                    .map_err(|e| e.to_string())?;
                let mut image = BTreeSet::new();
                for v in &factorizations {
                    let (p, q) = primed_recording(v).map_err(|e| e.to_string())?;
                    let marked: Vec<u16> =
                        q.weight_marked(k as u32).iter().map(|&c| c as u16).collect();
                    let plain: Vec<u16> =
                        q.weight_plain(k as u32).iter().map(|&c| c as u16).collect();
                    if v.double_weight() != (marked, plain) {
                        return Err(format!("weight not preserved on {v}"));
                    }
                    let back =
                        inverse_primed_recording(&p, &q, k).map_err(|e| e.to_string())?;
                    if back != *v {
                        return Err(format!("round trip changed {v} into {back}"));
                    }
                    image.insert((p, q));
                }
                if image.len() != factorizations.len() {
                    return Err("insertion is not injective".to_string());
                }
                let mut codomain = BTreeSet::new();
                for p in &insertion_tableaux {
                    let recordings = enumerate_primed(&p.outer_shape(), &Partition::empty(), k as u32)
                        .map_err(|e| e.to_string())?;
                    for q in recordings {
                        codomain.insert((p.clone(), q));
                    }
                }
                if image != codomain {
                    return Err("image misses some (P, Q) pairs".to_string());
                }
                Ok(format!("({} factorizations)", factorizations.len()))
            })
        })
        .collect()
}

fn crystal_checks() -> Vec<Check> {
    let mut checks = vec![Check::new("golden-component", || {
        let start: Tableau = "1' 1 / 1 2'".parse().map_err(|e| format!("{e}"))?;
        let graph = crystal_component(&start, 3).map_err(|e| e.to_string())?;
        if graph.nodes().len() != 18 || graph.edges().len() != 30 {
            return Err(format!(
                "component has {} nodes and {} edges, wanted 18 and 30",
                graph.nodes().len(),
                graph.edges().len()
            ));
        }
        if graph.to_dot() != GOLDEN_COMPONENT {
            return Err("DOT export differs from the golden graph".to_string());
        }
        Ok("(18 nodes, 30 edges)".to_string())
    })];

    let mut shapes: Vec<(Partition, Partition)> = Vec::new();
    for n in 1..=4u32 {
        for outer in Partition::all_of_size(n, n as usize) {
            shapes.push((outer, Partition::empty()));
        }
    }
    shapes.push((
        Partition::new(vec![3, 2, 1]).unwrap(),
        Partition::new(vec![1, 1]).unwrap(),
    ));
    for (outer, inner) in shapes {
        let name = format!("axioms {outer}/{inner}");
        checks.push(Check::new(name, move || axiom_check(&outer, &inner, 3)));
    }

    checks.push(Check::new("word-commutation", || {
        let k = 3u32;
        let alphabet: Vec<Entry> =
            (1..=3).flat_map(|l| [Entry::primed(l), Entry::plain(l)]).collect();
        let mut words: Vec<Vec<Entry>> = vec![Vec::new()];
        let mut frontier: Vec<Vec<Entry>> = vec![Vec::new()];
        for _ in 0..4 {
            frontier = frontier
                .into_iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&a| {
                        let mut v = w.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
            words.extend(frontier.iter().cloned());
        }
        for word in &words {
            let p = mixed_insert(word).map_err(|e| e.to_string())?.0;
            for i in 1..k {
                let insert = |v: Vec<Entry>| mixed_insert(&v).unwrap().0;
                let mismatch = lower_word(word, i).map(insert)
                    != lower(&p, i).map_err(|e| e.to_string())?
                    || raise_word(word, i).map(insert)
                        != raise(&p, i).map_err(|e| e.to_string())?
                    || lower_bar_word(word, i).map_err(|e| e.to_string())?.map(insert)
                        != lower_bar(&p, i).map_err(|e| e.to_string())?
                    || raise_bar_word(word, i).map_err(|e| e.to_string())?.map(insert)
                        != raise_bar(&p, i).map_err(|e| e.to_string())?;
                if mismatch {
                    return Err(format!("operators disagree with insertion on {word:?}"));
                }
            }
        }
        Ok(format!("({} words)", words.len()))
    }));
    checks
}

/// Raising and lowering invert each other, outputs stay valid, and each
/// move shifts one weight unit between adjacent slots of one alphabet.
fn axiom_check(outer: &Partition, inner: &Partition, k: u32) -> Result<String, String> {
    let mut count = 0usize;
    for tab in enumerate_primed(outer, inner, k).map_err(|e| e.to_string())? {
        for i in 1..k {
            if let Some(u) = lower(&tab, i).map_err(|e| e.to_string())? {
                u.validate_marked(k, k).map_err(|e| e.to_string())?;
                if raise(&u, i).map_err(|e| e.to_string())?.as_ref() != Some(&tab) {
                    return Err(format!("raising does not invert lowering on {tab}"));
                }
                if u.weight_marked(k) != tab.weight_marked(k)
                    || !shifts_down(&tab.weight_plain(k), &u.weight_plain(k), i as usize)
                {
                    return Err(format!("weight law broken by the plain move on {tab}"));
                }
            }
            if let Some(u) = lower_bar(&tab, i).map_err(|e| e.to_string())? {
                u.validate_marked(k, k).map_err(|e| e.to_string())?;
                if raise_bar(&u, i).map_err(|e| e.to_string())?.as_ref() != Some(&tab) {
                    return Err(format!("barred raising does not invert lowering on {tab}"));
                }
                if u.weight_plain(k) != tab.weight_plain(k)
                    || !shifts_down(&tab.weight_marked(k), &u.weight_marked(k), i as usize)
                {
                    return Err(format!("weight law broken by the barred move on {tab}"));
                }
            }
            count += 2;
        }
    }
    Ok(format!("({count} operator applications)"))
}

fn shifts_down(before: &[u32], after: &[u32], i: usize) -> bool {
    before.len() == after.len()
        && before.iter().zip(after).enumerate().all(|(j, (b, a))| {
            let delta = *a as i64 - *b as i64;
            if j + 1 == i {
                delta == -1
            } else if j == i {
                delta == 1
            } else {
                delta == 0
            }
        })
}

fn conversion_checks() -> Vec<Check> {
    let mut checks = vec![Check::new("worked-example", || {
        let before: Tableau =
            "-4 -3 1 4 / -4 1' 2' / -3 1 2' / 2 2".parse().map_err(|e| format!("{e}"))?;
        let after = convert_inward(&before, 2).map_err(|e| e.to_string())?;
        if after.to_string() != "-4 -3 -2 4 / -4 -2 1' / -3 1 1 / 2 2" {
            return Err(format!("conversion produced {after}"));
        }
        if convert_outward(&after, 1).map_err(|e| e.to_string())? != before {
            return Err("outward conversion does not invert".to_string());
        }
        Ok(String::new())
    })];

    let k = 3u32;
    for n in 1..=5u32 {
        for outer in Partition::all_of_size(n, n as usize) {
            let name = format!("levels {outer}");
            checks.push(Check::new(name, move || {
                let empty = Partition::empty();
                let mut seen = 0usize;
                for j in (1..=k).rev() {
                    let level = enumerate_marked(&outer, &empty, k, j).map_err(|e| e.to_string())?;
                    let below: BTreeSet<Tableau> = enumerate_marked(&outer, &empty, k, j - 1)
                        .map_err(|e| e.to_string())?
                        .into_iter()
                        .collect();
                    let mut image = BTreeSet::new();
                    for tab in &level {
                        let u = convert_inward(tab, j).map_err(|e| e.to_string())?;
                        if u.weight_marked(k) != tab.weight_marked(k)
                            || u.weight_plain(k) != tab.weight_plain(k)
                        {
                            return Err(format!("conversion moved the weight of {tab}"));
                        }
                        if convert_outward(&u, j - 1).map_err(|e| e.to_string())? != *tab {
                            return Err(format!("round trip changed {tab}"));
                        }
                        image.insert(u);
                    }
                    if image != below {
                        return Err(format!("level {j} is not a bijection"));
                    }
                    seen += level.len();
                }
                for p in enumerate_primed(&outer, &empty, k).map_err(|e| e.to_string())? {
                    let s = primed_to_signed(&p, k).map_err(|e| e.to_string())?;
                    if signed_to_primed(&s, k).map_err(|e| e.to_string())? != p {
                        return Err(format!("full chain changed {p}"));
                    }
                }
                Ok(format!("({seen} tableaux)"))
            }));
        }
    }

    for (outer, inner) in [
        (Partition::new(vec![2, 1]).unwrap(), Partition::empty()),
        (Partition::new(vec![3, 1]).unwrap(), Partition::empty()),
        (Partition::new(vec![2, 2, 1]).unwrap(), Partition::new(vec![1]).unwrap()),
    ] {
        let name = format!("generating-function {outer}/{inner}");
        checks.push(Check::new(name, move || {
            let reference = super_schur(&outer, &inner, k as usize).map_err(|e| e.to_string())?;
            for level in 0..=k {
                let gf = tableau_gf(&outer, &inner, k as usize, level).map_err(|e| e.to_string())?;
                if gf != reference {
                    return Err(format!("level {level} generating function differs"));
                }
            }
            Ok(String::new())
        }));
    }
    checks
}

fn identities_checks(rank: usize, max_length: usize, k: usize, cap: usize) -> Vec<Check> {
    let mut checks: Vec<Check> = type_a_elements(rank, max_length)
        .into_iter()
        .map(|w| {
            let name = w.to_string();
            Check::new(name, move || {
                let d = double(&w, k, cap).map_err(|e| e.to_string())?;
                let a = type_a(&w, k, cap).map_err(|e| e.to_string())?;
                let a_inv = type_a(&w.inverse(), k, cap).map_err(|e| e.to_string())?;
                let c = type_c(&w, k, cap).map_err(|e| e.to_string())?;
                let d_inv = double(&w.inverse(), k, cap).map_err(|e| e.to_string())?;
                if d.specialize_x_zero().swap_xy() != a {
                    return Err(format!("x := 0 does not recover the type A series; {}", reproducer(&w, k)));
                }
                if d.specialize_y_zero() != a_inv {
                    return Err(format!("y := 0 does not recover the inverse type A series; {}", reproducer(&w, k)));
                }
                if d.specialize_y_to_x() != c {
                    return Err(format!("diagonal does not recover the type C series; {}", reproducer(&w, k)));
                }
                if d.swap_xy() != d_inv {
                    return Err(format!("swapping alphabets does not invert the element; {}", reproducer(&w, k)));
                }
                Ok(String::new())
            })
        })
        .collect();

    for w in all_elements(rank + 1, true, max_length) {
        let name = format!("{w} doubling");
        checks.push(Check::new(name, move || {
            match verify_2ze_relation(&w, k, cap) {
                Ok(true) => Ok(String::new()),
                Ok(false) => Err(format!("2^ze scaling does not match; {}", reproducer(&w, k))),
                Err(e) => Err(e.to_string()),
            }
        }));
    }
    checks
}
