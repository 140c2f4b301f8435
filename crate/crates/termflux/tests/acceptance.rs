//! Acceptance suite: one `[PASS]` or `[FAIL]` line per criterion, nonzero
//! exit when any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::ExitCode;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use termflux::manifest::{load_manifest, load_terms};
use termflux::pipeline::{admissible_terms, ana_report, census_of, chrono_report, families, scan_corpus};
use termflux_core::anaphora::{build_tree, presence_rates, tree_metrics, TreeOccurrence};
use termflux_core::chrono::{census, onset_mean, ChronoCorpus};
use termflux_core::classify::{judge, Order, Rule};
use termflux_core::inventory::parse_inventory;
use termflux_core::lattice::{build_lattice, generate_reductions};
use termflux_core::lowess::{lowess, LowessParams};
use termflux_core::scan::family_counts;
use termflux_core::{Category, ComplexTerm, Corpus, DocId, Language, Occurrence, Shape, YearMonth};

#[path = "../../core/tests/common/mod.rs"]
mod common;
mod support;

use common::{close, global_wls, tree_oracle};
use support::{fixture, run_all, FIXTURES};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Loaded {
    corpus: Corpus,
    terms: Vec<ComplexTerm>,
    occurrences: Vec<Occurrence>,
}

fn load(name: &str) -> Loaded {
    let dir = fixture(name);
    let corpus = load_manifest(&dir.join("manifest.json")).unwrap();
    let terms = load_terms(&dir.join("terms.txt"), &corpus.documents()[0].language).unwrap();
    let occurrences = scan_corpus(&corpus, &families(&terms, false));
    Loaded { corpus, terms, occurrences }
}

fn datation() -> Check {
    let d5: YearMonth = "2005-05".parse().unwrap();
    let d6: YearMonth = "2005-06".parse().unwrap();
    let corpus = ChronoCorpus::new([(DocId::from("D5"), Some(d5), 57_642), (DocId::from("D6"), Some(d6), 40_000)])
        .map_err(|e| e.to_string())?;
    let t = corpus.datation_generalized(&DocId::from("D5"), 37_238).map_err(|e| e.to_string())?;
    ensure((t - 2005.3873).abs() <= 0.0005, || format!("T* = {t}"))
}

fn synthetic_term(components: usize) -> ComplexTerm {
    let words = ["tete", "alfa", "bravo", "carlo", "delta", "echo", "foxtrot"];
    parse_inventory(&words[..=components].join("|"), &Language::Other("und".into())).unwrap().remove(0)
}

fn lattice() -> Check {
    let three = synthetic_term(3);
    let reduced = generate_reductions(&three, false).len();
    let edges = build_lattice(&three).edges().len();
    ensure(reduced == 7 && edges == 12, || format!("{reduced} reduced forms, {edges} edges"))?;
    for n in 1..=6usize {
        let lattice = build_lattice(&synthetic_term(n));
        // Head plus any subset of components; an edge drops one component.
        let nodes = 1usize << n;
        let mut edge_count = 0;
        for a in 0..nodes as u32 {
            for b in 0..nodes as u32 {
                if a & b == b && a.count_ones() == b.count_ones() + 1 {
                    edge_count += 1;
                }
            }
        }
        ensure(lattice.nodes().len() == nodes && lattice.edges().len() == edge_count, || {
            format!("n = {n}: {} nodes, {} edges", lattice.nodes().len(), lattice.edges().len())
        })?;
        ensure(edge_count == n << (n - 1), || format!("n = {n}: oracle {edge_count}"))?;
    }
    Ok(())
}

fn tree_metrics_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    for case in 0..1000 {
        let mut positions: Vec<usize> = (0..5000).collect();
        positions.shuffle(&mut rng);
        positions.truncate(rng.gen_range(1..60));
        let p_full = rng.gen_range(0.05..0.95);
        let (full, reduced): (Vec<usize>, Vec<usize>) = positions.iter().partition(|_| rng.gen_bool(p_full));
        let mut occ: Vec<TreeOccurrence> = full
            .iter()
            .map(|&p| TreeOccurrence::full(p))
            .chain(reduced.iter().map(|&p| TreeOccurrence::reduced(p)))
            .collect();
        occ.shuffle(&mut rng);
        let tree = build_tree(&occ);
        let m = tree_metrics(&tree);
        let want = tree_oracle(&full, &reduced);
        let children: Vec<Vec<usize>> = tree.full_nodes.iter().map(|n| n.children.clone()).collect();
        let same = tree.cataphoric == want.cataphoric
            && children == want.children
            && m.d_minus == want.d_minus
            && m.delta_minus == want.delta_minus
            && m.delta_max_minus == want.delta_max_minus
            && close(m.d_m, want.d_m)
            && close(m.f, want.f)
            && close(m.delta, want.delta)
            && close(m.delta_max, want.delta_max);
        ensure(same, || format!("case {case}: {m:?} vs {want:?}"))?;
    }
    Ok(())
}

fn trend_fixture() -> Check {
    let l = load("trend");
    let (report, _) = ana_report(&l.corpus, &l.occurrences, &Default::default()).map_err(|e| e.to_string())?;
    let get = |c: &str| report.rows.iter().find(|r| r.category == c).map(|r| r.aggregate);
    let rows: Vec<_> = ["1", "2", "3"].into_iter().map(|c| get(c).unwrap()).collect();
    let ana_fp: Vec<f64> = rows.iter().map(|r| r.ana_fp.unwrap()).collect();
    let fp: Vec<f64> = rows.iter().map(|r| r.fp.unwrap()).collect();
    ensure(ana_fp[0] > ana_fp[1] && ana_fp[1] > ana_fp[2], || format!("ANA/FP {ana_fp:?}"))?;
    ensure(fp[0] < fp[1] && fp[1] < fp[2], || format!("FP {fp:?}"))?;
    // Hand counts: 15/20, 8/40 and 2/80 reductions per full form, averaged
    // per document; 2, 4 and 8 full forms in 5,000 characters.
    let want_ratio = [0.75, 0.2, 0.025];
    let want_fp = [40.0, 80.0, 160.0];
    for i in 0..3 {
        ensure((ana_fp[i] - want_ratio[i]).abs() < 1e-12 && (fp[i] - want_fp[i]).abs() < 1e-9, || {
            format!("category {}: ANA/FP {}, FP {}", i + 1, ana_fp[i], fp[i])
        })?;
    }
    Ok(())
}

fn anaphora_outnumbers_cataphora() -> Check {
    let l = load("trend");
    let (_, docs) = ana_report(&l.corpus, &l.occurrences, &Default::default()).map_err(|e| e.to_string())?;
    let (ra, rca) = presence_rates(docs.iter().map(|d| &d.analysis)).map_err(|e| e.to_string())?;
    // 10 + 6 + 2 documents with anaphora and 3 + 1 with cataphora, of 30.
    ensure(ra > rca, || format!("RA {ra} <= RCA {rca}"))?;
    ensure((ra - 60.0).abs() < 1e-9 && (rca - 40.0 / 3.0).abs() < 1e-9, || format!("RA {ra}, RCA {rca}"))
}

fn lowess_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10e55);
    let params = LowessParams { fraction: 1.0, iterations: 0 };
    for case in 0..200 {
        let n = rng.gen_range(5..40);
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..50.0)).collect();
        let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let fit = lowess(&x, &y, params).map_err(|e| e.to_string())?;
        for (i, got) in fit.iter().enumerate() {
            let want = global_wls(&x, &y, i);
            ensure((got - want).abs() <= 1e-9, || format!("case {case}, point {i}: {got} vs {want}"))?;
        }
        let (a, b) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let line: Vec<f64> = x.iter().map(|v| a + b * v).collect();
        for p in [params, LowessParams::default()] {
            let fit = lowess(&x, &line, p).map_err(|e| e.to_string())?;
            let worst = fit.iter().zip(&line).map(|(f, v)| (f - v).abs()).fold(0.0, f64::max);
            ensure(worst <= 1e-9, || format!("case {case}: line off by {worst}"))?;
        }
    }
    Ok(())
}

fn xi() -> Check {
    let l = load("chrono");
    let report = chrono_report(&l.corpus, &l.occurrences, &Default::default(), 100).map_err(|e| e.to_string())?;
    ensure(report.rows.len() == 3, || format!("{} terms", report.rows.len()))?;
    for r in &report.rows {
        ensure(r.xi.is_some_and(|x| x > 0.0), || format!("{}: xi {:?}", r.term, r.xi))?;
    }
    ensure(report.median_xi.is_some_and(|m| m > 0.0), || format!("median {:?}", report.median_xi))?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x0a5e7);
    for case in 0..100 {
        let mut times: Vec<f64> = (0..rng.gen_range(1..200)).map(|_| rng.gen_range(1990.0..2012.0)).collect();
        times.sort_by(f64::total_cmp);
        let got = onset_mean(&times, 100).map_err(|e| e.to_string())?.unwrap();
        let k = times.len().min(100);
        let want = (times[..k].iter().map(|t| t.ln()).sum::<f64>() / k as f64).exp();
        ensure(((got - want) / want).abs() <= 1e-12, || format!("case {case}: {got} vs {want}"))?;
    }
    Ok(())
}

fn census_conservation() -> Check {
    for name in FIXTURES {
        let l = load(name);
        let all = census(&l.terms, &l.occurrences);
        let (full, reduced) = family_counts(&l.occurrences);
        ensure(all.full_occurrences == full && all.reduced_occurrences == reduced, || {
            format!("{name}: census {all:?}, scan ({full}, {reduced})")
        })?;
        let admissible = admissible_terms(&l.terms);
        let restricted = census_of(&l.corpus, &admissible, &l.occurrences);
        let kept: Vec<Occurrence> =
            l.occurrences.iter().filter(|o| admissible.iter().any(|t| t.id() == &o.term)).cloned().collect();
        let (full, reduced) = family_counts(&kept);
        ensure(restricted.full_occurrences == full && restricted.reduced_occurrences == reduced, || {
            format!("{name}: admissible census {restricted:?}, scan ({full}, {reduced})")
        })?;
    }
    let l = load("census");
    let c = census_of(&l.corpus, &admissible_terms(&l.terms), &l.occurrences);
    let got = (c.terms, c.reduced_forms, c.full_occurrences, c.reduced_occurrences);
    ensure(got == (2, 3, 5, 7), || format!("census fixture {got:?}"))?;
    let f1: Vec<Occurrence> = l
        .occurrences
        .iter()
        .filter(|o| o.document.as_str() == "f1" && o.term.as_str() == "mode de production biologique")
        .cloned()
        .collect();
    ensure(family_counts(&f1) == (3, 2), || format!("F1 {:?}", family_counts(&f1)))
}

const GOLDEN: &str = include_str!("../../core/tests/data/judge_golden.csv");

fn classifier() -> Check {
    let mut rows = 0;
    let mut seen = std::collections::BTreeSet::new();
    for line in GOLDEN.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let shape = Shape::ALL.into_iter().find(|s| s.as_str() == f[0]).ok_or(line)?;
        let order = Order::ALL.into_iter().find(|o| o.as_str() == f[1]).ok_or(line)?;
        let category = Category::ALL.into_iter().find(|c| c.label() == f[2]).ok_or(line)?;
        let fast: bool = f[3].parse().map_err(|_| line.to_owned())?;
        let j = judge(shape, order, category, fast);
        let rule = j.rule_fired.map_or_else(|| "none".to_owned(), |r: Rule| u8::from(r).to_string());
        ensure(j.label.as_str() == f[4] && rule == f[5], || format!("{line}: got {} {rule}", j.label.as_str()))?;
        seen.insert((f[0], f[1], f[2], f[3]));
        rows += 1;
    }
    ensure(rows == 72 && seen.len() == 72, || format!("{rows} rows, {} distinct inputs", seen.len()))
}

fn determinism() -> Check {
    for name in FIXTURES {
        let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
        let first = run_all(name, a.path());
        let second = run_all(name, b.path());
        for ((label, x), (_, y)) in first.iter().zip(&second) {
            ensure(x == y, || format!("{name}: {label} differs"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("datation worked example", datation),
        ("lattice node and edge counts", lattice),
        ("tree metrics vs interval oracle", tree_metrics_oracle),
        ("trend fixture ANA/FP and FP", trend_fixture),
        ("RA above RCA on the trend fixture", anaphora_outnumbers_cataphora),
        ("LOWESS vs weighted least squares", lowess_oracle),
        ("xi positive, onset mean oracle", xi),
        ("census conservation", census_conservation),
        ("classifier exhaustiveness", classifier),
        ("CLI determinism", determinism),
    ];
    assert!(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").is_dir());
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(()) => println!("[PASS] {name}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", 10 - failed, 10);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
