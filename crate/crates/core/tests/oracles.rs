//! Library results checked against independent, deliberately naive
//! reimplementations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use termflux_core::anaphora::{build_tree, tree_metrics, TreeOccurrence};
use termflux_core::chrono::onset_mean;
use termflux_core::inventory::parse_inventory;
use termflux_core::lattice::{build_lattice, generate_reductions};
use termflux_core::lowess::{lowess, LowessParams};
use termflux_core::scan::{scan, Family};
use termflux_core::{ChunkSet, Document, FormKey, Language};

mod common;

use common::{close, global_wls, tree_oracle};

fn und() -> Language {
    Language::Other("und".into())
}

// ---- anaphoric trees -------------------------------------------------------

#[test]
fn tree_metrics_match_interval_oracle_on_random_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e11);
    for case in 0..1000 {
        let len = rng.gen_range(1..40);
        let mut positions: Vec<usize> = (0..2000).collect();
        positions.shuffle(&mut rng);
        positions.truncate(len);
        let mut full = Vec::new();
        let mut reduced = Vec::new();
        let p_full = rng.gen_range(0.0..1.0);
        for p in positions {
            if rng.gen_bool(p_full) {
                full.push(p);
            } else {
                reduced.push(p);
            }
        }
        let mut occ: Vec<TreeOccurrence> = full
            .iter()
            .map(|&p| TreeOccurrence::full(p))
            .chain(reduced.iter().map(|&p| TreeOccurrence::reduced(p)))
            .collect();
        occ.shuffle(&mut rng);

        let tree = build_tree(&occ);
        let m = tree_metrics(&tree);
        let want = tree_oracle(&full, &reduced);

        assert_eq!(tree.cataphoric, want.cataphoric, "case {case}");
        let children: Vec<Vec<usize>> = tree.full_nodes.iter().map(|n| n.children.clone()).collect();
        assert_eq!(children, want.children, "case {case}");
        assert_eq!(m.d_minus, want.d_minus, "case {case}");
        assert!(close(m.d_m, want.d_m), "case {case}: d_m {:?} vs {:?}", m.d_m, want.d_m);
        assert!(close(m.f, want.f), "case {case}: f {:?} vs {:?}", m.f, want.f);
        assert!(close(m.delta, want.delta), "case {case}: delta");
        assert!(close(m.delta_max, want.delta_max), "case {case}: Delta");
        assert_eq!(m.delta_minus, want.delta_minus, "case {case}: delta_minus");
        assert_eq!(m.delta_max_minus, want.delta_max_minus, "case {case}: Delta_minus");
    }
}

// ---- lattice -----------------------------------------------------------------

fn synthetic_term(components: usize) -> termflux_core::ComplexTerm {
    let words = ["tete", "alfa", "bravo", "carlo", "delta", "echo", "foxtrot"];
    let line = words[..=components].join("|");
    parse_inventory(&line, &und()).unwrap().remove(0)
}

#[test]
fn lattice_counts_match_subset_enumeration() {
    for n in 1..=6usize {
        let term = synthetic_term(n);
        let lattice = build_lattice(&term);

        // Subsets of the components, each with the head added back.
        let subsets: Vec<Vec<usize>> =
            (0..1u32 << n).map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()).collect();
        let mut edge_count = 0;
        for a in &subsets {
            for b in &subsets {
                if a.len() == b.len() + 1 && b.iter().all(|x| a.contains(x)) {
                    edge_count += 1;
                }
            }
        }
        assert_eq!(lattice.nodes().len(), subsets.len(), "n = {n}");
        assert_eq!(lattice.nodes().len(), 1 << n);
        assert_eq!(lattice.edges().len(), edge_count, "n = {n}");
        assert_eq!(edge_count, n << (n - 1));

        for s in &subsets {
            let set = ChunkSet::from_indices(std::iter::once(0).chain(s.iter().copied())).unwrap();
            assert!(lattice.node_index(set).is_some());
        }
        for &(from, to) in lattice.edges() {
            let (a, b) = (lattice.nodes()[from], lattice.nodes()[to]);
            assert!(b.is_subset_of(a) && a.len() == b.len() + 1);
        }

        let forms = generate_reductions(&term, false);
        assert_eq!(forms.len(), (1 << n) - 1);
        let mut surfaces: Vec<&str> = forms.iter().map(|f| f.surface()).collect();
        surfaces.sort();
        surfaces.dedup();
        assert_eq!(surfaces.len(), forms.len());
    }
}

#[test]
fn three_component_lattice_has_seven_reductions_and_twelve_edges() {
    let term = synthetic_term(3);
    assert_eq!(generate_reductions(&term, false).len(), 7);
    assert_eq!(build_lattice(&term).edges().len(), 12);
}

// ---- LOWESS ----------------------------------------------------------------

#[test]
fn lowess_full_window_matches_weighted_least_squares() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let params = LowessParams { fraction: 1.0, iterations: 0 };
    for _ in 0..200 {
        let n = rng.gen_range(5..30);
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..10.0)).collect();
        let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-5.0..5.0)).collect();
        let fit = lowess(&x, &y, params).unwrap();
        for (i, got) in fit.iter().enumerate() {
            let want = global_wls(&x, &y, i);
            assert!((got - want).abs() < 1e-9, "point {i}: {got} vs {want}");
        }
    }
}

#[test]
fn lowess_reproduces_exact_lines() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let n = rng.gen_range(3..40);
        let (a, b) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..100.0)).collect();
        let y: Vec<f64> = x.iter().map(|v| a + b * v).collect();
        let fit = lowess(&x, &y, LowessParams::default()).unwrap();
        for (f, v) in fit.iter().zip(&y) {
            assert!((f - v).abs() < 1e-9);
        }
    }
}

#[test]
fn lowess_robustness_damps_an_outlier() {
    let x: Vec<f64> = (0..20).map(f64::from).collect();
    let mut y: Vec<f64> = x.iter().map(|v| 0.5 * v + 2.0).collect();
    y[10] += 30.0;
    let line = |v: f64| 0.5 * v + 2.0;
    let max_dev = |fit: &[f64]| {
        x.iter()
            .zip(fit)
            .enumerate()
            .filter(|(i, _)| *i != 10)
            .map(|(_, (&v, f))| (f - line(v)).abs())
            .fold(0.0, f64::max)
    };
    let plain = lowess(&x, &y, LowessParams { fraction: 2.0 / 3.0, iterations: 0 }).unwrap();
    let robust = lowess(&x, &y, LowessParams { fraction: 2.0 / 3.0, iterations: 3 }).unwrap();
    assert!(max_dev(&robust) < max_dev(&plain));
}

// ---- onset means ---------------------------------------------------------------

#[test]
fn onset_mean_matches_log_space_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2005);
    for _ in 0..100 {
        let mut times: Vec<f64> = (0..150).map(|_| rng.gen_range(1990.0..2012.0)).collect();
        times.sort_by(f64::total_cmp);
        let logs: f64 = times[..100].iter().rev().map(|t| t.ln()).sum();
        let want = (logs / 100.0).exp();
        let got = onset_mean(&times, 100).unwrap().unwrap();
        assert!(((got - want) / want).abs() < 1e-12, "{got} vs {want}");
    }
}

// ---- scanning ------------------------------------------------------------------

/// Lowercases, collapses whitespace runs and records the original character
/// index of every normalized character.
fn normalize(text: &str) -> (Vec<char>, Vec<usize>) {
    let mut out = Vec::new();
    let mut map = Vec::new();
    let mut prev_space = false;
    for (i, c) in text.chars().enumerate() {
        if c.is_whitespace() {
            if !prev_space {
                out.push(' ');
                map.push(i);
            }
            prev_space = true;
        } else {
            out.push(c.to_ascii_lowercase());
            map.push(i);
            prev_space = false;
        }
    }
    (out, map)
}

/// Leftmost-longest substring search restricted to word boundaries.
fn scan_oracle(text: &str, forms: &[(FormKey, String)]) -> Vec<(usize, FormKey)> {
    let (norm, map) = normalize(text);
    let mut patterns: Vec<(Vec<char>, FormKey)> = forms.iter().map(|(k, s)| (normalize(s.trim()).0, *k)).collect();
    // Longest first; among equal texts the smallest key wins.
    patterns.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.1.cmp(&b.1)));
    let word = |c: char| c.is_alphanumeric();
    let mut out = Vec::new();
    let mut i = 0;
    while i < norm.len() {
        let at_start = word(norm[i]) && (i == 0 || !word(norm[i - 1]));
        let hit = at_start
            .then(|| {
                patterns.iter().find(|(p, _)| {
                    let end = i + p.len();
                    end <= norm.len() && norm[i..end] == p[..] && (end == norm.len() || !word(norm[end]))
                })
            })
            .flatten();
        match hit {
            Some((p, k)) => {
                out.push((map[i], *k));
                i += p.len();
            }
            None => i += 1,
        }
    }
    out
}

#[test]
fn scanner_matches_substring_oracle_on_random_texts() {
    let term = parse_inventory("alfa|beta gamma|delta", &und()).unwrap().remove(0);
    let family = Family::new(&term, false);
    let vocab = ["alfa", "Alfa", "ALFA", "beta", "gamma", "Gamma", "delta", "echo", "alfabeta"];
    let seps = [" ", "  ", "\n", ", ", " - ", "\t "];
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for case in 0..500 {
        let mut text = String::new();
        for k in 0..rng.gen_range(0..40) {
            if k > 0 {
                text.push_str(seps.choose(&mut rng).unwrap());
            }
            text.push_str(vocab.choose(&mut rng).unwrap());
        }
        let got: Vec<(usize, FormKey)> =
            scan(&Document::new("d".into(), text.clone()), &family).iter().map(|o| (o.pos, o.form)).collect();
        assert_eq!(got, scan_oracle(&text, family.forms()), "case {case}: {text:?}");
    }
}

#[test]
fn three_full_and_two_reduced_interleaved() {
    let term = parse_inventory("degrado|ambientale", &Language::It).unwrap().remove(0);
    let family = Family::new(&term, false);
    let text = "degrado ambientale; degrado. Degrado ambientale e degrado, poi degrado ambientale.";
    let occ = scan(&Document::new("d".into(), text.into()), &family);
    let want = scan_oracle(text, family.forms());
    assert_eq!(occ.len(), 5);
    assert_eq!(occ.iter().map(|o| (o.pos, o.form)).collect::<Vec<_>>(), want);
    assert!(occ.windows(2).all(|w| w[0].pos < w[1].pos));
}
