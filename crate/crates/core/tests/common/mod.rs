//! Independent oracles shared by the core tests and the acceptance suite.

#[derive(Debug, PartialEq)]
pub struct Expected {
    pub cataphoric: Vec<usize>,
    pub children: Vec<Vec<usize>>,
    pub d_m: Option<f64>,
    pub d_minus: usize,
    pub f: Option<f64>,
    pub delta: Option<f64>,
    pub delta_max: Option<f64>,
    pub delta_minus: Option<f64>,
    pub delta_max_minus: Option<f64>,
}

/// Interval scan: the reductions of full form `i` are those strictly between
/// it and the next full form.
pub fn tree_oracle(full: &[usize], reduced: &[usize]) -> Expected {
    let mut full = full.to_vec();
    full.sort();
    let mut reduced = reduced.to_vec();
    reduced.sort();
    let first_full = full.first().copied().unwrap_or(usize::MAX);
    let cataphoric: Vec<usize> = reduced.iter().copied().filter(|&r| r < first_full).collect();
    let children: Vec<Vec<usize>> = (0..full.len())
        .map(|i| {
            let lo = full[i];
            let hi = full.get(i + 1).copied().unwrap_or(usize::MAX);
            reduced.iter().copied().filter(|&r| r > lo && r < hi).collect()
        })
        .collect();

    let mean = |v: &[f64]| (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64);
    let attached: usize = children.iter().map(Vec::len).sum();
    let d_m = (!full.is_empty()).then(|| attached as f64 / full.len() as f64);

    // Run lengths: count full forms since the previous reduction-bearing one.
    let mut runs = Vec::new();
    let mut last_bearing: Option<usize> = None;
    for (i, c) in children.iter().enumerate() {
        if !c.is_empty() {
            let start = last_bearing.map_or(0, |j| j + 1);
            runs.push((i - start + 1) as f64);
            last_bearing = Some(i);
        }
    }

    let firsts: Vec<f64> = full
        .iter()
        .zip(&children)
        .filter(|(_, c)| !c.is_empty())
        .map(|(&t, c)| (*c.iter().min().unwrap() - t) as f64)
        .collect();
    let lasts: Vec<f64> = full
        .iter()
        .zip(&children)
        .filter(|(_, c)| !c.is_empty())
        .map(|(&t, c)| (*c.iter().max().unwrap() - t) as f64)
        .collect();
    let (delta_minus, delta_max_minus) = if full.is_empty() || cataphoric.is_empty() {
        (None, None)
    } else {
        let t1 = full[0] as f64;
        (Some(t1 - *cataphoric.iter().max().unwrap() as f64), Some(t1 - *cataphoric.iter().min().unwrap() as f64))
    };
    Expected {
        d_minus: cataphoric.len(),
        cataphoric,
        children,
        d_m,
        f: mean(&runs),
        delta: mean(&firsts),
        delta_max: mean(&lasts),
        delta_minus,
        delta_max_minus,
    }
}

pub fn close(a: Option<f64>, b: Option<f64>) -> bool {
    match (a, b) {
        (None, None) => true,
        (Some(x), Some(y)) => (x - y).abs() <= 1e-12,
        _ => false,
    }
}

/// Tricube-weighted least squares with the bandwidth reaching the farthest
/// point, solved by Cramer's rule.
pub fn global_wls(x: &[f64], y: &[f64], i: usize) -> f64 {
    let h = x.iter().map(|v| (v - x[i]).abs()).fold(0.0, f64::max);
    let w: Vec<f64> = x
        .iter()
        .map(|v| {
            let u = (v - x[i]).abs() / h;
            if u < 1.0 {
                (1.0 - u.powi(3)).powi(3)
            } else {
                0.0
            }
        })
        .collect();
    let s0: f64 = w.iter().sum();
    let s1: f64 = w.iter().zip(x).map(|(w, x)| w * x).sum();
    let s2: f64 = w.iter().zip(x).map(|(w, x)| w * x * x).sum();
    let t0: f64 = w.iter().zip(y).map(|(w, y)| w * y).sum();
    let t1: f64 = w.iter().zip(x).zip(y).map(|((w, x), y)| w * x * y).sum();
    let det = s0 * s2 - s1 * s1;
    let a = (t0 * s2 - s1 * t1) / det;
    let b = (s0 * t1 - s1 * t0) / det;
    a + b * x[i]
}
