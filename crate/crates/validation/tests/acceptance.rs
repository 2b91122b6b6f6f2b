//! Acceptance suite: one PASS/FAIL line per criterion, each with its time
//! budget. Exits nonzero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::Instant;

use clap::Parser;
use f128::f128;
use hardy_cli::commands::random_trial;
use hardy_cli::{render, Cli};
use hardy_core::numerics::{b_k_scaled, SignClass};
use hardy_core::sharpness::sweep_row;
use hardy_core::supersolution::{derived_weights, Tabulated};
use hardy_core::weights::WeightMargin;
use hardy_core::{
    b4_closed, b6_closed, b_k, build_pencil, coefficient_signs, hardy_constant, lhs_form,
    min_eigenvalue, power_triplet, remainder, remainder_scan, rhs_form, sharp_constant_estimate,
    sweep, test_function, verify_inequality, weight_w, PowerFn, Scalar, WeightParams,
};
use num_rational::Rational64;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn criterion(id: u32, title: &str, budget_s: f64, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let secs = start.elapsed().as_secs_f64();
    let in_time = secs < budget_s;
    let pass = o.pass && in_time;
    let budget = if budget_s.is_finite() {
        format!("budget {budget_s}s")
    } else {
        "no budget".to_string()
    };
    println!(
        "[{}] criterion {id}: {title}; {}; {secs:.2}s ({budget}{})",
        verdict(pass),
        o.detail,
        if in_time { "" } else { ", exceeded" }
    );
    pass
}

fn relative(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Derived weights of the power triplet at quad precision against the
/// binary64 closed form.
fn supersolution_identity() -> Outcome {
    const N: usize = 10_000;
    let grid = [-2.0, -1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 2.0, 5.0];
    let powers: Vec<Tabulated<f128>> = grid
        .iter()
        .map(|&e| {
            Tabulated::new(
                &PowerFn {
                    exponent: f128::lit(e),
                },
                N + 2,
            )
        })
        .collect();
    let mut worst = (0.0, 0.0, 0.0, 0);
    for (i, &alpha) in grid.iter().enumerate() {
        for (j, &beta) in grid.iter().enumerate() {
            let derived = derived_weights(&powers[i], &powers[j], N).expect("φ > 0 on ℕ");
            let params = WeightParams::new(alpha, beta);
            for (k, d) in derived.iter().enumerate() {
                let n = k + 1;
                let w = weight_w(&params, n).expect("n ≥ 1");
                let err = relative(d.to_f64_lossy(), w);
                if err > worst.0 {
                    worst = (err, alpha, beta, n);
                }
            }
        }
    }
    let (err, a, b, n) = worst;
    outcome(
        err <= 1e-12,
        format!("81 (α,β) pairs, n ≤ 10^4: max relative error {err:.2e} at α={a}, β={b}, n={n} (tol 1e-12)"),
    )
}

fn inequality_suite() -> Outcome {
    const TRIALS: u64 = 10_000;
    const SUPPORT: usize = 1_000;
    let mut worst = f64::INFINITY;
    let mut failures = 0;
    for &alpha in &[0.0, 0.5, 5.0] {
        let t = power_triplet(WeightParams::hardy_optimal(alpha)).tabulate(SUPPORT + 1);
        for trial in 0..TRIALS {
            let u = random_trial(42, trial, SUPPORT);
            match verify_inequality(&t, &u) {
                Ok(r) => {
                    let slack = (r.lhs - r.rhs) / (1.0 + r.lhs);
                    worst = worst.min(slack);
                    if r.lhs < r.rhs - 1e-10 * (1.0 + r.lhs) {
                        failures += 1;
                    }
                }
                Err(_) => failures += 1,
            }
        }
    }
    outcome(
        failures == 0,
        format!(
            "3 × 10^4 trials (seed 42, support ≤ 10^3): {failures} failures, min (lhs−rhs)/(1+lhs) = {worst:.3e}"
        ),
    )
}

fn pointwise_bound() -> Outcome {
    const N: usize = 1_000_000;
    let mut alphas: Vec<f64> = (0..20).map(|i| i as f64 * 0.05).collect();
    alphas.extend((0..=30).map(|i| 5.0 + i as f64 * 0.5));
    let mut worst = (f64::INFINITY, 0.0, 0);
    let mut failures = 0usize;
    for &alpha in &alphas {
        let params = WeightParams::hardy_optimal(alpha);
        let c = hardy_constant(alpha);
        for n in 1..=N {
            let m = WeightMargin::evaluate(&params, c, n).expect("n ≥ 1");
            if !m.holds(1e-12) {
                failures += 1;
            }
            let rel = m.margin / m.scale;
            if rel < worst.0 {
                worst = (rel, alpha, n);
            }
        }
    }
    let (rel, a, n) = worst;
    outcome(
        failures == 0,
        format!(
            "{} α values, n ≤ 10^6: {failures} violations, min margin/scale {rel:.3e} at α={a}, n={n}",
            alphas.len()
        ),
    )
}

fn sharp_constant_at_zero() -> Outcome {
    let est = sharp_constant_estimate(0.0, &[100, 1_000, 10_000, 100_000], 1e-10)
        .expect("valid schedule");
    let values: Vec<f64> = est.iter().map(|e| e.1).collect();
    let monotone = values.windows(2).all(|w| w[1] <= w[0]);
    let above = values.iter().all(|&v| v >= 0.25);
    let at_1e4 = values[2];
    let in_window = (0.25..=0.2501).contains(&at_1e4);
    outcome(
        monotone && above && in_window,
        format!(
            "λ_min(N=10^2..10^5) = {values:?}; nonincreasing {}, all ≥ 1/4 {}, λ_min(10^4) ∈ [0.25, 0.2501] {}",
            verdict(monotone),
            verdict(above),
            verdict(in_window)
        ),
    )
}

fn sharpness_upper_bounds() -> Outcome {
    let q0 = sweep(0.0, &[0.49], &[100_000])
        .expect("β = 0.49 is admissible")
        .rows[0]
        .quotient;
    let ok0 = q0 <= 0.26;
    let (ok5, q5) = match sweep(5.0, &[-1.99], &[100_000]) {
        Ok(r) => (r.rows[0].quotient <= 4.2, format!("{}", r.rows[0].quotient)),
        Err(e) => (false, format!("rejected ({e})")),
    };
    // Informational: the raw quotient at β = −1.99 and the admissible mirror.
    let u = test_function(-1.99, 100_000).expect("N ≥ 1");
    let raw = lhs_form(&u, 5.0) / rhs_form(&u, &PowerFn { exponent: 3.0 });
    let mirror = sweep_row(5.0, -2.01, 100_000).expect("admissible").quotient;
    outcome(
        ok0 && ok5,
        format!(
            "α=0, β=0.49: quotient {q0:.5} ≤ 0.26 {}; α=5, β=−1.99: {q5} ≤ 4.2 {} (raw quotient {raw:.4}, β=−2.01 gives {mirror:.4})",
            verdict(ok0),
            verdict(ok5)
        ),
    )
}

fn coefficient_positivity() -> Outcome {
    let mut alphas = vec![0.0];
    let mut a = 1.0 / 3.0;
    while a < 1.0 {
        alphas.push(a);
        a += 0.02;
    }
    let mut min_b = (f64::INFINITY, 0.0, 0);
    for &alpha in &alphas {
        for k in 3..=60 {
            let (v, _) = b_k_scaled(alpha, k).expect("k ≥ 2");
            if v < min_b.0 {
                min_b = (v, alpha, k);
            }
        }
    }
    let positive = min_b.0 >= -1e-12;

    let closed_err = alphas
        .iter()
        .map(|&a| {
            relative(b_k(a, 4).unwrap(), b4_closed(a))
                .max(relative(b_k(a, 6).unwrap(), b6_closed(a)))
        })
        .fold(0.0, f64::max);
    let closed = closed_err <= 1e-12;
    let at_zero = b_k(0.0, 4).unwrap() == 5.0 / 64.0 && b_k(0.0, 6).unwrap() == 21.0 / 512.0;
    outcome(
        positive && closed && at_zero,
        format!(
            "{} α values, 3 ≤ k ≤ 60: min b_k {:.3e} (α={:.4}, k={}) {}; closed forms max rel err {closed_err:.2e} {}; b_4(0)=5/64, b_6(0)=21/512 {}",
            alphas.len(),
            min_b.0,
            min_b.1,
            min_b.2,
            verdict(positive),
            verdict(closed),
            verdict(at_zero)
        ),
    )
}

fn limitation_results() -> Outcome {
    let mut parts = Vec::new();
    let mut all = true;

    let near_zero: Vec<f64> = [-2.0, -1.0, -0.5]
        .iter()
        .map(|&a| {
            remainder_scan(a, 0.01, 1_000)
                .expect("valid grid")
                .min_margin
        })
        .collect();
    let ok = near_zero.iter().all(|&m| m < 0.0);
    all &= ok;
    let listed: Vec<String> = near_zero.iter().map(|m| format!("{m:.2e}")).collect();
    parts.push(format!(
        "min_margin on (0,0.01] for α∈{{−2,−1,−0.5}} [{}] {}",
        listed.join(", "),
        verdict(ok)
    ));

    let mid: Vec<f64> = [1.5, 2.0, 3.0, 3.9]
        .iter()
        .map(|&a| remainder(a, 0.5).unwrap())
        .collect();
    let f2 = mid[1];
    let ok = mid.iter().all(|&m| m < 0.0) && (f2 + 0.0638).abs() <= 1e-3;
    all &= ok;
    parts.push(format!(
        "E(1/2) for α∈{{1.5,2,3,3.9}} {mid:.4?}, f(2)={f2:.5} {}",
        verdict(ok)
    ));

    // Stated pattern at α = 2k+1: b_i ≥ 0 for i ≤ k+1 and b_i < 0 for k+1 < i ≤ k_max.
    for k in 3..=5_i64 {
        let alpha = (2 * k + 1) as f64;
        let table = coefficient_signs(alpha, 60).unwrap();
        let mismatches: Vec<usize> = table
            .entries
            .iter()
            .filter(|e| {
                if e.k as i64 <= k + 1 {
                    e.sign == SignClass::Negative
                } else {
                    e.sign != SignClass::Negative
                }
            })
            .map(|e| e.k)
            .collect();
        let exact: Vec<String> = mismatches
            .iter()
            .map(|&i| {
                format!(
                    "b_{i}({alpha}) = {} exactly",
                    b_k(Rational64::from_integer(2 * k + 1), i).unwrap()
                )
            })
            .collect();
        let ok = mismatches.is_empty();
        all &= ok;
        parts.push(format!(
            "α={alpha} pattern {}{}",
            verdict(ok),
            if ok {
                String::new()
            } else {
                format!(" ({})", exact.join(", "))
            }
        ));
    }

    let t5 = coefficient_signs(5.0_f64, 6).unwrap();
    let (b4, b5, b6) = (t5.get(4).unwrap(), t5.get(5).unwrap(), t5.get(6).unwrap());
    let ok = b4.sign == SignClass::Zero
        && b4.value.abs() <= 1e-12
        && b5.value == -5.0
        && b6.value == -7.0;
    all &= ok;
    parts.push(format!(
        "α=5: b_4={}, b_5={}, b_6={} {}",
        b4.value,
        b5.value,
        b6.value,
        verdict(ok)
    ));

    outcome(all, parts.join("; "))
}

fn spectral_oracle() -> Outcome {
    let mut worst = (0.0, 0.0, 0);
    for &alpha in &[0.0, 0.5, 2.0, 5.0] {
        for n in 1..=8 {
            let exact = common::dense_min_eigenvalue(alpha, n);
            let got = min_eigenvalue(&build_pencil(alpha, n).unwrap(), 1e-13).unwrap();
            let err = (got - exact).abs() / (1.0 + exact.abs());
            if err > worst.0 {
                worst = (err, alpha, n);
            }
        }
    }
    outcome(
        worst.0 <= 1e-9,
        format!(
            "N ≤ 8, α ∈ {{0,0.5,2,5}}: max error {:.2e} at α={}, N={} (tol 1e-9)",
            worst.0, worst.1, worst.2
        ),
    )
}

fn report_determinism() -> Outcome {
    let runs: [&[&str]; 7] = [
        &["weight", "--alpha", "0", "--beta", "0.5", "--n-max", "2000"],
        &[
            "verify",
            "--alpha",
            "0",
            "--trials",
            "500",
            "--support-max",
            "200",
            "--seed",
            "42",
        ],
        &["sharp", "--alpha", "0", "--schedule", "100,1000,10000"],
        &["coeffs", "--alpha", "0.5", "--k-max", "60"],
        &["scan", "--alpha", "-1,0,0.5,2", "--points", "2000"],
        &["family", "--alpha", "0", "--n", "100,1000"],
        &["conjecture", "--k-max", "100"],
    ];
    let mut differing = Vec::new();
    let mut count = 0;
    for args in runs {
        for format in ["json", "csv"] {
            let run = || {
                let argv = [&["hardy"][..], args, &["--format", format]].concat();
                let cli = Cli::try_parse_from(argv).expect("valid arguments");
                render(&cli).expect("command runs")
            };
            let (a, b) = (run(), run());
            count += 1;
            if a != b || a.1.is_empty() {
                differing.push(format!("{} ({format})", args[0]));
            }
        }
    }
    outcome(
        differing.is_empty(),
        format!("{count} command/format pairs rerun; differing: {differing:?}"),
    )
}

fn main() {
    let results = [
        criterion(1, "supersolution identity", 5.0, supersolution_identity),
        criterion(2, "inequality property suite", 30.0, inequality_suite),
        criterion(3, "pointwise lower bound", 60.0, pointwise_bound),
        criterion(4, "sharp constant at α=0", 10.0, sharp_constant_at_zero),
        criterion(5, "sharpness upper bounds", 10.0, sharpness_upper_bounds),
        criterion(6, "coefficient positivity", 5.0, coefficient_positivity),
        criterion(7, "limitation results", 10.0, limitation_results),
        criterion(8, "small-instance spectral oracle", 1.0, spectral_oracle),
        criterion(9, "report determinism", f64::INFINITY, report_determinism),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
