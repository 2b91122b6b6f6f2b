//! One function per subcommand. Each builds a [`Report`] whose verdict is
//! decided by the predicate of that command; `runtime_ms` is left to the
//! caller.

use hardy_core::sharpness::{default_beta_grid, sweep_row};
use hardy_core::spectral::DEFAULT_TOL;
use hardy_core::supersolution::{lhs_form_weighted, INEQUALITY_RTOL};
use hardy_core::weights::WeightMargin;
use hardy_core::{
    build_pencil, coefficient_signs, conjecture_scan, hardy_constant, min_eigenvalue,
    power_triplet, remainder_scan, rhs_form, verify_inequality, HardyError, LatticeFunction,
    WeightParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use crate::args::{Command, Global};
use crate::error::CliError;
use crate::report::{num, Report, Verdict};

pub const WEIGHT_TOL: f64 = 1e-12;
pub const COEFF_TOL: f64 = 1e-12;
pub const SCAN_TOL: f64 = 1e-12;

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: &Command, g: &Global) -> Result<Report> {
    match *command {
        Command::Weight { alpha, beta, n_max } => weight(g, alpha, beta, n_max),
        Command::Verify {
            alpha,
            beta,
            trials,
            support_max,
        } => verify(g, alpha, beta, trials, support_max),
        Command::Sharp {
            alpha,
            ref schedule,
        } => sharp(g, alpha, schedule),
        Command::Coeffs { alpha, k_max } => coeffs(g, alpha, k_max),
        Command::Scan {
            ref alpha,
            x_max,
            points,
        } => scan(g, alpha, x_max, points),
        Command::Family {
            alpha,
            ref beta,
            ref n_cuts,
        } => family(g, alpha, beta, n_cuts),
        Command::Conjecture { ref alpha, k_max } => conjecture(alpha, k_max),
    }
}

fn finite(name: &str, x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Usage(format!("--{name} must be finite, got {x}")))
    }
}

fn tolerance(g: &Global, default: f64) -> Result<f64> {
    match g.tol {
        None => Ok(default),
        Some(t) if t.is_finite() && t >= 0.0 => Ok(t),
        Some(t) => Err(CliError::Usage(format!(
            "--tol must be a nonnegative number, got {t}"
        ))),
    }
}

/// `α ∈ [0,1) ∪ [5,∞)`, where `(α−1)²/4` is known to be sharp.
pub fn sharp_range(alpha: f64) -> bool {
    (0.0..1.0).contains(&alpha) || alpha >= 5.0
}

/// `α ∈ {0} ∪ [1/3,1)`, where every `b_k(α)` is known to be nonnegative.
pub fn positive_coefficient_range(alpha: f64) -> bool {
    alpha == 0.0 || (1.0 / 3.0..1.0).contains(&alpha)
}

fn weight(g: &Global, alpha: f64, beta: f64, n_max: usize) -> Result<Report> {
    let (alpha, beta) = (finite("alpha", alpha)?, finite("beta", beta)?);
    if n_max == 0 {
        return Err(CliError::Usage("--n-max must be positive".into()));
    }
    let tol = tolerance(g, WEIGHT_TOL)?;
    let params = WeightParams::new(alpha, beta);
    let c = hardy_constant(alpha);
    let margins = (1..=n_max)
        .into_par_iter()
        .map(|n| WeightMargin::evaluate(&params, c, n))
        .collect::<std::result::Result<Vec<_>, _>>()?;

    let mut r = Report::new("weight", &["n", "weight", "margin", "scale", "ok"]);
    r.param("alpha", num(alpha))
        .param("beta", num(beta))
        .param("n_max", n_max)
        .param("c", num(c))
        .param("tol", num(tol));
    let mut all = true;
    for m in &margins {
        let ok = m.holds(tol);
        all &= ok;
        r.push_row(vec![
            Value::from(m.n),
            num(m.weight),
            num(m.margin),
            num(m.scale),
            Value::from(ok),
        ]);
    }
    r.min_margin = margins.iter().map(|m| m.margin).reduce(f64::min);
    r.verdict = Verdict::from_pass(all);
    Ok(r)
}

/// The `trial`-th random `u`: support length uniform in `[1, support_max]`,
/// values uniform in `[−1, 1]`, from stream `trial` of the seeded generator.
pub fn random_trial(seed: u64, trial: u64, support_max: usize) -> LatticeFunction<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let len = rng.gen_range(1..=support_max);
    let values: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    LatticeFunction::from_interior(values)
}

fn verify(
    g: &Global,
    alpha: f64,
    beta: Option<f64>,
    trials: usize,
    support_max: usize,
) -> Result<Report> {
    let alpha = finite("alpha", alpha)?;
    let beta = finite("beta", beta.unwrap_or((1.0 - alpha) / 2.0))?;
    if support_max == 0 {
        return Err(CliError::Usage("--support-max must be positive".into()));
    }
    let tol = tolerance(g, INEQUALITY_RTOL)?;
    let triplet = power_triplet(WeightParams::new(alpha, beta)).tabulate(support_max + 1);

    let outcomes = (0..trials as u64)
        .into_par_iter()
        .map(|trial| {
            let u = random_trial(g.seed, trial, support_max);
            let (lhs, rhs, criterion_ok) = match verify_inequality(&triplet, &u) {
                Ok(chk) => (chk.lhs, chk.rhs, true),
                Err(HardyError::CriterionViolated { .. }) => (
                    lhs_form_weighted(&u, &triplet.v),
                    rhs_form(&u, &triplet.w),
                    false,
                ),
                Err(e) => return Err(e),
            };
            let pass = criterion_ok && lhs >= rhs - tol * (1.0 + lhs.abs());
            Ok((trial, u.support_end() - 1, lhs, rhs, pass))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;

    let mut r = Report::new("verify", &["trial", "support", "lhs", "rhs", "gap", "pass"]);
    r.param("alpha", num(alpha))
        .param("beta", num(beta))
        .param("trials", trials)
        .param("support_max", support_max)
        .param("seed", g.seed)
        .param("tol", num(tol));
    let mut all = true;
    for &(trial, support, lhs, rhs, pass) in &outcomes {
        all &= pass;
        r.push_row(vec![
            Value::from(trial),
            Value::from(support),
            num(lhs),
            num(rhs),
            num(lhs - rhs),
            Value::from(pass),
        ]);
    }
    r.min_margin = outcomes.iter().map(|o| o.2 - o.3).reduce(f64::min);
    r.verdict = Verdict::from_pass(all);
    Ok(r)
}

fn sharp(g: &Global, alpha: f64, schedule: &[usize]) -> Result<Report> {
    let alpha = finite("alpha", alpha)?;
    if schedule.is_empty() || schedule[0] == 0 || schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(
            "--schedule must be a strictly increasing list of positive sizes".into(),
        ));
    }
    let tol = tolerance(g, DEFAULT_TOL)?;
    if tol <= 0.0 {
        return Err(CliError::Usage("sharp needs --tol > 0".into()));
    }
    let lambdas = schedule
        .par_iter()
        .map(|&n| min_eigenvalue(&build_pencil(alpha, n)?, tol))
        .collect::<std::result::Result<Vec<_>, _>>()?;

    let c = hardy_constant(alpha);
    let graded = sharp_range(alpha);
    let mut r = Report::new("sharp", &["N", "lambda_min", "bound", "margin", "ok"]);
    r.param("alpha", num(alpha))
        .param("schedule", schedule.to_vec())
        .param("tol", num(tol))
        .param("proven_range", graded);
    let mut all = true;
    for (i, (&n, &lam)) in schedule.iter().zip(&lambdas).enumerate() {
        let monotone = i == 0 || lam <= lambdas[i - 1] + tol * (1.0 + lambdas[i - 1].abs());
        let ok = monotone && lam >= c - tol * (1.0 + c);
        all &= ok;
        r.push_row(vec![
            Value::from(n),
            num(lam),
            num(c),
            num(lam - c),
            Value::from(ok),
        ]);
    }
    r.min_margin = lambdas.iter().map(|&l| l - c).reduce(f64::min);
    r.verdict = if graded {
        Verdict::from_pass(all)
    } else {
        Verdict::Exploratory
    };
    Ok(r)
}

fn coeffs(g: &Global, alpha: f64, k_max: usize) -> Result<Report> {
    let alpha = finite("alpha", alpha)?;
    if k_max < 2 {
        return Err(CliError::Usage("--k-max must be at least 2".into()));
    }
    let tol = tolerance(g, COEFF_TOL)?;
    let table = coefficient_signs(alpha, k_max)?;
    let graded = positive_coefficient_range(alpha);

    let mut r = Report::new("coeffs", &["k", "value", "sign", "ok"]);
    r.param("alpha", num(alpha))
        .param("k_max", k_max)
        .param("tol", num(tol))
        .param("proven_range", graded);
    let mut all = true;
    for e in &table.entries {
        let ok = e.value >= -tol;
        all &= ok;
        r.push_row(vec![
            Value::from(e.k),
            num(e.value),
            Value::from(e.sign.as_str()),
            Value::from(ok),
        ]);
    }
    r.min_margin = table.entries.iter().map(|e| e.value).reduce(f64::min);
    r.verdict = if graded {
        Verdict::from_pass(all)
    } else {
        Verdict::Exploratory
    };
    Ok(r)
}

fn sorted(values: &[f64], name: &str) -> Result<Vec<f64>> {
    let mut v = values
        .iter()
        .map(|&x| finite(name, x))
        .collect::<Result<Vec<_>>>()?;
    v.sort_by(f64::total_cmp);
    v.dedup();
    Ok(v)
}

fn scan(g: &Global, alphas: &[f64], x_max: f64, points: usize) -> Result<Report> {
    let alphas = sorted(alphas, "alpha")?;
    let tol = tolerance(g, SCAN_TOL)?;
    let scans = alphas
        .par_iter()
        .map(|&a| remainder_scan(a, x_max, points))
        .collect::<std::result::Result<Vec<_>, _>>()?;

    let mut r = Report::new(
        "scan",
        &[
            "alpha",
            "min_margin",
            "argmin_x",
            "margin_at_end",
            "sign_changes",
            "ok",
        ],
    );
    r.param("alpha", alphas.iter().map(|&a| num(a)).collect::<Vec<_>>())
        .param("x_max", num(x_max))
        .param("points", points)
        .param("tol", num(tol));
    let mut all = true;
    for s in &scans {
        let ok = s.min_margin >= -tol;
        all &= ok;
        r.push_row(vec![
            num(s.alpha),
            num(s.min_margin),
            num(s.argmin_x),
            num(s.margin_at_end),
            Value::from(s.sign_changes.len()),
            Value::from(ok),
        ]);
    }
    r.min_margin = scans.iter().map(|s| s.min_margin).reduce(f64::min);
    r.verdict = Verdict::from_pass(all);
    Ok(r)
}

fn family(g: &Global, alpha: f64, betas: &[f64], n_cuts: &[usize]) -> Result<Report> {
    let alpha = finite("alpha", alpha)?;
    let betas = if betas.is_empty() {
        default_beta_grid(alpha)
    } else {
        sorted(betas, "beta")?
    };
    let mut n_cuts = n_cuts.to_vec();
    n_cuts.sort_unstable();
    n_cuts.dedup();
    if n_cuts.first() == Some(&0) || n_cuts.is_empty() {
        return Err(CliError::Usage("--n must list positive sizes".into()));
    }
    let tol = tolerance(g, DEFAULT_TOL)?;
    if tol <= 0.0 {
        return Err(CliError::Usage("family needs --tol > 0".into()));
    }

    let pairs: Vec<(f64, usize)> = betas
        .iter()
        .flat_map(|&b| n_cuts.iter().map(move |&n| (b, n)))
        .collect();
    let rows = pairs
        .par_iter()
        .map(|&(b, n)| sweep_row(alpha, b, n))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let lambdas = n_cuts
        .par_iter()
        .map(|&n| min_eigenvalue(&build_pencil(alpha, 2 * n)?, tol))
        .collect::<std::result::Result<Vec<_>, _>>()?;

    let c = hardy_constant(alpha);
    let graded = sharp_range(alpha);
    let mut r = Report::new(
        "family",
        &["beta", "N", "lhs", "rhs", "quotient", "lambda_2n", "ok"],
    );
    r.param("alpha", num(alpha))
        .param("beta", betas.iter().map(|&b| num(b)).collect::<Vec<_>>())
        .param("n", n_cuts.clone())
        .param("c", num(c))
        .param("tol", num(tol))
        .param("proven_range", graded);
    let mut all = true;
    for (i, row) in rows.iter().enumerate() {
        let lam = lambdas[i % n_cuts.len()];
        let sandwich = lam - tol * (1.0 + lam.abs()) <= row.quotient;
        let ok = sandwich && (!graded || row.quotient >= c - tol * (1.0 + c));
        all &= ok;
        r.push_row(vec![
            num(row.beta),
            Value::from(row.n_cut),
            num(row.lhs),
            num(row.rhs),
            num(row.quotient),
            num(lam),
            Value::from(ok),
        ]);
    }
    r.min_margin = rows.iter().map(|row| row.quotient - c).reduce(f64::min);
    r.verdict = if graded {
        Verdict::from_pass(all)
    } else {
        Verdict::Exploratory
    };
    Ok(r)
}

fn conjecture(alphas: &[f64], k_max: usize) -> Result<Report> {
    let alphas = if alphas.is_empty() {
        (0..=33).map(|i| i as f64 / 100.0).collect()
    } else {
        sorted(alphas, "alpha")?
    };
    if k_max < 3 {
        return Err(CliError::Usage("--k-max must be at least 3".into()));
    }
    let findings = alphas
        .par_iter()
        .map(|&a| conjecture_scan(&[a], k_max))
        .collect::<std::result::Result<Vec<_>, _>>()?;

    let mut r = Report::new("conjecture", &["alpha", "first_negative_k"]);
    r.param("alpha", alphas.iter().map(|&a| num(a)).collect::<Vec<_>>())
        .param("k_max", k_max);
    for f in findings.iter().flatten() {
        r.push_row(vec![
            num(f.alpha),
            f.first_negative_k.map_or(Value::Null, Value::from),
        ]);
    }
    r.verdict = Verdict::Exploratory;
    Ok(r)
}
