//! The acceptance checks, shared by `lgq check` and the `acceptance` test target.

use geronimus_core::asymptotics::{
    estimate_order, inner_errors, lambda_errors, mehler_heine_q, ratio_pi_errors, ratio_r_errors,
    recurrence_remainders, relative_errors, second_kind_errors, strong_outer_errors,
};
use geronimus_core::geronimus::{
    gram_matrix, hypergeom_rep, lambda_nonlinear, lambda_rho, ode_residuals, perturbed_recurrence, LambdaTable,
};
use geronimus_core::second_kind::{
    asymp_coeffs, second_kind_forward, second_kind_quadrature_oracle, second_kind_values, second_kind_via_kummer,
};
use geronimus_core::{Complex64, Error, GeronimusParams, LogScaled};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Suite;
use crate::error::CliResult;

pub const GRID_ALPHA: [f64; 4] = [-0.5, 0.0, 0.5, 2.0];
pub const GRID_C: [f64; 3] = [-0.25, -1.0, -5.0];
pub const GRID_MASS: [f64; 4] = [0.0, 0.1, 1.0, 100.0];

/// Parameter grids and knobs for one run.
#[derive(Debug, Clone, Serialize)]
pub struct CheckConfig {
    pub alphas: Vec<f64>,
    pub cs: Vec<f64>,
    pub masses: Vec<f64>,
    /// `(alpha, c)` used by the large-n checks
    pub asymptotic_point: (f64, f64),
    /// extra `(alpha, c)` points for the Mehler-Heine check
    pub mehler_heine_points: Vec<(f64, f64)>,
    /// top of the dyadic grid `100, 200, ..`
    pub asymptotic_nmax: usize,
    pub seed: u64,
    pub oracle_tol: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            alphas: GRID_ALPHA.to_vec(),
            cs: GRID_C.to_vec(),
            masses: GRID_MASS.to_vec(),
            asymptotic_point: (0.0, -1.0),
            mehler_heine_points: vec![(0.0, -1.0), (0.5, -2.0)],
            asymptotic_nmax: 6400,
            seed: 1,
            oracle_tol: 1e-12,
        }
    }
}

impl CheckConfig {
    fn params(&self) -> impl Iterator<Item = GeronimusParams> + '_ {
        self.alphas.iter().flat_map(move |&a| {
            self.cs.iter().flat_map(move |&c| {
                self.masses
                    .iter()
                    .map(move |&m| GeronimusParams::new(a, c, m).expect("grid is admissible"))
            })
        })
    }

    fn alpha_c(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.alphas.iter().flat_map(move |&a| self.cs.iter().map(move |&c| (a, c)))
    }

    fn grid(&self) -> Vec<usize> {
        let mut g = vec![100usize];
        while g.last().unwrap() * 2 <= self.asymptotic_nmax {
            g.push(g.last().unwrap() * 2);
        }
        g
    }
}

/// Order-fit details of an item.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FitInfo {
    pub claimed: f64,
    pub band: f64,
    pub r2_min: f64,
    pub p_hat: f64,
    pub r2: f64,
}

/// One measured quantity against its tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct Item {
    pub suite: &'static str,
    pub criterion: u8,
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub fit: Option<FitInfo>,
    pub passed: bool,
    /// reported but not gating
    pub informational: bool,
    pub note: Option<String>,
}

impl Item {
    fn max_error(suite: &'static str, criterion: u8, name: String, measured: f64, tolerance: f64) -> Self {
        Self {
            suite,
            criterion,
            name,
            measured,
            tolerance,
            fit: None,
            passed: measured < tolerance,
            informational: false,
            note: None,
        }
    }

    fn info(mut self) -> Self {
        self.informational = true;
        self
    }
}

fn label(p: GeronimusParams) -> String {
    format!("alpha={} c={} N={}", p.alpha(), p.c(), p.mass())
}

fn rel(a: LogScaled, b: LogScaled) -> f64 {
    if a.is_zero() && b.is_zero() {
        return 0.0;
    }
    ((a - b) / b).to_f64().abs()
}

/// Criterion 1: normalized Gram off-diagonals of `Q^_0 .. Q^_12`.
pub fn gram(cfg: &CheckConfig) -> CliResult<Vec<Item>> {
    cfg.params()
        .map(|p| {
            let g = gram_matrix(12, p)?;
            Ok(Item::max_error("gram", 1, format!("gram offdiag {}", label(p)), g.max_offdiag, 1e-8))
        })
        .collect()
}

/// Criterion 2: continued-fraction values against the quadrature and Kummer routes.
pub fn oracle(cfg: &CheckConfig) -> CliResult<Vec<Item>> {
    let mut items = Vec::new();
    for (a, c) in cfg.alpha_c() {
        let f = second_kind_values(20, a, c)?;
        let mut quad = 0.0f64;
        let mut kummer = 0.0f64;
        for (n, fv) in f.iter().enumerate() {
            let q = second_kind_quadrature_oracle(n, a, c, cfg.oracle_tol)?;
            quad = quad.max((fv.to_f64() - q).abs() / q.abs());
            kummer = kummer.max(rel(*fv, second_kind_via_kummer(n, a, c)?));
        }
        let tag = format!("alpha={a} c={c} n<=20");
        items.push(Item::max_error("oracle", 2, format!("F vs quadrature {tag}"), quad, 1e-7));
        items.push(Item::max_error("oracle", 2, format!("F vs Kummer U {tag}"), kummer, 1e-7));
    }
    Ok(items)
}

const RECURRENCE_POINTS: [(f64, f64); 3] = [(-2.0, 0.0), (-0.5, 1.0), (2.0, 1.0)];

/// Criterion 3: recurrence closure and agreement of the three Lambda routes.
pub fn recurrence(cfg: &CheckConfig) -> CliResult<Vec<Item>> {
    let mut items = Vec::new();
    for p in cfg.params() {
        let rec = perturbed_recurrence(30, p)?;
        let table = LambdaTable::new(p, 31)?;
        let mut worst = 0.0f64;
        for &(re, im) in &RECURRENCE_POINTS {
            let z = Complex64::new(re, im);
            let mut prev = table.eval_q(0, z)?;
            let mut cur = table.eval_q(1, z)?;
            for n in 1..=30 {
                let next = cur * (z - rec.beta_t[n]) - prev * rec.gamma_t[n];
                let exact = table.eval_q(n + 1, z)?;
                worst = worst.max((next.ratio(exact) - 1.0).norm());
                prev = cur;
                cur = next;
            }
        }
        items.push(Item::max_error(
            "recurrence",
            3,
            format!("three-term recurrence vs connection n<=30 {}", label(p)),
            worst,
            1e-10,
        ));
        let closure = (1..=30).map(|n| rec.closure_residual(n, p.alpha())).fold(0.0, f64::max);
        items.push(Item::max_error(
            "recurrence",
            3,
            format!("closure residual n<=30 {}", label(p)),
            closure,
            1e-10,
        ));

        let direct = LambdaTable::new(p, 40)?;
        let nonlinear = lambda_nonlinear(40, p)?;
        let rho = lambda_rho(40, p)?;
        let mut routes = 0.0f64;
        for n in 1..=40 {
            let d = direct.lambda(n);
            routes = routes.max((nonlinear[n] - d).abs() / d).max((rho[n] - d).abs() / d);
        }
        let item = Item::max_error(
            "recurrence",
            3,
            format!("Lambda routes n<=40 {}", label(p)),
            routes,
            1e-8,
        );
        // forward routes cannot follow the minimal solution when N = 0
        items.push(if p.mass() == 0.0 { item.info() } else { item });
    }
    Ok(items)
}

fn random_points(seed: u64, count: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let re = rng.gen_range(-4.0..4.0);
            let im: f64 = rng.gen_range(0.5..4.0);
            Complex64::new(re, if rng.gen::<bool>() { im } else { -im })
        })
        .collect()
}

/// Criterion 4, first half: the 2F2 form against the connection formula.
pub fn hypergeom(cfg: &CheckConfig) -> CliResult<Vec<Item>> {
    let zs = random_points(cfg.seed, 5);
    let mut items = Vec::new();
    for p in cfg.params() {
        let table = LambdaTable::new(p, 20)?;
        let mut worst = 0.0f64;
        let mut skipped = 0;
        for n in 1..=20 {
            let rep = match hypergeom_rep(n, p) {
                Ok(r) => r,
                Err(Error::Degenerate { .. }) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(e.into()),
            };
            for &z in &zs {
                let q = table.eval_q(n, z)?;
                worst = worst.max((rep.eval(z)?.ratio(q) - 1.0).norm());
            }
        }
        let mut name = format!("2F2 form vs connection n<=20 {}", label(p));
        if skipped > 0 {
            name.push_str(&format!(" ({skipped} degenerate degrees skipped)"));
        }
        items.push(Item::max_error("hypergeom", 4, name, worst, 1e-11));
    }
    Ok(items)
}

/// Criterion 4, second half: residuals in the second- and third-order equations.
pub fn ode(cfg: &CheckConfig) -> CliResult<Vec<Item>> {
    let zs = random_points(cfg.seed, 5);
    let mut items = Vec::new();
    for p in cfg.params() {
        let (mut r2, mut r3) = (0.0f64, 0.0f64);
        for n in 1..=10 {
            for &z in &zs {
                let (a, b) = ode_residuals(n, p, z)?.relative();
                r2 = r2.max(a);
                r3 = r3.max(b);
            }
        }
        items.push(Item::max_error("ode", 4, format!("2nd-order ODE n<=10 {}", label(p)), r2, 1e-9));
        items.push(Item::max_error("ode", 4, format!("3rd-order ODE n<=10 {}", label(p)), r3, 1e-9));
    }
    Ok(items)
}

/// Required ratio of the leading to the next remainder term at the smallest n.
pub const LEADING_DOMINANCE: f64 = 10.0;

fn fit_item(name: String, grid: &[usize], errors: &[f64], claimed: f64) -> CliResult<Item> {
    let n: Vec<f64> = grid.iter().map(|&k| k as f64).collect();
    let f = estimate_order(&n, errors)?;
    let (band, r2_min) = (0.15, 0.98);
    Ok(Item {
        suite: "asymptotics",
        criterion: 5,
        name,
        measured: f.p_hat,
        tolerance: band,
        fit: Some(FitInfo {
            claimed,
            band,
            r2_min,
            p_hat: f.p_hat,
            r2: f.r2,
        }),
        passed: f.within(claimed, band, r2_min),
        informational: false,
        note: None,
    })
}

/// Criterion 5: fitted convergence orders of the large-n formulas.
pub fn orders(cfg: &CheckConfig) -> CliResult<Vec<Item>> {
    let grid = cfg.grid();
    let (a, c) = cfg.asymptotic_point;
    let z = Complex64::new(-4.0, 0.0);
    let x0 = 4.0;
    let mut items = Vec::new();
    for mass in [1.0, 0.0] {
        let p = GeronimusParams::new(a, c, mass)?;
        let tag = label(p);
        items.push(fit_item(format!("Lambda_n {tag}"), &grid, &lambda_errors(p, &grid)?, 0.5)?);
        items.push(fit_item(
            format!("strong outer z=-4 {tag}"),
            &grid,
            &strong_outer_errors(p, z, &grid)?,
            0.5,
        )?);
        items.push(fit_item(
            format!("relative remainder z=-4 {tag}"),
            &grid,
            &relative_errors(p, z, &grid)?,
            1.5,
        )?);
        items.push(fit_item(
            format!("inner (envelope-normalized) x=4 {tag}"),
            &grid,
            &inner_errors(p, x0, &grid, 64)?,
            0.5,
        )?);
        let rem = recurrence_remainders(p, &grid)?;
        let beta: Vec<f64> = rem.beta.iter().map(|v| v.abs()).collect();
        let gamma: Vec<f64> = rem.gamma.iter().map(|v| v.abs()).collect();
        items.push(fit_item(format!("beta~ remainder {tag}"), &grid, &beta, 1.5)?.info());
        items.push(fit_item(format!("gamma~ remainder {tag}"), &grid, &gamma, 1.5)?.info());
    }
    let tag = format!("alpha={a} c={c}");
    let mut order0 = fit_item(
        format!("F order 0 {tag}"),
        &grid,
        &second_kind_errors(a, c, 0, &grid)?,
        0.5,
    )?;
    // The order-0 remainder is e1/s + e2/s^2 + .. with s = sqrt(-c n). The fit
    // only measures 1/2 if the first term dominates from the start of the grid.
    let [_, e1, e2] = asymp_coeffs(a, Complex64::new(c, 0.0));
    let dominance = e1.norm() * (-c * grid[0] as f64).sqrt() / e2.norm();
    if dominance < LEADING_DOMINANCE {
        order0.informational = true;
        order0.note = Some(format!(
            "relaxed: e1 = {:.3e} is small against e2 = {:.3e} (e1 sqrt(-c n_min)/e2 = {dominance:.2} < {LEADING_DOMINANCE}), \
             so the n^(-1/2) term does not dominate on this grid",
            e1.norm(),
            e2.norm()
        ));
    }
    items.push(order0);
    items.push(fit_item(
        format!("F order 1 {tag}"),
        &grid,
        &second_kind_errors(a, c, 1, &grid)?,
        1.0,
    )?);
    // away from c, where these ratios would just repeat the Lambda fits
    let w = Complex64::new(-2.0, 1.0);
    items.push(fit_item(format!("pi_n ratio z=-2+i alpha={a}"), &grid, &ratio_pi_errors(a, w, &grid)?, 0.5)?);
    items.push(fit_item(format!("r_n ratio z=-2+i alpha={a}"), &grid, &ratio_r_errors(a, w, &grid)?, 0.5)?);
    Ok(items)
}

/// Criterion 6: Mehler-Heine limit at n = 8192.
pub fn mehler_heine(cfg: &CheckConfig) -> CliResult<Vec<Item>> {
    let mut items = Vec::new();
    for &(a, c) in &cfg.mehler_heine_points {
        for mass in [1.0, 0.0] {
            let p = GeronimusParams::new(a, c, mass)?;
            let mut worst = 0.0f64;
            for z in [0.0, 1.0, 3.0] {
                worst = worst.max(mehler_heine_q(8192, p, Complex64::new(z, 0.0))?.error());
            }
            items.push(Item::max_error(
                "asymptotics",
                6,
                format!("Mehler-Heine n=8192 z in {{0,1,3}} {}", label(p)),
                worst,
                0.02,
            ));
        }
    }
    Ok(items)
}

/// Criterion 7: the two branches of Lambda_400 at (0, -1) straddle n + 1/4.
pub fn branch_separation() -> CliResult<Vec<Item>> {
    let n = 400;
    let target = (n as f64).sqrt(); // sqrt(-c n) at c = -1
    let mut items = Vec::new();
    for (mass, sign) in [(1.0, 1.0), (0.0, -1.0)] {
        let p = GeronimusParams::new(0.0, -1.0, mass)?;
        let lam = LambdaTable::new(p, n)?.lambda(n);
        let offset = lam - (n as f64 + 0.25);
        let dev = (offset - sign * target).abs() / target;
        items.push(Item::max_error(
            "asymptotics",
            7,
            format!("Lambda_400 - 400.25 = {offset:+.4} vs {:+} (relative deviation) {}", sign * target, label(p)),
            dev,
            0.1,
        ));
    }
    Ok(items)
}

/// Criterion 8: the forward recurrence for F^_n breaks down early, the
/// continued fraction does not.
pub fn stability() -> CliResult<Vec<Item>> {
    let (a, c) = (0.0, -1.0);
    let nmax = 200;
    let cf = second_kind_values(nmax, a, c)?;
    let fw = second_kind_forward(nmax, a, c)?;
    let errs: Vec<f64> = cf.iter().zip(&fw).map(|(x, y)| rel(*y, *x)).collect();
    let first = errs.iter().position(|&e| e > 1.0).unwrap_or(nmax + 1);
    let mut items = vec![
        Item {
            passed: first < 80,
            ..Item::max_error(
                "stability",
                8,
                format!(
                    "first n with forward-recurrence error > 1 (error at n=60: {:.2e}, n=80: {:.2e})",
                    errs[60], errs[80]
                ),
                first as f64,
                80.0,
            )
        },
    ];
    let mut worst = 0.0f64;
    let f = second_kind_values(500, a, c)?;
    for (n, v) in f.iter().enumerate() {
        worst = worst.max(rel(*v, second_kind_via_kummer(n, a, c)?));
    }
    items.push(Item::max_error(
        "stability",
        8,
        "continued fraction vs Kummer U n<=500".to_string(),
        worst,
        1e-7,
    ));
    Ok(items)
}

/// Items of one acceptance criterion (1..=8).
pub fn criterion(k: u8, cfg: &CheckConfig) -> CliResult<Vec<Item>> {
    match k {
        1 => gram(cfg),
        2 => oracle(cfg),
        3 => recurrence(cfg),
        4 => {
            let mut v = hypergeom(cfg)?;
            v.extend(ode(cfg)?);
            Ok(v)
        }
        5 => orders(cfg),
        6 => mehler_heine(cfg),
        7 => branch_separation(),
        8 => stability(),
        _ => Ok(Vec::new()),
    }
}

pub fn run_suite(suite: Suite, cfg: &CheckConfig) -> CliResult<Vec<Item>> {
    let mut items = Vec::new();
    match suite {
        Suite::Gram => items.extend(gram(cfg)?),
        Suite::Oracle => items.extend(oracle(cfg)?),
        Suite::Recurrence => items.extend(recurrence(cfg)?),
        Suite::Hypergeom => items.extend(hypergeom(cfg)?),
        Suite::Ode => items.extend(ode(cfg)?),
        Suite::Asymptotics => {
            items.extend(orders(cfg)?);
            items.extend(mehler_heine(cfg)?);
            items.extend(branch_separation()?);
        }
        Suite::Stability => items.extend(stability()?),
        Suite::All => {
            for k in 1..=8 {
                items.extend(criterion(k, cfg)?);
            }
        }
    }
    Ok(items)
}

/// True when every gating item passed.
pub fn all_passed(items: &[Item]) -> bool {
    items.iter().all(|i| i.passed || i.informational)
}
