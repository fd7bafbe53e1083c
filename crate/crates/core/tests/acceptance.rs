//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p primezeta --test acceptance`.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use primezeta::action::{
    self, action_analytic, action_numeric, dispersion_ratio, f_function, f_scan_tau, locate_root,
    loglog_fit, parametric_sigma_scan, ScanSpec, Window, F_SCAN_TAU,
};
use primezeta::chebyshev::{check_psi_bound, PsiTable};
use primezeta::estimates::{check_pi_bound, BoundName, BoundVariant};
use primezeta::euler::xi_eulap;
use primezeta::primes::{self, oracle_is_prime, Mode};
use primezeta::zeta::{zeta_ex, ComplexPoint, TruncatedEta};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn within(x: f64, target: f64, tol: f64) -> bool {
    (x - target).abs() <= tol
}

fn strip_grid() -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 1..=9 {
        for j in -30..=30 {
            out.push((i as f64 / 10.0, j as f64));
        }
    }
    out
}

fn oracle_mismatches(limit: u64, mode: Mode) -> usize {
    primes::indicator_table(limit, mode)
        .iter()
        .enumerate()
        .filter(|&(u, &lam)| (lam == 1) != oracle_is_prime(u as u64))
        .count()
}

fn c1_prime_oracle() -> Outcome {
    let lit = oracle_mismatches(10_000, Mode::Literal);
    let opt = oracle_mismatches(100_000, Mode::Optimized);
    outcome(
        lit == 0 && opt == 0,
        format!("mismatches literal[0,1e4]={lit} optimized[0,1e5]={opt}"),
    )
}

fn c2_counting() -> Outcome {
    let c = |u| primes::count(u, 2, Mode::Optimized).unwrap().count;
    let (a, b, d) = (c(100), c(1000), c(100_000));
    outcome(
        a == 25 && b == 168 && d == 9592,
        format!("C(100,2)={a} C(1000,2)={b} C(1e5,2)={d}"),
    )
}

fn c3_euler() -> Outcome {
    let x2 = xi_eulap(2.0, 100, Mode::Optimized).unwrap();
    let x4 = xi_eulap(4.0, 100, Mode::Optimized).unwrap();
    let z2 = PI * PI / 6.0;
    let rel = (z2 - x2) / z2;
    let pass = within(x2, 1.644515221724293, 1e-12)
        && within(x4, 1.0823232233369194, 1e-12)
        && within(rel, 2.546e-4, 1e-7);
    outcome(
        pass,
        format!(
            "xi(2,100)={x2:.16} xi(4,100)={x4:.16} (target 1.0823232233369194, gap {:.3e}) rel={rel:.7e}",
            x4 - 1.0823232233369194
        ),
    )
}

fn c4_partition() -> Outcome {
    let eta = TruncatedEta::new(100, Mode::Optimized).unwrap();
    let mut worst: f64 = 0.0;
    for i in 1..=9 {
        for j in -300..=300 {
            let (s, t) = (i as f64 / 10.0, j as f64 / 10.0);
            let ex = eta.ex(s, t).unwrap();
            let app = eta.app(s, t).unwrap();
            worst = worst.max((ex.re - app.re).abs()).max((ex.im - app.im).abs());
        }
    }
    outcome(worst < 1e-13, format!("max |app - ex| = {worst:.3e}"))
}

fn c5_action_closed_form() -> Outcome {
    let mut worst: f64 = 0.0;
    for (s, t) in strip_grid() {
        let p = ComplexPoint::new(s, t, 100).unwrap();
        let num = action_numeric(p, 0.0, 2.0 * PI, 1e-8).unwrap();
        worst = worst.max((num - action_analytic(p).unwrap()).abs());
    }
    outcome(worst < 1e-8, format!("max |numeric - closed form| = {worst:.3e} on 9x61"))
}

fn c6a_root_low() -> Outcome {
    let spec = ScanSpec::standard(32.9, 1.5, 100);
    let (scan, root) = locate_root(&spec).unwrap();
    let (w, e) = (scan.omega.refined, scan.eta.refined);
    let pass = within(w, 32.406, 0.01)
        && within(e, 33.40, 0.01)
        && within(root.sigma, 0.497, 0.005)
        && within(root.tau, 32.903, 0.01);
    outcome(
        pass,
        format!(
            "omega*={w:.4} eta*={e:.4} sigma={:.4} tau={:.4} residual={:.2e} (coarse omega={:.3} eta={:.3}; parabola omega={:.4} eta={:.4})",
            root.sigma, root.tau, root.residual, scan.omega.coarse, scan.eta.coarse,
            scan.omega.interpolated, scan.eta.interpolated
        ),
    )
}

fn c6b_root_high() -> Outcome {
    let spec = ScanSpec::standard(998.8, 0.6, 1000);
    let (scan, root) = locate_root(&spec).unwrap();
    let pass = within(root.sigma, 0.495, 0.01) && within(root.tau, 998.825, 0.01);
    outcome(
        pass,
        format!(
            "omega*={:.4} eta*={:.4} sigma={:.4} tau={:.4} residual={:.2e}",
            scan.omega.refined, scan.eta.refined, root.sigma, root.tau, root.residual
        ),
    )
}

fn parametric(taus: &[f64], n_max: u64) -> Outcome {
    let mins = parametric_sigma_scan(taus, Window::new(0.1, 0.9), 0.1, 0.01, n_max).unwrap();
    let eps = 1e-9;
    let pass = mins
        .iter()
        .all(|m| within(m.sigma_coarse, 0.5, 0.1 + eps) && within(m.sigma_zoom, 0.5, 0.01 + eps));
    let list: Vec<String> = mins
        .iter()
        .map(|m| format!("{}:{:.1}/{:.2}", m.tau, m.sigma_coarse, m.sigma_zoom))
        .collect();
    outcome(pass, format!("tau:coarse/zoom argmin {}", list.join(" ")))
}

fn c7a_parametric_low() -> Outcome {
    parametric(&[14.13, 21.02, 25.01, 30.43, 32.94], 100)
}

fn c7b_parametric_high() -> Outcome {
    parametric(&[996.205, 997.511, 998.827, 999.792, 1001.349], 1000)
}

fn c8_f_function() -> Outcome {
    let mut sym: f64 = 0.0;
    let mut ratio: f64 = 0.0;
    for (s, t) in strip_grid() {
        if s < 1.0 {
            let a = f_function(s, t, 100).unwrap();
            let b = f_function(primezeta::search::snap(1.0 - s), t, 100).unwrap();
            sym = sym.max((a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE));
        }
        let p = ComplexPoint::new(s, t, 100).unwrap();
        if zeta_ex(p).unwrap().modulus() > 0.0 {
            ratio = ratio.max((dispersion_ratio(p).unwrap() - 5.0 / (6.0 * PI)).abs());
        }
    }
    let scan = f_scan_tau(0.5, F_SCAN_TAU, 0.1, 100).unwrap();
    let minima: Vec<f64> = scan.minima_points().map(|p| p.tau).collect();
    let found = [14.135, 21.035, 25.035]
        .iter()
        .all(|&target| minima.iter().any(|&m| within(m, target, 0.01)));
    outcome(
        sym <= 1e-14 && ratio <= 1e-14 && found,
        format!("symmetry (relative) {sym:.2e}, ratio {ratio:.2e}, tau minima {minima:?}"),
    )
}

fn c9_loglog() -> Outcome {
    let taus = action::tau_grid(10.0, 40.0, 0.1).unwrap();
    let fit = loglog_fit(0.5, &taus, 100).unwrap();
    outcome(
        within(fit.slope, 0.25, 1e-4),
        format!("slope {:.14} (R^2 {:.12})", fit.slope, fit.r_squared),
    )
}

fn c10_chebyshev() -> Outcome {
    let table = PsiTable::new(5000.0, Mode::Optimized).unwrap();
    let v100 = table.approx(100.0).unwrap().value;
    let mut rel: f64 = 0.0;
    for x in 2..=5000u64 {
        let e = table.exact(x as f64).unwrap().value;
        let a = table.approx(x as f64).unwrap().value;
        rel = rel.max((a - e).abs() / e);
    }
    let above = check_psi_bound(74.0, 400.0, 1.0, Mode::Optimized).unwrap();
    let below = check_psi_bound(2.0, 72.0, 1.0, Mode::Optimized).unwrap();
    let holds_above = above.iter().all(|r| r.holds);
    let fails_below = below.iter().filter(|r| !r.holds).count();
    outcome(
        within(v100, 94.0453112293574, 1e-10) && rel < 1e-12 && holds_above && fails_below > 0,
        format!(
            "psi(100)={v100:.13} max rel diff {rel:.2e}; bound holds on [74,400]: {holds_above}; failures below 73: {fails_below}"
        ),
    )
}

fn c11_pi_bounds() -> Outcome {
    let run = |b| {
        check_pi_bound(2657, 3000, 1, b, BoundVariant::SqrtXTimesLog, Mode::Optimized)
            .unwrap()
            .iter()
            .filter(|r| !r.holds)
            .count()
    };
    let s = run(BoundName::SchoenfeldPi);
    let t = run(BoundName::Trudgian);
    outcome(s == 0 && t == 0, format!("violations on [2657,3000]: schoenfeld {s}, trudgian {t}"))
}

/// Local minimum of `|ζ_ex(1/2, τ)|` nearest `near`, on a 0.001 grid.
fn fine_tau_oracle(near: f64, n_max: u64) -> f64 {
    let taus = action::tau_grid(near - 0.5, near + 0.5, 0.001).unwrap();
    let vals: Vec<f64> = taus
        .iter()
        .map(|&t| zeta_ex(ComplexPoint::new(0.5, t, n_max).unwrap()).unwrap().modulus())
        .collect();
    primezeta::search::local_minima(&vals)
        .into_iter()
        .map(|i| taus[i])
        .min_by(|a, b| (a - near).abs().total_cmp(&(b - near).abs()))
        .unwrap()
}

fn c12_root_cross_check() -> Outcome {
    let published = [14.134725, 21.022040, 25.010858, 30.424876, 32.935062];
    let centers = [14.1, 21.0, 25.0, 30.4, 32.9];
    let mut pass = true;
    let mut parts = Vec::new();
    for (&c, &z) in centers.iter().zip(&published) {
        let (_, root) = locate_root(&ScanSpec::standard(c, 1.5, 100)).unwrap();
        let oracle = fine_tau_oracle(root.tau, 100);
        let ok = within(root.tau, oracle, 0.05);
        pass &= ok;
        parts.push(format!(
            "tau={:.3} oracle={oracle:.3} published={z} gap={:+.3}",
            root.tau,
            root.tau - z
        ));
    }
    outcome(pass, parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("1 prime oracle equivalence", c1_prime_oracle),
        ("2 counting", c2_counting),
        ("3 euler product", c3_euler),
        ("4 partition identity", c4_partition),
        ("5 action closed form", c5_action_closed_form),
        ("6a root recovery n=100", c6a_root_low),
        ("6b root recovery n=1000", c6b_root_high),
        ("7a parametric sigma n=100", c7a_parametric_low),
        ("7b parametric sigma n=1000", c7b_parametric_high),
        ("8 f-function", c8_f_function),
        ("9 log-log slope", c9_loglog),
        ("10 chebyshev", c10_chebyshev),
        ("11 pi bounds", c11_pi_bounds),
        ("12 root cross-check", c12_root_cross_check),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        if !o.pass {
            failures += 1;
        }
        println!(
            "[{}] criterion {name}: {} ({:.1}s)",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria failed", failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
