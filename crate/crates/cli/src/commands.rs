use rayon::prelude::*;

use primezeta::action::{
    self, energy_dispersion, f_scan_sigma, f_scan_tau, locate_root, parametric_sigma_scan,
    sample_action, scan_action, GridProvenance, ScanSpec, Window, F_SCAN_TAU,
};
use primezeta::chebyshev::{psi_bound_rhs, PsiTable};
use primezeta::estimates::{check_pi_bound, li_asymptotic, li_gauss, BoundName};
use primezeta::euler::{xi_eulap, xi_product_primes, zeta_real};
use primezeta::primes;
use primezeta::search::grid;
use primezeta::table::generate_table;
use primezeta::zeta::{reciprocal_of, ComplexPoint, TruncatedEta, ZetaValue};

use crate::config::input_error;
use crate::output::{emit, num, PlotSpec, Table};
use crate::{Ctx, FAxis, PiBound, Variant, WindowArgs};

type Res = anyhow::Result<()>;

fn plot_if(ctx: &Ctx, spec: PlotSpec) -> Option<PlotSpec> {
    ctx.plot.then_some(spec)
}

fn is_integer(x: f64) -> bool {
    x >= 0.0 && x.fract() == 0.0
}

pub fn primes_check(ctx: &Ctx, u: f64) -> Res {
    let ind = primes::discriminate(u, ctx.cfg.mode)?;
    let psi = primes::generate(u, ctx.cfg.mode)?;
    println!("u,lambda,psi");
    println!("{u},{},{psi}", ind.value);
    Ok(())
}

pub fn primes_list(ctx: &Ctx, from: f64, to: f64, step: f64) -> Res {
    let mode = ctx.cfg.mode;
    let us = grid(from, to, step)?;
    let rows = us
        .par_iter()
        .map(|&u| {
            let lam = primes::discriminate(u, mode)?.value;
            let psi = primes::generate(u, mode)?;
            let (d1, d2) = if is_integer(u) {
                let (a, b) = primes::discrete_derivatives(u as u64, mode);
                (a.to_string(), b.to_string())
            } else {
                (String::new(), String::new())
            };
            Ok(vec![num(u), lam.to_string(), num(psi), d1, d2])
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut t = Table::new(&["u", "lambda", "psi", "d1", "d2"]);
    rows.into_iter().for_each(|r| t.push(r));
    let plot = plot_if(ctx, PlotSpec::lines("generator and its first difference", "u", &["psi", "d1"]).points());
    emit(&ctx.cfg.output_dir, ctx.stem("primes_list"), &t, plot.as_ref())?;
    Ok(())
}

pub fn primes_count(ctx: &Ctx, from: u64, to: u64) -> Res {
    let c = primes::count(to, from, ctx.cfg.mode)?;
    println!("{}", c.count);
    Ok(())
}

pub fn estimates(ctx: &Ctx, from: f64, to: f64, step: f64, bound: Option<PiBound>) -> Res {
    let mode = ctx.cfg.mode;
    match bound {
        None => {
            let xs = grid(from, to, step)?;
            let mut t = Table::new(&["x", "count", "li", "li_asymptotic"]);
            for &x in &xs {
                let c = primes::count(x.floor() as u64, 2, mode)?.count;
                t.push(vec![
                    num(x),
                    c.to_string(),
                    num(li_gauss(x, ctx.cfg.quad_tol)?),
                    num(li_asymptotic(x)?),
                ]);
            }
            let plot = plot_if(
                ctx,
                PlotSpec::lines("prime count against Li and x/ln x", "x", &["count", "li", "li_asymptotic"]),
            );
            emit(&ctx.cfg.output_dir, ctx.stem("estimates"), &t, plot.as_ref())?;
        }
        Some(b) => {
            if !(is_integer(from) && is_integer(to) && is_integer(step)) {
                return Err(input_error("bound checks need integer --from, --to and --step"));
            }
            let name = match b {
                PiBound::SchoenfeldPi => BoundName::SchoenfeldPi,
                PiBound::Trudgian => BoundName::Trudgian,
            };
            let reports = check_pi_bound(
                from as u64,
                to as u64,
                step as u64,
                name,
                ctx.cfg.bound_variant,
                mode,
            )?;
            let mut t = Table::new(&["x", "lhs", "rhs", "holds"]);
            for r in &reports {
                t.push(vec![num(r.x), num(r.lhs), num(r.rhs), r.holds.to_string()]);
            }
            let violations = reports.iter().filter(|r| !r.holds).count();
            println!("{}: {} points, {violations} violations", name.as_str(), reports.len());
            let plot = plot_if(ctx, PlotSpec::lines(name.as_str(), "x", &["lhs", "rhs"]));
            emit(&ctx.cfg.output_dir, ctx.stem(name.as_str()), &t, plot.as_ref())?;
        }
    }
    Ok(())
}

pub fn euler(ctx: &Ctx, sigma_from: f64, sigma_to: f64, step: f64, h: u64) -> Res {
    let mode = ctx.cfg.mode;
    let mut t = Table::new(&["sigma", "exact", "eulap", "product", "rel_error"]);
    for s in grid(sigma_from, sigma_to, step)? {
        let exact = zeta_real(s)?;
        let e = xi_eulap(s, h, mode)?;
        t.push(vec![
            num(s),
            num(exact),
            num(e),
            num(xi_product_primes(s, h, mode)?),
            num((exact - e) / exact),
        ]);
    }
    let plot = plot_if(ctx, PlotSpec::lines("Euler product, H primes", "sigma", &["exact", "eulap"]));
    emit(&ctx.cfg.output_dir, ctx.stem("euler"), &t, plot.as_ref())?;
    Ok(())
}

fn evaluate(eta: &TruncatedEta, sigma: f64, tau: f64, which: Variant) -> primezeta::Result<ZetaValue> {
    match which {
        Variant::Ex => eta.ex(sigma, tau),
        Variant::App => eta.app(sigma, tau),
        Variant::P => eta.prime_part(sigma, tau),
        Variant::C => eta.composite_part(sigma, tau),
    }
}

fn series(ctx: &Ctx) -> anyhow::Result<TruncatedEta> {
    Ok(TruncatedEta::new(ctx.cfg.n_max, ctx.cfg.mode)?)
}

pub fn zeta_eval(ctx: &Ctx, sigma: f64, tau: f64, which: Variant) -> Res {
    ComplexPoint::new(sigma, tau, ctx.cfg.n_max)?;
    let z = evaluate(&series(ctx)?, sigma, tau, which)?;
    let mut t = Table::new(&["sigma", "tau", "n_max", "re", "im", "modulus_sq"]);
    t.push(vec![
        num(sigma),
        num(tau),
        ctx.cfg.n_max.to_string(),
        num(z.re),
        num(z.im),
        num(z.modulus_sq()),
    ]);
    println!("re={} im={} modulus_sq={}", z.re, z.im, z.modulus_sq());
    emit(&ctx.cfg.output_dir, ctx.stem("zeta_eval"), &t, None)?;
    Ok(())
}

pub fn zeta_scan(ctx: &Ctx, sigma: f64, tau_from: f64, tau_to: f64, which: Variant) -> Res {
    ComplexPoint::new(sigma, tau_from, ctx.cfg.n_max)?;
    let eta = series(ctx)?;
    let taus = grid(tau_from, tau_to, ctx.cfg.tau_step)?;
    let rows = taus
        .par_iter()
        .map(|&tau| {
            let z = evaluate(&eta, sigma, tau, which)?;
            let m2 = z.modulus_sq();
            Ok(vec![
                num(sigma),
                num(tau),
                num(tau - sigma),
                num(tau + sigma),
                num(m2),
                num(z.re),
                num(z.im),
                num(reciprocal_of(m2)?),
            ])
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut t = Table::new(&["sigma", "tau", "omega", "eta", "value", "re", "im", "reciprocal"]);
    rows.into_iter().for_each(|r| t.push(r));
    let plot = plot_if(ctx, PlotSpec::lines("real and imaginary parts", "tau", &["re", "im"]));
    emit(&ctx.cfg.output_dir, ctx.stem("zeta_scan"), &t, plot.as_ref())?;
    Ok(())
}

fn scan_spec(ctx: &Ctx, w: &WindowArgs) -> anyhow::Result<ScanSpec> {
    if !(w.window > 0.0) {
        return Err(input_error("--window must be positive"));
    }
    Ok(ScanSpec {
        sigma: Window::new(w.sigma_from, w.sigma_to),
        sigma_step: ctx.cfg.sigma_step,
        tau: Window::around(w.tau_center, w.window / 2.0),
        tau_step: ctx.cfg.tau_step,
        zoom_half_width: 0.5,
        zoom_step: ctx.cfg.zoom_step,
        n_max: ctx.cfg.n_max,
    })
}

pub fn action_scan(ctx: &Ctx, w: &WindowArgs) -> Res {
    let samples = scan_action(&scan_spec(ctx, w)?)?;
    let mut t = Table::new(&["sigma", "tau", "omega", "eta", "value", "log_action"]);
    for s in &samples {
        t.push(vec![
            num(s.sigma),
            num(s.tau),
            num(s.omega),
            num(s.eta),
            num(s.action),
            num(s.log_action),
        ]);
    }
    let plot = plot_if(ctx, PlotSpec::lines("ln A against omega", "omega", &["log_action"]).points());
    emit(&ctx.cfg.output_dir, ctx.stem("action_scan"), &t, plot.as_ref())?;
    Ok(())
}

pub fn action_roots(ctx: &Ctx, w: &WindowArgs, zoom_window: f64) -> Res {
    let mut spec = scan_spec(ctx, w)?;
    spec.zoom_half_width = zoom_window;
    let (scan, root) = locate_root(&spec)?;
    let g = root.grid;
    let mut t = Table::new(&[
        "sigma",
        "tau",
        "omega",
        "eta",
        "residual",
        "source",
        "n_max",
        "omega_coarse",
        "eta_coarse",
        "omega_interpolated",
        "eta_interpolated",
        "sigma_step",
        "tau_step",
        "zoom_step",
        "zoom_half_width",
        "tau_lo",
        "tau_hi",
    ]);
    t.push(vec![
        num(root.sigma),
        num(root.tau),
        num(root.omega()),
        num(root.eta()),
        num(root.residual),
        root.source.as_str().to_string(),
        g.n_max.to_string(),
        num(scan.omega.coarse),
        num(scan.eta.coarse),
        num(scan.omega.interpolated),
        num(scan.eta.interpolated),
        num(g.sigma_step),
        num(g.tau_step),
        num(g.zoom_step),
        num(g.zoom_half_width),
        num(g.tau.lo),
        num(g.tau.hi),
    ]);
    println!(
        "omega*={:.4} eta*={:.4} sigma={:.4} tau={:.4} residual={:.3e}",
        scan.omega.refined, scan.eta.refined, root.sigma, root.tau, root.residual
    );
    emit(&ctx.cfg.output_dir, ctx.stem("action_roots"), &t, None)?;
    Ok(())
}

pub fn action_parametric(ctx: &Ctx, taus: &[f64], sigma_from: f64, sigma_to: f64, curve_step: f64) -> Res {
    let n_max = ctx.cfg.n_max;
    let sigmas = grid(sigma_from, sigma_to, curve_step)?;
    let nodes: Vec<(f64, f64)> = taus
        .iter()
        .flat_map(|&tau| sigmas.iter().map(move |&s| (s, tau)))
        .collect();
    let samples = nodes
        .par_iter()
        .map(|&(s, tau)| sample_action(s, tau, n_max))
        .collect::<primezeta::Result<Vec<_>>>()?;
    let mut curves = Table::new(&["sigma", "tau", "omega", "eta", "value", "log_action"]);
    for s in &samples {
        curves.push(vec![
            num(s.sigma),
            num(s.tau),
            num(s.omega),
            num(s.eta),
            num(s.action),
            num(s.log_action),
        ]);
    }
    let window = Window::new(sigma_from, sigma_to);
    let mins = parametric_sigma_scan(taus, window, ctx.cfg.sigma_step, ctx.cfg.zoom_step, n_max)?;
    let mut t = Table::new(&[
        "tau",
        "sigma_coarse",
        "sigma_zoom",
        "action",
        "residual",
        "interior",
        "is_root",
    ]);
    for m in &mins {
        t.push(vec![
            num(m.tau),
            num(m.sigma_coarse),
            num(m.sigma_zoom),
            num(m.action),
            num(m.residual),
            m.interior.to_string(),
            m.is_root.to_string(),
        ]);
        println!(
            "tau={} sigma_coarse={:.1} sigma_zoom={:.3} residual={:.3e} root={}",
            m.tau, m.sigma_coarse, m.sigma_zoom, m.residual, m.is_root
        );
    }
    let stem = ctx.stem("action_parametric");
    let plot = plot_if(ctx, PlotSpec::lines("ln A against sigma", "sigma", &["log_action"]).points());
    emit(&ctx.cfg.output_dir, stem, &curves, plot.as_ref())?;
    emit(&ctx.cfg.output_dir, &format!("{stem}_minima"), &t, None)?;
    Ok(())
}

pub fn action_loglog(ctx: &Ctx, sigmas: &[f64], tau_from: f64, tau_to: f64) -> Res {
    let n_max = ctx.cfg.n_max;
    let taus = grid(tau_from, tau_to, ctx.cfg.tau_step)?;
    let mut t = Table::new(&[
        "sigma",
        "tau",
        "omega",
        "eta",
        "value",
        "modulus",
        "energy",
        "ratio",
        "mirror_ratio",
        "log_action",
        "log_modulus",
        "log_energy",
    ]);
    let mut fits = Table::new(&["sigma", "slope", "intercept", "r_squared", "samples"]);
    for &s in sigmas {
        let rows = taus
            .par_iter()
            .map(|&tau| {
                let p = ComplexPoint::new(s, tau, n_max)?;
                let a = action::action_general(p)?;
                let e = energy_dispersion(p)?.0;
                let m = primezeta::zeta::zeta_ex(p)?.modulus();
                let q = ComplexPoint::new(primezeta::search::snap(1.0 - s), tau, n_max)?;
                let mirror = energy_dispersion(q)?.0 / action::action_general(q)?;
                Ok(vec![
                    num(s),
                    num(tau),
                    num(tau - s),
                    num(tau + s),
                    num(a),
                    num(m),
                    num(e),
                    num(e / a),
                    num(mirror),
                    num(a.ln()),
                    num(m.ln()),
                    num(e.ln()),
                ])
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        rows.into_iter().for_each(|r| t.push(r));
        let fit = action::loglog_fit(s, &taus, n_max)?;
        fits.push(vec![
            num(s),
            num(fit.slope),
            num(fit.intercept),
            num(fit.r_squared),
            taus.len().to_string(),
        ]);
        println!("sigma={s} slope={:.14} r_squared={:.12}", fit.slope, fit.r_squared);
    }
    let stem = ctx.stem("action_loglog");
    let plot = plot_if(ctx, PlotSpec::lines("ln M against ln A", "log_action", &["log_modulus"]).points());
    emit(&ctx.cfg.output_dir, stem, &t, plot.as_ref())?;
    emit(&ctx.cfg.output_dir, &format!("{stem}_fit"), &fits, None)?;
    Ok(())
}

pub fn f_scan(
    ctx: &Ctx,
    axis: FAxis,
    fixed: Option<f64>,
    from: Option<f64>,
    to: Option<f64>,
    step: Option<f64>,
) -> Res {
    let n_max = ctx.cfg.n_max;
    let scan = match axis {
        FAxis::Tau => f_scan_tau(
            fixed.unwrap_or(action::CRITICAL_SIGMA),
            Window::new(from.unwrap_or(F_SCAN_TAU.lo), to.unwrap_or(F_SCAN_TAU.hi)),
            step.unwrap_or(ctx.cfg.tau_step),
            n_max,
        )?,
        FAxis::Sigma => f_scan_sigma(
            fixed.ok_or_else(|| input_error("a sigma scan needs --fixed <tau>"))?,
            Window::new(from.unwrap_or(0.05), to.unwrap_or(0.95)),
            step.unwrap_or(ctx.cfg.sigma_step),
            n_max,
        )?,
    };
    let mut t = Table::new(&["sigma", "tau", "omega", "eta", "value", "mirror", "log_value"]);
    let rows = scan
        .points
        .par_iter()
        .map(|p| {
            let mirror = action::f_function(primezeta::search::snap(1.0 - p.sigma), p.tau, n_max)?;
            Ok(vec![
                num(p.sigma),
                num(p.tau),
                num(p.omega()),
                num(p.eta()),
                num(p.value),
                num(mirror),
                num(p.value.ln()),
            ])
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    rows.into_iter().for_each(|r| t.push(r));

    let grid_info = GridProvenance {
        sigma: Window::new(scan.points[0].sigma, scan.points.last().unwrap().sigma),
        sigma_step: if axis == FAxis::Sigma { step.unwrap_or(ctx.cfg.sigma_step) } else { 0.0 },
        tau: Window::new(scan.points[0].tau, scan.points.last().unwrap().tau),
        tau_step: if axis == FAxis::Tau { step.unwrap_or(ctx.cfg.tau_step) } else { 0.0 },
        zoom_half_width: 0.0,
        zoom_step: 0.0,
        n_max,
    };
    let mut m = Table::new(&["sigma", "tau", "value", "residual", "source"]);
    for (r, p) in scan.root_estimates(grid_info)?.iter().zip(scan.minima_points()) {
        m.push(vec![
            num(r.sigma),
            num(r.tau),
            num(p.value),
            num(r.residual),
            r.source.as_str().to_string(),
        ]);
        println!("local minimum at sigma={} tau={} residual={:.3e}", r.sigma, r.tau, r.residual);
    }
    let x = match axis {
        FAxis::Tau => "tau",
        FAxis::Sigma => "sigma",
    };
    let stem = ctx.stem("f_scan");
    let plot = plot_if(ctx, PlotSpec::lines("F", x, &["value", "mirror"]).log_y());
    emit(&ctx.cfg.output_dir, stem, &t, plot.as_ref())?;
    emit(&ctx.cfg.output_dir, &format!("{stem}_minima"), &m, None)?;
    Ok(())
}

pub fn chebyshev_eval(ctx: &Ctx, from: f64, to: f64, step: f64) -> Res {
    let xs = grid(from, to, step)?;
    let table = PsiTable::new(*xs.last().unwrap(), ctx.cfg.mode)?;
    let rows = xs
        .par_iter()
        .map(|&x| {
            let e = table.exact(x)?.value;
            let a = table.approx(x)?.value;
            Ok(vec![num(x), num(e), num(a), num(((a - e) / e).abs())])
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut t = Table::new(&["x", "exact", "approx", "rel_error"]);
    rows.into_iter().for_each(|r| t.push(r));
    let plot = plot_if(ctx, PlotSpec::lines("Chebyshev psi", "x", &["exact", "approx"]));
    emit(&ctx.cfg.output_dir, ctx.stem("chebyshev_eval"), &t, plot.as_ref())?;
    Ok(())
}

pub fn chebyshev_bound(ctx: &Ctx, from: f64, to: f64, step: f64) -> Res {
    let xs = grid(from, to, step)?;
    let table = PsiTable::new(*xs.last().unwrap(), ctx.cfg.mode)?;
    let rows = xs
        .par_iter()
        .map(|&x| {
            let e = table.exact(x)?.value;
            let a = table.approx(x)?.value;
            let rhs = psi_bound_rhs(x);
            let lhs = (a - x).abs();
            Ok((
                lhs < rhs,
                vec![
                    num(x),
                    num(e),
                    num(a),
                    num(lhs),
                    num((e - x).abs()),
                    num(rhs),
                    (lhs < rhs).to_string(),
                ],
            ))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let violations: Vec<String> = rows
        .iter()
        .zip(&xs)
        .filter(|((holds, _), _)| !holds)
        .map(|(_, x)| x.to_string())
        .collect();
    println!("violations: {}", if violations.is_empty() { "none".into() } else { violations.join(" ") });
    let mut t = Table::new(&["x", "psi_exact", "psi_approx", "lhs", "lhs_exact", "rhs", "holds"]);
    rows.into_iter().for_each(|(_, r)| t.push(r));
    let plot = plot_if(ctx, PlotSpec::lines("|psi(x) - x| and the bound", "x", &["lhs", "rhs"]));
    emit(&ctx.cfg.output_dir, ctx.stem("chebyshev_bound"), &t, plot.as_ref())?;
    Ok(())
}

pub fn table(ctx: &Ctx, sets: usize) -> Res {
    let table = generate_table(ctx.cfg.seed, sets, ctx.cfg.mode)?;
    let mut t = Table::new(&["set", "n", "u_n", "psi_u"]);
    for (i, set) in table.iter().enumerate() {
        for r in set {
            let n = i * set.len() + r.n;
            t.push(vec![(i + 1).to_string(), n.to_string(), r.u_n.to_string(), r.psi_u.to_string()]);
        }
    }
    emit(&ctx.cfg.output_dir, ctx.stem("random_table"), &t, None)?;
    Ok(())
}
