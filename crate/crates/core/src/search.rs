//! Grid construction and discrete minimum location.

use crate::error::{Error, Result};

/// Points `lo, lo + step, …` not exceeding `hi` (with a 1e-9 step slack).
///
/// Each node is computed as `lo + k·step` and snapped to twelve decimals, so
/// no rounding drift accumulates along long grids.
pub fn grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::domain(format!("grid step must be positive, got {step}")));
    }
    if !(lo.is_finite() && hi.is_finite()) || hi < lo {
        return Err(Error::domain(format!("empty grid window [{lo}, {hi}]")));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| snap(lo + step * k as f64)).collect())
}

#[inline]
pub fn snap(x: f64) -> f64 {
    let scaled = (x * 1e12).round();
    if scaled.abs() < 9.0e15 {
        scaled / 1e12
    } else {
        x
    }
}

/// Index of the smallest finite value; ties go to the lower index.
pub fn argmin(values: &[f64]) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() {
            continue;
        }
        match best {
            Some((_, b)) if v >= b => {}
            _ => best = Some((i, v)),
        }
    }
    best.map(|(i, _)| i)
}

/// Indices of interior local minima. Plateaus report their leftmost node.
pub fn local_minima(values: &[f64]) -> Vec<usize> {
    let mut out = Vec::new();
    if values.len() < 3 {
        return out;
    }
    for i in 1..values.len() - 1 {
        let (a, b, c) = (values[i - 1], values[i], values[i + 1]);
        if b < a && b <= c {
            out.push(i);
        }
    }
    out
}

/// Argmin of `values` that must not sit on either end of the window.
pub fn interior_argmin(values: &[f64], axis: &'static str, lo: f64, hi: f64) -> Result<usize> {
    match argmin(values) {
        Some(i) if i > 0 && i + 1 < values.len() => Ok(i),
        _ => Err(Error::NoMinimum { axis, lo, hi }),
    }
}

/// Abscissa of the vertex of the parabola through three points.
///
/// Returns `None` when the points are collinear or the parabola opens
/// downward. The vertex is clamped to `[x0, x2]`.
pub fn parabolic_vertex(x: [f64; 3], y: [f64; 3]) -> Option<f64> {
    let [x0, x1, x2] = x;
    let [y0, y1, y2] = y;
    let d01 = (y1 - y0) / (x1 - x0);
    let d12 = (y2 - y1) / (x2 - x1);
    let curvature = (d12 - d01) / (x2 - x0);
    if !(curvature > 0.0) || !curvature.is_finite() {
        return None;
    }
    // vertex of y0 + d01 (x - x0) + curvature (x - x0)(x - x1)
    let vertex = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
    Some(vertex.clamp(x0.min(x2), x0.max(x2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_includes_endpoint_without_drift() {
        let g = grid(0.1, 0.9, 0.1).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g[2], 0.3);
        assert_eq!(g[8], 0.9);
        let long = grid(13.0, 44.0, 0.1).unwrap();
        assert_eq!(long.len(), 311);
        assert_eq!(*long.last().unwrap(), 44.0);
    }

    #[test]
    fn grid_rejects_bad_steps() {
        assert!(grid(0.0, 1.0, 0.0).is_err());
        assert!(grid(1.0, 0.0, 0.1).is_err());
    }

    #[test]
    fn argmin_breaks_ties_low() {
        assert_eq!(argmin(&[3.0, 1.0, 1.0, 2.0]), Some(1));
        assert_eq!(argmin(&[f64::NAN, 2.0]), Some(1));
        assert_eq!(argmin(&[]), None);
    }

    #[test]
    fn local_minima_on_explicit_data() {
        let v = [5.0, 1.0, 4.0, 4.0, 2.0, 2.0, 3.0, 0.0];
        assert_eq!(local_minima(&v), vec![1, 4]);
    }

    #[test]
    fn interior_argmin_rejects_edges() {
        assert!(interior_argmin(&[0.0, 1.0, 2.0], "tau", 0.0, 1.0).is_err());
        assert_eq!(interior_argmin(&[1.0, 0.0, 2.0], "tau", 0.0, 1.0).unwrap(), 1);
    }

    #[test]
    fn parabola_vertex_recovers_quadratic_minimum() {
        let f = |x: f64| 2.0 * (x - 0.37).powi(2) + 1.0;
        let v = parabolic_vertex([0.0, 0.5, 1.2], [f(0.0), f(0.5), f(1.2)]).unwrap();
        assert!((v - 0.37).abs() < 1e-12);
        assert!(parabolic_vertex([0.0, 1.0, 2.0], [0.0, 1.0, 2.0]).is_none());
    }
}
