//! Least-squares unit size for an equal-step scale.
//!
//! A [`TargetSystem`] lists pairs `(k, J)`: the interval `J` should be reached
//! by `k` equal units. With the unit measured in octaves, the objective
//!
//! ```text
//! g(x) = Σ (k·x − log2 J)²
//! ```
//!
//! is a parabola in `x` whose vertex is `Σ k·log2 J / Σ k²`. That vertex is
//! what [`optimal_unit`] returns. [`numeric_minimize`] finds the same point by
//! golden-section search and exists to cross-check the closed form.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::interval::JustInterval;

/// One term of the objective: `interval` approximated by `steps` units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    pub steps: u32,
    pub interval: JustInterval,
}

impl Target {
    pub fn new(steps: u32, interval: JustInterval) -> Self {
        Target { steps, interval }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetSystem {
    label: String,
    params: Vec<u32>,
    targets: Vec<Target>,
}

impl TargetSystem {
    /// Validates and builds a system. `params` are the builder parameters
    /// the system came from (e.g. `[a, b]`), kept for reporting.
    pub fn new(label: impl Into<String>, params: Vec<u32>, targets: Vec<Target>) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::InvalidSystem(
                "at least one target is required".into(),
            ));
        }
        for t in &targets {
            if t.steps == 0 {
                return Err(Error::InvalidSystem(format!(
                    "{} must span at least one unit",
                    t.interval.name
                )));
            }
            if !t.interval.ratio.is_ascending() {
                return Err(Error::InvalidSystem(format!(
                    "target {} ({}) must be wider than a unison",
                    t.interval.name, t.interval.ratio
                )));
            }
        }
        Ok(TargetSystem {
            label: label.into(),
            params,
            targets,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> &[u32] {
        &self.params
    }

    pub fn targets(&self) -> &[Target] {
        &self.targets
    }

    /// `Σ k²`, the curvature of the objective (up to a factor of two).
    pub fn sum_sq_steps(&self) -> u64 {
        self.targets.iter().map(|t| u64::from(t.steps).pow(2)).sum()
    }

    /// Whether two targets are octave complements of each other.
    pub fn has_inversion_pair(&self) -> bool {
        let ts = &self.targets;
        ts.iter().enumerate().any(|(i, a)| {
            ts[i + 1..]
                .iter()
                .any(|b| crate::interval::are_inversions(&a.interval.ratio, &b.interval.ratio))
        })
    }

    /// Index triples `(i, j, s)` with `k_i + k_j = k_s` and `J_i · J_j = J_s`.
    /// For these the residuals must add up.
    pub fn additive_triples(&self) -> Vec<(usize, usize, usize)> {
        let ts = &self.targets;
        let mut out = Vec::new();
        for i in 0..ts.len() {
            for j in i..ts.len() {
                let Ok(product) = ts[i].interval.ratio.checked_mul(&ts[j].interval.ratio) else {
                    continue;
                };
                let steps = ts[i].steps + ts[j].steps;
                for (s, t) in ts.iter().enumerate() {
                    if t.steps == steps && t.interval.ratio == product {
                        out.push((i, j, s));
                    }
                }
            }
        }
        out
    }
}

/// Result of the closed-form minimization.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedScale {
    /// Unit size in octaves.
    pub unit_log2: f64,
    pub unit_cents: f64,
    /// Tempered minus just, in cents, one per target in declaration order.
    pub residuals: Vec<f64>,
    pub system: TargetSystem,
}

impl DerivedScale {
    pub fn max_abs_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0_f64, |m, r| m.max(r.abs()))
    }

    /// Residuals in octaves, `k·x − log2 J`.
    pub fn residuals_log2(&self) -> Vec<f64> {
        self.system
            .targets()
            .iter()
            .map(|t| f64::from(t.steps) * self.unit_log2 - t.interval.log2())
            .collect()
    }

    /// Same unit and residuals, bit for bit, over the same targets. Labels
    /// and builder parameters are ignored.
    pub fn same_scale(&self, other: &DerivedScale) -> bool {
        self.unit_log2.to_bits() == other.unit_log2.to_bits()
            && self.unit_cents.to_bits() == other.unit_cents.to_bits()
            && self.residuals.len() == other.residuals.len()
            && self
                .residuals
                .iter()
                .zip(&other.residuals)
                .all(|(a, b)| a.to_bits() == b.to_bits())
            && self.system.targets() == other.system.targets()
    }
}

/// Least-squares objective `Σ (k·x − log2 J)²` in squared octaves.
pub fn objective(system: &TargetSystem, x: f64) -> f64 {
    objective_dd(system, x).value()
}

/// Closed-form minimizer `x = Σ k·log2 J / Σ k²`.
///
/// Step counts are divided by their common factor `g` first and the unit is
/// divided by `g` at the end, so a system whose counts are all multiples of
/// another's gets exactly the subdivided unit.
pub fn optimal_unit(system: &TargetSystem) -> DerivedScale {
    let targets = system.targets();
    let g = targets.iter().fold(0u32, |g, t| g.gcd(&t.steps)).max(1);

    let mut weighted = 0.0;
    let mut sum_sq = 0u64;
    for t in targets {
        let k = t.steps / g;
        weighted += f64::from(k) * t.interval.log2();
        sum_sq += u64::from(k) * u64::from(k);
    }
    let unit_log2 = weighted / sum_sq as f64 / f64::from(g);
    let unit_cents = 1200.0 * unit_log2;

    let residuals = targets
        .iter()
        .map(|t| f64::from(t.steps) * unit_cents - t.interval.cents())
        .collect();

    DerivedScale {
        unit_log2,
        unit_cents,
        residuals,
        system: system.clone(),
    }
}

/// Golden-section minimization of the objective over `[lo, hi]`.
///
/// Comparisons use a double-double evaluation of the objective, so the
/// result is resolved well below `sqrt(f64::EPSILON)` even when the minimum
/// value itself is large. Returns [`Error::Bracket`] when the minimizer is
/// not strictly inside the bracket.
pub fn numeric_minimize(system: &TargetSystem, bracket: (f64, f64), tol: f64) -> Result<f64> {
    let (lo, hi) = bracket;
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
        return Err(Error::Domain(format!(
            "bracket [{lo}, {hi}] must satisfy 0 < lo < hi"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance {tol} must be positive")));
    }

    let f = |x: f64| objective_dd(system, x);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;

    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));

    while b - a > tol {
        let width = b - a;
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        if b - a >= width {
            // interval can no longer shrink in f64
            break;
        }
    }

    let x = 0.5 * (a + b);
    let fx = f(x);
    if f(lo) <= fx || f(hi) <= fx {
        return Err(Error::Bracket { lo, hi });
    }
    Ok(x)
}

/// Unnormalized double-double number, `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

impl DoubleDouble {
    const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        let e = (a - (s - bb)) + (b - bb);
        DoubleDouble { hi: s, lo: e }
    }

    fn quick_two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        DoubleDouble {
            hi: s,
            lo: b - (s - a),
        }
    }

    fn two_prod(a: f64, b: f64) -> Self {
        let p = a * b;
        DoubleDouble {
            hi: p,
            lo: a.mul_add(b, -p),
        }
    }

    fn add(self, o: Self) -> Self {
        let s = Self::two_sum(self.hi, o.hi);
        let t = Self::two_sum(self.lo, o.lo);
        let v = Self::quick_two_sum(s.hi, s.lo + t.hi);
        Self::quick_two_sum(v.hi, v.lo + t.lo)
    }

    fn sub_f64(self, b: f64) -> Self {
        self.add(DoubleDouble { hi: -b, lo: 0.0 })
    }

    fn square(self) -> Self {
        let p = Self::two_prod(self.hi, self.hi);
        Self::quick_two_sum(p.hi, p.lo + 2.0 * self.hi * self.lo)
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            std::cmp::Ordering::Equal => self.lo.partial_cmp(&other.lo),
            ord => Some(ord),
        }
    }
}

fn objective_dd(system: &TargetSystem, x: f64) -> DoubleDouble {
    system.targets().iter().fold(DoubleDouble::ZERO, |acc, t| {
        let r = DoubleDouble::two_prod(f64::from(t.steps), x).sub_f64(t.interval.log2());
        acc.add(r.square())
    })
}
