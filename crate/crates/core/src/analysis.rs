//! Octave fit, tolerance gate and exhaustive parameter sweeps.

use num_integer::Integer;

use crate::builders;
use crate::error::{Error, Result};
use crate::interval::JustInterval;
use crate::optimizer::{optimal_unit, DerivedScale, TargetSystem};

/// Tolerance used when none is given, in cents.
pub const DEFAULT_TOLERANCE_CENTS: f64 = 5.0;

/// How close a whole number of units comes to a 2:1 octave.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctaveFit {
    /// `1200 / unit_cents`.
    pub exact_units: f64,
    pub nearest_steps: u32,
    /// `nearest_steps · unit_cents − 1200`; positive means sharp.
    pub deviation_cents: f64,
}

/// Rounds `1200 / unit_cents` to the nearest step count (halves round up).
///
/// Units wider than two octaves give `nearest_steps == 0`.
pub fn octave_fit(scale: &DerivedScale) -> OctaveFit {
    octave_fit_for_unit(scale.unit_cents)
}

pub fn octave_fit_for_unit(unit_cents: f64) -> OctaveFit {
    let exact_units = 1200.0 / unit_cents;
    let nearest_steps = exact_units.round() as u32;
    OctaveFit {
        exact_units,
        nearest_steps,
        deviation_cents: steps_deviation(unit_cents, nearest_steps),
    }
}

/// Signed distance in cents of `steps` units from 1200.
pub fn steps_deviation(unit_cents: f64, steps: u32) -> f64 {
    f64::from(steps) * unit_cents - 1200.0
}

/// Whether every residual is strictly below `tol_cents` in magnitude, and
/// the largest magnitude.
pub fn tolerance_check(scale: &DerivedScale, tol_cents: f64) -> (bool, f64) {
    let max = scale.max_abs_residual();
    (max < tol_cents, max)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchHit {
    pub params: Vec<u32>,
    pub scale: DerivedScale,
    pub octave: OctaveFit,
    pub max_abs_deviation_cents: f64,
    /// The parameters share a factor, so this is a subdivision of a smaller
    /// scale in the same family.
    pub gcd_trivial: bool,
}

/// Parameterized scale families that can be swept.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// `(a, b)` with `a < b`.
    Carlos2,
    /// `(a, b, c)` with `a < b < c`; with `fifth_is_sum` only `(a, b)` is
    /// swept and `c = a + b`.
    Carlos3 { fifth_is_sum: bool },
    /// `(a, b)` with `a < b`.
    Pentatonic,
    /// `(a, b)` unordered, for a fixed interval pair.
    Pair {
        first: JustInterval,
        second: JustInterval,
    },
}

impl Family {
    /// Number of swept parameters, i.e. how many bounds are needed.
    pub fn arity(&self) -> usize {
        match self {
            Family::Carlos3 {
                fifth_is_sum: false,
            } => 3,
            _ => 2,
        }
    }

    pub fn build(&self, params: &[u32]) -> Result<TargetSystem> {
        let want = self.arity();
        let expected = if want == 3 {
            "three parameters a,b,c"
        } else {
            "two parameters a,b"
        };
        if params.len() != want {
            return Err(Error::ParameterOrder {
                expected,
                got: params.to_vec(),
            });
        }
        match self {
            Family::Carlos2 => builders::carlos2(params[0], params[1]),
            Family::Carlos3 { fifth_is_sum: true } => {
                builders::carlos3(params[0], params[1], params[0] + params[1])
            }
            Family::Carlos3 {
                fifth_is_sum: false,
            } => builders::carlos3(params[0], params[1], params[2]),
            Family::Pentatonic => builders::pentatonic(params[0], params[1]),
            Family::Pair { first, second } => {
                builders::general_pair(first, params[0], second, params[1])
            }
        }
    }

    fn candidates(&self, maxima: &[u32]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        match self {
            Family::Carlos3 {
                fifth_is_sum: false,
            } => {
                for a in 1..=maxima[0] {
                    for b in a + 1..=maxima[1] {
                        for c in b + 1..=maxima[2] {
                            out.push(vec![a, b, c]);
                        }
                    }
                }
            }
            Family::Pair { .. } => {
                for a in 1..=maxima[0] {
                    for b in 1..=maxima[1] {
                        out.push(vec![a, b]);
                    }
                }
            }
            _ => {
                for a in 1..=maxima[0] {
                    for b in a + 1..=maxima[1] {
                        out.push(vec![a, b]);
                    }
                }
            }
        }
        out
    }
}

fn params_gcd(params: &[u32]) -> u32 {
    params.iter().fold(0, |g, p| g.gcd(p))
}

/// Sweeps every parameter tuple of `family` within `bounds` and keeps those
/// whose residuals all fall strictly below `tol_cents`.
///
/// Hits are ordered by the sum of the system's parameters, then by the
/// parameters themselves. Each bound is an inclusive maximum; `None` is
/// rejected since the space would be infinite.
pub fn search_generic(
    family: &Family,
    bounds: &[Option<u32>],
    tol_cents: f64,
) -> Result<Vec<SearchHit>> {
    if bounds.len() != family.arity() || bounds.iter().any(Option::is_none) {
        return Err(Error::BoundsRequired {
            arity: family.arity(),
        });
    }
    let maxima: Vec<u32> = bounds.iter().flatten().copied().collect();

    let mut hits = Vec::new();
    for params in family.candidates(&maxima) {
        let system = match family.build(&params) {
            Ok(s) => s,
            // pairs whose stacked ratio overflows are skipped, not fatal
            Err(Error::Overflow { .. }) => continue,
            Err(e) => return Err(e),
        };
        let scale = optimal_unit(&system);
        let (pass, max) = tolerance_check(&scale, tol_cents);
        if !pass {
            continue;
        }
        let params = system.params().to_vec();
        hits.push(SearchHit {
            gcd_trivial: params_gcd(&params) > 1,
            octave: octave_fit(&scale),
            max_abs_deviation_cents: max,
            params,
            scale,
        });
    }
    hits.sort_by(|x, y| {
        let sx: u64 = x.params.iter().map(|&p| u64::from(p)).sum();
        let sy: u64 = y.params.iter().map(|&p| u64::from(p)).sum();
        sx.cmp(&sy).then_with(|| x.params.cmp(&y.params))
    });
    Ok(hits)
}

/// All `(a, b)`-Carlos scales with `a ≤ a_max`, `a < b ≤ b_max` that pass
/// the tolerance gate, ordered by `(a + b, a)`.
///
/// Subdivided variants such as `(8, 10)` are always flagged with
/// `gcd_trivial` and dropped only when `exclude_gcd_trivial` is set.
pub fn search_carlos2(
    a_max: u32,
    b_max: u32,
    tol_cents: f64,
    exclude_gcd_trivial: bool,
) -> Vec<SearchHit> {
    let hits = search_generic(&Family::Carlos2, &[Some(a_max), Some(b_max)], tol_cents)
        .expect("bounds are finite and carlos2 parameters are always valid");
    hits.into_iter()
        .filter(|h| !(exclude_gcd_trivial && h.gcd_trivial))
        .collect()
}
