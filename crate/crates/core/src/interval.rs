//! Just intervals as exact rational frequency ratios.
//!
//! Ratios stay in lowest terms with checked 64-bit arithmetic; logarithms are
//! taken only when converting to cents or log2-octave units.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positive rational frequency ratio in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRatio", into = "RawRatio")]
pub struct Ratio {
    numer: u64,
    denom: u64,
}

#[derive(Serialize, Deserialize)]
struct RawRatio {
    numer: u64,
    denom: u64,
}

impl TryFrom<RawRatio> for Ratio {
    type Error = Error;
    fn try_from(raw: RawRatio) -> Result<Self> {
        Ratio::new(raw.numer, raw.denom)
    }
}

impl From<Ratio> for RawRatio {
    fn from(r: Ratio) -> Self {
        RawRatio {
            numer: r.numer,
            denom: r.denom,
        }
    }
}

impl Ratio {
    pub const UNISON: Ratio = Ratio { numer: 1, denom: 1 };
    pub const OCTAVE: Ratio = Ratio { numer: 2, denom: 1 };

    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if numer == 0 || denom == 0 {
            return Err(Error::Domain(format!(
                "ratio {numer}/{denom} must have positive terms"
            )));
        }
        let g = numer.gcd(&denom);
        Ok(Ratio {
            numer: numer / g,
            denom: denom / g,
        })
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn as_f64(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }

    /// Size in octaves.
    pub fn log2(&self) -> f64 {
        self.as_f64().ln() / std::f64::consts::LN_2
    }

    pub fn cents(&self) -> f64 {
        cents(*self)
    }

    /// Exact product, cross-reduced before multiplying so that overflow is
    /// reported only when the reduced result itself does not fit.
    pub fn checked_mul(&self, other: &Ratio) -> Result<Ratio> {
        let g1 = self.numer.gcd(&other.denom);
        let g2 = other.numer.gcd(&self.denom);
        let overflow = || Error::Overflow {
            lhs: self.to_string(),
            rhs: other.to_string(),
        };
        let numer = (self.numer / g1)
            .checked_mul(other.numer / g2)
            .ok_or_else(overflow)?;
        let denom = (self.denom / g2)
            .checked_mul(other.denom / g1)
            .ok_or_else(overflow)?;
        Ok(Ratio { numer, denom })
    }

    pub fn checked_div(&self, other: &Ratio) -> Result<Ratio> {
        self.checked_mul(&other.recip())
    }

    pub fn recip(&self) -> Ratio {
        Ratio {
            numer: self.denom,
            denom: self.numer,
        }
    }

    pub fn is_ascending(&self) -> bool {
        self.numer > self.denom
    }

    /// Exact comparison against another ratio.
    pub fn cmp_exact(&self, other: &Ratio) -> std::cmp::Ordering {
        (self.numer as u128 * other.denom as u128).cmp(&(other.numer as u128 * self.denom as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::SpecParse {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let numer: u64 = n
            .parse()
            .map_err(|_| bad("numerator is not a positive integer"))?;
        let denom: u64 = d
            .parse()
            .map_err(|_| bad("denominator is not a positive integer"))?;
        Ratio::new(numer, denom).map_err(|_| bad("ratio terms must be positive"))
    }
}

/// Size of `r` in cents, `1200 · log2 r`.
pub fn cents(r: Ratio) -> f64 {
    1200.0 * r.log2()
}

/// A named just interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JustInterval {
    pub name: String,
    pub ratio: Ratio,
}

impl JustInterval {
    pub fn new(name: impl Into<String>, ratio: Ratio) -> Self {
        JustInterval {
            name: name.into(),
            ratio,
        }
    }

    pub fn cents(&self) -> f64 {
        self.ratio.cents()
    }

    pub fn log2(&self) -> f64 {
        self.ratio.log2()
    }

    /// Built-in catalog lookup by symbol.
    pub fn named(symbol: &str) -> Option<JustInterval> {
        Catalog::builtin().by_name(symbol)
    }

    pub fn major_second() -> Self {
        Self::builtin("M2")
    }
    pub fn minor_third() -> Self {
        Self::builtin("m3")
    }
    pub fn major_third() -> Self {
        Self::builtin("M3")
    }
    pub fn perfect_fourth() -> Self {
        Self::builtin("P4")
    }
    pub fn perfect_fifth() -> Self {
        Self::builtin("P5")
    }
    pub fn major_sixth() -> Self {
        Self::builtin("M6")
    }
    pub fn octave() -> Self {
        Self::builtin("P8")
    }

    fn builtin(symbol: &str) -> Self {
        Self::named(symbol).expect("symbol is in the built-in catalog")
    }
}

impl fmt::Display for JustInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name, self.ratio)
    }
}

const BUILTINS: [(&str, u64, u64); 10] = [
    ("P1", 1, 1),
    ("M2", 9, 8),
    ("m3", 6, 5),
    ("M3", 5, 4),
    ("P4", 4, 3),
    ("P5", 3, 2),
    ("m6", 8, 5),
    ("M6", 5, 3),
    ("m7", 16, 9),
    ("P8", 2, 1),
];

/// Name ↔ ratio table used for parsing tokens and naming composites.
///
/// Lookups by ratio return the first entry with that exact ratio, so the
/// built-ins always win over later insertions.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<JustInterval>,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::builtin()
    }
}

impl Catalog {
    pub fn builtin() -> Self {
        let entries = BUILTINS
            .iter()
            .map(|&(name, n, d)| JustInterval::new(name, Ratio { numer: n, denom: d }))
            .collect();
        Catalog { entries }
    }

    /// Adds a user interval. Names already present are rejected.
    pub fn insert(&mut self, interval: JustInterval) -> Result<()> {
        if self.entries.iter().any(|e| e.name == interval.name) {
            return Err(Error::Domain(format!(
                "interval `{}` already defined",
                interval.name
            )));
        }
        self.entries.push(interval);
        Ok(())
    }

    pub fn by_name(&self, name: &str) -> Option<JustInterval> {
        self.entries.iter().find(|e| e.name == name).cloned()
    }

    pub fn by_ratio(&self, ratio: Ratio) -> Option<JustInterval> {
        self.entries.iter().find(|e| e.ratio == ratio).cloned()
    }

    pub fn iter(&self) -> impl Iterator<Item = &JustInterval> {
        self.entries.iter()
    }

    fn named_or(&self, ratio: Ratio, fallback: impl FnOnce() -> String) -> JustInterval {
        self.by_ratio(ratio)
            .unwrap_or_else(|| JustInterval::new(fallback(), ratio))
    }

    /// Parses an interval token: a catalog symbol (case-sensitive) or a
    /// literal `p/q` ratio.
    pub fn parse(&self, token: &str) -> Result<JustInterval> {
        let token = token.trim();
        if let Some(i) = self.by_name(token) {
            return Ok(i);
        }
        if token.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            let ratio: Ratio = token.parse()?;
            return Ok(self.named_or(ratio, || ratio.to_string()));
        }
        Err(Error::SpecParse {
            token: token.to_string(),
            reason: "unknown interval symbol".to_string(),
        })
    }

    pub fn compose(&self, i: &JustInterval, j: &JustInterval) -> Result<JustInterval> {
        let ratio = i.ratio.checked_mul(&j.ratio)?;
        Ok(self.named_or(ratio, || format!("{}⊕{}", i.name, j.name)))
    }

    pub fn invert(&self, i: &JustInterval) -> Result<JustInterval> {
        let r = i.ratio;
        if r.cmp_exact(&Ratio::UNISON).is_lt() || r.cmp_exact(&Ratio::OCTAVE).is_gt() {
            return Err(Error::Domain(format!(
                "cannot invert {} ({r}): ratio outside [1, 2]",
                i.name
            )));
        }
        let ratio = Ratio::OCTAVE.checked_div(&r)?;
        Ok(self.named_or(ratio, || format!("inv({})", i.name)))
    }
}

/// Stacks two intervals (ratios multiply), naming the result from the
/// built-in catalog when the product is a catalog ratio.
pub fn compose(i: &JustInterval, j: &JustInterval) -> Result<JustInterval> {
    Catalog::builtin().compose(i, j)
}

/// Octave complement `2/r` of an interval within one octave.
pub fn invert(i: &JustInterval) -> Result<JustInterval> {
    Catalog::builtin().invert(i)
}

/// Parses a token against the built-in catalog.
pub fn parse_interval(token: &str) -> Result<JustInterval> {
    Catalog::builtin().parse(token)
}

/// True when the two ratios multiply to exactly 2/1.
pub fn are_inversions(a: &Ratio, b: &Ratio) -> bool {
    matches!(a.checked_mul(b), Ok(p) if p == Ratio::OCTAVE)
}
