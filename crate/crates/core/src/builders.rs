//! Constructors for the named scale families.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::interval::{self, Catalog, JustInterval, Ratio};
use crate::optimizer::{Target, TargetSystem};

fn check_ascending(expected: &'static str, params: &[u32]) -> Result<()> {
    if params.first().is_some_and(|&a| a < 1) {
        return Err(Error::Domain(format!(
            "step counts must be positive, got {params:?}"
        )));
    }
    if params.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ParameterOrder {
            expected,
            got: params.to_vec(),
        });
    }
    Ok(())
}

/// Minor third at `a` units, major third at `b`, fifth at `a + b`.
pub fn carlos2(a: u32, b: u32) -> Result<TargetSystem> {
    check_ascending("1 <= a < b", &[a, b])?;
    TargetSystem::new(
        format!("({a},{b})-Carlos"),
        vec![a, b],
        vec![
            Target::new(a, JustInterval::minor_third()),
            Target::new(b, JustInterval::major_third()),
            Target::new(a + b, JustInterval::perfect_fifth()),
        ],
    )
}

/// Like [`carlos2`] but with the fifth at an independent `c` units.
pub fn carlos3(a: u32, b: u32, c: u32) -> Result<TargetSystem> {
    check_ascending("1 <= a < b < c", &[a, b, c])?;
    TargetSystem::new(
        format!("({a},{b},{c})-Carlos"),
        vec![a, b, c],
        vec![
            Target::new(a, JustInterval::minor_third()),
            Target::new(b, JustInterval::major_third()),
            Target::new(c, JustInterval::perfect_fifth()),
        ],
    )
}

/// `ia` at `a` units, `ib` at `b` units and their stack at `a + b`.
///
/// No ordering is imposed on `a` and `b`. Pairs that are octave complements
/// (P4/P5, m3/M6, ...) are allowed; reports flag them.
pub fn general_pair(ia: &JustInterval, a: u32, ib: &JustInterval, b: u32) -> Result<TargetSystem> {
    if a < 1 || b < 1 {
        return Err(Error::Domain(format!(
            "step counts must be positive, got ({a},{b})"
        )));
    }
    if ia.ratio == ib.ratio {
        return Err(Error::DegeneratePair(ia.name.clone(), ib.name.clone()));
    }
    let sum = interval::compose(ia, ib)?;
    TargetSystem::new(
        format!("{{{},{}}}-({a},{b})", ia.name, ib.name),
        vec![a, b],
        vec![
            Target::new(a, ia.clone()),
            Target::new(b, ib.clone()),
            Target::new(a + b, sum),
        ],
    )
}

/// Pentatonic optimization: M2 at `a`, M3 at `2a`, m3 at `b`, P5 at `2a + b`.
///
/// The major sixth (`3a + b`) is left out since it is the complement of the
/// minor third already present.
pub fn pentatonic(a: u32, b: u32) -> Result<TargetSystem> {
    check_ascending("1 <= a < b", &[a, b])?;
    TargetSystem::new(
        format!("({a},{b})-pentatonic"),
        vec![a, b],
        vec![
            Target::new(a, JustInterval::major_second()),
            Target::new(2 * a, JustInterval::major_third()),
            Target::new(b, JustInterval::minor_third()),
            Target::new(2 * a + b, JustInterval::perfect_fifth()),
        ],
    )
}

/// 12-tone equal temperament, `{(12, 2/1)}`.
pub fn twelve_tet() -> TargetSystem {
    TargetSystem::new(
        "12TET",
        vec![12],
        vec![Target::new(12, JustInterval::new("P8", Ratio::OCTAVE))],
    )
    .expect("valid system")
}

/// Builds a system from `(steps, interval token)` pairs in the given order.
pub fn custom_system<S: AsRef<str>>(spec: &[(u32, S)]) -> Result<TargetSystem> {
    custom_system_with(&Catalog::builtin(), spec)
}

pub fn custom_system_with<S: AsRef<str>>(
    catalog: &Catalog,
    spec: &[(u32, S)],
) -> Result<TargetSystem> {
    if spec.is_empty() {
        return Err(Error::SpecParse {
            token: String::new(),
            reason: "empty system".into(),
        });
    }
    let mut targets = Vec::with_capacity(spec.len());
    for (steps, token) in spec {
        let token = token.as_ref();
        if *steps < 1 {
            return Err(Error::SpecParse {
                token: format!("{steps}:{token}"),
                reason: "steps must be at least 1".into(),
            });
        }
        targets.push(Target::new(*steps, catalog.parse(token)?));
    }
    let label = targets
        .iter()
        .map(|t| format!("{}:{}", t.steps, t.interval.name))
        .collect::<Vec<_>>()
        .join(",");
    let params = targets.iter().map(|t| t.steps).collect();
    TargetSystem::new(label, params, targets)
}

#[derive(Deserialize)]
struct JsonTarget {
    steps: u32,
    interval: String,
}

/// Parses the textual system grammar.
///
/// Either comma-separated `<steps>:<interval>` pairs, e.g.
/// `7:M2,14:M3,11:m3,25:P5`, or a JSON array of `{"steps", "interval"}`
/// objects.
pub fn parse_system(text: &str) -> Result<TargetSystem> {
    let text = text.trim();
    if text.starts_with('[') {
        let items: Vec<JsonTarget> = serde_json::from_str(text).map_err(|e| Error::SpecParse {
            token: text.chars().take(40).collect(),
            reason: e.to_string(),
        })?;
        let spec: Vec<(u32, String)> = items.into_iter().map(|t| (t.steps, t.interval)).collect();
        return custom_system(&spec);
    }

    let mut spec = Vec::new();
    for pair in text.split(',') {
        let pair = pair.trim();
        let bad = |reason: &str| Error::SpecParse {
            token: pair.to_string(),
            reason: reason.into(),
        };
        let (steps, token) = pair
            .split_once(':')
            .ok_or_else(|| bad("expected <steps>:<interval>"))?;
        let steps: u32 = steps
            .trim()
            .parse()
            .map_err(|_| bad("steps is not a positive integer"))?;
        spec.push((steps, token.trim().to_string()));
    }
    custom_system(&spec)
}
