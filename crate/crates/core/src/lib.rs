//! Equal-step scales whose unit is chosen by least squares to approximate a
//! set of just intervals, each at a prescribed number of units.
//!
//! The classic case puts the minor third at `a` units, the major third at `b`
//! and the perfect fifth at `a + b`, letting the octave fall where it may.
//! `(4, 5)`, `(5, 6)` and `(9, 11)` give Wendy Carlos' alpha, beta and gamma
//! scales.
//!
//! ```
//! use carlos_scales::{builders::carlos2, optimizer::optimal_unit, analysis::octave_fit};
//!
//! let alpha = optimal_unit(&carlos2(4, 5).unwrap());
//! assert!((alpha.unit_cents - 77.965).abs() < 1e-3);
//! assert_eq!(octave_fit(&alpha).nearest_steps, 15);
//! ```

pub mod analysis;
pub mod builders;
pub mod cli;
pub mod error;
pub mod interval;
pub mod optimizer;
pub mod oracle;
pub mod report;

pub use analysis::{
    octave_fit, search_carlos2, search_generic, tolerance_check, Family, OctaveFit, SearchHit,
};
pub use builders::{carlos2, carlos3, custom_system, general_pair, parse_system, pentatonic};
pub use error::{Error, Result};
pub use interval::{cents, compose, invert, JustInterval, Ratio};
pub use optimizer::{
    numeric_minimize, objective, optimal_unit, DerivedScale, Target, TargetSystem,
};
pub use report::{export_scl, parse_scl, render_table, Format, ScaleReport};
