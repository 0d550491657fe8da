//! Pentatonic-optimized scales (M2, M3, m3, P5) and a sweep of the family.

use carlos_scales::analysis::{search_generic, steps_deviation, Family};
use carlos_scales::{optimal_unit, pentatonic};

fn main() -> carlos_scales::Result<()> {
    for (a, b, octave_steps) in [(7, 11, 43), (17, 27, 104)] {
        let s = optimal_unit(&pentatonic(a, b)?);
        println!(
            "({a},{b}): unit {:.4} cents, worst interval {:.3} cents off, {octave_steps} steps {:+.4}",
            s.unit_cents,
            s.max_abs_residual(),
            steps_deviation(s.unit_cents, octave_steps)
        );
    }

    let hits = search_generic(&Family::Pentatonic, &[Some(20), Some(30)], 8.0)?;
    println!("\npentatonic family, a <= 20, b <= 30, within 8 cents:");
    for h in hits.iter().filter(|h| !h.gcd_trivial) {
        println!(
            "  {:?}  max {:.3}  octave {} steps {:+.3}",
            h.params, h.max_abs_deviation_cents, h.octave.nearest_steps, h.octave.deviation_cents
        );
    }
    Ok(())
}
