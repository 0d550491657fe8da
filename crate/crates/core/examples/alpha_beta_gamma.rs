//! The three classic scales: unit size, how far each triad interval lands
//! from just, and where the octave falls.

use carlos_scales::{carlos2, octave_fit, optimal_unit};

fn main() -> carlos_scales::Result<()> {
    for (name, a, b) in [("alpha", 4, 5), ("beta", 5, 6), ("gamma", 9, 11)] {
        let scale = optimal_unit(&carlos2(a, b)?);
        let fit = octave_fit(&scale);
        println!("{name} ({a},{b}): unit {:.3} cents", scale.unit_cents);
        for (t, dev) in scale.system.targets().iter().zip(&scale.residuals) {
            println!(
                "  {:>2} at {:>2} units: {:+.3} cents",
                t.interval.name, t.steps, dev
            );
        }
        println!(
            "  octave: {:.4} units, {} steps land {:+.4} cents from 2/1",
            fit.exact_units, fit.nearest_steps, fit.deviation_cents
        );
    }
    Ok(())
}
