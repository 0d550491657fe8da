//! Three independent step counts: the (23,28,50) scale, with the fifth at 50
//! units rather than 23 + 28 = 51.

use carlos_scales::{carlos2, carlos3, numeric_minimize, octave_fit, optimal_unit};

fn main() -> carlos_scales::Result<()> {
    let delta = optimal_unit(&carlos3(23, 28, 50)?);
    let numeric = numeric_minimize(&delta.system, (1e-4, 0.5), 1e-12)?;
    println!("(23,28,50): unit {:.6} cents", delta.unit_cents);
    println!(
        "  golden section agrees to {:.1e} octaves",
        (numeric - delta.unit_log2).abs()
    );
    for (t, dev) in delta.system.targets().iter().zip(&delta.residuals) {
        println!("  {} at {} units: {:+.3}", t.interval.name, t.steps, dev);
    }
    let fit = octave_fit(&delta);
    println!(
        "  {} steps per octave, {:+.3} cents",
        fit.nearest_steps, fit.deviation_cents
    );

    let two = optimal_unit(&carlos2(23, 28)?);
    println!("(23,28) for comparison: unit {:.6} cents", two.unit_cents);

    // with c = a + b the three-parameter form is the two-parameter one
    let same = optimal_unit(&carlos3(4, 5, 9)?);
    assert!(same.same_scale(&optimal_unit(&carlos2(4, 5)?)));
    Ok(())
}
