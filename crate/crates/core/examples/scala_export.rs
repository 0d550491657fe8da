//! Writes .scl files for alpha (15 degrees) and (14,17) (53 degrees) into the
//! system temp directory and reads them back.

use carlos_scales::{carlos2, export_scl, optimal_unit, parse_scl};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir();
    for (a, b, steps) in [(4, 5, 15), (14, 17, 53)] {
        let scale = optimal_unit(&carlos2(a, b)?);
        let text = export_scl(
            &scale,
            steps,
            &format!("({a},{b})-Carlos scale, {steps} degrees"),
        );
        let path = dir.join(format!("carlos_{a}_{b}.scl"));
        std::fs::write(&path, &text)?;

        let back = parse_scl(&std::fs::read_to_string(&path)?)?;
        println!(
            "{}: {} degrees, repeat interval {:.5} cents",
            path.display(),
            back.pitches_cents.len(),
            back.pitches_cents.last().copied().unwrap_or_default()
        );
    }
    Ok(())
}
