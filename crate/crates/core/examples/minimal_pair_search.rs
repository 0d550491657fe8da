//! Sweeps every (a,b) with b ≤ 40 and keeps the scales whose thirds and fifth
//! all land within 5 cents of just.

use carlos_scales::analysis::{search_carlos2, DEFAULT_TOLERANCE_CENTS};

fn main() {
    let hits = search_carlos2(40, 40, DEFAULT_TOLERANCE_CENTS, false);
    println!(
        "{} scales within {DEFAULT_TOLERANCE_CENTS} cents",
        hits.len()
    );
    for h in &hits {
        println!(
            "({:>2},{:>2})  unit {:>7.3}  max |dev| {:.3}  octave {:>2} steps {:+8.3}{}",
            h.params[0],
            h.params[1],
            h.scale.unit_cents,
            h.max_abs_deviation_cents,
            h.octave.nearest_steps,
            h.octave.deviation_cents,
            if h.gcd_trivial { "  (subdivision)" } else { "" }
        );
    }
}
