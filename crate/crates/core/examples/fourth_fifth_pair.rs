//! Optimizing other interval pairs. Fourth and fifth at (5,7) with the octave
//! at 12 units gives an almost-12TET unit; the pair is flagged because the two
//! intervals are octave complements.

use carlos_scales::report::{render_table, Format, ScaleReport};
use carlos_scales::{general_pair, optimal_unit, JustInterval};

fn main() -> carlos_scales::Result<()> {
    let p4p5 = optimal_unit(&general_pair(
        &JustInterval::perfect_fourth(),
        5,
        &JustInterval::perfect_fifth(),
        7,
    )?);
    println!(
        "{{P4,P5}}-(5,7): unit {:.7} octaves (1/12 = {:.7})",
        p4p5.unit_log2,
        1.0 / 12.0
    );

    let m2_m3 = optimal_unit(&general_pair(
        &JustInterval::major_second(),
        3,
        &JustInterval::minor_third(),
        5,
    )?);
    let reports = [ScaleReport::new(&p4p5), ScaleReport::new(&m2_m3)];
    print!("{}", render_table(&reports, Format::Table)?);
    Ok(())
}
