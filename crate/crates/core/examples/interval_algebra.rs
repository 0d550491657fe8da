//! Exact interval arithmetic: stacking, inversion and sizes in cents.

use carlos_scales::interval::{parse_interval, Catalog};
use carlos_scales::{cents, compose, invert, JustInterval, Ratio};

fn main() -> carlos_scales::Result<()> {
    let m3 = JustInterval::minor_third();
    let maj3 = JustInterval::major_third();
    let p5 = compose(&m3, &maj3)?;
    println!("m3 + M3 = {p5}, {:.3} cents", p5.cents());

    let p8 = compose(
        &JustInterval::perfect_fourth(),
        &JustInterval::perfect_fifth(),
    )?;
    println!("P4 + P5 = {p8}");

    // exact ratios: 9/8 · 6/5 is 27/20, a comma wider than 4/3
    let wide = compose(&JustInterval::major_second(), &m3)?;
    println!(
        "M2 + m3 = {wide}, {:.3} cents above P4",
        wide.cents() - JustInterval::perfect_fourth().cents()
    );

    for i in [
        JustInterval::perfect_fifth(),
        m3.clone(),
        JustInterval::octave(),
    ] {
        println!("invert {} -> {}", i, invert(&i)?);
    }

    println!("7/4 = {:.3} cents", cents(Ratio::new(7, 4)?));
    println!("parsed 12/10 -> {}", parse_interval("12/10")?);

    let mut catalog = Catalog::builtin();
    catalog.insert(JustInterval::new("h7", Ratio::new(7, 4)?))?;
    println!(
        "with a custom entry: h7 + M2 = {}",
        catalog.compose(&catalog.parse("h7")?, &JustInterval::major_second())?
    );
    Ok(())
}
