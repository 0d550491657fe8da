//! User-defined target systems, in the text grammar and as JSON.

use carlos_scales::report::{render_table, Format, ScaleReport};
use carlos_scales::{optimal_unit, parse_system};

fn main() -> carlos_scales::Result<()> {
    let specs = [
        "12:2/1",
        "7:M2,14:M3,11:m3,25:P5",
        "31:P8,18:P5,10:M3,25:7/4",
        r#"[{"steps": 19, "interval": "P8"}, {"steps": 6, "interval": "6/5"}]"#,
    ];
    let mut reports = Vec::new();
    for spec in specs {
        let scale = optimal_unit(&parse_system(spec)?);
        reports.push(ScaleReport::new(&scale));
    }
    print!("{}", render_table(&reports, Format::Table)?);
    println!("\n{}", reports[1].to_json()?);
    Ok(())
}
