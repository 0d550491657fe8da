//! Prints the nine classic (a,b) scales as a table, then as CSV.

use carlos_scales::report::{carlos_table_reports, render_table, Format};

fn main() -> carlos_scales::Result<()> {
    let reports = carlos_table_reports();
    print!("{}", render_table(&reports, Format::Table)?);
    println!();
    print!("{}", render_table(&reports, Format::Csv)?);
    Ok(())
}
