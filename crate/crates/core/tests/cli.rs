use carlos_scales::cli::run;
use carlos_scales::report::{parse_scl, ScaleReport};

fn carlos(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("carlos").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn derive_alpha() {
    let (code, out, _) = carlos(&["derive", "--preset", "carlos2", "--params", "4,5"]);
    assert_eq!(code, 0);
    assert!(out.contains("77.965"), "{out}");
    assert!(out.contains("alpha scale"));
}

#[test]
fn derive_json_is_a_report() {
    let (code, out, _) = carlos(&[
        "derive", "--preset", "carlos3", "--params", "23,28,50", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let reports: Vec<ScaleReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports[0].label, "(23,28,50)-Carlos");
    assert_eq!(reports[0].params, [23, 28, 50]);
    assert_eq!(reports[0].residuals.len(), 3);
}

#[test]
fn derive_system_matches_pentatonic_builder() {
    let (c1, by_system, _) = carlos(&[
        "derive",
        "--system",
        "7:M2,14:M3,11:m3,25:P5",
        "--format",
        "json",
    ]);
    let (c2, by_preset, _) = carlos(&[
        "derive",
        "--preset",
        "pentatonic",
        "--params",
        "7,11",
        "--format",
        "json",
    ]);
    assert_eq!((c1, c2), (0, 0));
    let a: Vec<ScaleReport> = serde_json::from_str(&by_system).unwrap();
    let b: Vec<ScaleReport> = serde_json::from_str(&by_preset).unwrap();
    assert_eq!(a[0].unit_cents.to_bits(), b[0].unit_cents.to_bits());
    assert_eq!(a[0].residuals, b[0].residuals);
}

#[test]
fn derive_json_system_spec() {
    let spec = r#"[{"steps":12,"interval":"2/1"}]"#;
    let (code, out, _) = carlos(&["derive", "--system", spec]);
    assert_eq!(code, 0);
    assert!(out.contains("100.000"));
}

#[test]
fn derive_pair_warns_about_inversions() {
    let (code, out, _) = carlos(&[
        "derive",
        "--preset",
        "pair",
        "--intervals",
        "P4,P5",
        "--params",
        "5,7",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("inversion pair"), "{out}");
}

#[test]
fn search_starts_with_alpha() {
    let (code, out, _) = carlos(&[
        "search",
        "--preset",
        "carlos2",
        "--max",
        "40",
        "--tol",
        "5",
        "--no-gcd-trivial",
    ]);
    assert_eq!(code, 0);
    let first_row = out.lines().nth(2).unwrap();
    assert!(first_row.starts_with("(4,5)"), "{first_row}");
    assert!(!out.contains("(8,10)"));

    let (_, with_trivial, _) = carlos(&["search", "--max", "40"]);
    assert!(with_trivial.contains("(8,10)"));
}

#[test]
fn search_pentatonic_csv() {
    let (code, out, _) = carlos(&[
        "search",
        "--preset",
        "pentatonic",
        "--max",
        "20,30",
        "--tol",
        "8",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("(7,11)-pentatonic"));
    assert!(out.contains("(17,27)-pentatonic"));
}

#[test]
fn table_is_deterministic() {
    let (code, first, _) = carlos(&["table"]);
    let (_, second, _) = carlos(&["table"]);
    assert_eq!(code, 0);
    assert_eq!(first, second);
    assert_eq!(first.lines().count(), 11);
}

#[test]
fn export_scl_to_stdout_and_file() {
    let (code, out, _) = carlos(&[
        "export-scl",
        "--preset",
        "carlos2",
        "--params",
        "4,5",
        "--steps",
        "15",
    ]);
    assert_eq!(code, 0);
    let scl = parse_scl(&out).unwrap();
    assert_eq!(scl.pitches_cents.len(), 15);
    let last: f64 = out.lines().last().unwrap().trim().parse().unwrap();
    assert!((last - 1169.47465).abs() < 0.0005);

    let dir = tempdir();
    let path = dir.join("fourteen_seventeen.scl");
    let (code, out, _) = carlos(&[
        "export-scl",
        "--preset",
        "carlos2",
        "--params",
        "14,17",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let scl = parse_scl(&text).unwrap();
    // defaults to the nearest-octave step count
    assert_eq!(scl.pitches_cents.len(), 53);
    assert!((scl.pitches_cents[52] - 1200.26733).abs() < 0.002);
    std::fs::remove_dir_all(dir).unwrap();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("carlos-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn oracle_check_reports_discrepancy() {
    let (code, out, _) = carlos(&["oracle-check", "--count", "200"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("systems: 200"));
    assert!(out.contains("result: ok"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = carlos(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());

    let (code, _, _) = carlos(&["derive", "--bogus"]);
    assert_eq!(code, 2);

    let (code, _, err) = carlos(&["derive"]);
    assert_eq!(code, 2);
    assert!(err.contains("--preset"));

    let (code, _, _) = carlos(&["derive", "--system", "4:m3,5:Q9"]);
    assert_eq!(code, 2);

    let (code, _, _) = carlos(&["derive", "--preset", "carlos2", "--params", "4"]);
    assert_eq!(code, 2);

    let (code, _, _) = carlos(&["search", "--max", "1,2,3"]);
    assert_eq!(code, 2);
}

#[test]
fn computation_errors_exit_one() {
    let (code, _, err) = carlos(&["derive", "--preset", "carlos2", "--params", "5,4"]);
    assert_eq!(code, 1);
    assert!(err.contains("out of order"), "{err}");

    let (code, _, _) = carlos(&[
        "derive",
        "--preset",
        "pair",
        "--intervals",
        "P5,3/2",
        "--params",
        "3,4",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = carlos(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("oracle-check"));
}
