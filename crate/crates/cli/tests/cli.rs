use std::process::{Command, Output};

fn mubose(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mubose"))
        .args(args)
        .env_remove("MU_THERMO_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    stdout(out)
        .lines()
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn bracket_prints_header_and_exact_value() {
    let out = mubose(&["bracket", "--n", "2", "--mu", "0.5"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows[0], ["n", "mu", "bracket", "shift_product", "factorial"]);
    assert_eq!(rows[1][2], "1");
}

#[test]
fn virial_row_reports_both_pipelines() {
    let out = mubose(&["virial", "--mu", "0.4"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].len(), 10);
    assert_eq!(rows[1][1], "-0.192490179323005");
    let gap: f64 = rows[1][9].parse().unwrap();
    assert!(gap < 1e-10);
}

#[test]
fn figure_five_matches_requested_grid() {
    let out = mubose(&["figure", "--id", "5", "--mu-min", "0", "--mu-max", "0.9", "--steps", "90"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows[0], ["mu", "tc_ratio"]);
    assert_eq!(rows.len(), 92);
    assert_eq!(rows[1], ["0", "1"]);
    let ratios: Vec<f64> = rows[1..].iter().map(|r| r[1].parse().unwrap()).collect();
    assert!(ratios.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn output_is_deterministic_and_lf_terminated() {
    let a = mubose(&["figure", "--id", "4", "--steps", "10"]);
    let b = mubose(&["figure", "--id", "4", "--steps", "10"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains('\r'));
    assert!(text.ends_with('\n'));
    assert_eq!(text.lines().next(), Some("z,g0,g1,g2,g3,g4,g5"));
}

#[test]
fn json_mirrors_csv() {
    let out = mubose(&["tc", "--mu", "0.4", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.trim_start().starts_with('['));
    assert!(text.contains("\"tc_ratio\": 1.70043734609214"));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("mubose-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("poly.csv");
    let out = mubose(&["polylog", "-l", "5/2", "--z", "1", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("l,z,mu,value,terms,error_bound\n5/2,1,0,1.34148725725092,"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn thermo_reports_condensed_state() {
    let out = mubose(&["thermo", "-T", "2", "-v", "1", "--mu", "0.4"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    let col = |name: &str| rows[0].iter().position(|c| c == name).unwrap();
    assert_eq!(rows[1][col("regime")], "below_tc");
    assert_eq!(rows[1][col("z")], "1");
    let fraction: f64 = rows[1][col("condensate_fraction")].parse().unwrap();
    assert!(fraction > 0.0 && fraction < 1.0);
}

#[test]
fn eos_compares_exact_and_virial() {
    let out = mubose(&["eos", "-T", "40", "-v", "1", "--mu", "0.2"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    let exact: f64 = rows[1][7].parse().unwrap();
    let virial: f64 = rows[1][8].parse().unwrap();
    assert!((exact - virial).abs() < 1e-4);
}

#[test]
fn deriv_handles_polynomials_and_functions() {
    let out = mubose(&["deriv", "--coeffs", "0,0,0,1", "--mu", "0.7"]);
    assert_eq!(stdout(&out), "power,coefficient\n0,0\n1,0\n2,0.967741935483871\n");
    let out = mubose(&["deriv", "--coeffs", "0,0,0,1", "--operator", "jackson", "--q", "2"]);
    assert_eq!(stdout(&out), "power,coefficient\n0,0\n1,0\n2,7\n");
    let out = mubose(&["deriv", "--function", "log1p", "--x", "1", "--mu", "0.7"]);
    assert!(stdout(&out).ends_with(",0.350644520260137\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(mubose(&["polylog", "--z", "0.5", "--mu", "1.5"]).status.code(), Some(2));
    assert_eq!(mubose(&["thermo", "-T", "-1", "-v", "1"]).status.code(), Some(2));
    assert_eq!(mubose(&["polylog", "-l", "1", "--z", "1"]).status.code(), Some(3));
    let diverge = mubose(&["polylog", "-l", "1/2", "--z", "1"]);
    assert_eq!(diverge.status.code(), Some(3));
    assert_eq!(String::from_utf8_lossy(&diverge.stderr).lines().count(), 1);
    assert_eq!(mubose(&["nonsense"]).status.code(), Some(64));
    assert_eq!(mubose(&["figure", "--id", "9"]).status.code(), Some(64));
    assert_eq!(mubose(&["deriv", "--coeffs", "1,2", "--operator", "pq", "--q", "2"]).status.code(), Some(64));
    assert_eq!(mubose(&["--help"]).status.code(), Some(0));
    assert_eq!(mubose(&["--version"]).status.code(), Some(0));
}

#[test]
fn omitted_points_are_counted_on_stderr() {
    let out = mubose(&["figure", "--id", "2", "--x-min", "-2", "--x-max", "2", "--steps", "4", "--mu-list", "0,0.9"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("2 grid point(s) omitted"));
    assert_eq!(csv_rows(&out).len(), 4);
}

#[test]
fn tolerance_comes_from_environment() {
    let loose = Command::new(env!("CARGO_BIN_EXE_mubose"))
        .args(["polylog", "-l", "3/2", "--z", "0.5"])
        .env("MU_THERMO_TOL", "1e-3")
        .output()
        .unwrap();
    let tight = mubose(&["polylog", "-l", "3/2", "--z", "0.5"]);
    let terms = |o: &Output| csv_rows(o)[1][4].parse::<usize>().unwrap();
    assert!(terms(&loose) < terms(&tight));
    let bad = Command::new(env!("CARGO_BIN_EXE_mubose"))
        .args(["polylog", "--z", "0.5"])
        .env("MU_THERMO_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
