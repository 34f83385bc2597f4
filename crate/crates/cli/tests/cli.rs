use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_zeta-moments");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn abscissa_range_gives_one_row_per_degree() {
    let o = run(&["abscissa", "--d", "2-8", "--variant", "poly", "--grid", "1e-4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# zeta-moments abscissa d=2-8 variant=poly conditional=none grid=1e-4 seed=42"));
    assert_eq!(lines[1], "d,variant,conditional,mu_star,A_mu,B_mu,S,h_mo,e_mo");
    assert_eq!(lines.len(), 2 + 7);
    assert!(lines[2].starts_with("2,poly,none,0.4945"));
    assert!(lines[2].ends_with(",,"));
}

#[test]
fn monomial_rows_carry_h_and_e() {
    let text = stdout(&run(&["abscissa", "--d", "3", "--variant", "mono"]));
    assert!(text.lines().nth(2).unwrap().ends_with(",2,0.028312163513"));
}

#[test]
fn brute_count_row() {
    let o = run(&["count", "--h", "3", "--d", "2", "--n", "2", "--method", "brute"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(2).unwrap(), "3,2,2,brute,20,,");
}

#[test]
fn timing_is_opt_in() {
    let text = stdout(&run(&["count", "--h", "2", "--d", "2", "--n", "3", "--method", "mitm", "--timing"]));
    let row = text.lines().nth(2).unwrap();
    assert!(row.starts_with("2,2,3,mitm,15,,") && row.len() > "2,2,3,mitm,15,,".len());
}

#[test]
fn exit_codes() {
    let bad_sigma = run(&["moment", "--sigma", "0.4", "--coeffs", "1", "--schedule", "10"]);
    assert_eq!(bad_sigma.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_sigma.stderr).contains("discrete_moment"));
    assert_eq!(run(&["count", "--h", "2", "--d", "2", "--n", "3", "--method", "brute", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["abscissa", "--d", "8-2"]).status.code(), Some(2));
    assert_eq!(run(&["afe", "--sigma", "1", "--mu", "1.2", "--t", "50,100"]).status.code(), Some(2));
    assert_eq!(run(&["resonant", "--k0", "3", "--l0", "3", "--m", "1", "--sigma", "2", "--n", "10"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--h", "2", "--d", "2", "--n", "3", "--method", "mc", "--target", "T"]).status.code(), Some(2));
    assert_eq!(run(&["equi", "--coeffs", "1", "--n", "10", "--threads", "0"]).status.code(), Some(2));
    let over = run(&["moment", "--sigma", "2", "--coeffs", "1.4", "--schedule", "10,100", "--budget", "10"]);
    assert_eq!(over.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&over.stderr).contains("resource"));
    assert_eq!(run(&["count", "--h", "4", "--d", "2", "--n", "300", "--method", "mitm"]).status.code(), Some(3));
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("zeta-moments-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("equi.csv");
    let args = ["equi", "--coeffs", "0,1.4142135623730951", "--n", "100,10000"];
    let o = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), run(&args).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn afe_has_summary_row() {
    let text = stdout(&run(&["afe", "--sigma", "1", "--mu", "1.2", "--t", "50,100,200,400"]));
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("1,1.2,fitted_decay,,,,,-1.00"));
    assert_eq!(text.lines().count(), 2 + 4 + 1);
}

#[test]
fn seeded_outputs_repeat_and_depend_on_seed() {
    let args = ["count", "--h", "1", "--d", "2", "--n", "5", "--method", "mc", "--samples", "5000"];
    let a = run(&[&args[..], &["--seed", "7", "--threads", "1"]].concat()).stdout;
    let b = run(&[&args[..], &["--seed", "7", "--threads", "3"]].concat()).stdout;
    let c = run(&[&args[..], &["--seed", "8"]].concat()).stdout;
    assert_eq!(a, b);
    assert_ne!(a, c);
    let m1 = run(&["moment", "--sigma", "2", "--random-degree", "2", "--schedule", "50", "--seed", "3"]).stdout;
    let m2 = run(&["moment", "--sigma", "2", "--random-degree", "2", "--schedule", "50", "--seed", "3"]).stdout;
    assert_eq!(m1, m2);
    assert!(String::from_utf8(m1).unwrap().contains("random_degree=2"));
}

#[test]
fn resonant_row() {
    let text = stdout(&run(&["resonant", "--k0", "2", "--l0", "1", "--m", "0,1", "--sigma", "2", "--t", "0", "--n", "2000", "--tol", "1e-10"]));
    let row: Vec<&str> = text.lines().nth(2).unwrap().split(',').collect();
    assert_eq!(row[0], "2000");
    assert_eq!(row[2], "1.80387205614");
    assert!(row[4].parse::<u32>().unwrap() > 0);
}
