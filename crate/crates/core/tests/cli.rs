use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipoly-k3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn groups_lists_seven_rows() {
    let o = run(&["groups"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[0].starts_with("label\tname\torder"));
    assert!(text.contains("OxT\tO×T\t576\t288\tOxO\t2\tyes"));
}

#[test]
fn markdown_output() {
    let o = run(&["groups", "--format", "markdown"]);
    let text = stdout(&o);
    assert!(text.starts_with("| label | name |"));
    assert_eq!(text.lines().nth(1).unwrap().matches("---").count(), 9);
}

#[test]
fn orbits_with_degree() {
    let text = stdout(&run(&["orbits", "--group", "TT1", "--degree", "6"]));
    assert!(text.contains("left\t2\t6\nright\t2\t6\n"), "{text}");
    assert!(text.contains("1\t1\t12,12,12\n"), "{text}");
}

#[test]
fn fixlines_tt1() {
    let text = stdout(&run(&["fixlines", "--group", "TT1"]));
    assert!(text.contains("N\t(p3,p3)\tZ3\t16\t1\t6\t6\t6A2"), "{text}");
}

#[test]
fn sing_and_nu() {
    let text = stdout(&run(&["sing", "--group", "OO2", "--fiber", "1"]));
    assert!(text.contains("nodes\t2E7\t14"));
    let text = stdout(&run(&["nu", "--group", "OxT", "--degree", "8", "--fiber", "smooth"]));
    assert!(text.contains("OxT\tsmooth\t3\t9\t7\t0\t19"));
}

#[test]
fn nu_with_wrong_degree_is_a_usage_error() {
    let o = run(&["nu", "--group", "TxV", "--degree", "8", "--fiber", "smooth"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["nu", "--group", "TxV", "--degree", "5", "--fiber", "smooth"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--table", "sec6.nu"]);
    // the printed row for (OO)″ at λ₁ disagrees with its own node table
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["verify", "--table", "sec3.subgroups"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 25);
}

#[test]
fn unknown_table_exits_2() {
    let o = run(&["verify", "--table", "sec0.none"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown table"));
}

#[test]
fn unknown_subcommand_exits_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn lattice_commands() {
    let f = temp_file("curve L1\ncurve L2\nedge L1 L2\ncurve L3\ncurve L4\nedge L3 L4\nclass v = +L1 -L2 +L3 -L4\n");
    let path = f.path().to_str().unwrap();
    let text = stdout(&run(&["lattice", "disc", "-f", path]));
    assert!(text.contains("4\t9\t3^2"));
    let text = stdout(&run(&["lattice", "group", "-f", path]));
    assert!(text.contains("Z/3 + Z/3"));
    let text = stdout(&run(&["lattice", "divisible", "-f", path, "--class", "v", "-p", "3"]));
    assert!(text.contains("v\t3\tno\t4"), "{text}");
    let o = run(&["lattice", "divisible", "-f", path, "--class", "v"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["lattice", "disc", "-f", path, "-p", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lattice_file_errors_carry_line_numbers() {
    let f = temp_file("curve L1\ncurve L2\nedge L1 L9\n");
    let o = run(&["lattice", "disc", "-f", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3: unknown curve L9"));
}

#[test]
fn node_overrides_replace_builtin_records() {
    let f = temp_file("node OO2 1 count=24 orbits=2 fix=O lines=3R,4N(N'),6M\n");
    let path = f.path().to_str().unwrap();
    let text = stdout(&run(&[
        "--nodes", path, "nu", "--group", "OO2", "--degree", "8", "--fiber", "1",
    ]));
    assert!(text.contains("OO2\tλ1\t2\t2\t2\t14\t20"), "{text}");
    let f = temp_file("node OO2 1 count=24 orbits=1 fix=O lines=-\n");
    let text = stdout(&run(&[
        "--nodes",
        f.path().to_str().unwrap(),
        "sing",
        "--group",
        "OO2",
        "--fiber",
        "1",
    ]));
    assert!(text.contains("nodes\tE7\t7"), "{text}");
}
