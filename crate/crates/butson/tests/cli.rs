//! End-to-end tests of the `butson` binary: exit codes, exact stdout, and
//! the format closure between commands.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn butson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_butson"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process should exit normally")
}

struct Workdir(PathBuf);

impl Workdir {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("butson-cli-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        fs::create_dir_all(&dir).unwrap();
        Workdir(dir)
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.path(name);
        fs::write(&p, contents).unwrap();
        p
    }
}

impl Drop for Workdir {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_fourier_writes_exact_matrix() {
    let out = butson(&["gen", "fourier", "--order", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "BH 2 2\n0 0\n0 1\n");
    assert!(stderr(&out).is_empty());
}

#[test]
fn gen_fourier_to_file_then_verify() {
    let dir = Workdir::new("gen-verify");
    let f4 = dir.path("f4.bh");
    let out = butson(&["gen", "fourier", "--order", "4", "-o", path_str(&f4)]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).is_empty());

    let out = butson(&["verify", path_str(&f4)]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "VALID BH(4,4)\n");
}

#[test]
fn gen_kron_composes_files() {
    let dir = Workdir::new("kron");
    let f2 = dir.path("f2.bh");
    let f3 = dir.path("f3.bh");
    butson(&["gen", "fourier", "--order", "2", "-o", path_str(&f2)]);
    butson(&["gen", "fourier", "--order", "3", "-o", path_str(&f3)]);

    let out = butson(&["gen", "kron", path_str(&f2), path_str(&f3)]);
    assert_eq!(exit_code(&out), 0);
    let kron = dir.file("kron.bh", &stdout(&out));

    let out = butson(&["verify", path_str(&kron)]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "VALID BH(6,6)\n");
}

#[test]
fn verify_invalid_reports_witness_and_exits_1() {
    let dir = Workdir::new("invalid");
    let bad = dir.file("ones.bh", "BH 2 2\n0 0\n0 0\n");
    let out = butson(&["verify", path_str(&bad)]);
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout(&out), "INVALID witness=(0,1)\n");
}

#[test]
fn reduce_prime_with_check_yields_valid_output() {
    let dir = Workdir::new("reduce");
    let f4 = dir.path("f4.bh");
    butson(&["gen", "fourier", "--order", "4", "-o", path_str(&f4)]);

    let reduced = dir.path("h8.bh");
    let out = butson(&[
        "reduce",
        path_str(&f4),
        "--prime",
        "2",
        "--check",
        "-o",
        path_str(&reduced),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));

    let out = butson(&["verify", path_str(&reduced)]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "VALID BH(8,2)\n");
}

#[test]
fn reduce_precondition_failure_exits_3_without_output() {
    let dir = Workdir::new("precondition");
    let f6 = dir.path("f6.bh");
    butson(&["gen", "fourier", "--order", "6", "-o", path_str(&f6)]);

    let target = dir.path("out.bh");
    let out = butson(&[
        "reduce",
        path_str(&f6),
        "--prime",
        "2",
        "-o",
        path_str(&target),
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(stdout(&out).is_empty());
    assert!(
        stderr(&out).contains("p^2 does not divide k"),
        "stderr: {}",
        stderr(&out)
    );
    assert!(!target.exists(), "no output file on precondition failure");
}

#[test]
fn reduce_factor_runs_full_plan() {
    let dir = Workdir::new("factor");
    let f8 = dir.path("f8.bh");
    butson(&["gen", "fourier", "--order", "8", "-o", path_str(&f8)]);

    let out = butson(&["reduce", path_str(&f8), "--factor", "4", "--check"]);
    assert_eq!(exit_code(&out), 0);
    let reduced = dir.file("h32.bh", &stdout(&out));

    let out = butson(&["verify", path_str(&reduced)]);
    assert_eq!(stdout(&out), "VALID BH(32,2)\n");
}

#[test]
fn reduce_accepts_explicit_witness() {
    let dir = Workdir::new("witness");
    let f9 = dir.path("f9.bh");
    let f3 = dir.path("f3.bh");
    butson(&["gen", "fourier", "--order", "9", "-o", path_str(&f9)]);
    butson(&["gen", "fourier", "--order", "3", "-o", path_str(&f3)]);

    let out = butson(&[
        "reduce",
        path_str(&f9),
        "--prime",
        "3",
        "--witness",
        path_str(&f3),
        "--check",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("BH 27 3\n"));
}

#[test]
fn reduce_requires_exactly_one_mode() {
    let dir = Workdir::new("mode");
    let f8 = dir.file("f8.bh", "BH 1 8\n0\n");
    let out = butson(&["reduce", path_str(&f8)]);
    assert_eq!(exit_code(&out), 2);
    let out = butson(&["reduce", path_str(&f8), "--prime", "2", "--factor", "4"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn parse_errors_exit_2_with_line_number() {
    let dir = Workdir::new("badparse");
    let bad = dir.file("bad.bh", "BH 2 2\n0 0\n0 x\n");
    let out = butson(&["verify", path_str(&bad)]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "stderr: {}", stderr(&out));

    let out = butson(&["verify", path_str(&dir.path("missing.bh"))]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn info_lists_reachable_targets() {
    let dir = Workdir::new("info");
    let f8 = dir.path("f8.bh");
    butson(&["gen", "fourier", "--order", "8", "-o", path_str(&f8)]);

    let out = butson(&["info", path_str(&f8)]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "BH(8,8)\nm=2 -> BH(16,4)\nm=4 -> BH(32,2)\n");
}

#[test]
fn info_omits_targets_that_would_fail() {
    let dir = Workdir::new("info12");
    let f12 = dir.path("f12.bh");
    butson(&["gen", "fourier", "--order", "12", "-o", path_str(&f12)]);

    let out = butson(&["info", path_str(&f12)]);
    // of m in {2,3,4,6,12} only m=2 keeps every prime of 12 in the target
    assert_eq!(stdout(&out), "BH(12,12)\nm=2 -> BH(24,6)\n");
}

#[test]
fn pipeline_output_is_closed_under_reading() {
    // every gen/reduce output must be consumable by every reading command
    let dir = Workdir::new("closure");
    let f4 = dir.path("f4.bh");
    butson(&["gen", "fourier", "--order", "4", "-o", path_str(&f4)]);

    let reduced = dir.path("h8.bh");
    butson(&[
        "reduce",
        path_str(&f4),
        "--prime",
        "2",
        "-o",
        path_str(&reduced),
    ]);

    let out = butson(&["gen", "kron", path_str(&reduced), path_str(&reduced)]);
    assert_eq!(exit_code(&out), 0);
    let kron = dir.file("k64.bh", &stdout(&out));

    let out = butson(&["info", path_str(&kron)]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("BH(64,2)\n"));

    let out = butson(&["verify", path_str(&kron)]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "VALID BH(64,2)\n");
}
