//! Runs the built `lrq` binary as a subprocess.

use std::process::Command;

fn lrq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lrq"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn golden_outputs_are_byte_exact() {
    assert_eq!(
        lrq(&["cohomology", "--order", "2", "--genus", "1", "--space", "toprec"]).1,
        "1\n"
    );
    assert_eq!(lrq(&["airy", "--genus", "1", "--legs", "1"]).1, "1/16 * p^-4\n");
    assert_eq!(
        lrq(&["product", "(|o|)", "(|o|)", "--algebra", "full"]).1,
        "(|o(|o|)) + ((|o|)o|)\n"
    );
}

#[test]
fn exit_codes() {
    let (code, out, err) = lrq(&["product", "(|v|", "|"]);
    assert_eq!((code, out.as_str()), (1, ""));
    assert_eq!(err, "syntax error at offset 4: expected ')', found end of input\n");
    let (code, _, err) = lrq(&["airy", "--genus", "0", "--legs", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("unstable"));
    assert_eq!(lrq(&["bogus"]).0, 1);
}

#[test]
fn subcommands_print_canonical_forms() {
    assert_eq!(lrq(&["psi", "LTL"]).1.trim_end().split(" + ").count(), 5);
    assert_eq!(lrq(&["coproduct", "(|o|)"]).1, "|@(|o|) + (|o|)@|\n");
    assert_eq!(lrq(&["perm-coproduct", "[1,2]"]).1, "[]@[1,2] + [1]@[1] + [1,2]@[]\n");
    assert_eq!(lrq(&["border", "(|v(|v|))"]).1, "(|v|)\n");
    assert_eq!(lrq(&["dh", "(|v|)*(|v|)", "--space", "reg"]).0, 1);
    assert_eq!(lrq(&["dh", "(|o(|v|))", "--space", "reg"]).1, "0\n");
    assert_eq!(
        lrq(&["axioms", "--axiom", "coassoc", "--max-order", "3"])
            .1
            .split(' ')
            .next(),
        Some("pass")
    );
    assert_eq!(
        lrq(&["enumerate", "graphs", "--order", "3", "--genus", "1", "--regular"])
            .1
            .lines()
            .count(),
        15
    );
    assert_eq!(lrq(&["signature", "(|o(|v|))"]).1, "genus 1 legs 2 euler -2\n");
}

#[test]
fn output_is_identical_across_runs() {
    let args = ["genfun", "--max-degree", "4"];
    assert_eq!(lrq(&args), lrq(&args));
}
