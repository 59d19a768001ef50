use std::io::Write;
use std::process::{Command, Output};

fn schroder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schroder")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = schroder(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn triangle_outputs() {
    assert_eq!(stdout(&["triangle", "--kind", "hills", "--rows", "5", "--format", "csv"]), "1\n1,1\n3,2,1\n11,7,3,1\n45,28,12,4,1\n");
    let md = stdout(&["triangle", "--kind", "littlehills", "--rows", "5", "--format", "md"]);
    assert!(md.contains("| 4 | 26 | 12 | 6 | 0 | 1 |"));
    assert_eq!(
        stdout(&["triangle", "--kind", "uv", "--rows", "3", "--u", "1", "--v", "-1"]),
        "{\"kind\":\"uv\",\"rows\":[[\"1\"],[\"1\",\"1\"],[\"1\",\"2\",\"1\"]]}\n"
    );
    let poly = stdout(&["triangle", "--kind", "uv", "--rows", "3", "--format", "csv"]);
    assert_eq!(poly.lines().nth(2), Some("u^2 + v + 1,2*u,1"));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--kind", "separable", "--n", "6"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["verify", "--suite", "table1", "--n", "6", "--jobs", "4"];
    let strip = |s: String| s.lines().map(|l| l.split('[').next().unwrap().to_string()).collect::<Vec<_>>();
    assert_eq!(strip(stdout(&args)), strip(stdout(&args)));
}

#[test]
fn bfile_comparison() {
    let dir = std::env::temp_dir().join(format!("schroder-bfile-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.txt");
    let mut f = std::fs::File::create(&good).unwrap();
    writeln!(f, "# large numbers\n0 1\n1 2\n2 6\n3 22\n4 90\n5 394").unwrap();
    let out = schroder(&["triangle", "--kind", "hills", "--rows", "5", "--bfile", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("5 entries match"));
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "0 1\n1 3\n").unwrap();
    let out = schroder(&["triangle", "--kind", "uv", "--u", "1", "--v", "1", "--rows", "5", "--bfile", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn map_examples() {
    assert_eq!(stdout(&["map", "phi-inv", "--path", "HHUHUHDUDDUHDHHUUDD"]), "HHUDUHDUDUDHUDUDUDUD 1011110\n");
    assert_eq!(
        stdout(&["map", "psi-inv", "--path", "UUUDUUDDDHUDHUHDUDDUUDD"]),
        "UDUDUHDUDUDUDUUDDUDUUDD 010201\n"
    );
    assert_eq!(stdout(&["map", "tau", "--tree", "(+ . (- . .))"]), "(- . (+ . .))\n");
    assert_eq!(stdout(&["map", "phi", "--path", "UDUD", "--b", "11"]), "UHHD\n");
    assert_eq!(stdout(&["map", "Phi", "--path", "H", "--b", "-", "--k", "1"]), "UDH\n");
    assert_eq!(stdout(&["map", "phi-inv", "--path", "H"]), "- -\n");
    assert_eq!(stdout(&["map", "path-to-tree", "--path", "H"]), "(- . .)\n");
    assert_eq!(stdout(&["map", "tree-to-path", "--tree", "(+ . .)"]), "UD\n");
    assert_eq!(stdout(&["map", "rho-inv", "--tree", "(+ . (- . .))"]), "(+ . .) -\n");
    assert_eq!(stdout(&["map", "rho", "--tree", ".", "--b", "-", "--k", "1"]), "(- . .)\n");
}

#[test]
fn roundtrip_flag() {
    let cases: [&[&str]; 6] = [
        &["map", "psi", "--path", "UD", "--t", "1"],
        &["map", "Psi-inv", "--path", "UUDDUD"],
        &["map", "Phi-inv", "--path", "UUDDUD"],
        &["map", "rho", "--tree", "(+ . .)", "--b", "-", "--k", "2"],
        &["map", "path-to-tree", "--path", "UHDUUDD"],
        &["map", "tree-to-path", "--tree", "(- (+ . .) (+ . .))"],
    ];
    for args in cases {
        let mut v = args.to_vec();
        v.push("--roundtrip");
        let out = stdout(&v);
        assert_eq!(out.lines().last(), Some("OK"), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| schroder(args).status.code();
    assert_eq!(code(&["map", "phi", "--path", "UDD", "--b", "1"]), Some(2));
    assert_eq!(code(&["map", "tau", "--tree", "(+ . (+ . .))"]), Some(2));
    assert_eq!(code(&["map", "phi", "--path", "UD"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["triangle", "--kind", "hills", "--rows", "0"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "nope"]), Some(2));
    let out = schroder(&["map", "psi", "--path", "H", "--t", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotLittle"));
    let out = schroder(&["map", "rho-inv", "--tree", "(- (+ . .) .)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("StarMember"));
    let out = schroder(&["map", "phi-inv", "--path", "UDUD"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotHillFree"));
}

#[test]
fn enumerate_examples() {
    assert_eq!(stdout(&["enumerate", "--kind", "paths", "--n", "2", "--count"]), "6\n");
    assert_eq!(stdout(&["enumerate", "--kind", "separable", "--n", "4", "--count"]), "22\n");
    assert_eq!(stdout(&["enumerate", "--kind", "trees", "--n", "2"]), "(+ . .)\n(- . .)\n");
    assert_eq!(stdout(&["enumerate", "--kind", "little", "--n", "3", "--count"]), "11\n");
    assert_eq!(stdout(&["enumerate", "--kind", "paths", "--n", "0"]), "-\n");
}

#[test]
fn verify_suites() {
    for (suite, n) in [("thm11", "8"), ("table1", "6"), ("thm32", "8")] {
        let out = stdout(&["verify", "--suite", suite, "--n", n]);
        assert!(out.ends_with("s)\n") && out.contains("result: ok"), "{out}");
    }
    let out = stdout(&["verify", "--suite", "all", "--n", "5", "--jobs", "2"]);
    assert_eq!(out.matches("result: ok").count(), 12);
}
