//! One pass/fail line per acceptance criterion. Exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use schroder_core::bijections::{phi_inv, psi_inv, BitSeq, TritSeq};
use schroder_core::paths::{hill_triangle, PathClass, SchroderPath};
use schroder_core::riordan::{specialize, stored_row_sums, uv_triangle};
use schroder_core::verify::{expected_small_triangles, run_suite, SuiteId, SuiteReport};

type Check = Result<String, String>;

fn suites(list: &[(SuiteId, usize)]) -> Check {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut notes = Vec::new();
    for &(id, n) in list {
        let rep: SuiteReport = run_suite(id, n, Some(jobs)).map_err(|e| e.to_string())?;
        if let Some(p) = rep.first_failure() {
            return Err(format!("{id} n={n}: {} ({:?})", p.name, p.outcome));
        }
        let instances: u64 = rep.properties.iter().map(|p| p.instances).sum();
        notes.push(format!("{id} n={n}: {instances} instances"));
    }
    Ok(notes.join("; "))
}

fn triangles() -> Check {
    let (all, little) = expected_small_triangles();
    if hill_triangle(4, PathClass::All) != all {
        return Err("rows 0..=4 of the all-paths triangle differ".into());
    }
    if hill_triangle(4, PathClass::Little) != little {
        return Err("rows 0..=4 of the little-paths triangle differ".into());
    }
    Ok("both five-row triangles exact".into())
}

fn figure_fixtures() -> Check {
    let p = |s: &str| s.parse::<SchroderPath>().unwrap();
    let b = |s: &str| s.parse::<BitSeq>().unwrap();
    let t = |s: &str| s.parse::<TritSeq>().unwrap();
    let got = phi_inv(&p("HHUHUHDUDDUHDHHUUDD")).map_err(|e| e.to_string())?;
    if got != (p("HHUDUHDUDUDHUDUDUDUD"), b("1011110")) {
        return Err(format!("binary fixture gave {} {}", got.0, got.1));
    }
    let cases = [
        ("UUHUUDDUDDUDUHDDUUDHUDD", "UDUUDDUDUDUDUDUDUUDHUDD", "102210"),
        ("UUUDUUDDDHUDHUHDUDDUUDD", "UDUDUHDUDUDUDUUDDUDUUDD", "010201"),
    ];
    for (q, pre, trits) in cases {
        let got = psi_inv(&p(q)).map_err(|e| e.to_string())?;
        if got != (p(pre), t(trits)) {
            return Err(format!("{q} gave {} {}", got.0, got.1));
        }
    }
    Ok("1011110, 102210, 010201 with their preimages".into())
}

fn row_sums_and_pascal() -> Check {
    let spot = [((1, 2), [1, 2, 7, 32, 166]), ((2, 2), [1, 3, 12, 57, 300])];
    let data = stored_row_sums();
    for ((u, v), sums) in spot {
        let row = data.iter().find(|e| (e.u, e.v) == (u, v)).ok_or("pair missing from data")?;
        if row.row_sums != sums {
            return Err(format!("stored prefix for ({u}, {v}) is {:?}", row.row_sums));
        }
        let tri = specialize(&uv_triangle(4), &BigInt::from(u), &BigInt::from(v));
        let computed: Vec<BigInt> = tri.row_sums();
        if computed != sums.map(BigInt::from) {
            return Err(format!("({u}, {v}) row sums {computed:?}"));
        }
    }
    suites(&[(SuiteId::Table1, 12)])
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "small triangles", budget: Duration::from_secs(1), run: triangles },
        Criterion {
            id: 2,
            title: "hill recurrences to 12, phi/Phi/psi/Psi bijective to 9",
            budget: Duration::from_secs(60),
            run: || suites(&[(SuiteId::Thm11, 9), (SuiteId::Thm12, 9)]),
        },
        Criterion { id: 3, title: "figure fixtures", budget: Duration::from_secs(1), run: figure_fixtures },
        Criterion {
            id: 4,
            title: "rho decomposition to 8, class sizes, iar triangle to 9",
            budget: Duration::from_secs(120),
            run: || suites(&[(SuiteId::Thm32, 8)]),
        },
        Criterion {
            id: 5,
            title: "descent sets against minus positions to 8",
            budget: Duration::from_secs(60),
            run: || suites(&[(SuiteId::Cor37Descents, 8)]),
        },
        Criterion {
            id: 6,
            title: "composite path/tree bijection to 8",
            budget: Duration::from_secs(60),
            run: || suites(&[(SuiteId::PathTree, 8)]),
        },
        Criterion {
            id: 7,
            title: "polynomial triangle equals weighted enumeration to 8",
            budget: Duration::from_secs(60),
            run: || suites(&[(SuiteId::Thm41, 8)]),
        },
        Criterion {
            id: 8,
            title: "sixteen row-sum prefixes, Pascal to 12",
            budget: Duration::from_secs(60),
            run: row_sums_and_pascal,
        },
        Criterion {
            id: 9,
            title: "iar/comp equidistribution to 9, comp against 1+h0 to 8, controls",
            budget: Duration::from_secs(60),
            run: || suites(&[(SuiteId::Cor43, 9), (SuiteId::Thm42, 8)]),
        },
        Criterion {
            id: 10,
            title: "three-term recurrence for 1 <= n <= 20",
            budget: Duration::from_secs(10),
            run: || suites(&[(SuiteId::FzSulanke, 20)]),
        },
        Criterion {
            id: 11,
            title: "little/hill-free swap bijective to 9",
            budget: Duration::from_secs(60),
            run: || suites(&[(SuiteId::Roundtrips, 9)]),
        },
    ];
    let mut failures = 0;
    for c in criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > c.budget => ("FAIL", format!("over budget of {}s", c.budget.as_secs())),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {:>2}: {status} {} ({:.3}s) {detail}", c.id, c.title, elapsed.as_secs_f64());
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
