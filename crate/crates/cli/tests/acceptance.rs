//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p orbinv-cli --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use astro_float::{BigFloat, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use orbinv_core::spinor::{
    cartan_dieudonne_decompose, cartan_dieudonne_decompose_with_order, spinor_norm, DiagonalForm,
    Isometry, IsometrySampler,
};
use orbinv_core::{euler_char_bound, superexponential_certificate, TotallyRealField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    check: fn() -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn orbinv(args: &[&str]) -> (i32, String) {
    orbinv_env(args, &[])
}

fn orbinv_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbinv"))
        .args(args)
        .envs(env.iter().copied())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn orbinv_json(args: &[&str]) -> Result<Value, String> {
    let (status, stdout) = orbinv(args);
    ensure!(status == 0, "{args:?} exited with {status}");
    serde_json::from_str(&stdout).map_err(|e| format!("{args:?}: {e}"))
}

fn text<'a>(doc: &'a Value, key: &str) -> &'a str {
    doc[key].as_str().unwrap_or("<missing>")
}

fn field_invariants_q_and_q5() -> Outcome {
    let q = orbinv_json(&["field-invariants", "--field", "Q"])?;
    let got = ["h", "h2", "unit_index_infinity", "h_inf_2"].map(|k| text(&q, k));
    ensure!(got == ["1", "1", "1", "1"], "Q: {got:?}");

    let k = orbinv_json(&["field-invariants", "--field", "Q(sqrt 5)"])?;
    let got = ["h", "h2", "unit_index_infinity", "h_inf_2"].map(|key| text(&k, key));
    ensure!(got == ["1", "1", "2", "1"], "Q(sqrt 5): {got:?}");
    ensure!(
        text(&k, "fundamental_unit") == "1/2+1/2*sqrt(5)",
        "unit {}",
        k["fundamental_unit"]
    );
    ensure!(
        text(&k, "unit_norm") == "-1",
        "unit norm {}",
        k["unit_norm"]
    );
    ensure!(k["uniqueness_certified"] == true, "not certified");
    Ok("(1,1,1,1) for Q, (1,1,2,1) for Q(sqrt 5), unit 1/2+1/2*sqrt(5) of norm -1".into())
}

fn normalizer_index() -> Outcome {
    for field in ["Q", "Q(sqrt 5)"] {
        for n in ["4", "6", "8"] {
            let doc = orbinv_json(&["check-normalizer", "--field", field, "--n", n])?;
            let ctx = format!("{field}, n = {n}");
            ensure!(text(&doc, "index_gamma_lambda") == "2", "{ctx}: index");
            ensure!(doc["witness_preserves_form"] == true, "{ctx}: form");
            ensure!(doc["witness_stabilizes_lattice"] == true, "{ctx}: lattice");
            ensure!(doc["witness_in_so0"] == false, "{ctx}: witness in SO0");
            ensure!(doc["witness_class_in_theta_set"] == true, "{ctx}: class");
            let k: TotallyRealField = field.parse().map_err(|e| format!("{e}"))?;
            let witness = doc["witness"].as_array().ok_or("witness rows")?;
            let dim: usize = n.parse::<usize>().unwrap() + 1;
            ensure!(witness.len() == dim, "{ctx}: witness size");
            for (i, row) in witness.iter().enumerate() {
                for (j, x) in row.as_array().ok_or("witness row")?.iter().enumerate() {
                    let expected = match (i == j, i < 2) {
                        (false, _) => 0,
                        (true, true) => -1,
                        (true, false) => 1,
                    };
                    let entry = k.parse_elem(x.as_str().ok_or("witness entry")?);
                    ensure!(
                        entry.as_ref().ok() == Some(&k.from_i64(expected)),
                        "{ctx}: witness entry ({i},{j}) = {x}"
                    );
                }
            }
            if field == "Q" {
                ensure!(text(&doc, "witness_spinor_class") == "-1/1", "{ctx}: class");
                ensure!(
                    doc["theta_set"] == serde_json::json!(["1/1", "-1/1"]),
                    "{ctx}: theta set {}",
                    doc["theta_set"]
                );
            }
        }
    }
    Ok("index 2, witness in Aut(L) outside SO0 for n = 4, 6, 8; class(-1) over Q".into())
}

fn distinct_primes(mut n: u64) -> u32 {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            count += 1;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    count + u32::from(n > 1)
}

fn sweep_rows() -> Result<Vec<Value>, String> {
    let doc = orbinv_json(&["sweep", "--dmax", "100"])?;
    Ok(doc["rows"].as_array().ok_or("rows")?.clone())
}

fn number(row: &Value, key: &str) -> Result<u64, String> {
    text(row, key)
        .parse()
        .map_err(|_| format!("{key} = {}", row[key]))
}

fn oracle_sweep() -> Outcome {
    let rows = sweep_rows()?;
    ensure!(rows.len() == 60, "{} rows", rows.len());
    for row in &rows {
        let d = number(row, "d")?;
        let (h, h_plus, oracle) = (
            number(row, "h")?,
            number(row, "h_plus")?,
            number(row, "oracle_h")?,
        );
        ensure!(
            row["oracle_agreement"] == true && oracle == h,
            "d = {d}: {h} vs oracle {oracle}"
        );
        let factor = match text(row, "unit_norm") {
            "1" => 2,
            "-1" => 1,
            other => return Err(format!("d = {d}: unit norm {other}")),
        };
        ensure!(h_plus == h * factor, "d = {d}: h+ = {h_plus}, h = {h}");
        let disc = if d % 4 == 1 { d } else { 4 * d };
        let t = distinct_primes(disc);
        ensure!(
            h_plus % (1 << (t - 1)) == 0,
            "d = {d}: genus bound, t = {t}"
        );
    }
    Ok("60 fields, form cycles = analytic oracle, h+ relation and genus bound hold".into())
}

fn degree_two_identity() -> Outcome {
    let rows = sweep_rows()?;
    ensure!(rows.len() == 60, "{} rows", rows.len());
    for row in &rows {
        let d = number(row, "d")?;
        ensure!(
            number(row, "unit_index_infinity")? == 2,
            "d = {d}: [U:U_inf]"
        );
        ensure!(
            number(row, "h_inf_2")? == number(row, "h2")?,
            "d = {d}: h_inf_2 != h2"
        );
    }
    Ok("[U:U_inf] = 2 and h_inf_2 = h2 for all 60 fields".into())
}

fn spinor_forms() -> Vec<DiagonalForm> {
    let q = TotallyRealField::rationals();
    let k = TotallyRealField::real_quadratic(5).unwrap();
    let mut forms = Vec::new();
    for n in [2, 4] {
        forms.push(DiagonalForm::standard_lorentzian(q, n).unwrap());
        let mut coeffs = vec![k.from_i64(-1); n + 1];
        coeffs[0] = k.parse_elem("1/2+1/2*sqrt(5)").unwrap();
        forms.push(DiagonalForm::new(k, coeffs).unwrap());
    }
    forms
}

fn spinor_suite() -> Outcome {
    let sampler = IsometrySampler::default();
    let mut total = 0;
    for (case, form) in spinor_forms().iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(7000 + case as u64);
        let gs: Vec<Isometry> = (0..50)
            .map(|_| sampler.isometry(form, &mut rng))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let reversed: Vec<usize> = (0..form.dim()).rev().collect();
        let classes: Vec<_> = gs.iter().map(spinor_norm).collect();
        for (i, g) in gs.iter().enumerate() {
            let ctx = format!("{form} #{i}");
            let dec = cartan_dieudonne_decompose(g);
            ensure!(dec.len() % 2 == 0, "{ctx}: odd length {}", dec.len());
            ensure!(
                dec.recompose(form).map_err(|e| e.to_string())? == *g.matrix(),
                "{ctx}: recomposition"
            );
            let other =
                cartan_dieudonne_decompose_with_order(g, &reversed).map_err(|e| e.to_string())?;
            ensure!(
                other.spinor_class(form) == classes[i],
                "{ctx}: order dependence"
            );
            let j = (i + 1) % gs.len();
            let gh = g.compose(&gs[j]).map_err(|e| e.to_string())?;
            let product = classes[i].mul(&classes[j]).map_err(|e| e.to_string())?;
            ensure!(spinor_norm(&gh) == product, "{ctx}: multiplicativity");
            if form.field().degree() == 2 {
                ensure!(
                    classes[i].in_k_infinity_star(),
                    "{ctx}: class {} not in k_inf*",
                    classes[i]
                );
            }
            total += 1;
        }
    }
    ensure!(total == 200, "{total} isometries");
    Ok("200 isometries over Q and Q(sqrt 5) in dimensions 3 and 5".into())
}

/// `π * 2^bits` by Machin's formula, in integer arithmetic.
fn machin_pi(bits: u64) -> BigInt {
    let guard = 16;
    let atan_inv = |x: u64| {
        let x2 = BigInt::from(x * x);
        let mut term = (BigInt::one() << (bits + guard)) / BigInt::from(x);
        let (mut sum, mut k) = (BigInt::zero(), 0u64);
        while !term.is_zero() {
            let t = &term / BigInt::from(2 * k + 1);
            if k % 2 == 0 {
                sum += t;
            } else {
                sum -= t;
            }
            term /= &x2;
            k += 1;
        }
        sum
    };
    (BigInt::from(16) * atan_inv(5) - BigInt::from(4) * atan_inv(239)) >> guard
}

/// `|x - num / (2π)^power| < 2^-k num / (2π)^power`, exactly.
fn within_relative(
    x: &BigFloat,
    num: &BigUint,
    power: u64,
    pi: &BigInt,
    pi_bits: u64,
    k: usize,
) -> bool {
    let (words, _, sign, exp, _) = x.as_raw_parts().expect("finite float");
    assert_eq!(sign, Sign::Pos);
    let mut mantissa = BigInt::zero();
    for w in words.iter().rev() {
        mantissa = (mantissa << 64usize) + BigInt::from(*w);
    }
    let shift = i64::from(exp) - 64 * words.len() as i64;
    // x = xn / xd, exact = en / ed
    let (xn, xd) = if shift >= 0 {
        (mantissa << shift as usize, BigInt::one())
    } else {
        (mantissa, BigInt::one() << (-shift) as usize)
    };
    let en = BigInt::from(num.clone()) << (pi_bits * power) as usize;
    let ed = (pi << 1usize).pow(power as u32);
    let diff = (&xn * &ed - &en * &xd).abs();
    (diff << k) < en * xd
}

fn growth_bound() -> Outcome {
    let cert = superexponential_certificate(20, 128).map_err(|e| e.to_string())?;
    ensure!(cert.ratio_identity_holds, "ratio identity fails");
    ensure!(cert.rows.len() == 20, "{} rows", cert.rows.len());
    for row in &cert.rows[..19] {
        ensure!(
            row.ratio_identity_holds == Some(true),
            "ratio identity at r = {}",
            row.r
        );
    }
    let pi_bits = 512;
    let pi = machin_pi(pi_bits);
    for degree in 1..=2 {
        for r in 1..=20 {
            let v = euler_char_bound(r, degree, 128).map_err(|e| e.to_string())?;
            ensure!(
                within_relative(
                    &v.float_value,
                    &v.exact_numerator,
                    v.pi_power,
                    &pi,
                    pi_bits,
                    120
                ),
                "r = {r}, degree = {degree}: float/exact disagreement"
            );
        }
    }
    let r0 = cert.r0.ok_or("no threshold up to r = 20")?;
    for row in &cert.rows[r0 as usize - 1..19] {
        ensure!(
            row.increasing == Some(true),
            "not increasing at r = {}",
            row.r
        );
    }
    let doc = orbinv_json(&["growth-bound", "--certify", "20"])?;
    ensure!(text(&doc, "r0") == r0.to_string(), "CLI r0 {}", doc["r0"]);
    Ok(format!(
        "identity for r <= 20, |float/exact - 1| < 2^-120, B increasing from r0 = {r0}"
    ))
}

fn determinism() -> Outcome {
    let boost = r#"[["5/3","4/3","0"],["4/3","5/3","0"],["0","0","1"]]"#;
    let invocations: Vec<Vec<&str>> = vec![
        vec!["field-invariants", "--field", "Q"],
        vec!["field-invariants", "--field", "Q(sqrt 5)"],
        vec![
            "field-invariants",
            "--field",
            "Q(sqrt 5)",
            "--id-place",
            "1",
        ],
        vec![
            "spinor-norm",
            "--field",
            "Q",
            "--form",
            "1,-1,-1",
            "--matrix",
            boost,
        ],
        vec![
            "decompose",
            "--field",
            "Q",
            "--form",
            "1,-1,-1",
            "--matrix",
            boost,
        ],
        vec!["check-normalizer", "--field", "Q", "--n", "4"],
        vec!["check-normalizer", "--field", "Q(sqrt 5)", "--n", "6"],
        vec!["growth-bound", "--r", "7", "--degree", "2"],
        vec!["growth-bound", "--certify", "20"],
        vec!["sweep", "--dmax", "100"],
    ];
    for args in &invocations {
        let (s1, first) = orbinv_env(args, &[("RAYON_NUM_THREADS", "1")]);
        let (s2, second) = orbinv_env(args, &[("RAYON_NUM_THREADS", "4")]);
        ensure!(s1 == 0 && s2 == 0, "{args:?} exited with {s1}, {s2}");
        ensure!(first == second, "{args:?}: outputs differ");
    }
    Ok(format!(
        "{} invocations byte-identical across two runs",
        invocations.len()
    ))
}

fn main() {
    let criteria = [
        Criterion {
            id: "invariants",
            title: "field invariants of Q and Q(sqrt 5)",
            limit: Some(Duration::from_secs(1)),
            check: field_invariants_q_and_q5,
        },
        Criterion {
            id: "normalizer",
            title: "normalizer index check for n = 4, 6, 8",
            limit: Some(Duration::from_secs(1)),
            check: normalizer_index,
        },
        Criterion {
            id: "oracle-sweep",
            title: "form cycles vs analytic oracle, squarefree d <= 100",
            limit: Some(Duration::from_secs(60)),
            check: oracle_sweep,
        },
        Criterion {
            id: "degree-two",
            title: "degree-2 identity h_inf_2 = h2",
            limit: None,
            check: degree_two_identity,
        },
        Criterion {
            id: "spinor-suite",
            title: "spinor norm properties on 200 seeded isometries",
            limit: Some(Duration::from_secs(30)),
            check: spinor_suite,
        },
        Criterion {
            id: "growth-bound",
            title: "growth bound ratio identity, precision and threshold",
            limit: None,
            check: growth_bound,
        },
        Criterion {
            id: "determinism",
            title: "byte-identical CLI output",
            limit: None,
            check: determinism,
        },
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (r, _) => r,
        };
        match result {
            Ok(summary) => println!("PASS {:<13} {} [{elapsed:.2?}]: {summary}", c.id, c.title),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:<13} {} [{elapsed:.2?}]: {reason}", c.id, c.title);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
