//! One line per acceptance criterion; exits nonzero if any fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use slicecert::data::{bundled_poly, parse_certificate, serialize_poly};
use slicecert::obstruction::norm_form_test;
use slicecert::{CycField, CycNum, GaloisMap, LaurentPoly, Rational};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance").join(name)
}

/// Runs the binary with `--json`; returns the exit code, the report and the wall time.
fn cli(args: &[&str]) -> std::result::Result<(i32, Value, Duration), String> {
    let start = Instant::now();
    let out =
        Command::new(env!("CARGO_BIN_EXE_slicecert")).arg("--json").args(args).output().map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let code = out.status.code().unwrap_or(-1);
    let report = serde_json::from_slice(&out.stdout)
        .map_err(|_| format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&out.stderr).trim()))?;
    Ok((code, report, took))
}

fn write_poly(name: &str, f: &LaurentPoly) -> String {
    let path = tmp(name);
    std::fs::write(&path, serialize_poly(f)).unwrap();
    path.display().to_string()
}

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(took: Duration, limit: Duration, what: &str) -> std::result::Result<(), String> {
    ensure(took < limit, format!("{what} took {took:?}, limit {limit:?}"))
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1_branched_orders() -> Check {
    let mut got = Vec::new();
    for (q, want) in [("2", "37"), ("3", "169")] {
        let (code, v, took) = cli(&["branched-order", "--poly", &data("8_17.alex"), "-q", q])?;
        ensure(code == 0 && v["result"]["order"] == want, format!("q = {q}: {}", v["result"]))?;
        within(took, secs(1), "branched-order")?;
        got.push(format!("q={q}: {want}"));
    }
    Ok(got.join(", "))
}

fn c2_circle_roots() -> Check {
    let phi13 = write_poly("phi13.poly", &LaurentPoly::from_ints(CycField::RATIONALS, 0, &[1; 13]));
    let cases = [(data("8_17.alex"), 0), (data("8_17.rho3"), 0), (data("8_17.rho9"), 0), (phi13, 12)];
    let mut got = Vec::new();
    for (file, want) in &cases {
        let (code, v, took) = cli(&["circle-roots", file])?;
        let r = &v["result"];
        ensure(code == 0 && r["count"] == *want && r["certified"] == true, format!("{file}: {r}"))?;
        within(took, secs(10), "circle-roots")?;
        got.push(format!("{} ({})", want, r["method"].as_str().unwrap_or("?")));
    }
    Ok(format!("alex, rho3, rho9, Phi13 -> {}", got.join(", ")))
}

fn c3_irreducibility() -> Check {
    let dir = tmp("c3-certs");
    let _ = std::fs::remove_dir_all(&dir);
    let mut got = Vec::new();
    for (name, field) in [("8_17.rho0", "q"), ("8_17.rho3", "cyc13"), ("8_17.rho9", "cyc13")] {
        let (code, v, took) =
            cli(&["poly", "factor", "--field", field, &data(name), "--cert-dir", dir.to_str().unwrap()])?;
        ensure(code == 0 && v["result"]["irreducible"] == true, format!("{name}: {}", v["result"]))?;
        within(took, secs(300), "poly factor")?;
        // Parsing re-runs the re-multiplication check.
        let stored = v["result"]["stored"].as_str().ok_or("no certificate stored")?;
        let cert = parse_certificate(&std::fs::read_to_string(stored).map_err(|e| e.to_string())?)
            .map_err(|e| format!("{name}: {e}"))?;
        ensure(cert.is_irreducible(), format!("{name}: stored certificate is not irreducible"))?;
        got.push(format!("{name} ({took:.1?})"));
    }
    Ok(format!("irreducible with re-multiplied certificates: {}", got.join(", ")))
}

fn c4_non_conjugacy() -> Check {
    let start = Instant::now();
    let rho3 = bundled_poly("8_17.rho3").map_err(|e| e.to_string())?.poly;
    let rho9 = bundled_poly("8_17.rho9").map_err(|e| e.to_string())?.poly;
    let k = rho3.field();
    for nu in 1..13 {
        let s = GaloisMap::new(k, nu).map_err(|e| e.to_string())?;
        ensure(!rho3.galois(&s).map_err(|e| e.to_string())?.is_associate(&rho9), format!("conjugate under nu = {nu}"))?;
    }
    within(start.elapsed(), secs(1), "non-conjugacy")?;
    Ok("sigma_nu(rho3) not associate to rho9 for nu = 1..12".into())
}

fn random_element(rng: &mut ChaCha8Rng, k: CycField) -> CycNum {
    let coords = (0..k.degree()).map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into())).collect();
    CycNum::from_coords(k, coords).unwrap()
}

fn c5_norm_detector() -> Check {
    let start = Instant::now();
    let k = CycField::cyclotomic(13).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let one_minus_t = LaurentPoly::from_ints(k, 0, &[1, -1]);
    for i in 0..200 {
        let len = rng.gen_range(2..=4);
        let coeffs: Vec<CycNum> = (0..len).map(|_| random_element(&mut rng, k)).collect();
        let f = LaurentPoly::new(k, rng.gen_range(-2..=2), coeffs).unwrap();
        let mut a = random_element(&mut rng, k);
        if f.is_zero() || a.is_zero() {
            a = CycNum::one(k);
        }
        let g = f
            .checked_mul(&f.conj_reciprocal_raw())
            .and_then(|g| g.checked_mul(&one_minus_t.pow(rng.gen_range(0..=3))))
            .and_then(|g| g.scale(&a))
            .map(|g| g.shift(rng.gen_range(-3..=3)))
            .map_err(|e| e.to_string())?;
        if g.is_zero() {
            continue;
        }
        ensure(norm_form_test(&g).map_err(|e| e.to_string())?.0, format!("construction {i} rejected"))?;
    }
    let poly = |n: &str| bundled_poly(n).unwrap().poly;
    let rho0 = poly("8_17.rho0").embed(k).unwrap();
    for (name, g) in [
        ("rho3*rho9", poly("8_17.rho3").checked_mul(&poly("8_17.rho9")).unwrap()),
        ("rho3*rho0", poly("8_17.rho3").checked_mul(&rho0).unwrap()),
    ] {
        let file = write_poly(&format!("{name}.poly"), &g);
        let (code, v, _) = cli(&["norm-check", &file])?;
        ensure(code == 0 && v["result"]["is_norm"] == false, format!("{name} reported as a norm"))?;
    }
    within(start.elapsed(), secs(60), "norm detector")?;
    Ok("200/200 constructions accepted; rho3*rho9 and rho3*rho0 rejected".into())
}

/// Eisenstein at 2 for t^(2p) − 2.
fn eisenstein_at_two(p: u64) -> bool {
    let mut c = vec![0i64; 2 * p as usize + 1];
    c[0] = -2;
    c[2 * p as usize] = 1;
    let n = c.len() - 1;
    c[..n].iter().all(|x| x % 2 == 0) && c[0] % 4 != 0 && c[n] % 2 != 0
}

fn c6_screening() -> Check {
    let t2m2 = write_poly("t2-2.poly", &LaurentPoly::from_ints(CycField::RATIONALS, 0, &[-2, 0, 1]));
    let (code, v, _) = cli(&["screen-primes", &t2m2, "--bound", "100"])?;
    let primes = v["result"]["primes"].as_array().ok_or("no primes")?;
    ensure(code == 0 && primes.len() == 25, format!("t^2 - 2: {}", v["result"]))?;
    for pv in primes {
        let p = pv["prime"].as_u64().unwrap();
        ensure(pv["status"] == "certified-irreducible-by-norm", format!("t^2 - 2, p = {p}: {}", pv["status"]))?;
        ensure(eisenstein_at_two(p), format!("Eisenstein oracle disagrees at p = {p}"))?;
    }
    let eight = write_poly("f0-8.poly", &LaurentPoly::from_ints(CycField::RATIONALS, 0, &[8, 1, 1]));
    let (_, v, _) = cli(&["screen-primes", &eight, "--bound", "100"])?;
    ensure(
        v["result"]["candidates"] == serde_json::json!([3]),
        format!("f(0) = 8: candidates {}", v["result"]["candidates"]),
    )?;
    let dir = tmp("c6-certs");
    let _ = std::fs::remove_dir_all(&dir);
    let mut settled = Vec::new();
    for name in ["8_17.rho3", "8_17.rho9"] {
        let (code, v, took) =
            cli(&["screen-primes", &data(name), "--bound", "3", "--cert-dir", dir.to_str().unwrap()])?;
        ensure(code == 0 && v["result"]["unit_case"] == true, format!("{name}: unit case not detected"))?;
        within(took, secs(1800), "screen-primes")?;
        for pv in v["result"]["primes"].as_array().unwrap() {
            let file = dir.join(pv["certificate"].as_str().ok_or("prime settled without a certificate")?);
            let cert = parse_certificate(&std::fs::read_to_string(&file).map_err(|e| e.to_string())?)
                .map_err(|e| format!("{name}: {e}"))?;
            let status = pv["status"].as_str().unwrap();
            ensure(
                cert.is_irreducible() == (status != "reducible-with-certificate"),
                "status disagrees with certificate",
            )?;
            settled.push(format!("{name} p={}: {status}", pv["prime"]));
        }
    }
    Ok(format!("t^2-2 all 25 primes by norm (Eisenstein agrees); f(0)=8 -> {{3}}; {}", settled.join("; ")))
}

fn c7_pipeline() -> Check {
    let certs = data("certs");
    let (code, v, took) = cli(&["certify-pair", "--alpha", "5", "--beta", "7", "--cert-dir", &certs])?;
    let r = &v["result"];
    ensure(code == 0 && r["verdict"] == "obstructed", format!("5, 7: {}", r["verdict"]))?;
    ensure(r["selectors_total"].as_u64().unwrap_or(0) >= 15 * 12u64.pow(4), "selector count below 15*12^4")?;
    within(took, secs(60), "certify-pair")?;
    let (code, d, _) = cli(&["certify-pair", "--alpha", "5", "--beta", "5", "--cert-dir", &certs])?;
    ensure(code == 0 && d["result"]["verdict"] == "norm-witness-found", format!("5, 5: {}", d["result"]["verdict"]))?;
    Ok(format!(
        "L5 # L7 obstructed ({} of {} selectors evaluated, {took:.1?}); L5 # L5 norm-witness-found",
        r["selectors_evaluated"], r["selectors_total"]
    ))
}

fn c8_property_suites() -> Check {
    let suites = ["cyclo_props", "poly_props", "factor_props", "roots_props", "data_props", "obstruction_props"];
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
    let target = Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance-props");
    let mut cmd = Command::new(cargo);
    cmd.args(["test", "--release", "-p", "slicecert"])
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env("CARGO_TARGET_DIR", &target);
    for s in suites {
        cmd.args(["--test", s]);
    }
    let out = cmd.output().map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    let passed: usize = text
        .lines()
        .filter_map(|l| l.strip_prefix("test result: ok. "))
        .filter_map(|l| l.split(' ').next()?.parse::<usize>().ok())
        .sum();
    ensure(out.status.success(), format!("property suites failed:\n{text}"))?;
    Ok(format!("{} suites, {passed} properties green", suites.len()))
}

fn main() -> ExitCode {
    std::fs::create_dir_all(tmp("")).unwrap();
    let criteria: [Criterion; 8] = [
        ("branched-cover orders", c1_branched_orders),
        ("unit-circle roots", c2_circle_roots),
        ("irreducibility", c3_irreducibility),
        ("Galois non-conjugacy", c4_non_conjugacy),
        ("norm detector", c5_norm_detector),
        ("prime screening", c6_screening),
        ("pair obstruction pipeline", c7_pipeline),
        ("property suites", c8_property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}) [{took:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) [{took:.2?}]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
