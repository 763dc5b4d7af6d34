//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `-- --nocapture` to see the lines for passing tests too).
//!
//! Every check is exact equality in canonical Q(lambda) form; the stated
//! runtime bounds are asserted where given. Two criteria are expected to
//! fail and are left failing on purpose: the euler closed form, and the
//! documented `verify --family euler` exit code that depends on it. The
//! functional expansion refutes that closed form (the k < n coefficients
//! carry (1+lambda)/2 where eliminating E_{n-k}(1) through the boundary
//! identity forces (1-lambda)/2), so reporting all-match there would be
//! reporting a false identity as true. The mismatch evidence is printed by
//! the failing tests themselves.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use umbra_core::expansion::{self, expand, reconstruct, LambdaMode, Verdict};
use umbra_core::families::{self, FamilyId};
use umbra_core::scalars::{LambdaPolynomial, LambdaRational, Rational};
use umbra_core::series::{SeriesOrder, TruncatedSeries};
use umbra_core::sheffer::{orthogonality_matrix, sheffer_sequence};
use umbra_core::umbral::XPolynomial;
use umbra_core::CoreError;

fn int(n: i64) -> LambdaRational {
    LambdaRational::from_int(n)
}

fn lam_frac_q(num: &[(i64, i64)], den: &[(i64, i64)]) -> LambdaRational {
    let poly = |cs: &[(i64, i64)]| {
        LambdaPolynomial::from_coeffs(cs.iter().map(|&(p, q)| Rational::ratio(p, q)).collect())
    };
    LambdaRational::new(poly(num), poly(den)).unwrap()
}

/// Prints the per-criterion line and enforces failures plus the stated
/// runtime bound.
fn conclude(name: &str, failures: Vec<String>, started: Instant, bound: Option<Duration>) {
    let elapsed = started.elapsed();
    let ok = failures.is_empty() && bound.is_none_or(|b| elapsed <= b);
    println!(
        "ACCEPTANCE {name}: {} ({:.2?}{})",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        bound
            .map(|b| format!(", bound {b:.2?}"))
            .unwrap_or_default()
    );
    for f in &failures {
        println!("  - {f}");
    }
    assert!(
        failures.is_empty(),
        "{name}: {} check(s) failed, first: {}",
        failures.len(),
        failures.first().map(String::as_str).unwrap_or("")
    );
    if let Some(b) = bound {
        assert!(
            elapsed <= b,
            "{name}: took {elapsed:.2?}, stated bound {b:.2?}"
        );
    }
}

// Criterion 1: the Apostol-Euler orthogonality matrix for n, k <= 12 equals
// diag(0!..12!) exactly in Q(lambda).
#[test]
fn orthogonality_apostol_euler_n12() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let n = 12;
    let pair = families::sheffer_pair(FamilyId::ApostolEuler, n).unwrap();
    let seq = sheffer_sequence(&pair, n).unwrap();
    let matrix = orthogonality_matrix(&pair, &seq).unwrap();
    let mut fact = Rational::one();
    for (k, row) in matrix.iter().enumerate() {
        if k > 0 {
            fact = &fact * &Rational::from_int(k as i64);
        }
        for (m, entry) in row.iter().enumerate() {
            let expected = if m == k {
                LambdaRational::from_rational(fact.clone())
            } else {
                LambdaRational::zero()
            };
            if entry != &expected {
                failures.push(format!("entry ({k}, {m}) = {entry}"));
            }
        }
    }
    conclude(
        "orthogonality diag(0!..12!)",
        failures,
        started,
        Some(Duration::from_secs(5)),
    );
}

// Criterion 2: reconstruct(expand(p, 10)) = p for the generator families up
// to degree 10 and for 50 seeded-random polynomials of degree <= 10.
#[test]
fn basis_expansion_reconstruction() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let n = 10;

    let mut generators: Vec<XPolynomial> = (0..=n).map(XPolynomial::monomial).collect();
    generators.extend(families::bernoulli(n).1);
    generators.extend(families::euler(n).1);
    generators.extend(families::frobenius_euler(n).1);
    generators.extend(families::bessel_polys(n));

    let mut rng = ChaCha8Rng::seed_from_u64(0x756d627261);
    for _ in 0..50 {
        let deg = rng.gen_range(0..=n);
        let coeffs = (0..=deg)
            .map(|_| LambdaRational::ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9)))
            .collect();
        generators.push(XPolynomial::from_coeffs(coeffs));
    }

    for p in &generators {
        let c = expand(p, n).unwrap();
        if &reconstruct(&c) != p {
            failures.push(format!("reconstruction differs for {p}"));
        }
    }
    conclude(
        "functional-1 reconstruction (105 polynomials)",
        failures,
        started,
        Some(Duration::from_secs(10)),
    );
}

// Criterion 3: the closed-form expansions all match the functional one with
// symbolic lambda: monomial n = 0..12, bernoulli n = 2..12, euler and
// frobenius-euler n = 1..12.
//
// EXPECTED FAILURE: the euler closed form is refuted by the functional
// computation at every n >= 1 (see the module docs above); the criterion is
// asserted as stated and left red.
#[test]
fn closed_form_identities_all_match() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let ranges = [
        (FamilyId::Monomial, 0usize),
        (FamilyId::Bernoulli, 2),
        (FamilyId::Euler, 1),
        (FamilyId::FrobeniusEuler, 1),
    ];
    for (family, min) in ranges {
        let mut family_failures = Vec::new();
        for n in min..=12 {
            let report = expansion::verify_closed_form(family, n).unwrap();
            if let Verdict::MismatchAt(ks) = &report.verdict {
                let detail: Vec<String> = ks
                    .iter()
                    .map(|k| {
                        let cmp = &report.per_k[*k];
                        format!(
                            "k={k}: functional {} vs closed-form {}",
                            cmp.functional, cmp.closed_form
                        )
                    })
                    .collect();
                family_failures.push(format!("n={n} [{}]", detail.join("; ")));
            }
        }
        println!(
            "  closed form {family}: {}",
            if family_failures.is_empty() {
                "all-match".to_string()
            } else {
                format!("MISMATCH {}", family_failures.join(", "))
            }
        );
        failures.extend(
            family_failures
                .into_iter()
                .map(|f| format!("{family}: {f}")),
        );
    }
    conclude(
        "closed-form identities all-match",
        failures,
        started,
        Some(Duration::from_secs(10)),
    );
}

// Criterion 4: the Bessel report carries printed, functional and rederived
// values per k; functional = rederived for n <= 8; all three agree at
// lambda = 0; and the n = 2 functional values are the frozen ones.
#[test]
fn bessel_three_way_report() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=8 {
        let report = expansion::verify_closed_form(FamilyId::Bessel, n).unwrap();
        // verdict recorded as-is, no assertion on it
        match &report.verdict {
            Verdict::AllMatch => println!("  bessel n={n}: printed matches"),
            Verdict::MismatchAt(ks) => {
                let list: Vec<String> = ks.iter().map(usize::to_string).collect();
                println!(
                    "  bessel n={n}: printed mismatches at k={{{}}}",
                    list.join(",")
                );
            }
        }
        for cmp in &report.per_k {
            match &cmp.rederived {
                Some(corr) if corr == &cmp.functional => {}
                Some(corr) => failures.push(format!(
                    "n={n} k={}: rederived {} != functional {}",
                    cmp.k, corr, cmp.functional
                )),
                None => failures.push(format!("n={n} k={}: no rederived value", cmp.k)),
            }
        }
        let at0 = expansion::verify_closed_form_with(
            FamilyId::Bessel,
            n,
            &LambdaMode::at(Rational::zero()).unwrap(),
        )
        .unwrap();
        if !at0.verdict.is_all_match() {
            failures.push(format!(
                "n={n}: printed differs from functional at lambda=0"
            ));
        }
        if at0
            .per_k
            .iter()
            .any(|cmp| cmp.rederived.as_ref() != Some(&cmp.functional))
        {
            failures.push(format!("n={n}: rederived differs at lambda=0"));
        }
    }
    // frozen n = 2 functional values: c_0 = 1/2 + (7/2)lambda,
    // c_1 = 3/2 + (9/2)lambda
    let report = expansion::verify_closed_form(FamilyId::Bessel, 2).unwrap();
    let expected_c0 = lam_frac_q(&[(1, 2), (7, 2)], &[(1, 1)]);
    let expected_c1 = lam_frac_q(&[(3, 2), (9, 2)], &[(1, 1)]);
    if report.per_k[0].functional != expected_c0 {
        failures.push(format!("n=2 c_0 = {}", report.per_k[0].functional));
    }
    if report.per_k[1].functional != expected_c1 {
        failures.push(format!("n=2 c_1 = {}", report.per_k[1].functional));
    }
    conclude("bessel three-way report", failures, started, None);
}

// Criterion 5: recurrence-generated number tables equal the series-inversion
// tables up to index 16 for all four families.
#[test]
fn family_number_cross_oracles() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let n = 16;
    for family in [
        FamilyId::ApostolEuler,
        FamilyId::Bernoulli,
        FamilyId::Euler,
        FamilyId::FrobeniusEuler,
    ] {
        let table = families::number_table(family, n).unwrap();
        let g = families::sheffer_pair(family, n).unwrap().g().clone();
        let inverted = g.invert().unwrap();
        for k in 0..=n {
            if table.value(k) != &inverted.coeff(k) {
                failures.push(format!(
                    "{family} index {k}: recurrence {} vs inversion {}",
                    table.value(k),
                    inverted.coeff(k)
                ));
            }
        }
    }
    // spot-frozen Bernoulli prefix
    let b = families::bernoulli(4).0;
    let expected = [
        int(1),
        LambdaRational::ratio(-1, 2),
        LambdaRational::ratio(1, 6),
        int(0),
        LambdaRational::ratio(-1, 30),
    ];
    if b.values() != expected {
        failures.push(format!("bernoulli prefix {:?}", b.values()));
    }
    conclude(
        "family cross-oracles to index 16",
        failures,
        started,
        Some(Duration::from_secs(5)),
    );
}

// Criterion 6: the four boundary identities hold exactly for n <= 12 with
// symbolic lambda.
#[test]
fn boundary_identities_n12() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let n = 12;
    let lam = LambdaRational::lambda();
    let one = LambdaRational::one();

    let ae_numbers = families::apostol_euler_numbers(n);
    let ae_polys = families::apostol_euler_polys(n);
    let (b_numbers, b_polys) = families::bernoulli(n);
    let (e_numbers, e_polys) = families::euler(n);
    let (f_numbers, f_polys) = families::frobenius_euler(n);

    for m in 0..=n {
        let apostol = &(&lam * &ae_polys[m].eval(&one)) + ae_numbers.value(m);
        if apostol != if m == 0 { int(2) } else { int(0) } {
            failures.push(format!("apostol-euler boundary at m = {m}"));
        }
        let bern = &b_polys[m].eval(&one) - b_numbers.value(m);
        if bern != if m == 1 { int(1) } else { int(0) } {
            failures.push(format!("bernoulli boundary at m = {m}"));
        }
        let eul = &e_polys[m].eval(&one) + e_numbers.value(m);
        if eul != if m == 0 { int(2) } else { int(0) } {
            failures.push(format!("euler boundary at m = {m}"));
        }
        let frob = &(&lam * f_numbers.value(m)) + &f_polys[m].eval(&one);
        let frob_expected = if m == 0 { &one + &lam } else { int(0) };
        if frob != frob_expected {
            failures.push(format!("frobenius-euler boundary at m = {m}"));
        }
    }
    conclude("boundary identities n <= 12", failures, started, None);
}

// Criterion 7: E_n(x|1) = E_n(x) and E_n(x|0) = 2x^n for n <= 10, and
// evaluation at lambda = -1 raises the pole error.
#[test]
fn lambda_specializations() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let n = 10;
    let at1 = families::apostol_euler_polys_with(&int(1), n).unwrap();
    if at1 != families::euler(n).1 {
        failures.push("E_n(x|1) differs from E_n(x)".to_string());
    }
    let at0 = families::apostol_euler_polys_with(&int(0), n).unwrap();
    for (m, p) in at0.iter().enumerate() {
        if p != &XPolynomial::monomial(m).scale(&int(2)) {
            failures.push(format!("E_{m}(x|0) != 2x^{m}"));
        }
    }
    let e1 = families::apostol_euler_numbers(1);
    match e1.value(1).eval(&Rational::from_int(-1)) {
        Err(CoreError::PoleAtLambda { .. }) => {}
        other => failures.push(format!("lambda = -1 evaluation gave {other:?}")),
    }
    conclude("lambda specializations", failures, started, None);
}

// Criterion 8: 50 multiplicative and 50 compositional inverse round-trips at
// cap 12 are exact, and comp_inverse(e^t - 1) has divided-power coefficients
// (-1)^{k-1} (k-1)!.
#[test]
fn series_engine_round_trips() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let cap = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(0x7365726965735f);

    let random_scalar = |rng: &mut ChaCha8Rng| {
        LambdaRational::ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9))
    };
    for i in 0..50 {
        let mut coeffs: Vec<LambdaRational> = (0..=cap).map(|_| random_scalar(&mut rng)).collect();
        if coeffs[0].is_zero() {
            coeffs[0] = int(1);
        }
        let f = TruncatedSeries::from_divided_coeffs(coeffs);
        let inv = f.invert().unwrap();
        if f.mul_series(&inv) != TruncatedSeries::one(cap) {
            failures.push(format!("multiplicative round-trip {i}"));
        }
    }
    for i in 0..50 {
        let mut coeffs: Vec<LambdaRational> = (0..=cap).map(|_| random_scalar(&mut rng)).collect();
        coeffs[0] = int(0);
        if coeffs[1].is_zero() {
            coeffs[1] = int(1);
        }
        let f = TruncatedSeries::from_divided_coeffs(coeffs);
        assert_eq!(f.order(), SeriesOrder::Finite(1));
        let fbar = f.comp_inverse().unwrap();
        if fbar.compose(&f).unwrap() != TruncatedSeries::t(cap)
            || f.compose(&fbar).unwrap() != TruncatedSeries::t(cap)
        {
            failures.push(format!("compositional round-trip {i}"));
        }
    }

    let em1 = TruncatedSeries::linear_comb(
        &int(1),
        &TruncatedSeries::exp(&int(1), cap),
        &int(-1),
        &TruncatedSeries::one(cap),
    );
    let log = em1.comp_inverse().unwrap();
    let mut expected = Rational::one();
    for k in 1..=cap {
        if k > 1 {
            expected = &expected * &Rational::from_int(-((k as i64) - 1));
        }
        if log.coeff(k) != LambdaRational::from_rational(expected.clone()) {
            failures.push(format!("log series coefficient at k = {k}"));
        }
    }
    conclude("series engine round-trips", failures, started, None);
}

// Criterion 9: the documented CLI invocations produce the stated outputs and
// exit codes, byte-deterministically.
//
// EXPECTED FAILURE: the documented `verify --family euler --degree 8`
// outcome (all-match, exit 0) is unattainable because the euler closed form
// is false for symbolic lambda; the tool truthfully reports the mismatch and
// exits 1. The invocation is asserted as documented and left red.
#[test]
fn cli_documented_invocations() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let run = |args: &[&str]| -> Output {
        Command::new(env!("CARGO_BIN_EXE_umbra"))
            .args(args)
            .output()
            .expect("binary runs")
    };
    let mut check = |name: &str, args: &[&str], want_code: i32, want_stdout: &[&str]| {
        let first = run(args);
        let second = run(args);
        let mut local = Vec::new();
        if first.stdout != second.stdout || first.stderr != second.stderr {
            local.push(format!("{name}: output is not byte-deterministic"));
        }
        let code = first.status.code().expect("no signal");
        if code != want_code {
            local.push(format!("{name}: exit {code}, documented {want_code}"));
        }
        let text = String::from_utf8_lossy(&first.stdout);
        for needle in want_stdout {
            if !text.contains(needle) {
                local.push(format!("{name}: output lacks {needle:?}"));
            }
        }
        println!("  {name}: {}", if local.is_empty() { "ok" } else { "FAIL" });
        failures.extend(local);
    };

    // cmd_expand
    check(
        "expand x^2",
        &[
            "expand", "--poly", "x^2", "--degree", "2", "--lambda", "symbolic",
        ],
        0,
        &[
            "0  1/2*lambda\n",
            "1  lambda\n",
            "2  1/2*lambda + 1/2\n",
            "reconstruction: ok",
        ],
    );
    check(
        "expand constant",
        &["expand", "--poly", "1", "--degree", "0"],
        0,
        &["0  1/2*lambda + 1/2\n"],
    );
    check(
        "expand degree overflow",
        &["expand", "--poly", "x^3", "--degree", "2"],
        3,
        &[],
    );

    // cmd_verify -- the euler invocation asserts the documented exit 0
    check(
        "verify euler (documented all-match)",
        &["verify", "--family", "euler", "--degree", "8"],
        0,
        &["overall: all-match"],
    );
    check(
        "verify bessel",
        &["verify", "--family", "bessel", "--degree", "2"],
        1,
        &[
            "functional: 7/2*lambda + 1/2",
            "closed-form: 11/4*lambda + 1/2",
            "rederived: 7/2*lambda + 1/2",
        ],
    );
    check(
        "verify bernoulli range",
        &["verify", "--family", "bernoulli", "--degree", "1"],
        3,
        &[],
    );

    // cmd_tables
    check(
        "numbers bernoulli",
        &["numbers", "--family", "bernoulli", "--degree", "3"],
        0,
        &["0  1\n", "1  -1/2\n", "2  1/6\n", "3  0\n"],
    );
    check(
        "basis at lambda 0",
        &["basis", "--degree", "1", "--lambda", "0"],
        0,
        &["0  2\n", "1  2*x\n"],
    );
    check(
        "numbers apostol-euler",
        &["numbers", "--family", "apostol-euler", "--degree", "1"],
        0,
        &[
            "0  2/(lambda + 1)\n",
            "1  -2*lambda/(lambda^2 + 2*lambda + 1)\n",
        ],
    );

    conclude("cli documented invocations", failures, started, None);
}
