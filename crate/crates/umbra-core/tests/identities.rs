//! Cross-module identity checks: every family against its generating
//! function, the orthogonality condition for all pairs, the boundary
//! recurrences, and exact reconstruction through the basis expansion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use umbra_core::expansion::{self, expand, expand_with, reconstruct, LambdaMode};
use umbra_core::families::{self, FamilyId};
use umbra_core::scalars::{LambdaRational, Rational};
use umbra_core::sheffer::{orthogonality_matrix, sheffer_sequence};
use umbra_core::umbral::XPolynomial;
use umbra_core::CoreError;

const PAIR_FAMILIES: [FamilyId; 5] = [
    FamilyId::Monomial,
    FamilyId::ApostolEuler,
    FamilyId::Bernoulli,
    FamilyId::Euler,
    FamilyId::FrobeniusEuler,
];

fn int(n: i64) -> LambdaRational {
    LambdaRational::from_int(n)
}

#[test]
fn sheffer_sequences_match_recurrence_families() {
    let n = 10;
    for family in PAIR_FAMILIES {
        let pair = families::sheffer_pair(family, n).unwrap();
        let seq = sheffer_sequence(&pair, n).unwrap();
        let direct = families::polynomials(family, n).unwrap();
        assert_eq!(seq, direct, "family {family}");
    }
}

#[test]
fn orthogonality_holds_for_all_pairs() {
    let n = 10;
    for family in PAIR_FAMILIES {
        let pair = families::sheffer_pair(family, n).unwrap();
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
                assert_eq!(entry, &expected, "family {family}, entry ({k}, {m})");
            }
        }
    }
}

#[test]
fn sheffer_leading_coefficients() {
    // With f = t the leading coefficient of S_k is 1/g(0).
    let n = 8;
    for family in PAIR_FAMILIES {
        let pair = families::sheffer_pair(family, n).unwrap();
        let g0 = pair.g().coeff(0);
        let expected = g0.recip().unwrap();
        for (k, p) in sheffer_sequence(&pair, n).unwrap().iter().enumerate() {
            assert_eq!(p.degree(), Some(k), "family {family}");
            assert_eq!(p.leading(), Some(&expected), "family {family}, k = {k}");
        }
    }
}

#[test]
fn boundary_identities_to_degree_12() {
    let n = 12;
    let lam = LambdaRational::lambda();
    let one = LambdaRational::one();

    // lambda E_n(1|lambda) + E_n(lambda) = 2 delta_{n,0}
    let numbers = families::apostol_euler_numbers(n);
    let polys = families::apostol_euler_polys(n);
    for (m, (p, v)) in polys.iter().zip(numbers.values()).enumerate() {
        let lhs = &(&lam * &p.eval(&one)) + v;
        assert_eq!(lhs, if m == 0 { int(2) } else { int(0) }, "apostol m = {m}");
    }

    // B_n(1) - B_n = delta_{n,1}
    let (b_numbers, b_polys) = families::bernoulli(n);
    for (m, (p, v)) in b_polys.iter().zip(b_numbers.values()).enumerate() {
        let lhs = &p.eval(&one) - v;
        assert_eq!(
            lhs,
            if m == 1 { int(1) } else { int(0) },
            "bernoulli m = {m}"
        );
    }

    // E_n(1) + E_n = 2 delta_{n,0}
    let (e_numbers, e_polys) = families::euler(n);
    for (m, (p, v)) in e_polys.iter().zip(e_numbers.values()).enumerate() {
        let lhs = &p.eval(&one) + v;
        assert_eq!(lhs, if m == 0 { int(2) } else { int(0) }, "euler m = {m}");
    }

    // lambda F_n(-lambda) + F_n(1|-lambda) = (1+lambda) delta_{n,0}
    let (f_numbers, f_polys) = families::frobenius_euler(n);
    for (m, (p, v)) in f_polys.iter().zip(f_numbers.values()).enumerate() {
        let lhs = &(&lam * v) + &p.eval(&one);
        let rhs = if m == 0 { &one + &lam } else { int(0) };
        assert_eq!(lhs, rhs, "frobenius m = {m}");
    }
}

#[test]
fn specializations_at_0_and_1() {
    let n = 10;
    let at1 = families::apostol_euler_polys_with(&int(1), n).unwrap();
    let (_, euler_polys) = families::euler(n);
    assert_eq!(at1, euler_polys);

    let at0 = families::apostol_euler_polys_with(&int(0), n).unwrap();
    for (m, p) in at0.iter().enumerate() {
        assert_eq!(p, &XPolynomial::monomial(m).scale(&int(2)));
    }

    // lambda = -1 is a pole of every Apostol-Euler quantity
    let numbers = families::apostol_euler_numbers(3);
    assert_eq!(
        numbers.value(0).eval(&Rational::from_int(-1)),
        Err(CoreError::PoleAtLambda {
            at: Rational::from_int(-1)
        })
    );
}

/// The generator set of the reconstruction checks: monomials and all five
/// families up to degree `max`.
fn generator_set(max: usize) -> Vec<XPolynomial> {
    let mut polys: Vec<XPolynomial> = (0..=max).map(XPolynomial::monomial).collect();
    polys.extend(families::bernoulli(max).1);
    polys.extend(families::euler(max).1);
    polys.extend(families::frobenius_euler(max).1);
    polys.extend(families::bessel_polys(max));
    polys
}

fn random_rational_poly(rng: &mut impl Rng, max_deg: usize) -> XPolynomial {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg)
        .map(|_| {
            let p = rng.gen_range(-9i64..=9);
            let q = rng.gen_range(1i64..=9);
            LambdaRational::ratio(p, q)
        })
        .collect();
    XPolynomial::from_coeffs(coeffs)
}

#[test]
fn reconstruction_on_generators_and_random_polys() {
    let n = 10;
    for p in generator_set(n) {
        let c = expand(&p, n).unwrap();
        assert_eq!(reconstruct(&c), p, "generator {p}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15);
    for _ in 0..50 {
        let p = random_rational_poly(&mut rng, n);
        let c = expand(&p, n).unwrap();
        assert_eq!(reconstruct(&c), p, "random {p}");
    }
}

#[test]
fn basis_expands_to_unit_coordinates_to_degree_10() {
    let n = 10;
    let basis = families::apostol_euler_polys(n);
    for (m, e_m) in basis.iter().enumerate() {
        let c = expand(e_m, n).unwrap();
        for (k, coeff) in c.coeffs().iter().enumerate() {
            let expected = if k == m { int(1) } else { int(0) };
            assert_eq!(coeff, &expected, "m = {m}, k = {k}");
        }
    }
}

#[test]
fn lambda_zero_degeneration() {
    // Specializing the expansion at lambda = 0 and rebuilding with the
    // lambda = 0 basis (E_k(x|0) = 2 x^k) returns the specialized input.
    let n = 8;
    let zero_mode = LambdaMode::at(Rational::zero()).unwrap();
    for family in [
        FamilyId::Monomial,
        FamilyId::Bernoulli,
        FamilyId::Euler,
        FamilyId::FrobeniusEuler,
        FamilyId::Bessel,
    ] {
        for m in 0..=n {
            let p = expansion::family_polynomial_with(family, m, &LambdaMode::Symbolic).unwrap();
            let p0 = p.eval_lambda(&Rational::zero()).unwrap();
            let c_sym = expand(&p, n).unwrap();
            // coefficients specialized at 0, reassembled against 2 x^k
            let mut rebuilt = XPolynomial::zero();
            for (k, coeff) in c_sym.coeffs().iter().enumerate() {
                let at0 = LambdaRational::from_rational(coeff.eval(&Rational::zero()).unwrap());
                rebuilt = &rebuilt + &XPolynomial::monomial(k).scale(&(&at0 * &int(2)));
            }
            assert_eq!(rebuilt, p0, "family {family}, m = {m}");
            // and the all-at-lambda-0 pipeline agrees
            let c0 = expand_with(&p0, n, &zero_mode).unwrap();
            assert_eq!(
                reconstruct(&c0),
                p0,
                "specialized pipeline, {family} m = {m}"
            );
        }
    }
}

#[test]
fn bessel_corrected_term_matches_functional_up_to_8() {
    for n in 1..=8 {
        let report = expansion::verify_closed_form(FamilyId::Bessel, n).unwrap();
        for cmp in &report.per_k {
            assert_eq!(
                cmp.rederived.as_ref(),
                Some(&cmp.functional),
                "n = {n}, k = {}",
                cmp.k
            );
        }
        // at lambda = 0 printed, corrected and functional all collapse
        let report0 = expansion::verify_closed_form_with(
            FamilyId::Bessel,
            n,
            &LambdaMode::at(Rational::zero()).unwrap(),
        )
        .unwrap();
        assert!(report0.verdict.is_all_match(), "lambda = 0 at n = {n}");
        for cmp in &report0.per_k {
            assert_eq!(cmp.rederived.as_ref(), Some(&cmp.functional));
        }
    }
}
