use num_bigint::BigUint;
use num_traits::{One, Zero};
use pifam::engine::{self, judge, Verdict};
use pifam::exactnum::{ln2_reference, pi_formulas, pi_reference};
use pifam::hyperterm::{double_factorial_odd, factorial, pochhammer, FactFactor, TermSpec};
use pifam::{catalog, ExactRational, FixedReal, QuadQ};
use proptest::prelude::*;

const PI_200: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808651328230664709384460955058223172535940812848111745028410270193852110555964462294895493038196";
const LN2_60: &str = "0.693147180559945309417232121458176568075500134360255254120680";

fn rat() -> impl Strategy<Value = ExactRational> {
    (-40i64..40, 1i64..13).prop_map(|(n, d)| ExactRational::frac(n, d))
}

fn quad() -> impl Strategy<Value = QuadQ> {
    (rat(), rat(), rat(), rat()).prop_map(|(a, b, c, d)| QuadQ::new(a, b, c, d))
}

proptest! {
    #[test]
    fn pochhammer_composition(x in rat(), m in -6i64..7, n in -6i64..7) {
        let whole = pochhammer(&x, m + n);
        let first = pochhammer(&x, m);
        let shifted = &x + &ExactRational::from(m);
        let second = pochhammer(&shifted, n);
        if let (Ok(w), Ok(a), Ok(b)) = (whole, first, second) {
            prop_assert_eq!(w, a * b);
        }
    }

    #[test]
    fn pochhammer_negative_index(x in rat(), n in 1i64..8) {
        let mut prod = ExactRational::one();
        for i in 1..=n {
            prod *= &(&x - &ExactRational::from(i));
        }
        match pochhammer(&x, -n) {
            Ok(v) => prop_assert_eq!(v * prod, ExactRational::one()),
            Err(_) => prop_assert!(prod.is_zero()),
        }
        prop_assert_eq!(pochhammer(&x, 0).unwrap(), ExactRational::one());
    }

    #[test]
    fn pochhammer_positive_index(x in rat(), n in 1i64..8) {
        let mut prod = ExactRational::one();
        for i in 0..n {
            prod *= &(&x + &ExactRational::from(i));
        }
        prop_assert_eq!(pochhammer(&x, n).unwrap(), prod);
    }

    #[test]
    fn double_factorial_identity(k in 0u64..300) {
        let lhs = double_factorial_odd(k) * (BigUint::one() << k) * factorial(k);
        prop_assert_eq!(lhs, factorial(2 * k + 1));
    }

    #[test]
    fn field_axioms(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert!((x.clone() - x.clone()).is_zero());
        prop_assert_eq!(x.clone() * QuadQ::rational(ExactRational::one()), x.clone());
        if !x.is_zero() {
            let inv = x.inverse().unwrap();
            prop_assert_eq!(x.clone() * inv, QuadQ::rational(ExactRational::one()));
        } else {
            prop_assert!(x.inverse().is_err());
        }
    }

    #[test]
    fn conjugations_are_automorphisms(x in quad(), y in quad()) {
        prop_assert_eq!((x.clone() * y.clone()).conj2(), x.conj2() * y.conj2());
        prop_assert_eq!((x.clone() * y.clone()).conj3(), x.conj3() * y.conj3());
        prop_assert_eq!((x.clone() + y.clone()).conj3(), x.conj3() + y.conj3());
        let norm = x.clone() * x.conj2() * x.conj3() * x.conj2().conj3();
        prop_assert!(norm.is_rational());
    }

    #[test]
    fn embedding_encloses_rationals(x in quad()) {
        let v = pifam::ClosedFormConstant::new(x.clone(), 0);
        if let Ok(c) = v {
            let got = c.evaluate(&pi_reference(30).unwrap(), 30).unwrap();
            prop_assert!((got.to_f64() - x.to_f64()).abs() <= 1e-9 * x.to_f64().abs().max(1.0));
        }
    }

    #[test]
    fn fixed_products_enclose(x in rat(), y in rat(), d in 5u32..40) {
        let fx = FixedReal::from_rational(&x, d).unwrap();
        let fy = FixedReal::from_rational(&y, d).unwrap();
        prop_assert!(fx.mul(&fy).contains(&(&x * &y)));
        prop_assert!(fx.add(&fy).contains(&(&x + &y)));
        if !y.is_zero() {
            prop_assert!(fx.mul_rational(&y.recip().unwrap()).contains(&(&x / &y)));
        }
    }

    #[test]
    fn term_ratio_matches_consecutive_terms(fi in 0usize..33, pick in 0usize..1000, k in 0i64..12) {
        let f = &catalog::families()[fi];
        let tuples = f.feasible_tuples(2);
        let p = &tuples[pick % tuples.len()];
        let s = f.instantiate(p).unwrap();
        let k = k.max(s.term.regular_index());
        let a = s.term.term_value(k).unwrap();
        let b = s.term.term_value(k + 1).unwrap();
        let r = s.term.ratio_form().eval(&ExactRational::from(k)).unwrap();
        prop_assert_eq!(b, a * r);
    }
}

#[test]
fn conjugate_pairs() {
    let one = QuadQ::rational(ExactRational::one());
    let two = QuadQ::rational(ExactRational::from(2));
    let four = QuadQ::rational(ExactRational::from(4));
    let r3 = QuadQ::sqrt3();
    assert_eq!((two.clone() + r3.clone()) * (two - r3), one);
    let (r6, r2) = (QuadQ::sqrt6(), QuadQ::sqrt2());
    assert_eq!((r6.clone() + r2.clone()) * (r6 - r2), four);
}

#[test]
fn pi_formulas_agree_at_200_digits() {
    let (a, b) = pi_formulas(200).unwrap();
    assert!(a.overlaps(&b));
    let pi = pi_reference(200).unwrap();
    assert_eq!(pi.to_decimal_string(), &PI_200[..202]);
    assert!(pi.err_ulp() <= &BigUint::one());
}

#[test]
fn ln2_oracle_matches_published_digits() {
    assert_eq!(ln2_reference(60).unwrap().to_decimal_string(), LN2_60);
}

#[test]
fn acceleration_self_test_against_ln2() {
    // k!/(k+1)! (-1)^k = (-1)^k/(k+1)
    let term = TermSpec {
        fact: vec![FactFactor::num(0), FactFactor::den(1)],
        geo_base: ExactRational::from(-1),
        ..TermSpec::default()
    };
    let s = catalog::ConcreteSeries {
        term,
        lhs: pifam::ClosedFormConstant::new(QuadQ::rational(ExactRational::one()), 0).unwrap(),
        prefactor: ExactRational::one(),
        correction: ExactRational::zero(),
        family_id: "alt-harmonic".into(),
        params: Vec::new(),
    };
    let e = engine::sum_alternating_accel(&s, 15).unwrap();
    assert_eq!(e.strategy, engine::Strategy::AlternatingAccel);
    assert_eq!(judge(&ln2_reference(40).unwrap(), &e.value, 15), Verdict::Verified);
    assert!(e.value.to_decimal_string().starts_with(&LN2_60[..16]));
}
