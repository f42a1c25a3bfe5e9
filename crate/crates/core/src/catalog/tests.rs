use std::collections::HashSet;

use num_traits::Zero;

use super::*;
use crate::exactnum::ExactRational;

fn rhs_term(s: &ConcreteSeries, k: i64) -> ExactRational {
    assert!(s.correction.is_zero());
    s.term.term_value(k).unwrap() * &s.prefactor
}

#[test]
fn registry_shape() {
    assert_eq!(families().len(), 33);
    assert_eq!(goldens().len(), 17);
    assert_eq!(find("thm-2.7").unwrap().lhs.pi_power, 2);
    assert_eq!(find("liu").unwrap().arity(), 4);
    let ids: HashSet<_> = families().iter().map(|f| f.family_id).collect();
    assert_eq!(ids.len(), 33);
    assert!(matches!(find("thm-9.9"), Err(Error::UnknownFamily(_))));
    assert!(matches!(golden("nope"), Err(Error::UnknownGolden(_))));
}

#[test]
fn constraint_examples() {
    assert!(check_constraints("thm-3.aa", &[0, 0, 0]).unwrap().is_empty());
    let forms: Vec<i64> = find("thm-3.aa").unwrap().constraints.iter().map(|c| c.eval(&[0, 0, 0])).collect();
    assert_eq!(forms, vec![0, 0, 1]);
    assert!(check_constraints("thm-2.1", &[1, 0]).unwrap().is_empty());
    let v = check_constraints("chu", &[0, 1, 0]).unwrap();
    assert_eq!(v, vec![Violation { form: "m-n".into(), value: -1 }, Violation { form: "m-2n-2p".into(), value: -2 }]);
    assert!(matches!(instantiate("chu", &[0, 1, 0]), Err(Error::ConstraintViolation(_))));
    assert!(matches!(check_constraints("chu", &[0, 0]), Err(Error::ParamCount { .. })));
}

#[test]
fn reduction_to_known_a() {
    let s = instantiate("thm-2.1", &[0, 0]).unwrap();
    let g = golden("known-a").unwrap();
    assert_eq!(s.lhs, g.lhs_constant().unwrap());
    for k in 0..=20 {
        assert_eq!(rhs_term(&s, k), g.literal_term(k as u64).unwrap(), "k={k}");
    }
}

#[test]
fn reduction_to_known_b() {
    let s = instantiate("thm-2.3", &[1, 1, 0]).unwrap();
    let g = golden("known-b").unwrap();
    assert_eq!(s.lhs, g.lhs_constant().unwrap());
    for k in 0..=20 {
        assert_eq!(rhs_term(&s, k), g.literal_term(k as u64).unwrap(), "k={k}");
    }
}

#[test]
fn chu_at_origin() {
    let s = instantiate("chu", &[0, 0, 0]).unwrap();
    assert_eq!(render_series(&s, Format::Text), "2/pi = sum_{k>=0} (-1)^k*(1/2)_k*(1/2)_k*(1/2)_k*(4k+1)/(k!*k!*k!)");
    assert_eq!(s.prefactor, ExactRational::from(1));
    assert_eq!(s.term.term_value(1).unwrap(), ExactRational::frac(-5, 8));
}

#[test]
fn golden_normal_form_matches_literal() {
    for g in goldens() {
        let t = g.term_spec().unwrap();
        for k in g.start..g.start + 25 {
            assert_eq!(t.term_value(k as i64).unwrap(), g.literal_term(k).unwrap(), "{} k={k}", g.label);
        }
    }
}

#[test]
fn rendering() {
    assert_eq!(render_golden(golden("known-a").unwrap(), Format::Text), "sum_{k>=0} k!/(2k+1)!! = pi/2");
    let s = instantiate("thm-2.7", &[0, 0, 0]).unwrap();
    let tex = render_series(&s, Format::Latex);
    assert!(tex.contains("\\frac{3k+2}{4^{k}}"), "{tex}");
    let texts: HashSet<String> = families().iter().map(|f| render_family(f, Format::Text)).collect();
    assert_eq!(texts.len(), families().len());
    let texs: HashSet<String> = families().iter().map(|f| render_family(f, Format::Latex)).collect();
    assert_eq!(texs.len(), families().len());
    assert_eq!(render_closed_form(&find("thm-2.1").unwrap().lhs, Format::Text), "pi/2^(m+n+1)");
    assert_eq!(render_closed_form(&golden("known-b").unwrap().lhs, Format::Text), "2*pi/(3*sqrt(3))");
}

#[test]
fn constraints_not_vacuous() {
    for f in families() {
        assert!(f.feasible_tuples(3).len() >= 5, "{}", f.family_id);
        assert!(f.feasible_tuples(-1).is_empty());
    }
    assert_eq!(find("thm-2.2").unwrap().feasible_tuples(0), vec![vec![0, 0, 0]]);
}

#[test]
fn every_feasible_small_tuple_instantiates() {
    for f in families() {
        for p in f.feasible_tuples(2) {
            if let Err(e) = f.instantiate(&p) {
                panic!("{} {:?}: {e}", f.family_id, p);
            }
        }
    }
}

#[test]
fn removable_singularity_at_m_zero() {
    let s = instantiate("thm-2.2", &[0, 0, 0]).unwrap();
    assert!(!s.correction.is_zero());
    let m1 = instantiate("thm-2.2", &[1, 0, 0]).unwrap();
    assert!(m1.correction.is_zero());
}

#[test]
fn records_are_versioned() {
    let r = family_record(find("liu").unwrap());
    assert_eq!(r.schema_version, SCHEMA_VERSION);
    assert_eq!(r.params, vec!["m", "n", "p", "q"]);
    assert_eq!(r.constraints, vec!["m-n >= 0", "m-n-p-q-1 >= 0"]);
    let doc = latex_document(families(), goldens());
    assert!(doc.starts_with("\\documentclass") && doc.ends_with("\\end{document}\n"));
}
