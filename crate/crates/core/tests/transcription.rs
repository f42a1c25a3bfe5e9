//! Summands and closed forms written out independently of the catalog and
//! compared exactly for the first terms of several instances.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use pifam::catalog;
use pifam::{ExactRational, QuadQ};

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn z(n: i64) -> Q {
    q(n, 1)
}

/// `(x)_n`, with `(x)_{-n} = 1/((x-1)(x-2)...(x-n))`.
fn poch(x: Q, n: i64) -> Q {
    let mut r = Q::one();
    if n >= 0 {
        for i in 0..n {
            r *= &x + z(i);
        }
    } else {
        for i in 1..=-n {
            r /= &x - z(i);
        }
    }
    r
}

fn fact(n: i64) -> Q {
    assert!(n >= 0, "factorial of {n}");
    poch(z(1), n)
}

fn dfact_odd(n: i64) -> Q {
    assert!(n >= 1 && n % 2 == 1);
    (1..=n).step_by(2).fold(Q::one(), |acc, i| acc * z(i))
}

fn pow(b: Q, e: i64) -> Q {
    if e >= 0 {
        (0..e).fold(Q::one(), |acc, _| acc * &b)
    } else {
        (0..-e).fold(Q::one(), |acc, _| acc / &b)
    }
}

struct Case {
    id: &'static str,
    params: Vec<i64>,
    lhs: (QuadQ, i32),
    /// `outer · summand(k)` as printed.
    term: Box<dyn Fn(i64) -> Q>,
}

fn er(x: Q) -> ExactRational {
    ExactRational::new(x.numer().clone(), x.denom().clone()).unwrap()
}

fn rational(x: Q) -> QuadQ {
    QuadQ::rational(er(x))
}

fn cases() -> Vec<Case> {
    let mut v = Vec::new();
    for (m, n) in [(0i64, 0i64), (1, 2), (2, 1)] {
        v.push(Case {
            id: "thm-2.1",
            params: vec![m, n],
            lhs: (rational(pow(z(2), -(m + n + 1))), 1),
            term: Box::new(move |k| {
                fact(m) * fact(n) / (fact(2 * m) * fact(2 * n)) * fact(k + 2 * m) * fact(k + 2 * n)
                    / (fact(k) * dfact_odd(2 * k + 2 * m + 2 * n + 1))
            }),
        });
    }
    for (m, n, p) in [(1i64, 0i64, 0i64), (2, 1, 1), (2, -1, 2), (1, -2, 1)] {
        v.push(Case {
            id: "thm-2.2",
            params: vec![m, n, p],
            lhs: (rational(q(1, 2)), 1),
            term: Box::new(move |k| {
                let outer = Q::one() / (poch(q(-1, 4), n) * poch(q(1, 4), p) * poch(q(1, 2), m - n - p));
                outer * poch(q(-1, 2), k + 2 * n) * poch(q(1, 2), k + 2 * p) * fact(k + m)
                    * fact(k + 2 * m - 2 * n - 2 * p)
                    / (poch(q(5, 4), k + m - n) * poch(q(3, 4), k + m - p) * poch(q(1, 2), k + n + p) * fact(k))
                    * z(3 * k + 2 * m)
                    / z(k + m)
                    / pow(z(4), k + m)
            }),
        });
    }
    for (m, n, p) in [(0i64, 0i64, 0i64), (2, 1, 1), (1, 0, 1), (2, 2, 0)] {
        v.push(Case {
            id: "thm-2.7",
            params: vec![m, n, p],
            lhs: (rational(z(1)), 2),
            term: Box::new(move |k| {
                let outer = Q::one() / (poch(q(1, 2), n) * poch(q(1, 2), p) * poch(q(1, 2), m - n - p));
                outer * fact(k + m) * fact(k + 2 * n) * fact(k + 2 * p) * fact(k + 2 * m - 2 * n - 2 * p)
                    / (poch(q(3, 2), k + m - n) * poch(q(3, 2), k + m - p) * poch(q(3, 2), k + n + p) * fact(k))
                    * z(3 * k + 2 * m + 2)
                    / pow(z(4), k + m - 1)
            }),
        });
    }
    for (m, n, p) in [(0i64, 0i64, 0i64), (2, 1, 0), (1, -1, 1), (2, -2, -1)] {
        v.push(Case {
            id: "chu",
            params: vec![m, n, p],
            lhs: (rational(z(2)), -1),
            term: Box::new(move |k| {
                let h = q(1, 2);
                let outer = poch(h.clone(), m - n - p) / (poch(h.clone(), n) * poch(h.clone(), p));
                outer * pow(z(-1), k) * poch(h.clone(), k + m) * poch(h.clone(), k + n) * poch(h, k + p)
                    / (fact(k) * fact(k + m - n) * fact(k + m - p))
                    * z(4 * k + 2 * m + 1)
            }),
        });
    }
    for (m, n, p) in [(0i64, 0i64, 0i64), (1, 1, 0), (1, 0, 1), (2, 1, -1)] {
        v.push(Case {
            id: "thm-3.aa",
            params: vec![m, n, p],
            lhs: (rational(z(3)), -1),
            term: Box::new(move |k| {
                let s = q(1, 6);
                let outer = poch(q(5, 6), m - n - p) / (poch(s.clone(), n) * poch(s.clone(), p));
                outer * pow(z(-1), k) * poch(s.clone(), k + m) * poch(s.clone(), k + n) * poch(s, k + p)
                    / (fact(k) * fact(k + m - n) * fact(k + m - p))
                    * z(1 + 6 * m + 12 * k)
            }),
        });
    }
    for (m, n, p, qq) in [(0i64, 0i64, 0i64, 0i64), (1, 0, 1, -1), (2, 1, 0, 1)] {
        v.push(Case {
            id: "thm-3.a",
            params: vec![m, n, p, qq],
            lhs: (rational(z(4)), -1),
            term: Box::new(move |k| {
                let (a, h) = (q(1, 4), q(1, 2));
                let outer = poch(q(3, 4), m - n - p) * poch(h.clone(), m - n - qq) * poch(h.clone(), m - p - qq)
                    / (poch(a.clone(), m - n - p - qq) * poch(a.clone(), n) * poch(a.clone(), p) * poch(h.clone(), qq));
                outer * poch(a.clone(), k + m) * poch(a.clone(), k + n) * poch(a, k + p) * poch(h, k + qq)
                    / (fact(k) * fact(k + m - n) * fact(k + m - p) * poch(q(3, 4), k + m - qq))
                    * z(1 + 4 * m + 8 * k)
            }),
        });
    }
    for (m, n, p, qq) in [(1i64, 0i64, 0i64, 0i64), (2, 1, 0, 0), (1, -1, 1, 0)] {
        v.push(Case {
            id: "thm-3.b",
            params: vec![m, n, p, qq],
            lhs: (rational(z(1)), -1),
            term: Box::new(move |k| {
                let (a, h) = (q(3, 4), q(1, 2));
                let outer = poch(q(1, 4), m - n - p) * poch(h.clone(), m - n - qq) * poch(h.clone(), m - p - qq)
                    / (poch(a.clone(), m - n - p - qq - 1) * poch(a.clone(), n) * poch(a.clone(), p) * poch(h.clone(), qq));
                outer * poch(a.clone(), k + m) * poch(a.clone(), k + n) * poch(a, k + p) * poch(h, k + qq)
                    / (fact(k) * fact(k + m - n) * fact(k + m - p) * poch(q(5, 4), k + m - qq))
                    * z(3 + 4 * m + 8 * k)
            }),
        });
    }
    for (m, n, p, qq) in [(1i64, 0i64, 0i64, 0i64), (0, 0, 0, -1), (2, 1, 0, 0)] {
        v.push(Case {
            id: "liu",
            params: vec![m, n, p, qq],
            lhs: (QuadQ::new(Zero::zero(), Zero::zero(), er(q(1, 3)), Zero::zero()), -1),
            term: Box::new(move |k| {
                let (h, t, tt) = (q(1, 2), q(1, 3), q(2, 3));
                let outer = poch(tt.clone(), m - n - p) * poch(t.clone(), m - n - qq) * poch(h.clone(), m - p - qq)
                    / (fact(m - n - p - qq - 1) * poch(h.clone(), n) * poch(t.clone(), p) * poch(tt.clone(), qq));
                outer * poch(h.clone(), k + m) * poch(h, k + n) * poch(t, k + p) * poch(tt, k + qq)
                    / (fact(k) * fact(k + m - n) * poch(q(7, 6), k + m - p) * poch(q(5, 6), k + m - qq))
                    * z(1 + 2 * m + 4 * k)
            }),
        });
    }
    v
}

#[test]
fn catalog_matches_independent_transcription() {
    let all = cases();
    assert!(all.len() >= 25);
    for c in all {
        let f = catalog::find(c.id).unwrap();
        assert!(f.violations(&c.params).unwrap().is_empty(), "{} {:?} infeasible", c.id, c.params);
        let s = catalog::instantiate(c.id, &c.params).unwrap();
        assert_eq!(s.lhs.coeff(), &c.lhs.0, "{} {:?} lhs", c.id, c.params);
        assert_eq!(s.lhs.pi_power(), c.lhs.1, "{} {:?} pi power", c.id, c.params);
        for k in 0..=3 {
            let mut got = s.prefactor.clone() * s.term.term_value(k).unwrap();
            if k == s.term.start_index as i64 {
                got += &(s.prefactor.clone() * s.correction.clone());
            }
            let want = (c.term)(k);
            assert_eq!(got.as_big(), &want, "{} {:?} k={k}", c.id, c.params);
        }
    }
}
