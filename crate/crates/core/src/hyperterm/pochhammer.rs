use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::ExactRational;
use crate::scalar::Scalar;

/// Shifted factorial `(x)_n` for any integer `n`; negative `n` is the
/// reciprocal of `(x+n)(x+n+1)...(x-1)`.
pub fn pochhammer<T: Scalar>(x: &T, n: i64) -> Result<T> {
    let mut acc = T::one();
    if n >= 0 {
        let mut f = x.clone();
        for _ in 0..n {
            acc = acc * f.clone();
            f = f + T::one();
        }
        return Ok(acc);
    }
    let mut f = x.clone() + T::from_i64(n);
    for _ in n..0 {
        if f.is_zero() {
            return Err(Error::Pole(format!("({x:?})_{n}")));
        }
        acc = acc * f.clone();
        f = f + T::one();
    }
    Ok(T::one() / acc)
}

/// True when `(x)_n` vanishes: `x` a non-positive integer and `n > -x`.
pub fn pochhammer_vanishes(x: &ExactRational, n: i64) -> bool {
    match x.to_i64_exact() {
        Some(v) if v <= 0 => n > -v,
        _ => false,
    }
}

/// True when `(x)_n` with `n < 0` hits a zero factor.
pub fn pochhammer_has_pole(x: &ExactRational, n: i64) -> bool {
    if n >= 0 {
        return false;
    }
    match x.to_i64_exact() {
        Some(v) => v >= 1 && v <= -n,
        None => false,
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `(2k+1)!! = 1·3·5···(2k+1)`.
pub fn double_factorial_odd(k: u64) -> BigUint {
    (0..=k).fold(BigUint::one(), |acc, i| acc * (2 * i + 1))
}

/// `Γ(x+m)/Γ(x)` products, i.e. `∏ (x_i)_{m_i}`.
pub fn gamma_quotient_reduce(pairs: &[(ExactRational, i64)]) -> Result<ExactRational> {
    pairs.iter().try_fold(ExactRational::one(), |acc, (x, m)| {
        Ok(acc * pochhammer(x, *m)?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::frac(n, d)
    }

    #[test]
    fn defining_cases() {
        assert_eq!(pochhammer(&r(7, 3), 0).unwrap(), r(1, 1));
        assert_eq!(pochhammer(&r(1, 2), 3).unwrap(), r(15, 8));
        assert_eq!(pochhammer(&r(1, 2), -2).unwrap(), r(4, 3));
        assert!(matches!(pochhammer(&r(1, 1), -1), Err(Error::Pole(_))));
    }

    #[test]
    fn zero_and_pole_predicates() {
        assert!(pochhammer_vanishes(&r(-2, 1), 3));
        assert!(!pochhammer_vanishes(&r(-2, 1), 2));
        assert!(pochhammer_has_pole(&r(2, 1), -2));
        assert!(!pochhammer_has_pole(&r(3, 1), -2));
        assert!(!pochhammer_has_pole(&r(1, 2), -9));
        for (x, n) in [(-2i64, 3i64), (-2, 2), (0, 1), (3, -4)] {
            let exact = pochhammer(&r(x, 1), n);
            assert_eq!(pochhammer_vanishes(&r(x, 1), n), matches!(&exact, Ok(v) if v.is_zero()));
            assert_eq!(pochhammer_has_pole(&r(x, 1), n), exact.is_err());
        }
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial_odd(0), BigUint::one());
        assert_eq!(double_factorial_odd(2), BigUint::from(15u32));
        assert_eq!(double_factorial_odd(5), BigUint::from(10395u32));
        let k = 5u64;
        assert_eq!(
            double_factorial_odd(k) * BigUint::from(2u32).pow(k as u32) * factorial(k),
            factorial(2 * k + 1)
        );
    }

    #[test]
    fn gamma_quotients() {
        let x = r(9, 7);
        assert_eq!(gamma_quotient_reduce(&[(x.clone(), 1)]).unwrap(), x);
        assert_eq!(gamma_quotient_reduce(&[(r(1, 2), 2)]).unwrap(), r(3, 4));
        assert!(gamma_quotient_reduce(&[(r(2, 1), -3)]).is_err());
    }

    #[test]
    fn f64_instance() {
        let v: f64 = pochhammer(&0.5f64, 3).unwrap();
        assert!((v - 1.875).abs() < 1e-15);
    }
}
