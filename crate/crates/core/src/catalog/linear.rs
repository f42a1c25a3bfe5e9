use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Parameter names in their fixed order.
pub const PARAM_NAMES: [char; 4] = ['m', 'n', 'p', 'q'];

/// Integer linear form `c_m·m + c_n·n + c_p·p + c_q·q + constant`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LinearForm {
    pub coeffs: [i64; 4],
    pub constant: i64,
}

impl LinearForm {
    pub fn constant(c: i64) -> Self {
        Self { coeffs: [0; 4], constant: c }
    }

    /// Panicking parse for static tables.
    pub fn of(s: &str) -> Self {
        s.parse().unwrap_or_else(|e| panic!("bad linear form {s:?}: {e}"))
    }

    pub fn eval(&self, params: &[i64]) -> i64 {
        self.coeffs
            .iter()
            .zip(params.iter().chain(std::iter::repeat(&0)))
            .map(|(c, p)| c * p)
            .sum::<i64>()
            + self.constant
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Highest parameter index used, plus one.
    pub fn arity(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1)
    }

    /// `λ` with `self = λ·other` on the parameter part, if the two are proportional.
    pub fn param_ratio(&self, other: &LinearForm) -> Option<(i64, i64)> {
        let i = other.coeffs.iter().position(|&c| c != 0)?;
        let (num, den) = (self.coeffs[i], other.coeffs[i]);
        let proportional = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| a * den == b * num);
        proportional.then_some((num, den))
    }

    /// Rendering with `k` leading, e.g. `k+2m-1` for `offset_of_k`.
    pub fn with_k(&self, k_coeff: i64) -> String {
        let mut out = String::new();
        push_term(&mut out, k_coeff, "k");
        for (c, name) in self.coeffs.iter().zip(PARAM_NAMES) {
            push_term(&mut out, *c, &name.to_string());
        }
        push_term(&mut out, self.constant, "");
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn push_term(out: &mut String, c: i64, var: &str) {
    if c == 0 {
        return;
    }
    let mag = c.unsigned_abs();
    if c < 0 {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    if mag != 1 || var.is_empty() {
        out.push_str(&mag.to_string());
    }
    out.push_str(var);
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.with_k(0))
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LinearForm {
    type Err = Error;

    /// Accepts sums like `m-2n-2p+1`, `2m`, `-1`, `0`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty linear form".into()));
        }
        let mut form = LinearForm::default();
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(Error::Parse(format!("expected sign in {s:?}")));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = bytes[start..i].iter().collect();
            let coef: Option<i64> = if digits.is_empty() {
                None
            } else {
                Some(digits.parse().map_err(|_| Error::Parse(format!("bad integer in {s:?}")))?)
            };
            match bytes.get(i) {
                Some(v) if PARAM_NAMES.contains(v) => {
                    let idx = PARAM_NAMES.iter().position(|c| c == v).unwrap();
                    form.coeffs[idx] += sign * coef.unwrap_or(1);
                    i += 1;
                }
                Some('+') | Some('-') | None => match coef {
                    Some(c) => form.constant += sign * c,
                    None => return Err(Error::Parse(format!("dangling sign in {s:?}"))),
                },
                Some(other) => {
                    return Err(Error::Parse(format!("unexpected {other:?} in {s:?}")));
                }
            }
        }
        Ok(form)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["m-2n-2p+1", "m-n-p-q-1", "2m-2n-2p", "n+p", "0", "-1", "m"] {
            let f: LinearForm = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("m*n".parse::<LinearForm>().is_err());
        assert!("m-".parse::<LinearForm>().is_err());
    }

    #[test]
    fn evaluation() {
        let f = LinearForm::of("m-2n-2p+1");
        assert_eq!(f.eval(&[0, 0, 0]), 1);
        assert_eq!(f.eval(&[3, 1, 1]), 0);
        assert_eq!(f.arity(), 3);
    }

    #[test]
    fn proportionality() {
        assert_eq!(LinearForm::of("2m").param_ratio(&LinearForm::of("m")), Some((2, 1)));
        assert_eq!(LinearForm::of("2m+2").param_ratio(&LinearForm::of("m-1")), Some((2, 1)));
        assert_eq!(LinearForm::of("2m+n").param_ratio(&LinearForm::of("m")), None);
        assert_eq!(LinearForm::constant(2).param_ratio(&LinearForm::constant(3)), None);
    }

    #[test]
    fn k_rendering() {
        assert_eq!(LinearForm::of("2m+1").with_k(4), "4k+2m+1");
        assert_eq!(LinearForm::of("0").with_k(1), "k");
        assert_eq!(LinearForm::of("-1").with_k(1), "k-1");
    }
}
